/*
   Copyright 2026 The x13verify Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// The one-parameter family of curves over Q that acquire a point of order 13
// over the cyclic cubic field cut out by the w-cubic:
//
//   E_t: y^2 = x^3 - 27 A(t) x + 54 (t^2 + 1) B(t).

#ifndef X13_FAMILY_HPP
#define X13_FAMILY_HPP

#include <json.hpp>

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "x13/elliptic.hpp"
#include "x13/modular_x13.hpp"
#include "x13/number_field.hpp"

namespace x13::family {

inline QPoly denominator_quartic() { return qpoly({1, 1, 5, -1, 1}); }  // t^4 - t^3 + 5t^2 + t + 1
inline QPoly a_numerator() { return qpoly({1, 5, 7, 5, 0, -5, 7, -5, 1}); }
inline QPoly b_numerator() { return qpoly({1, 8, 25, 44, 40, -18, -40, 18, 40, -44, 25, -8, 1}); }
inline QPoly px_sextic() { return qpoly({1, 3, -8, -6, 4, -3, 1}); }  // t^6 - 3t^5 + 4t^4 - 6t^3 - 8t^2 + 3t + 1

/// w^3 + (-t^3 + t^2 - 3t + 1) w^2 + (-t^3 + 2t^2 - 2t) w + t^2, coefficients in Q[t].
inline BivariatePoly generic_w_cubic() {
    return BivariatePoly({qpoly({0, 0, 1}), qpoly({0, -2, 2, -1}), qpoly({1, -3, 1, -1}), qpoly({1})});
}

/// t^4 (t^4 - t^3 + 5t^2 + t + 1)^2.
inline QPoly expected_w_discriminant() { return qpoly({0, 0, 0, 0, 1}) * denominator_quartic().pow(2); }

inline Rational eval_a(const Rational& t) { return a_numerator()(t) / denominator_quartic()(t); }
inline Rational eval_b(const Rational& t) {
    Rational d = denominator_quartic()(t);
    return b_numerator()(t) / (d * d);
}

inline QPoly w_cubic(const Rational& t) {
    return generic_w_cubic().map([&](const QPoly& c) { return c(t); });
}

/// t_alt = -7/72 - 1/(36 t).
inline Rational alt_parameter(const Rational& t) {
    if (t.is_zero()) throw std::domain_error("alt_parameter undefined at t = 0");
    return Rational(-7, 72) - (Rational(36) * t).inverse();
}

struct FamilyInstance {
    Rational t;
    Rational A, B;
    WeierstrassCurve<Rational> curve;
    QPoly w_cubic;
    Rational w_discriminant;
    std::set<Rational> w_rational_roots;  // nonempty only for a split w-cubic
    std::shared_ptr<const NumberField> field;  // Q(w) when the w-cubic is irreducible
    std::optional<WeierstrassCurve<NumberFieldElement>> curve_over_field;
    std::optional<CurvePoint<NumberFieldElement>> point;

    bool split() const { return !w_rational_roots.empty(); }
};

/// Point coordinates for any w in a Q-algebra. The y-coordinate uses (t - 1) w + t;
/// the variant (t + 1) w - t does not satisfy the curve equation (see `printed_y`).
template <class W>
std::pair<W, W> point_coordinates(const Rational& t, const W& w) {
    const Rational dinv = denominator_quartic()(t).inverse();
    const W one = w.one();
    W x = (w * Rational(36) * t + one * (Rational(3) * px_sextic()(t))) * dinv;
    W y = (w * (t - Rational(1)) + one * t) * (Rational(108) * t * dinv);
    return {x, y};
}

inline std::pair<Rational, Rational> point_coordinates_rational(const Rational& t, const Rational& w) {
    const Rational dinv = denominator_quartic()(t).inverse();
    return {(Rational(36) * t * w + Rational(3) * px_sextic()(t)) * dinv,
            Rational(108) * t * ((t - Rational(1)) * w + t) * dinv};
}

/// 108 t ((t + 1) w - t) / (t^4 - t^3 + 5t^2 + t + 1), kept for comparison.
template <class W>
W printed_y(const Rational& t, const W& w) {
    const Rational dinv = denominator_quartic()(t).inverse();
    return (w * (t + Rational(1)) - w.one() * t) * (Rational(108) * t * dinv);
}

/// Throws std::domain_error for t = 0.
inline FamilyInstance build_family_instance(const Rational& t) {
    if (t.is_zero()) throw std::domain_error("family parameter t must be nonzero");
    const Rational A = eval_a(t), B = eval_b(t);
    FamilyInstance inst{t,
                        A,
                        B,
                        WeierstrassCurve<Rational>(0, 0, 0, Rational(-27) * A, Rational(54) * (t * t + Rational(1)) * B),
                        w_cubic(t),
                        {},
                        {},
                        nullptr,
                        std::nullopt,
                        std::nullopt};
    inst.w_discriminant = discriminant_cubic(inst.w_cubic, Rational());
    inst.w_rational_roots = rational_roots(inst.w_cubic);
    if (inst.split()) return inst;

    inst.field = NumberField::create(inst.w_cubic);
    auto lift = [&](const Rational& c) { return inst.field->element(c); };
    const auto& e = inst.curve;
    inst.curve_over_field.emplace(lift(e.a1()), lift(e.a2()), lift(e.a3()), lift(e.a4()), lift(e.a6()));
    auto [x, y] = point_coordinates(t, inst.field->generator());
    inst.point = CurvePoint<NumberFieldElement>::affine(std::move(x), std::move(y));
    return inst;
}

struct FamilyReport {
    Rational t;
    Rational A, B;
    Rational disc;
    bool disc_is_square = false;
    bool on_curve = false;
    std::optional<long> order;
    std::string status;  // "pass", "fail" or "split"
    std::vector<std::string> failures;

    bool passed() const { return status == "pass"; }

    nlohmann::json to_json() const {
        nlohmann::json j = {{"t", t.to_string()},
                            {"A", A.to_string()},
                            {"B", B.to_string()},
                            {"disc", disc.to_string()},
                            {"disc_is_square", disc_is_square},
                            {"order", order ? nlohmann::json(*order) : nlohmann::json(nullptr)},
                            {"status", status}};
        if (!failures.empty()) j["failures"] = failures;
        return j;
    }
};

/// Checks that P_t lies on E_t over Q(w), has order exactly 13, and that the
/// w-discriminant is a nonzero square. Split w-cubics are reported, not verified.
inline FamilyReport verify_family_instance(const FamilyInstance& inst) {
    FamilyReport r;
    r.t = inst.t;
    r.A = inst.A;
    r.B = inst.B;
    r.disc = inst.w_discriminant;
    r.disc_is_square = !r.disc.is_zero() && rat_is_square(r.disc).is_square;
    if (!r.disc_is_square) r.failures.push_back("w-discriminant is not a nonzero square");

    if (inst.split()) {
        // Evaluate P_t at each rational root: each component is a point over Q.
        r.status = "split";
        for (const auto& w0 : inst.w_rational_roots) {
            auto [x, y] = point_coordinates_rational(inst.t, w0);
            auto p = CurvePoint<Rational>::affine(x, y);
            if (!inst.curve.contains(p)) r.failures.push_back("split component point off the curve at w = " + w0.to_string());
        }
        return r;
    }

    const auto& e = *inst.curve_over_field;
    r.on_curve = e.contains(*inst.point);
    if (!r.on_curve) {
        r.failures.push_back("P_t does not satisfy the curve equation");
    } else {
        try {
            r.order = point_order(e, *inst.point, 20);
        } catch (const OrderBoundExceeded&) {
            r.failures.push_back("order of P_t exceeds 20");
        }
        if (r.order && *r.order != 13) r.failures.push_back("order of P_t is " + std::to_string(*r.order));
    }
    r.status = r.failures.empty() ? "pass" : "fail";
    return r;
}

struct WDiscIdentityReport {
    QPoly computed;
    QPoly expected;
    bool equal = false;

    nlohmann::json to_json() const {
        return {{"computed", x13::to_json(computed)}, {"expected", x13::to_json(expected)}, {"equal", equal}};
    }
};

/// disc_w of the w-cubic over Q[t] against t^4 (t^4 - t^3 + 5t^2 + t + 1)^2; throws IdentityFailure on mismatch.
inline WDiscIdentityReport verify_w_disc_identity() {
    WDiscIdentityReport r;
    r.computed = discriminant_cubic(generic_w_cubic(), QPoly{});
    r.expected = expected_w_discriminant();
    r.equal = r.computed == r.expected;
    if (!r.equal) throw IdentityFailure("w-cubic discriminant differs from t^4 (t^4 - t^3 + 5t^2 + t + 1)^2");
    return r;
}

/// Reports for every nonzero t of height <= `height`.
inline std::vector<FamilyReport> family_sweep(std::int64_t height) {
    std::vector<FamilyReport> out;
    RationalEnumerator e(height);
    while (auto t = e.next()) {
        if (t->is_zero()) continue;
        out.push_back(verify_family_instance(build_family_instance(*t)));
    }
    return out;
}

}  // namespace x13::family

#endif  // X13_FAMILY_HPP
