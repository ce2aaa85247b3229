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

// The curve E0 in Tate normal form over K = Q(alpha),
// alpha^3 - alpha^2 - 82 alpha + 64 = 0.

#ifndef X13_SPORADIC_HPP
#define X13_SPORADIC_HPP

#include <json.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "x13/elliptic.hpp"
#include "x13/modular_x13.hpp"
#include "x13/number_field.hpp"

namespace x13::sporadic {

inline QPoly field_polynomial() { return qpoly({64, -82, -1, 1}); }

struct SporadicData {
    std::shared_ptr<const NumberField> field;
    NumberFieldElement b;
    NumberFieldElement c;
    WeierstrassCurve<NumberFieldElement> curve;
};

/// b = (10 a^2 + 90 a - 1936) / 19773, c = (6 a^2 + 50 a - 208) / 1521.
inline SporadicData build() {
    auto k = NumberField::create(field_polynomial());
    auto b = k->element(Rational(-1936, 19773), Rational(90, 19773), Rational(10, 19773));
    auto c = k->element(Rational(-208, 1521), Rational(50, 1521), Rational(6, 1521));
    auto e = tate_curve(b, c);
    return {k, b, c, e};
}

struct Assertion {
    std::string id;
    bool passed = false;
    nlohmann::json details;
};

/// The five checks on K and E0, in order.
inline std::vector<Assertion> verify_sporadic() {
    std::vector<Assertion> out;
    const QPoly m = field_polynomial();

    {
        auto roots = rational_roots(m);
        out.push_back({"minpoly-irreducible", roots.empty(), {{"rational_roots", roots.size()}}});
    }
    {
        Rational disc = discriminant_cubic(m, Rational());
        Rational ratio = disc / Rational(247 * 247);
        bool ok = disc == Rational(1482 * 1482) && rat_is_square(ratio).is_square;
        out.push_back({"minpoly-discriminant",
                       ok,
                       {{"discriminant", disc.to_string()},
                        {"ratio_to_247_squared", ratio.to_string()},
                        {"ratio_is_square", rat_is_square(ratio).is_square}}});
    }

    std::optional<SporadicData> data;
    try {
        data.emplace(build());
        out.push_back({"curve-nonsingular", true, {{"discriminant", to_json(data->curve.discriminant())}}});
    } catch (const SingularCurve&) {
        out.push_back({"curve-nonsingular", false, {}});
        return out;
    }

    const auto& e = data->curve;
    const auto k = data->field;
    const auto origin = CurvePoint<NumberFieldElement>::affine(k->element(0), k->element(0));
    {
        nlohmann::json details;
        bool ok = false;
        try {
            long n = point_order(e, origin, 20);
            details["order"] = n;
            // Direct cross-check: 13 P = O and k P != O for 1 <= k < 13.
            bool direct = scalar_mul(e, 13, origin).is_infinity();
            for (long i = 1; i < 13 && direct; ++i) direct = !scalar_mul(e, i, origin).is_infinity();
            details["scalar_check"] = direct;
            ok = n == 13 && direct;
        } catch (const OrderBoundExceeded& ex) {
            details["error"] = ex.what();
        }
        out.push_back({"origin-order-13", ok, details});
    }
    {
        const auto& j = e.j_invariant();
        out.push_back({"j-not-rational", !is_rational(j), {{"j", to_json(j)}}});
    }
    return out;
}

struct FingerprintEvidence {
    QPoly fiber_cubic;         // monic integral form of the y = -4/13 fiber cubic
    Rational fiber_discriminant;
    bool fiber_disc_square = false;
    bool field_disc_square = false;
    std::uint32_t bound = 0;
    std::size_t compared_primes = 0;
    std::vector<std::uint32_t> disagreements;

    bool agrees() const { return disagreements.empty() && fiber_disc_square && field_disc_square; }

    nlohmann::json to_json() const {
        return {{"fiber_cubic", x13::to_json(fiber_cubic)},
                {"fiber_discriminant", fiber_discriminant.to_string()},
                {"fiber_disc_square", fiber_disc_square},
                {"field_disc_square", field_disc_square},
                {"bound", bound},
                {"compared_primes", compared_primes},
                {"disagreements", disagreements},
                {"note", "agreement of splitting behaviour is evidence for equal fields, not a proof"}};
    }
};

/// Primes where both maps are defined and the root counts differ.
inline std::vector<std::uint32_t> fingerprint_disagreements(const QPoly& f, const QPoly& g, std::uint32_t bound,
                                                            std::size_t* compared = nullptr) {
    auto a = splitting_fingerprint(f, bound);
    auto b = splitting_fingerprint(g, bound);
    std::vector<std::uint32_t> out;
    std::size_t n = 0;
    for (const auto& [p, count] : a) {
        auto it = b.find(p);
        if (it == b.end()) continue;
        ++n;
        if (it->second != count) out.push_back(p);
    }
    if (compared) *compared = n;
    return out;
}

/// Compares the splitting of the y = -4/13 fiber cubic with that of the field polynomial.
/// Throws std::logic_error if the fiber cubic has a rational root.
inline FingerprintEvidence fiber_field_evidence(std::uint32_t bound) {
    if (bound < 50) throw std::invalid_argument("fingerprint bound must be >= 50");
    FingerprintEvidence ev;
    ev.bound = bound;
    const QPoly raw = fiber_cubic(FiberMap::Y, Rational(-4, 13));
    if (raw.degree() != 3 || !rational_roots(raw).empty())
        throw std::logic_error("fiber cubic over y = -4/13 is reducible");
    ev.fiber_cubic = monic_integral_cubic(raw);
    ev.fiber_discriminant = discriminant(ev.fiber_cubic);
    ev.fiber_disc_square = rat_is_square(ev.fiber_discriminant).is_square;
    ev.field_disc_square = rat_is_square(discriminant(field_polynomial())).is_square;
    ev.disagreements = fingerprint_disagreements(ev.fiber_cubic, field_polynomial(), bound, &ev.compared_primes);
    return ev;
}

}  // namespace x13::sporadic

#endif  // X13_SPORADIC_HPP
