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

// The genus-2 model y^2 + (x^3 + x^2 + 1) y = x^2 + x of X_1(13), its two
// degree-3 maps to the line (y and (y + 1)/x) and the discriminant loci of
// their fibers.

#ifndef X13_MODULAR_X13_HPP
#define X13_MODULAR_X13_HPP

#include <json.hpp>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "x13/hyperelliptic.hpp"
#include "x13/qpoly.hpp"

namespace x13 {

/// Polynomial in x whose coefficients are polynomials in the map parameter.
using BivariatePoly = Polynomial<QPoly>;

class IdentityFailure : public std::logic_error {
   public:
    explicit IdentityFailure(const std::string& what) : std::logic_error(what) {}
};

namespace x13model {

inline HyperellipticModel model() { return {qpoly({0, 1, 1}), qpoly({1, 0, 1, 1})}; }

/// The six rational points: the two points at infinity and four affine points.
inline std::vector<ModelPoint> rational_points() {
    return {ModelPoint::at_infinity(Rational(-1)), ModelPoint::at_infinity(Rational(0)),
            ModelPoint::affine(Rational(-1), Rational(-1)), ModelPoint::affine(Rational(-1), Rational(0)),
            ModelPoint::affine(Rational(0), Rational(-1)), ModelPoint::affine(Rational(0), Rational(0))};
}

/// d1(y) = (y + 1)(-27y^5 - 31y^4 - 6y^3 + 6y^2 + 5y + 1).
inline QPoly d1_quintic() { return qpoly({1, 5, 6, -6, -31, -27}); }
inline QPoly d1() { return qpoly({1, 1}) * d1_quintic(); }

/// d2(t) = t (t + 1)^3 (-4t^5 + 5t^4 - t^3 - 25t^2 - 23t - 4).
inline QPoly d2_quintic() { return qpoly({-4, -23, -25, -1, 5, -4}); }
inline QPoly d2() { return qpoly({0, 1}) * qpoly({1, 1}).pow(3) * d2_quintic(); }

/// D1: s^2 = d1(y), genus 2.
inline HyperellipticModel d1_curve() { return {d1()}; }
/// D2: s^2 = d2(t) / (t + 1)^2 = t (t + 1) (-4t^5 + ...), genus 3.
inline HyperellipticModel d2_curve() { return {qpoly({0, 1}) * qpoly({1, 1}) * d2_quintic()}; }
/// Minimal model v^2 + (u^3 + u^2) v = u^7 - 8u^5 - 13u^4 - 7u^3 - 2u^2 - u of D2.
inline HyperellipticModel d2_minimal() { return {qpoly({0, -1, -2, -7, -13, -8, 0, 1}), qpoly({0, 0, 1, 1})}; }

}  // namespace x13model

enum class FiberMap { Y, T };

inline std::string to_string(FiberMap m) { return m == FiberMap::Y ? "y" : "t"; }
inline FiberMap parse_fiber_map(const std::string& s) {
    if (s == "y") return FiberMap::Y;
    if (s == "t") return FiberMap::T;
    throw std::invalid_argument("unknown fiber map '" + s + "' (expected y or t)");
}

/**
 * Fiber polynomial in x with coefficients in Q[s], s the map parameter.
 *
 * Y map: y = s gives s x^3 + (s - 1) x^2 - x + (s^2 + s).
 * T map: y = s x - 1 gives x (s x^3 + (s - 1) x^2 + (s^2 - 2) x - (s + 1)); the
 * factor x is the point (0, -1), which lies on every line y = s x - 1 and is
 * dropped, leaving the cubic.
 */
inline BivariatePoly generic_fiber_cubic(FiberMap map) {
    if (map == FiberMap::Y)
        return BivariatePoly({qpoly({0, 1, 1}), qpoly({-1}), qpoly({-1, 1}), qpoly({0, 1})});
    return BivariatePoly({qpoly({-1, -1}), qpoly({-2, 0, 1}), qpoly({-1, 1}), qpoly({0, 1})});
}

/// The T-map substitution before removing the base point x = 0: a quartic in x.
inline BivariatePoly generic_fiber_quartic_t() { return generic_fiber_cubic(FiberMap::T) * BivariatePoly({QPoly{}, qpoly({1})}); }

/// Fiber polynomial at a rational parameter, scaled to integer coefficients.
inline QPoly fiber_cubic(FiberMap map, const Rational& value) {
    auto p = generic_fiber_cubic(map).map([&](const QPoly& c) { return c(value); });
    if (p.is_zero()) return p;
    auto ints = primitive_integer_coeffs(p);
    std::vector<Rational> v;
    // Keep the orientation of the evaluated polynomial.
    const bool flip = (p.leading().sign() < 0);
    for (auto& c : ints) v.emplace_back(flip ? BigInt(-c) : c);
    return QPoly(std::move(v));
}

enum class FiberKind { Ramified, SplitRational, CyclicCubic, NonCyclicCubic, DegenerateDegreeDrop };

inline std::string to_string(FiberKind k) {
    switch (k) {
        case FiberKind::Ramified: return "Ramified";
        case FiberKind::SplitRational: return "SplitRational";
        case FiberKind::CyclicCubic: return "CyclicCubic";
        case FiberKind::NonCyclicCubic: return "NonCyclicCubic";
        case FiberKind::DegenerateDegreeDrop: return "DegenerateDegreeDrop";
    }
    return "?";
}

struct FiberClassification {
    FiberMap map = FiberMap::Y;
    Rational value;
    FiberKind kind = FiberKind::NonCyclicCubic;
    QPoly polynomial;
    Rational discriminant;  // closed cubic formula, a = 0 allowed
    bool discriminant_is_square = false;
    std::set<Rational> rational_roots;
    bool infinity_point = false;  // degree dropped: one fiber point lies at infinity

    nlohmann::json to_json() const {
        auto roots = nlohmann::json::array();
        for (const auto& r : rational_roots) roots.push_back(r.to_string());
        return {{"map", to_string(map)},
                {"value", value.to_string()},
                {"kind", to_string(kind)},
                {"polynomial", x13::to_json(polynomial)},
                {"discriminant", discriminant.to_string()},
                {"discriminant_is_square", discriminant_is_square},
                {"rational_roots", roots},
                {"infinity_point", infinity_point}};
    }
};

/**
 * Classifies the fiber over a rational parameter. Precedence: a vanishing
 * discriminant (which also catches ramification at infinity after a degree
 * drop) is Ramified; then a degree drop; then a rational root; then the
 * squareness of the discriminant separates cyclic from S3 fibers.
 */
inline FiberClassification classify_fiber(FiberMap map, const Rational& value) {
    FiberClassification c;
    c.map = map;
    c.value = value;
    c.polynomial = fiber_cubic(map, value);
    c.discriminant = discriminant_cubic(c.polynomial, Rational());
    c.discriminant_is_square = rat_is_square(c.discriminant).is_square;
    c.rational_roots = c.polynomial.degree() >= 1 ? rational_roots(c.polynomial) : std::set<Rational>{};
    c.infinity_point = c.polynomial.degree() < 3;
    if (c.discriminant.is_zero())
        c.kind = FiberKind::Ramified;
    else if (c.infinity_point)
        c.kind = FiberKind::DegenerateDegreeDrop;
    else if (!c.rational_roots.empty())
        c.kind = FiberKind::SplitRational;
    else
        c.kind = c.discriminant_is_square ? FiberKind::CyclicCubic : FiberKind::NonCyclicCubic;
    return c;
}

struct DiscIdentityReport {
    FiberMap map = FiberMap::Y;
    QPoly discriminant;  // disc_x of the fiber cubic, in Q[s]
    QPoly stored;        // d1 or d2
    RationalFunction quotient{QPoly::constant(Rational(1)), QPoly::constant(Rational(1))};  // discriminant / stored
    RationalFunction quotient_sqrt{QPoly::constant(Rational(1)), QPoly::constant(Rational(1))};

    nlohmann::json to_json() const {
        return {{"map", to_string(map)},
                {"discriminant", x13::to_json(discriminant)},
                {"stored", x13::to_json(stored)},
                {"quotient", {{"numerator", x13::to_json(quotient.numerator())},
                              {"denominator", x13::to_json(quotient.denominator())}}},
                {"quotient_sqrt", {{"numerator", x13::to_json(quotient_sqrt.numerator())},
                                   {"denominator", x13::to_json(quotient_sqrt.denominator())}}}};
    }
};

/// disc_x of the fiber cubic equals d1 (Y map) or d2 (T map) times a square in Q(s).
/// Throws IdentityFailure otherwise.
inline DiscIdentityReport verify_disc_identity(FiberMap map) {
    DiscIdentityReport r;
    r.map = map;
    r.discriminant = discriminant_cubic(generic_fiber_cubic(map), QPoly{});
    r.stored = map == FiberMap::Y ? x13model::d1() : x13model::d2();
    if (r.discriminant.is_zero()) throw IdentityFailure("fiber discriminant vanishes identically");
    r.quotient = RationalFunction(r.discriminant, r.stored);
    auto root = r.quotient.sqrt();
    if (!root)
        throw IdentityFailure("disc_x / d" + std::string(map == FiberMap::Y ? "1" : "2") +
                              " is not a square in the function field");
    r.quotient_sqrt = *root;
    return r;
}

struct NineteenRow {
    JacobianCount count;
    bool divisible = false;
};

/// #J(F_p) for the X_1(13) model and whether 19 divides it. Throws BadPrime for
/// 13 or any prime of bad reduction.
inline std::vector<NineteenRow> nineteen_divisibility(const std::vector<std::uint64_t>& primes) {
    const auto m = x13model::model();
    std::vector<NineteenRow> out;
    for (auto p : primes) {
        if (p == 13) throw BadPrime("13 is the level; X_1(13) has bad reduction there");
        NineteenRow row;
        row.count = jacobian_order_fp(m, p);
        row.divisible = row.count.order % 19 == 0;
        out.push_back(row);
    }
    return out;
}

}  // namespace x13

#endif  // X13_MODULAR_X13_HPP
