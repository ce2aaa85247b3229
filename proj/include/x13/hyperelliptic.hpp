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

// Hyperelliptic models v^2 + h(u) v = f(u) over Q, with a second chart at
// infinity U = 1/u, V = v / u^(g+1):
//
//   V^2 + U^(g+1) h(1/U) V = U^(2g+2) f(1/U).
//
// The points at infinity are the solutions with U = 0.

#ifndef X13_HYPERELLIPTIC_HPP
#define X13_HYPERELLIPTIC_HPP

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "x13/finite_field.hpp"
#include "x13/qpoly.hpp"

namespace x13 {

class SingularModel : public std::domain_error {
   public:
    explicit SingularModel(const std::string& what) : std::domain_error(what) {}
};

class HyperellipticModel {
   public:
    /// Validates that h^2 + 4f is nonzero and squarefree over Q.
    HyperellipticModel(QPoly f, QPoly h = {}) : f_(std::move(f)), h_(std::move(h)) {
        QPoly disc = h_ * h_ + f_ * Rational(4);
        if (disc.is_zero() || !is_squarefree(disc)) throw SingularModel("h^2 + 4f is not squarefree");
        if (disc.degree() < 3) throw SingularModel("h^2 + 4f has degree below 3; not a curve of positive genus");
        genus_ = (disc.degree() - 1) / 2;
        if (h_.degree() > genus_ + 1 || f_.degree() > 2 * genus_ + 2)
            throw SingularModel("model degrees exceed the weighted bounds for its genus");
    }

    const QPoly& f() const { return f_; }
    const QPoly& h() const { return h_; }
    int genus() const { return genus_; }
    int weight() const { return genus_ + 1; }
    QPoly discriminant_polynomial() const { return h_ * h_ + f_ * Rational(4); }

    /// v^2 + h(u) v - f(u).
    Rational equation(const Rational& u, const Rational& v) const { return v * v + h_(u) * v - f_(u); }

    static HyperellipticModel from_json(const nlohmann::json& j) {
        QPoly f = qpoly_from_json(j.at("f"));
        QPoly h = j.contains("h") ? qpoly_from_json(j.at("h")) : QPoly{};
        return {std::move(f), std::move(h)};
    }
    nlohmann::json to_json() const { return {{"f", x13::to_json(f_)}, {"h", x13::to_json(h_)}}; }

   private:
    QPoly f_;
    QPoly h_;
    int genus_ = 0;
};

inline int genus(const HyperellipticModel& m) { return m.genus(); }

/// Chart equation V^2 + h_tilde(U) V = f_tilde(U).
struct InfinityChart {
    QPoly f_tilde;
    QPoly h_tilde;
    int weight = 0;

    Rational equation(const Rational& U, const Rational& V) const { return V * V + h_tilde(U) * V - f_tilde(U); }
    /// Coefficients of the U = 0 fiber V^2 + h0 V - f0 = 0.
    Rational h0() const { return h_tilde.coeff(0, {}); }
    Rational f0() const { return f_tilde.coeff(0, {}); }
};

inline InfinityChart infinity_chart(const HyperellipticModel& m) {
    const auto w = static_cast<std::size_t>(m.weight());
    return {m.f().reversed(2 * w), m.h().reversed(w), m.weight()};
}

enum class Chart { Affine, Infinity };

/// A rational point in either chart. For Chart::Infinity, u is U = 0 and v is V.
struct ModelPoint {
    Chart chart = Chart::Affine;
    Rational u;
    Rational v;

    static ModelPoint affine(Rational u, Rational v) { return {Chart::Affine, std::move(u), std::move(v)}; }
    static ModelPoint at_infinity(Rational V) { return {Chart::Infinity, Rational(), std::move(V)}; }

    friend bool operator==(const ModelPoint&, const ModelPoint&) = default;
    friend auto operator<=>(const ModelPoint& a, const ModelPoint& b) {
        if (a.chart != b.chart) return a.chart == Chart::Infinity ? std::strong_ordering::less : std::strong_ordering::greater;
        if (auto c = a.u <=> b.u; c != 0) return c;
        return a.v <=> b.v;
    }

    nlohmann::json to_json() const {
        if (chart == Chart::Infinity) return {{"u", "inf"}, {"v", v.to_string()}, {"chart", "infinity"}};
        return {{"u", u.to_string()}, {"v", v.to_string()}, {"chart", "affine"}};
    }
};

inline bool lies_on(const HyperellipticModel& m, const ModelPoint& p) {
    if (p.chart == Chart::Affine) return m.equation(p.u, p.v).is_zero();
    return p.u.is_zero() && infinity_chart(m).equation(p.u, p.v).is_zero();
}

namespace detail {

/// Rational solutions V of V^2 + b V - c = 0, ascending.
inline std::vector<Rational> solve_monic_quadratic(const Rational& b, const Rational& c) {
    const Rational disc = b * b + c * Rational(4);
    auto sq = rat_is_square(disc);
    if (!sq.is_square) return {};
    const Rational half(1, 2);
    if (sq.root->is_zero()) return {-b * half};
    return {(-b - *sq.root) * half, (-b + *sq.root) * half};
}

}  // namespace detail

/// Points at infinity with rational coordinates, ascending in V.
inline std::vector<ModelPoint> rational_points_at_infinity(const HyperellipticModel& m) {
    const auto chart = infinity_chart(m);
    std::vector<ModelPoint> out;
    for (auto& V : detail::solve_monic_quadratic(chart.h0(), chart.f0())) out.push_back(ModelPoint::at_infinity(V));
    return out;
}

/// Rational points on the fiber over one u, ascending in v.
inline std::vector<ModelPoint> rational_points_over(const HyperellipticModel& m, const Rational& u) {
    std::vector<ModelPoint> out;
    for (auto& v : detail::solve_monic_quadratic(m.h()(u), m.f()(u))) out.push_back(ModelPoint::affine(u, v));
    return out;
}

/**
 * All rational points whose u-coordinate has height <= `height`, plus the
 * rational points at infinity. Infinity points come first, then affine points
 * in enumeration order (denominator, then numerator) with v ascending.
 */
inline std::vector<ModelPoint> search_rational_points(const HyperellipticModel& m, std::int64_t height) {
    std::vector<ModelPoint> out = rational_points_at_infinity(m);
    RationalEnumerator e(height);
    while (auto u = e.next()) {
        auto pts = rational_points_over(m, *u);
        out.insert(out.end(), pts.begin(), pts.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reduction mod p.

/// v^2 + h v = f with coefficients reduced into a finite field (PrimeField or QuadraticExtension).
template <class FieldDesc>
struct ReducedModel {
    using E = typename FieldDesc::element_type;
    Polynomial<E> f, h;
    Polynomial<E> f_inf, h_inf;  // infinity chart

    ReducedModel(const HyperellipticModel& m, const FieldDesc& k) {
        auto red = [&](const Rational& c) { return k.from_rational(c); };
        f = m.f().map(red);
        h = m.h().map(red);
        auto chart = infinity_chart(m);
        f_inf = chart.f_tilde.map(red);
        h_inf = chart.h_tilde.map(red);
    }
};

/// #C(k) for the reduction of the two-chart model, by exhaustive enumeration.
/// Throws BadReduction when a coefficient denominator is divisible by char(k).
template <class FieldDesc>
std::uint64_t count_points(const HyperellipticModel& m, const FieldDesc& k) {
    const ReducedModel<FieldDesc> r(m, k);
    const auto elems = k.elements();
    std::uint64_t n = 0;
    for (const auto& u : elems) {
        const auto hu = r.h(u);
        const auto fu = r.f(u);
        for (const auto& v : elems)
            if ((v * v + hu * v - fu).is_zero()) ++n;
    }
    const auto zero = k.zero();
    const auto h0 = r.h_inf(zero);
    const auto f0 = r.f_inf(zero);
    for (const auto& V : elems)
        if ((V * V + h0 * V - f0).is_zero()) ++n;
    return n;
}

inline std::uint64_t count_points_fp(const HyperellipticModel& m, std::uint64_t p) {
    return count_points(m, PrimeField(p));
}
inline std::uint64_t count_points_fp2(const HyperellipticModel& m, std::uint64_t p) {
    return count_points(m, QuadraticExtension(p));
}

/**
 * Whether the reduction mod p is smooth over the algebraic closure, in both charts.
 *
 * Odd p: singular points correspond to repeated roots of D = h^2 + 4f, and the
 * infinity chart is singular iff deg D <= 2g after reduction.
 * p = 2: F_v = h, so singular points sit over roots of h where h'^2 f = f'^2;
 * affine smoothness is gcd(h, h'^2 f - f'^2) = 1, and U = 0 is checked directly.
 */
inline bool is_smooth_mod_p(const HyperellipticModel& m, std::uint64_t p) {
    const PrimeField k(p);
    const ReducedModel<PrimeField> r(m, k);
    if (p != 2) {
        const Polynomial<Fp> d = r.h * r.h + r.f * k.element(4);
        if (d.is_zero() || !is_squarefree(d)) return false;
        return d.degree() >= 2 * m.genus() + 1;
    }
    const Polynomial<Fp> hd = r.h.derivative(), fd = r.f.derivative();
    const Polynomial<Fp> test = hd * hd * r.f - fd * fd;
    const auto g = poly_gcd(r.h, test);
    if (g.is_zero() || g.degree() > 0) return false;
    const Fp zero = k.zero();
    const Fp h0 = r.h_inf(zero);
    if (!h0.is_zero()) return true;
    // In characteristic 2 the U = 0 point has V = sqrt(f0) = f0.
    const Fp V = r.f_inf(zero);
    const Fp dh = r.h_inf.derivative()(zero), df = r.f_inf.derivative()(zero);
    return !(dh * V - df).is_zero();
}

/// Raised for a prime where the model does not reduce to a smooth curve.
class BadPrime : public std::invalid_argument {
   public:
    explicit BadPrime(const std::string& what) : std::invalid_argument(what) {}
};

struct JacobianCount {
    std::uint64_t p = 0;
    std::uint64_t n1 = 0;  // #C(F_p)
    std::uint64_t n2 = 0;  // #C(F_p^2)
    std::int64_t s1 = 0;
    std::int64_t s2 = 0;
    std::int64_t order = 0;  // L(1)
};

/**
 * #J(F_p) for a genus-2 model with good reduction at p, from
 * L(T) = 1 - s1 T + s2 T^2 - p s1 T^3 + p^2 T^4 where
 * s1 = p + 1 - N1 and s2 = (s1^2 - (p^2 + 1 - N2)) / 2.
 */
inline JacobianCount jacobian_order_fp(const HyperellipticModel& m, std::uint64_t p) {
    if (m.genus() != 2) throw std::invalid_argument("jacobian_order_fp needs genus 2");
    try {
        if (!is_smooth_mod_p(m, p)) throw BadPrime("model has bad reduction at " + std::to_string(p));
    } catch (const BadReduction& e) {
        throw BadPrime(e.what());
    }
    JacobianCount c;
    c.p = p;
    c.n1 = count_points_fp(m, p);
    c.n2 = count_points_fp2(m, p);
    const auto P = static_cast<std::int64_t>(p);
    c.s1 = P + 1 - static_cast<std::int64_t>(c.n1);
    const std::int64_t twice = c.s1 * c.s1 - (P * P + 1 - static_cast<std::int64_t>(c.n2));
    if (twice % 2 != 0) throw std::logic_error("odd L-polynomial middle coefficient; point counts inconsistent");
    c.s2 = twice / 2;
    c.order = 1 - c.s1 + c.s2 - P * c.s1 + P * P;
    return c;
}

// ---------------------------------------------------------------------------
// Local sieve cross-check for point searches.

struct SieveResidues {
    std::uint32_t p = 0;
    /// Residues r in P^1(F_p) (index p means infinity) where D(r) is a square in F_p.
    std::vector<bool> allowed;
    /// Residues hit by the reductions of known rational points.
    std::set<std::uint32_t> covered;
};

struct SieveCertificate {
    std::int64_t height = 0;
    std::vector<SieveResidues> residues;
    std::uint64_t candidates = 0;
    std::uint64_t survivors = 0;
    std::vector<ModelPoint> points;  // points found among the survivors
    bool agrees_with_search = false;
    bool found_points_locally_allowed = false;
};

namespace detail {

/// Evaluates the weight-(2g+2) binary form of D = h^2 + 4f at (a : b) mod p.
inline Fp binary_form_mod_p(const std::vector<Fp>& d, std::size_t weight2, const Fp& a, const Fp& b) {
    Fp acc = a.zero();
    Fp bpow = a.one();
    std::vector<Fp> apow(weight2 + 1, a.one());
    for (std::size_t i = 1; i <= weight2; ++i) apow[i] = apow[i - 1] * a;
    for (std::size_t i = weight2 + 1; i-- > 0;) {
        // term d_i a^i b^(w2 - i); iterate i downward so b's power grows
        if (i < d.size()) acc = acc + d[i] * apow[i] * bpow;
        bpow = bpow * b;
    }
    return acc;
}

inline bool is_square_fp(const Fp& x) {
    if (x.is_zero() || x.modulus() == 2) return true;
    // Euler's criterion.
    Fp r = power(x, (x.modulus() - 1) / 2, x.one());
    return r == x.one();
}

/// Residue of u = n/d in P^1(F_p), with p encoding infinity.
inline std::uint32_t projective_residue(const Rational& u, std::uint32_t p) {
    const BigInt pz = p;
    BigInt d = u.den() % pz;
    if (sgn(d) == 0) return p;
    return reduce_mod_p(u, p).value();
}

}  // namespace detail

/**
 * Re-runs the height search through a local filter: u = a/b survives at p when
 * the binary form of h^2 + 4f at (a : b) is a square mod p, a condition every
 * rational point must meet. Survivors are resolved exactly; the certificate
 * records whether the sieved route reproduces the direct search and which
 * residue classes are covered by the known points.
 */
inline SieveCertificate sieve_certificate(const HyperellipticModel& m, std::int64_t height,
                                          const std::vector<std::uint32_t>& primes,
                                          const std::vector<ModelPoint>& known) {
    SieveCertificate cert;
    cert.height = height;
    const QPoly D = m.discriminant_polynomial();
    const auto w2 = static_cast<std::size_t>(2 * m.weight());
    // Scale by a square so square classes mod p are unchanged.
    BigInt l = 1;
    for (const auto& c : D.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<BigInt> integral;
    for (const auto& c : D.coeffs()) integral.push_back(BigInt(c.num() * (l * l / c.den())));
    for (std::uint32_t p : primes) {
        const PrimeField k(p);
        SieveResidues res;
        res.p = p;
        std::vector<Fp> d;
        for (const auto& c : integral) d.push_back(k.from_rational(Rational(c)));
        res.allowed.assign(p + 1, false);
        for (std::uint32_t r = 0; r <= p; ++r) {
            Fp a = r == p ? k.one() : k.element(r);
            Fp b = r == p ? k.zero() : k.one();
            res.allowed[r] = detail::is_square_fp(detail::binary_form_mod_p(d, w2, a, b));
        }
        for (const auto& pt : known) {
            if (pt.chart == Chart::Infinity)
                res.covered.insert(p);
            else
                res.covered.insert(detail::projective_residue(pt.u, p));
        }
        cert.residues.push_back(std::move(res));
    }

    cert.found_points_locally_allowed = true;
    for (const auto& res : cert.residues)
        for (auto r : res.covered)
            if (!res.allowed[r]) cert.found_points_locally_allowed = false;

    std::vector<ModelPoint> sieved = rational_points_at_infinity(m);
    RationalEnumerator e(height);
    while (auto u = e.next()) {
        ++cert.candidates;
        bool ok = true;
        for (const auto& res : cert.residues)
            if (!res.allowed[detail::projective_residue(*u, res.p)]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        ++cert.survivors;
        auto pts = rational_points_over(m, *u);
        sieved.insert(sieved.end(), pts.begin(), pts.end());
    }
    cert.points = sieved;
    cert.agrees_with_search = (sieved == search_rational_points(m, height));
    return cert;
}

}  // namespace x13

#endif  // X13_HYPERELLIPTIC_HPP
