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

// Polynomials over Q: square roots, rational roots, rational functions,
// height enumeration and the JSON coefficient format.

#ifndef X13_QPOLY_HPP
#define X13_QPOLY_HPP

#include <json.hpp>

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "x13/polynomial.hpp"
#include "x13/rational.hpp"

namespace x13 {

using QPoly = Polynomial<Rational>;

inline QPoly qpoly(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return QPoly(std::move(v));
}

/// Primitive integer polynomial proportional to p, with positive leading coefficient.
inline std::vector<BigInt> primitive_integer_coeffs(const QPoly& p) {
    if (p.is_zero()) return {};
    BigInt l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<BigInt> out;
    out.reserve(p.size());
    BigInt g = 0;
    for (const auto& c : p.coeffs()) {
        BigInt v = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        out.push_back(v);
    }
    if (sgn(out.back()) < 0) g = -g;
    for (auto& v : out) v /= g;
    return out;
}

/// Square root over Q[x] with positive leading coefficient, if one exists.
inline std::optional<QPoly> poly_sqrt(const QPoly& p) {
    if (p.is_zero()) return QPoly{};
    if (p.degree() % 2 != 0) return std::nullopt;
    auto lead = rat_is_square(p.leading());
    if (!lead.is_square) return std::nullopt;
    const std::size_t m = static_cast<std::size_t>(p.degree() / 2);
    std::vector<Rational> r(m + 1);
    r[m] = *lead.root;
    const Rational two_lead = r[m] + r[m];
    // Coefficient of x^(m + i) in r^2 determines r[i], top down.
    for (std::size_t i = m; i-- > 0;) {
        Rational acc = p[m + i];
        for (std::size_t j = i + 1; j < m; ++j) {
            std::size_t k = m + i - j;
            if (k > m || k <= i) continue;
            acc -= r[j] * r[k];
        }
        r[i] = acc / two_lead;
    }
    QPoly cand(std::move(r));
    if (cand * cand != p) return std::nullopt;
    return cand;
}

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt n) {
    n = abs(n);
    if (sgn(n) == 0) throw std::domain_error("divisors of zero");
    std::vector<std::pair<BigInt, unsigned>> factors;
    for (BigInt d = 2; d * d <= n; ++d) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            unsigned e = 0;
            while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
                n /= d;
                ++e;
            }
            factors.emplace_back(d, e);
        }
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<BigInt> divs{1};
    for (const auto& [prime, e] : factors) {
        const std::size_t base = divs.size();
        BigInt pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace detail

/// All rational roots, by the rational-root theorem on the primitive integer form.
/// Divisor enumeration uses trial division, so coefficients should stay below ~10^24.
inline std::set<Rational> rational_roots(const QPoly& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
    std::vector<BigInt> c = primitive_integer_coeffs(p);
    std::set<Rational> roots;
    std::size_t low = 0;
    while (low < c.size() && sgn(c[low]) == 0) ++low;
    if (low > 0) roots.insert(Rational());
    if (c.size() - low <= 1) return roots;
    const auto nums = detail::positive_divisors(c[low]);
    const auto dens = detail::positive_divisors(c.back());
    std::vector<Rational> shifted;
    for (std::size_t i = low; i < c.size(); ++i) shifted.emplace_back(c[i]);
    const QPoly q(std::move(shifted));
    for (const auto& d : dens)
        for (const auto& n : nums)
            for (int s : {1, -1}) {
                Rational cand(s * n, d);
                if (q(cand).is_zero()) roots.insert(cand);
            }
    return roots;
}

/**
 * Every p/q in lowest terms with |p| <= height and 1 <= q <= height, each once,
 * ordered by q and then by p. Zero appears once (as 0/1).
 */
class RationalEnumerator {
   public:
    explicit RationalEnumerator(std::int64_t height, std::int64_t q_lo = 1, std::int64_t q_hi = -1)
        : height_(height), q_(q_lo), q_hi_(q_hi < 0 ? height : q_hi) {
        if (height < 1) throw std::invalid_argument("enumeration height must be >= 1");
        if (q_lo < 1) throw std::invalid_argument("denominator range must start at 1 or above");
        p_ = -height_;
    }

    std::optional<Rational> next() {
        while (q_ <= q_hi_) {
            while (p_ <= height_) {
                std::int64_t p = p_++;
                if (p == 0 && q_ != 1) continue;
                if (std::gcd(p < 0 ? -p : p, q_) != 1) continue;
                return Rational(p, q_);
            }
            ++q_;
            p_ = -height_;
        }
        return std::nullopt;
    }

   private:
    std::int64_t height_;
    std::int64_t q_;
    std::int64_t q_hi_;
    std::int64_t p_ = 0;
};

inline std::vector<Rational> enumerate_rationals(std::int64_t height) {
    std::vector<Rational> out;
    RationalEnumerator e(height);
    while (auto r = e.next()) out.push_back(*r);
    return out;
}

/// Reduced quotient of polynomials over Q with monic denominator.
class RationalFunction {
   public:
    RationalFunction(QPoly num, QPoly den) {
        if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
        auto g = poly_gcd(num, den);
        if (!num.is_zero()) {
            num = poly_divmod(num, g).quotient;
            den = poly_divmod(den, g).quotient;
        } else {
            den = QPoly::constant(Rational(1));
        }
        Rational lc = den.leading();
        num_ = num * lc.inverse();
        den_ = den * lc.inverse();
    }
    const QPoly& numerator() const { return num_; }
    const QPoly& denominator() const { return den_; }
    Rational operator()(const Rational& x) const { return num_(x) / den_(x); }
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    /// Square root in Q(x), if the function is a square there.
    std::optional<RationalFunction> sqrt() const {
        // den_ is monic, so num_/den_ is a square iff both are squares in Q[x].
        auto n = poly_sqrt(num_);
        auto d = poly_sqrt(den_);
        if (!n || !d) return std::nullopt;
        return RationalFunction(*n, *d);
    }

   private:
    QPoly num_;
    QPoly den_;
};

// JSON: arrays of "num/den" strings, constant term first.

inline nlohmann::json to_json(const Rational& r) { return r.to_string(); }

inline nlohmann::json to_json(const QPoly& p) {
    auto arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

inline Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw std::invalid_argument("rational must be a JSON string \"num/den\"");
    return Rational::parse(j.get<std::string>());
}

inline QPoly qpoly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
    std::vector<Rational> v;
    for (const auto& e : j) v.push_back(rational_from_json(e));
    return QPoly(std::move(v));
}

}  // namespace x13

#endif  // X13_QPOLY_HPP
