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

#ifndef X13_NUMBER_FIELD_HPP
#define X13_NUMBER_FIELD_HPP

#include <json.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>

#include "x13/finite_field.hpp"
#include "x13/qpoly.hpp"

namespace x13 {

class NumberFieldElement;

/// Cubic field Q(theta) = Q[x]/(m) for a monic irreducible cubic m.
class NumberField : public std::enable_shared_from_this<NumberField> {
    struct Token {};

   public:
    NumberField(Token, QPoly minpoly) : minpoly_(std::move(minpoly)) {}

    static std::shared_ptr<const NumberField> create(QPoly minpoly) {
        if (minpoly.degree() != 3) throw std::invalid_argument("number field needs a cubic minimal polynomial");
        if (!minpoly.leading().is_one()) throw std::invalid_argument("minimal polynomial must be monic");
        if (!rational_roots(minpoly).empty())
            throw std::invalid_argument("minimal polynomial is reducible over Q (has a rational root)");
        return std::make_shared<const NumberField>(Token{}, std::move(minpoly));
    }

    const QPoly& minimal_polynomial() const { return minpoly_; }

    NumberFieldElement element(Rational c0, Rational c1 = {}, Rational c2 = {}) const;
    NumberFieldElement generator() const;
    NumberFieldElement from_polynomial(const QPoly& p) const;

   private:
    QPoly minpoly_;
};

/// Element c0 + c1*theta + c2*theta^2 of a cubic NumberField.
class NumberFieldElement {
   public:
    NumberFieldElement(std::array<Rational, 3> c, std::shared_ptr<const NumberField> field)
        : c_(std::move(c)), field_(std::move(field)) {}

    const std::array<Rational, 3>& coordinates() const { return c_; }
    const Rational& operator[](std::size_t i) const { return c_.at(i); }
    const std::shared_ptr<const NumberField>& field() const { return field_; }

    bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }
    bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero(); }

    NumberFieldElement zero() const { return {{}, field_}; }
    NumberFieldElement one() const { return {{Rational(1), {}, {}}, field_}; }
    NumberFieldElement from_int(long n) const { return {{Rational(n), {}, {}}, field_}; }
    NumberFieldElement from_rational(const Rational& r) const { return {{r, {}, {}}, field_}; }

    QPoly as_polynomial() const { return QPoly(std::vector<Rational>(c_.begin(), c_.end())); }

    NumberFieldElement inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero in number field");
        auto eg = poly_xgcd(as_polynomial(), field_->minimal_polynomial());
        if (eg.gcd.degree() != 0) throw std::domain_error("non-invertible element: minimal polynomial is reducible");
        return field_->from_polynomial(eg.s);
    }

    NumberFieldElement operator-() const { return {{-c_[0], -c_[1], -c_[2]}, field_}; }
    friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b) {
        check(a, b);
        return {{a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]}, a.field_};
    }
    friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b) {
        check(a, b);
        return {{a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]}, a.field_};
    }
    friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
        check(a, b);
        // Schoolbook product of degree <= 4, then theta^3 = -(m2 theta^2 + m1 theta + m0).
        std::array<Rational, 5> p;
        for (std::size_t i = 0; i < 3; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < 3; ++j) p[i + j] += a.c_[i] * b.c_[j];
        }
        const auto& m = a.field_->minimal_polynomial();
        for (std::size_t k = 4; k >= 3; --k) {
            if (p[k].is_zero()) continue;
            const Rational t = p[k];
            p[k] = Rational();
            for (std::size_t i = 0; i < 3; ++i) p[k - 3 + i] -= t * m[i];
        }
        return {{p[0], p[1], p[2]}, a.field_};
    }
    friend NumberFieldElement operator+(const NumberFieldElement& a, const Rational& r) {
        return {{a.c_[0] + r, a.c_[1], a.c_[2]}, a.field_};
    }
    friend NumberFieldElement operator*(const NumberFieldElement& a, const Rational& r) {
        return {{a.c_[0] * r, a.c_[1] * r, a.c_[2] * r}, a.field_};
    }
    friend NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b) {
        return a * b.inverse();
    }
    friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
        return a.c_ == b.c_ &&
               (a.field_ == b.field_ || a.field_->minimal_polynomial() == b.field_->minimal_polynomial());
    }

    friend std::ostream& operator<<(std::ostream& os, const NumberFieldElement& a) {
        return os << "(" << a.c_[0] << ") + (" << a.c_[1] << ")*a + (" << a.c_[2] << ")*a^2";
    }

   private:
    static void check(const NumberFieldElement& a, const NumberFieldElement& b) {
        if (a.field_ != b.field_ && a.field_->minimal_polynomial() != b.field_->minimal_polynomial())
            throw std::invalid_argument("mixing elements of different number fields");
    }

    std::array<Rational, 3> c_;
    std::shared_ptr<const NumberField> field_;
};

inline NumberFieldElement NumberField::element(Rational c0, Rational c1, Rational c2) const {
    return {{std::move(c0), std::move(c1), std::move(c2)}, shared_from_this()};
}

inline NumberFieldElement NumberField::generator() const { return element(Rational(), Rational(1)); }

inline NumberFieldElement NumberField::from_polynomial(const QPoly& p) const {
    QPoly r = p.degree() >= 3 ? poly_divmod(p, minpoly_).remainder : p;
    return element(r.coeff(0, {}), r.coeff(1, {}), r.coeff(2, {}));
}

inline bool is_rational(const NumberFieldElement& x) { return x.is_rational(); }

inline nlohmann::json to_json(const NumberFieldElement& x) {
    return {{"coordinates", {x[0].to_string(), x[1].to_string(), x[2].to_string()}},
            {"minimal_polynomial", to_json(x.field()->minimal_polynomial())}};
}

/// Cubic with integer coefficients defining the same field as p, made monic by
/// x -> x / lc: a x^3 + b x^2 + c x + d  ->  X^3 + b X^2 + a c X + a^2 d.
inline QPoly monic_integral_cubic(const QPoly& p) {
    if (p.degree() != 3) throw std::invalid_argument("monic_integral_cubic needs a cubic");
    auto c = primitive_integer_coeffs(p);
    const BigInt& a = c[3];
    return QPoly({Rational(BigInt(a * a * c[0])), Rational(BigInt(a * c[1])), Rational(c[2]), Rational(1)});
}

/**
 * Number of roots mod p of a cubic with no rational root, for every prime
 * p <= bound not dividing disc(f) or the denominators of f. Returned keys are
 * exactly the primes that were examined.
 */
inline std::map<std::uint32_t, int> splitting_fingerprint(const QPoly& f, std::uint32_t bound) {
    if (f.degree() != 3) throw std::invalid_argument("splitting_fingerprint needs a cubic");
    if (bound < 2) throw std::invalid_argument("fingerprint bound must be >= 2");
    if (!rational_roots(f).empty()) throw std::invalid_argument("splitting_fingerprint: cubic is reducible over Q");
    const Rational disc = discriminant(f);
    BigInt den_lcm = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    std::map<std::uint32_t, int> out;
    for (std::uint32_t p = 2; p <= bound; ++p) {
        if (!is_prime_u64(p)) continue;
        const BigInt pz = p;
        if (mpz_divisible_p(disc.num().get_mpz_t(), pz.get_mpz_t()) ||
            mpz_divisible_p(den_lcm.get_mpz_t(), pz.get_mpz_t()) ||
            mpz_divisible_p(f.leading().num().get_mpz_t(), pz.get_mpz_t()))
            continue;
        const PrimeField fp(p);
        auto fr = f.map([&](const Rational& c) { return fp.from_rational(c); });
        int count = 0;
        for (const auto& x : fp.elements())
            if (fr(x).is_zero()) ++count;
        out[p] = count;
    }
    return out;
}

}  // namespace x13

#endif  // X13_NUMBER_FIELD_HPP
