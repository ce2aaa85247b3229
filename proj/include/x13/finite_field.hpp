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

#ifndef X13_FINITE_FIELD_HPP
#define X13_FINITE_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "x13/polynomial.hpp"
#include "x13/rational.hpp"

namespace x13 {

/// Raised when a rational cannot be reduced mod p (p divides its denominator).
class BadReduction : public std::domain_error {
   public:
    explicit BadReduction(const std::string& what) : std::domain_error(what) {}
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline constexpr std::uint64_t kMaxFieldPrime = 1ULL << 31;

/// Element of F_p; carries its modulus so arithmetic needs no external context.
class Fp {
   public:
    Fp(std::uint32_t value, std::uint32_t p) : v_(value % p), p_(p) {}

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    Fp zero() const { return {0, p_}; }
    Fp one() const { return {1 % p_, p_}; }
    Fp from_int(long n) const {
        long r = n % static_cast<long>(p_);
        if (r < 0) r += p_;
        return {static_cast<std::uint32_t>(r), p_};
    }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
        // Extended Euclid on (v, p).
        std::int64_t r0 = p_, r1 = v_, s0 = 0, s1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t r2 = r0 - q * r1;
            r0 = r1;
            r1 = r2;
            std::int64_t s2 = s0 - q * s1;
            s0 = s1;
            s1 = s2;
        }
        if (r0 != 1) throw std::domain_error("non-invertible residue; modulus is not prime");
        std::int64_t inv = s0 % static_cast<std::int64_t>(p_);
        if (inv < 0) inv += p_;
        return {static_cast<std::uint32_t>(inv), p_};
    }

    Fp operator-() const { return {v_ == 0 ? 0 : p_ - v_, p_}; }
    friend Fp operator+(const Fp& a, const Fp& b) {
        check(a, b);
        std::uint64_t s = std::uint64_t{a.v_} + b.v_;
        return {static_cast<std::uint32_t>(s >= a.p_ ? s - a.p_ : s), a.p_};
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        check(a, b);
        return {a.v_ >= b.v_ ? a.v_ - b.v_ : a.p_ - (b.v_ - a.v_), a.p_};
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        check(a, b);
        return {static_cast<std::uint32_t>(std::uint64_t{a.v_} * b.v_ % a.p_), a.p_};
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

    friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

   private:
    static void check(const Fp& a, const Fp& b) {
        if (a.p_ != b.p_) throw std::invalid_argument("mixing elements of different prime fields");
    }
    std::uint32_t v_;
    std::uint32_t p_;
};

/// Image of x in F_p.
inline Fp reduce_mod_p(const Rational& x, std::uint32_t p) {
    const BigInt pz = p;
    BigInt d = x.den() % pz;
    if (sgn(d) == 0)
        throw BadReduction("denominator of " + x.to_display() + " divisible by " + std::to_string(p));
    BigInt n = x.num() % pz;
    if (sgn(n) < 0) n += pz;
    return Fp(static_cast<std::uint32_t>(n.get_ui()), p) / Fp(static_cast<std::uint32_t>(d.get_ui()), p);
}

/// The prime field F_p as a finite set with a reduction map from Q.
class PrimeField {
   public:
    using element_type = Fp;

    explicit PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
        if (p > kMaxFieldPrime || !is_prime_u64(p))
            throw std::invalid_argument(std::to_string(p) + " is not a prime <= 2^31");
    }
    std::uint32_t characteristic() const { return p_; }
    std::uint64_t order() const { return p_; }
    Fp zero() const { return {0, p_}; }
    Fp one() const { return {1, p_}; }
    Fp element(std::uint32_t v) const { return {v, p_}; }
    Fp from_rational(const Rational& x) const { return reduce_mod_p(x, p_); }
    std::vector<Fp> elements() const {
        std::vector<Fp> out;
        out.reserve(p_);
        for (std::uint32_t v = 0; v < p_; ++v) out.emplace_back(v, p_);
        return out;
    }

   private:
    std::uint32_t p_;
};

/**
 * Element c0 + c1*xi of F_p[xi]/(xi^2 + m1*xi + m0).
 *
 * The modulus coefficients travel with the element, as with Fp.
 */
class Fp2 {
   public:
    Fp2(Fp c0, Fp c1, Fp m0, Fp m1) : c0_(c0), c1_(c1), m0_(m0), m1_(m1) {}

    const Fp& c0() const { return c0_; }
    const Fp& c1() const { return c1_; }

    bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }
    Fp2 zero() const { return {c0_.zero(), c0_.zero(), m0_, m1_}; }
    Fp2 one() const { return {c0_.one(), c0_.zero(), m0_, m1_}; }
    Fp2 from_int(long n) const { return {c0_.from_int(n), c0_.zero(), m0_, m1_}; }

    /// Conjugate under xi -> -m1 - xi.
    Fp2 conjugate() const { return {c0_ - m1_ * c1_, -c1_, m0_, m1_}; }
    Fp norm() const {
        // c0^2 - m1*c0*c1 + m0*c1^2
        return c0_ * c0_ - m1_ * c0_ * c1_ + m0_ * c1_ * c1_;
    }

    Fp2 inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero in F_p^2");
        Fp n = norm();
        if (n.is_zero()) throw std::domain_error("zero divisor in F_p^2: modulus is reducible");
        Fp ni = n.inverse();
        Fp2 c = conjugate();
        return {c.c0_ * ni, c.c1_ * ni, m0_, m1_};
    }

    Fp2 operator-() const { return {-c0_, -c1_, m0_, m1_}; }
    friend Fp2 operator+(const Fp2& a, const Fp2& b) { return {a.c0_ + b.c0_, a.c1_ + b.c1_, a.m0_, a.m1_}; }
    friend Fp2 operator-(const Fp2& a, const Fp2& b) { return {a.c0_ - b.c0_, a.c1_ - b.c1_, a.m0_, a.m1_}; }
    friend Fp2 operator*(const Fp2& a, const Fp2& b) {
        // xi^2 = -m1*xi - m0
        Fp hi = a.c1_ * b.c1_;
        Fp lo = a.c0_ * b.c0_ - hi * a.m0_;
        Fp mid = a.c0_ * b.c1_ + a.c1_ * b.c0_ - hi * a.m1_;
        return {lo, mid, a.m0_, a.m1_};
    }
    friend Fp2 operator/(const Fp2& a, const Fp2& b) { return a * b.inverse(); }
    friend bool operator==(const Fp2& a, const Fp2& b) {
        return a.c0_ == b.c0_ && a.c1_ == b.c1_ && a.m0_ == b.m0_ && a.m1_ == b.m1_;
    }
    friend std::ostream& operator<<(std::ostream& os, const Fp2& a) {
        return os << a.c0_ << "+" << a.c1_ << "*xi";
    }

   private:
    Fp c0_, c1_;
    Fp m0_, m1_;
};

/// F_{p^2} = F_p[xi]/(xi^2 + m1*xi + m0) with a deterministic choice of modulus:
/// xi^2 + xi + 1 for p = 2, else xi^2 - n for the least quadratic non-residue n.
class QuadraticExtension {
   public:
    using element_type = Fp2;

    explicit QuadraticExtension(std::uint64_t p) : base_(p), m0_(0, base_.characteristic()), m1_(0, base_.characteristic()) {
        const std::uint32_t q = base_.characteristic();
        if (q == 2) {
            m0_ = Fp(1, 2);
            m1_ = Fp(1, 2);
        } else {
            for (std::uint32_t n = 2; n < q; ++n) {
                if (!is_square_mod(n, q)) {
                    m0_ = -Fp(n, q);
                    break;
                }
            }
        }
        for (const auto& x : base_.elements())
            if ((x * x + m1_ * x + m0_).is_zero()) throw std::logic_error("quadratic modulus has a root");
    }

    std::uint32_t characteristic() const { return base_.characteristic(); }
    std::uint64_t order() const { return std::uint64_t{characteristic()} * characteristic(); }
    const PrimeField& base() const { return base_; }
    /// Monic modulus as a polynomial over F_p, constant term first.
    Polynomial<Fp> modulus() const { return Polynomial<Fp>({m0_, m1_, m0_.one()}); }

    Fp2 zero() const { return {base_.zero(), base_.zero(), m0_, m1_}; }
    Fp2 one() const { return {base_.one(), base_.zero(), m0_, m1_}; }
    Fp2 generator() const { return {base_.zero(), base_.one(), m0_, m1_}; }
    Fp2 element(std::uint32_t c0, std::uint32_t c1) const {
        return {base_.element(c0), base_.element(c1), m0_, m1_};
    }
    Fp2 embed(const Fp& x) const { return {x, base_.zero(), m0_, m1_}; }
    Fp2 from_rational(const Rational& x) const { return embed(base_.from_rational(x)); }
    std::vector<Fp2> elements() const {
        std::vector<Fp2> out;
        out.reserve(order());
        for (std::uint32_t a = 0; a < characteristic(); ++a)
            for (std::uint32_t b = 0; b < characteristic(); ++b) out.push_back(element(a, b));
        return out;
    }

   private:
    static bool is_square_mod(std::uint32_t n, std::uint32_t p) {
        for (std::uint64_t x = 0; x < p; ++x)
            if (x * x % p == n % p) return true;
        return false;
    }

    PrimeField base_;
    Fp m0_, m1_;
};

inline QuadraticExtension build_quadratic_extension(std::uint64_t p) { return QuadraticExtension(p); }

}  // namespace x13

#endif  // X13_FINITE_FIELD_HPP
