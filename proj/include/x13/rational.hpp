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

#ifndef X13_RATIONAL_HPP
#define X13_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace x13 {

using BigInt = mpz_class;

/// Floor square root of a nonnegative big integer.
inline BigInt isqrt(const BigInt& n) {
    if (sgn(n) < 0) throw std::domain_error("isqrt of negative integer");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// Exact square root of n if n is a perfect square.
inline std::optional<BigInt> exact_isqrt(const BigInt& n) {
    if (sgn(n) < 0) return std::nullopt;
    BigInt r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (sgn(rem) != 0) return std::nullopt;
    return r;
}

/**
 * Exact fraction in lowest terms with positive denominator.
 *
 * Every constructor and arithmetic operation leaves the value canonical, so
 * equality is structural and zero is always 0/1.
 */
class Rational {
   public:
    Rational() = default;
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(int n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den) {
        if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p", "p/q" or "-p/q" (decimal integers).
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        auto parse_int = [&](std::string_view s) {
            if (s.empty()) throw std::invalid_argument("empty integer in rational '" + std::string(text) + "'");
            std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (start == s.size()) throw std::invalid_argument("bad rational '" + std::string(text) + "'");
            for (std::size_t i = start; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad rational '" + std::string(text) + "'");
            std::string digits(s[0] == '+' ? s.substr(1) : s);
            return BigInt(digits, 10);
        };
        if (slash == std::string_view::npos) return Rational(parse_int(text));
        BigInt den = parse_int(text.substr(slash + 1));
        if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(parse_int(text.substr(0, slash)), den);
    }

    const BigInt& num() const { return q_.get_num(); }
    const BigInt& den() const { return q_.get_den(); }
    const mpq_class& mpq() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1L); }
    Rational from_int(long n) const { return Rational(n); }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero rational");
        Rational r;
        mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
        return r;
    }

    Rational abs() const {
        Rational r;
        r.q_ = ::abs(q_);
        return r;
    }

    /// Always "num/den", even for integers.
    std::string to_string() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }
    /// "num" for integers, otherwise "num/den".
    std::string to_display() const { return q_.get_str(); }

    Rational operator-() const {
        Rational r;
        r.q_ = -q_;
        return r;
    }
    Rational& operator+=(const Rational& o) {
        q_ += o.q_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        q_ -= o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        q_ *= o.q_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero rational");
        q_ /= o.q_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_display(); }

   private:
    mpq_class q_;
};

/// Naive height max(|num|, den).
inline BigInt height(const Rational& r) {
    BigInt n = ::abs(r.num());
    return n > r.den() ? n : r.den();
}

inline Rational pow(const Rational& base, unsigned exp) {
    Rational result(1L), b = base;
    while (exp) {
        if (exp & 1U) result *= b;
        b *= b;
        exp >>= 1U;
    }
    return result;
}

struct SquareTest {
    bool is_square = false;
    std::optional<Rational> root;  // canonical nonnegative root when is_square
};

/// Decides whether r = s^2 over Q using exact integer square roots of both parts.
inline SquareTest rat_is_square(const Rational& r) {
    if (r.sign() < 0) return {};
    auto n = exact_isqrt(r.num());
    if (!n) return {};
    auto d = exact_isqrt(r.den());
    if (!d) return {};
    return {true, Rational(*n, *d)};
}

}  // namespace x13

#endif  // X13_RATIONAL_HPP
