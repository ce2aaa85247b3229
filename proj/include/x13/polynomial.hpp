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

#ifndef X13_POLYNOMIAL_HPP
#define X13_POLYNOMIAL_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace x13 {

/// Commutative ring with value semantics. Zero is recovered as `x - x`, so
/// element types may carry runtime context (a modulus, a parent field).
template <class R>
concept Ring = std::copyable<R> && std::equality_comparable<R> && requires(const R& a, const R& b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

template <class F>
concept Field = Ring<F> && requires(const F& a, long n) {
    { a.inverse() } -> std::convertible_to<F>;
    { a.zero() } -> std::convertible_to<F>;
    { a.one() } -> std::convertible_to<F>;
    { a.from_int(n) } -> std::convertible_to<F>;
};

template <Ring R>
R zero_like(const R& x) {
    return x - x;
}

/// n * x for n >= 0 using additions only.
template <Ring R>
R times(const R& x, unsigned long n) {
    R acc = zero_like(x);
    R base = x;
    while (n) {
        if (n & 1UL) acc = acc + base;
        base = base + base;
        n >>= 1UL;
    }
    return acc;
}

template <Ring R>
R power(const R& x, unsigned n, const R& one) {
    R acc = one;
    R base = x;
    while (n) {
        if (n & 1U) acc = acc * base;
        base = base * base;
        n >>= 1U;
    }
    return acc;
}

/**
 * Dense univariate polynomial; coefficient i multiplies x^i.
 *
 * Trailing zeros are stripped on every construction, so the zero polynomial
 * has no coefficients and `degree()` returns `kZeroDegree`.
 */
template <Ring R>
class Polynomial {
   public:
    static constexpr int kZeroDegree = -1;
    using coefficient_type = R;

    Polynomial() = default;
    explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const R& c) { return Polynomial(std::vector<R>{c}); }
    static Polynomial monomial(const R& c, std::size_t n) {
        std::vector<R> v(n + 1, zero_like(c));
        v[n] = c;
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::span<const R> coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }

    const R& operator[](std::size_t i) const { return c_.at(i); }
    const R& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    /// Coefficient of x^i, or `zero` past the degree.
    R coeff(std::size_t i, const R& zero) const { return i < c_.size() ? c_[i] : zero; }

    template <class X>
    X operator()(const X& x) const {
        if (c_.empty()) return zero_like(x);
        X acc = x - x + c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }
    R evaluate(const R& x) const { return (*this)(x); }

    template <class Fn>
    auto map(Fn&& fn) const {
        using S = std::decay_t<decltype(fn(std::declval<const R&>()))>;
        std::vector<S> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(fn(c));
        return Polynomial<S>(std::move(out));
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<R> d;
        d.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(times(c_[i], i));
        return Polynomial(std::move(d));
    }

    /// x^n * p(1/x); requires n >= degree.
    Polynomial reversed(std::size_t n) const {
        if (c_.empty()) return {};
        if (static_cast<int>(n) < degree()) throw std::invalid_argument("reversal length below degree");
        std::vector<R> v(n + 1, zero_like(c_[0]));
        for (std::size_t i = 0; i < c_.size(); ++i) v[n - i] = c_[i];
        return Polynomial(std::move(v));
    }

    /// p(q(x)).
    Polynomial compose(const Polynomial& q) const {
        Polynomial acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + constant(c_[i]);
        return acc;
    }

    Polynomial operator-() const {
        std::vector<R> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(-c);
        return Polynomial(std::move(v));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
        const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
        std::vector<R> v(big);
        for (std::size_t i = 0; i < small.size(); ++i) v[i] = v[i] + small[i];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.c_.empty() || b.c_.empty()) return {};
        std::vector<R> v(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Polynomial& a, const R& s) {
        std::vector<R> v;
        v.reserve(a.c_.size());
        for (const auto& c : a.c_) v.push_back(c * s);
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const R& s, const Polynomial& a) { return a * s; }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial pow(unsigned n) const {
        if (n == 0) {
            if (c_.empty()) throw std::domain_error("0^0 for polynomials");
            return constant(c_[0] - c_[0] + one_from(c_[0]));
        }
        Polynomial acc = *this;
        for (unsigned i = 1; i < n; ++i) acc = acc * *this;
        return acc;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        if (p.c_.empty()) return os << "0";
        bool first = true;
        for (std::size_t i = p.c_.size(); i-- > 0;) {
            if (p.c_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << p.c_[i] << ")";
            if (i >= 1) os << "*x";
            if (i >= 2) os << "^" << i;
        }
        return os;
    }

   private:
    static R one_from(const R& c) {
        if constexpr (requires { c.one(); }) {
            return c.one();
        } else {
            throw std::domain_error("coefficient ring has no unit accessor");
        }
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<R> c_;
};

// ---------------------------------------------------------------------------
// Field-coefficient algorithms.

template <Field F>
struct DivMod {
    Polynomial<F> quotient;
    Polynomial<F> remainder;
};

template <Field F>
DivMod<F> poly_divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {{}, a};
    const F lead_inv = b.leading().inverse();
    const F zero = b.leading().zero();
    std::vector<F> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<F> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), zero);
    const auto bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
        F q = rem[k + db] * lead_inv;
        quo[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] = rem[k + j] - q * bc[j];
    }
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(db), rem.end());
    return {Polynomial<F>(std::move(quo)), Polynomial<F>(std::move(rem))};
}

template <Field F>
Polynomial<F> make_monic(const Polynomial<F>& p) {
    if (p.is_zero()) return p;
    return p * p.leading().inverse();
}

/// Monic gcd; gcd(0, 0) = 0.
template <Field F>
Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        auto r = poly_divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

template <Field F>
struct ExtendedGcd {
    Polynomial<F> gcd;  // monic
    Polynomial<F> s;    // s*a + t*b = gcd
    Polynomial<F> t;
};

template <Field F>
ExtendedGcd<F> poly_xgcd(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (a.is_zero() && b.is_zero()) return {};
    const F one = (a.is_zero() ? b : a).leading().one();
    Polynomial<F> r0 = a, r1 = b;
    Polynomial<F> s0 = Polynomial<F>::constant(one), s1;
    Polynomial<F> t0, t1 = Polynomial<F>::constant(one);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    const F inv = r0.leading().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

template <Field F>
bool is_squarefree(const Polynomial<F>& p) {
    if (p.is_zero()) return false;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

/**
 * Resultant with the convention Res(a, b) = lc(a)^deg(b) * prod b(alpha_i)
 * over the roots alpha_i of a, so Res(x - r, x - s) = r - s.
 *
 * Computed by the Euclidean recurrence
 *   Res(a, b) = (-1)^(deg a * deg b) lc(b)^(deg a - deg r) Res(b, r),  r = a mod b.
 * A zero argument paired with a nonzero one gives 0.
 */
template <Field F>
F resultant(Polynomial<F> a, Polynomial<F> b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("resultant of two zero polynomials");
    if (a.is_zero() || b.is_zero()) return zero_like(a.is_zero() ? b.leading() : a.leading());
    F acc = a.leading().one();
    while (true) {
        const int da = a.degree(), db = b.degree();
        if (db == 0) return acc * power(b.leading(), static_cast<unsigned>(da), b.leading().one());
        auto r = poly_divmod(a, b).remainder;
        if (r.is_zero()) return zero_like(acc);
        const int dr = r.degree();
        if ((da * db) % 2 != 0) acc = -acc;
        acc = acc * power(b.leading(), static_cast<unsigned>(da - dr), b.leading().one());
        a = std::move(b);
        b = std::move(r);
    }
}

/// disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p), degree n >= 1.
template <Field F>
F discriminant(const Polynomial<F>& p) {
    const int n = p.degree();
    if (n < 1) throw std::domain_error("discriminant needs degree >= 1");
    if (n == 1) return p.leading().one();
    F r = resultant(p, p.derivative()) * p.leading().inverse();
    if ((n * (n - 1) / 2) % 2 != 0) r = -r;
    return r;
}

/// Discriminant of a*X^3 + b*X^2 + c*X + d by the closed formula; valid over any
/// commutative ring, and for a = 0 it degrades to b^2 times the quadratic discriminant.
template <Ring R>
R discriminant_cubic(const R& a, const R& b, const R& c, const R& d) {
    R abcd = a * b * c * d;
    R b3d = b * b * b * d;
    R b2c2 = b * b * c * c;
    R ac3 = a * c * c * c;
    R a2d2 = a * a * d * d;
    return times(abcd, 18) - times(b3d, 4) + b2c2 - times(ac3, 4) - times(a2d2, 27);
}

/// Closed-formula discriminant of a polynomial of degree <= 3, padded to a cubic.
template <Ring R>
R discriminant_cubic(const Polynomial<R>& p, const R& zero) {
    if (p.degree() > 3) throw std::invalid_argument("discriminant_cubic: degree above 3");
    return discriminant_cubic(p.coeff(3, zero), p.coeff(2, zero), p.coeff(1, zero), p.coeff(0, zero));
}

}  // namespace x13

#endif  // X13_POLYNOMIAL_HPP
