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

// Long Weierstrass curves y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over an
// arbitrary exact field. All formulas are characteristic-free.

#ifndef X13_ELLIPTIC_HPP
#define X13_ELLIPTIC_HPP

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "x13/polynomial.hpp"

namespace x13 {

class SingularCurve : public std::domain_error {
   public:
    SingularCurve() : std::domain_error("singular Weierstrass model (discriminant is zero)") {}
};

class PointNotOnCurve : public std::invalid_argument {
   public:
    PointNotOnCurve() : std::invalid_argument("point does not lie on the curve") {}
};

class OrderBoundExceeded : public std::runtime_error {
   public:
    explicit OrderBoundExceeded(long bound)
        : std::runtime_error("point order exceeds bound " + std::to_string(bound)), bound_(bound) {}
    long bound() const { return bound_; }

   private:
    long bound_;
};

template <Field F>
struct CurveInvariants {
    F b2, b4, b6, b8;
    F c4, c6;
    F discriminant;
    std::optional<F> j;  // absent only for singular models
};

/// Standard b-, c-invariants, discriminant and j; j is absent when the discriminant vanishes.
template <Field F>
CurveInvariants<F> curve_invariants(const F& a1, const F& a2, const F& a3, const F& a4, const F& a6) {
    F b2 = a1 * a1 + times(a2, 4);
    F b4 = times(a4, 2) + a1 * a3;
    F b6 = a3 * a3 + times(a6, 4);
    F b8 = a1 * a1 * a6 + times(a2 * a6, 4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    F c4 = b2 * b2 - times(b4, 24);
    F c6 = -(b2 * b2 * b2) + times(b2 * b4, 36) - times(b6, 216);
    F disc = -(b2 * b2 * b8) - times(b4 * b4 * b4, 8) - times(b6 * b6, 27) + times(b2 * b4 * b6, 9);
    std::optional<F> j;
    if (!disc.is_zero()) j = c4 * c4 * c4 * disc.inverse();
    return {b2, b4, b6, b8, c4, c6, disc, j};
}

/// Point on a Weierstrass model: the point at infinity or an affine pair.
template <Field F>
class CurvePoint {
   public:
    static CurvePoint infinity() { return CurvePoint(); }
    static CurvePoint affine(F x, F y) { return CurvePoint(std::move(x), std::move(y)); }

    bool is_infinity() const { return !xy_.has_value(); }
    const F& x() const { return xy_.value().first; }
    const F& y() const { return xy_.value().second; }

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

    friend std::ostream& operator<<(std::ostream& os, const CurvePoint& p) {
        if (p.is_infinity()) return os << "inf";
        return os << "(" << p.x() << ", " << p.y() << ")";
    }

   private:
    CurvePoint() = default;
    CurvePoint(F x, F y) : xy_(std::in_place, std::move(x), std::move(y)) {}
    std::optional<std::pair<F, F>> xy_;
};

template <Field F>
class WeierstrassCurve {
   public:
    /// Throws SingularCurve when the discriminant vanishes.
    WeierstrassCurve(F a1, F a2, F a3, F a4, F a6)
        : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)),
          inv_(curve_invariants(a1_, a2_, a3_, a4_, a6_)) {
        if (inv_.discriminant.is_zero()) throw SingularCurve();
    }

    const F& a1() const { return a1_; }
    const F& a2() const { return a2_; }
    const F& a3() const { return a3_; }
    const F& a4() const { return a4_; }
    const F& a6() const { return a6_; }
    const CurveInvariants<F>& invariants() const { return inv_; }
    const F& discriminant() const { return inv_.discriminant; }
    const F& j_invariant() const { return *inv_.j; }

    /// y^2 + a1 xy + a3 y - (x^3 + a2 x^2 + a4 x + a6).
    F equation(const F& x, const F& y) const {
        return y * y + a1_ * x * y + a3_ * y - (x * x * x + a2_ * x * x + a4_ * x + a6_);
    }

    bool contains(const CurvePoint<F>& p) const { return p.is_infinity() || equation(p.x(), p.y()).is_zero(); }

    CurvePoint<F> negate(const CurvePoint<F>& p) const {
        if (p.is_infinity()) return p;
        return CurvePoint<F>::affine(p.x(), -p.y() - a1_ * p.x() - a3_);
    }

    friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) {
        return a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_ && a.a4_ == b.a4_ && a.a6_ == b.a6_;
    }

   private:
    F a1_, a2_, a3_, a4_, a6_;
    CurveInvariants<F> inv_;
};

/// Chord-and-tangent addition; throws PointNotOnCurve for foreign points.
template <Field F>
CurvePoint<F> add_points(const WeierstrassCurve<F>& e, const CurvePoint<F>& p, const CurvePoint<F>& q) {
    if (!e.contains(p) || !e.contains(q)) throw PointNotOnCurve();
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const F &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    F lambda = x1, nu = x1;
    if (x1 == x2) {
        F denom = times(y1, 2) + e.a1() * x1 + e.a3();
        // Same x and y2 = -y1 - a1 x - a3: opposite points (also covers 2-torsion doubling).
        if ((y1 + y2 + e.a1() * x2 + e.a3()).is_zero()) return CurvePoint<F>::infinity();
        F dinv = denom.inverse();
        lambda = (times(x1 * x1, 3) + times(e.a2() * x1, 2) + e.a4() - e.a1() * y1) * dinv;
        nu = (-(x1 * x1 * x1) + e.a4() * x1 + times(e.a6(), 2) - e.a3() * y1) * dinv;
    } else {
        F dinv = (x2 - x1).inverse();
        lambda = (y2 - y1) * dinv;
        nu = (y1 * x2 - y2 * x1) * dinv;
    }
    F x3 = lambda * lambda + e.a1() * lambda - e.a2() - x1 - x2;
    F y3 = -(lambda + e.a1()) * x3 - nu - e.a3();
    return CurvePoint<F>::affine(std::move(x3), std::move(y3));
}

/// n*P by double-and-add; (-n)P = -(nP), 0P = infinity.
template <Field F>
CurvePoint<F> scalar_mul(const WeierstrassCurve<F>& e, long n, const CurvePoint<F>& p) {
    if (!e.contains(p)) throw PointNotOnCurve();
    if (n < 0) return e.negate(scalar_mul(e, -n, p));
    CurvePoint<F> acc = CurvePoint<F>::infinity();
    CurvePoint<F> base = p;
    unsigned long k = static_cast<unsigned long>(n);
    while (k) {
        if (k & 1UL) acc = add_points(e, acc, base);
        k >>= 1UL;
        if (k) base = add_points(e, base, base);
    }
    return acc;
}

/// Least n >= 1 with nP = infinity, by repeated addition; throws OrderBoundExceeded past `bound`.
template <Field F>
long point_order(const WeierstrassCurve<F>& e, const CurvePoint<F>& p, long bound) {
    if (bound < 1) throw std::invalid_argument("order bound must be >= 1");
    if (!e.contains(p)) throw PointNotOnCurve();
    CurvePoint<F> q = p;
    for (long n = 1; n <= bound; ++n) {
        if (q.is_infinity()) return n;
        q = add_points(e, q, p);
    }
    throw OrderBoundExceeded(bound);
}

/// y^2 + (1 - c) xy - b y = x^3 - b x^2, which carries (0, 0).
template <Field F>
WeierstrassCurve<F> tate_curve(const F& b, const F& c) {
    F zero = b.zero();
    return WeierstrassCurve<F>(b.one() - c, -b, -b, zero, zero);
}

}  // namespace x13

#endif  // X13_ELLIPTIC_HPP
