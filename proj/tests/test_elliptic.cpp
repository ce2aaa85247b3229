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

#include <gtest/gtest.h>

#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "oracles/oracles.hpp"
#include "x13/x13.hpp"

using namespace x13;

namespace {

using QCurve = WeierstrassCurve<Rational>;
using QPoint = CurvePoint<Rational>;

QCurve short_curve(long a, long b) { return QCurve(0, 0, 0, a, b); }

template <Field F>
void check_invariant_identities(const WeierstrassCurve<F>& e) {
    const auto& i = e.invariants();
    EXPECT_EQ(times(i.b8, 4), i.b2 * i.b6 - i.b4 * i.b4);
    EXPECT_EQ(times(i.discriminant, 1728), i.c4 * i.c4 * i.c4 - i.c6 * i.c6);
    EXPECT_EQ(e.j_invariant() * i.discriminant, i.c4 * i.c4 * i.c4);
}

template <Field F>
void check_group_axioms(const WeierstrassCurve<F>& e, const std::vector<CurvePoint<F>>& pts, std::mt19937_64& rng,
                        int trials) {
    ASSERT_FALSE(pts.empty());
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    const auto o = CurvePoint<F>::infinity();
    for (int n = 0; n < trials; ++n) {
        const auto &p = pts[pick(rng)], &q = pts[pick(rng)], &r = pts[pick(rng)];
        EXPECT_EQ(add_points(e, p, q), add_points(e, q, p));
        EXPECT_EQ(add_points(e, add_points(e, p, q), r), add_points(e, p, add_points(e, q, r)));
        EXPECT_EQ(add_points(e, p, o), p);
        EXPECT_TRUE(add_points(e, p, e.negate(p)).is_infinity());
        EXPECT_TRUE(e.contains(add_points(e, p, q)));
    }
}

template <class FieldDesc>
auto all_points(const WeierstrassCurve<typename FieldDesc::element_type>& e, const FieldDesc& k) {
    using F = typename FieldDesc::element_type;
    std::vector<CurvePoint<F>> out{CurvePoint<F>::infinity()};
    const auto elems = k.elements();
    for (const auto& x : elems)
        for (const auto& y : elems)
            if (e.equation(x, y).is_zero()) out.push_back(CurvePoint<F>::affine(x, y));
    return out;
}

}  // namespace

TEST(Elliptic, InvariantExamples) {
    auto e1 = short_curve(0, 1);
    EXPECT_EQ(e1.discriminant(), Rational(-432));
    EXPECT_EQ(e1.j_invariant(), Rational(0));
    auto e2 = short_curve(1, 0);
    EXPECT_EQ(e2.discriminant(), Rational(-64));
    EXPECT_EQ(e2.j_invariant(), Rational(1728));
    check_invariant_identities(e1);
    check_invariant_identities(e2);
    check_invariant_identities(QCurve(1, -1, 1, -3, 7));
    EXPECT_THROW(short_curve(0, 0), SingularCurve);
    EXPECT_THROW(short_curve(-3, 2), SingularCurve);
}

TEST(Elliptic, SporadicInvariants) {
    const auto data = sporadic::build();
    check_invariant_identities(data.curve);
    EXPECT_FALSE(data.curve.discriminant().is_zero());
    EXPECT_FALSE(is_rational(data.curve.j_invariant()));
    // Transcription check: b, c have the stated denominators.
    for (const auto& x : data.b.coordinates()) EXPECT_EQ(BigInt(19773) % x.den(), 0);
    for (const auto& x : data.c.coordinates()) EXPECT_EQ(BigInt(1521) % x.den(), 0);
    EXPECT_EQ(data.b * Rational(19773), data.field->element(-1936, 90, 10));
    EXPECT_EQ(data.c * Rational(1521), data.field->element(-208, 50, 6));
}

TEST(Elliptic, DoublingMatchesTangentFormula) {
    std::mt19937_64 rng(31);
    const auto e = short_curve(-2, 0);
    const auto e2 = short_curve(0, -2);  // (3, 5) has infinite order
    for (const auto& [curve, a, base] : {std::tuple{e, Rational(-2), QPoint::affine(-1, 1)},
                                         std::tuple{e2, Rational(0), QPoint::affine(3, 5)}}) {
        QPoint p = base;
        for (int k = 0; k < 5; ++k) {
            auto [x2, y2] = oracle::short_double(a, p.x(), p.y());
            EXPECT_EQ(add_points(curve, p, p), QPoint::affine(x2, y2));
            p = add_points(curve, p, base);
        }
    }
}

TEST(Elliptic, GroupAxiomsOverQ) {
    std::mt19937_64 rng(32);
    const auto e = short_curve(0, -2);
    std::vector<QPoint> pts;
    for (long k = -4; k <= 4; ++k) pts.push_back(scalar_mul(e, k, QPoint::affine(3, 5)));
    check_group_axioms(e, pts, rng, 200);
}

TEST(Elliptic, GroupAxiomsOverFp) {
    std::mt19937_64 rng(33);
    for (std::uint32_t p : {2u, 3u, 5u, 13u, 31u}) {
        const PrimeField k(p);
        std::optional<WeierstrassCurve<Fp>> curve;
        for (std::uint32_t a6 = 1; !curve; ++a6) {
            try {
                curve.emplace(k.one(), k.zero(), k.one(), k.element(p - 1), k.element(a6));
            } catch (const SingularCurve&) {
            }
        }
        const auto& e = *curve;
        check_invariant_identities(e);
        auto pts = all_points(e, k);
        check_group_axioms(e, pts, rng, 200);
        // Hasse bound for elliptic curves.
        const long n = static_cast<long>(pts.size());
        EXPECT_LE((n - static_cast<long>(p) - 1) * (n - static_cast<long>(p) - 1), 4L * p);
        // Every point order divides the group order.
        for (const auto& q : pts) EXPECT_EQ(n % point_order(e, q, n), 0);
    }
}

TEST(Elliptic, GroupAxiomsOverFp2) {
    std::mt19937_64 rng(34);
    for (std::uint32_t p : {2u, 3u, 7u}) {
        const QuadraticExtension k(p);
        auto e = WeierstrassCurve<Fp2>(k.one(), k.zero(), k.one(), k.zero(), k.generator());
        auto pts = all_points(e, k);
        check_group_axioms(e, pts, rng, 200);
    }
}

TEST(Elliptic, GroupAxiomsOverNumberField) {
    std::mt19937_64 rng(35);
    const auto data = sporadic::build();
    const auto k = data.field;
    const auto g = CurvePoint<NumberFieldElement>::affine(k->element(0), k->element(0));
    std::vector<CurvePoint<NumberFieldElement>> pts;
    for (long n = 0; n < 13; ++n) pts.push_back(scalar_mul(data.curve, n, g));
    check_group_axioms(data.curve, pts, rng, 200);
}

TEST(Elliptic, ScalarMulAndOrder) {
    const auto e = short_curve(-1, 0);
    const auto t = QPoint::affine(0, 0);
    EXPECT_EQ(point_order(e, t, 5), 2);
    EXPECT_EQ(point_order(e, QPoint::infinity(), 7), 1);
    EXPECT_EQ(scalar_mul(e, 1, t), t);
    EXPECT_TRUE(scalar_mul(e, 0, t).is_infinity());
    const auto g = short_curve(0, -2);
    const auto p = QPoint::affine(3, 5);
    EXPECT_THROW(point_order(g, p, 30), OrderBoundExceeded);
    EXPECT_EQ(scalar_mul(g, -3, p), g.negate(scalar_mul(g, 3, p)));
    EXPECT_EQ(scalar_mul(g, 5, p), add_points(g, scalar_mul(g, 2, p), scalar_mul(g, 3, p)));
    EXPECT_THROW(add_points(g, p, QPoint::affine(0, 0)), PointNotOnCurve);
    EXPECT_THROW(point_order(g, p, 0), std::invalid_argument);
}

TEST(Elliptic, TateNormalForm) {
    EXPECT_THROW(tate_curve(Rational(), Rational()), SingularCurve);
    std::mt19937_64 rng(36);
    for (int i = 0; i < 50; ++i) {
        Rational b = oracle::random_rational(rng, 30), c = oracle::random_rational(rng, 30);
        try {
            auto e = tate_curve(b, c);
            EXPECT_TRUE(e.contains(QPoint::affine(0, 0)));
        } catch (const SingularCurve&) {
        }
    }
    // b = d^3 - d^2, c = d^2 - d gives a point of order 7 at (0, 0).
    for (long d : {2L, 3L, -2L, 5L}) {
        Rational dd(d);
        auto e = tate_curve(dd * dd * dd - dd * dd, dd * dd - dd);
        EXPECT_EQ(point_order(e, QPoint::affine(0, 0), 20), 7) << d;
    }
}

TEST(Elliptic, SporadicOrderThirteen) {
    const auto data = sporadic::build();
    const auto k = data.field;
    const auto g = CurvePoint<NumberFieldElement>::affine(k->element(0), k->element(0));
    EXPECT_TRUE(data.curve.contains(g));
    EXPECT_TRUE(scalar_mul(data.curve, 13, g).is_infinity());
    for (long m = 1; m < 13; ++m) EXPECT_FALSE(scalar_mul(data.curve, m, g).is_infinity()) << m;
    EXPECT_EQ(point_order(data.curve, g, 20), 13);
    EXPECT_EQ(add_points(data.curve, scalar_mul(data.curve, 6, g), scalar_mul(data.curve, 7, g)),
              CurvePoint<NumberFieldElement>::infinity());
    EXPECT_EQ(scalar_mul(data.curve, 14, g), g);
}
