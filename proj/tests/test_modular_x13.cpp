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

#include <random>
#include <set>
#include <vector>

#include "oracles/oracles.hpp"
#include "x13/x13.hpp"

using namespace x13;

namespace {

QPoly evaluate_fiber(FiberMap map, const Rational& s) {
    return generic_fiber_cubic(map).map([&](const QPoly& c) { return c(s); });
}

}  // namespace

TEST(X13, RationalPointsOnModel) {
    const auto m = x13model::model();
    const auto pts = x13model::rational_points();
    ASSERT_EQ(pts.size(), 6u);
    for (const auto& p : pts) EXPECT_TRUE(lies_on(m, p));
    // (-1, -1) by hand: 1 + (-1 + 1 + 1)(-1) = 0 = (-1)^2 + (-1).
    EXPECT_EQ(m.equation(-1, -1), Rational());
    EXPECT_EQ(rational_points_at_infinity(m).size(), 2u);
    EXPECT_EQ(search_rational_points(m, 50), pts);
}

TEST(X13, StoredDiscriminantPolynomials) {
    const QPoly y = qpoly({0, 1});
    EXPECT_EQ(x13model::d1(), qpoly({1, 1}) * qpoly({1, 5, 6, -6, -31, -27}));
    EXPECT_EQ(x13model::d2(), y * qpoly({1, 1}).pow(3) * qpoly({-4, -23, -25, -1, 5, -4}));
    EXPECT_TRUE(is_squarefree(x13model::d1_quintic()));
    EXPECT_TRUE(is_squarefree(x13model::d2_quintic()));
}

TEST(X13, FiberPolynomialsBySubstitution) {
    std::mt19937_64 rng(41);
    const auto m = x13model::model();
    for (int i = 0; i < 200; ++i) {
        Rational s = oracle::random_rational(rng, 30), x = oracle::random_rational(rng, 30);
        EXPECT_EQ(evaluate_fiber(FiberMap::Y, s)(x), m.equation(x, s));
        EXPECT_EQ(x * evaluate_fiber(FiberMap::T, s)(x), m.equation(x, s * x - Rational(1)));
    }
}

TEST(X13, FiberCubicExamples) {
    EXPECT_EQ(fiber_cubic(FiberMap::Y, -1), qpoly({0, -1, -2, -1}));
    EXPECT_EQ(fiber_cubic(FiberMap::Y, 0), qpoly({0, -1, -1}));
    const QPoly c = fiber_cubic(FiberMap::Y, Rational(-4, 13));
    EXPECT_EQ(c.degree(), 3);
    EXPECT_TRUE(rational_roots(c).empty());
    EXPECT_TRUE(rat_is_square(discriminant(c)).is_square);
}

TEST(X13, ClassificationExamples) {
    auto a = classify_fiber(FiberMap::Y, -1);
    EXPECT_EQ(a.kind, FiberKind::Ramified);
    EXPECT_EQ(a.rational_roots, (std::set<Rational>{0, -1}));
    auto b = classify_fiber(FiberMap::Y, Rational(-4, 13));
    EXPECT_EQ(b.kind, FiberKind::CyclicCubic);
    EXPECT_TRUE(b.discriminant_is_square);
    EXPECT_FALSE(b.discriminant.is_zero());
    auto c = classify_fiber(FiberMap::T, 0);
    EXPECT_EQ(c.kind, FiberKind::Ramified);
    EXPECT_TRUE(x13model::d2()(Rational()).is_zero());
    auto d = classify_fiber(FiberMap::Y, 0);
    EXPECT_EQ(d.kind, FiberKind::DegenerateDegreeDrop);
    EXPECT_TRUE(d.infinity_point);
    EXPECT_EQ(d.rational_roots, (std::set<Rational>{0, -1}));
    EXPECT_EQ(classify_fiber(FiberMap::Y, 1).kind, FiberKind::NonCyclicCubic);
    EXPECT_EQ(classify_fiber(FiberMap::T, -1).kind, FiberKind::Ramified);
}

TEST(X13, DiscriminantIdentities) {
    auto y = verify_disc_identity(FiberMap::Y);
    EXPECT_EQ(y.discriminant, x13model::d1());
    EXPECT_EQ(y.quotient, RationalFunction(qpoly({1}), qpoly({1})));
    auto t = verify_disc_identity(FiberMap::T);
    EXPECT_EQ(t.quotient, RationalFunction(qpoly({1}), qpoly({1, 2, 1})));
    EXPECT_EQ(t.quotient_sqrt, RationalFunction(qpoly({1}), qpoly({1, 1})));
}

TEST(X13, DiscriminantSpotChecksAgainstSylvester) {
    for (long n = -6; n <= 6; ++n)
        for (long d : {1L, 2L, 3L, 7L, 13L}) {
            const Rational s(n, d);
            const QPoly y = evaluate_fiber(FiberMap::Y, s);
            if (y.degree() == 3) EXPECT_EQ(oracle::sylvester_discriminant(y), x13model::d1()(s)) << s;
            const QPoly quartic = generic_fiber_quartic_t().map([&](const QPoly& c) { return c(s); });
            if (quartic.degree() == 4) EXPECT_EQ(oracle::sylvester_discriminant(quartic), x13model::d2()(s)) << s;
            const QPoly t = evaluate_fiber(FiberMap::T, s);
            if (t.degree() == 3 && s != Rational(-1))
                EXPECT_EQ(oracle::sylvester_discriminant(t) * (s + 1) * (s + 1), x13model::d2()(s)) << s;
        }
}

TEST(X13, ClassificationInvariantsUpToHeight30) {
    std::vector<Rational> y_cyclic, t_cyclic;
    for (const auto& v : enumerate_rationals(30)) {
        for (FiberMap map : {FiberMap::Y, FiberMap::T}) {
            auto c = classify_fiber(map, v);
            EXPECT_EQ(c.kind == FiberKind::Ramified, c.discriminant.is_zero());
            if (c.kind == FiberKind::SplitRational) EXPECT_FALSE(c.rational_roots.empty());
            if (c.kind == FiberKind::CyclicCubic) {
                EXPECT_TRUE(c.rational_roots.empty());
                EXPECT_TRUE(c.discriminant_is_square);
                (map == FiberMap::Y ? y_cyclic : t_cyclic).push_back(v);
            }
        }
        // Two squareness routes for the y-map agree on irreducible fibers.
        auto c = classify_fiber(FiberMap::Y, v);
        if (c.polynomial.degree() == 3 && c.rational_roots.empty()) {
            const Rational d1 = x13model::d1()(v);
            EXPECT_EQ(c.kind == FiberKind::CyclicCubic, !d1.is_zero() && rat_is_square(d1).is_square) << v;
        }
    }
    EXPECT_EQ(y_cyclic, std::vector<Rational>{Rational(-4, 13)});
    EXPECT_TRUE(t_cyclic.empty());
}

TEST(X13, NineteenDivisibility) {
    auto rows = nineteen_divisibility({3, 5, 7, 11, 19, 23});
    ASSERT_EQ(rows.size(), 6u);
    for (const auto& r : rows) {
        EXPECT_TRUE(r.divisible) << r.count.p;
        EXPECT_EQ(r.count.order % 19, 0);
        EXPECT_EQ(r.count.n1, oracle::euler_count(x13model::model(), static_cast<std::uint32_t>(r.count.p)));
    }
    EXPECT_THROW(nineteen_divisibility({13}), BadPrime);
}

TEST(X13, MapParsing) {
    EXPECT_EQ(parse_fiber_map("y"), FiberMap::Y);
    EXPECT_EQ(parse_fiber_map("t"), FiberMap::T);
    EXPECT_THROW(parse_fiber_map("z"), std::invalid_argument);
}
