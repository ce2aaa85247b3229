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

#include <algorithm>
#include <cmath>
#include <vector>

#include "oracles/oracles.hpp"
#include "x13/x13.hpp"

using namespace x13;

namespace {

HyperellipticModel odd_genus2(std::initializer_list<long> f, std::initializer_list<long> h = {}) {
    return {qpoly(f), h.size() ? qpoly(h) : QPoly{}};
}

std::vector<HyperellipticModel> sample_models() {
    return {x13model::model(),
            x13model::d1_curve(),
            x13model::d2_curve(),
            x13model::d2_minimal(),
            HyperellipticModel(qpoly({1, 0, 0, 1})),
            HyperellipticModel(qpoly({1, 0, 0, 0, 0, 1})),
            HyperellipticModel(qpoly({3, -1, 2, 0, 1, 0, 1}), qpoly({0, 1}))};
}

// Independent F_2 count: v in {0, 1}, u in {0, 1}, plus the U = 0 fiber of the chart.
std::uint64_t naive_count_f2(const HyperellipticModel& m) {
    auto val = [](const QPoly& p, long x) { return oracle::mod_p(p(Rational(x)), 2); };
    std::uint64_t n = 0;
    for (long u = 0; u < 2; ++u)
        for (long v = 0; v < 2; ++v) n += (v * v + val(m.h(), u) * v - val(m.f(), u)) % 2 == 0;
    const auto w = static_cast<std::size_t>(m.weight());
    const long h0 = oracle::mod_p(m.h().coeff(w, Rational()), 2);
    const long f0 = oracle::mod_p(m.f().coeff(2 * w, Rational()), 2);
    for (long V = 0; V < 2; ++V) n += (V * V + h0 * V - f0) % 2 == 0;
    return n;
}

}  // namespace

TEST(Hyperelliptic, Genus) {
    EXPECT_EQ(genus(x13model::model()), 2);
    EXPECT_EQ(genus(x13model::d1_curve()), 2);
    EXPECT_EQ(genus(x13model::d2_curve()), 3);
    EXPECT_EQ(genus(x13model::d2_minimal()), 3);
    EXPECT_EQ(genus(HyperellipticModel(qpoly({1, 0, 0, 1}))), 1);
}

TEST(Hyperelliptic, RejectsSingularModels) {
    EXPECT_THROW(HyperellipticModel(qpoly({0, 0, 1})), SingularModel);
    EXPECT_THROW(HyperellipticModel(qpoly({0, 0, 1, 1})), SingularModel);
    EXPECT_THROW(HyperellipticModel(QPoly{}), SingularModel);
}

TEST(Hyperelliptic, InfinityChart) {
    const auto x = infinity_chart(x13model::model());
    EXPECT_EQ(x.h0(), Rational(1));
    EXPECT_EQ(x.f0(), Rational(0));
    auto xi = rational_points_at_infinity(x13model::model());
    ASSERT_EQ(xi.size(), 2u);
    EXPECT_EQ(xi[0], ModelPoint::at_infinity(-1));
    EXPECT_EQ(xi[1], ModelPoint::at_infinity(0));

    const auto d = infinity_chart(x13model::d2_minimal());
    EXPECT_EQ(d.h0(), Rational(0));
    EXPECT_EQ(d.f0(), Rational(0));
    auto di = rational_points_at_infinity(x13model::d2_minimal());
    ASSERT_EQ(di.size(), 1u);
    EXPECT_EQ(di[0], ModelPoint::at_infinity(0));
}

TEST(Hyperelliptic, CountExamples) {
    EXPECT_EQ(count_points_fp(x13model::d2_minimal(), 2), 3u);
    EXPECT_EQ(count_points_fp(x13model::model(), 2), naive_count_f2(x13model::model()));
    for (const auto& m : sample_models()) {
        try {
            EXPECT_EQ(count_points_fp(m, 2), naive_count_f2(m));
        } catch (const BadReduction&) {
        }
    }
}

TEST(Hyperelliptic, CountMatchesEulerCriterion) {
    for (const auto& m : sample_models())
        for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
            try {
                EXPECT_EQ(count_points_fp(m, p), oracle::euler_count(m, p)) << p;
            } catch (const BadReduction&) {
            }
        }
}

TEST(Hyperelliptic, CountBounds) {
    for (const auto& m : sample_models())
        for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
            bool good = false;
            try {
                good = is_smooth_mod_p(m, p);
            } catch (const BadReduction&) {
                continue;
            }
            if (!good) continue;
            const auto n = static_cast<double>(count_points_fp(m, p));
            EXPECT_LE(n, 2.0 * p + 3.0);
            EXPECT_LE(std::abs(n - (p + 1.0)), 2.0 * m.genus() * std::sqrt(static_cast<double>(p)) + 1e-9)
                << "p=" << p << " g=" << m.genus();
            if (p > 13) continue;
            const auto n2 = static_cast<double>(count_points_fp2(m, p));
            EXPECT_LE(std::abs(n2 - (1.0 * p * p + 1.0)), 2.0 * m.genus() * p + 1e-9);
        }
}

TEST(Hyperelliptic, SmoothnessExamples) {
    EXPECT_TRUE(is_smooth_mod_p(x13model::d2_minimal(), 2));
    // u^3 - u^2 + 5 reduces to u^2 (u - 1) mod 5: node at the origin.
    const HyperellipticModel nodal(qpoly({5, 0, -1, 1}));
    EXPECT_TRUE(is_smooth_mod_p(nodal, 3));
    EXPECT_FALSE(is_smooth_mod_p(nodal, 5));
    EXPECT_TRUE(oracle::has_singular_point(nodal, PrimeField(5)));
}

TEST(Hyperelliptic, X13AtLevelAndAtTwo) {
    const auto x = x13model::model();
    const bool smooth13 = is_smooth_mod_p(x, 13);
    const bool scan13 = oracle::has_singular_point(x, PrimeField(13)) ||
                        oracle::has_singular_point(x, QuadraticExtension(13));
    EXPECT_FALSE(smooth13);
    EXPECT_TRUE(scan13);
    // Smoothness at 2 is a computed outcome; the exhaustive scan must not contradict it.
    const bool smooth2 = is_smooth_mod_p(x, 2);
    const bool scan2 = oracle::has_singular_point(x, PrimeField(2)) ||
                       oracle::has_singular_point(x, QuadraticExtension(2));
    if (scan2) EXPECT_FALSE(smooth2);
    RecordProperty("x13_smooth_mod_2", smooth2 ? "true" : "false");
}

TEST(Hyperelliptic, SmoothnessAgreesWithSingularScan) {
    for (const auto& m : sample_models())
        for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 19u}) {
            bool smooth = false;
            try {
                smooth = is_smooth_mod_p(m, p);
            } catch (const BadReduction&) {
                continue;
            }
            const bool scan = oracle::has_singular_point(m, PrimeField(p)) ||
                              (p < 12 && oracle::has_singular_point(m, QuadraticExtension(p)));
            if (scan) EXPECT_FALSE(smooth) << "p=" << p;
            if (smooth) EXPECT_FALSE(scan) << "p=" << p;
        }
}

TEST(Hyperelliptic, SearchExamples) {
    auto d1 = search_rational_points(x13model::d1_curve(), 100);
    std::vector<ModelPoint> expected{ModelPoint::affine(-1, 0), ModelPoint::affine(0, -1), ModelPoint::affine(0, 1),
                                     ModelPoint::affine(Rational(-4, 13), Rational(-57, 2197)),
                                     ModelPoint::affine(Rational(-4, 13), Rational(57, 2197))};
    EXPECT_EQ(d1, expected);

    auto d2 = search_rational_points(x13model::d2_curve(), 100);
    std::vector<ModelPoint> expected2{ModelPoint::at_infinity(0), ModelPoint::affine(-1, 0), ModelPoint::affine(0, 0)};
    EXPECT_EQ(d2, expected2);

    auto e = search_rational_points(HyperellipticModel(qpoly({0, -1, 0, 1})), 3);
    std::vector<ModelPoint> expected3{ModelPoint::at_infinity(0), ModelPoint::affine(-1, 0), ModelPoint::affine(0, 0),
                                      ModelPoint::affine(1, 0)};
    EXPECT_EQ(e, expected3);
}

TEST(Hyperelliptic, D2MinimalSearchAgreesWithRawModel) {
    auto raw = search_rational_points(x13model::d2_curve(), 60);
    auto min = search_rational_points(x13model::d2_minimal(), 60);
    EXPECT_EQ(raw.size(), 3u);
    EXPECT_EQ(min.size(), 3u);
}

TEST(Hyperelliptic, SearchStableAndExact) {
    for (const auto& m : sample_models()) {
        std::vector<ModelPoint> prev;
        for (std::int64_t h : {1, 3, 8, 20}) {
            auto pts = search_rational_points(m, h);
            for (const auto& p : pts) EXPECT_TRUE(lies_on(m, p));
            for (const auto& p : prev) EXPECT_NE(std::find(pts.begin(), pts.end(), p), pts.end());
            prev = pts;
        }
    }
}

TEST(Hyperelliptic, JsonRoundTrip) {
    const auto m = x13model::d2_minimal();
    const auto back = HyperellipticModel::from_json(nlohmann::json::parse(m.to_json().dump()));
    EXPECT_EQ(back.f(), m.f());
    EXPECT_EQ(back.h(), m.h());
    EXPECT_EQ(ModelPoint::at_infinity(0).to_json().dump(), R"({"chart":"infinity","u":"inf","v":"0/1"})");
}

TEST(Hyperelliptic, JacobianOrderMatchesMumfordCount) {
    struct Case {
        HyperellipticModel m;
        oracle::FPoly f, h;
        std::int64_t p;
    };
    std::vector<Case> cases;
    cases.push_back({odd_genus2({1, 0, 0, 0, 0, 1}), {1, 0, 0, 0, 0, 1}, {}, 3});
    cases.push_back({odd_genus2({0, 0, 0, 0, 0, 1}, {1}), {0, 0, 0, 0, 0, 1}, {1}, 2});
    cases.push_back({odd_genus2({1, 0, 1, 0, 0, 1}, {0, 1}), {1, 0, 1, 0, 0, 1}, {0, 1}, 2});
    cases.push_back({odd_genus2({1, 2, 0, 0, 0, 1}), {1, 2, 0, 0, 0, 1}, {}, 3});
    cases.push_back({odd_genus2({2, 1, 0, 0, 0, 1}), {2, 1, 0, 0, 0, 1}, {}, 5});
    cases.push_back({odd_genus2({1, 0, 3, 0, 0, 1}), {1, 0, 3, 0, 0, 1}, {}, 7});
    for (const auto& c : cases) {
        ASSERT_TRUE(is_smooth_mod_p(c.m, c.p)) << c.p;
        auto j = jacobian_order_fp(c.m, c.p);
        EXPECT_EQ(static_cast<std::uint64_t>(j.order), oracle::mumford_count(c.f, c.h, c.p)) << "p=" << c.p;
    }
}

TEST(Hyperelliptic, JacobianOrderX13) {
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 19u, 23u}) {
        auto j = jacobian_order_fp(x13model::model(), p);
        EXPECT_EQ(j.order % 19, 0) << p;
        EXPECT_EQ(j.n1, count_points_fp(x13model::model(), p));
    }
    EXPECT_THROW(jacobian_order_fp(x13model::model(), 13), BadPrime);
    EXPECT_THROW(jacobian_order_fp(x13model::d2_minimal(), 3), std::invalid_argument);
}

TEST(Hyperelliptic, SieveResiduesMatchResidueTable) {
    const auto m = x13model::d1_curve();
    const auto known = search_rational_points(m, 100);
    auto cert = sieve_certificate(m, 30, {3, 7, 11, 13}, known);
    const QPoly d = m.discriminant_polynomial();
    for (const auto& res : cert.residues) {
        const auto table = oracle::residue_table(res.p);
        for (std::uint32_t r = 0; r < res.p; ++r) {
            const auto v = oracle::mod_p(d(Rational(static_cast<long>(r))), res.p);
            EXPECT_EQ(res.allowed[r], v == 0 || table[v]) << "p=" << res.p << " r=" << r;
        }
        const auto lead = oracle::mod_p(d.coeff(6, Rational()), res.p);
        EXPECT_EQ(res.allowed[res.p], lead == 0 || table[lead]);
    }
    EXPECT_TRUE(cert.agrees_with_search);
    EXPECT_TRUE(cert.found_points_locally_allowed);
    EXPECT_LT(cert.survivors, cert.candidates);
}
