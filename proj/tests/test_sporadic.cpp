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

#include "oracles/oracles.hpp"
#include "x13/x13.hpp"

using namespace x13;

TEST(Sporadic, AllAssertionsHold) {
    auto out = sporadic::verify_sporadic();
    ASSERT_EQ(out.size(), 5u);
    const char* ids[] = {"minpoly-irreducible", "minpoly-discriminant", "curve-nonsingular", "origin-order-13",
                         "j-not-rational"};
    for (std::size_t i = 0; i < out.size(); ++i) {
        EXPECT_EQ(out[i].id, ids[i]);
        EXPECT_TRUE(out[i].passed) << out[i].id << " " << out[i].details.dump();
    }
}

TEST(Sporadic, FieldDiscriminant) {
    const QPoly m = sporadic::field_polynomial();
    EXPECT_EQ(oracle::sylvester_discriminant(m), Rational(1482L * 1482L));
    EXPECT_EQ(Rational(1482L * 1482L) / Rational(247L * 247L), Rational(36));
    EXPECT_EQ(247, 13 * 19);
    EXPECT_EQ(19773, 9 * 13 * 13 * 13);
    EXPECT_EQ(1521, 39 * 39);
}

TEST(Sporadic, FiberFieldEvidence) {
    auto ev = sporadic::fiber_field_evidence(1000);
    EXPECT_TRUE(ev.agrees());
    EXPECT_TRUE(ev.fiber_disc_square);
    EXPECT_TRUE(ev.field_disc_square);
    EXPECT_GT(ev.compared_primes, 100u);
    EXPECT_EQ(ev.fiber_cubic.leading(), Rational(1));
    for (const auto& c : ev.fiber_cubic.coeffs()) EXPECT_TRUE(c.is_integer());
    EXPECT_THROW(sporadic::fiber_field_evidence(10), std::invalid_argument);
}

TEST(Sporadic, FingerprintSeparatesOtherCyclicField) {
    const QPoly other = qpoly({1, -4, 1, 1});  // conductor 13
    ASSERT_TRUE(rat_is_square(discriminant(other)).is_square);
    EXPECT_FALSE(sporadic::fingerprint_disagreements(sporadic::field_polynomial(), other, 100).empty());
}

TEST(Sporadic, FingerprintRootCountsByExhaustion) {
    auto ev = sporadic::fiber_field_evidence(60);
    const auto fp = splitting_fingerprint(ev.fiber_cubic, 60);
    for (const auto& [p, n] : fp) {
        int brute = 0;
        for (std::int64_t x = 0; x < p; ++x) {
            std::int64_t acc = 0;
            for (std::size_t i = 4; i-- > 0;) acc = (acc * x + oracle::mod_p(ev.fiber_cubic.coeff(i, Rational()), p)) % p;
            brute += acc == 0;
        }
        EXPECT_EQ(n, brute) << p;
    }
}
