// Copyright 2026 The mubkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include <gtest/gtest.h>

#include "mubkit/acceptance.hpp"
#include "mubkit/entanglement.hpp"

namespace mubkit {
namespace {

using acceptance::golden::kets;

void expect_state(const BipartiteState& got, const std::vector<Complex>& want, double scale, double tol = 1e-12) {
  ASSERT_EQ(got.amps().size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_LT(std::abs(got.amps()[i] - scale * want[i]), tol) << i;
}

TEST(BellFourier, QubitBellStates) {
  const double s = 1.0 / std::sqrt(2.0);
  expect_state(bell_fourier(2, 0, 0), {1, 0, 0, 1}, s);
  expect_state(bell_fourier(2, 0, 1), {1, 0, 0, -1}, s);
  expect_state(bell_fourier(2, 1, 0), {0, 1, 1, 0}, s);
  expect_state(bell_fourier(2, 1, 1), {0, 1, -1, 0}, s);
}

TEST(BellFourier, QutritExample) {
  expect_state(bell_fourier(3, 1, 0), kets(3, {{0, 1}, {1, 1}, {2, 1}}, 1), 1.0 / std::sqrt(3.0));
}

TEST(BellFourier, FullFamilyIsOrthonormalBasis) {
  for (std::size_t q : {2u, 3u, 4u, 5u}) {
    const auto fam = bell_family_fourier(q);
    ASSERT_EQ(fam.states.size(), q * q);
    for (std::size_t i = 0; i < fam.states.size(); ++i) {
      for (std::size_t j = 0; j < fam.states.size(); ++j) {
        EXPECT_LT(std::abs(inner(fam.states[i].state, fam.states[j].state) - Complex(i == j ? 1.0 : 0.0, 0.0)),
                  1e-9);
      }
    }
  }
}

TEST(BellGalois, Examples) {
  const auto f3 = FieldContext::make(3, 1);
  expect_state(bell_galois(f3, 0, 0, 0), kets(3, {{0, 1}, {1, 1}, {2, 1}}, 0), 1.0 / std::sqrt(3.0));
  for (std::uint64_t h = 0; h < 3; ++h) {
    for (std::uint64_t a = 0; a < 3; ++a) {
      for (std::uint64_t b = 0; b < 3; ++b) {
        const auto s = bell_galois(f3, h, a, b);
        EXPECT_LT(distance_from_maximally_mixed(partial_trace(s, 2)), 1e-10);
        EXPECT_LT(distance_from_maximally_mixed(partial_trace(s, 1)), 1e-10);
      }
    }
  }
  EXPECT_THROW(bell_galois(FieldContext::make(2, 2), 0, 0, 0), InputError);
}

TEST(BellGalois, FixedShiftBasesAreUnbiased) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {3, 2}}) {
    const auto fam = bell_family_galois(FieldContext::make(p, m));
    const auto v = verify_entangled_family(fam);
    EXPECT_TRUE(v.pass) << "q=" << fam.q;
    EXPECT_LT(v.max_unbiasedness_deviation, 1e-9);
  }
}

TEST(BellRing, PrintedQubitMatrix) {
  const auto ctx = RingContext::make(1);
  const auto printed = acceptance::golden::qubit_bell_matrix();
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t h = 0; h < 2; ++h) {
      for (std::size_t b = 0; b < 2; ++b) expect_state(bell_ring(ctx, h, a, b), printed[a][h][b], 1.0 / std::sqrt(2.0));
    }
  }
}

TEST(BellRing, PrintedQuartitSets) {
  const auto ctx = RingContext::make(2);
  const auto printed = acceptance::golden::quartit_bell_sets();
  for (std::size_t h = 0; h < 4; ++h) {
    for (std::size_t a = 0; a < printed[h].size(); ++a) {
      for (std::size_t b = 0; b < 4; ++b) expect_state(bell_ring(ctx, h, a, b), printed[h][a][b], 0.5);
    }
  }
  expect_state(bell_ring(ctx, 1, 0, 0), kets(4, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}, 1), 0.5);
}

TEST(BellRing, DifferentShiftsAreOrthogonal) {
  const auto ctx = RingContext::make(2);
  for (std::uint64_t a = 0; a < 4; ++a) {
    for (std::uint64_t b = 0; b < 4; ++b) {
      for (std::uint64_t a2 = 0; a2 < 4; ++a2) {
        for (std::uint64_t b2 = 0; b2 < 4; ++b2) {
          EXPECT_LT(std::abs(inner(bell_ring(ctx, 0, a, b), bell_ring(ctx, 2, a2, b2))), 1e-12);
        }
      }
    }
  }
}

TEST(BellRing, AllStatesMaximallyEntangled) {
  for (std::uint32_t m = 1; m <= 3; ++m) {
    const auto fam = bell_family_ring(RingContext::make(m));
    for (const auto& s : fam.states) {
      EXPECT_LT(distance_from_maximally_mixed(partial_trace(s.state, 1)), 1e-10);
      EXPECT_LT(distance_from_maximally_mixed(partial_trace(s.state, 2)), 1e-10);
    }
    EXPECT_TRUE(verify_entangled_family(fam).pass);
  }
}

TEST(BellRing, FieldShiftVariantStillMaximallyEntangled) {
  const auto fam = bell_family_ring(RingContext::make(2), ShiftMode::field);
  const auto v = verify_entangled_family(fam);
  EXPECT_LT(v.max_entanglement_distance, 1e-10);
  EXPECT_LT(v.max_orthonormality_deviation, 1e-10);
  EXPECT_LT(v.max_cross_h_overlap, 1e-10);
}

TEST(PartialTrace, ProductAndBellStates) {
  const StateVector zero({1.0, 0.0});
  const auto rho = partial_trace(BipartiteState::product(zero, zero), 2);
  EXPECT_EQ(rho(0, 0), Complex(1.0, 0.0));
  EXPECT_EQ(rho(1, 1), Complex(0.0, 0.0));
  EXPECT_NEAR(distance_from_maximally_mixed(rho), 0.5, 1e-15);
  EXPECT_LT(distance_from_maximally_mixed(partial_trace(bell_fourier(2, 0, 0), 2)), 1e-15);
  EXPECT_THROW(partial_trace(bell_fourier(2, 0, 0), 3), InputError);
}

TEST(PartialTrace, TraceIsOneAndHermitian) {
  const StateVector x({Complex(0.6, 0.0), Complex(0.0, 0.8), Complex(0.0, 0.0)});
  const StateVector y({Complex(0.0, 1.0), Complex(0.0, 0.0), Complex(0.0, 0.0)});
  for (int sub : {1, 2}) {
    const auto rho = partial_trace(BipartiteState::product(x, y), sub);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-15);
    EXPECT_LT(rho.hermiticity_deviation(), 1e-15);
  }
}

TEST(VerifyEntangledFamily, QubitFamilyPasses) {
  const auto v = verify_entangled_family(bell_family_ring(RingContext::make(1)));
  EXPECT_TRUE(v.pass);
  EXPECT_LT(std::abs(v.max_unbiasedness_deviation), 1e-12);
}

TEST(VerifyEntangledFamily, ProductStateFails) {
  auto fam = bell_family_fourier(3);
  const StateVector e0({1.0, 0.0, 0.0});
  fam.states[4].state = BipartiteState::product(e0, e0);
  const auto v = verify_entangled_family(fam);
  EXPECT_FALSE(v.pass);
  EXPECT_NEAR(v.max_entanglement_distance, 2.0 / 3.0, 1e-12);
}

TEST(VerifyEntangledFamily, RejectsInconsistentDimensions) {
  auto fam = bell_family_fourier(2);
  fam.states.push_back({0, 0, 0, bell_fourier(3, 0, 0)});
  EXPECT_THROW(verify_entangled_family(fam), InputError);
  EXPECT_THROW(verify_entangled_family(BellFamily{}), InputError);
}

}  // namespace
}  // namespace mubkit
