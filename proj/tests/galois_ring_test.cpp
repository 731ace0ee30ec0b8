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

#include <set>
#include <utility>

#include <gtest/gtest.h>

#include "mubkit/galois_ring.hpp"

namespace mubkit {
namespace {

TEST(LiftBasicPrimitive, PrintedLifts) {
  EXPECT_EQ(lift_basic_primitive({1, 1, 1}), (Poly{1, 1, 1}));
  EXPECT_EQ(lift_basic_primitive({1, 1, 0, 1}), (Poly{3, 1, 2, 1}));
  EXPECT_EQ(lift_basic_primitive({1, 1, 0, 0, 1}), (Poly{1, 3, 2, 0, 1}));
}

TEST(LiftBasicPrimitive, CongruentToHbarForDefaults) {
  for (std::uint32_t m = 1; m <= 8; ++m) {
    const Poly hbar = default_hbar(m);
    const Poly h = lift_basic_primitive(hbar);
    ASSERT_EQ(h.size(), hbar.size());
    for (std::size_t i = 0; i < h.size(); ++i) EXPECT_EQ(h[i] % 2, hbar[i]);
    EXPECT_EQ(h.back(), 1u);
  }
}

TEST(LiftBasicPrimitive, RejectsNonPrimitive) {
  EXPECT_THROW(lift_basic_primitive({1, 0, 1}), InputError);
  // x^4+x^3+x^2+x+1 is irreducible over Z2 but has order 5, not 15.
  EXPECT_THROW(lift_basic_primitive({1, 1, 1, 1, 1}), InputError);
  EXPECT_THROW(RingContext::make(0), InputError);
  EXPECT_THROW(RingContext::make(11), InputError);
}

TEST(RingContext, DegreeOne) {
  const auto r = RingContext::make(1);
  EXPECT_EQ(r->h(), (Poly{3, 1}));
  const auto t = r->teichmuller_set();
  ASSERT_EQ(t.size(), 2u);
  EXPECT_TRUE(t[0].is_zero());
  EXPECT_EQ(t[1], r->one());
  for (std::int64_t v = 0; v < 4; ++v) EXPECT_EQ(ring_trace(r->from_int(v)), static_cast<std::uint32_t>(v));
}

TEST(RingElement, Examples) {
  const auto r = RingContext::make(2);
  const auto x = r->element({0, 1});
  EXPECT_EQ(x * x, r->element({3, 3}));
  EXPECT_EQ(x + r->zero(), x);
  for (std::uint32_t m = 1; m <= 5; ++m) {
    const auto ctx = RingContext::make(m);
    const auto xi = ctx->xi();
    EXPECT_EQ(ring_pow(xi, ctx->dim() - 1), ctx->one());
    for (std::uint64_t j = 1; j + 1 < ctx->dim(); ++j) EXPECT_NE(ring_pow(xi, j), ctx->one()) << "m=" << m;
  }
}

TEST(Teichmuller, PrintedSets) {
  const auto r2 = RingContext::make(2);
  const std::vector<Poly> t2{{0, 0}, {1, 0}, {0, 1}, {3, 3}};
  const auto got2 = r2->teichmuller_set();
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(got2[i].coeffs(), t2[i]);

  const auto r3 = RingContext::make(3);
  const std::vector<Poly> t3{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                             {1, 3, 2}, {2, 3, 3}, {3, 3, 1}, {1, 2, 1}};
  const auto got3 = r3->teichmuller_set();
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(got3[i].coeffs(), t3[i]);
}

TEST(Teichmuller, ClosedUnderMultiplication) {
  for (std::uint32_t m = 1; m <= 4; ++m) {
    const auto ctx = RingContext::make(m);
    const auto t = ctx->teichmuller_set();
    for (const auto& u : t) {
      for (const auto& v : t) EXPECT_TRUE(teichmuller_index(u * v).has_value());
    }
  }
}

TEST(TwoAdic, Examples) {
  const auto r = RingContext::make(2);
  const auto d0 = two_adic_decompose(r->zero());
  EXPECT_TRUE(d0.a.is_zero());
  EXPECT_TRUE(d0.b.is_zero());
  const auto d2 = two_adic_decompose(r->from_int(2));
  EXPECT_TRUE(d2.a.is_zero());
  EXPECT_EQ(d2.b, r->one());
  const auto t = r->teichmuller_set();
  EXPECT_EQ(t[2] + 2 * t[3], r->element({2, 3}));
}

TEST(TwoAdic, PrintedMatrix) {
  const auto r = RingContext::make(2);
  const auto t = r->teichmuller_set();
  const std::vector<std::vector<Poly>> expected{{{0, 0}, {2, 0}, {0, 2}, {2, 2}},
                                                {{1, 0}, {3, 0}, {1, 2}, {3, 2}},
                                                {{0, 1}, {2, 1}, {0, 3}, {2, 3}},
                                                {{3, 3}, {1, 3}, {3, 1}, {1, 1}}};
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) EXPECT_EQ((t[a] + 2 * t[b]).coeffs(), expected[a][b]);
  }
}

TEST(TwoAdic, BijectionOntoPairs) {
  for (std::uint32_t m = 1; m <= 3; ++m) {
    const auto ctx = RingContext::make(m);
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& y : ctx->elements()) {
      const auto [a, b] = two_adic_decompose(y);
      EXPECT_EQ(a + 2 * b, y);
      pairs.emplace(*teichmuller_index(a), *teichmuller_index(b));
    }
    EXPECT_EQ(pairs.size(), ctx->cardinality());
  }
}

TEST(Frobenius, Examples) {
  const auto r = RingContext::make(2);
  EXPECT_EQ(ring_frobenius(r->one()), r->one());
  EXPECT_EQ(ring_frobenius(r->element({0, 1})), r->element({3, 3}));
  for (const auto& y : r->elements()) EXPECT_EQ(ring_frobenius(ring_frobenius(y)), y);
}

TEST(Frobenius, RingAutomorphism) {
  for (std::uint32_t m = 2; m <= 3; ++m) {
    const auto ctx = RingContext::make(m);
    const auto el = ctx->elements();
    for (const auto& y : el) {
      for (const auto& z : el) {
        ASSERT_EQ(ring_frobenius(y + z), ring_frobenius(y) + ring_frobenius(z));
        ASSERT_EQ(ring_frobenius(y * z), ring_frobenius(y) * ring_frobenius(z));
      }
    }
  }
}

TEST(RingTrace, Examples) {
  const auto r = RingContext::make(2);
  EXPECT_EQ(ring_trace(r->zero()), 0u);
  EXPECT_EQ(ring_trace(r->element({0, 1})), 3u);
  EXPECT_EQ(ring_trace(r->from_int(2)), 0u);
  EXPECT_EQ(ring_trace(r->one()), 2u);
}

TEST(RingTrace, AdditiveAndFrobeniusInvariant) {
  for (std::uint32_t m = 1; m <= 3; ++m) {
    const auto ctx = RingContext::make(m);
    const auto el = ctx->elements();
    for (const auto& y : el) {
      EXPECT_EQ(ring_trace(ring_frobenius(y)), ring_trace(y));
      for (const auto& z : el) ASSERT_EQ(ring_trace(y + z), (ring_trace(y) + ring_trace(z)) & 3u);
    }
  }
}

TEST(Units, NonUnitIffTeichmullerPartIsZero) {
  for (std::uint32_t m = 1; m <= 3; ++m) {
    const auto ctx = RingContext::make(m);
    const auto el = ctx->elements();
    for (const auto& y : el) {
      bool unit = false;
      for (const auto& z : el) unit = unit || y * z == ctx->one();
      EXPECT_EQ(unit, !two_adic_decompose(y).a.is_zero()) << to_string(y);
    }
  }
}

TEST(Labels, RoundTrip) {
  const auto ctx = RingContext::make(3);
  for (std::uint64_t i = 0; i < ctx->cardinality(); ++i) EXPECT_EQ(ring_label(ctx->unlabel(i)), i);
}

}  // namespace
}  // namespace mubkit
