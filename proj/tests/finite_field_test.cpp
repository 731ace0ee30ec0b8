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
#include <vector>

#include <gtest/gtest.h>

#include "mubkit/finite_field.hpp"

namespace mubkit {
namespace {

// All monic polynomials of degree d over Z_p, lowest coefficient first.
std::vector<Poly> monic_polys(std::uint32_t p, int d) {
  std::vector<Poly> out;
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(d + 1, 0);
    std::uint64_t v = code;
    for (int i = 0; i < d; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[d] = 1;
    out.push_back(f);
  }
  return out;
}

// Oracle: f is reducible iff it equals a product of two monic polynomials of
// positive degree. Built by multiplying out every pair.
std::set<Poly> reducible_set(std::uint32_t p, int d) {
  std::set<Poly> out;
  for (int i = 1; i <= d / 2; ++i) {
    for (const auto& a : monic_polys(p, i)) {
      for (const auto& b : monic_polys(p, d - i)) out.insert(poly::mul(a, b, p));
    }
  }
  return out;
}

TEST(IsIrreducible, PrintedAndDerivedExamples) {
  EXPECT_TRUE(is_irreducible({1, 1, 1}, 2));
  EXPECT_FALSE(is_irreducible({1, 0, 1}, 2));
  EXPECT_TRUE(is_irreducible({1, 0, 1}, 3));
}

TEST(IsIrreducible, AgreesWithFactorizationOracle) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int d = 1; d <= 4; ++d) {
      const auto reducible = reducible_set(p, d);
      for (const auto& f : monic_polys(p, d)) {
        EXPECT_EQ(is_irreducible(f, p), reducible.count(f) == 0) << "p=" << p << " f=" << poly::to_string(f);
      }
    }
  }
}

TEST(IsIrreducible, RabinAgreesWithTrialDivisionOnSmallDegrees) {
  for (std::uint32_t p : {2u, 3u}) {
    for (int d = 2; d <= 4; ++d) {
      for (const auto& f : monic_polys(p, d)) {
        EXPECT_EQ(detail::irreducible_by_rabin(f, p), detail::irreducible_by_trial_division(f, p));
      }
    }
  }
}

TEST(IsIrreducible, RejectsBadInput) {
  EXPECT_THROW(is_irreducible({1, 1}, 4), InputError);
  EXPECT_THROW(is_irreducible({3}, 3), InputError);
}

TEST(FindIrreducible, Examples) {
  EXPECT_EQ(find_irreducible(2, 2), (Poly{1, 1, 1}));
  EXPECT_EQ(find_irreducible(3, 2), (Poly{1, 0, 1}));
  EXPECT_EQ(find_irreducible(5, 1), (Poly{0, 1}));
  EXPECT_EQ(find_irreducible(2, 1), (Poly{0, 1}));
}

TEST(FindIrreducible, OutputIsIrreducibleAndLexSmallest) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (std::uint32_t m = 1; m <= 6 && checked_pow(p, m, kMaxFieldSize) != 0; ++m) {
      const Poly f = find_irreducible(p, m);
      ASSERT_EQ(poly::degree(f), static_cast<int>(m));
      EXPECT_TRUE(is_irreducible(f, p));
      if (m > 4) continue;
      // No monic irreducible with a smaller coefficient sequence.
      for (const auto& g : monic_polys(p, static_cast<int>(m))) {
        if (g == f) break;
        if (std::lexicographical_compare(g.begin(), g.end(), f.begin(), f.end())) {
          EXPECT_FALSE(is_irreducible(g, p)) << poly::to_string(g);
        }
      }
    }
  }
}

TEST(FieldContext, RejectsInvalidParameters) {
  EXPECT_THROW(FieldContext::make(4, 1), InputError);
  EXPECT_THROW(FieldContext::make(3, 0), InputError);
  EXPECT_THROW(FieldContext::make(2, 21), InputError);
  EXPECT_THROW(FieldContext::make(2, 2, Poly{1, 0, 1}), InputError);
  EXPECT_THROW(FieldContext::make(3, 2, Poly{1, 1}), InputError);
}

TEST(FieldElement, F4Arithmetic) {
  const auto f4 = FieldContext::make(2, 2);
  const auto x = f4->element({0, 1});
  EXPECT_EQ(x * x, f4->element({1, 1}));
  EXPECT_TRUE((x + x).is_zero());
  EXPECT_EQ(label(f4->element({1, 1})), 3u);
  EXPECT_EQ(label(f4->zero()), 0u);
}

TEST(FieldElement, RejectsMixedContexts) {
  const auto a = FieldContext::make(3, 1);
  const auto b = FieldContext::make(5, 1);
  EXPECT_THROW(a->one() + b->one(), InputError);
  EXPECT_THROW(a->unlabel(3), InputError);
}

TEST(FieldElement, GroupLawsExhaustive) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 2}, {5, 1}, {2, 3}}) {
    const auto ctx = FieldContext::make(p, m);
    const auto el = ctx->elements();
    for (const auto& x : el) {
      EXPECT_EQ(x + ctx->zero(), x);
      EXPECT_TRUE((x - x).is_zero());
      if (!x.is_zero()) {
        EXPECT_EQ(pow(x, ctx->q() - 1), ctx->one());
        EXPECT_EQ(x * inv(x), ctx->one());
      }
      for (const auto& y : el) {
        EXPECT_EQ(x * y, y * x);
        for (const auto& z : el) EXPECT_EQ(x * (y + z), x * y + x * z);
      }
    }
  }
}

TEST(Trace, Examples) {
  const auto f4 = FieldContext::make(2, 2);
  EXPECT_EQ(trace(f4->one()), 0u);
  EXPECT_EQ(trace(f4->zero()), 0u);
  EXPECT_EQ(trace(f4->element({0, 1})), 1u);
}

TEST(Trace, LinearOntoWithEqualFibres) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {7, 2}}) {
    const auto ctx = FieldContext::make(p, m);
    const auto el = ctx->elements();
    std::vector<std::uint64_t> fibre(p, 0);
    std::vector<std::uint32_t> tr(el.size());
    for (std::size_t i = 0; i < el.size(); ++i) {
      tr[i] = trace(el[i]);
      ++fibre[tr[i]];
    }
    for (auto count : fibre) EXPECT_EQ(count, ctx->q() / p) << "q=" << ctx->q();
    for (std::size_t i = 0; i < el.size(); ++i) {
      for (std::size_t j = 0; j < el.size(); ++j) ASSERT_EQ(trace(el[i] + el[j]), (tr[i] + tr[j]) % p);
    }
  }
}

TEST(Frobenius, Examples) {
  const auto f4 = FieldContext::make(2, 2);
  EXPECT_EQ(frobenius(f4->element({0, 1})), f4->element({1, 1}));
  const auto f27 = FieldContext::make(3, 3);
  for (std::int64_t a = 0; a < 3; ++a) EXPECT_EQ(frobenius(f27->from_int(a)), f27->from_int(a));
  for (const auto& x : f27->elements()) EXPECT_EQ(frobenius(frobenius(frobenius(x))), x);
}

TEST(Labels, RoundTrip) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {3, 3}, {5, 2}, {7, 1}}) {
    const auto ctx = FieldContext::make(p, m);
    for (std::uint64_t i = 0; i < ctx->q(); ++i) EXPECT_EQ(label(ctx->unlabel(i)), i);
  }
}

TEST(PrimitiveElement, GeneratesMultiplicativeGroup) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {7, 2}}) {
    const auto ctx = FieldContext::make(p, m);
    const auto g = primitive_element(ctx);
    std::set<std::uint64_t> seen;
    FieldElement cur = ctx->one();
    for (std::uint64_t j = 0; j + 1 < ctx->q(); ++j) {
      seen.insert(label(cur));
      cur = cur * g;
    }
    EXPECT_EQ(seen.size(), ctx->q() - 1);
    EXPECT_EQ(seen.count(0), 0u);
  }
}

}  // namespace
}  // namespace mubkit
