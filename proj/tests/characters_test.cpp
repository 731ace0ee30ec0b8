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

#include "mubkit/characters.hpp"

namespace mubkit {
namespace {

constexpr double kTol = 1e-12;

void expect_near(Complex got, Complex want, double tol = kTol) {
  EXPECT_NEAR(got.real(), want.real(), tol);
  EXPECT_NEAR(got.imag(), want.imag(), tol);
}

TEST(RootOfUnity, QuarterTurnsAreExact) {
  EXPECT_EQ(root_of_unity(0, 4), Complex(1, 0));
  EXPECT_EQ(root_of_unity(1, 4), Complex(0, 1));
  EXPECT_EQ(root_of_unity(2, 4), Complex(-1, 0));
  EXPECT_EQ(root_of_unity(-1, 4), Complex(0, -1));
  EXPECT_EQ(root_of_unity(7, 2), Complex(-1, 0));
}

TEST(AdditiveCharacter, Examples) {
  const auto f4 = FieldContext::make(2, 2);
  expect_near(additive_character(f4->zero()), 1.0);
  expect_near(additive_character(f4->one()), 1.0);
  expect_near(additive_character(f4->element({0, 1})), -1.0);
}

TEST(AdditiveCharacter, OrthogonalityExhaustive) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {2, 3}, {2, 6}, {3, 1}, {3, 2}, {3, 4}, {5, 2}, {7, 2}}) {
    const auto ctx = FieldContext::make(p, m);
    const auto el = ctx->elements();
    for (const auto& c : el) {
      Complex s{0.0, 0.0};
      for (const auto& x : el) s += additive_character(c, x);
      expect_near(s, c.is_zero() ? static_cast<double>(ctx->q()) : 0.0, 1e-9);
    }
  }
}

TEST(AdditiveCharacter, Homomorphism) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {5, 2}, {7, 2}, {2, 4}}) {
    const auto ctx = FieldContext::make(p, m);
    const auto el = ctx->elements();
    for (const auto& x : el) {
      for (const auto& y : el) expect_near(additive_character(x + y), additive_character(x) * additive_character(y));
    }
  }
}

TEST(LabelCharacter, Examples) {
  for (std::uint64_t n = 0; n < 5; ++n) expect_near(multiplicative_label_character(0, n, 5), 1.0);
  expect_near(multiplicative_label_character(1, 1, 4), Complex(0, 1));
  expect_near(multiplicative_label_character(3, 0, 4), 1.0);
  EXPECT_THROW(multiplicative_label_character(4, 0, 4), InputError);
}

TEST(MultiplicativeCharacter, Examples) {
  const auto f3 = FieldContext::make(3, 1);
  const MultiplicativeCharacter trivial(0, f3);
  const MultiplicativeCharacter quad(1, f3);
  expect_near(trivial(f3->one()), 1.0);
  expect_near(trivial(f3->from_int(2)), 1.0);
  expect_near(quad(f3->one()), 1.0);
  expect_near(quad(f3->from_int(2)), -1.0);
  expect_near(quad(f3->zero()), 0.0);
  EXPECT_THROW(genuine_multiplicative_character(1, f3->zero(), primitive_element(f3)), InputError);
}

TEST(MultiplicativeCharacter, Homomorphism) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {5, 2}, {7, 1}, {2, 3}}) {
    const auto ctx = FieldContext::make(p, m);
    for (std::uint64_t k = 0; k + 1 < ctx->q(); ++k) {
      const MultiplicativeCharacter chi(k, ctx);
      for (std::uint64_t i = 1; i < ctx->q(); ++i) {
        for (std::uint64_t j = 1; j < ctx->q(); ++j) {
          const auto x = ctx->unlabel(i), y = ctx->unlabel(j);
          expect_near(chi(x * y), chi(x) * chi(y));
        }
      }
    }
  }
}

TEST(WeilSum, Examples) {
  const auto f3 = FieldContext::make(3, 1);
  const FieldPoly constant{f3->from_int(2)};
  expect_near(weil_sum(constant, f3).value, 3.0 * additive_character(f3->from_int(2)));
  expect_near(weil_sum({f3->zero(), f3->one()}, f3).value, 0.0);
  EXPECT_NEAR(weil_sum({f3->zero(), f3->zero(), f3->one()}, f3).magnitude, std::sqrt(3.0), kTol);
}

TEST(WeilSum, BoundHoldsForMonicPolynomials) {
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    const auto ctx = q == 9 ? FieldContext::make(3, 2) : FieldContext::make(q, 1);
    for (int d : {2, 3}) {
      if (q % static_cast<std::uint32_t>(d) == 0) continue;
      std::uint64_t total = 1;
      for (int i = 0; i < d; ++i) total *= q;
      for (std::uint64_t code = 0; code < total; ++code) {
        FieldPoly f;
        std::uint64_t rest = code;
        for (int i = 0; i < d; ++i, rest /= q) f.push_back(ctx->unlabel(rest % q));
        f.push_back(ctx->one());
        const auto r = weil_sum(f, ctx);
        ASSERT_TRUE(r.bound.has_value());
        EXPECT_TRUE(r.pass) << "q=" << q << " d=" << d << " |W|=" << r.magnitude;
      }
    }
  }
}

TEST(GaussSum, Examples) {
  const auto f5 = FieldContext::make(5, 1);
  const MultiplicativeCharacter trivial5(0, f5);
  expect_near(gauss_sum(trivial5, f5->zero()), 4.0);
  expect_near(gauss_sum(trivial5, f5->one()), -1.0);
  const auto f3 = FieldContext::make(3, 1);
  const Complex g = gauss_sum(MultiplicativeCharacter(1, f3), f3->one());
  EXPECT_NEAR(std::abs(g), std::sqrt(3.0), kTol);
  expect_near(g, Complex(0.0, std::sqrt(3.0)));
}

TEST(GaussSum, FourCaseLaw) {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 25u, 27u}) {
    const auto ctx = q == 9 ? FieldContext::make(3, 2)
                     : q == 25 ? FieldContext::make(5, 2)
                     : q == 27 ? FieldContext::make(3, 3)
                               : FieldContext::make(q, 1);
    const auto g = primitive_element(ctx);
    for (std::uint64_t k = 0; k + 1 < q; ++k) {
      const MultiplicativeCharacter chi(k, g);
      for (std::uint64_t c = 0; c < q; ++c) {
        const double mag = std::abs(gauss_sum(chi, ctx->unlabel(c)));
        EXPECT_NEAR(mag, gauss_sum_expected_magnitude(k == 0, c == 0, q), 1e-9) << "q=" << q << " k=" << k;
      }
    }
  }
}

TEST(GeneralizedGaussSum, Reductions) {
  for (std::uint32_t p : {3u, 5u}) {
    const auto ctx = FieldContext::make(p, 1);
    const FieldPoly id{ctx->zero(), ctx->one()};
    const FieldPoly zero{ctx->zero()};
    const MultiplicativeCharacter chi(1, ctx);
    const MultiplicativeCharacter trivial(0, ctx);
    expect_near(generalized_gauss_sum(id, id, chi, ctx->one()), gauss_sum(chi, ctx->one()));
    expect_near(generalized_gauss_sum(FieldPoly{ctx->one()}, id, trivial, ctx->one()), 0.0);
    expect_near(generalized_gauss_sum(FieldPoly{ctx->one()}, zero, trivial, ctx->one()), static_cast<double>(p));
  }
}

TEST(RingCharacter, Examples) {
  const auto r = RingContext::make(2);
  expect_near(ring_additive_character(r->zero()), 1.0);
  expect_near(ring_additive_character(r->element({0, 1})), Complex(0, -1));
  expect_near(ring_additive_character(r->from_int(2)), 1.0);
}

TEST(RingCharacter, Homomorphism) {
  for (std::uint32_t m = 1; m <= 3; ++m) {
    const auto ctx = RingContext::make(m);
    const auto el = ctx->elements();
    for (const auto& y : el) {
      for (const auto& z : el) {
        expect_near(ring_additive_character(y + z), ring_additive_character(y) * ring_additive_character(z));
      }
    }
  }
}

TEST(RingExponentialSum, Examples) {
  const auto r = RingContext::make(2);
  EXPECT_NEAR(std::abs(ring_exponential_sum(r->zero())), 4.0, kTol);
  EXPECT_NEAR(std::abs(ring_exponential_sum(r->from_int(2))), 0.0, kTol);
  EXPECT_NEAR(std::abs(ring_exponential_sum(r->one())), 2.0, kTol);
}

TEST(RingExponentialSum, TrichotomyExhaustive) {
  for (std::uint32_t m = 1; m <= 4; ++m) {
    const auto ctx = RingContext::make(m);
    for (const auto& y : ctx->elements()) EXPECT_NO_THROW(ring_exponential_sum(y));
  }
}

}  // namespace
}  // namespace mubkit
