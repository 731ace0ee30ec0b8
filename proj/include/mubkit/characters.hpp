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

// Additive and multiplicative characters, and the exponential sums built on
// them: Weil sums, Gauss sums and the Galois-ring sums Gamma(y).
//
// Two kinds of "multiplicative" character are provided. The label character
// psi_k(n) = exp(2 pi i k n / q) acts on integer labels (it is what the phase
// states use). The genuine character chi_k(g^j) = exp(2 pi i j k / (q-1))
// acts on F_q^* through a discrete-log table and obeys the Gauss-sum laws.
// chi(0) is taken to be 0.

#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mubkit/common.hpp"
#include "mubkit/finite_field.hpp"
#include "mubkit/galois_ring.hpp"

namespace mubkit {

// kappa(x) = w_p^tr(x).
inline Complex additive_character(const FieldElement& x) {
  return root_of_unity(trace(x), x.context()->p());
}

// kappa_c(x) = kappa(c x); c = 0 gives the trivial character.
inline Complex additive_character(const FieldElement& shift, const FieldElement& x) {
  return additive_character(shift * x);
}

inline Complex multiplicative_label_character(std::uint64_t k, std::uint64_t n, std::uint64_t q) {
  require(q >= 1, "q must be positive");
  require(k < q && n < q, "label character arguments must lie in [0, q)");
  return root_of_unity(static_cast<std::int64_t>((k * n) % q), static_cast<std::int64_t>(q));
}

// Discrete-log table for F_q^* relative to a primitive element g.
class DiscreteLog {
 public:
  explicit DiscreteLog(const FieldElement& g) : g_(g), log_(g.context()->q(), -1) {
    const auto& ctx = g.context();
    require(!g.is_zero() && multiplicative_order(g) == ctx->q() - 1, "g is not a primitive element");
    FieldElement cur = ctx->one();
    for (std::uint64_t j = 0; j + 1 < ctx->q(); ++j) {
      log_[label(cur)] = static_cast<std::int64_t>(j);
      cur = cur * g;
    }
  }

  const FieldElement& generator() const { return g_; }

  std::uint64_t operator()(const FieldElement& x) const {
    require(!x.is_zero(), "discrete log of zero");
    const auto v = log_[label(x)];
    ensure(v >= 0, "discrete log table incomplete");
    return static_cast<std::uint64_t>(v);
  }

 private:
  FieldElement g_;
  std::vector<std::int64_t> log_;
};

// chi_k(x) = exp(2 pi i k log_g(x) / (q-1)), chi_k(0) = 0.
class MultiplicativeCharacter {
 public:
  MultiplicativeCharacter(std::uint64_t k, const FieldElement& g) : k_(k), dlog_(g) {
    require(k < g.context()->q() - 1, "character index k must lie in [0, q-1)");
  }
  MultiplicativeCharacter(std::uint64_t k, const FieldPtr& ctx)
      : MultiplicativeCharacter(k, primitive_element(ctx)) {}

  std::uint64_t k() const { return k_; }
  bool trivial() const { return k_ == 0; }

  Complex operator()(const FieldElement& x) const {
    if (x.is_zero()) return {0.0, 0.0};
    const auto order = static_cast<std::int64_t>(dlog_.generator().context()->q() - 1);
    return root_of_unity(static_cast<std::int64_t>((dlog_(x) * k_) % static_cast<std::uint64_t>(order)), order);
  }

 private:
  std::uint64_t k_;
  DiscreteLog dlog_;
};

inline Complex genuine_multiplicative_character(std::uint64_t k, const FieldElement& x, const FieldElement& g) {
  require(!x.is_zero(), "genuine multiplicative character is undefined at 0");
  return MultiplicativeCharacter(k, g)(x);
}

// Polynomial over F_q, lowest degree first.
using FieldPoly = std::vector<FieldElement>;

inline FieldElement evaluate(const FieldPoly& f, const FieldElement& x) {
  FieldElement acc = x.context()->zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

inline int degree(const FieldPoly& f) {
  for (std::size_t i = f.size(); i-- > 0;) {
    if (!f[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

struct SumResult {
  Complex value;
  double magnitude = 0.0;
  // Theoretical bound or exact magnitude the value is compared against.
  std::optional<double> bound;
  bool pass = true;
};

// sum_x kappa(f(x)); for deg f = d >= 1 with gcd(d, q) = 1 the magnitude is
// compared against (d-1) sqrt(q).
inline SumResult weil_sum(const FieldPoly& f, const FieldPtr& ctx, double tol = kVerifyTol) {
  Complex s{0.0, 0.0};
  for (std::uint64_t i = 0; i < ctx->q(); ++i) s += additive_character(evaluate(f, ctx->unlabel(i)));
  SumResult r{s, std::abs(s), std::nullopt, true};
  const int d = degree(f);
  if (d >= 1 && std::gcd(static_cast<std::uint64_t>(d), ctx->q()) == 1) {
    r.bound = (d - 1) * std::sqrt(static_cast<double>(ctx->q()));
    r.pass = r.magnitude <= *r.bound + tol;
  }
  return r;
}

// G(chi, kappa_c) = sum_{x != 0} chi(x) kappa(c x).
inline Complex gauss_sum(const MultiplicativeCharacter& chi, const FieldElement& shift) {
  const auto& ctx = shift.context();
  Complex s{0.0, 0.0};
  for (std::uint64_t i = 1; i < ctx->q(); ++i) {
    const FieldElement x = ctx->unlabel(i);
    s += chi(x) * additive_character(shift, x);
  }
  return s;
}

// The value the four-case law predicts for |G|: q-1, 1, 0 or sqrt(q).
inline double gauss_sum_expected_magnitude(bool chi_trivial, bool kappa_trivial, std::uint64_t q) {
  if (chi_trivial && kappa_trivial) return static_cast<double>(q - 1);
  if (chi_trivial) return 1.0;
  if (kappa_trivial) return 0.0;
  return std::sqrt(static_cast<double>(q));
}

// sum_x chi(f(x)) kappa_c(g(x)), with chi(0) = 0 absorbing zeros of f.
inline Complex generalized_gauss_sum(const FieldPoly& f, const FieldPoly& g, const MultiplicativeCharacter& chi,
                                     const FieldElement& shift) {
  const auto& ctx = shift.context();
  Complex s{0.0, 0.0};
  for (std::uint64_t i = 0; i < ctx->q(); ++i) {
    const FieldElement x = ctx->unlabel(i);
    s += chi(evaluate(f, x)) * additive_character(shift, evaluate(g, x));
  }
  return s;
}

// kappa~(y) = i^tr~(y).
inline Complex ring_additive_character(const RingElement& y) { return root_of_unity(ring_trace(y), 4); }

// Magnitude that |Gamma(y)| must take: 2^m at 0, 0 on 2T_m \ {0}, sqrt(2^m)
// elsewhere.
inline double ring_exponential_sum_expected(const RingElement& y) {
  const auto& ctx = y.context();
  const auto n = static_cast<double>(ctx->dim());
  if (y.is_zero()) return n;
  for (const auto& t : ctx->teichmuller_set()) {
    if (2 * t == y) return 0.0;
  }
  return std::sqrt(n);
}

// Gamma(y) = sum_{u in T_m} kappa~(y u). Throws if |Gamma| breaks the
// trichotomy, since that means the ring construction is wrong.
inline Complex ring_exponential_sum(const RingElement& y, double tol = kVerifyTol) {
  Complex s{0.0, 0.0};
  for (const auto& u : y.context()->teichmuller_set()) s += ring_additive_character(y * u);
  const double expected = ring_exponential_sum_expected(y);
  ensure(std::abs(std::abs(s) - expected) <= tol,
         "|Gamma(" + to_string(y) + ")| = " + std::to_string(std::abs(s)) + " violates the trichotomy");
  return s;
}

}  // namespace mubkit
