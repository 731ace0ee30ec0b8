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

// Phase states and complete sets of mutually unbiased bases.
//
//   pegg_barnett_basis  ordinary DFT phase states over Z_q
//   mub_field           |theta_b^a> = q^-1/2 sum_n psi_k(n) kappa(a n^2 + b n) |n>,  p odd
//   mub_ring            |theta_b^a> = 2^-m/2 sum_{n in T_m} psi~_k(n) kappa~((a + 2b) n) |n>
//
// Field bases are indexed by the canonical labels of a, b and n. Ring bases
// are indexed by Teichmuller positions. Every MubSet lists the q "a" bases in
// ascending index order followed by the computational basis.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mubkit/characters.hpp"
#include "mubkit/common.hpp"
#include "mubkit/finite_field.hpp"
#include "mubkit/galois_ring.hpp"
#include "mubkit/parallel.hpp"
#include "mubkit/report.hpp"

namespace mubkit {

class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<Complex> amps) : amps_(std::move(amps)) {}

  std::size_t dim() const { return amps_.size(); }
  const std::vector<Complex>& amps() const { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

  bool operator==(const StateVector&) const = default;

 private:
  std::vector<Complex> amps_;
};

// <a|b>, conjugate-linear in the first argument.
inline Complex inner(const StateVector& a, const StateVector& b) {
  require(a.dim() == b.dim(), "inner product of vectors with different dimensions");
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

struct Basis {
  // Index of the basis (label of a, or Teichmuller position); empty for the
  // computational basis.
  std::optional<std::uint64_t> a;
  std::uint64_t k = 0;
  std::vector<StateVector> vectors;
  // Phase angle attached to each vector (theta_b = theta_0 + 2 pi b / q).
  std::vector<double> phases;

  std::size_t dim() const { return vectors.empty() ? 0 : vectors.front().dim(); }
};

enum class MubKind { field, ring, custom };

inline std::string to_string(MubKind k) {
  switch (k) {
    case MubKind::field: return "field";
    case MubKind::ring: return "ring";
    case MubKind::custom: return "custom";
  }
  return "custom";
}

struct MubSet {
  std::size_t dim = 0;
  MubKind kind = MubKind::custom;
  std::vector<Basis> bases;
  std::uint64_t k = 0;
  FieldPtr field;  // set for MubKind::field
  RingPtr ring;    // set for MubKind::ring

  // Basis with the given index a (not the computational one).
  const Basis& basis(std::uint64_t a) const {
    for (const auto& b : bases) {
      if (b.a && *b.a == a) return b;
    }
    throw InputError("no basis with index a=" + std::to_string(a));
  }
};

namespace detail {

inline std::vector<double> default_phases(std::size_t q, double theta0 = 0.0) {
  std::vector<double> out(q);
  for (std::size_t b = 0; b < q; ++b) out[b] = theta0 + kTwoPi * static_cast<double>(b) / static_cast<double>(q);
  return out;
}

inline void assert_unit(const StateVector& v) {
  ensure(std::abs(v.norm() - 1.0) <= kConstructionTol, "constructed state is not normalised");
}

}  // namespace detail

inline Basis computational_basis(std::size_t q) {
  require(q >= 1, "dimension must be positive");
  Basis out;
  out.vectors.reserve(q);
  for (std::size_t n = 0; n < q; ++n) {
    std::vector<Complex> amps(q, Complex{0.0, 0.0});
    amps[n] = 1.0;
    out.vectors.emplace_back(std::move(amps));
  }
  out.phases = detail::default_phases(q);
  return out;
}

// |theta_k> = q^-1/2 sum_n exp(2 pi i k n / q) |n>, theta_k = theta0 + 2 pi k / q.
inline Basis pegg_barnett_basis(std::size_t q, double theta0 = 0.0) {
  require(q >= 2, "Pegg-Barnett basis needs q >= 2");
  const double norm = 1.0 / std::sqrt(static_cast<double>(q));
  Basis out;
  out.a = 0;
  for (std::size_t k = 0; k < q; ++k) {
    std::vector<Complex> amps(q);
    for (std::size_t n = 0; n < q; ++n) {
      amps[n] = norm * root_of_unity(static_cast<std::int64_t>(k * n % q), static_cast<std::int64_t>(q));
    }
    out.vectors.emplace_back(std::move(amps));
    detail::assert_unit(out.vectors.back());
  }
  out.phases = detail::default_phases(q, theta0);
  return out;
}

// Exponent tables shared by the field constructions: trace of x*y by label,
// and the label of n^2.
struct FieldTables {
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::vector<std::uint32_t> trace_of_product;  // q*q, [x*q + y] = tr(x y)
  std::vector<std::uint64_t> square;            // label(n^2)

  explicit FieldTables(const FieldPtr& ctx) : q(ctx->q()), p(ctx->p()), trace_of_product(q * q), square(q) {
    const auto elems = ctx->elements();
    std::vector<std::uint32_t> tr(q);
    for (std::uint64_t i = 0; i < q; ++i) tr[i] = trace(elems[i]);
    for (std::uint64_t x = 0; x < q; ++x) {
      square[x] = label(elems[x] * elems[x]);
      for (std::uint64_t y = x; y < q; ++y) {
        const auto t = tr[label(elems[x] * elems[y])];
        trace_of_product[x * q + y] = t;
        trace_of_product[y * q + x] = t;
      }
    }
  }

  std::uint32_t tr_mul(std::uint64_t x, std::uint64_t y) const { return trace_of_product[x * q + y]; }
  // tr(a n^2 + b n) mod p.
  std::uint32_t quadratic_exponent(std::uint64_t a, std::uint64_t b, std::uint64_t n) const {
    return (tr_mul(a, square[n]) + tr_mul(b, n)) % p;
  }
};

// Traces tr~(t_i t_j) over Teichmuller positions i, j.
struct RingTables {
  std::uint64_t n = 0;
  std::vector<std::uint32_t> trace_of_product;

  explicit RingTables(const RingPtr& ctx) : n(ctx->dim()), trace_of_product(n * n) {
    const auto t = ctx->teichmuller_set();
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::uint64_t j = i; j < n; ++j) {
        const auto v = ring_trace(t[i] * t[j]);
        trace_of_product[i * n + j] = v;
        trace_of_product[j * n + i] = v;
      }
    }
  }

  std::uint32_t tr_mul(std::uint64_t i, std::uint64_t j) const { return trace_of_product[i * n + j]; }
  // tr~((a + 2b) n) mod 4 = tr~(a n) + 2 tr~(b n).
  std::uint32_t exponent(std::uint64_t a, std::uint64_t b, std::uint64_t idx) const {
    return (tr_mul(a, idx) + 2 * tr_mul(b, idx)) & 3u;
  }
};

inline MubSet mub_field(const FieldPtr& ctx, std::uint64_t k = 0) {
  require(ctx != nullptr, "missing field context");
  require(ctx->p() != 2,
          "the quadratic field construction needs odd characteristic; use the Galois-ring construction (gen-ring) "
          "for p = 2");
  const std::uint64_t q = ctx->q();
  require(k < q, "character index k must lie in [0, q)");
  require(q <= (std::uint64_t{1} << 12), "q too large for dense MUB generation");
  const FieldTables tab(ctx);
  const double norm = 1.0 / std::sqrt(static_cast<double>(q));
  const auto qi = static_cast<std::int64_t>(q);
  const auto pi = static_cast<std::int64_t>(ctx->p());

  MubSet set;
  set.dim = q;
  set.kind = MubKind::field;
  set.k = k;
  set.field = ctx;
  set.bases.resize(q);
  parallel_for(q, [&](std::size_t a) {
    Basis& basis = set.bases[a];
    basis.a = a;
    basis.k = k;
    basis.phases = detail::default_phases(q);
    basis.vectors.reserve(q);
    for (std::uint64_t b = 0; b < q; ++b) {
      std::vector<Complex> amps(q);
      for (std::uint64_t n = 0; n < q; ++n) {
        amps[n] = norm * root_of_unity(static_cast<std::int64_t>(k * n % q), qi) *
                  root_of_unity(tab.quadratic_exponent(a, b, n), pi);
      }
      basis.vectors.emplace_back(std::move(amps));
      detail::assert_unit(basis.vectors.back());
    }
  });
  set.bases.push_back(computational_basis(q));
  return set;
}

inline MubSet mub_ring(const RingPtr& ctx, std::uint64_t k = 0) {
  require(ctx != nullptr, "missing ring context");
  const std::uint64_t n = ctx->dim();
  require(k < n, "character index k must lie in [0, 2^m)");
  const RingTables tab(ctx);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  const auto ni = static_cast<std::int64_t>(n);

  MubSet set;
  set.dim = n;
  set.kind = MubKind::ring;
  set.k = k;
  set.ring = ctx;
  set.bases.resize(n);
  parallel_for(n, [&](std::size_t a) {
    Basis& basis = set.bases[a];
    basis.a = a;
    basis.k = k;
    basis.phases = detail::default_phases(n);
    for (std::uint64_t b = 0; b < n; ++b) {
      std::vector<Complex> amps(n);
      for (std::uint64_t idx = 0; idx < n; ++idx) {
        amps[idx] = norm * root_of_unity(static_cast<std::int64_t>(k * idx % n), ni) *
                    root_of_unity(tab.exponent(a, b, idx), 4);
      }
      basis.vectors.emplace_back(std::move(amps));
      detail::assert_unit(basis.vectors.back());
    }
  });
  set.bases.push_back(computational_basis(n));
  return set;
}

struct MubVerification {
  VerificationReport report;
  double max_orthonormality_deviation = 0.0;
  double max_unbiasedness_deviation = 0.0;
  bool pass = true;
};

namespace detail {

inline std::string basis_name(const MubSet& set, std::size_t i) {
  char buf[32];
  if (set.bases[i].a) std::snprintf(buf, sizeof(buf), "a%04llu", static_cast<unsigned long long>(*set.bases[i].a));
  else std::snprintf(buf, sizeof(buf), "comp");
  return buf;
}

inline std::string indexed(const char* prefix, std::size_t i) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s%04zu", prefix, i);
  return buf;
}

}  // namespace detail

// Checks within-basis orthonormality and cross-basis unbiasedness. One check
// per basis ("max |<u|v> - delta|") and one per basis pair (the cross
// magnitude furthest from 1/sqrt(q), compared against 1/sqrt(q)).
inline MubVerification verify_mub(const MubSet& set, double tol = kVerifyTol) {
  require(!set.bases.empty(), "empty MUB set");
  const std::size_t q = set.bases.front().dim();
  for (const auto& b : set.bases) {
    require(b.vectors.size() == q, "basis does not contain exactly dim vectors");
    for (const auto& v : b.vectors) require(v.dim() == q, "dimension mismatch inside MUB set");
  }
  const std::size_t nb = set.bases.size();
  const double target = 1.0 / std::sqrt(static_cast<double>(q));

  std::vector<double> ortho(nb, 0.0);
  parallel_for(nb, [&](std::size_t i) {
    const auto& vs = set.bases[i].vectors;
    double worst = 0.0;
    for (std::size_t b = 0; b < q; ++b) {
      for (std::size_t d = b; d < q; ++d) {
        const Complex g = inner(vs[b], vs[d]);
        worst = std::max(worst, std::abs(g - Complex(b == d ? 1.0 : 0.0, 0.0)));
      }
    }
    ortho[i] = worst;
  });

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = i + 1; j < nb; ++j) pairs.emplace_back(i, j);
  }
  std::vector<double> worst_mag(pairs.size(), target);
  parallel_for(pairs.size(), [&](std::size_t t) {
    const auto& u = set.bases[pairs[t].first].vectors;
    const auto& v = set.bases[pairs[t].second].vectors;
    double worst_dev = -1.0, worst = target;
    for (const auto& x : u) {
      for (const auto& y : v) {
        const double mag = std::abs(inner(x, y));
        if (std::abs(mag - target) > worst_dev) {
          worst_dev = std::abs(mag - target);
          worst = mag;
        }
      }
    }
    worst_mag[t] = worst;
  });

  MubVerification out;
  for (std::size_t i = 0; i < nb; ++i) {
    out.report.add("mub/basis-" + detail::basis_name(set, i) + "-orthonormal", "orthogonality within a basis",
                   ortho[i], 0.0, tol);
    out.max_orthonormality_deviation = std::max(out.max_orthonormality_deviation, ortho[i]);
  }
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    out.report.add(
        "mub/pair-" + detail::basis_name(set, pairs[t].first) + "-" + detail::basis_name(set, pairs[t].second) +
            "-unbiased",
        "cross-basis overlap magnitude 1/sqrt(q)", worst_mag[t], target, tol);
    out.max_unbiasedness_deviation = std::max(out.max_unbiasedness_deviation, std::abs(worst_mag[t] - target));
  }
  out.pass = out.report.all_pass();
  return out;
}

}  // namespace mubkit
