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

// The Galois phase operator Theta = sum_b theta_b |theta_b^a><theta_b^a| with
// theta_b = 2 pi b / q, its matrix-element expansion through the partial sums
//
//   S(n, m) = sum_b b w^tr(b (n - m)),   T(n, m) = sum_b b^2 w^tr(b (n - m)),
//
// the commutator with the number operator N = sum_l l |l><l|, and phase
// statistics of the probe state u_n = exp(i n beta) / sqrt(q).
//
// b, n, m enter as integers through their canonical labels (Teichmuller
// positions for ring bases). Inside traces they are field (ring) elements.

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "mubkit/characters.hpp"
#include "mubkit/common.hpp"
#include "mubkit/finite_field.hpp"
#include "mubkit/galois_ring.hpp"
#include "mubkit/matrix.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/parallel.hpp"
#include "mubkit/report.hpp"

namespace mubkit {

inline constexpr std::uint64_t kMaxOperatorDim = std::uint64_t{1} << 10;

// ---- partial sums -------------------------------------------------------

// S(n, m) = sum_b label(b) w_p^tr(b (n - m)).
inline Complex s_sum(const FieldElement& n, const FieldElement& m) {
  const auto& ctx = n.context();
  const FieldElement d = n - m;
  Complex s{0.0, 0.0};
  for (std::uint64_t b = 0; b < ctx->q(); ++b) {
    s += static_cast<double>(b) * additive_character(ctx->unlabel(b) * d);
  }
  return s;
}

// T(n, m) = sum_b label(b)^2 w_p^tr(b (n - m)).
inline Complex t_sum(const FieldElement& n, const FieldElement& m) {
  const auto& ctx = n.context();
  const FieldElement d = n - m;
  Complex s{0.0, 0.0};
  for (std::uint64_t b = 0; b < ctx->q(); ++b) {
    s += static_cast<double>(b * b) * additive_character(ctx->unlabel(b) * d);
  }
  return s;
}

// Diagonal values: sum of b and of b^2 over 0..q-1.
inline double s_diagonal(std::uint64_t q) { return static_cast<double>(q * (q - 1) / 2); }
inline double t_diagonal(std::uint64_t q) { return static_cast<double>(q * (q - 1) * (2 * q - 1) / 6); }

// Off-diagonal closed forms in x = w_p^tr(n - m), x != 1, valid when b
// ranges over Z_p (m = 1). The "printed" variants are the reference forms
// q/(1-x) and -2qx/(1-x)^2. The "exact" variants are the values of the sums
// over b = 0..q-1: q/(x-1), the negative of the printed S, and
// q^2/(x-1) - 2qx/(x-1)^2, which keeps the q^2 term the printed T drops.
inline Complex s_offdiagonal_printed(Complex x, std::uint64_t q) { return static_cast<double>(q) / (1.0 - x); }
inline Complex s_offdiagonal_exact(Complex x, std::uint64_t q) { return static_cast<double>(q) / (x - 1.0); }
inline Complex t_offdiagonal_printed(Complex x, std::uint64_t q) {
  return -2.0 * static_cast<double>(q) * x / ((1.0 - x) * (1.0 - x));
}
inline Complex t_offdiagonal_exact(Complex x, std::uint64_t q) {
  const auto qd = static_cast<double>(q);
  return qd * qd / (x - 1.0) - 2.0 * qd * x / ((x - 1.0) * (x - 1.0));
}

// Ring analogue of S: sum_b idx(b) i^tr~(2 b d) over Teichmuller b.
inline Complex s_sum_ring(const RingElement& n, const RingElement& m) {
  const auto& ctx = n.context();
  const RingElement d = n - m;
  Complex s{0.0, 0.0};
  const auto t = ctx->teichmuller_set();
  for (std::size_t b = 0; b < t.size(); ++b) s += static_cast<double>(b) * ring_additive_character(2 * (t[b] * d));
  return s;
}

// (4 pi^2 / q^4) q T(n,n) - (8 pi^2 / q^4) S(n,n)^2, the diagonal
// contribution to the phase variance; tends to -2 pi^2 / 3.
inline double diagonal_variance_estimate(std::uint64_t q) {
  require(q >= 3, "diagonal variance estimate needs q >= 3");
  const double qd = static_cast<double>(q);
  const double q4 = qd * qd * qd * qd;
  const double s = s_diagonal(q);
  return 4.0 * kPi * kPi / q4 * qd * t_diagonal(q) - 8.0 * kPi * kPi / q4 * s * s;
}

// ---- the operator -------------------------------------------------------

namespace detail {

inline void check_operator_input(const MubSet& set, std::uint64_t a) {
  require(set.kind == MubKind::field || set.kind == MubKind::ring,
          "phase operator needs a field or ring MUB set");
  require(set.dim <= kMaxOperatorDim, "dimension too large for dense operators");
  const auto& basis = set.basis(a);
  for (const auto& v : basis.vectors) require(std::abs(v.norm() - 1.0) <= kConstructionTol, "non-unit basis vector");
}

}  // namespace detail

// Spectral route: sum_b theta_b |v_b><v_b| with theta_b = 2 pi b / q.
inline OperatorMatrix phase_operator_spectral(const MubSet& set, std::uint64_t a) {
  detail::check_operator_input(set, a);
  const auto& basis = set.basis(a);
  const std::size_t q = set.dim;
  OperatorMatrix theta(q, true);
  for (std::size_t b = 0; b < q; ++b) {
    const double th = kTwoPi * static_cast<double>(b) / static_cast<double>(q);
    const auto& v = basis.vectors[b];
    for (std::size_t r = 0; r < q; ++r) {
      for (std::size_t c = 0; c < q; ++c) theta(r, c) += th * v[r] * std::conj(v[c]);
    }
  }
  return theta;
}

// Expansion route:
//   field: (2 pi / q^2) psi_k(n - m) w_p^tr(a (n^2 - m^2)) S(n, m)
//   ring:  (2 pi / q^2) psi~_k(n - m) i^tr~(a (n - m)) sum_b b i^tr~(2 b (n - m))
inline OperatorMatrix phase_operator_expansion(const MubSet& set, std::uint64_t a) {
  detail::check_operator_input(set, a);
  const std::size_t q = set.dim;
  const auto qi = static_cast<std::int64_t>(q);
  const double pref = kTwoPi / (static_cast<double>(q) * static_cast<double>(q));
  OperatorMatrix theta(q, true);
  if (set.kind == MubKind::field) {
    const auto& ctx = set.field;
    const auto elems = ctx->elements();
    const FieldElement fa = elems[a];
    for (std::size_t n = 0; n < q; ++n) {
      for (std::size_t m = 0; m < q; ++m) {
        const Complex psi = root_of_unity(static_cast<std::int64_t>(set.k) * (static_cast<std::int64_t>(n) -
                                                                              static_cast<std::int64_t>(m)), qi);
        const Complex kap = additive_character(fa * (elems[n] * elems[n] - elems[m] * elems[m]));
        const Complex s = n == m ? Complex(s_diagonal(q), 0.0) : s_sum(elems[n], elems[m]);
        theta(n, m) = pref * psi * kap * s;
      }
    }
  } else {
    const auto t = set.ring->teichmuller_set();
    const RingElement ra = t[a];
    for (std::size_t n = 0; n < q; ++n) {
      for (std::size_t m = 0; m < q; ++m) {
        const Complex psi = root_of_unity(static_cast<std::int64_t>(set.k) * (static_cast<std::int64_t>(n) -
                                                                              static_cast<std::int64_t>(m)), qi);
        const RingElement d = t[n] - t[m];
        const Complex kap = ring_additive_character(ra * d);
        const Complex s = n == m ? Complex(s_diagonal(q), 0.0) : s_sum_ring(t[n], t[m]);
        theta(n, m) = pref * psi * kap * s;
      }
    }
  }
  return theta;
}

struct PhaseOperator {
  OperatorMatrix matrix;
  std::vector<double> eigenvalues;  // theta_b, b = 0..q-1
  double expansion_agreement = 0.0;  // max entrywise |spectral - expansion|
  double max_eigen_residual = 0.0;
  double max_diagonal_deviation = 0.0;  // from pi (q-1) / q
};

// Builds Theta for basis a of a field or ring MUB set and cross-validates the
// spectral and expanded constructions, the eigen-equation and the diagonal.
inline PhaseOperator build_phase_operator(const MubSet& set, std::uint64_t a) {
  PhaseOperator out;
  out.matrix = phase_operator_spectral(set, a);
  const OperatorMatrix expanded = phase_operator_expansion(set, a);
  out.expansion_agreement = max_abs_difference(out.matrix, expanded);
  ensure(out.expansion_agreement <= kVerifyTol, "spectral and expanded phase operators disagree");
  ensure(out.matrix.hermiticity_deviation() <= kConstructionTol, "phase operator is not Hermitian");

  const std::size_t q = set.dim;
  const auto& basis = set.basis(a);
  for (std::size_t b = 0; b < q; ++b) {
    const double th = kTwoPi * static_cast<double>(b) / static_cast<double>(q);
    out.eigenvalues.push_back(th);
    const auto& v = basis.vectors[b].amps();
    const auto tv = out.matrix.apply(v);
    double r2 = 0.0;
    for (std::size_t i = 0; i < q; ++i) r2 += std::norm(tv[i] - th * v[i]);
    out.max_eigen_residual = std::max(out.max_eigen_residual, std::sqrt(r2));
  }
  const double diag = kPi * static_cast<double>(q - 1) / static_cast<double>(q);
  for (std::size_t i = 0; i < q; ++i) {
    out.max_diagonal_deviation = std::max(out.max_diagonal_deviation, std::abs(out.matrix(i, i) - diag));
  }
  ensure(out.max_eigen_residual <= kVerifyTol, "phase-state eigen-equation violated");
  return out;
}

// Theta N - N Theta.
inline OperatorMatrix direct_commutator(const OperatorMatrix& theta) {
  const OperatorMatrix n = number_operator(theta.dim());
  return theta * n - n * theta;
}

// Elements of [Theta, N] from the expansion: (m - n) Theta(n, m), with n, m
// the integer labels. The diagonal is exactly zero.
inline OperatorMatrix commutator_elements(const MubSet& set, std::uint64_t a) {
  const OperatorMatrix expanded = phase_operator_expansion(set, a);
  const std::size_t q = set.dim;
  OperatorMatrix u(q);
  for (std::size_t n = 0; n < q; ++n) {
    for (std::size_t m = 0; m < q; ++m) {
      if (n == m) continue;
      u(n, m) = (static_cast<double>(m) - static_cast<double>(n)) * expanded(n, m);
    }
  }
  return u;
}

// ---- phase statistics ---------------------------------------------------

// u_n = exp(i n beta) / sqrt(q).
inline StateVector phase_probe_state(std::size_t q, double beta) {
  require(std::isfinite(beta), "beta must be finite");
  const double norm = 1.0 / std::sqrt(static_cast<double>(q));
  std::vector<Complex> amps(q);
  for (std::size_t n = 0; n < q; ++n) amps[n] = norm * std::polar(1.0, static_cast<double>(n) * beta);
  return StateVector(std::move(amps));
}

struct PhaseStats {
  double beta = 0.0;
  std::uint64_t a = 0;
  std::uint64_t k = 0;
  std::vector<double> distribution;  // P(b) = |<theta_b|f>|^2
  double expectation = 0.0;
  double variance = 0.0;
  // sum theta_b^2 P(b) - <Theta>^2; equals variance algebraically.
  double variance_identity = 0.0;
};

inline PhaseStats phase_statistics(const MubSet& set, std::uint64_t a, double beta) {
  const auto& basis = set.basis(a);
  const std::size_t q = set.dim;
  const StateVector f = phase_probe_state(q, beta);
  PhaseStats st;
  st.beta = beta;
  st.a = a;
  st.k = set.k;
  st.distribution.resize(q);
  double second = 0.0;
  for (std::size_t b = 0; b < q; ++b) {
    const double th = kTwoPi * static_cast<double>(b) / static_cast<double>(q);
    const double p = std::norm(inner(basis.vectors[b], f));
    st.distribution[b] = p;
    st.expectation += th * p;
    second += th * th * p;
  }
  for (std::size_t b = 0; b < q; ++b) {
    const double th = kTwoPi * static_cast<double>(b) / static_cast<double>(q);
    st.variance += (th - st.expectation) * (th - st.expectation) * st.distribution[b];
  }
  st.variance_identity = second - st.expectation * st.expectation;
  return st;
}

// Number of outcomes with P(b) > 1/q + tol, and the largest P(b).
struct ProbabilityBoundCheck {
  std::size_t violations = 0;
  double max_probability = 0.0;
};

inline ProbabilityBoundCheck probability_bound(const PhaseStats& st, double tol = kVerifyTol) {
  ProbabilityBoundCheck out;
  const double bound = 1.0 / static_cast<double>(st.distribution.size());
  for (double p : st.distribution) {
    out.max_probability = std::max(out.max_probability, p);
    if (p > bound + tol) ++out.violations;
  }
  return out;
}

struct PhaseSweep {
  std::vector<PhaseStats> rows;
  double max_abs_expectation = 0.0;
  // max over the sweep of |<Theta> - pi (q-1) / q|.
  double max_offset_from_diagonal = 0.0;
};

inline PhaseSweep beta_sweep(const MubSet& set, std::uint64_t a, const std::vector<double>& grid) {
  require(!grid.empty(), "beta grid is empty");
  PhaseSweep out;
  out.rows.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { out.rows[i] = phase_statistics(set, a, grid[i]); });
  const double centre = kPi * static_cast<double>(set.dim - 1) / static_cast<double>(set.dim);
  for (const auto& r : out.rows) {
    out.max_abs_expectation = std::max(out.max_abs_expectation, std::abs(r.expectation));
    out.max_offset_from_diagonal = std::max(out.max_offset_from_diagonal, std::abs(r.expectation - centre));
  }
  return out;
}

// Evenly spaced grid of `steps` points on [start, end) (a single point if
// steps == 1).
inline std::vector<double> beta_grid(double start, double end, std::size_t steps) {
  require(steps >= 1, "beta grid needs at least one step");
  require(std::isfinite(start) && std::isfinite(end), "beta range must be finite");
  std::vector<double> g(steps);
  for (std::size_t i = 0; i < steps; ++i) g[i] = start + (end - start) * static_cast<double>(i) / static_cast<double>(steps);
  return g;
}

// One row per (beta, b): beta,b,probability,expectation,variance.
inline std::string sweep_csv(const PhaseSweep& sweep) {
  std::string out = "beta,b,probability,expectation,variance\n";
  for (const auto& r : sweep.rows) {
    for (std::size_t b = 0; b < r.distribution.size(); ++b) {
      out += format_double(r.beta) + "," + std::to_string(b) + "," + format_double(r.distribution[b]) + "," +
             format_double(r.expectation) + "," + format_double(r.variance) + "\n";
    }
  }
  return out;
}

}  // namespace mubkit
