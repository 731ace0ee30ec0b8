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

// Generalised Bell bases of two q-level systems:
//
//   fourier  |B_{h,k}>    = q^-1/2 sum_n w_q^(k n) |n, n+h>
//   field    |B^a_{h,b}>  = q^-1/2 sum_n w_p^tr(a n^2 + b n) |n, n+h>      (p odd)
//   ring     |B^a_{h,b}>  = 2^-m/2 sum_{n in T_m} i^tr~((a + 2b) n) |n, n+h>
//
// n + h is integer addition mod q on basis indices unless ShiftMode::field is
// requested. Amplitudes are stored row-major: index(n, n') = n q + n'.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <utility>
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

class BipartiteState {
 public:
  BipartiteState() = default;
  BipartiteState(std::size_t q, std::vector<Complex> amps) : q_(q), amps_(std::move(amps)) {
    require(amps_.size() == q_ * q_, "bipartite state needs q^2 amplitudes");
  }

  static BipartiteState product(const StateVector& x, const StateVector& y) {
    require(x.dim() == y.dim(), "product of states with different dimensions");
    const std::size_t q = x.dim();
    std::vector<Complex> amps(q * q);
    for (std::size_t n = 0; n < q; ++n) {
      for (std::size_t j = 0; j < q; ++j) amps[n * q + j] = x[n] * y[j];
    }
    return {q, std::move(amps)};
  }

  std::size_t q() const { return q_; }
  const std::vector<Complex>& amps() const { return amps_; }
  const Complex& operator()(std::size_t n, std::size_t j) const { return amps_[n * q_ + j]; }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

 private:
  std::size_t q_ = 0;
  std::vector<Complex> amps_;
};

inline Complex inner(const BipartiteState& a, const BipartiteState& b) {
  require(a.q() == b.q(), "inner product of states with different dimensions");
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.amps().size(); ++i) s += std::conj(a.amps()[i]) * b.amps()[i];
  return s;
}

enum class ShiftMode { integer, field };

namespace detail {

inline BipartiteState shifted_state(std::size_t q, std::size_t h, const std::vector<Complex>& phase,
                                    const std::vector<std::size_t>& partner) {
  std::vector<Complex> amps(q * q, Complex{0.0, 0.0});
  const double norm = 1.0 / std::sqrt(static_cast<double>(q));
  for (std::size_t n = 0; n < q; ++n) amps[n * q + partner[n]] = norm * phase[n];
  (void)h;
  BipartiteState s(q, std::move(amps));
  ensure(std::abs(s.norm() - 1.0) <= kConstructionTol, "Bell-type state is not normalised");
  return s;
}

inline std::vector<std::size_t> integer_shift(std::size_t q, std::size_t h) {
  std::vector<std::size_t> out(q);
  for (std::size_t n = 0; n < q; ++n) out[n] = (n + h) % q;
  return out;
}

}  // namespace detail

inline BipartiteState bell_fourier(std::size_t q, std::size_t h, std::size_t k) {
  require(q >= 2, "Bell states need q >= 2");
  require(h < q && k < q, "h and k must lie in [0, q)");
  std::vector<Complex> phase(q);
  for (std::size_t n = 0; n < q; ++n) {
    phase[n] = root_of_unity(static_cast<std::int64_t>(k * n % q), static_cast<std::int64_t>(q));
  }
  return detail::shifted_state(q, h, phase, detail::integer_shift(q, h));
}

inline BipartiteState bell_galois(const FieldPtr& ctx, std::uint64_t h, std::uint64_t a, std::uint64_t b,
                                  ShiftMode shift = ShiftMode::integer) {
  require(ctx != nullptr, "missing field context");
  require(ctx->p() != 2, "field Bell states need odd characteristic; use the ring construction for p = 2");
  const std::uint64_t q = ctx->q();
  require(h < q && a < q && b < q, "h, a, b must lie in [0, q)");
  const FieldElement fa = ctx->unlabel(a), fb = ctx->unlabel(b), fh = ctx->unlabel(h);
  std::vector<Complex> phase(q);
  std::vector<std::size_t> partner = detail::integer_shift(q, h);
  for (std::uint64_t n = 0; n < q; ++n) {
    const FieldElement fn = ctx->unlabel(n);
    phase[n] = additive_character((fa * fn + fb) * fn);
    if (shift == ShiftMode::field) partner[n] = label(fn + fh);
  }
  return detail::shifted_state(q, h, phase, partner);
}

namespace detail {

// Teichmuller index of the element whose residue mod 2 is (t_n + t_h) mod 2.
inline std::vector<std::size_t> ring_field_shift(const RingPtr& ctx, std::size_t h) {
  const auto t = ctx->teichmuller_set();
  auto residue = [](const RingElement& y) {
    std::uint64_t v = 0;
    for (std::size_t j = y.coeffs().size(); j-- > 0;) v = v * 2 + (y.coeffs()[j] & 1u);
    return v;
  };
  std::map<std::uint64_t, std::size_t> by_residue;
  for (std::size_t i = 0; i < t.size(); ++i) by_residue[residue(t[i])] = i;
  std::vector<std::size_t> out(t.size());
  for (std::size_t n = 0; n < t.size(); ++n) out[n] = by_residue.at(residue(t[n]) ^ residue(t[h]));
  return out;
}

}  // namespace detail

// a, b and h are Teichmuller positions.
inline BipartiteState bell_ring(const RingPtr& ctx, std::uint64_t h, std::uint64_t a, std::uint64_t b,
                                ShiftMode shift = ShiftMode::integer) {
  require(ctx != nullptr, "missing ring context");
  const std::uint64_t q = ctx->dim();
  require(h < q && a < q && b < q, "h, a, b must lie in [0, 2^m)");
  const auto t = ctx->teichmuller_set();
  const RingElement y = t[a] + 2 * t[b];
  std::vector<Complex> phase(q);
  for (std::uint64_t n = 0; n < q; ++n) phase[n] = ring_additive_character(y * t[n]);
  const auto partner = shift == ShiftMode::field ? detail::ring_field_shift(ctx, h) : detail::integer_shift(q, h);
  return detail::shifted_state(q, h, phase, partner);
}

using DensityMatrix = OperatorMatrix;

// Reduced state: subsystem 2 traces out the second factor,
// rho(n, n') = sum_j psi(n, j) conj(psi(n', j)); subsystem 1 the first.
inline DensityMatrix partial_trace(const BipartiteState& s, int subsystem) {
  require(subsystem == 1 || subsystem == 2, "subsystem must be 1 or 2");
  const std::size_t q = s.q();
  require(q >= 1 && s.amps().size() == q * q, "malformed bipartite state");
  DensityMatrix rho(q, true);
  for (std::size_t r = 0; r < q; ++r) {
    for (std::size_t c = 0; c < q; ++c) {
      Complex acc{0.0, 0.0};
      for (std::size_t j = 0; j < q; ++j) {
        acc += subsystem == 2 ? s(r, j) * std::conj(s(c, j)) : s(j, r) * std::conj(s(j, c));
      }
      rho(r, c) = acc;
    }
  }
  return rho;
}

// max |rho(r, c) - delta_rc / q|.
inline double distance_from_maximally_mixed(const DensityMatrix& rho) {
  const double diag = 1.0 / static_cast<double>(rho.dim());
  double worst = 0.0;
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      worst = std::max(worst, std::abs(rho(r, c) - Complex(r == c ? diag : 0.0, 0.0)));
    }
  }
  return worst;
}

enum class BellKind { fourier, field, ring };

inline std::string to_string(BellKind k) {
  switch (k) {
    case BellKind::fourier: return "fourier";
    case BellKind::field: return "field";
    case BellKind::ring: return "ring";
  }
  return "fourier";
}

inline BellKind parse_bell_kind(const std::string& s) {
  if (s == "fourier") return BellKind::fourier;
  if (s == "field") return BellKind::field;
  if (s == "ring") return BellKind::ring;
  throw InputError("unknown Bell kind '" + s + "' (expected fourier, field or ring)");
}

struct BellState {
  std::uint64_t h = 0;
  // Basis index within an h-set; always 0 for the Fourier family.
  std::uint64_t a = 0;
  // b for field/ring states, k for Fourier states.
  std::uint64_t b = 0;
  BipartiteState state;
};

struct BellFamily {
  std::size_t q = 0;
  BellKind kind = BellKind::fourier;
  std::vector<BellState> states;
};

inline BellFamily bell_family_fourier(std::size_t q) {
  BellFamily fam{q, BellKind::fourier, {}};
  for (std::size_t h = 0; h < q; ++h) {
    for (std::size_t k = 0; k < q; ++k) fam.states.push_back({h, 0, k, bell_fourier(q, h, k)});
  }
  return fam;
}

inline BellFamily bell_family_galois(const FieldPtr& ctx, ShiftMode shift = ShiftMode::integer) {
  const std::size_t q = ctx->q();
  BellFamily fam{q, BellKind::field, {}};
  fam.states.resize(q * q * q);
  parallel_for(q, [&](std::size_t h) {
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) fam.states[(h * q + a) * q + b] = {h, a, b, bell_galois(ctx, h, a, b, shift)};
    }
  });
  return fam;
}

inline BellFamily bell_family_ring(const RingPtr& ctx, ShiftMode shift = ShiftMode::integer) {
  const std::size_t q = ctx->dim();
  BellFamily fam{q, BellKind::ring, {}};
  fam.states.resize(q * q * q);
  parallel_for(q, [&](std::size_t h) {
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) fam.states[(h * q + a) * q + b] = {h, a, b, bell_ring(ctx, h, a, b, shift)};
    }
  });
  return fam;
}

struct EntangledVerification {
  VerificationReport report;
  double max_orthonormality_deviation = 0.0;
  double max_unbiasedness_deviation = 0.0;
  double max_cross_h_overlap = 0.0;
  double max_entanglement_distance = 0.0;
  bool pass = true;
};

namespace detail {

inline std::string tag(const char* fmt, std::uint64_t x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), fmt, static_cast<unsigned long long>(x));
  return buf;
}

}  // namespace detail

// Four layers: orthonormality inside each (h, a) basis, unbiasedness between
// bases sharing h, orthogonality between different h, and maximal
// entanglement of every state (both reduced states within tol of I/q).
inline EntangledVerification verify_entangled_family(const BellFamily& fam, double tol = kVerifyTol) {
  require(!fam.states.empty(), "empty Bell family");
  const std::size_t q = fam.q;
  for (const auto& s : fam.states) require(s.state.q() == q, "inconsistent dimensions in Bell family");

  // (h, a) -> state indices, ordered.
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::size_t>> groups;
  std::map<std::uint64_t, std::vector<std::size_t>> by_h;
  for (std::size_t i = 0; i < fam.states.size(); ++i) {
    groups[{fam.states[i].h, fam.states[i].a}].push_back(i);
    by_h[fam.states[i].h].push_back(i);
  }
  const double target = 1.0 / std::sqrt(static_cast<double>(q));
  EntangledVerification out;

  std::vector<std::pair<std::uint64_t, std::uint64_t>> keys;
  for (const auto& [k, _] : groups) keys.push_back(k);

  std::vector<double> ortho(keys.size()), ent(keys.size());
  parallel_for(keys.size(), [&](std::size_t g) {
    const auto& idx = groups.at(keys[g]);
    double worst = 0.0, worst_ent = 0.0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const auto& si = fam.states[idx[i]].state;
      for (std::size_t j = i; j < idx.size(); ++j) {
        const Complex ov = inner(si, fam.states[idx[j]].state);
        worst = std::max(worst, std::abs(ov - Complex(i == j ? 1.0 : 0.0, 0.0)));
      }
      worst_ent = std::max({worst_ent, distance_from_maximally_mixed(partial_trace(si, 1)),
                            distance_from_maximally_mixed(partial_trace(si, 2))});
    }
    ortho[g] = worst;
    ent[g] = worst_ent;
  });
  for (std::size_t g = 0; g < keys.size(); ++g) {
    const std::string base = "bell/" + detail::tag("h%04llu", keys[g].first) + "-" + detail::tag("a%04llu", keys[g].second);
    out.report.add(base + "-orthonormal", "orthonormality of a Bell-type basis", ortho[g], 0.0, tol);
    out.report.add(base + "-maximally-entangled", "reduced state equals I/q", ent[g], 0.0, tol);
    out.max_orthonormality_deviation = std::max(out.max_orthonormality_deviation, ortho[g]);
    out.max_entanglement_distance = std::max(out.max_entanglement_distance, ent[g]);
  }

  // Unbiasedness between distinct a at equal h.
  std::vector<std::pair<std::size_t, std::size_t>> same_h;
  for (std::size_t g1 = 0; g1 < keys.size(); ++g1) {
    for (std::size_t g2 = g1 + 1; g2 < keys.size(); ++g2) {
      if (keys[g1].first == keys[g2].first) same_h.emplace_back(g1, g2);
    }
  }
  std::vector<double> unb(same_h.size());
  parallel_for(same_h.size(), [&](std::size_t t) {
    double worst_dev = -1.0, worst = target;
    for (auto i : groups.at(keys[same_h[t].first])) {
      for (auto j : groups.at(keys[same_h[t].second])) {
        const double mag = std::abs(inner(fam.states[i].state, fam.states[j].state));
        if (std::abs(mag - target) > worst_dev) {
          worst_dev = std::abs(mag - target);
          worst = mag;
        }
      }
    }
    unb[t] = worst;
  });
  for (std::size_t t = 0; t < same_h.size(); ++t) {
    const auto& k1 = keys[same_h[t].first];
    const auto& k2 = keys[same_h[t].second];
    out.report.add("bell/" + detail::tag("h%04llu", k1.first) + "-" + detail::tag("a%04llu", k1.second) + "-" +
                       detail::tag("a%04llu", k2.second) + "-unbiased",
                   "bases with equal shift are mutually unbiased", unb[t], target, tol);
    out.max_unbiasedness_deviation = std::max(out.max_unbiasedness_deviation, std::abs(unb[t] - target));
  }

  // Orthogonality across different h.
  std::vector<std::uint64_t> hs;
  for (const auto& [h, _] : by_h) hs.push_back(h);
  std::vector<std::pair<std::size_t, std::size_t>> hpairs;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) hpairs.emplace_back(i, j);
  }
  std::vector<double> cross(hpairs.size());
  parallel_for(hpairs.size(), [&](std::size_t t) {
    double worst = 0.0;
    for (auto i : by_h.at(hs[hpairs[t].first])) {
      for (auto j : by_h.at(hs[hpairs[t].second])) {
        worst = std::max(worst, std::abs(inner(fam.states[i].state, fam.states[j].state)));
      }
    }
    cross[t] = worst;
  });
  for (std::size_t t = 0; t < hpairs.size(); ++t) {
    out.report.add("bell/" + detail::tag("h%04llu", hs[hpairs[t].first]) + "-" +
                       detail::tag("h%04llu", hs[hpairs[t].second]) + "-orthogonal",
                   "states with different shifts are orthogonal", cross[t], 0.0, tol);
    out.max_cross_h_overlap = std::max(out.max_cross_h_overlap, cross[t]);
  }
  out.pass = out.report.all_pass();
  return out;
}

}  // namespace mubkit
