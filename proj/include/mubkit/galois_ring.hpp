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

// The Galois ring R_{4^m} = Z4[x]/(h) for a monic basic primitive h.
//
// Every y in the ring is uniquely a + 2b with a, b in the Teichmuller set
// T_m = (0, 1, xi, ..., xi^(2^m - 2)), xi being the class of x. The position
// of an element inside T_m is used as its computational-basis index by the
// m-qubit constructions.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mubkit/common.hpp"
#include "mubkit/finite_field.hpp"

namespace mubkit {

inline constexpr std::uint32_t kMaxRingDegree = 10;

namespace detail {

// Z4 polynomial product reduced modulo a monic h of degree m.
inline std::vector<std::uint32_t> z4_mulmod(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b,
                                            const Poly& h) {
  const std::size_t m = h.size() - 1;
  std::vector<std::uint32_t> r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) & 3u;
  }
  for (std::size_t d = r.size(); d-- > m;) {
    const std::uint32_t c = r[d];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= m; ++j) {
      r[d - m + j] = (r[d - m + j] + 4u * 4u - c * h[j]) & 3u;
    }
  }
  r.resize(m, 0);
  return r;
}

// Order of x in F_2[x]/(hbar), or 0 if x is not invertible there.
inline std::uint64_t order_of_x_mod2(const Poly& hbar) {
  const auto m = static_cast<std::uint32_t>(poly::degree(hbar));
  const std::uint64_t n = (std::uint64_t{1} << m) - 1;
  const Poly x = poly::mod(Poly{0, 1}, hbar, 2);
  if (x.empty()) return 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (poly::powmod(x, k, hbar, 2) == Poly{1}) return k;
  }
  return 0;
}

inline bool is_primitive_mod2(const Poly& hbar) {
  const int m = poly::degree(hbar);
  if (m < 1 || hbar.back() != 1 || !is_irreducible(hbar, 2)) return false;
  return order_of_x_mod2(hbar) == (std::uint64_t{1} << m) - 1;
}

}  // namespace detail

// Default hbar for each m: x+1, x^2+x+1, x^3+x+1, x^4+x+1, then the
// lex-smallest primitive polynomial over Z2.
inline Poly default_hbar(std::uint32_t m) {
  require(m >= 1 && m <= kMaxRingDegree, "ring degree m must be in [1, 10]");
  switch (m) {
    case 1: return {1, 1};
    case 2: return {1, 1, 1};
    case 3: return {1, 1, 0, 1};
    case 4: return {1, 1, 0, 0, 1};
    default: break;
  }
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f(m + 1, 0);
    std::uint64_t v = idx;
    for (std::uint32_t j = m; j-- > 0;) {
      f[j] = static_cast<std::uint32_t>(v & 1u);
      v >>= 1;
    }
    f[m] = 1;
    if (f[0] == 0) continue;
    if (detail::is_primitive_mod2(f)) return f;
  }
  throw AlgebraError("no primitive polynomial over Z2 found");
}

// Hensel-type lift of a primitive hbar over Z2 to the basic primitive h over
// Z4: write hbar = e - d with e even-power and d odd-power parts, then
// h(x^2) = +-(e(x)^2 - d(x)^2), the sign chosen so that h is monic.
inline Poly lift_basic_primitive(const Poly& hbar_in) {
  Poly hbar = hbar_in;
  poly::trim(hbar);
  for (auto c : hbar) require(c < 2, "hbar coefficients must be in {0,1}");
  require(detail::is_primitive_mod2(hbar), "hbar " + poly::to_string(hbar) + " is not primitive over Z2");
  const std::size_t m = hbar.size() - 1;

  std::vector<std::int64_t> e(m + 1, 0), d(m + 1, 0);
  for (std::size_t i = 0; i <= m; ++i) {
    if (i % 2 == 0) e[i] = hbar[i];
    else d[i] = -static_cast<std::int64_t>(hbar[i]);
  }
  std::vector<std::int64_t> diff(2 * m + 1, 0);
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= m; ++j) diff[i + j] += e[i] * e[j] - d[i] * d[j];
  }
  auto mod4 = [](std::int64_t v) { return static_cast<std::uint32_t>(((v % 4) + 4) % 4); };
  Poly h(m + 1, 0);
  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (i % 2 == 1) ensure(mod4(diff[i]) == 0, "e^2 - d^2 has an odd-power term");
    else h[i / 2] = mod4(diff[i]);
  }
  if (h[m] == 3) {
    for (auto& c : h) c = (4 - c) & 3u;
  }
  ensure(h[m] == 1, "sign resolution did not produce a monic lift");
  for (std::size_t i = 0; i <= m; ++i) ensure(h[i] % 2 == hbar[i], "lift is not congruent to hbar mod 2");

  // h | x^(2^m - 1) - 1 over Z4.
  std::vector<std::uint32_t> acc(m, 0), x(m, 0);
  acc[0] = 1;
  if (m == 1) x[0] = (4 - h[0]) & 3u;
  else x[1] = 1;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << m) - 1; ++k) acc = detail::z4_mulmod(acc, x, h);
  std::vector<std::uint32_t> one(m, 0);
  one[0] = 1;
  ensure(acc == one, "lifted h does not divide x^(2^m-1) - 1 over Z4");
  return h;
}

class RingElement;

class RingContext : public std::enable_shared_from_this<RingContext> {
 public:
  static std::shared_ptr<const RingContext> make(std::uint32_t m, std::optional<Poly> hbar = std::nullopt) {
    require(m >= 1 && m <= kMaxRingDegree, "ring degree m must be in [1, 10]");
    Poly hb = hbar ? *hbar : default_hbar(m);
    poly::trim(hb);
    require(poly::degree(hb) == static_cast<int>(m), "hbar must have degree m");
    Poly h = lift_basic_primitive(hb);
    return std::shared_ptr<const RingContext>(new RingContext(m, std::move(hb), std::move(h)));
  }

  std::uint32_t m() const { return m_; }
  // 2^m, the Hilbert-space dimension of the m-qubit constructions.
  std::uint64_t dim() const { return std::uint64_t{1} << m_; }
  std::uint64_t cardinality() const { return std::uint64_t{1} << (2 * m_); }
  const Poly& h() const { return h_; }
  const Poly& hbar() const { return hbar_; }

  bool operator==(const RingContext& o) const { return m_ == o.m_ && h_ == o.h_; }

  RingElement zero() const;
  RingElement one() const;
  RingElement xi() const;
  RingElement from_int(std::int64_t a) const;
  RingElement element(std::vector<std::uint32_t> coeffs) const;
  RingElement unlabel(std::uint64_t label) const;
  std::vector<RingElement> elements() const;

  // (0, 1, xi, ..., xi^(2^m-2)) in that order.
  std::vector<RingElement> teichmuller_set() const;
  RingElement teichmuller(std::size_t index) const;
  // Position of a ring element (by base-4 label) in T_m, if it belongs to it.
  std::optional<std::size_t> teichmuller_index_of_label(std::uint64_t label) const {
    const auto v = teich_index_[label];
    if (v < 0) return std::nullopt;
    return static_cast<std::size_t>(v);
  }

 private:
  RingContext(std::uint32_t m, Poly hbar, Poly h) : m_(m), hbar_(std::move(hbar)), h_(std::move(h)) {
    const std::size_t n = dim();
    std::vector<std::uint32_t> x(m_, 0), one(m_, 0), cur(m_, 0);
    one[0] = 1;
    if (m_ == 1) x[0] = (4 - h_[0]) & 3u;
    else x[1] = 1;
    teich_.push_back(std::vector<std::uint32_t>(m_, 0));
    cur = one;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      ensure(j == 0 || cur != one, "xi has order smaller than 2^m-1");
      teich_.push_back(cur);
      cur = detail::z4_mulmod(cur, x, h_);
    }
    ensure(cur == one, "xi^(2^m-1) != 1");
    teich_index_.assign(cardinality(), -1);
    for (std::size_t i = 0; i < teich_.size(); ++i) {
      auto& slot = teich_index_[label_of(teich_[i])];
      ensure(slot < 0, "Teichmuller set has repeated elements");
      slot = static_cast<std::int32_t>(i);
    }
  }

  static std::uint64_t label_of(const std::vector<std::uint32_t>& c) {
    std::uint64_t v = 0;
    for (std::size_t j = c.size(); j-- > 0;) v = v * 4 + c[j];
    return v;
  }

  std::uint32_t m_;
  Poly hbar_;
  Poly h_;
  std::vector<std::vector<std::uint32_t>> teich_;
  std::vector<std::int32_t> teich_index_;
};

using RingPtr = std::shared_ptr<const RingContext>;

class RingElement {
 public:
  RingElement(RingPtr ctx, std::vector<std::uint32_t> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    require(ctx_ != nullptr, "ring element without context");
    require(c_.size() == ctx_->m(), "coefficient vector must have length m");
    for (auto v : c_) require(v < 4, "ring coefficients must be reduced mod 4");
  }

  const RingPtr& context() const { return ctx_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  bool is_zero() const {
    for (auto v : c_) {
      if (v != 0) return false;
    }
    return true;
  }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return *a.ctx_ == *b.ctx_ && a.c_ == b.c_;
  }

  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    a.check_same(b);
    std::vector<std::uint32_t> r(a.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a.c_[i] + b.c_[i]) & 3u;
    return {a.ctx_, std::move(r)};
  }

  friend RingElement operator-(const RingElement& a) {
    std::vector<std::uint32_t> r(a.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (4 - a.c_[i]) & 3u;
    return {a.ctx_, std::move(r)};
  }

  friend RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    a.check_same(b);
    return {a.ctx_, detail::z4_mulmod(a.c_, b.c_, a.ctx_->h())};
  }

  friend RingElement operator*(std::int64_t s, const RingElement& a) {
    const auto k = static_cast<std::uint32_t>(((s % 4) + 4) % 4);
    std::vector<std::uint32_t> r(a.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (k * a.c_[i]) & 3u;
    return {a.ctx_, std::move(r)};
  }

 private:
  void check_same(const RingElement& o) const {
    require(ctx_ == o.ctx_ || *ctx_ == *o.ctx_, "ring elements belong to different contexts");
  }

  RingPtr ctx_;
  std::vector<std::uint32_t> c_;
};

inline RingElement RingContext::zero() const { return {shared_from_this(), std::vector<std::uint32_t>(m_, 0)}; }

inline RingElement RingContext::one() const { return teichmuller(1); }

inline RingElement RingContext::xi() const { return m_ == 1 ? teichmuller(1) : teichmuller(2); }

inline RingElement RingContext::from_int(std::int64_t a) const {
  std::vector<std::uint32_t> c(m_, 0);
  c[0] = static_cast<std::uint32_t>(((a % 4) + 4) % 4);
  return {shared_from_this(), std::move(c)};
}

inline RingElement RingContext::element(std::vector<std::uint32_t> coeffs) const {
  coeffs.resize(m_, 0);
  return {shared_from_this(), std::move(coeffs)};
}

inline RingElement RingContext::unlabel(std::uint64_t label) const {
  require(label < cardinality(), "ring label out of range");
  std::vector<std::uint32_t> c(m_);
  for (auto& v : c) {
    v = static_cast<std::uint32_t>(label & 3u);
    label >>= 2;
  }
  return {shared_from_this(), std::move(c)};
}

inline std::vector<RingElement> RingContext::elements() const {
  std::vector<RingElement> out;
  out.reserve(cardinality());
  for (std::uint64_t i = 0; i < cardinality(); ++i) out.push_back(unlabel(i));
  return out;
}

inline RingElement RingContext::teichmuller(std::size_t index) const {
  require(index < teich_.size(), "Teichmuller index out of range");
  return {shared_from_this(), teich_[index]};
}

inline std::vector<RingElement> RingContext::teichmuller_set() const {
  std::vector<RingElement> out;
  out.reserve(teich_.size());
  for (const auto& c : teich_) out.emplace_back(shared_from_this(), c);
  return out;
}

// Base-4 positional label, sum c_j 4^j.
inline std::uint64_t ring_label(const RingElement& y) {
  std::uint64_t v = 0;
  const auto& c = y.coeffs();
  for (std::size_t j = c.size(); j-- > 0;) v = v * 4 + c[j];
  return v;
}

inline std::optional<std::size_t> teichmuller_index(const RingElement& y) {
  return y.context()->teichmuller_index_of_label(ring_label(y));
}

inline RingElement ring_pow(RingElement base, std::uint64_t e) {
  RingElement r = base.context()->one();
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

struct TwoAdic {
  RingElement a;
  RingElement b;
};

// y = a + 2b with a, b in T_m. a is y^(2^m); b is found by scanning T_m.
inline TwoAdic two_adic_decompose(const RingElement& y) {
  const auto& ctx = y.context();
  RingElement a = ring_pow(y, ctx->dim());
  ensure(teichmuller_index(a).has_value(), "y^(2^m) is not in the Teichmuller set");
  const RingElement rest = y - a;
  for (const auto& b : ctx->teichmuller_set()) {
    if (2 * b == rest) return {std::move(a), b};
  }
  throw AlgebraError("no Teichmuller b satisfies 2b = y - a");
}

// sigma(a + 2b) = a^2 + 2b^2.
inline RingElement ring_frobenius(const RingElement& y) {
  const auto [a, b] = two_adic_decompose(y);
  return a * a + 2 * (b * b);
}

// Sum of the Frobenius orbit; must be a constant in Z4.
inline std::uint32_t ring_trace(const RingElement& y) {
  RingElement acc = y;
  RingElement term = y;
  for (std::uint32_t k = 1; k < y.context()->m(); ++k) {
    term = ring_frobenius(term);
    acc = acc + term;
  }
  const auto& c = acc.coeffs();
  for (std::size_t j = 1; j < c.size(); ++j) ensure(c[j] == 0, "ring trace left Z4; ring is broken");
  return c[0];
}

inline std::string to_string(const RingElement& y) {
  std::string s;
  const auto& c = y.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) s += std::to_string(c[i]);
    else {
      if (c[i] != 1) s += std::to_string(c[i]);
      s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace mubkit
