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

// Finite fields F_{p^m} realised as F_p[x]/(g) for a monic irreducible g.
//
// Elements are coefficient vectors of length m (low degree first) bound to a
// shared, immutable FieldContext. Every element also has a canonical integer
// label in [0, q): the base-p positional value of its coefficient vector.
// Downstream code uses that label wherever a field element has to act as an
// integer (phase angles, partial sums, computational-basis indices).

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mubkit/common.hpp"

namespace mubkit {

// Polynomial over Z_p, lowest-degree coefficient first.
using Poly = std::vector<std::uint32_t>;

inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

namespace poly {

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Degree of f; -1 for the zero polynomial.
inline int degree(const Poly& f) {
  for (std::size_t i = f.size(); i > 0; --i) {
    if (f[i - 1] != 0) return static_cast<int>(i - 1);
  }
  return -1;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p is prime: a^(p-2).
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0;
    const std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = static_cast<std::uint32_t>((x + p - y) % p);
  }
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
  }
  Poly r(acc.begin(), acc.end());
  trim(r);
  return r;
}

// Remainder of a divided by a nonzero b over Z_p.
inline Poly mod(Poly a, const Poly& b, std::uint32_t p) {
  const int db = degree(b);
  if (db < 0) throw InputError("poly::mod: division by zero polynomial");
  const std::uint64_t lead_inv = inv_mod(b[static_cast<std::size_t>(db)], p);
  trim(a);
  for (int da = degree(a); da >= db; da = degree(a)) {
    const std::uint64_t c = a[static_cast<std::size_t>(da)] * lead_inv % p;
    const std::size_t shift = static_cast<std::size_t>(da - db);
    for (int j = 0; j <= db; ++j) {
      const std::uint64_t t = c * b[static_cast<std::size_t>(j)] % p;
      auto& slot = a[shift + static_cast<std::size_t>(j)];
      slot = static_cast<std::uint32_t>((slot + p - t) % p);
    }
    trim(a);
  }
  return a;
}

inline Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t li = inv_mod(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(c * li % p);
  }
  return a;
}

// base^e mod f over Z_p.
inline Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, base, p), f, p);
    base = mod(mul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

// x^(p^k) mod f, by k successive p-th powers.
inline Poly frobenius_power_of_x(std::uint32_t k, const Poly& f, std::uint32_t p) {
  Poly r = mod(Poly{0, 1}, f, p);
  for (std::uint32_t i = 0; i < k; ++i) r = powmod(r, p, f, p);
  return r;
}

inline std::string to_string(const Poly& f) {
  const int d = degree(f);
  if (d < 0) return "0";
  std::string s;
  for (int i = d; i >= 0; --i) {
    const auto c = f[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (c != 1 || i == 0) s += std::to_string(c);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

}  // namespace poly

namespace detail {

inline std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<std::uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

inline void check_poly_input(const Poly& f, std::uint32_t p) {
  require(is_prime(p), "p=" + std::to_string(p) + " is not prime");
  require(poly::degree(f) >= 1, "polynomial must be nonzero with degree >= 1");
  for (auto c : f) require(c < p, "polynomial coefficients must be reduced mod p");
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool irreducible_by_trial_division(const Poly& f, std::uint32_t p) {
  const int n = poly::degree(f);
  for (int d = 1; 2 * d <= n; ++d) {
    const std::uint64_t count = checked_pow(p, static_cast<unsigned>(d), ~std::uint64_t{0} >> 1);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(static_cast<std::size_t>(d) + 1, 0);
      std::uint64_t v = idx;
      for (int j = 0; j < d; ++j) {
        g[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      if (poly::mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Rabin: f of degree n is irreducible iff x^(p^n) = x mod f and
// gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n.
inline bool irreducible_by_rabin(const Poly& f, std::uint32_t p) {
  const auto n = static_cast<std::uint32_t>(poly::degree(f));
  const Poly x{0, 1};
  if (poly::sub(poly::frobenius_power_of_x(n, f, p), poly::mod(x, f, p), p).size() != 0) {
    return false;
  }
  for (auto r : prime_factors(n)) {
    const Poly h = poly::sub(poly::frobenius_power_of_x(n / r, f, p), x, p);
    if (poly::degree(poly::gcd(f, h, p)) != 0) return false;
  }
  return true;
}

inline Poly make_monic(Poly f, std::uint32_t p) {
  poly::trim(f);
  const std::uint64_t li = poly::inv_mod(f.back(), p);
  for (auto& c : f) c = static_cast<std::uint32_t>(c * li % p);
  return f;
}

}  // namespace detail

inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  detail::check_poly_input(f, p);
  const Poly g = detail::make_monic(f, p);
  const int n = poly::degree(g);
  if (n == 1) return true;
  if (n <= 4) return detail::irreducible_by_trial_division(g, p);
  return detail::irreducible_by_rabin(g, p);
}

// Lexicographically smallest monic irreducible polynomial of degree m over
// Z_p, comparing coefficient sequences from the constant term upward.
inline Poly find_irreducible(std::uint32_t p, std::uint32_t m) {
  require(is_prime(p), "p=" + std::to_string(p) + " is not prime");
  require(m >= 1, "degree m must be >= 1");
  require(checked_pow(p, m, kMaxFieldSize) != 0, "p^m exceeds the supported field size 2^20");
  const std::uint64_t count = checked_pow(p, m, kMaxFieldSize);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    // Constant term is the most significant digit of idx.
    Poly f(m + 1, 0);
    std::uint64_t v = idx;
    for (std::uint32_t j = m; j-- > 0;) {
      f[j] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[m] = 1;
    if (m > 1 && f[0] == 0) continue;
    if (is_irreducible(f, p)) return f;
  }
  throw AlgebraError("find_irreducible: no irreducible polynomial found");
}

class FieldElement;

class FieldContext : public std::enable_shared_from_this<FieldContext> {
 public:
  // Builds F_{p^m}. Without a modulus the lex-smallest irreducible is used.
  static std::shared_ptr<const FieldContext> make(std::uint32_t p, std::uint32_t m,
                                                  std::optional<Poly> modulus = std::nullopt) {
    require(is_prime(p), "p=" + std::to_string(p) + " is not prime");
    require(m >= 1, "degree m must be >= 1");
    const std::uint64_t q = checked_pow(p, m, kMaxFieldSize);
    require(q != 0, "p^m exceeds the supported field size 2^20");
    Poly g = modulus ? *modulus : find_irreducible(p, m);
    poly::trim(g);
    require(poly::degree(g) == static_cast<int>(m), "modulus must have degree exactly m");
    require(g.back() == 1, "modulus must be monic");
    require(is_irreducible(g, p), "modulus " + poly::to_string(g) + " is reducible over Z_p");
    return std::shared_ptr<const FieldContext>(new FieldContext(p, m, q, std::move(g)));
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint64_t q() const { return q_; }
  const Poly& modulus() const { return modulus_; }

  bool operator==(const FieldContext& o) const {
    return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
  }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t a) const;
  FieldElement element(std::vector<std::uint32_t> coeffs) const;
  FieldElement unlabel(std::uint64_t label) const;
  std::vector<FieldElement> elements() const;

 private:
  FieldContext(std::uint32_t p, std::uint32_t m, std::uint64_t q, Poly g)
      : p_(p), m_(m), q_(q), modulus_(std::move(g)) {}

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint64_t q_;
  Poly modulus_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

class FieldElement {
 public:
  FieldElement(FieldPtr ctx, std::vector<std::uint32_t> coeffs)
      : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    require(ctx_ != nullptr, "field element without context");
    require(c_.size() == ctx_->m(), "coefficient vector must have length m");
    for (auto v : c_) require(v < ctx_->p(), "coefficients must be reduced mod p");
  }

  const FieldPtr& context() const { return ctx_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](auto v) { return v == 0; });
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return *a.ctx_ == *b.ctx_ && a.c_ == b.c_;
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    const auto p = a.ctx_->p();
    std::vector<std::uint32_t> r(a.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a.c_[i] + b.c_[i]) % p;
    return {a.ctx_, std::move(r)};
  }

  friend FieldElement operator-(const FieldElement& a) {
    const auto p = a.ctx_->p();
    std::vector<std::uint32_t> r(a.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (p - a.c_[i]) % p;
    return {a.ctx_, std::move(r)};
  }

  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    const auto p = a.ctx_->p();
    Poly prod = poly::mod(poly::mul(a.c_, b.c_, p), a.ctx_->modulus(), p);
    prod.resize(a.ctx_->m(), 0);
    return {a.ctx_, std::move(prod)};
  }

 private:
  void check_same(const FieldElement& o) const {
    require(ctx_ == o.ctx_ || *ctx_ == *o.ctx_, "field elements belong to different contexts");
  }

  FieldPtr ctx_;
  std::vector<std::uint32_t> c_;
};

inline FieldElement FieldContext::zero() const {
  return {shared_from_this(), std::vector<std::uint32_t>(m_, 0)};
}

inline FieldElement FieldContext::one() const {
  std::vector<std::uint32_t> c(m_, 0);
  c[0] = 1;
  return {shared_from_this(), std::move(c)};
}

inline FieldElement FieldContext::from_int(std::int64_t a) const {
  std::vector<std::uint32_t> c(m_, 0);
  const auto p = static_cast<std::int64_t>(p_);
  c[0] = static_cast<std::uint32_t>(((a % p) + p) % p);
  return {shared_from_this(), std::move(c)};
}

inline FieldElement FieldContext::element(std::vector<std::uint32_t> coeffs) const {
  coeffs.resize(m_, 0);
  return {shared_from_this(), std::move(coeffs)};
}

inline FieldElement FieldContext::unlabel(std::uint64_t label) const {
  require(label < q_, "label " + std::to_string(label) + " out of range [0, q)");
  std::vector<std::uint32_t> c(m_);
  for (auto& v : c) {
    v = static_cast<std::uint32_t>(label % p_);
    label /= p_;
  }
  return {shared_from_this(), std::move(c)};
}

inline std::vector<FieldElement> FieldContext::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out.push_back(unlabel(i));
  return out;
}

// Base-p positional label: sum a_j p^j.
inline std::uint64_t label(const FieldElement& x) {
  std::uint64_t v = 0;
  const auto& c = x.coeffs();
  for (std::size_t j = c.size(); j-- > 0;) v = v * x.context()->p() + c[j];
  return v;
}

inline FieldElement pow(FieldElement base, std::uint64_t e) {
  FieldElement r = base.context()->one();
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

inline FieldElement inv(const FieldElement& x) {
  require(!x.is_zero(), "inversion of zero");
  const FieldElement r = pow(x, x.context()->q() - 2);
  ensure((r * x) == x.context()->one(), "inverse check failed");
  return r;
}

inline FieldElement frobenius(const FieldElement& x) { return pow(x, x.context()->p()); }

// tr(x) = x + x^p + ... + x^(p^(m-1)), which must land in the prime field.
inline std::uint32_t trace(const FieldElement& x) {
  FieldElement acc = x;
  FieldElement term = x;
  for (std::uint32_t j = 1; j < x.context()->m(); ++j) {
    term = frobenius(term);
    acc = acc + term;
  }
  const auto& c = acc.coeffs();
  ensure(std::all_of(c.begin() + 1, c.end(), [](auto v) { return v == 0; }),
         "trace left the ground field; modulus is broken");
  return c[0];
}

// Multiplicative order of a nonzero element (divides q-1).
inline std::uint64_t multiplicative_order(const FieldElement& x) {
  require(!x.is_zero(), "order of zero is undefined");
  const std::uint64_t n = x.context()->q() - 1;
  std::uint64_t order = n;
  for (auto r : detail::prime_factors(n)) {
    while (order % r == 0 && pow(x, order / r) == x.context()->one()) order /= r;
  }
  return order;
}

// Generator of F_q^* with the smallest label.
inline FieldElement primitive_element(const FieldPtr& ctx) {
  const std::uint64_t n = ctx->q() - 1;
  for (std::uint64_t i = 1; i < ctx->q(); ++i) {
    FieldElement g = ctx->unlabel(i);
    if (multiplicative_order(g) == n) return g;
  }
  throw AlgebraError("no primitive element found");
}

}  // namespace mubkit
