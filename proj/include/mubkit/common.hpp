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

#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace mubkit {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Tolerances used throughout. Construction asserts are tighter than the
// verification gate so that build noise never masks an acceptance failure.
inline constexpr double kConstructionTol = 1e-10;
inline constexpr double kVerifyTol = 1e-9;
inline constexpr double kCharacterTol = 1e-12;

// Raised for precondition violations on user-supplied input (bad p, m, k,
// labels, malformed files). The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an internal algebraic identity that must hold by construction
// fails (e.g. a trace leaving the ground ring). Signals a broken context.
class AlgebraError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InputError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw AlgebraError(what);
}

// exp(2*pi*i * num / order), with num reduced mod order first. Quarter turns
// are returned exactly so that {1, i, -1, -i} carry no rounding error.
inline Complex root_of_unity(std::int64_t num, std::int64_t order) {
  if (order <= 0) throw InputError("root_of_unity: order must be positive");
  std::int64_t r = num % order;
  if (r < 0) r += order;
  if ((4 * r) % order == 0) {
    switch ((4 * r) / order) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
      default: break;
    }
  }
  const double angle = kTwoPi * static_cast<double>(r) / static_cast<double>(order);
  return {std::cos(angle), std::sin(angle)};
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// Integer power with an overflow cap; returns 0 if the result exceeds cap.
inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return 0;
    r *= base;
  }
  return r > cap ? 0 : r;
}

}  // namespace mubkit
