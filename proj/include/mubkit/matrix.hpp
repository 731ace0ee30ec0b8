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

// Dense complex square matrices for operators and density matrices.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "mubkit/common.hpp"

namespace mubkit {

class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  explicit OperatorMatrix(std::size_t dim, bool hermitian = false)
      : dim_(dim), hermitian_(hermitian), data_(dim * dim, Complex{0.0, 0.0}) {}

  std::size_t dim() const { return dim_; }
  bool hermitian() const { return hermitian_; }
  void set_hermitian(bool h) { hermitian_ = h; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  // max |A(n,m) - conj(A(m,n))|.
  double hermiticity_deviation() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t c = r; c < dim_; ++c) worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
    return worst;
  }

  // max |A(n,m) + conj(A(m,n))|.
  double antihermiticity_deviation() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t c = r; c < dim_; ++c) worst = std::max(worst, std::abs((*this)(r, c) + std::conj((*this)(c, r))));
    }
    return worst;
  }

  Complex trace() const {
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) s += (*this)(i, i);
    return s;
  }

  double max_abs() const {
    double worst = 0.0;
    for (const auto& v : data_) worst = std::max(worst, std::abs(v));
    return worst;
  }

  friend double max_abs_difference(const OperatorMatrix& a, const OperatorMatrix& b) {
    require(a.dim_ == b.dim_, "matrix dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data_.size(); ++i) worst = std::max(worst, std::abs(a.data_[i] - b.data_[i]));
    return worst;
  }

  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    require(a.dim_ == b.dim_, "matrix dimension mismatch");
    OperatorMatrix r(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < a.dim_; ++j) r(i, j) += aik * b(k, j);
      }
    }
    return r;
  }

  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
    require(a.dim_ == b.dim_, "matrix dimension mismatch");
    OperatorMatrix r(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
  }

  std::vector<Complex> apply(const std::vector<Complex>& v) const {
    require(v.size() == dim_, "vector dimension mismatch");
    std::vector<Complex> out(dim_, Complex{0.0, 0.0});
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t c = 0; c < dim_; ++c) out[r] += (*this)(r, c) * v[c];
    }
    return out;
  }

 private:
  std::size_t dim_ = 0;
  bool hermitian_ = false;
  std::vector<Complex> data_;
};

inline OperatorMatrix number_operator(std::size_t q) {
  OperatorMatrix n(q, true);
  for (std::size_t l = 0; l < q; ++l) n(l, l) = static_cast<double>(l);
  return n;
}

}  // namespace mubkit
