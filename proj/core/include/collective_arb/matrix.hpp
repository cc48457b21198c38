// Copyright 2026 The collective-arb Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COLLECTIVE_ARB_MATRIX_HPP_
#define COLLECTIVE_ARB_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "collective_arb/rational.hpp"

namespace collective_arb {

// Dense row-major matrix of exact rationals. Agent-by-atom payoffs, exchange
// generators and density vectors all use this one type.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool same_shape(const RationalMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<Rational> row_vector(std::size_t r) const;
  void set_row(std::size_t r, std::span<const Rational> values);

  bool is_zero() const;
  Rational column_sum(std::size_t c) const;
  Rational total() const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& factor);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

  // Frobenius inner product.
  friend Rational inner(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Rank of the matrix whose rows are the given vectors.
std::size_t rank(const std::vector<std::vector<Rational>>& vectors);

// A basis of { x : M x = 0 } for M given by its rows over num_cols columns.
std::vector<std::vector<Rational>> null_space(
    const std::vector<std::vector<Rational>>& rows, std::size_t num_cols);

}  // namespace collective_arb

#endif  // COLLECTIVE_ARB_MATRIX_HPP_
