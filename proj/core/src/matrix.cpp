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

#include "collective_arb/matrix.hpp"

#include <stdexcept>

namespace collective_arb {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
    m.set_row(r, rows[r]);
  }
  return m;
}

std::vector<Rational> RationalMatrix::row_vector(std::size_t r) const {
  auto span = row(r);
  return {span.begin(), span.end()};
}

void RationalMatrix::set_row(std::size_t r, std::span<const Rational> values) {
  if (values.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = values[c];
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

Rational RationalMatrix::column_sum(std::size_t c) const {
  Rational s = 0;
  for (std::size_t r = 0; r < rows_; ++r) s += (*this)(r, c);
  return s;
}

Rational RationalMatrix::total() const {
  Rational s = 0;
  for (const auto& v : data_) s += v;
  return s;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (!same_shape(other)) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (!same_shape(other)) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& factor) {
  for (auto& v : data_) v *= factor;
  return *this;
}

Rational inner(const RationalMatrix& a, const RationalMatrix& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("matrix shape mismatch");
  Rational s = 0;
  for (std::size_t k = 0; k < a.data_.size(); ++k) s += a.data_[k] * b.data_[k];
  return s;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> reduce(std::vector<std::vector<Rational>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const std::vector<std::vector<Rational>>& vectors) {
  if (vectors.empty()) return 0;
  auto m = vectors;
  return reduce(m, m.front().size()).size();
}

std::vector<std::vector<Rational>> null_space(const std::vector<std::vector<Rational>>& rows,
                                              std::size_t num_cols) {
  auto m = rows;
  for (const auto& r : m) {
    if (r.size() != num_cols) throw std::invalid_argument("null_space: ragged rows");
  }
  const auto pivots = reduce(m, num_cols);
  std::vector<bool> is_pivot(num_cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t fc = 0; fc < num_cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> v(num_cols, Rational(0));
    v[fc] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace collective_arb
