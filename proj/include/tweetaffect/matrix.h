//
// Copyright 2026 The tweetaffect Authors
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
//

#ifndef TWEETAFFECT_MATRIX_H_
#define TWEETAFFECT_MATRIX_H_

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace tweetaffect {

// Row-major dense matrix; one row per instance.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  std::span<const double> Row(std::size_t i) const {
    assert(i < rows_);
    return {data_.data() + i * cols_, cols_};
  }
  std::span<double> Row(std::size_t i) {
    assert(i < rows_);
    return {data_.data() + i * cols_, cols_};
  }

  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  // Appends a row; the first row fixes the column count.
  void AppendRow(std::span<const double> row) {
    if (rows_ == 0 && data_.empty()) cols_ = row.size();
    assert(row.size() == cols_);
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

  Matrix SelectRows(std::span<const std::size_t> indices) const {
    Matrix out(indices.size(), cols_);
    for (std::size_t k = 0; k < indices.size(); ++k) {
      const auto src = Row(indices[k]);
      std::copy(src.begin(), src.end(), out.Row(k).begin());
    }
    return out;
  }

  // Stacks `other` below this matrix. Column counts must agree unless one
  // side has no rows.
  void AppendRows(const Matrix& other) {
    if (other.rows_ == 0) return;
    if (rows_ == 0) {
      *this = other;
      return;
    }
    assert(other.cols_ == cols_);
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
  }

  std::span<const double> data() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace tweetaffect

#endif  // TWEETAFFECT_MATRIX_H_
