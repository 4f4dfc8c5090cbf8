// Copyright 2026 The cfft Authors
//
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cfft/galois.hpp"

namespace cfft {

// Dense GF(2) matrix with 64-bit packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(size_t rows, size_t cols);

  static BitMatrix identity(size_t n);
  // Each string is a row of '0'/'1' characters.
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  bool get(size_t r, size_t c) const { return (row_ptr(r)[c >> 6] >> (c & 63)) & 1u; }
  void set(size_t r, size_t c, bool v = true) {
    uint64_t& w = row_ptr(r)[c >> 6];
    const uint64_t bit = uint64_t{1} << (c & 63);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(size_t r, size_t c) { row_ptr(r)[c >> 6] ^= uint64_t{1} << (c & 63); }

  size_t row_popcount(size_t r) const;
  size_t col_popcount(size_t c) const;
  size_t popcount() const;
  bool row_is_zero(size_t r) const { return row_popcount(r) == 0; }
  bool col_is_zero(size_t c) const;
  std::vector<uint32_t> row_ones(size_t r) const;
  // Hamming distance between two rows.
  size_t row_distance(size_t a, size_t b) const;
  // XOR row `src` into row `dst`.
  void add_row(size_t dst, size_t src);

  // Additions for row-by-row accumulation: sum of (popcount - 1) over nonzero rows.
  size_t naive_additions() const;

  BitMatrix transpose() const;
  BitMatrix multiply(const BitMatrix& rhs) const;
  BitMatrix select_rows(const std::vector<size_t>& keep) const;
  BitMatrix select_cols(const std::vector<size_t>& keep) const;

  // y = M x with x over GF(2^m); adds counted into `adds` when given.
  std::vector<FieldElement> apply(const std::vector<FieldElement>& x, uint64_t* adds = nullptr) const;

  std::vector<std::string> to_strings() const;

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  uint64_t* row_ptr(size_t r) { return data_.data() + r * words_; }
  const uint64_t* row_ptr(size_t r) const { return data_.data() + r * words_; }

  size_t rows_ = 0;
  size_t cols_ = 0;
  size_t words_ = 0;
  std::vector<uint64_t> data_;
};

}  // namespace cfft
