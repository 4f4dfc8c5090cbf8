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

#include "cfft/bitmatrix.hpp"

#include <bit>

#include "cfft/error.hpp"

namespace cfft {

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

BitMatrix BitMatrix::identity(size_t n) {
  BitMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  const size_t cols = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorCode::ShapeMismatch, "ragged bit matrix literal");
    for (size_t c = 0; c < cols; ++c) {
      if (rows[r][c] == '1') m.set(r, c);
      else if (rows[r][c] != '0') fail(ErrorCode::ParseError, "bit matrix literal must be 0/1");
    }
  }
  return m;
}

size_t BitMatrix::row_popcount(size_t r) const {
  size_t s = 0;
  const uint64_t* p = row_ptr(r);
  for (size_t w = 0; w < words_; ++w) s += std::popcount(p[w]);
  return s;
}

size_t BitMatrix::col_popcount(size_t c) const {
  size_t s = 0;
  for (size_t r = 0; r < rows_; ++r) s += get(r, c);
  return s;
}

size_t BitMatrix::popcount() const {
  size_t s = 0;
  for (uint64_t w : data_) s += std::popcount(w);
  return s;
}

bool BitMatrix::col_is_zero(size_t c) const {
  for (size_t r = 0; r < rows_; ++r)
    if (get(r, c)) return false;
  return true;
}

std::vector<uint32_t> BitMatrix::row_ones(size_t r) const {
  std::vector<uint32_t> out;
  const uint64_t* p = row_ptr(r);
  for (size_t w = 0; w < words_; ++w) {
    uint64_t v = p[w];
    while (v) {
      out.push_back(static_cast<uint32_t>(w * 64 + std::countr_zero(v)));
      v &= v - 1;
    }
  }
  return out;
}

size_t BitMatrix::row_distance(size_t a, size_t b) const {
  const uint64_t* x = row_ptr(a);
  const uint64_t* y = row_ptr(b);
  size_t d = 0;
  for (size_t w = 0; w < words_; ++w) d += static_cast<size_t>(std::popcount(x[w] ^ y[w]));
  return d;
}

void BitMatrix::add_row(size_t dst, size_t src) {
  uint64_t* d = row_ptr(dst);
  const uint64_t* s = row_ptr(src);
  for (size_t w = 0; w < words_; ++w) d[w] ^= s[w];
}

size_t BitMatrix::naive_additions() const {
  size_t s = 0;
  for (size_t r = 0; r < rows_; ++r) {
    size_t p = row_popcount(r);
    if (p > 0) s += p - 1;
  }
  return s;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (uint32_t c : row_ones(r)) t.set(c, r);
  return t;
}

BitMatrix BitMatrix::multiply(const BitMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(ErrorCode::ShapeMismatch, "bit matrix product shape mismatch");
  BitMatrix out(rows_, rhs.cols_);
  for (size_t r = 0; r < rows_; ++r) {
    uint64_t* d = out.row_ptr(r);
    for (uint32_t k : row_ones(r)) {
      const uint64_t* s = rhs.row_ptr(k);
      for (size_t w = 0; w < out.words_; ++w) d[w] ^= s[w];
    }
  }
  return out;
}

BitMatrix BitMatrix::select_rows(const std::vector<size_t>& keep) const {
  BitMatrix out(keep.size(), cols_);
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= rows_) fail(ErrorCode::IndexOutOfRange, "row index out of range");
    const uint64_t* s = row_ptr(keep[i]);
    uint64_t* d = out.row_ptr(i);
    for (size_t w = 0; w < words_; ++w) d[w] = s[w];
  }
  return out;
}

BitMatrix BitMatrix::select_cols(const std::vector<size_t>& keep) const {
  BitMatrix out(rows_, keep.size());
  for (size_t i = 0; i < keep.size(); ++i)
    if (keep[i] >= cols_) fail(ErrorCode::IndexOutOfRange, "column index out of range");
  for (size_t r = 0; r < rows_; ++r)
    for (size_t i = 0; i < keep.size(); ++i)
      if (get(r, keep[i])) out.set(r, i);
  return out;
}

std::vector<FieldElement> BitMatrix::apply(const std::vector<FieldElement>& x, uint64_t* adds) const {
  if (x.size() != cols_) fail(ErrorCode::ShapeMismatch, "vector length does not match matrix columns");
  std::vector<FieldElement> y(rows_);
  uint64_t count = 0;
  for (size_t r = 0; r < rows_; ++r) {
    const uint64_t* p = row_ptr(r);
    uint32_t acc = 0;
    size_t terms = 0;
    for (size_t w = 0; w < words_; ++w) {
      uint64_t v = p[w];
      while (v) {
        acc ^= x[w * 64 + std::countr_zero(v)].bits;
        ++terms;
        v &= v - 1;
      }
    }
    if (terms > 0) count += terms - 1;
    y[r] = FieldElement(acc);
  }
  if (adds) *adds += count;
  return y;
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out(rows_, std::string(cols_, '0'));
  for (size_t r = 0; r < rows_; ++r)
    for (uint32_t c : row_ones(r)) out[r][c] = '1';
  return out;
}

}  // namespace cfft
