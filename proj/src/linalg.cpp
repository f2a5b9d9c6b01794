#include "klein4/linalg.hpp"

#include <bit>
#include <mutex>

namespace klein4 {

uint64_t binomial(int n, int k) {
  static std::vector<std::vector<uint64_t>> table;
  static std::mutex mu;
  if (n < 0 || k < 0 || k > n) return 0;
  std::lock_guard<std::mutex> lock(mu);
  while (int(table.size()) <= n) {
    int row = int(table.size());
    std::vector<uint64_t> r(size_t(row) + 1, 1);
    for (int j = 1; j < row; ++j)
      r[size_t(j)] = table[size_t(row) - 1][size_t(j) - 1] + table[size_t(row) - 1][size_t(j)];
    table.push_back(std::move(r));
  }
  return table[size_t(n)][size_t(k)];
}

// ---------------------------------------------------------------------------
// Gf2Echelon

Gf2Echelon::Gf2Echelon(size_t cols, size_t pivot_limit)
    : cols_(cols), pivot_limit_(pivot_limit), words_((cols + 63) / 64),
      pivot_of_col_(pivot_limit, -1) {}

void Gf2Echelon::reduce(Row& r) const {
  // full reduction: every pivot column is eliminated, unowned columns stay
  for (size_t w = 0; w < words_; ++w) {
    uint64_t pending = r[w];
    while (pending) {
      size_t bit = size_t(std::countr_zero(pending));
      size_t col = 64 * w + bit;
      if (col >= pivot_limit_) return;
      int32_t owner = pivot_of_col_[col];
      if (owner < 0) {
        pending &= pending - 1;
        continue;
      }
      const Row& p = rows_[size_t(owner)];
      for (size_t i = w; i < words_; ++i) r[i] ^= p[i];
      uint64_t mask = bit == 63 ? 0 : ~((uint64_t(2) << bit) - 1);
      pending = r[w] & mask;
    }
  }
}

Gf2Echelon::Insert Gf2Echelon::insert(Row r, Row* tail_out) {
  size_t w = 0;
  while (w < words_) {
    if (r[w] == 0) {
      ++w;
      continue;
    }
    size_t col = 64 * w + size_t(std::countr_zero(r[w]));
    if (col >= pivot_limit_) {
      if (tail_out) *tail_out = std::move(r);
      return Insert::Tail;
    }
    int32_t owner = pivot_of_col_[col];
    if (owner >= 0) {
      const Row& p = rows_[size_t(owner)];
      for (size_t i = w; i < words_; ++i) r[i] ^= p[i];
      continue;
    }
    pivot_of_col_[col] = int32_t(rows_.size());
    rows_.push_back(std::move(r));
    return Insert::Pivot;
  }
  return Insert::Zero;
}

bool Gf2Echelon::contains(Row r) const {
  reduce(r);
  for (uint64_t w : r)
    if (w) return false;
  return true;
}

// ---------------------------------------------------------------------------
// GfkEchelon

GfkEchelon::GfkEchelon(FieldPtr field, size_t cols, size_t pivot_limit)
    : field_(std::move(field)), k_(field_->ext_degree()), cols_(cols),
      pivot_limit_(pivot_limit), stride_((cols + 63) / 64), pivot_of_col_(pivot_limit, -1) {
  // multiply-by-s as a linear map on bit planes: s * t^p = sum_q bit_q t^q
  size_t n = field_->order();
  mask_.assign(n, std::vector<uint16_t>(size_t(k_), 0));
  for (size_t s = 1; s < n; ++s)
    for (int p = 0; p < k_; ++p) {
      uint16_t prod = field_->mul(uint16_t(s), uint16_t(1) << p);
      for (int q = 0; q < k_; ++q)
        if ((prod >> q) & 1) mask_[s][size_t(q)] |= uint16_t(1) << p;
    }
}

void GfkEchelon::row_add(Row& r, size_t col, uint16_t value) const {
  for (int p = 0; p < k_; ++p)
    if ((value >> p) & 1) r[size_t(p) * stride_ + col / 64] ^= uint64_t(1) << (col % 64);
}

uint16_t GfkEchelon::row_get(const Row& r, size_t col) const {
  uint16_t v = 0;
  for (int p = 0; p < k_; ++p)
    v |= uint16_t((r[size_t(p) * stride_ + col / 64] >> (col % 64)) & 1) << p;
  return v;
}

void GfkEchelon::scaled_xor(Row& r, const Row& src, uint16_t s, size_t w0) const {
  const std::vector<uint16_t>& m = mask_[s];
  for (int q = 0; q < k_; ++q) {
    uint64_t* dst = r.data() + size_t(q) * stride_;
    uint16_t pm = m[size_t(q)];
    while (pm) {
      int p = std::countr_zero(pm);
      pm &= uint16_t(pm - 1);
      const uint64_t* sp = src.data() + size_t(p) * stride_;
      for (size_t i = w0; i < stride_; ++i) dst[i] ^= sp[i];
    }
  }
}

void GfkEchelon::scale_row(Row& r, uint16_t s) const {
  const std::vector<uint16_t>& m = mask_[s];
  std::vector<uint64_t> tmp(size_t(k_), 0);
  for (size_t i = 0; i < stride_; ++i) {
    for (int q = 0; q < k_; ++q) {
      uint64_t acc = 0;
      uint16_t pm = m[size_t(q)];
      while (pm) {
        int p = std::countr_zero(pm);
        pm &= uint16_t(pm - 1);
        acc ^= r[size_t(p) * stride_ + i];
      }
      tmp[size_t(q)] = acc;
    }
    for (int q = 0; q < k_; ++q) r[size_t(q) * stride_ + i] = tmp[size_t(q)];
  }
}

int GfkEchelon::first_nonzero_word(const Row& r, size_t from) const {
  for (size_t i = from; i < stride_; ++i) {
    uint64_t any = 0;
    for (int p = 0; p < k_; ++p) any |= r[size_t(p) * stride_ + i];
    if (any) return int(i);
  }
  return -1;
}

void GfkEchelon::reduce(Row& r) const {
  // full reduction: every pivot column is eliminated, unowned columns stay
  for (size_t w = 0; w < stride_; ++w) {
    uint64_t any = 0;
    for (int p = 0; p < k_; ++p) any |= r[size_t(p) * stride_ + w];
    while (any) {
      size_t bit = size_t(std::countr_zero(any));
      size_t col = 64 * w + bit;
      if (col >= pivot_limit_) return;
      int32_t owner = pivot_of_col_[col];
      if (owner < 0) {
        any &= any - 1;
        continue;
      }
      scaled_xor(r, rows_[size_t(owner)], row_get(r, col), w);
      uint64_t mask = bit == 63 ? 0 : ~((uint64_t(2) << bit) - 1);
      any = 0;
      for (int p = 0; p < k_; ++p) any |= r[size_t(p) * stride_ + w];
      any &= mask;
    }
  }
}

GfkEchelon::Insert GfkEchelon::insert(Row r, Row* tail_out) {
  size_t w = 0;
  while (true) {
    int wi = first_nonzero_word(r, w);
    if (wi < 0) return Insert::Zero;
    w = size_t(wi);
    uint64_t any = 0;
    for (int p = 0; p < k_; ++p) any |= r[size_t(p) * stride_ + w];
    size_t col = 64 * w + size_t(std::countr_zero(any));
    if (col >= pivot_limit_) {
      if (tail_out) *tail_out = std::move(r);
      return Insert::Tail;
    }
    int32_t owner = pivot_of_col_[col];
    if (owner >= 0) {
      scaled_xor(r, rows_[size_t(owner)], row_get(r, col), w);
      continue;
    }
    uint16_t lead = row_get(r, col);
    if (lead != 1) scale_row(r, field_->inv(lead));
    pivot_of_col_[col] = int32_t(rows_.size());
    rows_.push_back(std::move(r));
    return Insert::Pivot;
  }
}

bool GfkEchelon::contains(Row r) const {
  reduce(r);
  for (uint64_t w : r)
    if (w) return false;
  return true;
}

// ---------------------------------------------------------------------------
// ScalarEchelon

ScalarEchelon::ScalarEchelon(FieldPtr field, size_t cols, size_t pivot_limit)
    : field_(std::move(field)), cols_(cols), pivot_limit_(pivot_limit),
      pivot_of_col_(pivot_limit, -1) {}

void ScalarEchelon::reduce(Row& r) const {
  // full reduction: every pivot column is eliminated, unowned columns stay
  for (size_t i = 0; i < cols_; ++i) {
    if (r[i].is_zero()) continue;
    if (i >= pivot_limit_) return;
    int32_t owner = pivot_of_col_[i];
    if (owner < 0) continue;
    const Row& p = rows_[size_t(owner)];
    Scalar s = r[i];
    for (size_t j = i; j < cols_; ++j) r[j] = r[j] + s * p[j];
  }
}

ScalarEchelon::Insert ScalarEchelon::insert(Row r, Row* tail_out) {
  size_t i = 0;
  while (i < cols_) {
    if (r[i].is_zero()) {
      ++i;
      continue;
    }
    if (i >= pivot_limit_) {
      if (tail_out) *tail_out = std::move(r);
      return Insert::Tail;
    }
    int32_t owner = pivot_of_col_[i];
    if (owner >= 0) {
      const Row& p = rows_[size_t(owner)];
      Scalar s = r[i];
      for (size_t j = i; j < cols_; ++j) r[j] = r[j] + s * p[j];
      continue;
    }
    Scalar inv = r[i].inverse();
    for (size_t j = i; j < cols_; ++j) r[j] = r[j] * inv;
    pivot_of_col_[i] = int32_t(rows_.size());
    rows_.push_back(std::move(r));
    return Insert::Pivot;
  }
  return Insert::Zero;
}

bool ScalarEchelon::contains(Row r) const {
  reduce(r);
  for (const Scalar& s : r)
    if (!s.is_zero()) return false;
  return true;
}

}  // namespace klein4
