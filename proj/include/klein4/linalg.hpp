#pragma once

#include <cstdint>
#include <vector>

#include "klein4/field.hpp"

namespace klein4 {

// Binomial coefficients as uint64, memoized.
uint64_t binomial(int n, int k);

// Row-echelon accumulation over GF(2) with bit-packed rows. Pivots are only
// taken in columns < pivot_limit; a row whose reduction has support entirely
// at or beyond pivot_limit is reported as Tail (used for kernel extraction
// from [image | tracker] rows).
class Gf2Echelon {
public:
  using Row = std::vector<uint64_t>;
  enum class Insert { Zero, Pivot, Tail };

  Gf2Echelon(size_t cols, size_t pivot_limit);
  explicit Gf2Echelon(size_t cols) : Gf2Echelon(cols, cols) {}

  static Row zero_row(size_t cols) { return Row((cols + 63) / 64, 0); }
  static void row_flip(Row& r, size_t col) { r[col / 64] ^= uint64_t(1) << (col % 64); }
  static bool row_get(const Row& r, size_t col) { return (r[col / 64] >> (col % 64)) & 1; }

  // reduce r in place against the stored pivots
  void reduce(Row& r) const;
  // on Tail, the reduced row is handed back through tail_out when given
  Insert insert(Row r, Row* tail_out = nullptr);
  bool contains(Row r) const;
  size_t rank() const { return rows_.size(); }
  size_t cols() const { return cols_; }
  const std::vector<Row>& rows() const { return rows_; }

private:
  size_t cols_, pivot_limit_, words_;
  std::vector<Row> rows_;
  std::vector<int32_t> pivot_of_col_;  // column -> row index, -1 if free
};

// The same interface over GF(2^k), rows stored as k bit planes laid out
// consecutively (plane p occupies words [p*stride, (p+1)*stride)).
class GfkEchelon {
public:
  using Row = std::vector<uint64_t>;
  enum class Insert { Zero, Pivot, Tail };

  GfkEchelon(FieldPtr field, size_t cols, size_t pivot_limit);
  GfkEchelon(FieldPtr field, size_t cols) : GfkEchelon(std::move(field), cols, cols) {}

  Row zero_row() const { return Row(size_t(k_) * stride_, 0); }
  void row_add(Row& r, size_t col, uint16_t value) const;  // accumulate
  uint16_t row_get(const Row& r, size_t col) const;

  void reduce(Row& r) const;
  Insert insert(Row r, Row* tail_out = nullptr);
  bool contains(Row r) const;
  size_t rank() const { return rows_.size(); }
  size_t cols() const { return cols_; }
  const std::vector<Row>& rows() const { return rows_; }
  size_t stride() const { return stride_; }

private:
  // r += s * src, starting at word offset w0 within each plane
  void scaled_xor(Row& r, const Row& src, uint16_t s, size_t w0) const;
  void scale_row(Row& r, uint16_t s) const;
  int first_nonzero_word(const Row& r, size_t from) const;

  FieldPtr field_;
  int k_;
  size_t cols_, pivot_limit_, stride_;
  std::vector<Row> rows_;
  std::vector<int32_t> pivot_of_col_;
  // plane transform masks: for scalar s, out plane q = xor of src planes p
  // with bit p set in mask_[s][q]
  std::vector<std::vector<uint16_t>> mask_;
};

// Generic dense echelon over any Scalar field; used for the symbolic
// rational-function checks at small scale.
class ScalarEchelon {
public:
  using Row = std::vector<Scalar>;
  enum class Insert { Zero, Pivot, Tail };

  ScalarEchelon(FieldPtr field, size_t cols, size_t pivot_limit);
  ScalarEchelon(FieldPtr field, size_t cols) : ScalarEchelon(std::move(field), cols, cols) {}

  Row zero_row() const { return Row(cols_, Scalar::zero(field_)); }

  void reduce(Row& r) const;
  Insert insert(Row r, Row* tail_out = nullptr);
  bool contains(Row r) const;
  size_t rank() const { return rows_.size(); }
  size_t cols() const { return cols_; }
  const std::vector<Row>& rows() const { return rows_; }

private:
  FieldPtr field_;
  size_t cols_, pivot_limit_;
  std::vector<Row> rows_;
  std::vector<int32_t> pivot_of_col_;
};

}  // namespace klein4
