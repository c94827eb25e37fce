#ifndef SHIFTLAB_FIELD_HPP
#define SHIFTLAB_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace shiftlab {

/// An element of GF(p), always in [0, p).
using FieldValue = std::uint32_t;

__extension__ typedef unsigned __int128 UInt128;
__extension__ typedef __int128 Int128;

/// Arithmetic in GF(p) for a prime p < 2^31.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  /// Throws std::invalid_argument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t modulus() const { return p_; }

  FieldValue reduce(std::uint64_t x) const {
    // Barrett reduction; exact for every 64-bit x because p < 2^31.
    const std::uint64_t q =
        static_cast<std::uint64_t>((static_cast<UInt128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return static_cast<FieldValue>(r);
  }
  FieldValue from_signed(std::int64_t x) const;

  FieldValue add(FieldValue a, FieldValue b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  FieldValue sub(FieldValue a, FieldValue b) const { return a >= b ? a - b : a + p_ - b; }
  FieldValue neg(FieldValue a) const { return a == 0 ? 0 : p_ - a; }
  FieldValue mul(FieldValue a, FieldValue b) const {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  /// Throws std::domain_error for zero.
  FieldValue inv(FieldValue a) const;

  static bool is_prime(std::uint64_t p);

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  std::uint64_t barrett_;  // floor(2^64 / p)
};

/// Dense row-major matrix over GF(p).
class FieldMatrix {
 public:
  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldValue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldValue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<FieldValue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const FieldValue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Sub-matrix keeping the listed columns, in the listed order.
  FieldMatrix select_columns(std::span<const std::size_t> columns) const;
  FieldMatrix multiply(const FieldMatrix& other) const;

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldValue> data_;
};

struct Echelon {
  std::size_t rank = 0;
  /// Pivot columns in the order they were found (original column indices).
  std::vector<std::size_t> pivot_columns;
};

/**
 * Row echelon form by Gaussian elimination with row operations only.
 *
 * Columns are visited left to right, or in `column_order` when given (only
 * the listed columns take part), and are never swapped, so a column is a pivot column exactly
 * when it is linearly independent of the columns visited before it.  Large
 * matrices are reduced by a team of worker threads; the result does not
 * depend on the thread count.
 */
Echelon row_echelon(const FieldMatrix& matrix);
Echelon row_echelon(const FieldMatrix& matrix, std::span<const std::size_t> column_order);

std::size_t rank(const FieldMatrix& matrix);

}  // namespace shiftlab

#endif  // SHIFTLAB_FIELD_HPP
