#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mdslab/field.hpp"

namespace mdslab {

using Vec = std::vector<Gf>;

/// Dense row-major matrix over a finite field.
///
/// Zero-row matrices are allowed so that the basis of the zero subspace is an
/// ordinary value.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  /// Builds from raw encodings; throws EncodingOutOfRange on invalid entries.
  static Matrix from_values(FieldPtr field, std::size_t rows, std::size_t cols,
                            std::span<const std::uint32_t> values);
  static Matrix from_rows(FieldPtr field, const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(FieldPtr field, const std::vector<Vec>& columns, std::size_t rows);
  static Matrix identity(FieldPtr field, std::size_t n);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Gf operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Gf& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  std::span<const Gf> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<Gf> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
  Vec column(std::size_t c) const;

  Matrix select_columns(std::span<const std::size_t> indices) const;
  Matrix select_rows(std::span<const std::size_t> indices) const;
  /// Columns [first, first + count).
  Matrix column_block(std::size_t first, std::size_t count) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  /// Matrix-vector product M·v.
  Vec apply(std::span<const Gf> v) const;
  /// Row-vector product a·M (a linear combination of rows).
  Vec combine_rows(std::span<const Gf> coeffs) const;

  void append_row(std::span<const Gf> r);
  Matrix hstack(const Matrix& rhs) const;
  Matrix vstack(const Matrix& rhs) const;

  std::vector<std::uint32_t> values() const;
  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Gf> data_;
};

Gf dot(const Field& f, std::span<const Gf> a, std::span<const Gf> b);
/// y += a·x
void axpy(const Field& f, Gf a, std::span<const Gf> x, std::span<Gf> y);
bool is_zero(std::span<const Gf> v) noexcept;
std::size_t count_zeros(std::span<const Gf> v) noexcept;
/// Scales v so its first nonzero entry is 1 (projective representative).
Vec normalize_projective(const Field& f, Vec v);
Vec unit_vector(std::size_t n, std::size_t i);
std::vector<std::uint32_t> encodings(std::span<const Gf> v);

}  // namespace mdslab
