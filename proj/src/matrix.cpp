#include "mdslab/matrix.hpp"

#include <sstream>

namespace mdslab {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::from_values(FieldPtr field, std::size_t rows, std::size_t cols,
                           std::span<const std::uint32_t> values) {
  if (values.size() != rows * cols) fail(ErrorKind::LengthMismatch, "entry count does not match shape");
  Matrix m(std::move(field), rows, cols);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= m.field().q())
      fail(ErrorKind::EncodingOutOfRange,
           "encoding " + std::to_string(values[i]) + " out of range for q=" + std::to_string(m.field().q()));
    m.data_[i] = Gf(values[i]);
  }
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorKind::LengthMismatch, "ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::from_columns(FieldPtr field, const std::vector<Vec>& columns, std::size_t rows) {
  Matrix m(std::move(field), rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) fail(ErrorKind::LengthMismatch, "ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = kOne;
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> indices) const {
  Matrix out(field_, rows_, indices.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < indices.size(); ++j) out(r, j) = (*this)(r, indices[j]);
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
  Matrix out(field_, indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i)
    std::copy(row(indices[i]).begin(), row(indices[i]).end(), out.row(i).begin());
  return out;
}

Matrix Matrix::column_block(std::size_t first, std::size_t count) const {
  Matrix out(field_, rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < count; ++j) out(r, j) = (*this)(r, first + j);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) fail(ErrorKind::LengthMismatch, "matrix product shape mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < cols_; ++i) {
      const Gf a = (*this)(r, i);
      if (!a.is_zero()) axpy(*field_, a, rhs.row(i), out.row(r));
    }
  return out;
}

Vec Matrix::apply(std::span<const Gf> v) const {
  if (v.size() != cols_) fail(ErrorKind::LengthMismatch, "matrix-vector shape mismatch");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(*field_, row(r), v);
  return out;
}

Vec Matrix::combine_rows(std::span<const Gf> coeffs) const {
  if (coeffs.size() != rows_) fail(ErrorKind::LengthMismatch, "coefficient count mismatch");
  Vec out(cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (!coeffs[r].is_zero()) axpy(*field_, coeffs[r], row(r), out);
  return out;
}

void Matrix::append_row(std::span<const Gf> r) {
  if (rows_ == 0 && data_.empty() && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) fail(ErrorKind::LengthMismatch, "row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix Matrix::hstack(const Matrix& rhs) const {
  if (rows_ != rhs.rows_) fail(ErrorKind::LengthMismatch, "hstack row mismatch");
  Matrix out(field_, rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::copy(row(r).begin(), row(r).end(), out.row(r).begin());
    std::copy(rhs.row(r).begin(), rhs.row(r).end(), out.row(r).begin() + cols_);
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& rhs) const {
  if (cols_ != rhs.cols_) fail(ErrorKind::LengthMismatch, "vstack column mismatch");
  Matrix out(field_, rows_ + rhs.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(rhs.data_.begin(), rhs.data_.end(), out.data_.begin() + data_.size());
  return out;
}

std::vector<std::uint32_t> Matrix::values() const { return encodings(data_); }

std::string Matrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c).value;
    out << '\n';
  }
  return out.str();
}

Gf dot(const Field& f, std::span<const Gf> a, std::span<const Gf> b) {
  Gf acc = kZero;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.fma(a[i], b[i], acc);
  return acc;
}

void axpy(const Field& f, Gf a, std::span<const Gf> x, std::span<Gf> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = f.fma(a, x[i], y[i]);
}

bool is_zero(std::span<const Gf> v) noexcept {
  for (auto x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::size_t count_zeros(std::span<const Gf> v) noexcept {
  std::size_t n = 0;
  for (auto x : v) n += x.is_zero();
  return n;
}

Vec normalize_projective(const Field& f, Vec v) {
  for (auto x : v) {
    if (!x.is_zero()) {
      const Gf s = f.inv(x);
      for (auto& y : v) y = f.mul(s, y);
      break;
    }
  }
  return v;
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = kOne;
  return v;
}

std::vector<std::uint32_t> encodings(std::span<const Gf> v) {
  std::vector<std::uint32_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].value;
  return out;
}

}  // namespace mdslab
