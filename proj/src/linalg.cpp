#include "mdslab/linalg.hpp"

#include <algorithm>

namespace mdslab {

RrefResult rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& a = out.reduced;
  const Field& f = m.field();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != r) std::swap_ranges(a.row(pivot).begin(), a.row(pivot).end(), a.row(r).begin());
    const Gf scale = f.inv(a(r, c));
    for (auto& x : a.row(r)) x = f.mul(scale, x);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      axpy(f, f.neg(a(i, c)), a.row(r), a.row(i));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  const Field& f = m.field();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != r) std::swap_ranges(a.row(pivot).begin(), a.row(pivot).end(), a.row(r).begin());
    const Gf scale = f.neg(f.inv(a(r, c)));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c).is_zero()) continue;
      const Gf factor = f.mul(scale, a(i, c));
      auto src = a.row(r).subspan(c);
      auto dst = a.row(i).subspan(c);
      axpy(f, factor, src, dst);
    }
    ++r;
  }
  return r;
}

bool is_invertible(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::NotSquare, "is_invertible needs a square matrix");
  return rank(m) == m.rows();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::NotSquare, "inverse needs a square matrix");
  const std::size_t n = m.rows();
  auto r = rref(m.hstack(Matrix::identity(m.field_ptr(), n)));
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  return r.reduced.column_block(n, n);
}

Matrix nullspace(const Matrix& m) {
  auto r = rref(m);
  const std::size_t cols = m.cols();
  const Field& f = m.field();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  Matrix out(m.field_ptr(), 0, cols);
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols);
    v[free] = kOne;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.reduced(i, free));
    out.append_row(v);
  }
  return out;
}

std::optional<Vec> solve(const Matrix& a, std::span<const Gf> b) {
  if (b.size() != a.rows()) fail(ErrorKind::LengthMismatch, "solve: right-hand side length");
  Matrix aug(a.field_ptr(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), aug.row(r).begin());
    aug(r, a.cols()) = b[r];
  }
  auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.reduced(i, a.cols());
  return x;
}

Subspace Subspace::zero(FieldPtr field, std::size_t ambient_dim) {
  return Subspace(Matrix(std::move(field), 0, ambient_dim), {}, ambient_dim);
}

Subspace Subspace::full(FieldPtr field, std::size_t ambient_dim) {
  std::vector<std::size_t> piv(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) piv[i] = i;
  return Subspace(Matrix::identity(std::move(field), ambient_dim), std::move(piv), ambient_dim);
}

Subspace Subspace::from_rows(const Matrix& rows) {
  auto r = rref(rows);
  std::vector<std::size_t> keep(r.rank);
  for (std::size_t i = 0; i < r.rank; ++i) keep[i] = i;
  return Subspace(r.reduced.select_rows(keep), std::move(r.pivots), rows.cols());
}

Subspace Subspace::from_vectors(FieldPtr field, std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  return from_rows(Matrix::from_rows(std::move(field), vectors, ambient_dim));
}

bool Subspace::contains(std::span<const Gf> vec) const {
  if (vec.size() != ambient_) fail(ErrorKind::LengthMismatch, "vector length differs from ambient dimension");
  const Field& f = field();
  Vec residue(vec.begin(), vec.end());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const Gf c = residue[pivots_[i]];
    if (!c.is_zero()) axpy(f, f.neg(c), basis_.row(i), residue);
  }
  return is_zero(residue);
}

Subspace subspace_from_rows(const Matrix& m) { return Subspace::from_rows(m); }

namespace {

void check_same_ambient(const Subspace& y, const Subspace& z) {
  if (y.ambient_dim() != z.ambient_dim())
    fail(ErrorKind::AmbientMismatch, "subspaces live in different ambient spaces");
}

}  // namespace

Subspace span_union(const Subspace& y, const Subspace& z) {
  check_same_ambient(y, z);
  return Subspace::from_rows(y.basis().vstack(z.basis()));
}

Subspace intersect(const Subspace& y, const Subspace& z) {
  check_same_ambient(y, z);
  const Field& f = y.field();
  const std::size_t a = y.dim(), b = z.dim();
  if (a == 0 || b == 0) return Subspace::zero(y.field_ptr(), y.ambient_dim());
  // Columns: the Y basis vectors, then the negated Z basis vectors. A kernel
  // vector (alpha, beta) satisfies sum alpha_i y_i = sum beta_j z_j.
  Matrix system(y.field_ptr(), y.ambient_dim(), a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t d = 0; d < y.ambient_dim(); ++d) system(d, i) = y.basis()(i, d);
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t d = 0; d < y.ambient_dim(); ++d) system(d, a + j) = f.neg(z.basis()(j, d));
  Matrix kernel = nullspace(system);
  Matrix vectors(y.field_ptr(), kernel.rows(), y.ambient_dim());
  for (std::size_t r = 0; r < kernel.rows(); ++r)
    for (std::size_t i = 0; i < a; ++i)
      if (!kernel(r, i).is_zero()) axpy(f, kernel(r, i), y.basis().row(i), vectors.row(r));
  return Subspace::from_rows(vectors);
}

Subspace perp(const Subspace& v) {
  if (v.dim() == 0) return Subspace::full(v.field_ptr(), v.ambient_dim());
  return Subspace::from_rows(nullspace(v.basis()));
}

bool contains(const Subspace& v, std::span<const Gf> vec) { return v.contains(vec); }

std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, std::size_t d, std::size_t r) {
  std::vector<Subspace> out;
  if (r > d) return out;
  const std::uint32_t q = field->q();
  std::vector<std::size_t> piv(r);
  for (std::size_t i = 0; i < r; ++i) piv[i] = i;
  while (true) {
    // Free positions: row i, column c > piv[i], c not a pivot.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = piv[i] + 1; c < d; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(i, c);
    std::vector<std::uint32_t> digits(free.size(), 0);
    while (true) {
      Matrix basis(field, r, d);
      for (std::size_t i = 0; i < r; ++i) basis(i, piv[i]) = kOne;
      for (std::size_t t = 0; t < free.size(); ++t) basis(free[t].first, free[t].second) = Gf(digits[t]);
      out.push_back(Subspace::from_rows(basis));
      std::size_t t = free.size();
      while (t > 0) {
        if (++digits[t - 1] < q) break;
        digits[t - 1] = 0;
        --t;
      }
      if (t == 0) break;
    }
    // Next pivot combination in lexicographic order.
    std::size_t i = r;
    while (i > 0 && piv[i - 1] == d - r + i - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < r; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

}  // namespace mdslab
