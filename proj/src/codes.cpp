#include "mdslab/codes.hpp"

#include <algorithm>

#include "mdslab/enumerate.hpp"
#include "mdslab/kernels.hpp"
#include "mdslab/linalg.hpp"

namespace mdslab {

namespace {

void check_k(const Field& f, std::size_t k) {
  if (k < 2 || k > f.q())
    fail(ErrorKind::BadK, "need 2 <= k <= q, got k=" + std::to_string(k) + " q=" + std::to_string(f.q()));
}

Matrix power_columns(const FieldPtr& field, std::size_t k) {
  const Field& f = *field;
  Matrix m(field, k, f.q());
  for (std::uint32_t j = 0; j < f.q(); ++j) {
    Gf power = kOne;
    for (std::size_t i = 0; i < k; ++i) {
      m(i, j) = power;
      power = f.mul(power, f.element(j));
    }
  }
  return m;
}

bool square_singular(const Field& f, std::vector<Gf> a, std::size_t t) {
  for (std::size_t c = 0; c < t; ++c) {
    std::size_t pivot = t;
    for (std::size_t r = c; r < t; ++r)
      if (!a[r * t + c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == t) return true;
    if (pivot != c)
      for (std::size_t x = c; x < t; ++x) std::swap(a[pivot * t + x], a[c * t + x]);
    const Gf scale = f.neg(f.inv(a[c * t + c]));
    for (std::size_t r = c + 1; r < t; ++r) {
      if (a[r * t + c].is_zero()) continue;
      const Gf factor = f.mul(scale, a[r * t + c]);
      for (std::size_t x = c; x < t; ++x) a[r * t + x] = f.fma(factor, a[c * t + x], a[r * t + x]);
    }
  }
  return false;
}

}  // namespace

CodeMatrix rs_code(const FieldPtr& field, std::size_t k) {
  check_k(*field, k);
  return {power_columns(field, k)};
}

CodeMatrix extended_rs(const FieldPtr& field, std::size_t k) {
  check_k(*field, k);
  Matrix e(field, k, 1);
  e(k - 1, 0) = kOne;
  return {power_columns(field, k).hstack(e)};
}

CodeMatrix hyperoval_code(const FieldPtr& field) {
  if (field->p() != 2) fail(ErrorKind::OddCharacteristic, "hyperovals exist only in characteristic 2");
  if (field->q() < 4) fail(ErrorKind::BadK, "hyperoval code needs q >= 4");
  Matrix extra(field, 3, 2);
  extra(1, 0) = kOne;
  extra(2, 1) = kOne;
  return {power_columns(field, 3).hstack(extra)};
}

MinorsVerdict is_mds_minors(const Matrix& m) {
  MinorsVerdict out;
  out.dependent_columns = kernels::first_dependent_subset(m);
  out.mds = !out.dependent_columns;
  return out;
}

CodewordVerdict is_mds_codewords(const Matrix& m) {
  CodewordVerdict out;
  const std::size_t k = m.rows(), n = m.cols();
  const std::uint32_t q = m.field().q();
  const std::uint64_t primal = projective_count(q, k);
  const std::uint64_t dual = n > k ? projective_count(q, n - k) : 0;
  bool violated = false;
  if (primal <= dual || rank(m) < k) {
    out.route = "primal";
    out.combination = kernels::first_heavy_combination(m, k);
    violated = out.combination.has_value();
  } else {
    // The dual code is spanned by the null space of m. A nonzero dual codeword
    // with at least n-k zeros is a dependency among at most k columns.
    out.route = "dual";
    if (n > k) violated = kernels::first_heavy_combination(nullspace(m), n - k).has_value();
    if (violated) out.combination = kernels::first_heavy_combination(m, k);
  }
  out.mds = !violated;
  return out;
}

std::vector<Vec> extension_columns(const Matrix& code) {
  if (!is_mds_minors(code).mds) fail(ErrorKind::NotMds, "extension_columns needs an MDS code");
  const Field& f = code.field();
  const std::size_t k = code.rows(), n = code.cols();
  if (k == 0 || n < k) fail(ErrorKind::BadShape, "extension_columns needs n >= k >= 1");

  const Matrix head = code.column_block(0, k);
  const Matrix sys = *inverse(head) * code;  // [I | A]
  const std::size_t na = n - k;
  auto a_entry = [&](std::size_t r, std::size_t c) { return sys(r, k + c); };

  std::vector<Vec> found;
  Vec cprime(k);
  std::vector<Gf> buf;

  // Every square submatrix of [A | c'] that uses c' and row i, with all rows
  // in 0..i, must be nonsingular.
  auto consistent = [&](std::size_t i) {
    const std::size_t tmax = std::min(i + 1, na + 1);
    for (std::size_t t = 1; t <= tmax; ++t) {
      std::vector<std::size_t> rows(t - 1), cols(t - 1);
      for (std::size_t x = 0; x + 1 < t; ++x) rows[x] = cols[x] = x;
      do {
        do {
          buf.assign(t * t, kZero);
          for (std::size_t r = 0; r < t; ++r) {
            const std::size_t row = r + 1 < t ? rows[r] : i;
            for (std::size_t c = 0; c + 1 < t; ++c) buf[r * t + c] = a_entry(row, cols[c]);
            buf[r * t + t - 1] = cprime[row];
          }
          if (square_singular(f, buf, t)) return false;
        } while (t > 1 && next_combination(na, cols));
        for (std::size_t x = 0; x + 1 < t; ++x) cols[x] = x;
      } while (t > 1 && next_combination(i, rows));
    }
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      found.push_back(normalize_projective(f, head.apply(cprime)));
      return;
    }
    // c' has no zero entries; fixing c'_0 = 1 picks the projective representative.
    const std::uint32_t last = i == 0 ? 2 : f.q();
    for (std::uint32_t v = 1; v < last; ++v) {
      cprime[i] = Gf(v);
      if (consistent(i)) self(self, i + 1);
    }
    cprime[i] = kZero;
  };
  dfs(dfs, 0);
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Vec> extension_columns_reference(const Matrix& code) {
  if (!is_mds_minors(code).mds) fail(ErrorKind::NotMds, "extension_columns needs an MDS code");
  const std::size_t k = code.rows(), n = code.cols();
  std::vector<Vec> found;
  for_each_projective(code.field().q(), k, [&](std::span<const Gf> c) {
    Matrix extended = code.hstack(Matrix::from_columns(code.field_ptr(), {Vec(c.begin(), c.end())}, k));
    bool ok = true;
    std::vector<std::size_t> cols(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) cols[i] = i;
    do {
      std::vector<std::size_t> with = cols;
      with.push_back(n);
      if (!is_invertible(extended.select_columns(with))) {
        ok = false;
        break;
      }
    } while (next_combination(n, cols));
    if (ok) found.emplace_back(c.begin(), c.end());
    return true;
  });
  return found;
}

}  // namespace mdslab
