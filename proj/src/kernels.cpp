#include "mdslab/kernels.hpp"

#include "mdslab/enumerate.hpp"
#include "mdslab/linalg.hpp"
#include "mdslab/parallel.hpp"

namespace mdslab::kernels {

namespace {

constexpr std::uint64_t kCombinationChunk = 4096;
constexpr std::uint64_t kSubsetChunk = 256;
constexpr std::uint64_t kMatrixChunk = 1 << 14;

/// Row multiples c·r_i for every c, when small enough to tabulate.
class ScaledRows {
 public:
  ScaledRows(const Matrix& rows) : rows_(rows), q_(rows.field().q()) {
    const std::uint64_t size = std::uint64_t{q_} * rows.rows() * rows.cols();
    if (size <= (1u << 22)) {
      table_.resize(size);
      for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::uint32_t c = 0; c < q_; ++c)
          for (std::size_t t = 0; t < rows.cols(); ++t)
            table_[(i * q_ + c) * rows.cols() + t] = rows.field().mul(Gf(c), rows(i, t));
    }
  }

  /// out = base + c·r_i
  void add_multiple(std::size_t i, Gf c, std::span<const Gf> base, std::span<Gf> out) const {
    const Field& f = rows_.field();
    const std::size_t n = rows_.cols();
    if (!table_.empty()) {
      const Gf* s = table_.data() + (i * q_ + c.value) * n;
      for (std::size_t t = 0; t < n; ++t) out[t] = f.add(base[t], s[t]);
    } else {
      for (std::size_t t = 0; t < n; ++t) out[t] = f.fma(c, rows_(i, t), base[t]);
    }
  }

 private:
  const Matrix& rows_;
  std::uint32_t q_;
  std::vector<Gf> table_;
};

bool square_is_singular(const Field& f, std::vector<Gf>& a, std::size_t k) {
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = k;
    for (std::size_t r = c; r < k; ++r)
      if (!a[r * k + c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == k) return true;
    if (pivot != c)
      for (std::size_t t = c; t < k; ++t) std::swap(a[pivot * k + t], a[c * k + t]);
    const Gf scale = f.neg(f.inv(a[c * k + c]));
    for (std::size_t r = c + 1; r < k; ++r) {
      if (a[r * k + c].is_zero()) continue;
      const Gf factor = f.mul(scale, a[r * k + c]);
      for (std::size_t t = c; t < k; ++t) a[r * k + t] = f.fma(factor, a[c * k + t], a[r * k + t]);
    }
  }
  return false;
}

}  // namespace

std::optional<Vec> first_heavy_combination(const Matrix& rows, std::size_t min_zeros) {
  const std::size_t k = rows.rows(), n = rows.cols();
  if (k == 0) return std::nullopt;
  const std::uint32_t q = rows.field().q();
  const std::uint64_t total = projective_count(q, k);
  const ScaledRows scaled(rows);

  auto scan = [&](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
    Vec a(k);
    projective_unrank(q, begin, a);
    std::vector<Vec> partial(k, Vec(n));
    const Vec zero(n);
    std::size_t from = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      for (std::size_t i = from; i < k; ++i)
        scaled.add_multiple(i, a[i], i ? std::span<const Gf>(partial[i - 1]) : std::span<const Gf>(zero),
                            partial[i]);
      if (count_zeros(partial[k - 1]) >= min_zeros) return idx;
      auto changed = projective_next(q, a);
      if (!changed) break;
      from = *changed;
    }
    return kNoHit;
  };
  const std::uint64_t hit = first_hit_parallel(total, kCombinationChunk, scan);
  if (hit == kNoHit) return std::nullopt;
  Vec a(k);
  projective_unrank(q, hit, a);
  return a;
}

std::optional<Vec> first_heavy_combination_serial(const Matrix& rows, std::size_t min_zeros) {
  std::optional<Vec> found;
  for_each_projective(rows.field().q(), rows.rows(), [&](std::span<const Gf> a) {
    if (count_zeros(rows.combine_rows(a)) >= min_zeros) {
      found = Vec(a.begin(), a.end());
      return false;
    }
    return true;
  });
  return found;
}

std::optional<std::vector<std::size_t>> first_dependent_subset(const Matrix& m) {
  const std::size_t k = m.rows(), n = m.cols();
  if (k == 0 || k > n) return std::nullopt;
  const Field& f = m.field();
  const std::uint64_t total = binomial(n, k);
  auto scan = [&](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
    std::vector<std::size_t> cols(k);
    combination_unrank(n, k, begin, cols);
    std::vector<Gf> buf(k * k);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < k; ++j) buf[r * k + j] = m(r, cols[j]);
      if (square_is_singular(f, buf, k)) return idx;
      if (!next_combination(n, cols)) break;
    }
    return kNoHit;
  };
  const std::uint64_t hit = first_hit_parallel(total, kSubsetChunk, scan);
  if (hit == kNoHit) return std::nullopt;
  std::vector<std::size_t> cols(k);
  combination_unrank(n, k, hit, cols);
  return cols;
}

std::optional<std::vector<std::size_t>> first_dependent_subset_serial(const Matrix& m) {
  const std::size_t k = m.rows(), n = m.cols();
  if (k == 0 || k > n) return std::nullopt;
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  do {
    if (!is_invertible(m.select_columns(cols))) return cols;
  } while (next_combination(n, cols));
  return std::nullopt;
}

namespace {

Matrix matrix_from_index(const FieldPtr& field, std::size_t k, std::size_t n, std::uint64_t index) {
  const std::uint32_t q = field->q();
  Matrix m(field, k, n);
  for (std::size_t j = n; j-- > 0;)
    for (std::size_t r = k; r-- > 0;) {
      m(r, j) = Gf(static_cast<std::uint32_t>(index % q));
      index /= q;
    }
  return m;
}

std::uint64_t matrix_total(std::uint32_t q, std::size_t k, std::size_t n) {
  auto total = checked_pow(q, k * n);
  if (!total) fail(ErrorKind::TooLarge, "matrix enumeration does not fit in 64 bits");
  return *total;
}

}  // namespace

MatrixScan scan_all_matrices(const FieldPtr& field, std::size_t k, std::size_t n) {
  const Field& f = *field;
  const std::uint32_t q = f.q();
  const std::uint64_t total = matrix_total(q, k, n);
  const std::uint64_t codes = *checked_pow(q, k);
  const std::uint64_t combos = projective_count(q, k);

  // zero_at[c * codes + code]: combination c annihilates the column with this code.
  std::vector<std::uint8_t> zero_at(combos * codes);
  {
    Vec a(k);
    a[k - 1] = kOne;
    std::uint64_t c = 0;
    do {
      for (std::uint64_t code = 0; code < codes; ++code) {
        Gf acc = kZero;
        std::uint64_t x = code;
        for (std::size_t r = k; r-- > 0;) {
          acc = f.fma(a[r], Gf(static_cast<std::uint32_t>(x % q)), acc);
          x /= q;
        }
        zero_at[c * codes + code] = acc.is_zero();
      }
      ++c;
    } while (projective_next(q, a));
  }

  auto scan = [&](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
    std::vector<std::uint64_t> col(n);
    std::uint64_t x = begin;
    for (std::size_t j = n; j-- > 0;) {
      col[j] = x % codes;
      x /= codes;
    }
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      bool heavy = false;
      for (std::uint64_t c = 0; c < combos && !heavy; ++c) {
        const std::uint8_t* z = zero_at.data() + c * codes;
        std::size_t zeros = 0;
        for (std::size_t j = 0; j < n; ++j) zeros += z[col[j]];
        heavy = zeros >= k;
      }
      if (!heavy) return idx;
      for (std::size_t j = n; j-- > 0;) {
        if (++col[j] < codes) break;
        col[j] = 0;
      }
    }
    return kNoHit;
  };
  const std::uint64_t hit = first_hit_parallel(total, kMatrixChunk, scan);
  MatrixScan out;
  if (hit == kNoHit) {
    out.matrices_checked = total;
  } else {
    out.matrices_checked = hit + 1;
    out.counterexample = matrix_from_index(field, k, n, hit);
  }
  return out;
}

MatrixScan scan_all_matrices_serial(const FieldPtr& field, std::size_t k, std::size_t n) {
  const std::uint64_t total = matrix_total(field->q(), k, n);
  MatrixScan out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Matrix m = matrix_from_index(field, k, n, idx);
    ++out.matrices_checked;
    if (!first_heavy_combination_serial(m, k)) {
      out.counterexample = std::move(m);
      break;
    }
  }
  return out;
}

}  // namespace mdslab::kernels
