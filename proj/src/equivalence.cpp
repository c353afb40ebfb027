#include "mdslab/equivalence.hpp"

#include <algorithm>

#include "mdslab/enumerate.hpp"
#include "mdslab/kernels.hpp"

namespace mdslab {

namespace {

void check_mp_shape(const Matrix& mp) {
  const std::uint32_t q = mp.field().q();
  const std::size_t k = mp.rows();
  if (k < 2 || k > q || mp.cols() != q + 2)
    fail(ErrorKind::BadShape, "expected a k×(q+2) matrix with 2 <= k <= q");
}

void check_pair_independent(const Matrix& mp) {
  if (rank(mp.column_block(0, 2)) < 2)
    fail(ErrorKind::DependentPair, "the first two columns are linearly dependent");
}

/// Rows spanning {a·P : a·col = 0}.
Matrix annihilating_combinations(const Matrix& p, const Vec& col) {
  Matrix functional = Matrix::from_rows(p.field_ptr(), {col}, col.size());
  return nullspace(functional) * p;
}

/// First basis vector of `big` that is not in `small`.
Vec first_outside(const Subspace& big, const Subspace& small) {
  for (std::size_t i = 0; i < big.dim(); ++i)
    if (!small.contains(big.basis().row(i))) return big.basis().row_vec(i);
  fail(ErrorKind::BadDims, "subspace has no vector outside the given subspace");
}

Subspace root_span(const Field& field, const FieldPtr& ptr, std::span<const std::size_t> elems, std::size_t s) {
  std::vector<Vec> rows;
  rows.reserve(elems.size());
  for (auto e : elems) rows.push_back(root_vector(field, field.element(e), s));
  return Subspace::from_vectors(ptr, s, rows);
}

}  // namespace

std::optional<Vec> stmt2_witness(const Matrix& mp) {
  check_mp_shape(mp);
  return kernels::first_heavy_combination(mp, mp.rows());
}

Normalization normalize_first_two(const Matrix& mp) {
  const std::size_t k = mp.rows();
  if (k < 2 || mp.cols() < 2) fail(ErrorKind::BadShape, "need at least two rows and two columns");
  check_pair_independent(mp);
  std::vector<Vec> basis{mp.column(0), mp.column(1)};
  for (std::size_t i = 0; i < k && basis.size() < k; ++i) {
    basis.push_back(unit_vector(k, i));
    if (rank(Matrix::from_columns(mp.field_ptr(), basis, k)) < basis.size()) basis.pop_back();
  }
  Matrix left = *inverse(Matrix::from_columns(mp.field_ptr(), basis, k));
  Matrix normalized = left * mp;
  return {std::move(left), std::move(normalized)};
}

SubspacePair yz_from_T(const Matrix& t) {
  const std::uint32_t q = t.field().q();
  const std::size_t k = t.rows();
  if (k < 2 || t.cols() != q) fail(ErrorKind::BadShape, "T must be k×q with k >= 2");
  if (rank(t) < k) fail(ErrorKind::RankDeficient, "the rows of T are linearly dependent");
  Matrix polys = interpolate_rows(t);
  std::vector<std::size_t> y_rows, z_rows;
  for (std::size_t i = 0; i < k; ++i) {
    if (i != 0) y_rows.push_back(i);
    if (i != 1) z_rows.push_back(i);
  }
  return {Subspace::from_rows(polys.select_rows(y_rows)), Subspace::from_rows(polys.select_rows(z_rows))};
}

Matrix t_from_yz(const Subspace& y, const Subspace& z) {
  if (y.ambient_dim() != z.ambient_dim()) fail(ErrorKind::AmbientMismatch, "Y and Z differ in ambient dimension");
  if (y.ambient_dim() != y.field().q()) fail(ErrorKind::BadDims, "Y and Z must live in P_q");
  const std::size_t k = y.dim() + 1;
  if (y.dim() == 0 || z.dim() != y.dim() || span_union(y, z).dim() != k)
    fail(ErrorKind::BadDims, "need dim Y = dim Z = k-1 and dim <Y,Z> = k");
  const Subspace meet = intersect(y, z);
  Matrix coeffs(y.field_ptr(), 0, y.ambient_dim());
  coeffs.append_row(first_outside(z, meet));
  coeffs.append_row(first_outside(y, meet));
  for (std::size_t i = 0; i < meet.dim(); ++i) coeffs.append_row(meet.basis().row(i));
  return evaluate_rows(coeffs);
}

std::string_view condition_a_name(ConditionA c) {
  switch (c) {
    case ConditionA::Dims: return "dims";
    case ConditionA::SpanInOk1: return "span_in_O_k-1";
    case ConditionA::YInOk2: return "Y_in_O_k-2";
    case ConditionA::ZInOk2: return "Z_in_O_k-2";
    case ConditionA::MeetInOk3: return "meet_in_O_k-3";
  }
  return "unknown";
}

ConditionAReport check_condition_A(const Subspace& y, const Subspace& z, std::size_t k) {
  ConditionAReport r;
  const int n = static_cast<int>(k);
  const Subspace joined = span_union(y, z);
  const Subspace meet = intersect(y, z);
  r.dims_ok = y.dim() + 1 == k && z.dim() + 1 == k && joined.dim() == k;
  auto span_check = subspace_in_O_n(joined, n - 1);
  auto y_check = subspace_in_O_n(y, n - 2);
  auto z_check = subspace_in_O_n(z, n - 2);
  auto meet_check = subspace_in_O_n(meet, n - 3);
  r.span_in_Ok1 = span_check.holds;
  r.y_in_Ok2 = y_check.holds;
  r.z_in_Ok2 = z_check.holds;
  r.meet_in_Ok3 = meet_check.holds;
  if (!r.dims_ok)
    r.witness = ConditionAWitness{ConditionA::Dims, std::nullopt};
  else if (!r.span_in_Ok1)
    r.witness = ConditionAWitness{ConditionA::SpanInOk1, span_check.violator};
  else if (!r.y_in_Ok2)
    r.witness = ConditionAWitness{ConditionA::YInOk2, y_check.violator};
  else if (!r.z_in_Ok2)
    r.witness = ConditionAWitness{ConditionA::ZInOk2, z_check.violator};
  else if (!r.meet_in_Ok3)
    r.witness = ConditionAWitness{ConditionA::MeetInOk3, meet_check.violator};
  return r;
}

Vec root_vector(const Field& field, Gf a, std::size_t s) {
  if (s < 1 || s > field.q()) fail(ErrorKind::BadS, "root vectors need 1 <= s <= q");
  Vec r(s);
  Gf power = kOne;
  for (std::size_t i = 0; i < s; ++i) {
    r[i] = power;
    power = field.mul(power, a);
  }
  return r;
}

DualWitness mds_to_dual_witness(const Matrix& mp, std::size_t k) {
  check_mp_shape(mp);
  if (mp.rows() != k) fail(ErrorKind::BadShape, "M' must have k rows");
  check_pair_independent(mp);
  const std::uint32_t q = mp.field().q();
  const Matrix block = mp.column_block(2, q);
  if (rank(block) < k) fail(ErrorKind::RankDeficient, "the right k×q block has rank below k");

  const Matrix coeffs = interpolate_rows(block);
  int top = -1;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = q; c-- > 0;)
      if (!coeffs(r, c).is_zero()) {
        top = std::max(top, static_cast<int>(c));
        break;
      }
  DualWitness w;
  w.s = static_cast<std::size_t>(top) + 1;
  const Matrix p = coeffs.column_block(0, w.s);
  const Subspace x = Subspace::from_rows(p);
  const Subspace y = Subspace::from_rows(annihilating_combinations(p, mp.column(0)));
  const Subspace z = Subspace::from_rows(annihilating_combinations(p, mp.column(1)));
  w.xperp = perp(x);
  w.yperp = perp(y);
  w.zperp = perp(z);
  w.y_col = first_outside(w.yperp, w.xperp);
  w.z_col = first_outside(w.zperp, w.xperp);
  w.p_vec = unit_vector(w.s, w.s - 1);
  return w;
}

DualCheck check_dual_conditions(const DualWitness& w, std::size_t k) {
  const FieldPtr& ptr = w.xperp.field_ptr();
  const Field& f = *ptr;
  const std::size_t s = w.s;
  const Subspace x = perp(w.xperp);
  const Subspace y = perp(w.yperp);
  const Subspace z = perp(w.zperp);
  const Subspace meet = perp(span_union(w.yperp, w.zperp));

  DualCheck out;
  auto disjoint_from_all = [&](std::size_t size, std::initializer_list<const Subspace*> spaces,
                               int bullet) {
    if (size > f.q()) return true;
    std::vector<std::size_t> elems(size);
    for (std::size_t i = 0; i < size; ++i) elems[i] = i;
    do {
      const Subspace forced_roots = perp(root_span(f, ptr, elems, s));
      for (const Subspace* v : spaces) {
        if (intersect(*v, forced_roots).dim() != 0) {
          out.holds = false;
          out.failing_bullet = bullet;
          out.subset = elems;
          return false;
        }
      }
    } while (next_combination(f.q(), elems));
    return true;
  };

  if (!disjoint_from_all(k, {&x}, 1)) return out;
  if (!disjoint_from_all(k - 1, {&y, &z}, 2)) return out;
  if (!disjoint_from_all(k - 2, {&meet}, 3)) return out;
  if (w.xperp.contains(w.p_vec)) {
    out.holds = false;
    out.failing_bullet = 4;
  }
  return out;
}

ConditionBCheck check_condition_B(const FieldPtr& field, std::size_t k, std::size_t s, const std::vector<Vec>& b) {
  const Field& f = *field;
  const std::uint32_t q = f.q();
  if (k < 2) fail(ErrorKind::BadK, "condition B needs k >= 2");
  if (s <= k || s > q) fail(ErrorKind::BadS, "condition B needs k < s <= q");
  if (b.size() != s - k + 2) fail(ErrorKind::BadShape, "B must have s-k+2 columns");
  for (const auto& col : b)
    if (col.size() != s) fail(ErrorKind::BadShape, "every column of B must have length s");
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (b[i] == b[j]) fail(ErrorKind::BadShape, "the columns of B must be distinct");
  if (k == 2) fail(ErrorKind::Unsatisfiable, "for k = 2, B ∪ {e_s} has s+1 vectors in dimension s");

  const std::size_t nbasis = s - k;
  std::vector<Vec> pool;
  pool.reserve(q + 2);
  for (std::uint32_t j = 0; j < q; ++j) pool.push_back(root_vector(f, f.element(j), s));
  pool.push_back(b[nbasis]);
  pool.push_back(b[nbasis + 1]);

  ConditionBCheck out;
  out.a_holds = true;
  std::vector<std::size_t> choice(k);
  for (std::size_t i = 0; i < k; ++i) choice[i] = i;
  std::vector<Vec> cols(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(nbasis));
  do {
    cols.resize(nbasis);
    for (auto c : choice) cols.push_back(pool[c]);
    if (!is_invertible(Matrix::from_columns(field, cols, s))) {
      out.a_holds = false;
      out.singular_choice = choice;
      break;
    }
  } while (next_combination(pool.size(), choice));

  std::vector<Vec> with_p = b;
  with_p.push_back(unit_vector(s, s - 1));
  out.b_holds = rank(Matrix::from_columns(field, with_p, s)) == with_p.size();
  out.holds = out.a_holds && out.b_holds;
  return out;
}

std::string pool_label(std::size_t index, std::uint32_t q) {
  if (index < q) return "r" + std::to_string(index);
  return index == q ? "y" : "z";
}

}  // namespace mdslab
