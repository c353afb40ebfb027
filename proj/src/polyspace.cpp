#include "mdslab/polyspace.hpp"

#include "mdslab/kernels.hpp"

namespace mdslab {

PolyFn::PolyFn(FieldPtr field, Vec coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_->q()) fail(ErrorKind::LengthMismatch, "a PolyFn has exactly q coefficients");
}

PolyFn PolyFn::zero(FieldPtr field) {
  const std::uint32_t q = field->q();
  return PolyFn(std::move(field), Vec(q));
}

int PolyFn::degree() const noexcept {
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  return -1;
}

PolyFn interpolate(const FieldPtr& field, std::span<const Gf> values) {
  const Field& f = *field;
  const std::uint32_t q = f.q();
  if (values.size() != q) fail(ErrorKind::LengthMismatch, "interpolation needs one value per field element");
  // master(x) = prod_i (x - alpha_i), degree q.
  Vec master(q + 1);
  master[0] = kOne;
  for (std::uint32_t i = 0; i < q; ++i) {
    const Gf neg_a = f.neg(f.element(i));
    for (std::size_t d = i + 1; d > 0; --d) master[d] = f.fma(neg_a, master[d], master[d - 1]);
    master[0] = f.mul(neg_a, master[0]);
  }
  Vec out(q);
  Vec basis(q);
  for (std::uint32_t j = 0; j < q; ++j) {
    if (values[j].is_zero()) continue;
    const Gf a = f.element(j);
    // Synthetic division: basis = master / (x - a).
    Gf carry = kZero;
    for (std::size_t d = q; d > 0; --d) {
      carry = f.fma(carry, a, master[d]);
      basis[d - 1] = carry;
    }
    const Gf scale = f.div(values[j], evaluate(f, basis, a));
    axpy(f, scale, basis, out);
  }
  return PolyFn(field, std::move(out));
}

Gf evaluate(const Field& field, std::span<const Gf> coeffs, Gf a) {
  Gf acc = kZero;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = field.fma(acc, a, coeffs[i]);
  return acc;
}

Gf evaluate(const PolyFn& f, Gf a) { return evaluate(f.field(), f.coeffs(), a); }

Vec evaluations(const PolyFn& f) {
  const std::uint32_t q = f.field().q();
  Vec out(q);
  for (std::uint32_t j = 0; j < q; ++j) out[j] = evaluate(f, f.field().element(j));
  return out;
}

std::size_t distinct_roots(const PolyFn& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "the zero polynomial vanishes everywhere");
  return count_zeros(evaluations(f));
}

bool in_O_n(const PolyFn& f, int n) {
  if (f.is_zero()) return true;
  if (n < 0) return false;
  return distinct_roots(f) <= static_cast<std::size_t>(n);
}

Matrix interpolate_rows(const Matrix& values) {
  const FieldPtr& field = values.field_ptr();
  Matrix out(field, values.rows(), field->q());
  for (std::size_t r = 0; r < values.rows(); ++r) {
    auto p = interpolate(field, values.row(r));
    std::copy(p.coeffs().begin(), p.coeffs().end(), out.row(r).begin());
  }
  return out;
}

Matrix evaluate_rows(const Matrix& coeffs) {
  const Field& f = coeffs.field();
  Matrix out(coeffs.field_ptr(), coeffs.rows(), f.q());
  for (std::size_t r = 0; r < coeffs.rows(); ++r)
    for (std::uint32_t j = 0; j < f.q(); ++j) out(r, j) = evaluate(f, coeffs.row(r), f.element(j));
  return out;
}

OnCheck subspace_in_O_n(const Subspace& v, int n) {
  OnCheck out;
  if (v.dim() == 0) return out;
  const std::size_t min_zeros = n < 0 ? 0 : static_cast<std::size_t>(n) + 1;
  auto hit = kernels::first_heavy_combination(evaluate_rows(v.basis()), min_zeros);
  if (hit) {
    out.holds = false;
    out.violator = PolyFn(v.field_ptr(), v.basis().combine_rows(*hit));
  }
  return out;
}

}  // namespace mdslab
