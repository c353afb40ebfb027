#pragma once

/// The space P_q = F_q[x]/(x^q - x) of polynomial functions on F_q.
///
/// A PolyFn stores exactly q coefficients (degree < q). Points are labelled by
/// the field's canonical enumeration, so the j-th value of an evaluation
/// vector is the value at field element j.

#include <optional>

#include "mdslab/linalg.hpp"

namespace mdslab {

class PolyFn {
 public:
  PolyFn(FieldPtr field, Vec coeffs);
  static PolyFn zero(FieldPtr field);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Vec& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return mdslab::is_zero(coeffs_); }
  /// -1 for the zero polynomial.
  int degree() const noexcept;

  friend bool operator==(const PolyFn& a, const PolyFn& b) noexcept { return a.coeffs_ == b.coeffs_; }

 private:
  FieldPtr field_;
  Vec coeffs_;
};

/// Lagrange interpolation through (element j, values[j]). Throws LengthMismatch.
PolyFn interpolate(const FieldPtr& field, std::span<const Gf> values);
/// Horner evaluation.
Gf evaluate(const PolyFn& f, Gf a);
Gf evaluate(const Field& field, std::span<const Gf> coeffs, Gf a);
/// Values at every field element in enumeration order.
Vec evaluations(const PolyFn& f);
/// Throws ZeroPolynomial.
std::size_t distinct_roots(const PolyFn& f);
/// Membership in O_n: zero, or at most n distinct roots. O_{-1} = {0}.
bool in_O_n(const PolyFn& f, int n);

struct OnCheck {
  bool holds = true;
  std::optional<PolyFn> violator;
};

/// Whether every element of V (coefficient vectors of length q) lies in O_n.
/// Nonzero elements are visited through projective combinations of V's basis
/// in lex order; the first violator found is returned.
OnCheck subspace_in_O_n(const Subspace& v, int n);

/// Row-wise interpolation of a matrix of values (cols = q) into coefficient rows.
Matrix interpolate_rows(const Matrix& values);
/// Row-wise evaluation of coefficient rows (any length ≤ q) at all q points.
Matrix evaluate_rows(const Matrix& coeffs);

}  // namespace mdslab
