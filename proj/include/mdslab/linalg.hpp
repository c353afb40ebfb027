#pragma once

#include <optional>
#include <vector>

#include "mdslab/matrix.hpp"

namespace mdslab {

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination. The pivot of each
/// step is the first nonzero entry in column-major scan order, so the result
/// is a deterministic function of the input.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Throws NotSquare for rectangular input.
bool is_invertible(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Rows form the RREF-derived basis of {x : m·x = 0}.
Matrix nullspace(const Matrix& m);
/// Some x with a·x = b, free variables set to zero; nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& a, std::span<const Gf> b);

/// Subspace of F_q^d in canonical form: the basis is the RREF of any spanning
/// set with zero rows dropped, so equal subspaces have identical bases.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(FieldPtr field, std::size_t ambient_dim);
  static Subspace full(FieldPtr field, std::size_t ambient_dim);
  static Subspace from_rows(const Matrix& rows);
  static Subspace from_vectors(FieldPtr field, std::size_t ambient_dim, const std::vector<Vec>& vectors);

  const FieldPtr& field_ptr() const noexcept { return basis_.field_ptr(); }
  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Throws LengthMismatch when vec has the wrong length.
  bool contains(std::span<const Gf> vec) const;

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots, std::size_t ambient)
      : basis_(std::move(basis)), pivots_(std::move(pivots)), ambient_(ambient) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
  std::size_t ambient_ = 0;
};

Subspace subspace_from_rows(const Matrix& m);
/// Smallest subspace containing both. Throws AmbientMismatch.
Subspace span_union(const Subspace& y, const Subspace& z);
/// Set intersection, computed from the kernel of [Y; -Z]^t. Throws AmbientMismatch.
Subspace intersect(const Subspace& y, const Subspace& z);
/// Orthogonal complement for the standard dot product.
Subspace perp(const Subspace& v);
bool contains(const Subspace& v, std::span<const Gf> vec);

/// Every r-dimensional subspace of F_q^d, in order of pivot set (lexicographic)
/// and then free entries (row-major odometer, last entry fastest).
std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, std::size_t d, std::size_t r);

}  // namespace mdslab
