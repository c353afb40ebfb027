#pragma once

/// Executable forms of the equivalent statements about k×(q+2) MDS codes and
/// the constructive maps between them.
///
/// A k×(q+2) matrix M' is split as [v w | T]: two leading columns and a k×q
/// block whose column j is labelled by field element j.

#include <optional>
#include <string>
#include <vector>

#include "mdslab/linalg.hpp"
#include "mdslab/polyspace.hpp"

namespace mdslab {

/// First nonzero projective row combination of M' with at least k zero
/// entries. Throws BadShape unless M' is k×(q+2) with 2 ≤ k ≤ q.
std::optional<Vec> stmt2_witness(const Matrix& mp);

struct Normalization {
  Matrix left;        ///< invertible k×k L
  Matrix normalized;  ///< L·M', whose first two columns are e1 and e2
};

/// Left-multiplies M' so its first two columns become e1, e2. {v, w} is
/// extended to a basis by appending e1, e2, ... whenever they raise the rank,
/// and L is the inverse of that basis. Throws DependentPair.
Normalization normalize_first_two(const Matrix& mp);

struct SubspacePair {
  Subspace y;
  Subspace z;
};

/// Interpolates the rows t_i of T into f_i and returns Y = <f_i : i ≠ 1>,
/// Z = <f_i : i ≠ 2> (1-based). Throws BadShape or RankDeficient.
SubspacePair yz_from_T(const Matrix& t);

/// Evaluation rows [z, y, N] where N is the canonical basis of Y∩Z and y, z are
/// the first canonical basis vectors of Y, Z outside Y∩Z. Throws BadDims.
Matrix t_from_yz(const Subspace& y, const Subspace& z);

enum class ConditionA { Dims, SpanInOk1, YInOk2, ZInOk2, MeetInOk3 };
std::string_view condition_a_name(ConditionA c);

struct ConditionAWitness {
  ConditionA condition;
  std::optional<PolyFn> poly;  ///< absent for the dimension conditions
};

struct ConditionAReport {
  bool dims_ok = false;
  bool span_in_Ok1 = false;
  bool y_in_Ok2 = false;
  bool z_in_Ok2 = false;
  bool meet_in_Ok3 = false;
  /// First failing condition, in the order of the fields above.
  std::optional<ConditionAWitness> witness;

  /// True when (Y, Z) satisfies every condition, i.e. is a counterexample
  /// to the nonexistence statement for this (q, k).
  bool all() const noexcept { return dims_ok && span_in_Ok1 && y_in_Ok2 && z_in_Ok2 && meet_in_Ok3; }
};

ConditionAReport check_condition_A(const Subspace& y, const Subspace& z, std::size_t k);

/// (1, a, a^2, ..., a^{s-1}). Throws BadS unless 1 ≤ s ≤ q.
Vec root_vector(const Field& field, Gf a, std::size_t s);

struct DualWitness {
  std::size_t s = 0;
  Subspace xperp;
  Subspace yperp;
  Subspace zperp;
  Vec y_col;
  Vec z_col;
  Vec p_vec;
};

/// Reads the rows of T as polynomials of degree < s (s - 1 = top degree),
/// forms X = row space, Y/Z = combinations vanishing on v/w, and dualizes.
/// Throws BadShape, DependentPair or RankDeficient.
DualWitness mds_to_dual_witness(const Matrix& mp, std::size_t k);

struct DualCheck {
  bool holds = true;
  int failing_bullet = 0;              ///< 1..4, 0 when all hold
  std::vector<std::size_t> subset;     ///< field elements of the failing perp space
};

/// Checks the disjointness conditions in pre-dual form over all subsets of
/// k, k-1 and k-2 field elements, plus p ∉ X^⊥.
DualCheck check_dual_conditions(const DualWitness& w, std::size_t k);

struct ConditionBCheck {
  bool holds = false;
  bool a_holds = false;
  bool b_holds = false;
  /// First singular choice for (a): indices into the pool
  /// [r_0, ..., r_{q-1}, y, z], joined with the first s-k columns of B.
  std::optional<std::vector<std::size_t>> singular_choice;
};

/// Checks a candidate B = (basis..., y, z) against the dimension-s
/// Reed-Solomon code: (a) every s×s matrix of the basis part plus k pool
/// columns is invertible, (b) B ∪ {e_s} is linearly independent.
/// Throws BadS, BadShape, or Unsatisfiable (k = 2).
ConditionBCheck check_condition_B(const FieldPtr& field, std::size_t k, std::size_t s, const std::vector<Vec>& b);

/// Display label for a pool index: "r<j>", "y" or "z".
std::string pool_label(std::size_t index, std::uint32_t q);

}  // namespace mdslab
