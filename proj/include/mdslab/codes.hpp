#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdslab/matrix.hpp"

namespace mdslab {

/// A k×n generator matrix with 2 ≤ k ≤ q and n ≥ k.
struct CodeMatrix {
  Matrix generator;

  std::size_t k() const noexcept { return generator.rows(); }
  std::size_t n() const noexcept { return generator.cols(); }
};

/// Column j is (1, a, a^2, ..., a^{k-1}) for a = element j. Throws BadK.
CodeMatrix rs_code(const FieldPtr& field, std::size_t k);
/// rs_code with e_k appended.
CodeMatrix extended_rs(const FieldPtr& field, std::size_t k);
/// The conic (1, a, a^2) plus its nucleus (0,1,0) and (0,0,1); a 3×(q+2)
/// MDS code for even q. Throws OddCharacteristic.
CodeMatrix hyperoval_code(const FieldPtr& field);

struct MinorsVerdict {
  bool mds = true;
  /// Lexicographically smallest dependent k-subset of columns.
  std::optional<std::vector<std::size_t>> dependent_columns;
};

struct CodewordVerdict {
  bool mds = true;
  /// Lexicographically smallest projective row combination with ≥ k zeros.
  std::optional<Vec> combination;
  /// "primal" when the row combinations were enumerated, "dual" when the
  /// dual code's codewords decided the verdict.
  std::string route;
};

MinorsVerdict is_mds_minors(const Matrix& m);
/// Decides MDS-ness from codeword weights. The smaller of the two projective
/// enumerations (the code itself, or its dual obtained from the null space)
/// decides; a failing verdict always reports the primal witness.
CodewordVerdict is_mds_codewords(const Matrix& m);

/// Every projective column c such that [C | c] is MDS, in lex order.
/// Works on the systematic form [I | A] and extends c coordinate by
/// coordinate, rejecting as soon as a square submatrix of [A | c] that is
/// already fully determined is singular. Throws NotMds.
std::vector<Vec> extension_columns(const Matrix& c);
/// Scans every projective column directly; for cross-checking.
std::vector<Vec> extension_columns_reference(const Matrix& c);

}  // namespace mdslab
