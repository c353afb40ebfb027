#pragma once

/// Exhaustive-enumeration kernels.
///
/// Each kernel has an OpenMP implementation and a plain serial reference that
/// follows the definition directly. The two must return identical results;
/// the serial versions exist for tests and benchmarks.

#include <cstdint>
#include <optional>
#include <vector>

#include "mdslab/matrix.hpp"

namespace mdslab::kernels {

/// First projective coefficient vector a, in lex order, such that the row
/// combination a·rows has at least `min_zeros` zero entries.
std::optional<Vec> first_heavy_combination(const Matrix& rows, std::size_t min_zeros);
std::optional<Vec> first_heavy_combination_serial(const Matrix& rows, std::size_t min_zeros);

/// First k-subset of columns (k = rows), in lex order, whose square
/// submatrix is singular.
std::optional<std::vector<std::size_t>> first_dependent_subset(const Matrix& m);
std::optional<std::vector<std::size_t>> first_dependent_subset_serial(const Matrix& m);

struct MatrixScan {
  std::uint64_t matrices_checked = 0;
  /// First matrix (enumeration order) in which no nonzero row combination
  /// has k zeros.
  std::optional<Matrix> counterexample;
};

/// Enumerates every k×n matrix over the field. Matrices are ordered by their
/// column codes, first column most significant; a column code reads the
/// column top to bottom as base-q digits, top entry most significant.
MatrixScan scan_all_matrices(const FieldPtr& field, std::size_t k, std::size_t n);
MatrixScan scan_all_matrices_serial(const FieldPtr& field, std::size_t k, std::size_t n);

}  // namespace mdslab::kernels
