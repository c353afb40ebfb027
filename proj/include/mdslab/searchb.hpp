#pragma once

/// Searches for condition-B witnesses, plus exhaustive oracles for the
/// statement-2 and statement-4 forms at tiny sizes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdslab/equivalence.hpp"
#include "mdslab/kernels.hpp"

namespace mdslab {

enum class SearchMode { Exhaustive, Randomized };

struct BWitness {
  std::size_t s = 0;
  std::vector<Vec> columns;  ///< basis part (sorted), then y, z
  bool reverified = false;
};

struct SearchOptions {
  SearchMode mode = SearchMode::Exhaustive;
  /// Exhaustive: node limit (0 = unlimited). Randomized: number of samples.
  std::uint64_t budget = 0;
  std::optional<std::uint64_t> seed;
  /// Drain every branch so counters and the witness do not depend on timing.
  bool deterministic = true;
  /// JSON-lines file of completed top-level branches; resumed when present.
  std::string checkpoint;
};

struct SearchReport {
  std::uint32_t q = 0;
  std::size_t k = 0;
  SearchMode mode = SearchMode::Exhaustive;
  std::vector<std::size_t> s_range;
  std::uint64_t nodes_explored = 0;
  std::uint64_t candidates_tested = 0;
  std::optional<BWitness> witness;
  std::optional<std::uint64_t> seed;
  bool budget_exceeded = false;
  bool early_exit = false;
  std::size_t branches_total = 0;
  /// Top-level branches fully explored (exhaustive mode).
  std::vector<std::size_t> completed_branches;
  double elapsed_ms = 0;

  /// "witness", "no_witness", "not_falsified" or "budget_exceeded".
  std::string verdict() const;
};

/// Condition B decided on the quotient F^s / span(basis part): the basis part
/// is independent, [Py, Pz | P·R] is MDS and P·e_s is independent of Py, Pz.
/// Agrees with check_condition_B for k >= 3 and serves as its cross-check.
bool condition_b_projected(const FieldPtr& field, std::size_t k, std::size_t s, const std::vector<Vec>& b);

/// Exhaustive mode works on the projected code M' = [Py, Pz | P·R], where P
/// is any map F^s -> F^k with kernel spanned by the basis part of B. B is a
/// witness exactly when M' is MDS, the top-coefficient column of P is
/// independent of Py and Pz, and s > k. The search enumerates normalized
/// systematic forms [I | A] of k×(q+2) MDS matrices column by column (A's
/// first row and column all ones) and, for each complete A, every scaling of
/// the q evaluation columns; s is read off from the interpolated rows, so all
/// s in (k, q] are covered at once. Top-level branches are the choices of A's
/// second column. Every reported witness is re-checked by check_condition_B.
///
/// Randomized mode draws s uniformly from (k, q] and s-k+2 distinct uniform
/// projective columns per sample; sample i uses its own generator seeded from
/// (seed, i). No witness means "not falsified".
///
/// Throws BadK unless 3 <= k < q, Usage when randomized mode lacks a seed.
SearchReport search_condition_b(const FieldPtr& field, std::size_t k, const SearchOptions& options);

/// Direct depth-first search over ordered projective columns of B for the
/// given s values: basis columns strictly increasing, then y and z. After each
/// placement it checks the conditions already implied by the placed columns.
/// Refuses (TooLarge) when the column space exceeds `max_leaves` tuples.
SearchReport search_condition_b_reference(const FieldPtr& field, std::size_t k, const std::vector<std::size_t>& s_values,
                                          std::uint64_t max_leaves = 50'000'000);

struct Stmt4Result {
  std::optional<SubspacePair> witness;
  bool reverified = false;
  std::uint64_t pairs_checked = 0;
  std::uint64_t subspaces = 0;
};

/// All ordered pairs of distinct (k-1)-dim subspaces of P_q. TooLarge unless
/// q <= 4 and 2 <= k <= 3.
Stmt4Result brute_force_stmt4(const FieldPtr& field, std::size_t k);

struct Stmt2Result {
  kernels::MatrixScan scan;
  bool reverified = false;
};

/// Every k×(q+2) matrix. TooLarge unless (q, k) is (2,2), (3,2) or (3,3).
Stmt2Result exhaustive_stmt2(const FieldPtr& field, std::size_t k);

}  // namespace mdslab
