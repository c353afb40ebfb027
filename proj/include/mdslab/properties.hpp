#pragma once

/// Seeded property suites that cross-check the equivalent statements against
/// one another. Trial t of a suite draws from its own generator seeded by
/// (seed, suite tag, q, k, t), so results do not depend on thread count.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mdslab/matrix.hpp"

namespace mdslab {

struct PropertyResult {
  std::string name;
  std::uint32_t q = 0;
  std::size_t k = 0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  /// Trials on which the checked statement was true (for example, MDS).
  std::uint64_t positives = 0;
  std::optional<std::string> first_failure;

  bool passed() const noexcept { return failures == 0; }
};

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint32_t tag, std::uint32_t q, std::size_t k, std::uint64_t trial);

Gf random_element(const Field& f, std::mt19937_64& rng);
Gf random_nonzero(const Field& f, std::mt19937_64& rng);
Matrix random_matrix(const FieldPtr& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng);
/// k×(q+2) with linearly independent first two columns.
Matrix random_mprime(const FieldPtr& field, std::size_t k, std::mt19937_64& rng);

/// A stmt-2 witness exists for M' exactly when one exists for its
/// normalization, and the witness maps across.
PropertyResult prop_normalization_invariance(const FieldPtr& field, std::size_t k, std::uint64_t trials,
                                             std::uint64_t seed);
/// For M' = [e1 e2 | T]: no stmt-2 witness iff all five condition-A flags hold.
PropertyResult prop_condition_a_correspondence(const FieldPtr& field, std::size_t k, std::uint64_t trials,
                                               std::uint64_t seed);
/// is_mds_minors(M') agrees with the dual conditions. For q = 4, k = 3, trial
/// 0 is the hyperoval and every fourth trial a scrambled hyperoval.
PropertyResult prop_dual_translation(const FieldPtr& field, std::size_t k, std::uint64_t trials, std::uint64_t seed);
/// yz_from_T(t_from_yz(Y, Z)) == (Y, Z).
PropertyResult prop_round_trip(const FieldPtr& field, std::size_t k, std::uint64_t trials, std::uint64_t seed);
/// f(a) = 0 iff <f, r_a> = 0, for every s <= q and every a, with
/// `trials` random f per (s, a), half of them forced to vanish at a.
PropertyResult prop_root_orthogonality(const FieldPtr& field, std::uint64_t trials, std::uint64_t seed);
/// is_mds_minors agrees with is_mds_codewords on k×n matrices; half the
/// trials are scrambled column subsets of the extended RS code.
PropertyResult prop_oracle_agreement(const FieldPtr& field, std::size_t k, std::size_t n, std::uint64_t trials,
                                     std::uint64_t seed);

/// Every cross-statement suite for one (q, k).
std::vector<PropertyResult> equivalence_suite(const FieldPtr& field, std::size_t k, std::uint64_t trials,
                                              std::uint64_t seed);

}  // namespace mdslab
