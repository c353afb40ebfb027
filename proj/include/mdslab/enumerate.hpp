#pragma once

/// Ranked enumeration of projective vectors and k-subsets.
///
/// Projective representatives of F_q^d are the nonzero vectors whose first
/// nonzero coordinate is 1. They are ordered lexicographically by encoding,
/// which places vectors with more leading zeros first. Rank r maps to a unique
/// representative so enumerations can be split into contiguous chunks.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mdslab/matrix.hpp"

namespace mdslab {

/// q^e, or nullopt on overflow of 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t q, std::uint64_t e) noexcept;

/// (q^d - 1) / (q - 1); throws TooLarge when it does not fit in 64 bits.
std::uint64_t projective_count(std::uint32_t q, std::size_t d);

/// Writes the representative of the given rank into out (length d).
void projective_unrank(std::uint32_t q, std::uint64_t rank, std::span<Gf> out);

/// Steps to the next representative in lex order. Returns the index of the
/// leftmost coordinate that changed, or nullopt at the end.
std::optional<std::size_t> projective_next(std::uint32_t q, std::span<Gf> v);

/// Calls fn(v) for each representative; stops early when fn returns false.
template <class Fn>
void for_each_projective(std::uint32_t q, std::size_t d, Fn&& fn) {
  if (d == 0) return;
  Vec v(d);
  v[d - 1] = kOne;
  do {
    if (!fn(std::span<const Gf>(v))) return;
  } while (projective_next(q, v));
}

/// C(n, k) saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// The k-subset of {0..n-1} with the given lexicographic rank.
void combination_unrank(std::size_t n, std::size_t k, std::uint64_t rank, std::span<std::size_t> out);

/// Advances to the next k-subset in lex order; false after the last.
bool next_combination(std::size_t n, std::span<std::size_t> c) noexcept;

}  // namespace mdslab
