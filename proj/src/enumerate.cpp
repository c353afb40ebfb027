#include "mdslab/enumerate.hpp"

#include <limits>

namespace mdslab {

std::optional<std::uint64_t> checked_pow(std::uint64_t q, std::uint64_t e) noexcept {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (q != 0 && r > std::numeric_limits<std::uint64_t>::max() / q) return std::nullopt;
    r *= q;
  }
  return r;
}

std::uint64_t projective_count(std::uint32_t q, std::size_t d) {
  if (d == 0) return 0;
  std::uint64_t total = 0, block = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() - block)
      fail(ErrorKind::TooLarge, "projective enumeration does not fit in 64 bits");
    total += block;
    if (i + 1 < d) {
      if (block > std::numeric_limits<std::uint64_t>::max() / q)
        fail(ErrorKind::TooLarge, "projective enumeration does not fit in 64 bits");
      block *= q;
    }
  }
  return total;
}

void projective_unrank(std::uint32_t q, std::uint64_t rank, std::span<Gf> out) {
  const std::size_t d = out.size();
  std::fill(out.begin(), out.end(), kZero);
  // Blocks by lead position, from d-1 (one vector) down to 0 (q^{d-1} vectors).
  std::uint64_t block = 1;
  std::size_t lead = d - 1;
  while (rank >= block) {
    rank -= block;
    --lead;
    block *= q;
  }
  out[lead] = kOne;
  for (std::size_t i = d; i-- > lead + 1;) {
    out[i] = Gf(static_cast<std::uint32_t>(rank % q));
    rank /= q;
  }
}

std::optional<std::size_t> projective_next(std::uint32_t q, std::span<Gf> v) {
  const std::size_t d = v.size();
  std::size_t lead = 0;
  while (lead < d && v[lead].is_zero()) ++lead;
  for (std::size_t i = d; i-- > lead + 1;) {
    if (v[i].value + 1 < q) {
      v[i] = Gf(v[i].value + 1);
      return i;
    }
    v[i] = kZero;
  }
  if (lead == 0) return std::nullopt;
  v[lead] = kZero;
  v[lead - 1] = kOne;
  return lead - 1;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

void combination_unrank(std::size_t n, std::size_t k, std::uint64_t rank, std::span<std::size_t> out) {
  std::size_t next = 0;
  for (std::size_t i = 0; i < k; ++i) {
    while (true) {
      const std::uint64_t with = binomial(n - next - 1, k - i - 1);
      if (rank < with) break;
      rank -= with;
      ++next;
    }
    out[i] = next++;
  }
}

bool next_combination(std::size_t n, std::span<std::size_t> c) noexcept {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0 && c[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

}  // namespace mdslab
