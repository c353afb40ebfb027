#pragma once

/// Finite field arithmetic over F_q, q = p^m.
///
/// Elements are encoded as integers e = c_0 + c_1 p + ... + c_{m-1} p^{m-1}
/// where (c_0, ..., c_{m-1}) are the coefficients of the polynomial-basis
/// representative modulo the field's irreducible modulus. Prime-field
/// encodings therefore coincide with residues mod p, and the canonical
/// enumeration order of the field is ascending encoding: 0 is the additive
/// identity, 1 the multiplicative one.
///
/// A Field is immutable once built and can be shared freely between threads.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mdslab/error.hpp"

namespace mdslab {

/// Element of a finite field, identified by its integer encoding.
struct Gf {
  std::uint32_t value = 0;

  constexpr Gf() = default;
  constexpr explicit Gf(std::uint32_t v) : value(v) {}

  constexpr bool is_zero() const noexcept { return value == 0; }
  friend constexpr auto operator<=>(Gf, Gf) = default;
};

inline constexpr Gf kZero{0};
inline constexpr Gf kOne{1};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Largest field order supported.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

class Field {
 public:
  /// Builds F_{p^m}. When `modulus` is absent and m > 1 the monic irreducible
  /// of degree m with the smallest encoding of its non-leading coefficients
  /// is chosen. `modulus` lists c_0..c_{m-1}; the leading 1 is implicit.
  static FieldPtr make(std::uint32_t p, std::uint32_t m,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Builds the field of order q (a prime power) with the default modulus.
  static FieldPtr of_order(std::uint32_t q);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return m_ == 1; }

  /// Non-leading modulus coefficients, little-endian; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  /// Header line used by the matrix file format.
  std::string header() const;

  bool valid(Gf a) const noexcept { return a.value < q_; }

  /// The j-th element in canonical enumeration order.
  Gf element(std::size_t j) const noexcept { return Gf(static_cast<std::uint32_t>(j)); }
  std::vector<Gf> elements() const;

  Gf add(Gf a, Gf b) const noexcept {
    if (!add_table_.empty()) return Gf(add_table_[a.value * q_ + b.value]);
    if (m_ == 1) {
      std::uint32_t s = a.value + b.value;
      return Gf(s >= p_ ? s - p_ : s);
    }
    if (p_ == 2) return Gf(a.value ^ b.value);
    return add_digits(a, b, false);
  }

  Gf neg(Gf a) const noexcept {
    if (a.value == 0) return a;
    if (m_ == 1) return Gf(p_ - a.value);
    if (p_ == 2) return a;
    return neg_table_.empty() ? add_digits(kZero, a, true) : Gf(neg_table_[a.value]);
  }

  Gf sub(Gf a, Gf b) const noexcept { return add(a, neg(b)); }

  Gf mul(Gf a, Gf b) const noexcept {
    if (!mul_table_.empty()) return Gf(mul_table_[a.value * q_ + b.value]);
    if (a.value == 0 || b.value == 0) return kZero;
    if (m_ == 1) return Gf(static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_));
    std::uint32_t s = log_[a.value] + log_[b.value];
    return Gf(exp_[s]);
  }

  /// Multiplicative inverse; throws DivisionByZero for 0.
  Gf inv(Gf a) const;
  Gf div(Gf a, Gf b) const { return mul(a, inv(b)); }
  Gf pow(Gf a, std::uint64_t e) const noexcept;

  /// a·b + c, the inner step of every elimination loop.
  Gf fma(Gf a, Gf b, Gf c) const noexcept { return add(mul(a, b), c); }

  /// Definitional arithmetic on coefficient vectors, independent of any
  /// lookup table. Kept for cross-checking the fast paths.
  Gf add_reference(Gf a, Gf b) const;
  Gf mul_reference(Gf a, Gf b) const;

  std::vector<std::uint32_t> digits(Gf a) const;
  Gf from_digits(const std::vector<std::uint32_t>& d) const;

 private:
  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);
  void build_tables();
  Gf add_digits(Gf a, Gf b, bool negate_b) const noexcept;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;

  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> inv_table_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Returns (p, m) with q = p^m, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) noexcept;

/// Polynomials over F_p as little-endian coefficient vectors, used for
/// modulus selection and irreducibility testing.
namespace fp_poly {

using Poly = std::vector<std::uint32_t>;

/// Remainder of a modulo b over F_p; b must have a nonzero leading coefficient.
Poly mod(Poly a, const Poly& b, std::uint32_t p);

/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p);

}  // namespace fp_poly

}  // namespace mdslab
