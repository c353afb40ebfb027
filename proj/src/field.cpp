#include "mdslab/field.hpp"

#include <sstream>

namespace mdslab {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NoModulusNeeded: return "NoModulusNeeded";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::BadK: return "BadK";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::BadS: return "BadS";
    case ErrorKind::BadDims: return "BadDims";
    case ErrorKind::OddCharacteristic: return "OddCharacteristic";
    case ErrorKind::NotMds: return "NotMds";
    case ErrorKind::DependentPair: return "DependentPair";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::Unsatisfiable: return "Unsatisfiable";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EncodingOutOfRange: return "EncodingOutOfRange";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) noexcept {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), m);
}

namespace fp_poly {

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Poly mod(Poly a, const Poly& b, std::uint32_t p) {
  Poly d = b;
  trim(d);
  trim(a);
  if (d.empty()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  const std::uint32_t lead_inv = inv_mod(d.back(), p);
  while (a.size() >= d.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) {
      const std::uint64_t sub = factor * d[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  Poly g = f;
  trim(g);
  const std::size_t deg = g.empty() ? 0 : g.size() - 1;
  if (deg == 0) return false;
  // Every monic divisor of degree d is enumerated as the encoding of its
  // non-leading coefficients in [0, p^d).
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      divisor[d] = 1;
      if (mod(g, divisor, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace fp_poly

FieldPtr Field::make(std::uint32_t p, std::uint32_t m,
                     std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) fail(ErrorKind::BadModulus, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) fail(ErrorKind::FieldTooLarge, "field order exceeds 2^20");
  }
  std::vector<std::uint32_t> chosen;
  if (m == 1) {
    if (modulus && !modulus->empty())
      fail(ErrorKind::NoModulusNeeded, "prime fields take no modulus");
  } else if (modulus) {
    if (modulus->size() != m)
      fail(ErrorKind::BadModulus, "modulus must list exactly m non-leading coefficients");
    for (auto c : *modulus)
      if (c >= p) fail(ErrorKind::BadModulus, "modulus coefficient out of range");
    fp_poly::Poly full = *modulus;
    full.push_back(1);
    if (!fp_poly::is_irreducible(full, p))
      fail(ErrorKind::NotIrreducible, "modulus is reducible over F_" + std::to_string(p));
    chosen = *modulus;
  } else {
    const std::uint64_t count = q;  // p^m candidate tails
    for (std::uint64_t code = 0; code < count; ++code) {
      fp_poly::Poly full(m + 1);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < m; ++i) {
        full[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      full[m] = 1;
      if (fp_poly::is_irreducible(full, p)) {
        chosen.assign(full.begin(), full.end() - 1);
        break;
      }
    }
  }
  return FieldPtr(new Field(p, m, std::move(chosen)));
}

FieldPtr Field::of_order(std::uint32_t q) {
  auto pm = prime_power(q);
  if (!pm) fail(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  return make(pm->first, pm->second);
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < m; ++i) q_ *= p;
  build_tables();
}

std::string Field::header() const {
  std::ostringstream out;
  out << "q=" << q_ << " p=" << p_ << " m=" << m_;
  if (m_ > 1) {
    out << " mod=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) out << (i ? "," : "") << modulus_[i];
  }
  return out.str();
}

std::vector<Gf> Field::elements() const {
  std::vector<Gf> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = Gf(i);
  return out;
}

std::vector<std::uint32_t> Field::digits(Gf a) const {
  std::vector<std::uint32_t> d(m_);
  std::uint32_t v = a.value;
  for (std::uint32_t i = 0; i < m_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

Gf Field::from_digits(const std::vector<std::uint32_t>& d) const {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
  return Gf(v);
}

Gf Field::add_digits(Gf a, Gf b, bool negate_b) const noexcept {
  std::uint32_t x = a.value, y = b.value, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    const std::uint32_t dx = x % p_, dy = y % p_;
    x /= p_;
    y /= p_;
    const std::uint32_t d = negate_b ? (dx + p_ - dy) % p_ : (dx + dy) % p_;
    out += d * scale;
    scale *= p_;
  }
  return Gf(out);
}

Gf Field::add_reference(Gf a, Gf b) const {
  auto da = digits(a), db = digits(b);
  for (std::uint32_t i = 0; i < m_; ++i) da[i] = (da[i] + db[i]) % p_;
  return from_digits(da);
}

Gf Field::mul_reference(Gf a, Gf b) const {
  if (m_ == 1) return Gf(static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_));
  auto da = digits(a), db = digits(b);
  fp_poly::Poly prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i)
    for (std::uint32_t j = 0; j < m_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
  fp_poly::Poly full = modulus_;
  full.push_back(1);
  auto r = fp_poly::mod(prod, full, p_);
  r.resize(m_, 0);
  return from_digits(r);
}

Gf Field::pow(Gf a, std::uint64_t e) const noexcept {
  Gf result = kOne, base = a;
  for (; e; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

Gf Field::inv(Gf a) const {
  if (a.value == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (!inv_table_.empty()) return Gf(inv_table_[a.value]);
  return pow(a, q_ - 2);
}

void Field::build_tables() {
  if (m_ > 1 && p_ != 2) {
    neg_table_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) neg_table_[a] = add_digits(kZero, Gf(a), true).value;
  }
  if (m_ > 1) {
    // Discrete log tables against the first primitive element in encoding order.
    std::vector<std::uint32_t> primes;
    std::uint32_t n = q_ - 1;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        primes.push_back(d);
        while (n % d == 0) n /= d;
      }
    }
    if (n > 1) primes.push_back(n);
    auto pow_ref = [&](Gf a, std::uint64_t e) {
      Gf r = kOne, b = a;
      for (; e; e >>= 1) {
        if (e & 1) r = mul_reference(r, b);
        b = mul_reference(b, b);
      }
      return r;
    };
    Gf generator = kOne;
    for (std::uint32_t g = 2; g < q_; ++g) {
      bool primitive = true;
      for (auto r : primes)
        if (pow_ref(Gf(g), (q_ - 1) / r) == kOne) {
          primitive = false;
          break;
        }
      if (primitive) {
        generator = Gf(g);
        break;
      }
    }
    if (q_ == 2) generator = kOne;
    log_.assign(q_, 0);
    exp_.assign(2 * (q_ - 1), 0);
    Gf x = kOne;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = exp_[i + q_ - 1] = x.value;
      log_[x.value] = i;
      x = mul_reference(x, generator);
    }
  }
  if (q_ <= 256) {
    add_table_.resize(q_ * q_);
    mul_table_.resize(q_ * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_table_[a * q_ + b] = add_reference(Gf(a), Gf(b)).value;
        mul_table_[a * q_ + b] = mul_reference(Gf(a), Gf(b)).value;
      }
  }
  inv_table_.assign(q_, 0);
  for (std::uint32_t a = 1; a < q_; ++a) {
    if (m_ == 1) {
      std::uint64_t r = 1, b = a;
      for (std::uint32_t e = p_ - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p_;
        b = b * b % p_;
      }
      inv_table_[a] = static_cast<std::uint32_t>(r);
    } else {
      inv_table_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
  }
}

}  // namespace mdslab
