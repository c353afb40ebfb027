#include "mdslab/properties.hpp"

#include <atomic>

#include "mdslab/codes.hpp"
#include "mdslab/enumerate.hpp"
#include "mdslab/equivalence.hpp"
#include "mdslab/kernels.hpp"
#include "mdslab/linalg.hpp"
#include "mdslab/parallel.hpp"

namespace mdslab {

namespace {

enum Tag : std::uint32_t { kNormalization = 1, kConditionA, kDual, kRoundTrip, kRoots, kOracle };

struct Outcome {
  bool ok = true;
  bool positive = false;
  std::string detail;
};

template <class Trial>
PropertyResult run_trials(std::string name, std::uint32_t q, std::size_t k, std::uint64_t trials, Trial&& trial) {
  PropertyResult res;
  res.name = std::move(name);
  res.q = q;
  res.k = k;
  res.trials = trials;
  std::atomic<std::uint64_t> failures{0}, positives{0};
  std::atomic<std::uint64_t> first_bad{kNoHit};
  std::vector<std::string> details(trials);
  const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t t = 0; t < n; ++t) {
    Outcome o;
    try {
      o = trial(static_cast<std::uint64_t>(t));
    } catch (const std::exception& e) {
      o = {false, false, std::string("exception: ") + e.what()};
    }
    if (o.positive) ++positives;
    if (o.ok) continue;
    ++failures;
    details[t] = std::move(o.detail);
    std::uint64_t cur = first_bad.load();
    while (static_cast<std::uint64_t>(t) < cur && !first_bad.compare_exchange_weak(cur, t)) {
    }
  }
  res.failures = failures;
  res.positives = positives;
  if (first_bad != kNoHit)
    res.first_failure = "trial " + std::to_string(first_bad.load()) + ": " + details[first_bad.load()];
  return res;
}

Matrix random_invertible(const FieldPtr& field, std::size_t k, std::mt19937_64& rng) {
  while (true) {
    Matrix g = random_matrix(field, k, k, rng);
    if (is_invertible(g)) return g;
  }
}

Matrix random_full_rank(const FieldPtr& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  while (true) {
    Matrix m = random_matrix(field, rows, cols, rng);
    if (rank(m) == rows) return m;
  }
}

/// G·M·D·Pi with G invertible, D diagonal nonzero and Pi permuting columns
/// from index `first_permuted` on. All three preserve MDS-ness.
Matrix scramble(const Matrix& m, std::size_t first_permuted, std::mt19937_64& rng) {
  const Field& f = m.field();
  Matrix out = random_invertible(m.field_ptr(), m.rows(), rng) * m;
  for (std::size_t c = 0; c < out.cols(); ++c) {
    const Gf d = random_nonzero(f, rng);
    for (std::size_t r = 0; r < out.rows(); ++r) out(r, c) = f.mul(out(r, c), d);
  }
  std::vector<std::size_t> order(out.cols());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = order.size(); i > first_permuted + 1; --i)
    std::swap(order[i - 1], order[first_permuted + rng() % (i - first_permuted)]);
  return out.select_columns(order);
}

/// Hyperoval with its two nucleus columns moved to the front.
Matrix hyperoval_mprime(const FieldPtr& field) {
  const Matrix h = hyperoval_code(field).generator;
  const std::uint32_t q = field->q();
  std::vector<std::size_t> order{q, q + 1};
  for (std::uint32_t j = 0; j < q; ++j) order.push_back(j);
  return h.select_columns(order);
}

bool columns_dependent(const Matrix& m, const std::vector<std::size_t>& cols) {
  return rank(m.select_columns(cols)) < cols.size();
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint32_t tag, std::uint32_t q, std::size_t k, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),  static_cast<std::uint32_t>(seed >> 32), tag, q,
                    static_cast<std::uint32_t>(k),     static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

Gf random_element(const Field& f, std::mt19937_64& rng) { return Gf(static_cast<std::uint32_t>(rng() % f.q())); }

Gf random_nonzero(const Field& f, std::mt19937_64& rng) {
  return Gf(1 + static_cast<std::uint32_t>(rng() % (f.q() - 1)));
}

Matrix random_matrix(const FieldPtr& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_element(*field, rng);
  return m;
}

Matrix random_mprime(const FieldPtr& field, std::size_t k, std::mt19937_64& rng) {
  while (true) {
    Matrix m = random_matrix(field, k, field->q() + 2, rng);
    if (rank(m.column_block(0, 2)) == 2) return m;
  }
}

PropertyResult prop_normalization_invariance(const FieldPtr& field, std::size_t k, std::uint64_t trials,
                                             std::uint64_t seed) {
  const std::uint32_t q = field->q();
  return run_trials("normalization_invariance", q, k, trials, [&](std::uint64_t t) {
    auto rng = trial_rng(seed, kNormalization, q, k, t);
    const Matrix mp = random_mprime(field, k, rng);
    const auto norm = normalize_first_two(mp);
    const auto before = stmt2_witness(mp);
    const auto after = stmt2_witness(norm.normalized);
    Outcome o;
    o.positive = !before;
    if (norm.normalized.column(0) != unit_vector(k, 0) || norm.normalized.column(1) != unit_vector(k, 1))
      return Outcome{false, o.positive, "normalized columns are not e1, e2"};
    if (before.has_value() != after.has_value())
      return Outcome{false, o.positive, "witness existence differs after normalization"};
    if (before) {
      // a·M' = (a·L^{-1})·(L·M')
      const Vec mapped = inverse(norm.left)->combine_rows(*before);
      if (count_zeros(norm.normalized.combine_rows(mapped)) < k)
        return Outcome{false, o.positive, "mapped witness has fewer than k zeros"};
    }
    return o;
  });
}

PropertyResult prop_condition_a_correspondence(const FieldPtr& field, std::size_t k, std::uint64_t trials,
                                               std::uint64_t seed) {
  const std::uint32_t q = field->q();
  const int n = static_cast<int>(k);
  return run_trials("condition_a_correspondence", q, k, trials, [&](std::uint64_t t) {
    auto rng = trial_rng(seed, kConditionA, q, k, t);
    const Matrix tm = random_full_rank(field, k, q, rng);
    const Matrix mp = Matrix::identity(field, k).column_block(0, 2).hstack(tm);
    const bool mds = !stmt2_witness(mp).has_value();
    const auto yz = yz_from_T(tm);
    const auto rep = check_condition_A(yz.y, yz.z, k);
    if (!rep.dims_ok) return Outcome{false, mds, "dimension conditions fail for a full-rank T"};
    if (mds != rep.all()) return Outcome{false, mds, "stmt2 verdict and condition A disagree"};
    if (rep.witness) {
      const PolyFn& g = *rep.witness->poly;
      const Subspace meet = intersect(yz.y, yz.z);
      const Subspace joined = span_union(yz.y, yz.z);
      bool valid = false;
      switch (rep.witness->condition) {
        case ConditionA::SpanInOk1: valid = joined.contains(g.coeffs()) && !in_O_n(g, n - 1); break;
        case ConditionA::YInOk2: valid = yz.y.contains(g.coeffs()) && !in_O_n(g, n - 2); break;
        case ConditionA::ZInOk2: valid = yz.z.contains(g.coeffs()) && !in_O_n(g, n - 2); break;
        case ConditionA::MeetInOk3: valid = meet.contains(g.coeffs()) && !in_O_n(g, n - 3); break;
        case ConditionA::Dims: break;
      }
      if (!valid) return Outcome{false, mds, "condition-A violator does not violate"};
    }
    return Outcome{true, mds, {}};
  });
}

PropertyResult prop_dual_translation(const FieldPtr& field, std::size_t k, std::uint64_t trials, std::uint64_t seed) {
  const std::uint32_t q = field->q();
  const bool hyperoval = field->p() == 2 && q >= 4 && k == 3;
  return run_trials("dual_translation", q, k, trials, [&](std::uint64_t t) {
    auto rng = trial_rng(seed, kDual, q, k, t);
    Matrix mp;
    if (hyperoval && t == 0)
      mp = hyperoval_mprime(field);
    else if (hyperoval && t % 4 == 0)
      mp = scramble(hyperoval_mprime(field), 2, rng);
    else
      do mp = random_mprime(field, k, rng);
      while (rank(mp.column_block(2, q)) < k);
    const bool mds = is_mds_minors(mp).mds;
    const auto w = mds_to_dual_witness(mp, k);
    if (span_union(w.yperp, w.zperp).dim() != w.s - k + 2)
      return Outcome{false, mds, "dim <Y^perp, Z^perp> != s-k+2"};
    if (w.xperp.contains(w.p_vec)) return Outcome{false, mds, "p lies in X^perp"};
    const auto check = check_dual_conditions(w, k);
    if (check.holds != mds)
      return Outcome{false, mds, "dual conditions disagree with minors (bullet " + std::to_string(check.failing_bullet) + ")"};
    return Outcome{true, mds, {}};
  });
}

PropertyResult prop_round_trip(const FieldPtr& field, std::size_t k, std::uint64_t trials, std::uint64_t seed) {
  const std::uint32_t q = field->q();
  return run_trials("round_trip", q, k, trials, [&](std::uint64_t t) {
    auto rng = trial_rng(seed, kRoundTrip, q, k, t);
    const auto yz = yz_from_T(random_full_rank(field, k, q, rng));
    const auto back = yz_from_T(t_from_yz(yz.y, yz.z));
    if (!(back.y == yz.y) || !(back.z == yz.z)) return Outcome{false, false, "round trip changed (Y, Z)"};
    return Outcome{true, true, {}};
  });
}

PropertyResult prop_root_orthogonality(const FieldPtr& field, std::uint64_t trials, std::uint64_t seed) {
  const Field& f = *field;
  const std::uint32_t q = f.q();
  // One task per (s, a); exhaustive over f when q^s is small.
  const std::uint64_t cells = std::uint64_t{q} * q;
  std::atomic<std::uint64_t> checked{0};
  PropertyResult res = run_trials("root_orthogonality", q, 0, cells, [&](std::uint64_t cell) {
    const std::size_t s = cell / q + 1;
    const Gf a = f.element(cell % q);
    const Vec r = root_vector(f, a, s);
    auto agrees = [&](const Vec& coeffs) {
      checked.fetch_add(1, std::memory_order_relaxed);
      return evaluate(f, coeffs, a).is_zero() == dot(f, coeffs, r).is_zero();
    };
    const auto total = checked_pow(q, s);
    if (total && *total <= 2048) {
      Vec coeffs(s);
      for (std::uint64_t idx = 0; idx < *total; ++idx) {
        std::uint64_t x = idx;
        for (std::size_t i = 0; i < s; ++i, x /= q) coeffs[i] = Gf(static_cast<std::uint32_t>(x % q));
        if (!agrees(coeffs)) return Outcome{false, false, "s=" + std::to_string(s) + " a=" + std::to_string(a.value)};
      }
      return Outcome{true, true, {}};
    }
    auto rng = trial_rng(seed, kRoots, q, s, cell);
    for (std::uint64_t t = 0; t < trials; ++t) {
      Vec coeffs(s);
      if (t % 2 == 0) {
        for (auto& c : coeffs) c = random_element(f, rng);
      } else {
        // (x - a)·g with deg g < s-1
        Vec g(s - 1);
        for (auto& c : g) c = random_element(f, rng);
        const Gf neg_a = f.neg(a);
        for (std::size_t i = 0; i + 1 < s; ++i) {
          coeffs[i + 1] = f.add(coeffs[i + 1], g[i]);
          coeffs[i] = f.fma(neg_a, g[i], coeffs[i]);
        }
      }
      if (!agrees(coeffs)) return Outcome{false, false, "s=" + std::to_string(s) + " a=" + std::to_string(a.value)};
    }
    return Outcome{true, true, {}};
  });
  res.trials = checked.load();
  return res;
}

PropertyResult prop_oracle_agreement(const FieldPtr& field, std::size_t k, std::size_t n, std::uint64_t trials,
                                     std::uint64_t seed) {
  const std::uint32_t q = field->q();
  const Field& f = *field;
  if (k < 1 || n < k) fail(ErrorKind::BadShape, "oracle agreement needs n >= k >= 1");
  std::optional<Matrix> structured;
  if (k >= 2 && k <= q && n <= q + 1)
    structured = extended_rs(field, k).generator;
  else if (k == 3 && f.p() == 2 && q >= 4 && n <= q + 2)
    structured = hyperoval_code(field).generator;
  PropertyResult res = run_trials("oracle_agreement_n" + std::to_string(n), q, k, trials, [&](std::uint64_t t) {
    auto rng = trial_rng(seed, kOracle, q, k * 1000 + n, t);
    Matrix m;
    if (structured && t % 2 == 1) {
      m = scramble(*structured, 0, rng).column_block(0, n);
      if (rng() % 2 == 0) m(rng() % k, rng() % n) = random_element(f, rng);
    } else {
      m = random_matrix(field, k, n, rng);
    }
    const auto minors = is_mds_minors(m);
    const auto words = is_mds_codewords(m);
    if (minors.mds != words.mds) return Outcome{false, minors.mds, "verifiers disagree (" + words.route + ")"};
    if (!minors.mds) {
      if (!columns_dependent(m, *minors.dependent_columns))
        return Outcome{false, false, "reported column subset is independent"};
      if (!words.combination || count_zeros(m.combine_rows(*words.combination)) < k)
        return Outcome{false, false, "reported combination has fewer than k zeros"};
    }
    return Outcome{true, minors.mds, {}};
  });
  return res;
}

std::vector<PropertyResult> equivalence_suite(const FieldPtr& field, std::size_t k, std::uint64_t trials,
                                              std::uint64_t seed) {
  const std::uint32_t q = field->q();
  if (k < 2 || k > q) fail(ErrorKind::BadK, "the suite needs 2 <= k <= q");
  std::vector<PropertyResult> out;
  out.push_back(prop_normalization_invariance(field, k, trials, seed));
  out.push_back(prop_condition_a_correspondence(field, k, trials, seed));
  out.push_back(prop_dual_translation(field, k, trials, seed));
  out.push_back(prop_round_trip(field, k, trials, seed));
  out.push_back(prop_root_orthogonality(field, trials, seed));
  for (std::size_t n = k; n <= q + 2; ++n) out.push_back(prop_oracle_agreement(field, k, n, trials, seed));
  return out;
}

}  // namespace mdslab
