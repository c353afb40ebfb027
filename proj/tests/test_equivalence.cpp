#include <algorithm>
#include <random>

#include "doctest.h"
#include "mdslab/codes.hpp"
#include "mdslab/enumerate.hpp"
#include "mdslab/equivalence.hpp"
#include "mdslab/properties.hpp"
#include "test_util.hpp"

using namespace mdslab;
using testutil::error_of;
using testutil::mat;
using testutil::vec;

namespace {

PolyFn poly(const FieldPtr& f, std::vector<std::uint32_t> c) {
  c.resize(f->q(), 0);
  return PolyFn(f, vec(c));
}

Subspace span_of(const FieldPtr& f, const std::vector<std::vector<std::uint32_t>>& rows) {
  std::vector<Vec> vs;
  for (auto r : rows) {
    r.resize(f->q(), 0);
    vs.push_back(vec(r));
  }
  return Subspace::from_vectors(f, f->q(), vs);
}

// Hyperoval with the two extra columns moved to the front.
Matrix hyperoval_front(const FieldPtr& f) {
  const Matrix h = hyperoval_code(f).generator;
  std::vector<std::size_t> order{f->q(), f->q() + 1};
  for (std::size_t j = 0; j < f->q(); ++j) order.push_back(j);
  return h.select_columns(order);
}

// Condition B by cofactor determinants and brute-force span size.
std::pair<bool, bool> condition_b_oracle(const FieldPtr& f, std::size_t k, std::size_t s, const std::vector<Vec>& b) {
  const std::uint32_t q = f->q();
  std::vector<Vec> pool;
  for (std::uint32_t j = 0; j < q; ++j) {
    Vec r(s);
    Gf pw = kOne;
    for (std::size_t i = 0; i < s; ++i, pw = f->mul(pw, Gf(j))) r[i] = pw;
    pool.push_back(r);
  }
  pool.push_back(b[s - k]);
  pool.push_back(b[s - k + 1]);
  bool a = true;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  do {
    std::vector<Vec> cols(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(s - k));
    for (auto i : c) cols.push_back(pool[i]);
    if (testutil::det_cofactor(Matrix::from_columns(f, cols, s)).is_zero()) a = false;
  } while (a && next_combination(pool.size(), c));
  std::vector<Vec> with_p = b;
  with_p.push_back(unit_vector(s, s - 1));
  const bool bb = testutil::rank_by_span(Matrix::from_rows(f, with_p, s)) == with_p.size();
  return {a, bb};
}

}  // namespace

TEST_CASE("stmt2_witness examples") {
  auto f2 = Field::of_order(2);
  CHECK(stmt2_witness(mat(f2, {{1, 0, 1, 1}, {0, 1, 1, 0}})) == vec({0, 1}));
  auto f3 = Field::of_order(3);
  CHECK(stmt2_witness(mat(f3, {{1, 2, 1, 1, 2}, {0, 0, 0, 0, 0}})) == vec({0, 1}));
  CHECK_FALSE(stmt2_witness(hyperoval_code(Field::of_order(4)).generator));
  CHECK(error_of([&] { stmt2_witness(mat(f3, {{1, 2, 1}, {0, 1, 0}})); }) == ErrorKind::BadShape);
}

TEST_CASE("normalize_first_two examples") {
  auto f2 = Field::of_order(2);
  const Matrix m = mat(f2, {{1, 0, 1, 0}, {1, 1, 0, 1}});
  const auto n = normalize_first_two(m);
  CHECK(n.left == mat(f2, {{1, 0}, {1, 1}}));
  CHECK(n.normalized == n.left * m);
  auto f5 = Field::of_order(5);
  const Matrix id = mat(f5, {{1, 0, 3, 4, 1, 2, 2}, {0, 1, 1, 1, 1, 1, 1}});
  CHECK(normalize_first_two(id).left == Matrix::identity(f5, 2));
  auto f3 = Field::of_order(3);
  CHECK(error_of([&] { normalize_first_two(mat(f3, {{1, 2, 1, 1, 1}, {0, 0, 1, 2, 0}})); }) ==
        ErrorKind::DependentPair);
}

TEST_CASE("normalize_first_two on random inputs") {
  auto f = Field::of_order(7);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = 2 + rng() % 3;
    const Matrix m = testutil::random_matrix(f, k, 9, rng);
    if (rank(m.column_block(0, 2)) < 2) continue;
    const auto n = normalize_first_two(m);
    CHECK_FALSE(testutil::det_cofactor(n.left).is_zero());
    CHECK(n.normalized == n.left * m);
    CHECK(n.normalized.column(0) == unit_vector(k, 0));
    CHECK(n.normalized.column(1) == unit_vector(k, 1));
  }
}

TEST_CASE("yz_from_T and t_from_yz examples") {
  auto f3 = Field::of_order(3);
  const Matrix t = mat(f3, {{1, 1, 1}, {0, 1, 2}});
  const auto yz = yz_from_T(t);
  CHECK(yz.y == span_of(f3, {{0, 1}}));
  CHECK(yz.z == span_of(f3, {{1}}));
  const auto swapped = yz_from_T(mat(f3, {{0, 1, 2}, {1, 1, 1}}));
  CHECK(swapped.y == yz.z);
  CHECK(swapped.z == yz.y);
  CHECK(error_of([&] { yz_from_T(mat(f3, {{1, 1, 1}, {2, 2, 2}})); }) == ErrorKind::RankDeficient);

  const Matrix back = t_from_yz(span_of(f3, {{0, 1}}), span_of(f3, {{1}}));
  CHECK(back.row_vec(0) == vec({1, 1, 1}));
  CHECK(back.row_vec(1) == vec({0, 1, 2}));
  CHECK(error_of([&] { t_from_yz(yz.y, yz.y); }) == ErrorKind::BadDims);
}

TEST_CASE("yz_from_T dimensions and round trip") {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    auto f = Field::of_order(q);
    std::mt19937_64 rng(q);
    for (int t = 0; t < 100; ++t) {
      const std::size_t k = 2 + rng() % (q - 1);
      const Matrix tm = testutil::random_matrix(f, k, q, rng);
      if (rank(tm) < k) continue;
      const auto yz = yz_from_T(tm);
      CHECK(yz.y.dim() == k - 1);
      CHECK(yz.z.dim() == k - 1);
      CHECK(span_union(yz.y, yz.z).dim() == k);
      CHECK(intersect(yz.y, yz.z).dim() == k - 2);
      const auto again = yz_from_T(t_from_yz(yz.y, yz.z));
      CHECK(again.y == yz.y);
      CHECK(again.z == yz.z);
    }
  }
}

TEST_CASE("check_condition_A examples") {
  auto f3 = Field::of_order(3);
  const auto r = check_condition_A(span_of(f3, {{0, 1}}), span_of(f3, {{1}}), 2);
  CHECK(r.dims_ok);
  CHECK(r.span_in_Ok1);
  CHECK_FALSE(r.y_in_Ok2);
  CHECK(r.z_in_Ok2);
  CHECK(r.meet_in_Ok3);
  REQUIRE(r.witness);
  CHECK(r.witness->condition == ConditionA::YInOk2);
  CHECK(r.witness->poly == poly(f3, {0, 1}));

  const auto same = check_condition_A(span_of(f3, {{0, 1}}), span_of(f3, {{0, 1}}), 2);
  CHECK_FALSE(same.dims_ok);
  REQUIRE(same.witness);
  CHECK(same.witness->condition == ConditionA::Dims);

  // Hyperoval pipeline: all five conditions hold.
  auto f4 = Field::of_order(4);
  const auto n = normalize_first_two(hyperoval_front(f4));
  const auto yz = yz_from_T(n.normalized.column_block(2, 4));
  const auto h = check_condition_A(yz.y, yz.z, 3);
  CHECK(h.all());
  CHECK_FALSE(h.witness);
}

TEST_CASE("condition A agrees with a brute-force root count") {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    auto f = Field::of_order(q);
    std::mt19937_64 rng(q + 1);
    for (int t = 0; t < 60; ++t) {
      const std::size_t k = 2 + rng() % 2;
      const Matrix tm = testutil::random_matrix(f, k, q, rng);
      if (rank(tm) < k) continue;
      const auto yz = yz_from_T(tm);
      auto max_roots = [&](const Subspace& v) {
        std::size_t m = 0;
        for (const Vec& c : testutil::span_set(v.basis()))
          if (!is_zero(c)) m = std::max(m, distinct_roots(PolyFn(f, c)));
        return m;
      };
      const auto meet = intersect(yz.y, yz.z);
      const auto r = check_condition_A(yz.y, yz.z, k);
      CHECK(r.span_in_Ok1 == (max_roots(span_union(yz.y, yz.z)) <= k - 1));
      CHECK(r.y_in_Ok2 == (max_roots(yz.y) <= k - 2));
      CHECK(r.z_in_Ok2 == (max_roots(yz.z) <= k - 2));
      const bool meet_ok = k >= 3 ? max_roots(meet) <= k - 3 : meet.dim() == 0;
      CHECK(r.meet_in_Ok3 == meet_ok);
    }
  }
}

TEST_CASE("mds_to_dual_witness and check_dual_conditions") {
  auto f4 = Field::of_order(4);
  const auto w = mds_to_dual_witness(hyperoval_front(f4), 3);
  CHECK(w.s == 3);
  CHECK(w.xperp.dim() == 0);
  CHECK(w.p_vec == vec({0, 0, 1}));
  CHECK(check_dual_conditions(w, 3).holds);

  // Duplicate column: not MDS, some bullet fails.
  Matrix dup = hyperoval_front(f4);
  for (std::size_t r = 0; r < 3; ++r) dup(r, 5) = dup(r, 4);
  CHECK_FALSE(is_mds_minors(dup).mds);
  const auto bad = check_dual_conditions(mds_to_dual_witness(dup, 3), 3);
  CHECK_FALSE(bad.holds);
  CHECK(bad.failing_bullet >= 1);
  CHECK(bad.failing_bullet <= 4);

  for (std::uint32_t q : {3u, 4u, 5u}) {
    auto f = Field::of_order(q);
    std::mt19937_64 rng(q * 3);
    int checked = 0;
    for (int t = 0; t < 150; ++t) {
      const std::size_t k = 2 + rng() % 2;
      const Matrix mp = testutil::random_matrix(f, k, q + 2, rng);
      if (rank(mp.column_block(0, 2)) < 2 || rank(mp.column_block(2, q)) < k) continue;
      const auto dw = mds_to_dual_witness(mp, k);
      CHECK(dw.s >= k);
      CHECK(dw.s <= q);
      CHECK(dw.xperp.dim() == dw.s - k);
      CHECK(dw.yperp.dim() == dw.s - k + 1);
      CHECK(dw.zperp.dim() == dw.s - k + 1);
      CHECK(intersect(dw.xperp, intersect(dw.yperp, dw.zperp)) == dw.xperp);
      CHECK(span_union(dw.yperp, dw.zperp).dim() == dw.s - k + 2);
      CHECK_FALSE(dw.xperp.contains(dw.p_vec));
      CHECK(check_dual_conditions(dw, k).holds == is_mds_minors(mp).mds);
      ++checked;
    }
    CHECK(checked > 20);
  }
  CHECK(error_of([&] { mds_to_dual_witness(mat(f4, {{1, 2, 1, 0, 0, 1}, {0, 0, 0, 1, 1, 1}, {0, 0, 1, 1, 0, 0}}), 3); }) ==
        ErrorKind::DependentPair);
}

TEST_CASE("check_condition_B examples") {
  auto f5 = Field::of_order(5);
  const std::vector<Vec> b{vec({0, 0, 0, 1}), vec({0, 0, 1, 0}), vec({0, 1, 0, 0})};
  const auto r = check_condition_B(f5, 3, 4, b);
  CHECK_FALSE(r.holds);
  CHECK_FALSE(r.a_holds);
  REQUIRE(r.singular_choice);
  CHECK(*r.singular_choice == std::vector<std::size_t>{1, 4, 6});
  CHECK(pool_label(1, 5) == "r1");
  CHECK(pool_label(5, 5) == "y");
  CHECK(pool_label(6, 5) == "z");
  // The certificate really is singular: det ∝ b^2 - a^2 with a = 1, b = 4.
  CHECK(testutil::det_cofactor(Matrix::from_columns(f5, {b[0], root_vector(*f5, Gf(1), 4), root_vector(*f5, Gf(4), 4), b[2]}, 4))
            .is_zero());

  // e_s inside B breaks (b).
  const auto with_p = check_condition_B(f5, 3, 4, {vec({1, 1, 0, 0}), vec({0, 0, 0, 1}), vec({0, 1, 1, 0})});
  CHECK_FALSE(with_p.b_holds);
  CHECK_FALSE(with_p.holds);

  // First column equal to an R column: duplicate column in a submatrix.
  const auto dup = check_condition_B(f5, 3, 4, {root_vector(*f5, Gf(2), 4), vec({0, 1, 0, 0}), vec({0, 0, 1, 0})});
  CHECK_FALSE(dup.a_holds);

  CHECK(error_of([&] { check_condition_B(f5, 2, 3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 0})}); }) ==
        ErrorKind::Unsatisfiable);
  CHECK(error_of([&] { check_condition_B(f5, 3, 4, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0})}); }) == ErrorKind::BadShape);
  CHECK(error_of([&] { check_condition_B(f5, 3, 4, {vec({1, 0, 0, 0}), vec({1, 0, 0, 0}), vec({0, 1, 0, 0})}); }) ==
        ErrorKind::BadShape);
  CHECK(error_of([&] { check_condition_B(f5, 3, 3, {vec({1, 0, 0}), vec({0, 1, 0})}); }) == ErrorKind::BadS);
  CHECK(error_of([&] { check_condition_B(f5, 3, 6, {}); }) == ErrorKind::BadS);
}

TEST_CASE("check_condition_B against the determinant oracle") {
  for (auto [q, k, s] : {std::tuple{5u, 3u, 4u}, {5u, 3u, 5u}, {4u, 3u, 4u}, {7u, 4u, 6u}}) {
    auto f = Field::of_order(q);
    std::mt19937_64 rng(q * 10 + s);
    for (int t = 0; t < 300; ++t) {
      std::vector<Vec> b;
      while (b.size() < s - k + 2) {
        Vec v(s);
        for (auto& x : v) x = Gf(static_cast<std::uint32_t>(rng() % q));
        if (is_zero(v)) continue;
        v = normalize_projective(*f, v);
        if (std::find(b.begin(), b.end(), v) == b.end()) b.push_back(v);
      }
      const auto got = check_condition_B(f, k, s, b);
      const auto [a, bb] = condition_b_oracle(f, k, s, b);
      CHECK(got.a_holds == a);
      CHECK(got.b_holds == bb);
      CHECK(got.holds == (a && bb));
    }
  }
}

TEST_CASE("property suites pass on small trial counts") {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    auto f = Field::of_order(q);
    for (std::size_t k : {2u, 3u}) {
      for (const auto& r : equivalence_suite(f, k, 60, 7)) {
        CAPTURE(r.name);
        CAPTURE(q);
        CAPTURE(k);
        CHECK(r.passed());
        CHECK(r.trials > 0);
      }
    }
  }
  const auto dual = prop_dual_translation(Field::of_order(4), 3, 40, 1);
  CHECK(dual.passed());
  CHECK(dual.positives > 0);  // the hyperoval supplies true cases
  CHECK(error_of([] { equivalence_suite(Field::of_order(3), 4, 1, 0); }) == ErrorKind::BadK);
}

TEST_CASE("property suites are reproducible") {
  auto f = Field::of_order(5);
  const auto a = prop_normalization_invariance(f, 3, 100, 42);
  const auto b = prop_normalization_invariance(f, 3, 100, 42);
  CHECK(a.positives == b.positives);
  CHECK(a.failures == b.failures);
  CHECK(trial_rng(1, 2, 3, 4, 5)() == trial_rng(1, 2, 3, 4, 5)());
  CHECK(trial_rng(1, 2, 3, 4, 5)() != trial_rng(1, 2, 3, 4, 6)());
}
