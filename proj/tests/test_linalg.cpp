#include <random>
#include <set>

#include "doctest.h"
#include "mdslab/enumerate.hpp"
#include "mdslab/linalg.hpp"
#include "test_util.hpp"

using namespace mdslab;
using testutil::error_of;
using testutil::mat;
using testutil::vec;

namespace {

std::set<Vec> brute_perp(const Subspace& v) {
  const Field& f = v.field();
  std::set<Vec> out;
  const std::size_t d = v.ambient_dim();
  const Matrix all = Matrix::identity(v.field_ptr(), d);
  for (const Vec& x : testutil::span_set(all)) {
    bool ok = true;
    for (std::size_t i = 0; i < v.dim() && ok; ++i) ok = dot(f, x, v.basis().row(i)).is_zero();
    if (ok) out.insert(x);
  }
  return out;
}

Subspace random_subspace(const FieldPtr& f, std::size_t d, std::size_t gens, std::mt19937_64& rng) {
  return Subspace::from_rows(testutil::random_matrix(f, gens, d, rng));
}

std::uint64_t gaussian_binomial(std::uint64_t q, std::uint64_t n, std::uint64_t k) {
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (std::uint64_t j = 0; j < n - i; ++j) a *= q;
    for (std::uint64_t j = 0; j < i + 1; ++j) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

}  // namespace

TEST_CASE("rank and rref examples") {
  auto f2 = Field::of_order(2);
  CHECK(rank(mat(f2, {{1, 1}, {1, 1}})) == 1);
  auto r = rref(mat(f2, {{0, 1}, {1, 0}}));
  CHECK(r.rank == 2);
  CHECK(r.reduced == Matrix::identity(f2, 2));
  auto f5 = Field::of_order(5);
  const Matrix vdm = mat(f5, {{1, 1, 1}, {0, 1, 2}, {0, 1, 4}});
  CHECK(rank(vdm) == 3);
  CHECK(testutil::det_cofactor(vdm) == Gf(2));
}

TEST_CASE("is_invertible examples") {
  auto f7 = Field::of_order(7);
  CHECK(is_invertible(Matrix::identity(f7, 4)));
  CHECK_FALSE(is_invertible(mat(f7, {{1, 2}, {0, 0}})));
  CHECK_FALSE(is_invertible(mat(Field::of_order(5), {{1, 1}, {2, 2}})));
  CHECK(error_of([&] { is_invertible(mat(f7, {{1, 2, 3}})); }) == ErrorKind::NotSquare);
}

TEST_CASE("subspace canonical forms") {
  auto f3 = Field::of_order(3);
  auto v = Subspace::from_rows(mat(f3, {{1, 1}, {2, 2}}));
  CHECK(v.dim() == 1);
  CHECK(v.basis() == mat(f3, {{1, 1}}));
  CHECK(Subspace::from_rows(Matrix(f3, 2, 3)).dim() == 0);
  auto w = Subspace::from_rows(mat(f3, {{0, 1, 2}, {1, 1, 1}}));
  CHECK(w.basis() == mat(f3, {{1, 0, 2}, {0, 1, 2}}));
}

TEST_CASE("span_union, intersect, perp, contains examples") {
  auto f3 = Field::of_order(3);
  auto f5 = Field::of_order(5);
  auto e = [](const FieldPtr& f, std::size_t d, std::vector<std::size_t> idx) {
    std::vector<Vec> rows;
    for (auto i : idx) rows.push_back(unit_vector(d, i));
    return Subspace::from_vectors(f, d, rows);
  };
  auto y = Subspace::from_rows(mat(f3, {{1, 1, 1}}));
  auto z = Subspace::from_rows(mat(f3, {{1, 2, 0}}));
  CHECK(span_union(y, y) == y);
  CHECK(span_union(e(f5, 3, {0}), e(f5, 3, {1})) == e(f5, 3, {0, 1}));
  CHECK(span_union(y, z).dim() == 2);

  CHECK(intersect(y, y) == y);
  CHECK(intersect(e(f5, 3, {0}), e(f5, 3, {1})).dim() == 0);
  CHECK(intersect(e(f3, 3, {0, 1}), e(f3, 3, {1, 2})) == e(f3, 3, {1}));

  CHECK(perp(Subspace::full(f5, 3)).dim() == 0);
  CHECK(perp(e(f5, 3, {0})) == e(f5, 3, {1, 2}));
  CHECK(perp(y).basis() == mat(f3, {{1, 0, 2}, {0, 1, 2}}));

  CHECK(y.contains(vec({0, 0, 0})));
  CHECK_FALSE(e(f3, 3, {0, 1}).contains(vec({0, 0, 1})));
  CHECK(y.contains(vec({2, 2, 2})));
  CHECK(error_of([&] { y.contains(vec({1, 1})); }) == ErrorKind::LengthMismatch);
  CHECK(error_of([&] { span_union(y, e(f3, 2, {0})); }) == ErrorKind::AmbientMismatch);
}

TEST_CASE("rank, inverse, nullspace and solve against brute force") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    auto f = Field::of_order(q);
    std::mt19937_64 rng(q);
    for (int t = 0; t < 200; ++t) {
      const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
      Matrix m = testutil::random_matrix(f, rows, cols, rng);
      if (t % 3 == 0 && rows > 1) m.row(rows - 1)[0] = m(0, 0);  // nudge towards dependence
      REQUIRE(rank(m) == testutil::rank_by_span(m));

      const Matrix ns = nullspace(m);
      CHECK(ns.rows() == cols - rank(m));
      for (std::size_t i = 0; i < ns.rows(); ++i) CHECK(is_zero(m.apply(ns.row(i))));

      Vec b(rows);
      for (auto& x : b) x = Gf(rng() % q);
      auto x = solve(m, b);
      bool consistent = rank(m.transpose().vstack(Matrix::from_rows(f, {b}, rows))) == rank(m);
      CHECK(x.has_value() == consistent);
      if (x) CHECK(m.apply(*x) == b);

      if (rows == cols) {
        const bool inv = !testutil::det_cofactor(m).is_zero();
        CHECK(is_invertible(m) == inv);
        auto mi = inverse(m);
        CHECK(mi.has_value() == inv);
        if (mi) CHECK(*mi * m == Matrix::identity(f, rows));
      }
    }
  }
}

TEST_CASE("subspace operations against brute-force sets") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    auto f = Field::of_order(q);
    std::mt19937_64 rng(100 + q);
    for (int t = 0; t < 60; ++t) {
      const std::size_t d = 1 + rng() % (q <= 3 ? 5 : 3);
      auto v = random_subspace(f, d, rng() % (d + 1), rng);
      auto w = random_subspace(f, d, rng() % (d + 1), rng);
      const auto sv = testutil::span_set(v.basis().rows() ? v.basis() : Matrix(f, 1, d));
      const auto sw = testutil::span_set(w.basis().rows() ? w.basis() : Matrix(f, 1, d));

      std::set<Vec> meet;
      for (const auto& x : sv)
        if (sw.count(x)) meet.insert(x);
      const auto inter = intersect(v, w);
      CHECK(testutil::span_set(inter.basis().rows() ? inter.basis() : Matrix(f, 1, d)) == meet);

      CHECK(v.dim() + w.dim() == inter.dim() + span_union(v, w).dim());

      const auto pv = perp(v);
      CHECK(testutil::span_set(pv.basis().rows() ? pv.basis() : Matrix(f, 1, d)) == brute_perp(v));
      CHECK(v.dim() + pv.dim() == d);
      CHECK(perp(pv) == v);
      for (const auto& x : sv) CHECK(v.contains(x));
    }
  }
}

TEST_CASE("disjointness duality") {
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    auto f = Field::of_order(q);
    std::mt19937_64 rng(7 * q);
    for (int t = 0; t < 200; ++t) {
      const std::size_t d = 2 + rng() % 5;
      const std::size_t a = rng() % (d + 1);
      auto v = random_subspace(f, d, a, rng);
      auto w = random_subspace(f, d, d - v.dim(), rng);
      if (v.dim() + w.dim() != d) continue;
      CHECK((intersect(v, w).dim() == 0) == (intersect(perp(v), perp(w)).dim() == 0));
    }
  }
}

TEST_CASE("enumerate_subspaces") {
  auto f3 = Field::of_order(3);
  CHECK(enumerate_subspaces(f3, 3, 1).size() == 13);
  CHECK(enumerate_subspaces(Field::of_order(2), 2, 1).size() == 3);
  for (auto [q, d, r] : {std::tuple{2u, 4u, 2u}, {3u, 3u, 2u}, {4u, 4u, 2u}, {4u, 3u, 1u}, {5u, 3u, 2u}}) {
    auto f = Field::of_order(q);
    auto all = enumerate_subspaces(f, d, r);
    CHECK(all.size() == gaussian_binomial(q, d, r));
    std::set<std::vector<std::uint32_t>> distinct;
    for (const auto& s : all) {
      CHECK(s.dim() == r);
      distinct.insert(s.basis().values());
    }
    CHECK(distinct.size() == all.size());
  }
}

TEST_CASE("projective and combination enumeration") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    for (std::size_t d = 1; d <= 4; ++d) {
      std::uint64_t rank_expected = 0;
      Vec prev;
      for_each_projective(q, d, [&](std::span<const Gf> v) {
        Vec cur(v.begin(), v.end());
        Vec un(d);
        projective_unrank(q, rank_expected, un);
        CHECK(un == cur);
        CHECK(normalize_projective(*Field::of_order(q), cur) == cur);
        if (!prev.empty()) CHECK(prev < cur);
        prev = cur;
        ++rank_expected;
        return true;
      });
      CHECK(rank_expected == projective_count(q, d));
    }
  }
  CHECK(projective_count(3, 3) == 13);
  CHECK(error_of([] { projective_count(101, 20); }) == ErrorKind::TooLarge);

  std::vector<std::size_t> c{0, 1, 2};
  std::uint64_t idx = 0;
  do {
    std::vector<std::size_t> u(3);
    combination_unrank(6, 3, idx++, u);
    CHECK(u == c);
  } while (next_combination(6, c));
  CHECK(idx == binomial(6, 3));
  CHECK(binomial(103, 5) == 87541245ull);
}
