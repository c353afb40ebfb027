// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mdslab/cli.hpp"
#include "mdslab/codes.hpp"
#include "mdslab/properties.hpp"
#include "mdslab/report.hpp"
#include "mdslab/searchb.hpp"

using namespace mdslab;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (o.ok && secs > limit_s) o.fail("took longer than " + std::to_string(static_cast<int>(limit_s)) + " s");
  std::printf("criterion %d: %s  %s [%.2f s] %s\n", id, o.ok ? "PASS" : "FAIL", title.c_str(), secs, o.detail.c_str());
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

std::string cell(std::uint32_t q, std::size_t k) {
  return "(q=" + std::to_string(q) + ",k=" + std::to_string(k) + ")";
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  code = cli::run(args, out);
  Json j = Json::parse(out.str());
  j.erase("elapsed_ms");
  return j.dump();
}

}  // namespace

int main() {
  criterion(1, "RS and extended RS are MDS under both verifiers", 60, [] {
    Outcome o;
    int cells = 0;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
      auto f = Field::of_order(q);
      for (std::size_t k = 2; k <= q; ++k)
        for (const CodeMatrix& c : {rs_code(f, k), extended_rs(f, k)}) {
          ++cells;
          if (!is_mds_minors(c.generator).mds) o.fail("minors verifier rejects n=" + std::to_string(c.n()) + " " + cell(q, k));
          if (!is_mds_codewords(c.generator).mds)
            o.fail("codeword verifier rejects n=" + std::to_string(c.n()) + " " + cell(q, k));
        }
    }
    if (o.ok) o.detail = std::to_string(cells) + " codes";
    return o;
  });

  criterion(2, "hyperoval code is MDS of width q+2", 5, [] {
    Outcome o;
    for (std::uint32_t q : {4u, 8u, 16u}) {
      const Matrix h = hyperoval_code(Field::of_order(q)).generator;
      if (h.cols() != q + 2) o.fail("wrong width at q=" + std::to_string(q));
      if (!is_mds_minors(h).mds || !is_mds_codewords(h).mds) o.fail("not MDS at q=" + std::to_string(q));
    }
    if (o.ok) o.detail = "q in {4,8,16}";
    return o;
  });

  criterion(3, "no k x (q+2) counterexample matrix exists", 600, [] {
    Outcome o;
    std::string counts;
    for (auto [q, k] : {std::pair{2u, 2u}, {3u, 2u}, {3u, 3u}}) {
      const auto r = exhaustive_stmt2(Field::of_order(q), k);
      if (r.scan.counterexample) o.fail("counterexample found at " + cell(q, k));
      counts += cell(q, k) + "=" + std::to_string(r.scan.matrices_checked) + " ";
    }
    if (o.ok) o.detail = "matrices checked " + counts;
    return o;
  });

  criterion(4, "statement (4) brute force: none at (2,2),(3,2); witness at (4,3)", 600, [] {
    Outcome o;
    for (auto [q, k] : {std::pair{2u, 2u}, {3u, 2u}}) {
      if (brute_force_stmt4(Field::of_order(q), k).witness) o.fail("unexpected witness at " + cell(q, k));
    }
    const auto r = brute_force_stmt4(Field::of_order(4), 3);
    if (!r.witness) o.fail("no witness at (q=4,k=3)");
    else if (!r.reverified) o.fail("witness at (q=4,k=3) failed re-verification");
    if (o.ok) o.detail = "(4,3) witness re-verified after " + std::to_string(r.pairs_checked) + " pairs";
    return o;
  });

  criterion(5, "condition B search: exhaustive no_witness, randomized q=101 not falsified", 40 * 60, [] {
    Outcome o;
    std::string nodes;
    const auto start = Clock::now();
    for (auto [q, k] : {std::pair{5u, 3u}, {5u, 4u}, {7u, 4u}, {7u, 5u}, {7u, 6u}}) {
      SearchOptions opt;
      const auto r = search_condition_b(Field::of_order(q), k, opt);
      if (r.verdict() != "no_witness") o.fail(cell(q, k) + " verdict " + r.verdict());
      if (r.s_range.size() != q - k) o.fail(cell(q, k) + " did not cover every s");
      nodes += cell(q, k) + "=" + std::to_string(r.nodes_explored) + " ";
    }
    const double ex_s = std::chrono::duration<double>(Clock::now() - start).count();
    if (ex_s > 30 * 60) o.fail("exhaustive part took longer than 30 min");

    const auto rstart = Clock::now();
    SearchOptions opt;
    opt.mode = SearchMode::Randomized;
    opt.budget = 100000;
    opt.seed = 42;
    const auto r = search_condition_b(Field::of_order(101), 5, opt);
    const double rnd_s = std::chrono::duration<double>(Clock::now() - rstart).count();
    if (r.verdict() != "not_falsified") o.fail("randomized verdict " + r.verdict());
    if (r.candidates_tested != opt.budget) o.fail("randomized run stopped early");
    if (rnd_s > 10 * 60) o.fail("randomized part took longer than 10 min");
    if (o.ok) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "randomized %llu samples in %.1f s", static_cast<unsigned long long>(r.candidates_tested),
                    rnd_s);
      o.detail = "nodes " + nodes + "; " + buf;
    }
    return o;
  });

  criterion(6, "the only column extending RS(q,k) is e_k", 300, [] {
    Outcome o;
    int cells = 0;
    for (std::uint32_t q : {5u, 7u, 9u, 11u}) {
      auto f = Field::of_order(q);
      for (std::size_t k = 3; k + 2 <= q; ++k) {
        ++cells;
        const auto cols = extension_columns(rs_code(f, k).generator);
        Vec ek(k);
        ek[k - 1] = kOne;
        if (cols != std::vector<Vec>{ek}) o.fail(cell(q, k) + " has " + std::to_string(cols.size()) + " extensions");
      }
    }
    if (o.ok) o.detail = std::to_string(cells) + " codes";
    return o;
  });

  criterion(7, "equivalence property suites, 1000 trials each, zero failures", 1800, [] {
    Outcome o;
    const std::uint64_t trials = 1000, seed = 2024;
    std::uint64_t runs = 0;
    auto take = [&](const PropertyResult& r) {
      ++runs;
      if (!r.passed())
        o.fail(r.name + " " + cell(r.q, r.k) + " failed " + std::to_string(r.failures) + "/" + std::to_string(r.trials) +
               (r.first_failure ? ": " + *r.first_failure : ""));
    };
    for (std::uint32_t q : {3u, 5u, 7u})
      for (std::size_t k : {2u, 3u}) take(prop_normalization_invariance(Field::of_order(q), k, trials, seed));
    for (std::uint32_t q : {3u, 5u})
      for (std::size_t k : {2u, 3u}) {
        take(prop_condition_a_correspondence(Field::of_order(q), k, trials, seed));
        take(prop_round_trip(Field::of_order(q), k, trials, seed));
      }
    std::uint64_t hyper_true = 0;
    for (std::uint32_t q : {3u, 4u, 5u})
      for (std::size_t k : {2u, 3u}) {
        const auto r = prop_dual_translation(Field::of_order(q), k, trials, seed);
        if (q == 4 && k == 3) hyper_true = r.positives;
        take(r);
      }
    if (hyper_true == 0) o.fail("dual translation never saw a true case at q=4");
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) take(prop_root_orthogonality(Field::of_order(q), trials, seed));
    if (o.ok) o.detail = std::to_string(runs) + " suite runs";
    return o;
  });

  criterion(8, "minors and codeword verifiers agree on 500 random matrices per cell", 600, [] {
    Outcome o;
    int cells = 0, skipped = 0;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u})
      for (std::size_t k : {2u, 3u}) {
        if (k > q) {
          ++skipped;  // outside the k <= q domain of a code
          continue;
        }
        for (std::size_t n = k; n <= q + 2; ++n) {
          ++cells;
          const auto r = prop_oracle_agreement(Field::of_order(q), k, n, 500, 8);
          if (!r.passed()) o.fail("disagreement at " + cell(q, k) + " n=" + std::to_string(n));
        }
      }
    if (o.ok) o.detail = std::to_string(cells) + " cells, " + std::to_string(skipped) + " (q,k) pair skipped for k > q";
    return o;
  });

  criterion(9, "identical flags give byte-identical JSON apart from elapsed_ms", 600, [] {
    Outcome o;
    const std::vector<std::vector<std::string>> runs{
        {"equiv-suite", "--q", "5", "--k", "3", "--trials", "1000", "--seed", "42"},
        {"search-b", "--q", "7", "--k", "4", "--mode", "exhaustive", "--deterministic"},
        {"search-b", "--q", "4", "--k", "3", "--mode", "exhaustive", "--deterministic"},
    };
    for (const auto& args : runs) {
      int c1 = 0, c2 = 0;
      const std::string a = run_cli(args, c1), b = run_cli(args, c2);
      if (a != b || c1 != c2) o.fail("outputs differ for " + args[0] + " " + args[2]);
    }
    if (o.ok) o.detail = std::to_string(runs.size()) + " command pairs";
    return o;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
