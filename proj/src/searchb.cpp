#include "mdslab/searchb.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "mdslab/codes.hpp"
#include "mdslab/enumerate.hpp"
#include "mdslab/parallel.hpp"

namespace mdslab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_search_k(const Field& f, std::size_t k) {
  if (k < 3 || k >= f.q())
    fail(ErrorKind::BadK, "condition-B search needs 3 <= k < q, got k=" + std::to_string(k));
}

std::vector<std::size_t> s_values(std::size_t k, std::uint32_t q) {
  std::vector<std::size_t> out;
  for (std::size_t s = k + 1; s <= q; ++s) out.push_back(s);
  return out;
}

/// Row j holds the coefficients of the polynomial that is 1 at element j and
/// 0 elsewhere, so coeffs = values · L.
Matrix interpolation_matrix(const FieldPtr& field) {
  const std::uint32_t q = field->q();
  Matrix l(field, q, q);
  for (std::uint32_t j = 0; j < q; ++j) {
    const PolyFn p = interpolate(field, unit_vector(q, j));
    std::copy(p.coeffs().begin(), p.coeffs().end(), l.row(j).begin());
  }
  return l;
}

/// B from the coefficient rows P (k×s): sorted normalized kernel basis, then
/// preimages of e1 and e2.
std::vector<Vec> witness_columns(const Matrix& p) {
  const Field& f = p.field();
  const std::size_t k = p.rows();
  const Matrix kernel = nullspace(p);
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < kernel.rows(); ++i) basis.push_back(normalize_projective(f, kernel.row_vec(i)));
  std::sort(basis.begin(), basis.end());
  basis.push_back(normalize_projective(f, *solve(p, unit_vector(k, 0))));
  basis.push_back(normalize_projective(f, *solve(p, unit_vector(k, 1))));
  return basis;
}

struct BranchResult {
  std::uint64_t nodes = 0;
  std::uint64_t candidates = 0;
  std::optional<BWitness> witness;
  bool complete = false;
};

class ProjectedSearch {
 public:
  ProjectedSearch(const FieldPtr& field, std::size_t k, std::uint64_t budget, std::atomic<std::uint64_t>& nodes,
                  std::atomic<bool>& stop)
      : field_(field), f_(*field), k_(k), m_(field->q() + 2 - k), budget_(budget), nodes_(nodes), stop_(stop),
        interp_(interpolation_matrix(field)) {}

  /// First-column-of-ones start shared by every branch.
  std::vector<Vec> roots() const { return {Vec(k_, kOne)}; }

  BranchResult run_branch(const Vec& second) {
    BranchResult r;
    std::vector<Vec> cols = roots();
    cols.push_back(second);
    aborted_ = false;
    dfs(cols, r);
    r.complete = !aborted_;
    return r;
  }

  std::vector<Vec> extensions(const std::vector<Vec>& cols) const {
    Matrix sys = Matrix::identity(field_, k_).hstack(Matrix::from_columns(field_, cols, k_));
    return extension_columns(sys);
  }

 private:
  bool charge_node() {
    const std::uint64_t used = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (stop_.load(std::memory_order_relaxed) || (budget_ != 0 && used > budget_)) {
      aborted_ = true;
      return false;
    }
    return true;
  }

  bool dfs(std::vector<Vec>& cols, BranchResult& r) {
    if (!charge_node()) return true;
    ++r.nodes;
    if (cols.size() == m_) return expand_scalings(cols, r);
    for (const Vec& next : extensions(cols)) {
      cols.push_back(next);
      const bool done = dfs(cols, r);
      cols.pop_back();
      if (done) return true;
    }
    return false;
  }

  /// Evaluation columns: e3..ek for the first k-2 points, then A's columns.
  Matrix evaluation_block(const std::vector<Vec>& cols) const {
    const std::uint32_t q = f_.q();
    Matrix t(field_, k_, q);
    for (std::uint32_t j = 0; j < q; ++j) {
      if (j + 2 < k_)
        t(j + 2, j) = kOne;
      else
        for (std::size_t i = 0; i < k_; ++i) t(i, j) = cols[j + 2 - k_][i];
    }
    return t;
  }

  bool expand_scalings(const std::vector<Vec>& cols, BranchResult& r) {
    const std::uint32_t q = f_.q();
    const Matrix t = evaluation_block(cols);
    // Base coefficients of each column's contribution: row i of column j adds
    // t(i,j) * lambda_j * interp_.row(j).
    std::vector<Gf> lambda(q, kOne);
    Matrix coeffs(field_, k_, q);
    while (true) {
      ++r.candidates;
      for (std::size_t i = 0; i < k_; ++i) {
        auto row = coeffs.row(i);
        std::fill(row.begin(), row.end(), kZero);
        for (std::uint32_t j = 0; j < q; ++j) {
          if (t(i, j).is_zero()) continue;
          axpy(f_, f_.mul(t(i, j), lambda[j]), interp_.row(j), row);
        }
      }
      if (auto w = try_witness(coeffs)) {
        r.witness = std::move(w);
        return true;
      }
      // Odometer over lambda_1..lambda_{q-1} in F*, last fastest.
      std::size_t j = q;
      while (j-- > 1) {
        if (lambda[j].value + 1 < q) {
          lambda[j] = Gf(lambda[j].value + 1);
          break;
        }
        lambda[j] = kOne;
      }
      if (j == 0) return false;
      if (stop_.load(std::memory_order_relaxed)) {
        aborted_ = true;
        return true;
      }
    }
  }

  std::optional<BWitness> try_witness(const Matrix& coeffs) const {
    std::size_t s = 0;
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t c = f_.q(); c > s; --c)
        if (!coeffs(i, c - 1).is_zero()) {
          s = c;
          break;
        }
    if (s <= k_) return std::nullopt;
    // Py = e1, Pz = e2, so (b) asks for a nonzero top coefficient below row 2.
    bool independent = false;
    for (std::size_t i = 2; i < k_; ++i) independent |= !coeffs(i, s - 1).is_zero();
    if (!independent) return std::nullopt;
    BWitness w;
    w.s = s;
    w.columns = witness_columns(coeffs.column_block(0, s));
    w.reverified = check_condition_B(field_, k_, s, w.columns).holds;
    if (!w.reverified) throw std::logic_error("projected witness failed re-verification");
    return w;
  }

  FieldPtr field_;
  const Field& f_;
  std::size_t k_;
  std::size_t m_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& stop_;
  Matrix interp_;
  bool aborted_ = false;
};

nlohmann::json witness_json(const BWitness& w) {
  nlohmann::json cols = nlohmann::json::array();
  for (const auto& c : w.columns) cols.push_back(encodings(c));
  return {{"s", w.s}, {"B", cols}, {"reverified", w.reverified}};
}

BWitness witness_from_json(const FieldPtr& field, std::size_t k, const nlohmann::json& j) {
  BWitness w;
  w.s = j.at("s").get<std::size_t>();
  for (const auto& col : j.at("B")) {
    Vec v;
    for (auto e : col) {
      const auto x = e.get<std::uint32_t>();
      if (x >= field->q()) fail(ErrorKind::EncodingOutOfRange, "checkpoint witness entry out of range");
      v.push_back(Gf(x));
    }
    w.columns.push_back(std::move(v));
  }
  w.reverified = check_condition_B(field, k, w.s, w.columns).holds;
  return w;
}

std::map<std::size_t, BranchResult> load_checkpoint(const std::string& path, const FieldPtr& field, std::size_t k) {
  std::map<std::size_t, BranchResult> done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::ParseError, path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (j.value("q", 0u) != field->q() || j.value("k", std::size_t{0}) != k)
      fail(ErrorKind::Usage, path + ":" + std::to_string(lineno) + ": checkpoint belongs to a different (q, k)");
    BranchResult r;
    r.nodes = j.at("nodes").get<std::uint64_t>();
    r.candidates = j.at("candidates").get<std::uint64_t>();
    r.complete = true;
    if (j.contains("witness") && !j["witness"].is_null()) r.witness = witness_from_json(field, k, j["witness"]);
    done[j.at("branch").get<std::size_t>()] = std::move(r);
  }
  return done;
}

SearchReport exhaustive_search(const FieldPtr& field, std::size_t k, const SearchOptions& opt) {
  SearchReport rep;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  ProjectedSearch root(field, k, opt.budget, nodes, stop);
  const std::vector<Vec> branches = root.extensions(root.roots());
  rep.branches_total = branches.size();

  std::map<std::size_t, BranchResult> results;
  if (!opt.checkpoint.empty()) results = load_checkpoint(opt.checkpoint, field, k);
  std::ofstream log;
  if (!opt.checkpoint.empty()) log.open(opt.checkpoint, std::ios::app);

  std::vector<std::size_t> todo;
  for (std::size_t b = 0; b < branches.size(); ++b)
    if (!results.count(b)) todo.push_back(b);
  if (!opt.deterministic)
    for (const auto& [b, r] : results)
      if (r.witness) stop = true;

  std::vector<BranchResult> fresh(todo.size());
  const auto n = static_cast<std::int64_t>(todo.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    ProjectedSearch worker(field, k, opt.budget, nodes, stop);
    BranchResult r = worker.run_branch(branches[todo[i]]);
    if (r.witness && !opt.deterministic) stop = true;
    if (r.complete && log.is_open()) {
      nlohmann::json line{{"q", field->q()}, {"k", k}, {"branch", todo[i]}, {"nodes", r.nodes},
                          {"candidates", r.candidates}, {"witness", nullptr}};
      if (r.witness) line["witness"] = witness_json(*r.witness);
#pragma omp critical(mdslab_checkpoint)
      {
        log << line.dump() << '\n';
        log.flush();
      }
    }
    fresh[i] = std::move(r);
  }
  for (std::size_t i = 0; i < todo.size(); ++i) results[todo[i]] = std::move(fresh[i]);

  // One node for the root, which every branch hangs off.
  rep.nodes_explored = 1;
  for (auto& [b, r] : results) {
    rep.nodes_explored += r.nodes;
    rep.candidates_tested += r.candidates;
    if (r.complete)
      rep.completed_branches.push_back(b);
    else if (opt.budget != 0 && nodes.load() > opt.budget)
      rep.budget_exceeded = true;
    else
      rep.early_exit = true;
    if (r.witness && !rep.witness) rep.witness = r.witness;
  }
  return rep;
}

/// Uniform projective column in F^s.
Vec random_projective(const Field& f, std::size_t s, std::mt19937_64& rng) {
  Vec v(s);
  do {
    for (auto& x : v) x = Gf(static_cast<std::uint32_t>(rng() % f.q()));
  } while (is_zero(v));
  return normalize_projective(f, std::move(v));
}

struct Sample {
  std::size_t s;
  std::vector<Vec> columns;
};

Sample draw_sample(const Field& f, std::size_t k, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  Sample out;
  out.s = k + 1 + static_cast<std::size_t>(rng() % (f.q() - k));
  while (out.columns.size() < out.s - k + 2) {
    Vec c = random_projective(f, out.s, rng);
    if (std::find(out.columns.begin(), out.columns.end(), c) == out.columns.end()) out.columns.push_back(std::move(c));
  }
  return out;
}

bool quick_condition_b(const FieldPtr& field, std::size_t k, const Sample& smp) {
  return condition_b_projected(field, k, smp.s, smp.columns);
}

SearchReport randomized_search(const FieldPtr& field, std::size_t k, const SearchOptions& opt) {
  if (!opt.seed) fail(ErrorKind::Usage, "randomized search needs a seed");
  SearchReport rep;
  rep.seed = opt.seed;
  const std::uint64_t seed = *opt.seed;
  const std::uint64_t hit = first_hit_parallel(opt.budget, 64, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i)
      if (quick_condition_b(field, k, draw_sample(*field, k, seed, i))) return i;
    return kNoHit;
  });
  rep.candidates_tested = hit == kNoHit ? opt.budget : hit + 1;
  rep.nodes_explored = rep.candidates_tested;
  if (hit != kNoHit) {
    Sample smp = draw_sample(*field, k, seed, hit);
    BWitness w{smp.s, smp.columns, check_condition_B(field, k, smp.s, smp.columns).holds};
    if (!w.reverified) throw std::logic_error("sampled witness failed re-verification");
    rep.witness = std::move(w);
  }
  return rep;
}

}  // namespace

bool condition_b_projected(const FieldPtr& field, std::size_t k, std::size_t s, const std::vector<Vec>& b) {
  const Field& f = *field;
  if (k < 3 || s <= k || s > f.q() || b.size() != s - k + 2) return false;
  const std::size_t nb = s - k;
  const std::vector<Vec> basis(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(nb));
  const Subspace span = Subspace::from_vectors(field, s, basis);
  if (span.dim() != nb) return false;
  const Matrix p = perp(span).basis();  // k×s with kernel = span
  Matrix projected(field, k, f.q() + 2);
  for (std::uint32_t j = 0; j < f.q(); ++j) {
    const Vec img = p.apply(root_vector(f, f.element(j), s));
    for (std::size_t i = 0; i < k; ++i) projected(i, j) = img[i];
  }
  const Vec py = p.apply(b[nb]), pz = p.apply(b[nb + 1]);
  for (std::size_t i = 0; i < k; ++i) {
    projected(i, f.q()) = py[i];
    projected(i, f.q() + 1) = pz[i];
  }
  if (rank(Matrix::from_columns(field, {py, pz, p.column(s - 1)}, k)) < 3) return false;
  return !kernels::first_dependent_subset_serial(projected).has_value();
}

std::string SearchReport::verdict() const {
  if (witness) return "witness";
  if (budget_exceeded) return "budget_exceeded";
  if (mode == SearchMode::Randomized) return "not_falsified";
  return early_exit ? "incomplete" : "no_witness";
}

SearchReport search_condition_b(const FieldPtr& field, std::size_t k, const SearchOptions& options) {
  check_search_k(*field, k);
  const auto start = Clock::now();
  SearchReport rep = options.mode == SearchMode::Exhaustive ? exhaustive_search(field, k, options)
                                                            : randomized_search(field, k, options);
  rep.q = field->q();
  rep.k = k;
  rep.mode = options.mode;
  rep.s_range = s_values(k, field->q());
  rep.elapsed_ms = ms_since(start);
  return rep;
}

SearchReport search_condition_b_reference(const FieldPtr& field, std::size_t k, const std::vector<std::size_t>& s_list,
                                          std::uint64_t max_leaves) {
  const Field& f = *field;
  const std::uint32_t q = f.q();
  check_search_k(f, k);
  const auto start = Clock::now();
  SearchReport rep;
  rep.q = q;
  rep.k = k;
  rep.s_range = s_list;

  for (std::size_t s : s_list) {
    if (s <= k || s > q) fail(ErrorKind::BadS, "reference search needs k < s <= q");
    const std::uint64_t npoints = projective_count(q, s);
    const std::size_t nb = s - k;
    std::uint64_t leaves = 1;
    for (std::size_t i = 0; i < nb + 2; ++i) {
      if (leaves > max_leaves / npoints + 1) fail(ErrorKind::TooLarge, "reference search space too large");
      leaves *= npoints;
    }
    if (leaves > max_leaves) fail(ErrorKind::TooLarge, "reference search space too large");

    std::vector<Vec> points;
    for_each_projective(q, s, [&](std::span<const Gf> v) {
      points.emplace_back(v.begin(), v.end());
      return true;
    });
    std::vector<Vec> roots;
    for (std::uint32_t j = 0; j < q; ++j) roots.push_back(root_vector(f, f.element(j), s));
    const Vec es = unit_vector(s, s - 1);

    std::vector<std::size_t> chosen;
    std::vector<Vec> placed;

    // Placed columns together with every `extra`-subset of R must be independent.
    auto independent_with_roots = [&](std::size_t extra) {
      std::vector<std::size_t> pick(extra);
      for (std::size_t i = 0; i < extra; ++i) pick[i] = i;
      do {
        std::vector<Vec> cols = placed;
        for (auto j : pick) cols.push_back(roots[j]);
        if (rank(Matrix::from_columns(field, cols, s)) < cols.size()) return false;
      } while (extra > 0 && next_combination(q, pick));
      return true;
    };
    auto independent_with_es = [&] {
      std::vector<Vec> cols = placed;
      cols.push_back(es);
      return rank(Matrix::from_columns(field, cols, s)) == cols.size();
    };

    auto dfs = [&](auto&& self, std::size_t level) -> bool {
      if (level == nb + 2) {
        ++rep.candidates_tested;
        if (check_condition_B(field, k, s, placed).holds) {
          rep.witness = BWitness{s, placed, true};
          return true;
        }
        return false;
      }
      const std::size_t first = level > 0 && level < nb ? chosen.back() + 1 : 0;
      for (std::size_t idx = first; idx < points.size(); ++idx) {
        if (level >= nb && std::find(chosen.begin(), chosen.end(), idx) != chosen.end()) continue;
        chosen.push_back(idx);
        placed.push_back(points[idx]);
        ++rep.nodes_explored;
        bool ok = independent_with_es();
        if (ok && level < nb) ok = independent_with_roots(k);
        if (ok && level == nb) ok = independent_with_roots(k - 1);
        const bool done = ok && self(self, level + 1);
        chosen.pop_back();
        placed.pop_back();
        if (done) return true;
      }
      return false;
    };
    if (dfs(dfs, 0)) break;
  }
  rep.elapsed_ms = ms_since(start);
  return rep;
}

Stmt4Result brute_force_stmt4(const FieldPtr& field, std::size_t k) {
  const std::uint32_t q = field->q();
  if (q > 4 || k < 2 || k > 3 || k > q)
    fail(ErrorKind::TooLarge, "brute-force statement 4 is limited to q <= 4 and 2 <= k <= min(3, q)");
  Stmt4Result out;
  const int n = static_cast<int>(k);
  std::vector<Subspace> all = enumerate_subspaces(field, q, k - 1);
  out.subspaces = all.size();
  std::vector<Subspace> light;
  for (auto& v : all)
    if (subspace_in_O_n(v, n - 2).holds) light.push_back(std::move(v));
  for (const auto& y : light) {
    for (const auto& z : light) {
      if (y == z) continue;
      if (span_union(y, z).dim() != k) continue;
      ++out.pairs_checked;
      if (!check_condition_A(y, z, k).all()) continue;
      out.witness = SubspacePair{y, z};
      Matrix mp = Matrix::identity(field, k).column_block(0, 2).hstack(t_from_yz(y, z));
      out.reverified = !stmt2_witness(mp).has_value();
      return out;
    }
  }
  return out;
}

Stmt2Result exhaustive_stmt2(const FieldPtr& field, std::size_t k) {
  const std::uint32_t q = field->q();
  const bool allowed = (q == 2 && k == 2) || (q == 3 && (k == 2 || k == 3));
  if (!allowed) fail(ErrorKind::TooLarge, "exhaustive statement 2 is limited to (q,k) in {(2,2),(3,2),(3,3)}");
  Stmt2Result out;
  out.scan = kernels::scan_all_matrices(field, k, q + 2);
  if (out.scan.counterexample) out.reverified = !stmt2_witness(*out.scan.counterexample).has_value();
  return out;
}

}  // namespace mdslab
