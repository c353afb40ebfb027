#include "mdslab/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mdslab/codes.hpp"
#include "mdslab/matrix_io.hpp"
#include "mdslab/parallel.hpp"
#include "mdslab/report.hpp"

namespace mdslab::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Config {
  int threads = 0;
  bool deterministic = false;
  std::string format = "json";

  std::uint32_t q = 0;
  std::string modulus;
  std::size_t k = 0;
  std::size_t s = 0;
  std::string input;
  std::string b_cols;
  bool extended = false;
  bool brute = false;
  std::string mode = "exhaustive";
  std::uint64_t budget = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t trials = 1000;
  std::string checkpoint;
};

struct Outcome {
  Json report;
  int code = kExpected;
};

std::vector<std::uint32_t> parse_list(const std::string& text, char sep, const std::string& what) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v > UINT32_MAX) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      fail(ErrorKind::Usage, "bad " + what + " entry '" + item + "'");
    }
  }
  return out;
}

FieldPtr field_from(const Config& c) {
  const auto pm = prime_power(c.q);
  if (!pm) fail(ErrorKind::Usage, "--q " + std::to_string(c.q) + " is not a prime power");
  std::optional<std::vector<std::uint32_t>> mod;
  if (!c.modulus.empty()) mod = parse_list(c.modulus, ',', "--mod");
  return Field::make(pm->first, pm->second, mod);
}

Json field_params(const Field& f) {
  Json j{{"p", f.p()}, {"m", f.m()}};
  if (f.m() > 1) j["modulus"] = f.modulus();
  return j;
}

Json labels(const std::vector<std::size_t>& idx, std::uint32_t q) {
  Json j = Json::array();
  for (auto i : idx) j.push_back(pool_label(i, q));
  return j;
}

Outcome mds_outcome(const std::string& statement, const Matrix& m, Json params, Clock::time_point start) {
  const auto minors = is_mds_minors(m);
  const auto words = is_mds_codewords(m);
  const bool agree = minors.mds == words.mds;
  Json stats{{"mds", minors.mds && agree},
             {"minors_mds", minors.mds},
             {"codewords_mds", words.mds},
             {"agreement", agree},
             {"codeword_route", words.route}};
  std::optional<Json> witness;
  if (!minors.mds) {
    const bool dependent = rank(m.select_columns(*minors.dependent_columns)) < m.rows();
    const bool heavy = words.combination && count_zeros(m.combine_rows(*words.combination)) >= m.rows();
    Json w{{"dependent_columns", *minors.dependent_columns}};
    if (words.combination) w["combination"] = to_json(*words.combination);
    w["reverified"] = dependent && heavy;
    witness = std::move(w);
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  Outcome o{make_report(statement, m.field().q(), m.rows(), std::move(params), minors.mds ? "mds" : "not_mds",
                        std::move(witness), std::move(stats), ms)};
  o.code = minors.mds && agree ? kExpected : kWitness;
  return o;
}

double since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Outcome verify_rs(const Config& c) {
  const auto start = Clock::now();
  const FieldPtr f = field_from(c);
  const CodeMatrix code = c.extended ? extended_rs(f, c.k) : rs_code(f, c.k);
  Json params = field_params(*f);
  params["extended"] = c.extended;
  params["n"] = code.n();
  return mds_outcome(c.extended ? "extended_rs_mds" : "rs_mds", code.generator, std::move(params), start);
}

Outcome check_mds(const Config& c) {
  const auto start = Clock::now();
  const Matrix m = read_matrix(c.input);
  Json params = field_params(m.field());
  params["input"] = c.input;
  params["n"] = m.cols();
  return mds_outcome("mds", m, std::move(params), start);
}

Outcome stmt2(const Config& c) {
  const auto start = Clock::now();
  const Matrix m = read_matrix(c.input);
  const std::size_t k = m.rows();
  Json params = field_params(m.field());
  params["input"] = c.input;
  const auto comb = stmt2_witness(m);
  Outcome o;
  Json w;
  if (comb) {
    const Vec row = m.combine_rows(*comb);
    w = Json{{"combination", to_json(*comb)}, {"row", to_json(row)}, {"zeros", count_zeros(row)},
             {"reverified", count_zeros(row) >= k}};
  } else {
    w = Json{{"matrix", to_json(m)}, {"reverified", is_mds_minors(m).mds}};
    o.code = kWitness;
  }
  o.report = make_report("stmt2", m.field().q(), k, std::move(params), comb ? "combination_found" : "no_combination",
                         std::move(w), Json{{"combinations_scanned_order", "projective_lex"}}, since(start));
  return o;
}

Outcome stmt4(const Config& c) {
  const auto start = Clock::now();
  if (!c.brute) fail(ErrorKind::Usage, "stmt4 is only available as --brute");
  const FieldPtr f = field_from(c);
  const auto r = brute_force_stmt4(f, c.k);
  Outcome o;
  std::optional<Json> w;
  if (r.witness) {
    w = Json{{"Y", to_json(r.witness->y)}, {"Z", to_json(r.witness->z)}, {"reverified", r.reverified}};
    o.code = kWitness;
  }
  Json params = field_params(*f);
  params["brute"] = true;
  o.report = make_report("stmt4", f->q(), c.k, std::move(params), r.witness ? "witness" : "none", std::move(w),
                         Json{{"subspaces", r.subspaces}, {"pairs_checked", r.pairs_checked}}, since(start));
  return o;
}

Outcome condition_a(const Config& c) {
  const auto start = Clock::now();
  const Matrix t = read_matrix(c.input);
  const std::size_t k = t.rows();
  const auto yz = yz_from_T(t);
  const auto rep = check_condition_A(yz.y, yz.z, k);
  Json params = field_params(t.field());
  params["input"] = c.input;
  Json stats{{"dims", rep.dims_ok},
             {"span_in_O_k-1", rep.span_in_Ok1},
             {"Y_in_O_k-2", rep.y_in_Ok2},
             {"Z_in_O_k-2", rep.z_in_Ok2},
             {"meet_in_O_k-3", rep.meet_in_Ok3}};
  Outcome o;
  Json w;
  if (rep.all()) {
    const Matrix mp = Matrix::identity(t.field_ptr(), k).column_block(0, 2).hstack(t);
    w = Json{{"Y", to_json(yz.y)}, {"Z", to_json(yz.z)}, {"reverified", !stmt2_witness(mp).has_value()}};
    o.code = kWitness;
  } else {
    w = Json{{"condition", condition_a_name(rep.witness->condition)}};
    bool ok = rep.witness->condition == ConditionA::Dims;
    if (rep.witness->poly) {
      const PolyFn& g = *rep.witness->poly;
      const int n = static_cast<int>(k);
      const Subspace* space = nullptr;
      const Subspace joined = span_union(yz.y, yz.z), meet = intersect(yz.y, yz.z);
      int bound = 0;
      switch (rep.witness->condition) {
        case ConditionA::SpanInOk1: space = &joined; bound = n - 1; break;
        case ConditionA::YInOk2: space = &yz.y; bound = n - 2; break;
        case ConditionA::ZInOk2: space = &yz.z; bound = n - 2; break;
        case ConditionA::MeetInOk3: space = &meet; bound = n - 3; break;
        case ConditionA::Dims: break;
      }
      ok = space && space->contains(g.coeffs()) && !in_O_n(g, bound);
      w["polynomial"] = to_json(g);
      w["roots"] = count_zeros(evaluations(g));
    }
    w["reverified"] = ok;
  }
  o.report = make_report("condition_a", t.field().q(), k, std::move(params), rep.all() ? "all_hold" : "violated",
                         std::move(w), std::move(stats), since(start));
  return o;
}

Outcome search(const Config& c, const std::string& statement) {
  const auto start = Clock::now();
  const FieldPtr f = field_from(c);
  SearchOptions opt;
  if (c.mode == "exhaustive")
    opt.mode = SearchMode::Exhaustive;
  else if (c.mode == "randomized")
    opt.mode = SearchMode::Randomized;
  else
    fail(ErrorKind::Usage, "--mode must be exhaustive or randomized");
  if (opt.mode == SearchMode::Randomized && c.budget == 0) fail(ErrorKind::Usage, "randomized mode needs --budget > 0");
  opt.budget = c.budget;
  opt.seed = c.seed;
  opt.deterministic = c.deterministic;
  opt.checkpoint = c.checkpoint;
  const SearchReport r = search_condition_b(f, c.k, opt);
  Json params = field_params(*f);
  params["mode"] = c.mode;
  params["budget"] = c.budget;
  params["seed"] = c.seed ? Json(*c.seed) : Json(nullptr);
  params["deterministic"] = c.deterministic;
  Outcome o;
  std::optional<Json> w;
  if (r.witness) {
    w = to_json(*r.witness);
    (*w)["reverified"] = r.witness->reverified && condition_b_projected(f, c.k, r.witness->s, r.witness->columns);
    o.code = kWitness;
  } else if (r.budget_exceeded) {
    o.code = kBudget;
  }
  o.report = make_report(statement, f->q(), c.k, std::move(params), r.verdict(), std::move(w), search_stats(r),
                         since(start));
  if (r.budget_exceeded && !r.witness)
    o.report["error"] = error_object("BudgetExceeded", "node budget exhausted; see stats.frontier")["error"];
  return o;
}

Outcome condition_b(const Config& c) {
  if (c.b_cols.empty()) {
    if (c.s != 0) fail(ErrorKind::Usage, "--s needs --b");
    return search(c, "condition_b_search");
  }
  const auto start = Clock::now();
  if (c.s == 0) fail(ErrorKind::Usage, "--b needs --s");
  const FieldPtr f = field_from(c);
  std::vector<Vec> b;
  std::stringstream ss(c.b_cols);
  std::string col;
  while (std::getline(ss, col, ';')) {
    Vec v;
    for (auto x : parse_list(col, ',', "--b")) {
      if (x >= f->q()) fail(ErrorKind::EncodingOutOfRange, "--b entry " + std::to_string(x) + " is not below q");
      v.push_back(Gf(x));
    }
    b.push_back(std::move(v));
  }
  const auto check = check_condition_B(f, c.k, c.s, b);
  Json params = field_params(*f);
  params["s"] = c.s;
  Json bj = Json::array();
  for (const auto& v : b) bj.push_back(to_json(v));
  params["B"] = bj;
  Json stats{{"a_holds", check.a_holds}, {"b_holds", check.b_holds}};
  Outcome o;
  std::optional<Json> w;
  if (check.holds) {
    w = Json{{"s", c.s}, {"B", bj}, {"reverified", condition_b_projected(f, c.k, c.s, b)}};
    o.code = kWitness;
  } else if (check.singular_choice) {
    Json cert = labels(*check.singular_choice, f->q());
    for (std::size_t i = 0; i < c.s - c.k; ++i) cert.insert(cert.begin() + static_cast<std::ptrdiff_t>(i), "b" + std::to_string(i + 1));
    stats["certificate"] = Json{{"part", "a"}, {"singular_columns", cert}};
  } else {
    stats["certificate"] = Json{{"part", "b"}, {"dependent", "B with e_s"}};
  }
  o.report = make_report("condition_b", f->q(), c.k, std::move(params), check.holds ? "holds" : "fails", std::move(w),
                         std::move(stats), since(start));
  return o;
}

Outcome dual(const Config& c) {
  const auto start = Clock::now();
  const Matrix m = read_matrix(c.input);
  const std::size_t k = c.k ? c.k : m.rows();
  const auto w = mds_to_dual_witness(m, k);
  const auto check = check_dual_conditions(w, k);
  Json params = field_params(m.field());
  params["input"] = c.input;
  Json stats{{"s", w.s},
             {"dim_Xperp", w.xperp.dim()},
             {"dim_Yperp", w.yperp.dim()},
             {"dim_Zperp", w.zperp.dim()},
             {"failing_bullet", check.failing_bullet}};
  if (!check.holds) stats["failing_subset"] = check.subset;
  Outcome o;
  std::optional<Json> wj;
  if (check.holds) {
    wj = Json{{"s", w.s},         {"Xperp", to_json(w.xperp)}, {"Yperp", to_json(w.yperp)},
              {"Zperp", to_json(w.zperp)}, {"y", to_json(w.y_col)},  {"z", to_json(w.z_col)},
              {"p", to_json(w.p_vec)}, {"reverified", is_mds_minors(m).mds}};
    o.code = kWitness;
  }
  o.report = make_report("dual", m.field().q(), k, std::move(params), check.holds ? "conditions_hold" : "condition_fails",
                         std::move(wj), std::move(stats), since(start));
  return o;
}

Outcome equiv_suite(const Config& c) {
  const auto start = Clock::now();
  const FieldPtr f = field_from(c);
  const std::uint64_t seed = c.seed.value_or(0);
  const auto results = equivalence_suite(f, c.k, c.trials, seed);
  Json list = Json::array();
  std::uint64_t failures = 0;
  for (const auto& r : results) {
    list.push_back(to_json(r));
    failures += r.failures;
  }
  Json params = field_params(*f);
  params["trials"] = c.trials;
  params["seed"] = seed;
  Outcome o;
  o.code = failures == 0 ? kExpected : kWitness;
  o.report = make_report("equivalence_suite", f->q(), c.k, std::move(params), failures == 0 ? "pass" : "fail",
                         std::nullopt, Json{{"suites", list}, {"total_failures", failures}}, since(start));
  return o;
}

void emit(std::ostream& out, const Json& j, const std::string& format) {
  if (format == "text")
    out << to_text(j);
  else
    out << j.dump() << '\n';
}

int thread_setting(const Config& c) {
  if (c.threads > 0) return c.threads;
  if (const char* env = std::getenv("MDSLAB_THREADS")) {
    try {
      return std::max(0, std::stoi(env));
    } catch (const std::exception&) {
      fail(ErrorKind::Usage, "MDSLAB_THREADS must be an integer");
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  Config c;
  CLI::App app{"Finite-field MDS code toolkit: statement checkers and witness searches", "mdslab"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--threads", c.threads, "worker threads (default: MDSLAB_THREADS or all cores)");
  app.add_flag("--deterministic", c.deterministic, "drain every search branch so output is reproducible");
  app.add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto field_opts = [&](CLI::App* sub) {
    sub->add_option("--q", c.q, "field order")->required();
    sub->add_option("--mod", c.modulus, "modulus coefficients c0,..,c_{m-1}");
  };
  auto* vrs = app.add_subcommand("verify-rs", "MDS check of the (extended) Reed-Solomon code");
  field_opts(vrs);
  vrs->add_option("--k", c.k)->required();
  vrs->add_flag("--extended", c.extended);

  auto* cmds = app.add_subcommand("check-mds", "minors and codeword MDS verifiers on a matrix file");
  cmds->add_option("--input", c.input)->required();

  auto* s2 = app.add_subcommand("stmt2", "row combination with at least k zeros");
  s2->add_option("--input", c.input)->required();

  auto* s4 = app.add_subcommand("stmt4", "search for subspaces Y, Z meeting every condition");
  field_opts(s4);
  s4->add_option("--k", c.k)->required();
  s4->add_flag("--brute", c.brute);

  auto* ca = app.add_subcommand("condition-a", "T matrix -> (Y, Z) -> condition A");
  ca->add_option("--input", c.input)->required();

  auto search_opts = [&](CLI::App* sub) {
    sub->add_option("--mode", c.mode)->check(CLI::IsMember({"exhaustive", "randomized"}));
    sub->add_option("--budget", c.budget, "node limit (exhaustive) or sample count (randomized)");
    sub->add_option("--seed", c.seed);
    sub->add_option("--checkpoint", c.checkpoint, "JSON-lines progress file; resumed when present");
  };
  auto* cb = app.add_subcommand("condition-b", "check a supplied B, or search for one");
  field_opts(cb);
  cb->add_option("--k", c.k)->required();
  cb->add_option("--s", c.s);
  cb->add_option("--b", c.b_cols, "columns separated by ';', entries by ','");
  search_opts(cb);

  auto* sb = app.add_subcommand("search-b", "search for a condition-B witness");
  field_opts(sb);
  sb->add_option("--k", c.k)->required();
  search_opts(sb);

  auto* du = app.add_subcommand("dual", "dual translation of an MDS k×(q+2) candidate");
  du->add_option("--input", c.input)->required();
  du->add_option("--k", c.k);

  auto* es = app.add_subcommand("equiv-suite", "seeded cross-statement property checks");
  field_opts(es);
  es->add_option("--k", c.k)->required();
  es->add_option("--trials", c.trials);
  es->add_option("--seed", c.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExpected;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExpected;
  } catch (const CLI::ParseError& e) {
    emit(out, error_object("Usage", e.what()), "json");
    return kUsage;
  }

  try {
    set_thread_count(thread_setting(c));
    Outcome o;
    if (vrs->parsed()) o = verify_rs(c);
    else if (cmds->parsed()) o = check_mds(c);
    else if (s2->parsed()) o = stmt2(c);
    else if (s4->parsed()) o = stmt4(c);
    else if (ca->parsed()) o = condition_a(c);
    else if (cb->parsed()) o = condition_b(c);
    else if (sb->parsed()) o = search(c, "condition_b_search");
    else if (du->parsed()) o = dual(c);
    else o = equiv_suite(c);
    emit(out, o.report, c.format);
    return o.code;
  } catch (const Error& e) {
    emit(out, error_object(error_kind_name(e.kind()), e.what()), c.format);
    return e.kind() == ErrorKind::BudgetExceeded ? kBudget : kUsage;
  } catch (const std::exception& e) {
    emit(out, error_object("Internal", e.what()), c.format);
    return kUsage;
  }
}

}  // namespace mdslab::cli
