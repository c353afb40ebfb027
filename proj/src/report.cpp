#include "mdslab/report.hpp"

#include <sstream>

namespace mdslab {

Json to_json(std::span<const Gf> v) { return Json(encodings(v)); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
  return rows;
}

Json to_json(const Subspace& v) {
  return Json{{"ambient_dim", v.ambient_dim()}, {"dim", v.dim()}, {"basis", to_json(v.basis())}};
}

Json to_json(const PolyFn& f) { return Json{{"coeffs", to_json(f.coeffs())}, {"degree", f.degree()}}; }

Json to_json(const BWitness& w) {
  Json cols = Json::array();
  for (const auto& c : w.columns) cols.push_back(to_json(c));
  return Json{{"s", w.s}, {"B", cols}, {"reverified", w.reverified}};
}

Json to_json(const PropertyResult& r) {
  Json j{{"name", r.name}, {"q", r.q}, {"k", r.k}, {"trials", r.trials}, {"positives", r.positives},
         {"failures", r.failures}, {"passed", r.passed()}};
  if (r.first_failure) j["first_failure"] = *r.first_failure;
  return j;
}

Json search_stats(const SearchReport& r) {
  Json j{{"mode", r.mode == SearchMode::Exhaustive ? "exhaustive" : "randomized"},
         {"s_range", r.s_range},
         {"nodes_explored", r.nodes_explored},
         {"candidates_tested", r.candidates_tested}};
  if (r.mode == SearchMode::Exhaustive) {
    j["branches_total"] = r.branches_total;
    j["branches_completed"] = r.completed_branches.size();
    j["early_exit"] = r.early_exit;
    if (r.budget_exceeded) j["frontier"] = r.completed_branches;
  } else {
    j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
    j["falsification_only"] = true;
  }
  return j;
}

Json make_report(const std::string& statement, std::uint32_t q, std::size_t k, Json params, const std::string& verdict,
                 std::optional<Json> witness, Json stats, double elapsed_ms) {
  Json j;
  j["tool_version"] = MDSLAB_VERSION;
  j["statement"] = statement;
  j["q"] = q;
  j["k"] = k;
  j["params"] = std::move(params);
  j["verdict"] = verdict;
  if (witness) j["witness"] = std::move(*witness);
  j["stats"] = std::move(stats);
  j["elapsed_ms"] = static_cast<std::int64_t>(elapsed_ms);
  return j;
}

Json error_object(std::string_view kind, const std::string& message) {
  return Json{{"error", {{"kind", kind}, {"message", message}}}};
}

std::string to_text(const Json& j, int indent) {
  std::ostringstream out;
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const bool nested = it->is_object() || (it->is_array() && !it->empty() && it->front().is_object());
    if (!nested) {
      out << pad << it.key() << ": " << it->dump() << '\n';
    } else if (it->is_object()) {
      out << pad << it.key() << ":\n" << to_text(*it, indent + 2);
    } else {
      out << pad << it.key() << ":\n";
      for (const auto& item : *it) out << pad << "  -\n" << to_text(item, indent + 4);
    }
  }
  return out.str();
}

}  // namespace mdslab
