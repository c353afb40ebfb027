#pragma once

/// JSON rendering for reports. Keys keep insertion order so identical runs
/// produce identical bytes.

#include <optional>
#include <string>

#include "json.hpp"
#include "mdslab/equivalence.hpp"
#include "mdslab/properties.hpp"
#include "mdslab/searchb.hpp"

namespace mdslab {

using Json = nlohmann::ordered_json;

Json to_json(std::span<const Gf> v);
Json to_json(const Matrix& m);
Json to_json(const Subspace& v);
Json to_json(const PolyFn& f);
Json to_json(const BWitness& w);
Json to_json(const PropertyResult& r);

/// Stats block of a search report (everything except the witness and timing).
Json search_stats(const SearchReport& r);

/// {tool_version, statement, q, k, params, verdict, witness?, stats, elapsed_ms}
Json make_report(const std::string& statement, std::uint32_t q, std::size_t k, Json params, const std::string& verdict,
                 std::optional<Json> witness, Json stats, double elapsed_ms);

Json error_object(std::string_view kind, const std::string& message);

/// Indented "key: value" lines for the text output format.
std::string to_text(const Json& j, int indent = 0);

}  // namespace mdslab
