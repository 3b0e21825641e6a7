#pragma once

#include <filesystem>
#include <iosfwd>
#include <json.hpp>

#include "omstretch/flow.hpp"
#include "omstretch/macphersonian.hpp"
#include "omstretch/om_core.hpp"
#include "omstretch/radon_complex.hpp"

namespace omstretch {

using Json = nlohmann::ordered_json;

/// Written as "schema_version" at the top of every JSON document.
inline constexpr int kSchemaVersion = 1;

Json to_json(ElementSet s);
Json to_json(const SignedSet& s);
Json to_json(const OrientedMatroid& m);
Json to_json(const PointConfiguration& config);
Json to_json(const CircuitGraph& g);
Json to_json(const EmbeddedSphere& s);
Json to_json(const SphereReport& report);
Json to_json(const MatroidPoset& poset);
Json to_json(const SimplicialComplex& complex);
Json to_json(const CellStructureReport& report);

// Readers throw ParseError on malformed documents and let domain errors
// (RankDeficientError, ArgumentError) from the constructors through.
ElementSet element_set_from_json(const Json& j);
OrientedMatroid matroid_from_json(const Json& j);
/// {"d": 2, "points": [[x, y], ...]}
PointConfiguration config_from_json(const Json& j);
/// {"simplices": [[1, 2, 3], ...]}
SimplicialComplex complex_from_json(const Json& j);

/// Parses a file; throws ParseError when it is unreadable or not JSON.
Json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& j);

/// Header t,curv_max,curv_mean,vel_max; values printed round-trip exact.
void write_trace_csv(std::ostream& out, const FlowTrace& trace);

}  // namespace omstretch
