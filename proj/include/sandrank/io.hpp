#pragma once

#include <string>

#include <json.hpp>

#include "sandrank/graph.hpp"
#include "sandrank/series.hpp"

namespace sandrank {

using Json = nlohmann::json;

/// {"n": 4, "edges": [[1, 2], [2, 3, 2], ...]}; vertices are 1-based, the
/// optional third entry is the multiplicity (default 1), vertex n is the sink.
MultiGraph graph_from_json(const Json& j);
Json graph_to_json(const MultiGraph& g);

/// A JSON array of integers.
Configuration configuration_from_json(const Json& j);
Json configuration_to_json(const Configuration& f);

/// Parses `text` as JSON when it starts with '[' or '{', otherwise reads the
/// file it names. Throws std::invalid_argument on malformed input.
Json load_json(const std::string& text);

/// {"[i,j]": c, ...} (or "[i,j,k]" for three variables).
Json series_to_json(const TruncatedSeries& s);

} // namespace sandrank
