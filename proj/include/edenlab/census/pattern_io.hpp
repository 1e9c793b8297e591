#pragma once
// Pattern files: JSON round-trip for pattern specs.
//
// Format:
//   {
//     "radius": 2,
//     "cells": ["0 1", "1 0", ...],    // vertex ids relative to the origin
//     "graph": "lattice(d=2, generators=standard)"   // optional guard
//   }
//
// Ids use each backend's print_id/parse_id syntax. The optional "graph"
// field, when present, must equal the target backend's descriptor — a
// pattern written for one graph refuses to load on another rather than
// silently reinterpreting ids.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "edenlab/census/pattern.hpp"
#include "edenlab/core/error.hpp"
#include "edenlab/graph/concepts.hpp"

namespace edenlab {

/// Parses and validates a pattern from JSON text.
template <graph_backend G>
pattern_spec<G> pattern_from_json(const G& g, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw usage_error(std::string("pattern file: invalid JSON (") + e.what() + ")");
  }
  if (!j.is_object() || !j.contains("radius") || !j.contains("cells"))
    throw usage_error("pattern file: need an object with \"radius\" and \"cells\"");
  if (!j["radius"].is_number_integer())
    throw usage_error("pattern file: \"radius\" must be an integer");
  if (!j["cells"].is_array() || j["cells"].empty())
    throw usage_error("pattern file: \"cells\" must be a nonempty array");
  if (j.contains("graph")) {
    if (!j["graph"].is_string())
      throw usage_error("pattern file: \"graph\" must be a string");
    const std::string want = j["graph"].get<std::string>();
    if (want != g.descriptor())
      throw usage_error("pattern file: written for \"" + want +
                        "\" but the target graph is \"" + g.descriptor() + "\"");
  }

  std::vector<typename G::vertex_id> cells;
  for (const auto& c : j["cells"]) {
    if (!c.is_string())
      throw usage_error("pattern file: every cell must be a vertex id string");
    cells.push_back(g.parse_id(c.get<std::string>()));
  }
  return validate_pattern(g, cells, j["radius"].get<int>());
}

/// Serializes a validated pattern, tagging it with the graph descriptor.
template <graph_backend G>
std::string pattern_to_json(const G& g, const pattern_spec<G>& spec) {
  nlohmann::json j;
  j["radius"] = spec.radius;
  j["graph"] = g.descriptor();
  auto cells = nlohmann::json::array();
  for (const auto& v : spec.cells) cells.push_back(g.print_id(v));
  j["cells"] = cells;
  return j.dump(2) + "\n";
}

/// Loads a pattern file from disk.
template <graph_backend G>
pattern_spec<G> pattern_from_file(const G& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("pattern file: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return pattern_from_json(g, buf.str());
}

}  // namespace edenlab
