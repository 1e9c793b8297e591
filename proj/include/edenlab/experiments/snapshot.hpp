#pragma once
// Cluster snapshots: JSON-shaped dumps of one grown cluster.
//
// Schema:
//   {
//     "graph": "hyperbolic(p=7, q=3)",        // backend descriptor
//     "seed": 123,                             // master seed of the run
//     "rows": [
//       {"step": 0, "vertex": "<id>", "fpp_time": 0.0},
//       ...                                    // infection order
//     ],
//     "tiles": {"<id>": "<matrix text>", ...}  // {p,q} backends only
//   }
//
// The "tiles" object carries each tile's exact canonical matrix so a
// renderer can rebuild coordinates without replaying the growth: bare
// canonical ids alone are not invertible without a group walk from the
// origin. Other backends omit it (their ids are literal coordinates).

#include <concepts>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "edenlab/core/csv.hpp"
#include "edenlab/core/error.hpp"
#include "edenlab/growth/trace.hpp"

namespace edenlab {

/// Creates the directory part of `path` if it does not exist yet.
inline void ensure_parent_dir(const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
}

/// Writes `text` to `path` byte-for-byte, creating parent directories.
inline void write_text_file(const std::string& path, const std::string& text) {
  ensure_parent_dir(path);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage_error("cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw usage_error("failed writing '" + path + "'");
}

/// One infected vertex in a snapshot.
struct snapshot_row {
  std::uint64_t step = 0;
  std::string vertex;
  double fpp_time = 0.0;

  bool operator==(const snapshot_row&) const = default;
};

/// A parsed snapshot file.
struct snapshot_data {
  std::string graph;  ///< backend descriptor
  bool has_seed = false;
  std::uint64_t seed = 0;
  std::vector<snapshot_row> rows;  ///< infection order
  std::vector<std::pair<std::string, std::string>> tiles;  ///< id -> matrix
};

namespace detail {

/// True when the backend carries exact tile matrices worth embedding.
template <class G>
concept has_tile_matrices = requires(const G& g, typename G::vertex_id v) {
  { g.tile_matrix_text(v) } -> std::convertible_to<std::string>;
};

}  // namespace detail

/// Serializes a grown cluster. The rows come from the engine's trace (one
/// row per vertex in infection order); tile matrices are embedded when the
/// backend has them.
template <class G>
std::string snapshot_to_json(const G& g, std::uint64_t seed,
                             const std::vector<trace_row>& rows) {
  nlohmann::json j;
  j["graph"] = g.descriptor();
  j["seed"] = seed;
  auto arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    row["step"] = r.step;
    row["vertex"] = r.vertex;
    row["fpp_time"] = r.fpp_time;
    arr.push_back(std::move(row));
  }
  j["rows"] = std::move(arr);
  if constexpr (detail::has_tile_matrices<G>) {
    auto tiles = nlohmann::json::object();
    for (const auto& r : rows)
      tiles[r.vertex] = g.tile_matrix_text(g.parse_id(r.vertex));
    j["tiles"] = std::move(tiles);
  }
  return j.dump(2) + "\n";
}

/// Parses and structurally validates a snapshot.
inline snapshot_data snapshot_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw usage_error(std::string("snapshot: invalid JSON (") + e.what() +
                      ")");
  }
  if (!j.is_object() || !j.contains("graph") || !j.contains("rows"))
    throw usage_error("snapshot: need an object with \"graph\" and \"rows\"");
  if (!j["graph"].is_string())
    throw usage_error("snapshot: \"graph\" must be a string");

  snapshot_data snap;
  snap.graph = j["graph"].get<std::string>();
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned())
      throw usage_error("snapshot: \"seed\" must be a nonnegative integer");
    snap.seed = j["seed"].get<std::uint64_t>();
    snap.has_seed = true;
  }
  if (!j["rows"].is_array() || j["rows"].empty())
    throw usage_error("snapshot: \"rows\" must be a nonempty array");
  std::uint64_t expect_step = 0;
  for (const auto& row : j["rows"]) {
    if (!row.is_object() || !row.contains("step") || !row.contains("vertex") ||
        !row.contains("fpp_time"))
      throw usage_error(
          "snapshot: every row needs step, vertex, and fpp_time");
    snapshot_row r;
    if (!row["step"].is_number_unsigned())
      throw usage_error("snapshot: row step must be a nonnegative integer");
    r.step = row["step"].get<std::uint64_t>();
    if (r.step != expect_step)
      throw usage_error("snapshot: rows must be in step order 0,1,2,...; got " +
                        std::to_string(r.step) + " at position " +
                        std::to_string(expect_step));
    ++expect_step;
    if (!row["vertex"].is_string())
      throw usage_error("snapshot: row vertex must be a string");
    r.vertex = row["vertex"].get<std::string>();
    if (r.vertex.empty()) throw usage_error("snapshot: empty vertex id");
    if (!row["fpp_time"].is_number())
      throw usage_error("snapshot: row fpp_time must be a number");
    r.fpp_time = row["fpp_time"].get<double>();
    snap.rows.push_back(std::move(r));
  }
  if (j.contains("tiles")) {
    if (!j["tiles"].is_object())
      throw usage_error("snapshot: \"tiles\" must be an object");
    for (const auto& [id, m] : j["tiles"].items()) {
      if (!m.is_string())
        throw usage_error("snapshot: tile matrix for '" + id +
                          "' must be a string");
      snap.tiles.emplace_back(id, m.get<std::string>());
    }
  }
  return snap;
}

/// Loads a snapshot file from disk.
inline snapshot_data snapshot_from_file(const std::string& path) {
  return snapshot_from_json(read_file_bytes(path));
}

}  // namespace edenlab
