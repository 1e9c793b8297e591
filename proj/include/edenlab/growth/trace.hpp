#pragma once
// Trace rows for growth runs, their CSV serialization, and replay.
//
// One row per cluster vertex, including the seed: row `step` records the
// state right after the step-th vertex joined (cluster_size = step + 1), with
// the clock value and the boundary size at that moment. CSV doubles use
// shortest round-trip formatting, so traces are byte-stable across runs with
// the same seed.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "edenlab/core/csv.hpp"
#include "edenlab/core/error.hpp"
#include "edenlab/core/fmt.hpp"

namespace edenlab {

struct trace_row {
  std::uint64_t step = 0;
  std::string vertex;
  double fpp_time = 0.0;
  std::uint64_t boundary_size = 0;
  std::uint64_t cluster_size = 0;

  bool operator==(const trace_row&) const = default;
};

inline const std::vector<std::string>& trace_header() {
  static const std::vector<std::string> h{"step", "vertex", "fpp_time",
                                          "boundary_size", "cluster_size"};
  return h;
}

inline void write_trace(std::ostream& os, const std::vector<trace_row>& rows) {
  csv_writer w(os, trace_header());
  for (const auto& r : rows) {
    w.write_row({std::to_string(r.step), r.vertex, format_double(r.fpp_time),
                 std::to_string(r.boundary_size), std::to_string(r.cluster_size)});
  }
}

inline std::vector<trace_row> read_trace(const std::string& path) {
  const csv_table t = read_csv(path);
  if (t.header != trace_header())
    throw usage_error("'" + path + "' is not a growth trace (unexpected header)");
  std::vector<trace_row> rows;
  rows.reserve(t.rows.size());
  for (const auto& r : t.rows) {
    trace_row row;
    row.step = parse_u64(r[0], "trace step");
    row.vertex = r[1];
    row.fpp_time = parse_double(r[2], "trace fpp_time");
    row.boundary_size = parse_u64(r[3], "trace boundary_size");
    row.cluster_size = parse_u64(r[4], "trace cluster_size");
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Outcome of replaying a recorded trace against a fresh run.
struct replay_report {
  bool ok = true;
  std::uint64_t divergence_row = 0;  ///< first differing row (when !ok)
  std::string field;                 ///< which column differed
  std::string expected;              ///< value in the recorded trace
  std::string actual;                ///< value produced by the fresh run
};

/// Compare a recorded trace with a freshly generated one row by row.
/// Reports the first divergence; identical traces yield ok = true.
inline replay_report compare_traces(const std::vector<trace_row>& recorded,
                                    const std::vector<trace_row>& fresh) {
  replay_report rep;
  const std::size_t n = std::min(recorded.size(), fresh.size());
  for (std::size_t i = 0; i < n; ++i) {
    const trace_row& a = recorded[i];
    const trace_row& b = fresh[i];
    auto diverge = [&](const char* field, std::string expected, std::string actual) {
      rep.ok = false;
      rep.divergence_row = i;
      rep.field = field;
      rep.expected = std::move(expected);
      rep.actual = std::move(actual);
    };
    if (a.step != b.step) {
      diverge("step", std::to_string(a.step), std::to_string(b.step));
    } else if (a.vertex != b.vertex) {
      diverge("vertex", a.vertex, b.vertex);
    } else if (format_double(a.fpp_time) != format_double(b.fpp_time)) {
      diverge("fpp_time", format_double(a.fpp_time), format_double(b.fpp_time));
    } else if (a.boundary_size != b.boundary_size) {
      diverge("boundary_size", std::to_string(a.boundary_size),
              std::to_string(b.boundary_size));
    } else if (a.cluster_size != b.cluster_size) {
      diverge("cluster_size", std::to_string(a.cluster_size),
              std::to_string(b.cluster_size));
    }
    if (!rep.ok) return rep;
  }
  if (recorded.size() != fresh.size()) {
    rep.ok = false;
    rep.divergence_row = n;
    rep.field = "row_count";
    rep.expected = std::to_string(recorded.size());
    rep.actual = std::to_string(fresh.size());
  }
  return rep;
}

} // namespace edenlab
