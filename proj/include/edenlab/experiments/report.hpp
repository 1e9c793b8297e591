#pragma once
// Experiment reports: config echo, summary tables, named check flags, and
// the RNG audit trail.
//
// Every pass/fail flag corresponds to a named invariant checked by some
// module (a recomputed boundary, a packing audit, a two-sided profile
// bound, ...); the report never invents a criterion of its own. The RNG
// audit records the master seed and the derived per-trial stream seeds so
// a single trial can be reproduced without re-deriving the whole run.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "edenlab/core/fmt.hpp"

namespace edenlab {

/// One named invariant check with its outcome and a human-readable detail.
struct check_flag {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// A small summary table (full data goes to CSV artifacts, not here).
struct metric_table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Which random streams a run consumed: seeds derived from (master, index)
/// for index in [0, streams). first/last are spot-check values.
struct rng_audit {
  bool seeded = false;
  std::uint64_t master = 0;
  std::uint64_t streams = 0;
  std::uint64_t first = 0;
  std::uint64_t last = 0;
};

struct experiment_report {
  std::string config_text;  ///< canonical config echo
  std::vector<metric_table> tables;
  std::vector<check_flag> checks;
  std::vector<std::string> artifacts;  ///< files written, in order
  rng_audit rng;
  double wall_seconds = 0.0;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const check_flag& c) { return c.pass; });
  }

  void add_check(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }

  /// Human-readable block; artifacts hold the machine-readable data.
  void print(std::ostream& os) const {
    os << "== experiment report ==\n";
    os << "[config]\n" << config_text;
    for (const auto& t : tables) {
      os << "\n[table " << t.name << "]\n";
      os << join(t.header, "  ") << "\n";
      for (const auto& row : t.rows) os << join(row, "  ") << "\n";
    }
    if (!artifacts.empty()) {
      os << "\n[artifacts]\n";
      for (const auto& a : artifacts) os << a << "\n";
    }
    os << "\n[checks]\n";
    for (const auto& c : checks)
      os << (c.pass ? "PASS " : "FAIL ") << c.name << " — " << c.detail
         << "\n";
    if (rng.seeded) {
      os << "\n[rng]\nmaster = " << rng.master << ", streams = " << rng.streams
         << " (stream i = derive_stream_seed(master, i))";
      if (rng.streams > 0)
        os << ", first = " << rng.first << ", last = " << rng.last;
      os << "\n";
    }
    os << "\n[wall] " << format_fixed(wall_seconds, 3) << " s\n";
    os << (all_pass() ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
  }
};

}  // namespace edenlab
