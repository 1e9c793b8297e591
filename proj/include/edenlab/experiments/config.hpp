#pragma once
// Run configuration: which experiment, on which graph, with which knobs.
//
// A run_config is the complete, serializable description of one experiment;
// a run is reproducible from the config and the code version alone. The
// text form is flat key-value lines grouped into typed sections:
//
//   [run]
//   kind = census
//   seed = 20260822
//   jobs = 2
//
//   [graph]
//   a = lattice(d=2, generators=standard)
//
//   [census]
//   pattern = patterns/punctured_b2.json
//   sizes = 1000,10000
//   trials = 50
//   match-mode = transported
//   out = census.csv
//
// Exactly one kind-specific section may appear and it must match the kind.
// Unknown sections or keys are usage errors (a config that silently drops a
// knob is not auditable). Randomized kinds require an explicit seed; there
// is no wall-clock default.

#include <array>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "edenlab/core/error.hpp"
#include "edenlab/core/fmt.hpp"
#include "edenlab/graph/hyperbolic.hpp"
#include "edenlab/graph/lattice.hpp"
#include "edenlab/graph/tree.hpp"

namespace edenlab {

// ---------------------------------------------------------------------------
// Graph descriptors
// ---------------------------------------------------------------------------

/// A parsed graph descriptor; holds the family and its parameters.
struct graph_choice {
  enum class family_kind { lattice, tree, hyperbolic };
  family_kind family = family_kind::lattice;
  int a = 0;  ///< lattice dimension / tree degree / hyperbolic p
  int b = 0;  ///< hyperbolic q
  lattice_generators gens = lattice_generators::standard;
};

namespace detail {

inline std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out += c;
  return out;
}

inline int parse_small_int(const std::string& tok, const std::string& what) {
  const std::int64_t v = parse_i64(tok, what);
  if (v < 1 || v > 64)
    throw usage_error(what + " out of range in graph descriptor: " + tok);
  return static_cast<int>(v);
}

}  // namespace detail

/// Parses `lattice(d=2, generators=standard)`, `tree(degree=3)`,
/// `hyperbolic(p=7, q=3)` and their positional forms `lattice(2, king)`,
/// `tree(3)`, `hyperbolic(7,3)`.
inline graph_choice parse_graph(const std::string& text) {
  const std::string s = detail::strip_spaces(text);
  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw usage_error("graph descriptor must look like family(args): " + text);
  const std::string family = s.substr(0, open);
  const std::string body = s.substr(open + 1, s.size() - open - 2);
  if (body.empty())
    throw usage_error("graph descriptor has no arguments: " + text);
  const auto args = split(body, ',');

  graph_choice c;
  // Collect key=value pairs; bare tokens fill the family's positional slots.
  std::map<std::string, std::string> kv;
  std::vector<std::string> positional;
  for (const auto& arg : args) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos) {
      positional.push_back(arg);
    } else {
      const std::string key = arg.substr(0, eq);
      if (kv.count(key))
        throw usage_error("graph descriptor repeats '" + key + "': " + text);
      kv[key] = arg.substr(eq + 1);
    }
  }
  auto take = [&](const std::string& key, std::size_t pos) -> std::string {
    const auto it = kv.find(key);
    if (it != kv.end()) {
      if (pos < positional.size())
        throw usage_error("graph descriptor gives '" + key +
                          "' both positionally and by name: " + text);
      return it->second;
    }
    if (pos < positional.size()) return positional[pos];
    throw usage_error("graph descriptor is missing '" + key + "': " + text);
  };
  auto reject_unknown = [&](std::initializer_list<const char*> known) {
    for (const auto& [key, value] : kv) {
      (void)value;
      bool ok = false;
      for (const char* k : known) ok = ok || key == k;
      if (!ok)
        throw usage_error("graph descriptor has unknown key '" + key +
                          "': " + text);
    }
  };

  if (family == "lattice") {
    reject_unknown({"d", "generators"});
    if (positional.size() > 2)
      throw usage_error("lattice(...) takes d and generators: " + text);
    c.family = graph_choice::family_kind::lattice;
    c.a = detail::parse_small_int(take("d", 0), "lattice dimension");
    const std::string gens = take("generators", 1);
    if (gens == "standard")
      c.gens = lattice_generators::standard;
    else if (gens == "king")
      c.gens = lattice_generators::king;
    else
      throw usage_error("lattice generators must be standard or king: " + text);
  } else if (family == "tree") {
    reject_unknown({"degree"});
    if (positional.size() > 1)
      throw usage_error("tree(...) takes only a degree: " + text);
    c.family = graph_choice::family_kind::tree;
    c.a = detail::parse_small_int(take("degree", 0), "tree degree");
  } else if (family == "hyperbolic") {
    reject_unknown({"p", "q"});
    if (positional.size() > 2)
      throw usage_error("hyperbolic(...) takes p and q: " + text);
    c.family = graph_choice::family_kind::hyperbolic;
    c.a = detail::parse_small_int(take("p", 0), "hyperbolic p");
    c.b = detail::parse_small_int(take("q", 1), "hyperbolic q");
  } else {
    throw usage_error("unknown graph family '" + family +
                      "' (expected lattice, tree, or hyperbolic)");
  }
  return c;
}

/// Constructs the chosen backend and passes it to `f`; every branch must
/// yield the same result type. Backend constructors validate parameters.
template <class F>
decltype(auto) with_graph(const graph_choice& c, F&& f) {
  switch (c.family) {
    case graph_choice::family_kind::lattice: {
      const lattice_graph g(c.a, c.gens);
      return f(g);
    }
    case graph_choice::family_kind::tree: {
      const tree_graph g(c.a);
      return f(g);
    }
    case graph_choice::family_kind::hyperbolic: {
      const hyperbolic_graph g(c.a, c.b);
      return f(g);
    }
  }
  throw invariant_error("with_graph: unhandled family");
}

/// Canonical descriptor text (the backend's own formatting).
inline std::string canonical_graph(const graph_choice& c) {
  return with_graph(c, [](const auto& g) { return g.descriptor(); });
}

// ---------------------------------------------------------------------------
// Run configuration
// ---------------------------------------------------------------------------

enum class experiment_kind {
  simulate,
  census,
  profile,
  qi_compare,
  betti,
  tree_analytics,
  render,
};

inline const char* experiment_kind_name(experiment_kind k) {
  switch (k) {
    case experiment_kind::simulate: return "simulate";
    case experiment_kind::census: return "census";
    case experiment_kind::profile: return "profile";
    case experiment_kind::qi_compare: return "qi-compare";
    case experiment_kind::betti: return "betti";
    case experiment_kind::tree_analytics: return "tree-analytics";
    case experiment_kind::render: return "render";
  }
  throw invariant_error("experiment_kind_name: unknown tag");
}

inline experiment_kind parse_experiment_kind(const std::string& s) {
  for (const auto k :
       {experiment_kind::simulate, experiment_kind::census,
        experiment_kind::profile, experiment_kind::qi_compare,
        experiment_kind::betti, experiment_kind::tree_analytics,
        experiment_kind::render}) {
    if (s == experiment_kind_name(k)) return k;
  }
  throw usage_error("unknown experiment kind '" + s +
                    "' (expected simulate, census, profile, qi-compare, "
                    "betti, tree-analytics, or render)");
}

/// True for kinds that draw random numbers and therefore require a seed.
inline bool kind_is_randomized(experiment_kind k) {
  switch (k) {
    case experiment_kind::simulate:
    case experiment_kind::census:
    case experiment_kind::betti:
    case experiment_kind::tree_analytics:
      return true;
    case experiment_kind::profile:
    case experiment_kind::qi_compare:
    case experiment_kind::render:
      return false;
  }
  throw invariant_error("kind_is_randomized: unknown tag");
}

/// Everything one experiment needs; serializable and self-validating.
struct run_config {
  experiment_kind kind = experiment_kind::simulate;
  std::string graph;    ///< descriptor; unused by tree-analytics and render
  std::string graph_b;  ///< second descriptor (qi-compare only)

  bool has_seed = false;
  std::uint64_t seed = 0;
  unsigned jobs = 1;

  // simulate: exactly one of steps / fpp_time
  bool has_steps = false;
  std::uint64_t steps = 0;
  bool has_fpp_time = false;
  double fpp_time = 0.0;
  std::string trace_out;     ///< CSV trace path (optional)
  std::string snapshot_out;  ///< JSON snapshot path (optional)

  // census
  std::string pattern_path;
  std::string match_mode_text = "transported";

  // census + betti
  std::vector<std::uint64_t> sizes;

  // census + betti + tree-analytics
  std::uint64_t trials = 0;

  // profile + qi-compare
  std::uint64_t n_max = 0;
  std::string profile_mode = "connected";  ///< connected | window

  // tree-analytics
  int degree = 0;
  double t_max = 0.0;
  double dt = 0.0;

  // render
  std::string snapshot_in;

  std::string out;  ///< main artifact path (CSV or SVG)

  // Tolerance overrides (tree-analytics cross-checks).
  double tol_quad_ode = 0.005;  ///< max relative quadrature/ODE gap
  double tol_mc_se = 3.0;       ///< MC agreement band, in standard errors

  bool operator==(const run_config&) const = default;
};

namespace detail {

inline std::string format_sizes(const std::vector<std::uint64_t>& sizes) {
  std::vector<std::string> parts;
  parts.reserve(sizes.size());
  for (const auto s : sizes) parts.push_back(std::to_string(s));
  return join(parts, ",");
}

}  // namespace detail

/// Validates cross-field invariants; throws usage_error with the reason.
inline void validate_config(const run_config& cfg) {
  const auto need_graph = [&](const char* why) {
    if (cfg.graph.empty())
      throw usage_error(std::string("config: ") + why + " needs graph.a");
    parse_graph(cfg.graph);
  };
  if (kind_is_randomized(cfg.kind) && !cfg.has_seed)
    throw usage_error(std::string("config: ") + experiment_kind_name(cfg.kind) +
                      " is randomized and requires an explicit seed");
  if (cfg.jobs < 1) throw usage_error("config: jobs must be >= 1");

  switch (cfg.kind) {
    case experiment_kind::simulate:
      need_graph("simulate");
      if (cfg.has_steps == cfg.has_fpp_time)
        throw usage_error(
            "config: simulate takes exactly one of steps and fpp-time");
      if (cfg.has_steps && cfg.steps < 1)
        throw usage_error("config: simulate steps must be >= 1");
      if (cfg.has_fpp_time && !(cfg.fpp_time >= 0.0))
        throw usage_error("config: simulate fpp-time must be >= 0");
      break;
    case experiment_kind::census:
      need_graph("census");
      if (cfg.pattern_path.empty())
        throw usage_error("config: census needs a pattern file");
      if (cfg.sizes.empty()) throw usage_error("config: census needs sizes");
      if (cfg.trials < 1) throw usage_error("config: census needs trials >= 1");
      if (cfg.match_mode_text != "transported" &&
          cfg.match_mode_text != "orbit")
        throw usage_error(
            "config: census match-mode must be transported or orbit");
      break;
    case experiment_kind::profile:
      need_graph("profile");
      if (cfg.n_max < 1) throw usage_error("config: profile needs n-max >= 1");
      if (cfg.profile_mode != "connected" && cfg.profile_mode != "window")
        throw usage_error("config: profile mode must be connected or window");
      break;
    case experiment_kind::qi_compare:
      need_graph("qi-compare");
      if (cfg.graph_b.empty())
        throw usage_error("config: qi-compare needs graph.b");
      parse_graph(cfg.graph_b);
      if (cfg.n_max < 1)
        throw usage_error("config: qi-compare needs n-max >= 1");
      break;
    case experiment_kind::betti:
      need_graph("betti");
      if (cfg.sizes.empty()) throw usage_error("config: betti needs sizes");
      if (cfg.trials < 1) throw usage_error("config: betti needs trials >= 1");
      break;
    case experiment_kind::tree_analytics:
      if (cfg.degree < 3)
        throw usage_error("config: tree-analytics needs degree >= 3");
      if (!(cfg.t_max > 0.0))
        throw usage_error("config: tree-analytics needs t-max > 0");
      if (!(cfg.dt > 0.0))
        throw usage_error("config: tree-analytics needs dt > 0");
      if (cfg.trials < 1000)
        throw usage_error(
            "config: tree-analytics needs trials >= 1000 for usable stderr");
      if (!(cfg.tol_quad_ode > 0.0) || !(cfg.tol_mc_se > 0.0))
        throw usage_error("config: tolerances must be > 0");
      break;
    case experiment_kind::render:
      if (cfg.snapshot_in.empty())
        throw usage_error("config: render needs a snapshot file");
      if (cfg.out.empty())
        throw usage_error("config: render needs an output path");
      break;
  }
}

/// Canonical text form; parse_config(serialize_config(c)) == c.
inline std::string serialize_config(const run_config& cfg) {
  std::ostringstream os;
  os << "[run]\n";
  os << "kind = " << experiment_kind_name(cfg.kind) << "\n";
  if (cfg.has_seed) os << "seed = " << cfg.seed << "\n";
  if (cfg.jobs != 1) os << "jobs = " << cfg.jobs << "\n";
  if (!cfg.graph.empty() || !cfg.graph_b.empty()) {
    os << "\n[graph]\n";
    if (!cfg.graph.empty()) os << "a = " << cfg.graph << "\n";
    if (!cfg.graph_b.empty()) os << "b = " << cfg.graph_b << "\n";
  }
  os << "\n[" << experiment_kind_name(cfg.kind) << "]\n";
  switch (cfg.kind) {
    case experiment_kind::simulate:
      if (cfg.has_steps) os << "steps = " << cfg.steps << "\n";
      if (cfg.has_fpp_time)
        os << "fpp-time = " << format_double(cfg.fpp_time) << "\n";
      if (!cfg.trace_out.empty()) os << "trace = " << cfg.trace_out << "\n";
      if (!cfg.snapshot_out.empty())
        os << "snapshot = " << cfg.snapshot_out << "\n";
      break;
    case experiment_kind::census:
      os << "pattern = " << cfg.pattern_path << "\n";
      os << "sizes = " << detail::format_sizes(cfg.sizes) << "\n";
      os << "trials = " << cfg.trials << "\n";
      if (cfg.match_mode_text != "transported")
        os << "match-mode = " << cfg.match_mode_text << "\n";
      if (!cfg.out.empty()) os << "out = " << cfg.out << "\n";
      break;
    case experiment_kind::profile:
      os << "n-max = " << cfg.n_max << "\n";
      if (cfg.profile_mode != "connected")
        os << "mode = " << cfg.profile_mode << "\n";
      if (!cfg.out.empty()) os << "out = " << cfg.out << "\n";
      break;
    case experiment_kind::qi_compare:
      os << "n-max = " << cfg.n_max << "\n";
      if (!cfg.out.empty()) os << "out = " << cfg.out << "\n";
      break;
    case experiment_kind::betti:
      os << "sizes = " << detail::format_sizes(cfg.sizes) << "\n";
      os << "trials = " << cfg.trials << "\n";
      if (!cfg.out.empty()) os << "out = " << cfg.out << "\n";
      break;
    case experiment_kind::tree_analytics:
      os << "degree = " << cfg.degree << "\n";
      os << "t-max = " << format_double(cfg.t_max) << "\n";
      os << "dt = " << format_double(cfg.dt) << "\n";
      os << "trials = " << cfg.trials << "\n";
      if (!cfg.out.empty()) os << "out = " << cfg.out << "\n";
      break;
    case experiment_kind::render:
      os << "snapshot = " << cfg.snapshot_in << "\n";
      os << "out = " << cfg.out << "\n";
      break;
  }
  if (cfg.tol_quad_ode != 0.005 || cfg.tol_mc_se != 3.0) {
    os << "\n[tolerances]\n";
    if (cfg.tol_quad_ode != 0.005)
      os << "quad-ode = " << format_double(cfg.tol_quad_ode) << "\n";
    if (cfg.tol_mc_se != 3.0)
      os << "mc-se = " << format_double(cfg.tol_mc_se) << "\n";
  }
  return os.str();
}

/// Parses the canonical text form; rejects unknown sections and keys, and
/// runs validate_config before returning.
inline run_config parse_config(const std::string& text) {
  run_config cfg;
  std::string section;
  std::string kind_section;  // the kind-specific section actually seen
  bool seen_kind = false;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  // First pass requires [run]/kind before kind-specific keys, so parse in
  // two passes: collect (section, key, value) triples, then interpret.
  std::vector<std::array<std::string, 2>> entries;  // {section.key, value}
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line;
    for (char c : raw) {
      if (c == '#') break;
      line += c;
    }
    // Trim.
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    if (line.front() == '[') {
      if (line.back() != ']')
        throw usage_error("config line " + std::to_string(line_no) +
                          ": unterminated section header");
      section = line.substr(1, line.size() - 2);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw usage_error("config line " + std::to_string(line_no) +
                        ": expected key = value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    const auto kb = key.find_last_not_of(" \t");
    key = key.substr(0, kb == std::string::npos ? 0 : kb + 1);
    const auto vb = value.find_first_not_of(" \t");
    value = vb == std::string::npos ? "" : value.substr(vb);
    if (key.empty() || value.empty())
      throw usage_error("config line " + std::to_string(line_no) +
                        ": empty key or value");
    if (section.empty())
      throw usage_error("config line " + std::to_string(line_no) +
                        ": key outside any [section]");
    entries.push_back({section + "." + key, value});
  }

  // Interpret [run] first so the kind is known.
  for (const auto& [path, value] : entries) {
    if (path == "run.kind") {
      cfg.kind = parse_experiment_kind(value);
      seen_kind = true;
    }
  }
  if (!seen_kind) throw usage_error("config: missing [run] kind");
  const std::string kname = experiment_kind_name(cfg.kind);

  for (const auto& [path, value] : entries) {
    if (path == "run.kind") continue;
    if (path == "run.seed") {
      cfg.seed = parse_u64(value, "config seed");
      cfg.has_seed = true;
    } else if (path == "run.jobs") {
      const auto j = parse_u64(value, "config jobs");
      if (j < 1 || j > 64) throw usage_error("config: jobs out of range");
      cfg.jobs = static_cast<unsigned>(j);
    } else if (path == "graph.a") {
      cfg.graph = value;
    } else if (path == "graph.b") {
      cfg.graph_b = value;
    } else if (path == "tolerances.quad-ode") {
      cfg.tol_quad_ode = parse_double(value, "config quad-ode tolerance");
    } else if (path == "tolerances.mc-se") {
      cfg.tol_mc_se = parse_double(value, "config mc-se tolerance");
    } else if (path.rfind(kname + ".", 0) == 0) {
      const std::string key = path.substr(kname.size() + 1);
      kind_section = kname;
      bool known = true;
      switch (cfg.kind) {
        case experiment_kind::simulate:
          if (key == "steps") {
            cfg.steps = parse_u64(value, "config steps");
            cfg.has_steps = true;
          } else if (key == "fpp-time") {
            cfg.fpp_time = parse_double(value, "config fpp-time");
            cfg.has_fpp_time = true;
          } else if (key == "trace") {
            cfg.trace_out = value;
          } else if (key == "snapshot") {
            cfg.snapshot_out = value;
          } else {
            known = false;
          }
          break;
        case experiment_kind::census:
          if (key == "pattern") {
            cfg.pattern_path = value;
          } else if (key == "sizes") {
            cfg.sizes = parse_size_list(value);
          } else if (key == "trials") {
            cfg.trials = parse_u64(value, "config trials");
          } else if (key == "match-mode") {
            cfg.match_mode_text = value;
          } else if (key == "out") {
            cfg.out = value;
          } else {
            known = false;
          }
          break;
        case experiment_kind::profile:
          if (key == "n-max") {
            cfg.n_max = parse_u64(value, "config n-max");
          } else if (key == "mode") {
            cfg.profile_mode = value;
          } else if (key == "out") {
            cfg.out = value;
          } else {
            known = false;
          }
          break;
        case experiment_kind::qi_compare:
          if (key == "n-max") {
            cfg.n_max = parse_u64(value, "config n-max");
          } else if (key == "out") {
            cfg.out = value;
          } else {
            known = false;
          }
          break;
        case experiment_kind::betti:
          if (key == "sizes") {
            cfg.sizes = parse_size_list(value);
          } else if (key == "trials") {
            cfg.trials = parse_u64(value, "config trials");
          } else if (key == "out") {
            cfg.out = value;
          } else {
            known = false;
          }
          break;
        case experiment_kind::tree_analytics:
          if (key == "degree") {
            cfg.degree = detail::parse_small_int(value, "config degree");
          } else if (key == "t-max") {
            cfg.t_max = parse_double(value, "config t-max");
          } else if (key == "dt") {
            cfg.dt = parse_double(value, "config dt");
          } else if (key == "trials") {
            cfg.trials = parse_u64(value, "config trials");
          } else if (key == "out") {
            cfg.out = value;
          } else {
            known = false;
          }
          break;
        case experiment_kind::render:
          if (key == "snapshot") {
            cfg.snapshot_in = value;
          } else if (key == "out") {
            cfg.out = value;
          } else {
            known = false;
          }
          break;
      }
      if (!known)
        throw usage_error("config: unknown key '" + key + "' in [" + kname +
                          "]");
    } else {
      throw usage_error("config: unknown entry '" + path + "'");
    }
  }
  (void)kind_section;
  validate_config(cfg);
  return cfg;
}

}  // namespace edenlab
