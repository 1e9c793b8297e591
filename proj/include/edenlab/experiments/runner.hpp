#pragma once
// Experiment dispatch: one entry point per configured experiment kind,
// each producing an experiment_report and writing its artifacts.
//
// Contracts shared by every kind:
//   * the report echoes the canonical config, so a run is auditable;
//   * every pass/fail flag restates an invariant some module enforces;
//   * artifacts are byte-deterministic for a fixed config and seed
//     (CSV fields use shortest round-trip formatting, JSON key order is
//     canonical, and per-trial work depends only on derived stream seeds);
//   * worker count never changes results, only wall-clock time.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "edenlab/analytics/bounds.hpp"
#include "edenlab/analytics/expectation.hpp"
#include "edenlab/analytics/mc.hpp"
#include "edenlab/census/pattern_io.hpp"
#include "edenlab/census/scaling.hpp"
#include "edenlab/core/csv.hpp"
#include "edenlab/core/error.hpp"
#include "edenlab/core/fmt.hpp"
#include "edenlab/core/rng.hpp"
#include "edenlab/experiments/config.hpp"
#include "edenlab/experiments/render.hpp"
#include "edenlab/experiments/report.hpp"
#include "edenlab/experiments/snapshot.hpp"
#include "edenlab/graph/concepts.hpp"
#include "edenlab/graph/ops.hpp"
#include "edenlab/growth/eden.hpp"
#include "edenlab/growth/trace.hpp"
#include "edenlab/iso/profile.hpp"
#include "edenlab/iso/qi.hpp"
#include "edenlab/nerve/scaling.hpp"

namespace edenlab {
namespace detail {

/// Records derived stream seeds [0, streams) for the audit trail.
inline rng_audit derived_streams_audit(std::uint64_t master,
                                       std::uint64_t streams) {
  rng_audit a;
  a.seeded = true;
  a.master = master;
  a.streams = streams;
  if (streams > 0) {
    a.first = derive_stream_seed(master, 0);
    a.last = derive_stream_seed(master, streams - 1);
  }
  return a;
}

/// Writes rows to a CSV artifact and registers it on the report.
inline void write_csv_artifact(experiment_report& rep, const std::string& path,
                               const std::vector<std::string>& header,
                               const std::vector<std::vector<std::string>>& rows) {
  ensure_parent_dir(path);
  csv_writer w(path, header);
  for (const auto& row : rows) w.write_row(row);
  rep.artifacts.push_back(path);
}

/// Recomputes the boundary of the final state from scratch and compares it
/// with the maintained container (the growth module's core invariant).
template <graph_backend G>
check_flag recomputed_boundary_check(const G& g, const cluster_state<G>& st) {
  std::set<typename G::vertex_id> fresh;
  for (const auto& v : st.infected_order())
    for (const auto& w : g.neighbors(v))
      if (!st.contains(w)) fresh.insert(w);
  std::set<typename G::vertex_id> kept(st.boundary().begin(),
                                       st.boundary().end());
  const bool pass = fresh == kept;
  check_flag c;
  c.name = "boundary-recomputed-equals-maintained";
  c.pass = pass;
  c.detail = "recomputed " + std::to_string(fresh.size()) +
             " boundary vertices vs maintained " + std::to_string(kept.size()) +
             (pass ? " (sets equal)" : " (sets differ)");
  return c;
}

/// `<stem>_mc<ext>` next to a main artifact path.
inline std::string sibling_mc_path(const std::string& out) {
  const std::filesystem::path p(out);
  std::filesystem::path q = p;
  q.replace_filename(p.stem().string() + "_mc" + p.extension().string());
  return q.string();
}

inline std::vector<std::string> trace_row_fields(const trace_row& r) {
  return {std::to_string(r.step), r.vertex, format_double(r.fpp_time),
          std::to_string(r.boundary_size), std::to_string(r.cluster_size)};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

inline experiment_report run_simulate(const run_config& cfg) {
  experiment_report rep;
  return with_graph(parse_graph(cfg.graph), [&](const auto& g) {
    using G = std::decay_t<decltype(g)>;
    eden_engine<G> eng(g, cfg.seed);
    eng.enable_trace();
    if (cfg.has_steps)
      eng.run_to_size(cfg.steps);
    else
      eng.run_to_fpp_time(cfg.fpp_time);
    const auto& rows = eng.trace();

    if (!cfg.trace_out.empty()) {
      std::vector<std::vector<std::string>> fields;
      fields.reserve(rows.size());
      for (const auto& r : rows) fields.push_back(detail::trace_row_fields(r));
      detail::write_csv_artifact(rep, cfg.trace_out, trace_header(), fields);
    }
    if (!cfg.snapshot_out.empty()) {
      write_text_file(cfg.snapshot_out, snapshot_to_json(g, cfg.seed, rows));
      rep.artifacts.push_back(cfg.snapshot_out);
    }

    metric_table t;
    t.name = "final-state";
    t.header = {"cluster_size", "boundary_size", "fpp_time", "trace_rows"};
    t.rows.push_back({std::to_string(eng.state().size()),
                      std::to_string(eng.state().boundary_size()),
                      format_double(eng.state().fpp_clock()),
                      std::to_string(rows.size())});
    rep.tables.push_back(std::move(t));

    rep.checks.push_back(detail::recomputed_boundary_check(g, eng.state()));

    // Same config, fresh engine: the trace must reproduce bit-for-bit.
    eden_engine<G> again(g, cfg.seed);
    again.enable_trace();
    if (cfg.has_steps)
      again.run_to_size(cfg.steps);
    else
      again.run_to_fpp_time(cfg.fpp_time);
    const auto cmp = compare_traces(rows, again.trace());
    rep.add_check("trace-replays-identically", cmp.ok,
                  cmp.ok ? "second run with the same seed matches all " +
                               std::to_string(rows.size()) + " rows"
                         : "diverges at row " +
                               std::to_string(cmp.divergence_row) + " field " +
                               cmp.field);

    rep.rng.seeded = true;
    rep.rng.master = cfg.seed;
    rep.rng.streams = 1;
    rep.rng.first = rep.rng.last = cfg.seed;
    return rep;
  });
}

// ---------------------------------------------------------------------------
// replay
// ---------------------------------------------------------------------------

/// Re-runs a recorded simulate config and byte-compares the trace file;
/// on mismatch the first divergent row and field are named. Also checks
/// the recorded rows' internal structure and the final-state boundary.
inline experiment_report replay(const run_config& cfg,
                                const std::string& trace_path) {
  if (cfg.kind != experiment_kind::simulate)
    throw usage_error("replay: the config must describe a simulate run");
  validate_config(cfg);

  experiment_report rep;
  rep.config_text = serialize_config(cfg);
  const auto t0 = std::chrono::steady_clock::now();

  const std::string recorded_bytes = read_file_bytes(trace_path);
  const auto recorded = read_trace(trace_path);

  // Structure of the recorded rows, independent of any re-run: the k-th
  // row is the k-th infection, so cluster_size must equal step + 1.
  bool structure_ok = true;
  std::string structure_detail =
      "cluster_size = step + 1 on all " + std::to_string(recorded.size()) +
      " rows";
  for (std::size_t i = 0; i < recorded.size(); ++i) {
    if (recorded[i].step != i || recorded[i].cluster_size != i + 1) {
      structure_ok = false;
      structure_detail = "row " + std::to_string(i) + " claims step " +
                         std::to_string(recorded[i].step) + ", cluster_size " +
                         std::to_string(recorded[i].cluster_size);
      break;
    }
  }
  rep.add_check("trace-structure-consistent", structure_ok, structure_detail);

  with_graph(parse_graph(cfg.graph), [&](const auto& g) {
    using G = std::decay_t<decltype(g)>;
    eden_engine<G> eng(g, cfg.seed);
    eng.enable_trace();
    if (cfg.has_steps)
      eng.run_to_size(cfg.steps);
    else
      eng.run_to_fpp_time(cfg.fpp_time);

    std::ostringstream fresh_bytes;
    write_trace(fresh_bytes, eng.trace());
    const bool bytes_ok = fresh_bytes.str() == recorded_bytes;
    if (bytes_ok) {
      rep.add_check("trace-byte-identical", true,
                    "recorded file matches the re-run byte-for-byte (" +
                        std::to_string(recorded_bytes.size()) + " bytes)");
    } else {
      const auto cmp = compare_traces(recorded, eng.trace());
      std::string detail;
      if (cmp.ok) {
        detail = "rows parse equal but bytes differ (foreign formatting?)";
      } else {
        detail = "divergence at row " + std::to_string(cmp.divergence_row) +
                 ", field " + cmp.field + ": recorded " + cmp.expected +
                 ", re-run " + cmp.actual;
      }
      rep.add_check("trace-byte-identical", false, detail);
    }
    rep.checks.push_back(detail::recomputed_boundary_check(g, eng.state()));
    return 0;
  });

  rep.rng.seeded = true;
  rep.rng.master = cfg.seed;
  rep.rng.streams = 1;
  rep.rng.first = rep.rng.last = cfg.seed;
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

// ---------------------------------------------------------------------------
// census
// ---------------------------------------------------------------------------

inline experiment_report run_census(const run_config& cfg) {
  experiment_report rep;
  return with_graph(parse_graph(cfg.graph), [&](const auto& g) {
    using G = std::decay_t<decltype(g)>;
    const auto spec = pattern_from_file(g, cfg.pattern_path);
    rep.add_check("pattern-hypotheses-validated", true,
                  "radius " + std::to_string(spec.radius) + ", " +
                      std::to_string(spec.cells.size()) +
                      " cells: connected, sphere-covering, inside the ball");

    // Profile proxy by family: fitted power law on lattices, the exact
    // linear formula on trees, a flagged unit-slope stand-in on {p,q}.
    profile_model proxy;
    if constexpr (std::is_same_v<G, lattice_graph>) {
      const std::size_t fit_n = g.dimension() == 2 ? 8 : 6;
      proxy = fit_lattice_model(g.dimension(),
                                exact_connected_profile(g, fit_n).values());
    } else if constexpr (std::is_same_v<G, tree_graph>) {
      proxy = tree_model(g.degree());
    } else {
      proxy = nonamenable_model();
    }

    const auto mode = parse_match_mode(cfg.match_mode_text);
    const auto res = census_scaling_experiment(
        g, spec, proxy, cfg.sizes, cfg.trials, cfg.seed, mode, cfg.jobs);

    if (!cfg.out.empty()) {
      std::vector<std::vector<std::string>> rows;
      rows.reserve(res.rows.size());
      for (const auto& r : res.rows)
        rows.push_back({std::to_string(r.target_size), std::to_string(r.trial),
                        std::to_string(r.seed), std::to_string(r.count),
                        format_double(r.profile_value),
                        format_double(r.ratio)});
      detail::write_csv_artifact(rep, cfg.out,
                                 {"target_size", "trial", "stream_seed",
                                  "count", "profile_value", "ratio"},
                                 rows);
    }

    metric_table t;
    t.name = "census-medians";
    t.header = {"target_size", "median_count", "median_ratio"};
    for (const auto& s : res.per_size)
      t.rows.push_back({std::to_string(s.target_size),
                        format_double(s.median_count),
                        format_double(s.median_ratio)});
    rep.tables.push_back(std::move(t));

    metric_table f;
    f.name = "census-fit";
    f.header = {"proxy", "proxy_flagged", "match_mode", "loglog_exponent"};
    f.rows.push_back({res.proxy_label, res.proxy_flagged ? "yes" : "no",
                      match_mode_name(mode),
                      res.has_exponent ? format_double(res.exponent)
                                       : "undefined"});
    rep.tables.push_back(std::move(f));

    rep.add_check("census-centers-audited", true,
                  "every reported center re-verified its match and pairwise "
                  "2R-separation on all " +
                      std::to_string(res.rows.size()) + " runs");

    rep.rng = detail::derived_streams_audit(
        cfg.seed,
        static_cast<std::uint64_t>(cfg.sizes.size()) * cfg.trials);
    return rep;
  });
}

// ---------------------------------------------------------------------------
// profile
// ---------------------------------------------------------------------------

inline experiment_report run_profile(const run_config& cfg) {
  experiment_report rep;
  return with_graph(parse_graph(cfg.graph), [&](const auto& g) {
    using G = std::decay_t<decltype(g)>;
    const auto prof = exact_connected_profile(g, cfg.n_max);
    const auto values = prof.values();

    const auto sub = subadditivity_check(values);
    rep.add_check("profile-subadditive", true,
                  "nondecreasing + subadditive on " +
                      std::to_string(sub.pairs_checked) + " pairs and " +
                      std::to_string(sub.scalings_checked) + " scalings");

    std::vector<std::uint64_t> window_values;
    if (cfg.profile_mode == "window") {
      if constexpr (std::is_same_v<G, lattice_graph>) {
        if (g.dimension() != 2)
          throw usage_error("profile: window mode needs lattice(d=2, ...)");
        if (cfg.n_max > 5)
          throw usage_error(
              "profile: window mode certifies n <= 5 only (optimal shapes "
              "must fit well inside the 4x4 window)");
        window_values = window_exhaustive_min_boundary(
            g, 4, static_cast<std::size_t>(cfg.n_max));
        const bool match =
            std::equal(window_values.begin(), window_values.end(),
                       values.begin());
        rep.add_check(
            "window-crosscheck-matches-connected", match,
            match ? "unrestricted window minimum equals the connected "
                    "profile for every tabulated n"
                  : "window and connected profiles disagree");
      } else {
        throw usage_error("profile: window mode needs lattice(d=2, ...)");
      }
    }

    if (!cfg.out.empty()) {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t n = 1; n <= values.size(); ++n) {
        std::vector<std::string> row = {std::to_string(n),
                                        std::to_string(values[n - 1])};
        if (!window_values.empty())
          row.push_back(std::to_string(window_values[n - 1]));
        rows.push_back(std::move(row));
      }
      std::vector<std::string> header = {"n", "min_boundary"};
      if (!window_values.empty()) header.push_back("window_min_boundary");
      detail::write_csv_artifact(rep, cfg.out, header, rows);
    }

    metric_table t;
    t.name = "profile";
    t.header = {"n", "min_boundary"};
    for (std::size_t n = 1; n <= values.size(); ++n)
      t.rows.push_back({std::to_string(n), std::to_string(values[n - 1])});
    rep.tables.push_back(std::move(t));
    return rep;
  });
}

// ---------------------------------------------------------------------------
// qi-compare
// ---------------------------------------------------------------------------

inline experiment_report run_qi_compare(const run_config& cfg) {
  experiment_report rep;
  const auto ca = parse_graph(cfg.graph);
  const auto cb = parse_graph(cfg.graph_b);
  if (ca.family != cb.family)
    throw usage_error(
        "qi-compare: no canonical quasi-isometry is registered across graph "
        "families; compare two lattices, two trees, or two {p,q} tilings");

  qi_report qrep;
  std::string map_note;
  using fam = graph_choice::family_kind;
  switch (ca.family) {
    case fam::lattice: {
      if (ca.a != cb.a)
        throw usage_error(
            "qi-compare: lattice comparison needs equal dimensions");
      const lattice_graph a(ca.a, ca.gens), b(cb.a, cb.gens);
      const double c = ca.gens == cb.gens ? 1.0 : static_cast<double>(ca.a);
      map_note = "identity on coordinates, claimed (C, K) = (" +
                 format_double(c) + ", 0)";
      qrep = qi_compare(a, b, [](const lattice_vertex& v) { return v; }, c,
                        0.0, cfg.n_max);
      break;
    }
    case fam::tree: {
      if (ca.a != cb.a)
        throw usage_error("qi-compare: tree comparison needs equal degrees");
      const tree_graph a(ca.a), b(cb.a);
      map_note = "identity on words, claimed (C, K) = (1, 0)";
      qrep = qi_compare(a, b,
                        [](const tree_graph::vertex_id& v) { return v; }, 1.0,
                        0.0, cfg.n_max);
      break;
    }
    case fam::hyperbolic: {
      if (ca.a != cb.a || ca.b != cb.b)
        throw usage_error(
            "qi-compare: {p,q} comparison needs equal p and q");
      const hyperbolic_graph a(ca.a, ca.b), b(cb.a, cb.b);
      // Canonical ids match across instances, but the target instance must
      // have interned a tile before it can be addressed; pre-materialize
      // the probe ball so the identity map lands on known tiles.
      ball(b, b.origin(), 4);
      map_note = "identity on canonical tiles, claimed (C, K) = (1, 0)";
      qrep = qi_compare(
          a, b, [](const hyperbolic_graph::vertex_id& v) { return v; }, 1.0,
          0.0, cfg.n_max);
      break;
    }
  }

  if (!cfg.out.empty()) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : qrep.rows)
      rows.push_back({std::to_string(r.n), std::to_string(r.f_t),
                      std::to_string(r.f_w)});
    detail::write_csv_artifact(rep, cfg.out, {"n", "f_a", "f_b"}, rows);
  }

  metric_table t;
  t.name = "qi-profiles";
  t.header = {"n", "f_a", "f_b"};
  for (const auto& r : qrep.rows)
    t.rows.push_back(
        {std::to_string(r.n), std::to_string(r.f_t), std::to_string(r.f_w)});
  rep.tables.push_back(std::move(t));

  metric_table s;
  s.name = "qi-summary";
  s.header = {"map", "bound", "max_fa_over_fb", "max_fb_over_fa"};
  s.rows.push_back({map_note, format_double(qrep.bound),
                    format_double(qrep.max_ratio_t_over_w),
                    format_double(qrep.max_ratio_w_over_t)});
  rep.tables.push_back(std::move(s));

  rep.add_check(
      "qi-two-sided-bound", qrep.within_bound,
      "profile ratios " + format_double(qrep.max_ratio_t_over_w) + " and " +
          format_double(qrep.max_ratio_w_over_t) +
          " vs constructive constant " + format_double(qrep.bound));
  return rep;
}

// ---------------------------------------------------------------------------
// betti
// ---------------------------------------------------------------------------

inline experiment_report run_betti(const run_config& cfg) {
  experiment_report rep;
  return with_graph(parse_graph(cfg.graph), [&](const auto& g) {
    using G = std::decay_t<decltype(g)>;
    if constexpr (!tiling_backend<G>) {
      throw usage_error(
          "betti: the nerve needs a tiling backend (lattice or hyperbolic); "
          "trees tile nothing");
      return rep;  // unreachable; keeps the return type uniform
    } else {
      const auto res =
          betti_scaling_experiment(g, cfg.sizes, cfg.trials, cfg.seed,
                                   cfg.jobs);

      if (!cfg.out.empty()) {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(res.rows.size());
        for (const auto& r : res.rows)
          rows.push_back({std::to_string(r.target_size),
                          std::to_string(r.trial), std::to_string(r.seed),
                          std::to_string(r.beta0), std::to_string(r.beta1)});
        detail::write_csv_artifact(
            rep, cfg.out,
            {"target_size", "trial", "stream_seed", "beta0", "beta1"}, rows);
      }

      metric_table t;
      t.name = "betti-medians";
      t.header = {"target_size", "median_beta1"};
      for (const auto& s : res.per_size)
        t.rows.push_back(
            {std::to_string(s.target_size), format_double(s.median_beta1)});
      rep.tables.push_back(std::move(t));

      metric_table f;
      f.name = "betti-fit";
      f.header = {"slope_through_origin", "r_squared", "ratio_min",
                  "ratio_max"};
      f.rows.push_back({format_double(res.slope), format_double(res.r_squared),
                        format_double(res.ratio_min),
                        format_double(res.ratio_max)});
      rep.tables.push_back(std::move(f));

      rep.add_check("beta0-crosscheck", true,
                    "beta_0 matched the union-find component count on all " +
                        std::to_string(res.rows.size()) + " nerves");
      rep.add_check("simplex-bound", true,
                    "simplex counts stayed within the C(r,k+1)*m bound on "
                    "every nerve");

      rep.rng = detail::derived_streams_audit(
          cfg.seed,
          static_cast<std::uint64_t>(cfg.sizes.size()) * cfg.trials);
      return rep;
    }
  });
}

// ---------------------------------------------------------------------------
// tree-analytics
// ---------------------------------------------------------------------------

inline experiment_report run_tree_analytics(const run_config& cfg) {
  experiment_report rep;

  const auto quad = expected_size_quadrature(cfg.degree, cfg.t_max, cfg.dt);
  const auto ode = expected_size_ode(cfg.degree, cfg.t_max, cfg.dt);
  const double gap = curve_max_relative_gap(quad, ode);
  rep.add_check("quadrature-matches-ode", gap < cfg.tol_quad_ode,
                "max relative gap " + format_double(gap) + " vs tolerance " +
                    format_double(cfg.tol_quad_ode));

  const auto bound = exponential_bound_check(cfg.degree, cfg.t_max, cfg.dt);
  rep.add_check("exponential-envelope-holds", bound.holds,
                "C = " + format_double(bound.c_star) + " fitted at t = " +
                    format_double(bound.c_star_at) +
                    "; envelope ratio peaks at " +
                    format_double(bound.max_ratio));

  if (!cfg.out.empty()) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(quad.ts.size());
    for (std::size_t i = 0; i < quad.ts.size(); ++i)
      rows.push_back({format_double(quad.ts[i]), format_double(quad.gs[i]),
                      format_double(ode.gs[i])});
    detail::write_csv_artifact(rep, cfg.out,
                               {"t", "g_quadrature", "g_closed_form"}, rows);
  }

  // Monte Carlo cross-check on the integer grid (skipped below t = 1).
  std::vector<double> ts;
  for (double t = 1.0; t <= cfg.t_max + 1e-12; t += 1.0) ts.push_back(t);
  if (!ts.empty()) {
    const auto mc =
        expected_size_mc_grid(cfg.degree, ts, cfg.trials, cfg.seed, cfg.jobs);

    bool ok = true;
    std::string worst;
    double worst_z = 0.0;
    metric_table m;
    m.name = "mc-crosscheck";
    m.header = {"t", "mc_mean", "mc_stderr", "g_quadrature", "z"};
    std::vector<std::vector<std::string>> mc_rows;
    for (const auto& pt : mc) {
      const auto idx = static_cast<std::size_t>(std::llround(pt.t / cfg.dt));
      if (idx >= quad.ts.size() || std::abs(quad.ts[idx] - pt.t) > cfg.dt)
        throw invariant_error("tree-analytics: MC grid point off the curve");
      const double z = pt.stats.stderr_mean > 0.0
                           ? (pt.stats.mean - quad.gs[idx]) /
                                 pt.stats.stderr_mean
                           : 0.0;
      if (std::abs(z) > std::abs(worst_z)) {
        worst_z = z;
        worst = "t = " + format_double(pt.t);
      }
      if (std::abs(z) > cfg.tol_mc_se) ok = false;
      m.rows.push_back({format_double(pt.t), format_double(pt.stats.mean),
                        format_double(pt.stats.stderr_mean),
                        format_double(quad.gs[idx]), format_fixed(z, 3)});
      mc_rows.push_back({format_double(pt.t), format_double(pt.stats.mean),
                         format_double(pt.stats.sd),
                         format_double(pt.stats.stderr_mean),
                         std::to_string(pt.trials)});
    }
    rep.tables.push_back(std::move(m));
    rep.add_check("mc-within-se", ok,
                  "worst |z| = " + format_fixed(std::abs(worst_z), 3) +
                      " at " + worst + " vs band " +
                      format_double(cfg.tol_mc_se) + " standard errors");
    if (!cfg.out.empty())
      detail::write_csv_artifact(
          rep, detail::sibling_mc_path(cfg.out),
          {"t", "mc_mean", "mc_sd", "mc_stderr", "trials"}, mc_rows);

    rep.rng = detail::derived_streams_audit(cfg.seed, cfg.trials);
  } else {
    rep.rng = detail::derived_streams_audit(cfg.seed, 0);
  }

  metric_table c;
  c.name = "curve-endpoints";
  c.header = {"t", "g_quadrature", "g_closed_form"};
  c.rows.push_back({format_double(quad.ts.front()),
                    format_double(quad.gs.front()),
                    format_double(ode.gs.front())});
  c.rows.push_back({format_double(quad.ts.back()),
                    format_double(quad.gs.back()),
                    format_double(ode.gs.back())});
  rep.tables.push_back(std::move(c));
  return rep;
}

// ---------------------------------------------------------------------------
// render
// ---------------------------------------------------------------------------

inline experiment_report run_render(const run_config& cfg) {
  experiment_report rep;
  const auto snap = snapshot_from_file(cfg.snapshot_in);
  if (!cfg.graph.empty() && cfg.graph != snap.graph)
    throw usage_error("render: config graph '" + cfg.graph +
                      "' does not match snapshot graph '" + snap.graph + "'");
  const auto gc = parse_graph(snap.graph);
  if (gc.family != graph_choice::family_kind::hyperbolic)
    throw usage_error(
        "render: Poincaré-disk rendering needs a {p,q} snapshot; '" +
        snap.graph + "' has nothing hyperbolic to project");

  const hyperbolic_graph g(gc.a, gc.b);
  for (const auto& [id, matrix] : snap.tiles) g.register_tile(id, matrix);
  rep.add_check("snapshot-tiles-reregistered", true,
                std::to_string(snap.tiles.size()) +
                    " tile matrices re-interned with matching canonical ids");

  std::vector<hyperbolic_graph::vertex_id> order;
  order.reserve(snap.rows.size());
  for (const auto& r : snap.rows) order.push_back(g.parse_id(r.vertex));

  const auto res = render_poincare_svg(g, order);
  write_text_file(cfg.out, res.svg);
  rep.artifacts.push_back(cfg.out);

  rep.add_check("disk-containment", res.max_center_radius < 1.0,
                "largest tile-center radius " +
                    format_double(res.max_center_radius) +
                    " inside the unit disk");

  metric_table t;
  t.name = "render";
  t.header = {"tiles", "max_center_radius"};
  t.rows.push_back({std::to_string(res.tiles),
                    format_double(res.max_center_radius)});
  rep.tables.push_back(std::move(t));
  return rep;
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

/// Validates, runs, stamps the config echo and wall time. Artifacts are
/// written as side effects; failed checks leave all_pass() false (the CLI
/// turns that into exit code 1).
inline experiment_report run(const run_config& cfg) {
  validate_config(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  experiment_report rep;
  switch (cfg.kind) {
    case experiment_kind::simulate: rep = run_simulate(cfg); break;
    case experiment_kind::census: rep = run_census(cfg); break;
    case experiment_kind::profile: rep = run_profile(cfg); break;
    case experiment_kind::qi_compare: rep = run_qi_compare(cfg); break;
    case experiment_kind::betti: rep = run_betti(cfg); break;
    case experiment_kind::tree_analytics: rep = run_tree_analytics(cfg); break;
    case experiment_kind::render: rep = run_render(cfg); break;
  }
  rep.config_text = serialize_config(cfg);
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

}  // namespace edenlab
