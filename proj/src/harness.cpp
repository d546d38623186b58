#include "gainrank/harness.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include <json.hpp>

#include "gainrank/error.hpp"
#include "gainrank/graph_file.hpp"

namespace gainrank {
namespace {

constexpr std::size_t kKeptFailures = 10;
constexpr int kWitnessDraws = 100000;

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, std::max(lo, hi))(rng);
}

double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Rng trial_rng(const TrialSpec& spec, int trial) {
  return Rng(spec.seed ^ static_cast<std::uint64_t>(trial));
}

// Even trials draw roots of unity, odd trials uniform gains.
GainMode alternating_mode(int trial) {
  return trial % 2 == 0 ? GainMode::roots_of_unity(12) : GainMode::uniform();
}

void fail(Report& r, const GainGraph& g, std::string expected, std::string observed) {
  ++r.failure_count;
  if (r.failures.size() < kKeptFailures) {
    r.failures.push_back({emit_graph(g), std::move(expected), std::move(observed)});
  }
}

void expect_equal(Report& r, const GainGraph& g, const InertiaTriple& expected,
                  const InertiaTriple& observed) {
  if (expected != observed) fail(r, g, to_string(expected), to_string(observed));
}

GainGraph star(Rng& rng, int order, GainMode mode) {
  return attach_pendants(GainGraph(1), 1, order - 1, sample_gains(rng, static_cast<std::size_t>(order - 1), mode));
}

GainGraph random_graph(Rng& rng, int lo, int hi, GainMode mode) {
  return random_gain_graph(rng, uniform_int(rng, lo, hi), uniform_real(rng, 0.15, 0.7), mode);
}

// Random pendant-bearing bicyclic graph on at most max_n vertices.
GainGraph random_infinity_with_pendants(Rng& rng, int max_n, GainMode mode) {
  const int budget = std::max(max_n, 6);
  int p, l, q;
  do {
    p = uniform_int(rng, 3, 6);
    q = uniform_int(rng, 3, 6);
    l = uniform_int(rng, 1, 3);
  } while (p + q + l - 2 > budget - 1);
  const BaseDescriptor d{BaseKind::Infinity, p, l, q};
  GainGraph g = build_infinity(p, l, q, sample_gains(rng, static_cast<std::size_t>(d.edge_count()), mode));
  return grow_pendant_trees(rng, g, uniform_int(rng, 1, budget - g.order()), mode);
}

GainGraph random_theta_with_pendants(Rng& rng, int max_n, GainMode mode, bool allow_zero, bool require_zero) {
  const int budget = std::max(max_n, 5);
  BaseDescriptor d;
  do {
    const int lo = allow_zero ? 0 : 1;
    d = {BaseKind::Theta, uniform_int(rng, lo, 4), uniform_int(rng, lo, 4), uniform_int(rng, lo, 4)};
    if (require_zero) {
      const int which = uniform_int(rng, 0, 2);
      (which == 0 ? d.p : which == 1 ? d.l : d.q) = 0;
    }
  } while (!d.valid() || d.order() > budget - 1);
  GainGraph g = build_theta(d.p, d.l, d.q, sample_gains(rng, static_cast<std::size_t>(d.edge_count()), mode));
  return grow_pendant_trees(rng, g, uniform_int(rng, 1, budget - g.order()), mode);
}

RankPrediction bound_for(const GainGraph& g, double tol) {
  const BicyclicBase base = bicyclic_base(g);
  const auto& d = base.descriptor;
  if (d.kind == BaseKind::Infinity) return infinity_rank_lower_bound(d.p, d.q);
  const auto cycle = theta_odd_case_cycle(g, base);
  return theta_rank_lower_bound(d.p, d.l, d.q, cycle && cycle_type(*cycle, tol) == CycleType::A);
}

void check_lower_bound(Report& r, const GainGraph& g, const RankPrediction& bound) {
  const int observed = rank(g);
  if (observed < bound.lower) fail(r, g, to_string(bound), std::to_string(observed));
}

void check_attains(Report& r, const GainGraph& g) {
  const RankPrediction bound = bound_for(g, kDefaultTol);
  const int observed = rank(g);
  if (observed != bound.lower) fail(r, g, "exact " + std::to_string(bound.lower), std::to_string(observed));
  ++r.forward_checks;
}

// --- per-trial checks -----------------------------------------------------

using TrialCheck = std::function<void(Rng&, int, const TrialSpec&, Report&)>;

void component_additivity(Rng& rng, int trial, const TrialSpec& s, Report& r) {
  const int half = std::max(1, s.max_n / 2);
  const GainGraph a = random_graph(rng, 1, half, alternating_mode(trial));
  const GainGraph b = random_graph(rng, 1, half, alternating_mode(trial));
  const GainGraph u = disjoint_union(a, b);
  expect_equal(r, u, inertia(a) + inertia(b), inertia(u));
  ++r.backward_checks;
}

void edgeless_criterion(Rng& rng, int trial, const TrialSpec& s, Report& r) {
  if (trial % 2 == 0) {
    const GainGraph g(uniform_int(rng, 1, s.max_n));
    if (inertia(g).pos != 0) fail(r, g, "no positive eigenvalue", to_string(inertia(g)));
    ++r.forward_checks;
    return;
  }
  GainGraph g = random_graph(rng, 2, s.max_n, GainMode::uniform());
  if (g.size() == 0) g = add_edge(g, 1, 2, sample_unit_gain(rng));
  if (inertia(g).pos == 0) fail(r, g, "a positive eigenvalue", to_string(inertia(g)));
  ++r.backward_checks;
}

void induced_monotonicity(Rng& rng, int trial, const TrialSpec& s, Report& r) {
  const GainGraph g = random_graph(rng, 1, s.max_n, alternating_mode(trial));
  std::vector<Vertex> keep;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (rng() % 2) keep.push_back(v);
  }
  if (keep.empty()) keep.push_back(1);
  const InertiaTriple big = inertia(g);
  const InertiaTriple small = inertia(induced_subgraph(g, keep).graph);
  if (small.pos > big.pos || small.neg > big.neg) {
    fail(r, g, "induced subgraph on " + std::to_string(keep.size()) + " vertices within " + to_string(big),
         to_string(small));
  }
  ++r.backward_checks;
}

void pendant_pair(Rng& rng, int trial, const TrialSpec& s, Report& r) {
  const GainMode mode = alternating_mode(trial);
  GainGraph g = random_graph(rng, 1, std::max(1, s.max_n - 2), mode);
  g = attach_pendants(g, uniform_int(rng, 1, g.order()), 1, sample_gains(rng, 1, mode));
  g = grow_pendant_trees(rng, g, uniform_int(rng, 0, s.max_n - g.order()), mode);
  std::vector<Vertex> pendants;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) == 1) pendants.push_back(v);
  }
  const Vertex v = pendants[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(pendants.size()) - 1))];
  const Vertex u = g.neighbors(v)[0];
  const InertiaTriple rest = inertia(delete_pendant_pair(g, v, u).graph);
  expect_equal(r, g, rest + InertiaTriple{1, 1, 0}, inertia(g));
  ++r.backward_checks;
}

std::vector<Vertex> one_to(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

void check_cycle_law(Report& r, const GainGraph& c) {
  const CycleClassification cls = classify_cycle(cycle_walk(c, one_to(c.order())));
  if (cls.fragile) {
    ++r.fragile;
    return;
  }
  expect_equal(r, c, cycle_inertia_formula(cls.type, c.order()), inertia(c));
}

std::vector<CycleType> types_for_length(int n) {
  if (n % 2 == 0) return {CycleType::A, CycleType::B};
  return {CycleType::C, CycleType::D, CycleType::E};
}

void cycle_inertia(Rng& rng, int trial, const TrialSpec&, Report& r) {
  const int n = 3 + trial % 10;
  check_cycle_law(r, build_cycle(n, sample_gains(rng, static_cast<std::size_t>(n))));
  ++r.backward_checks;
  const auto types = types_for_length(n);
  const CycleType t = types[static_cast<std::size_t>((trial / 10) % static_cast<int>(types.size()))];
  const GainGraph forced = forced_type_cycle(rng, n, t);
  check_cycle_law(r, forced);
  ++r.forward_checks;
}

void pendant_twins_claim(Rng& rng, int trial, const TrialSpec& s, Report& r) {
  const GainMode mode = alternating_mode(trial);
  GainGraph g = random_graph(rng, 1, std::max(1, s.max_n - 2), mode);
  g = grow_pendant_trees(rng, g, uniform_int(rng, 0, s.max_n - 2 - g.order()), mode);
  g = attach_pendants(g, uniform_int(rng, 1, g.order()), 2, sample_gains(rng, 2, mode));
  const auto twins = pendant_twins(g);
  const auto [v, w] = twins[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(twins.size()) - 1))];
  const int whole = rank(g);
  for (Vertex x : {v, w}) {
    const Vertex drop[] = {x};
    const int without = rank(remove_vertices(g, drop).graph);
    if (without != whole) {
      fail(r, g, "rank " + std::to_string(whole) + " after deleting twin " + std::to_string(x),
           std::to_string(without));
    }
  }
  ++r.backward_checks;
}

void cycle_gluing(Rng& rng, int trial, const TrialSpec&, Report& r) {
  const int n = 3 + trial % 6;
  GainGraph cycle;
  if (trial % 2 == 0) {
    const auto types = types_for_length(n);
    cycle = forced_type_cycle(rng, n, types[static_cast<std::size_t>((trial / 6) % static_cast<int>(types.size()))]);
    ++r.forward_checks;
  } else {
    cycle = build_cycle(n, sample_gains(rng, static_cast<std::size_t>(n)));
    ++r.backward_checks;
  }
  const CycleClassification cls = classify_cycle(cycle_walk(cycle, one_to(n)));
  const GainGraph h = random_graph(rng, 1, 6, alternating_mode(trial / 2));
  const Vertex at = uniform_int(rng, 1, h.order());
  const GainGraph glued = glue(h, at, cycle, 1);
  if (cls.fragile) {
    ++r.fragile;
    return;
  }
  const Vertex drop[] = {at};
  const RankPrediction want = rank_cycle_with_graph(cls.type, n, rank(h), rank(remove_vertices(h, drop).graph));
  const int observed = rank(glued);
  if (!want.admits(observed)) {
    fail(r, glued, to_string(want) + " (type " + to_string(cls.type) + ")", std::to_string(observed));
  }
}

void infinity_bound(Rng& rng, int trial, const TrialSpec& s, Report& r) {
  const GainGraph g = random_infinity_with_pendants(rng, s.max_n, alternating_mode(trial));
  const auto d = bicyclic_base(g).descriptor;
  check_lower_bound(r, g, infinity_rank_lower_bound(d.p, d.q));
  ++r.backward_checks;
  check_attains(r, sharpness_witness_infinity(uniform_int(rng, 3, 6), uniform_int(rng, 3, 6)));
}

void theta_bound(Rng& rng, int trial, const TrialSpec& s, Report& r) {
  const GainGraph g = random_theta_with_pendants(rng, s.max_n, alternating_mode(trial), false, false);
  check_lower_bound(r, g, bound_for(g, kDefaultTol));
  ++r.backward_checks;
  check_attains(r, sharpness_witness_theta(uniform_int(rng, 1, 4), uniform_int(rng, 1, 4), uniform_int(rng, 1, 4)));
}

void theta_zero_bound(Rng& rng, int trial, const TrialSpec& s, Report& r) {
  const GainGraph g = random_theta_with_pendants(rng, s.max_n, alternating_mode(trial), true, true);
  check_lower_bound(r, g, bound_for(g, kDefaultTol));
  ++r.backward_checks;
  BaseDescriptor d;
  do {
    d = {BaseKind::Theta, 0, uniform_int(rng, 0, 4), uniform_int(rng, 0, 4)};
  } while (!d.valid());
  check_attains(r, sharpness_witness_theta(d.p, d.l, d.q));
}

void bicyclic_bound(Rng& rng, int trial, const TrialSpec& s, Report& r) {
  const bool infinity = trial % 2 == 0;
  const GainGraph g = infinity ? random_infinity_with_pendants(rng, s.max_n, alternating_mode(trial / 2))
                               : random_theta_with_pendants(rng, s.max_n, alternating_mode(trial / 2), true, false);
  const int floor = infinity ? 6 : 4;
  check_lower_bound(r, g, RankPrediction::at_least(floor, "bicyclic-bound"));
  ++r.backward_checks;
  const GainGraph witness = infinity ? sharpness_witness_infinity(3, 3) : sharpness_witness_theta(0, 1, 1);
  if (rank(witness) != floor) fail(r, witness, std::to_string(floor), std::to_string(rank(witness)));
  ++r.forward_checks;
}

void sylvester(Rng& rng, int trial, const TrialSpec& s, Report& r) {
  const GainGraph g = random_graph(rng, 1, s.max_n, alternating_mode(trial));
  const HermitianMatrix m = adjacency(g);
  const InertiaTriple ldl = inertia_congruence(m);
  expect_equal(r, g, inertia_eigen(m), ldl);
  GainGraph gauged = g;
  for (Vertex v = 1; v <= g.order(); ++v) gauged = gauge(gauged, v, sample_unit_gain(rng));
  const HermitianMatrix gm = adjacency(gauged);
  expect_equal(r, gauged, inertia_eigen(gm), inertia_congruence(gm));
  expect_equal(r, gauged, ldl, inertia_congruence(gm));
  ++r.backward_checks;
}

void congruence(Rng& rng, int trial, const TrialSpec& s, Report& r) {
  const GainGraph g = random_graph(rng, 1, std::min(s.max_n, 8), alternating_mode(trial));
  const int n = g.order();
  std::vector<std::complex<double>> t(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  // Unit lower triangular times a diagonal with moduli in [0.5, 2].
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      t[static_cast<std::size_t>(i * n + j)] = {uniform_real(rng, -0.5, 0.5), uniform_real(rng, -0.5, 0.5)};
    }
    t[static_cast<std::size_t>(i * n + i)] = 1.0;
  }
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = uniform_real(rng, 0.5, 2.0) * sample_unit_gain(rng).value();
    for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i * n + j)] *= d;
  }
  expect_equal(r, g, inertia(g), inertia_congruence(congruence_transform(adjacency(g), t)));
  ++r.backward_checks;
}

void gauge_claim(Rng& rng, int trial, const TrialSpec& s, Report& r) {
  const GainGraph g = random_graph(rng, 1, s.max_n, alternating_mode(trial));
  const GainGraph h = gauge(g, uniform_int(rng, 1, g.order()), sample_unit_gain(rng));
  expect_equal(r, h, inertia(g), inertia(h));
  ++r.backward_checks;
}

void cycle_type_invariance(Rng& rng, int trial, const TrialSpec&, Report& r) {
  const int n = 3 + trial % 8;
  GainGraph c;
  if (trial % 2 == 0) {
    const auto types = types_for_length(n);
    c = forced_type_cycle(rng, n, types[static_cast<std::size_t>((trial / 8) % static_cast<int>(types.size()))]);
    ++r.forward_checks;
  } else {
    c = build_cycle(n, sample_gains(rng, static_cast<std::size_t>(n)));
    ++r.backward_checks;
  }
  const std::vector<Vertex> order = one_to(n);
  const CycleClassification first = classify_cycle(cycle_walk(c, order));
  if (first.fragile) ++r.fragile;
  for (int dir = 0; dir < 2; ++dir) {
    for (int shift = 0; shift < n; ++shift) {
      std::vector<Vertex> walk = order;
      std::rotate(walk.begin(), walk.begin() + shift, walk.end());
      if (dir) std::reverse(walk.begin(), walk.end());
      const CycleType t = cycle_type(cycle_walk(c, walk));
      if (t != first.type) fail(r, c, to_string(first.type), to_string(t));
    }
  }
}

void reduce_confluence(Rng& rng, int trial, const TrialSpec& s, Report& r) {
  const GainMode mode = alternating_mode(trial);
  GainGraph g = random_graph(rng, 1, std::max(1, s.max_n / 2), mode);
  g = grow_pendant_trees(rng, g, uniform_int(rng, 1, std::max(1, s.max_n - g.order())), mode);
  const int whole = rank(g);
  const auto total = [](const ReductionTrace& t) { return rank(t.residual.graph) + t.rank_offset; };
  const int greedy = total(reduce(g));
  if (greedy != whole) fail(r, g, std::to_string(whole), "reduce gives " + std::to_string(greedy));
  for (int k = 0; k < 2; ++k) {
    const int shuffled = total(reduce_random(g, rng));
    if (shuffled != whole) fail(r, g, std::to_string(whole), "random order gives " + std::to_string(shuffled));
  }
  ++r.backward_checks;
}

void predict_rank_claim(Rng& rng, int trial, const TrialSpec& s, Report& r) {
  const GainMode mode = alternating_mode(trial);
  GainGraph g;
  switch (trial % 3) {
    case 0: {
      const CatalogId id = catalog_id_from_index(uniform_int(rng, 1, kCatalogSize));
      g = catalog_graph(id, sample_gains(rng, catalog_entry(id).edges.size(), mode));
      if (rng() % 2) g = grow_pendant_trees(rng, g, uniform_int(rng, 1, 3), mode);
      break;
    }
    case 1: g = random_infinity_with_pendants(rng, s.max_n, mode); break;
    default: g = random_theta_with_pendants(rng, s.max_n, mode, true, false); break;
  }
  const RankPrediction p = predict_rank(g);
  const int observed = rank(g);
  if (!p.admits(observed)) fail(r, g, to_string(p) + " [" + p.provenance + "]", std::to_string(observed));
  ++r.backward_checks;
}

// Table rows --------------------------------------------------------------

bool row_holds(const ConditionReport& report, int row) {
  for (const ClauseReport& c : report.clauses) {
    if (c.row == row && !c.holds) return false;
  }
  return true;
}

void table_trial(CatalogId id, Rng& rng, int trial, Report& r) {
  const auto rows = rows_for(id);
  const std::size_t edges = catalog_entry(id).edges.size();
  const bool pendant_table = has_pendants(id);

  if (!rows.empty()) {
    const int which = trial % static_cast<int>(rows.size());
    std::optional<GainGraph> witness;
    for (int draw = 0; draw < kWitnessDraws && !witness; ++draw) {
      GainGraph g = catalog_graph(id, sample_gains(rng, edges, GainMode::roots_of_unity(12)));
      const ConditionReport report = evaluate_rows(id, g);
      if (!report.fragile && row_holds(report, which)) witness = std::move(g);
    }
    if (!witness) {
      fail(r, catalog_graph(id), "a witness for row " + std::to_string(which), "none found");
    } else {
      const int want = rows[static_cast<std::size_t>(which)].rank;
      const int observed = rank(*witness);
      if (observed != want) fail(r, *witness, std::to_string(want), std::to_string(observed));
    }
    ++r.forward_checks;
  }

  const GainGraph g = catalog_graph(id, sample_gains(rng, edges, alternating_mode(trial)));
  const int observed = rank(g);
  ++r.backward_checks;
  if (rows.empty()) {
    if (observed != 5 && observed != 6) fail(r, g, "5 or 6", std::to_string(observed));
    return;
  }
  const ConditionReport report = evaluate_rows(id, g);
  if (report.fragile) {
    ++r.fragile;
    return;
  }
  if (report.satisfied) {
    if (observed != *report.predicted_rank) {
      fail(r, g, std::to_string(*report.predicted_rank), std::to_string(observed));
    }
    return;
  }
  const bool low = pendant_table ? observed == 4 : observed <= 4;
  if (low) fail(r, g, pendant_table ? "rank other than 4" : "rank at least 5", std::to_string(observed));
}

struct ClaimEntry {
  std::string id;
  std::string alias;
  TrialCheck check;
};

const std::vector<ClaimEntry>& registry() {
  static const std::vector<ClaimEntry> entries = [] {
    std::vector<ClaimEntry> e = {
        {"component-additivity", "lemma2.1a", component_additivity},
        {"edgeless-criterion", "lemma2.1b", edgeless_criterion},
        {"induced-monotonicity", "lemma2.1c", induced_monotonicity},
        {"pendant-pair", "lemma2.2", pendant_pair},
        {"cycle-inertia", "lemma2.3", cycle_inertia},
        {"pendant-twins", "lemma2.4", pendant_twins_claim},
        {"star-to-neighbor", "lemma2.5", nullptr},
        {"star-merge", "lemma2.6", nullptr},
        {"path-contraction", "lemma2.7", nullptr},
        {"cycle-gluing", "theorem2.8", cycle_gluing},
        {"infinity-bound", "theorem3.1", infinity_bound},
        {"theta-bound", "theorem3.2", theta_bound},
        {"theta-zero-bound", "theorem3.3", theta_zero_bound},
        {"bicyclic-bound", "theorem3.4", bicyclic_bound},
    };
    for (CatalogId id : all_catalog_ids()) {
      const std::string table = has_pendants(id) ? "table2." : "table1.";
      e.push_back({table + to_string(id) + ".iff", "",
                   [id](Rng& rng, int trial, const TrialSpec&, Report& r) { table_trial(id, rng, trial, r); }});
    }
    e.push_back({"sylvester", "", sylvester});
    e.push_back({"congruence", "", congruence});
    e.push_back({"gauge", "", gauge_claim});
    e.push_back({"cycle-type-invariance", "", cycle_type_invariance});
    e.push_back({"reduce-confluence", "", reduce_confluence});
    e.push_back({"predict-rank", "", predict_rank_claim});
    return e;
  }();
  return entries;
}

// The transformation lemmas -------------------------------------------------

void star_to_neighbor(Rng& rng, int trial, const TrialSpec& s, Report& r) {
  const GainMode mode = alternating_mode(trial);
  const int p = uniform_int(rng, 2, 4);
  const GainGraph base = random_graph(rng, 1, std::max(1, std::min(8, s.max_n) - p), mode);
  const Vertex u = uniform_int(rng, 1, base.order());
  const GainGraph joined = disjoint_union(base, star(rng, p, mode));
  const GainGraph first = add_edge(joined, u, base.order() + 1, sample_unit_gain(rng, mode));
  const GainGraph second = attach_pendants(base, u, p, sample_gains(rng, static_cast<std::size_t>(p), mode));
  const int a = rank(first);
  const int b = rank(second);
  if (a < b) fail(r, first, "rank at least " + std::to_string(b), std::to_string(a));
  ++r.backward_checks;
}

void star_merge(Rng& rng, int trial, const TrialSpec& s, Report& r) {
  const GainMode mode = alternating_mode(trial);
  const int l = uniform_int(rng, 1, 3);
  const int t = uniform_int(rng, 1, 3);
  const GainGraph base = random_graph(rng, 2, std::max(2, std::min(8, s.max_n) - l - t), mode);
  const Vertex v1 = uniform_int(rng, 1, base.order());
  Vertex v2 = uniform_int(rng, 1, base.order() - 1);
  if (v2 >= v1) ++v2;
  const GainGraph first = attach_pendants(attach_pendants(base, v1, l, sample_gains(rng, static_cast<std::size_t>(l), mode)),
                                          v2, t, sample_gains(rng, static_cast<std::size_t>(t), mode));
  const GainGraph second = attach_pendants(base, v1, l + t, sample_gains(rng, static_cast<std::size_t>(l + t), mode));
  const int a = rank(first);
  const int b = rank(second);
  if (a < b) fail(r, first, "rank at least " + std::to_string(b), std::to_string(a));
  ++r.backward_checks;
}

void path_contraction(Rng& rng, int trial, const TrialSpec&, Report& r) {
  const GainMode mode = alternating_mode(trial);
  const int l = uniform_int(rng, 3, 5);
  const GainGraph a = random_graph(rng, 1, 4, mode);
  const GainGraph b = random_graph(rng, 1, 4, mode);
  const Vertex v = uniform_int(rng, 1, a.order());
  const Vertex u = uniform_int(rng, 1, b.order());
  const GainGraph path = build_path(l, sample_gains(rng, static_cast<std::size_t>(l - 1), mode));
  const GainGraph with_path = glue(a, v, path, 1);
  const GainGraph first = glue(with_path, glued_label(a, v, 1, l), b, u);
  const GainGraph merged = glue(a, v, b, u);
  const GainGraph second = attach_pendants(merged, v, l - 1, sample_gains(rng, static_cast<std::size_t>(l - 1), mode));
  const int x = rank(first);
  const int y = rank(second);
  if (x < y) fail(r, first, "rank at least " + std::to_string(y), std::to_string(x));
  ++r.backward_checks;
}

TrialCheck transformation_check(TransformationLemma which) {
  switch (which) {
    case TransformationLemma::StarToNeighbor: return star_to_neighbor;
    case TransformationLemma::StarMerge: return star_merge;
    case TransformationLemma::PathContraction: return path_contraction;
  }
  return nullptr;
}

Report run(const std::string& claim, const TrialSpec& spec, const TrialCheck& check) {
  if (spec.trials < 1) throw Error(ErrorCode::TooSmall, "trials must be at least 1");
  Report r;
  r.claim = claim;
  r.trials = spec.trials;
  r.seed = spec.seed;
  for (int i = 0; i < spec.trials; ++i) {
    Rng rng = trial_rng(spec, i);
    check(rng, i, spec, r);
  }
  return r;
}

}  // namespace

GainMode GainMode::roots_of_unity(int k) {
  if (k < 1 || k > 12) throw Error(ErrorCode::InvalidGain, "roots of unity mode needs 1 <= k <= 12");
  return {k};
}

UnitGain sample_unit_gain(Rng& rng, GainMode mode) {
  if (mode.roots == 0) return make_gain(std::uniform_real_distribution<double>(0.0, 1.0)(rng));
  const int j = std::uniform_int_distribution<int>(0, mode.roots - 1)(rng);
  return make_gain(static_cast<double>(j) / mode.roots);
}

std::vector<UnitGain> sample_gains(Rng& rng, std::size_t count, GainMode mode) {
  std::vector<UnitGain> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_unit_gain(rng, mode));
  return out;
}

GainGraph random_gain_graph(Rng& rng, int n, double p, GainMode mode) {
  std::bernoulli_distribution coin(p);
  std::vector<GainEdge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (coin(rng)) edges.push_back({u, v, sample_unit_gain(rng, mode)});
    }
  }
  return GainGraph(n, edges);
}

GainGraph random_tree(Rng& rng, int n, GainMode mode) {
  return grow_pendant_trees(rng, GainGraph(1), n - 1, mode);
}

GainGraph grow_pendant_trees(Rng& rng, const GainGraph& g, int extra, GainMode mode) {
  std::vector<GainEdge> edges(g.edges().begin(), g.edges().end());
  int n = g.order();
  for (int k = 0; k < extra; ++k) {
    const Vertex at = uniform_int(rng, 1, n);
    ++n;
    edges.push_back({at, n, sample_unit_gain(rng, mode)});
  }
  return GainGraph(n, edges);
}

GainGraph forced_type_cycle(Rng& rng, int n, CycleType t, GainMode mode) {
  if (is_even_type(t) != (n % 2 == 0)) {
    throw Error(ErrorCode::TypeParityError, "type " + to_string(t) + " needs the other parity");
  }
  const double sign = (n % 2 == 0 ? n / 2 : (n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  // Required cycle gain, as a fraction of a turn relative to `sign`.
  double offset = 0.0;
  switch (t) {
    case CycleType::A:
    case CycleType::C: offset = 0.0; break;
    case CycleType::D: offset = 0.5; break;
    case CycleType::E: offset = rng() % 2 ? 0.25 : 0.75; break;
    case CycleType::B: offset = static_cast<double>(uniform_int(rng, 1, 11)) / 12.0; break;
  }
  std::vector<UnitGain> gains = sample_gains(rng, static_cast<std::size_t>(n - 1), mode);
  UnitGain head;
  for (const UnitGain& w : gains) head = head * w;
  const UnitGain target = make_gain(offset) * make_gain(sign > 0 ? 0.0 : 0.5);
  gains.push_back(target * head.inverse());
  return build_cycle(n, gains);
}

GainGraph sharpness_witness_infinity(int p, int q) {
  return attach_pendants(build_infinity(p, 1, q), p + q - 1, 1);
}

GainGraph sharpness_witness_theta(int p, int l, int q) {
  const GainGraph core = build_theta(p, l, q);
  const BicyclicBase base = bicyclic_base(core);
  const auto& segs = base.segments;
  int odd = -1;
  int odd_count = 0;
  for (int i = 0; i < 3; ++i) {
    if ((static_cast<int>(segs[static_cast<std::size_t>(i)].size()) - 2) % 2 == 1) {
      ++odd_count;
      odd = i;
    }
  }
  if (odd_count != 1) return attach_pendants(core, segs[0].back(), 1);

  // Make the even cycle through the other two paths Type A: its gain must
  // be (-1)^(len/2), and with all gains 1 it is 1.
  int len = 0;
  const std::vector<Vertex>* other = nullptr;
  for (int i = 0; i < 3; ++i) {
    if (i == odd) continue;
    len += static_cast<int>(segs[static_cast<std::size_t>(i)].size()) - 1;
    other = &segs[static_cast<std::size_t>(i)];
  }
  GainGraph g = core;
  if ((len / 2) % 2 == 1) {
    std::vector<UnitGain> gains(static_cast<std::size_t>(core.size()));
    const Vertex a = std::min((*other)[0], (*other)[1]);
    const Vertex b = std::max((*other)[0], (*other)[1]);
    const auto edges = core.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].u == a && edges[i].v == b) gains[i] = make_gain(0.5);
    }
    g = with_gains(core, gains);
  }
  return attach_pendants(g, segs[static_cast<std::size_t>(odd)][1], 1);
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["claim"] = claim;
  j["trials"] = trials;
  j["seed"] = seed;
  j["passed"] = passed();
  j["forward_checks"] = forward_checks;
  j["backward_checks"] = backward_checks;
  j["fragile"] = fragile;
  j["failure_count"] = failure_count;
  j["failures"] = nlohmann::json::array();
  for (const Failure& f : failures) {
    j["failures"].push_back({{"input", f.input}, {"expected", f.expected}, {"observed", f.observed}});
  }
  return j.dump(2);
}

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& e : registry()) ids.push_back(e.id);
  return ids;
}

std::string canonical_claim(std::string_view id) {
  for (const auto& e : registry()) {
    if (e.id == id || (!e.alias.empty() && e.alias == id)) return e.id;
  }
  throw Error(ErrorCode::UnknownClaim, "unknown claim '" + std::string(id) + "'");
}

Report verify_claim(const TrialSpec& spec) {
  const std::string id = canonical_claim(spec.claim);
  if (id == "star-to-neighbor") return verify_transformation_lemma(TransformationLemma::StarToNeighbor, spec);
  if (id == "star-merge") return verify_transformation_lemma(TransformationLemma::StarMerge, spec);
  if (id == "path-contraction") return verify_transformation_lemma(TransformationLemma::PathContraction, spec);
  for (const auto& e : registry()) {
    if (e.id == id) return run(id, spec, e.check);
  }
  throw Error(ErrorCode::UnknownClaim, "unknown claim '" + spec.claim + "'");
}

Report verify_transformation_lemma(TransformationLemma which, const TrialSpec& spec) {
  static const char* names[] = {"star-to-neighbor", "star-merge", "path-contraction"};
  return run(names[static_cast<int>(which)], spec, transformation_check(which));
}

Report iff_fuzz_table(CatalogId id, const TrialSpec& spec) {
  const std::string claim = std::string(has_pendants(id) ? "table2." : "table1.") + to_string(id) + ".iff";
  return run(claim, spec, [id](Rng& rng, int trial, const TrialSpec&, Report& r) { table_trial(id, rng, trial, r); });
}

}  // namespace gainrank
