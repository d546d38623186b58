#include "gainrank/theorems.hpp"

#include <algorithm>
#include <cmath>

#include "gainrank/error.hpp"

namespace gainrank {
namespace {

using CT = CycleType;
using Edge = std::pair<Vertex, Vertex>;

// Two-digit shorthand for an oriented edge: 52 is the edge 5 -> 2.
constexpr Edge e(int ab) { return {ab / 10, ab % 10}; }

GainTerm term(double sign, std::initializer_list<int> num, std::initializer_list<int> den = {}) {
  GainTerm t;
  t.sign = sign;
  for (int x : num) t.numerator.push_back(e(x));
  for (int x : den) t.denominator.push_back(e(x));
  return t;
}

CycleClause clause(std::vector<Vertex> cycle, std::vector<CT> allowed) {
  return {std::move(cycle), std::move(allowed)};
}

TableRow row(CatalogId id, int rank, std::vector<CycleClause> clauses) {
  return {id, rank, std::move(clauses), std::nullopt};
}

TableRow scalar_row(CatalogId id, ScalarCondition::Kind kind, std::vector<GainTerm> terms) {
  return {id, 4, {}, ScalarCondition{kind, std::move(terms)}};
}

const std::vector<TableRow>& table1() {
  using enum CatalogId;
  using K = ScalarCondition::Kind;
  static const std::vector<TableRow> rows = {
      row(G5, 2, {clause({1, 2, 3}, {CT::E}), clause({1, 2, 4, 3}, {CT::A})}),
      row(G9, 2, {clause({1, 2, 3, 4}, {CT::A}), clause({1, 2, 5, 4}, {CT::A})}),
      row(G5, 3, {clause({1, 2, 3}, {CT::C, CT::D}), clause({1, 2, 4, 3}, {CT::A})}),
      scalar_row(G1, K::RealPartSum, {term(-1, {15, 52}, {12}), term(-1, {35, 54}, {34})}),
      row(G2, 4, {clause({3, 4, 5, 6}, {CT::A}), clause({1, 2, 3}, {CT::E})}),
      row(G3, 4, {clause({1, 2, 4, 3}, {CT::A}), clause({4, 5, 6, 7}, {CT::A})}),
      row(G5, 4, {clause({1, 2, 3}, {CT::C, CT::D, CT::E}), clause({1, 2, 4, 3}, {CT::B})}),
      scalar_row(G6, K::RealPartSum, {term(-1, {15, 52}, {12}), term(1, {15, 32, 54}, {12, 34})}),
      row(G7, 4, {clause({1, 2, 6}, {CT::E}), clause({1, 2, 3, 4, 5, 6}, {CT::A})}),
      scalar_row(G8, K::ComplexSum,
                 {term(1, {16, 32, 54}), term(-1, {16, 34, 52}), term(1, {12, 34, 56})}),
      row(G9, 4, {clause({1, 2, 3, 4}, {CT::A}), clause({1, 2, 5, 4}, {CT::B})}),
      row(G9, 4, {clause({1, 2, 3, 4}, {CT::B}), clause({1, 2, 5, 4}, {CT::A, CT::B})}),
      row(G10, 4, {clause({1, 2, 3, 4, 5}, {CT::E}), clause({1, 2, 6, 5}, {CT::A})}),
      row(G11, 4, {clause({1, 2, 3, 4, 5, 6}, {CT::A}), clause({1, 2, 7, 6}, {CT::A})}),
  };
  return rows;
}

const std::vector<TableRow>& table2() {
  using enum CatalogId;
  const auto triangle_e = clause({1, 2, 3}, {CT::E});
  const auto quad_a = clause({1, 2, 4, 3}, {CT::A});
  const auto square_a = clause({1, 2, 3, 4}, {CT::A});
  const auto second_square_a = clause({1, 2, 5, 4}, {CT::A});
  static const std::vector<TableRow> rows = {
      row(G12, 4, {triangle_e}),
      row(G13, 4, {}),
      row(G14, 4, {}),
      row(G15, 4, {triangle_e, quad_a}),
      row(G16, 4, {triangle_e, quad_a}),
      row(G17, 4, {square_a}),
      row(G18, 4, {square_a}),
      row(G19, 4, {}),
      row(G20, 4, {}),
      row(G21, 4, {square_a, second_square_a}),
      row(G22, 4, {square_a, second_square_a}),
  };
  return rows;
}

std::string join_cycle(const std::vector<Vertex>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

std::string join_types(const std::vector<CT>& ts) {
  std::string s;
  for (CT t : ts) s += (s.empty() ? "" : "/") + to_string(t);
  return s;
}

std::string join_provenance(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "+" + b;
}

// Locates g in the catalog range [first, last], returning g relabeled into
// the catalog labeling.
std::optional<std::pair<CatalogId, GainGraph>> locate(const GainGraph& g, int first, int last) {
  const auto in_range = [&](CatalogId id) {
    const int i = static_cast<int>(id);
    return i >= first && i <= last;
  };
  if (auto id = exact_catalog_id(g); id && in_range(*id)) return std::pair{*id, g};
  if (auto m = match_catalog(g); m && in_range(m->id)) return std::pair{m->id, m->relabeled};
  return std::nullopt;
}

std::vector<Vertex> cycle_order(const GainGraph& c) {
  std::vector<Vertex> order{1};
  Vertex prev = 0;
  Vertex cur = 1;
  while (static_cast<int>(order.size()) < c.order()) {
    const auto nb = c.neighbors(cur);
    const Vertex next = nb[0] != prev ? nb[0] : nb[1];
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

RankPrediction predict_component(const GainGraph& c, double tol) {
  if (c.size() == 0) return RankPrediction::exact(0, "");
  const bool all_degree_two = [&] {
    for (Vertex v = 1; v <= c.order(); ++v) {
      if (c.degree(v) != 2) return false;
    }
    return true;
  }();
  if (c.size() == c.order() && all_degree_two) {
    const CycleType t = cycle_type(cycle_walk(c, cycle_order(c)), tol);
    return RankPrediction::exact(cycle_inertia_formula(t, c.order()).rank(), "cycle-inertia");
  }
  if (c.size() == c.order() + 1) {
    if (auto found = locate(c, 1, 11)) {
      const auto [id, relabeled] = *found;
      const std::string tag = "table1." + to_string(id);
      if (id == CatalogId::G4) return RankPrediction::bounds(5, 6, tag);
      const ConditionReport report = evaluate_rows(id, relabeled, tol);
      if (report.predicted_rank) return RankPrediction::exact(*report.predicted_rank, tag);
      return RankPrediction::at_least(5, tag);
    }
    return RankPrediction::at_least(5, "table1");
  }
  return RankPrediction::at_least(0, "");
}

}  // namespace

RankPrediction RankPrediction::exact(int r, std::string why) {
  return {Kind::Exact, r, r, std::move(why)};
}

RankPrediction RankPrediction::bounds(int lo, int hi, std::string why) {
  return {Kind::Bounds, lo, hi, std::move(why)};
}

RankPrediction RankPrediction::at_least(int lo, std::string why) {
  return {Kind::LowerBound, lo, std::nullopt, std::move(why)};
}

RankPrediction operator+(const RankPrediction& a, const RankPrediction& b) {
  RankPrediction r;
  r.lower = a.lower + b.lower;
  if (a.upper && b.upper) r.upper = *a.upper + *b.upper;
  if (a.kind == RankPrediction::Kind::Exact && b.kind == RankPrediction::Kind::Exact) {
    r.kind = RankPrediction::Kind::Exact;
  } else {
    r.kind = r.upper ? RankPrediction::Kind::Bounds : RankPrediction::Kind::LowerBound;
  }
  r.provenance = join_provenance(a.provenance, b.provenance);
  return r;
}

std::string to_string(const RankPrediction& p) {
  switch (p.kind) {
    case RankPrediction::Kind::Exact: return "exact " + std::to_string(p.lower);
    case RankPrediction::Kind::Bounds:
      return "between " + std::to_string(p.lower) + " and " + std::to_string(*p.upper);
    case RankPrediction::Kind::LowerBound: return "at least " + std::to_string(p.lower);
  }
  return "?";
}

InertiaTriple cycle_inertia_formula(CycleType t, int n) {
  if (n < 3) throw Error(ErrorCode::TooSmall, "cycle length " + std::to_string(n));
  if (is_even_type(t) != (n % 2 == 0)) {
    throw Error(ErrorCode::TypeParityError,
                "type " + to_string(t) + " does not apply to a cycle of length " + std::to_string(n));
  }
  switch (t) {
    case CT::A: return {(n - 2) / 2, (n - 2) / 2, 2};
    case CT::B: return {n / 2, n / 2, 0};
    case CT::C: return {(n + 1) / 2, (n - 1) / 2, 0};
    case CT::D: return {(n - 1) / 2, (n + 1) / 2, 0};
    case CT::E: return {(n - 1) / 2, (n - 1) / 2, 1};
  }
  return {};
}

RankPrediction rank_cycle_with_graph(CycleType t, int n, int rank_h, int rank_f) {
  switch (t) {
    case CT::A: return RankPrediction::exact(n - 2 + rank_h, "cycle-gluing");
    case CT::B: return RankPrediction::exact(n + rank_f, "cycle-gluing");
    case CT::E: return RankPrediction::exact(n - 1 + rank_h, "cycle-gluing");
    case CT::C:
    case CT::D: return RankPrediction::bounds(n - 1 + rank_f, n + rank_h, "cycle-gluing");
  }
  return {};
}

RankPrediction infinity_rank_lower_bound(int p, int q) {
  const bool po = p % 2 == 1;
  const bool qo = q % 2 == 1;
  const int b = po && qo ? p + q : !po && !qo ? p + q - 2 : p + q - 1;
  return RankPrediction::at_least(b, "infinity-bound");
}

RankPrediction theta_rank_lower_bound(int p, int l, int q, bool odd_case_type_a) {
  BaseDescriptor{BaseKind::Theta, p, l, q}.validate();
  if (p == 0 || l == 0 || q == 0) {
    const int s = p + l + q;
    return RankPrediction::at_least(s % 2 == 0 ? 2 + s : 1 + s, "theta-zero-bound");
  }
  const int s = p + l + q;
  const int odd = (p % 2) + (l % 2) + (q % 2);
  if (s % 2 == 0) return RankPrediction::at_least(s + 2, "theta-bound");
  if (odd == 3 || odd_case_type_a) return RankPrediction::at_least(s + 1, "theta-bound");
  return RankPrediction::at_least(s + 3, "theta-bound");
}

std::complex<double> GainTerm::evaluate(const GainGraph& g) const {
  UnitGain prod;
  for (auto [a, b] : numerator) prod = prod * g.gain(a, b);
  for (auto [a, b] : denominator) prod = prod * g.gain(a, b).inverse();
  return sign * prod.value();
}

double ScalarCondition::residual(const GainGraph& g) const {
  std::complex<double> sum = 0.0;
  for (const GainTerm& t : terms) sum += t.evaluate(g);
  return kind == Kind::RealPartSum ? std::abs(sum.real()) : std::abs(sum);
}

std::span<const TableRow> table1_rows() { return table1(); }
std::span<const TableRow> table2_rows() { return table2(); }

std::vector<TableRow> rows_for(CatalogId id) {
  std::vector<TableRow> out;
  for (const auto* rows : {&table1(), &table2()}) {
    for (const TableRow& r : *rows) {
      if (r.id == id) out.push_back(r);
    }
  }
  return out;
}

ConditionReport evaluate_rows(CatalogId id, const GainGraph& g, double tol) {
  ConditionReport report;
  report.catalog = id;
  const auto rows = rows_for(id);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const TableRow& r = rows[i];
    bool row_holds = true;
    for (const CycleClause& c : r.clauses) {
      ClauseReport cr;
      cr.row = static_cast<int>(i);
      cr.description = "cycle " + join_cycle(c.cycle) + " of type " + join_types(c.allowed);
      cr.cycle = classify_cycle(cycle_walk(g, c.cycle), tol);
      cr.holds = std::find(c.allowed.begin(), c.allowed.end(), cr.cycle->type) != c.allowed.end();
      report.fragile = report.fragile || cr.cycle->fragile;
      row_holds = row_holds && cr.holds;
      report.clauses.push_back(std::move(cr));
    }
    if (r.scalar) {
      ClauseReport cr;
      cr.row = static_cast<int>(i);
      cr.description = r.scalar->kind == ScalarCondition::Kind::RealPartSum
                           ? "sum of real parts of gain terms vanishes"
                           : "sum of gain terms vanishes";
      cr.residual = r.scalar->residual(g);
      cr.holds = *cr.residual <= tol;
      report.fragile = report.fragile || is_fragile(*cr.residual, tol);
      row_holds = row_holds && cr.holds;
      report.clauses.push_back(std::move(cr));
    }
    if (row_holds && !report.satisfied) {
      report.satisfied = true;
      report.predicted_rank = r.rank;
    }
  }
  return report;
}

ConditionReport evaluate_table1(const GainGraph& g, double tol) {
  auto found = locate(g, 1, 11);
  if (!found) throw Error(ErrorCode::NotInCatalog, "graph is not one of G1..G11");
  return evaluate_rows(found->first, found->second, tol);
}

ConditionReport evaluate_table2(const GainGraph& g, double tol) {
  if (!pendant_twins(g).empty()) throw Error(ErrorCode::HasTwins, "graph has pendant twins");
  auto found = locate(g, 12, 22);
  if (!found) throw Error(ErrorCode::NotInCatalog, "graph is not one of G12..G22");
  return evaluate_rows(found->first, found->second, tol);
}

std::optional<CycleWalk> theta_odd_case_cycle(const GainGraph& g, const BicyclicBase& base) {
  const auto& d = base.descriptor;
  if (d.kind != BaseKind::Theta) return std::nullopt;
  const int lens[3] = {d.p, d.l, d.q};
  int odd_index = -1;
  int odd_count = 0;
  for (int i = 0; i < 3; ++i) {
    if (lens[i] % 2 == 1) {
      ++odd_count;
      odd_index = i;
    }
  }
  if (odd_count != 1) return std::nullopt;
  std::vector<const std::vector<Vertex>*> others;
  for (int i = 0; i < 3; ++i) {
    if (i != odd_index) others.push_back(&base.segments[static_cast<std::size_t>(i)]);
  }
  std::vector<Vertex> cycle = *others[0];
  cycle.insert(cycle.end(), others[1]->rbegin() + 1, others[1]->rend() - 1);
  return cycle_walk(g, canonical_cycle_order(cycle));
}

RankPrediction predict_rank(const GainGraph& g, double tol) {
  const BicyclicBase base = bicyclic_base(g);
  const ReductionTrace trace = reduce(g);

  RankPrediction total = RankPrediction::exact(trace.rank_offset, trace.rank_offset ? "pendant-pair" : "");
  for (const auto& comp : trace.residual.graph.components()) {
    total = total + predict_component(induced_subgraph(trace.residual.graph, comp).graph, tol);
  }

  if (!find_pendant(g)) return total;
  const auto& d = base.descriptor;
  RankPrediction bound;
  if (d.kind == BaseKind::Infinity) {
    bound = infinity_rank_lower_bound(d.p, d.q);
  } else {
    const auto odd_cycle = theta_odd_case_cycle(g, base);
    bound = theta_rank_lower_bound(d.p, d.l, d.q, odd_cycle && cycle_type(*odd_cycle, tol) == CT::A);
  }
  if (bound.lower > total.lower) {
    total.lower = bound.lower;
    total.provenance = join_provenance(total.provenance, bound.provenance);
    if (total.upper && *total.upper < total.lower) total.upper = total.lower;
  }
  return total;
}

}  // namespace gainrank
