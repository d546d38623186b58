#include "gainrank/builders.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "gainrank/error.hpp"

namespace gainrank {
namespace {

void expect_gain_count(std::span<const UnitGain> gains, std::size_t expected, const char* what) {
  if (gains.size() != expected) {
    throw Error(ErrorCode::GainMismatch, std::string(what) + " needs " + std::to_string(expected) +
                                             " gains, got " + std::to_string(gains.size()));
  }
}

std::vector<UnitGain> ones(std::size_t n) { return std::vector<UnitGain>(n); }

// Appends the edges of the walk path[0] -> path[1] -> ... consuming gains.
void add_walk(std::vector<GainEdge>& edges, std::span<const Vertex> path,
              std::span<const UnitGain> gains, std::size_t& cursor) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    edges.push_back({path[i], path[i + 1], gains[cursor++]});
  }
}

}  // namespace

bool BaseDescriptor::valid() const noexcept {
  if (kind == BaseKind::Infinity) return p >= 3 && q >= 3 && l >= 1;
  const int zeros = (p == 0) + (l == 0) + (q == 0);
  return p >= 0 && l >= 0 && q >= 0 && zeros <= 1;
}

void BaseDescriptor::validate() const {
  if (!valid()) throw Error(ErrorCode::InvalidBase, "invalid base " + to_string(*this));
}

int BaseDescriptor::order() const noexcept {
  return kind == BaseKind::Infinity ? p + q + l - 2 : p + l + q + 2;
}

BaseDescriptor BaseDescriptor::canonical() const noexcept {
  BaseDescriptor c = *this;
  if (kind == BaseKind::Infinity) {
    if (c.p > c.q) std::swap(c.p, c.q);
  } else {
    int v[3] = {p, l, q};
    std::sort(v, v + 3);
    c.p = v[0];
    c.l = v[1];
    c.q = v[2];
  }
  return c;
}

std::string to_string(const BaseDescriptor& base) {
  return std::string(base.kind == BaseKind::Infinity ? "infinity" : "theta") + "(" +
         std::to_string(base.p) + "," + std::to_string(base.l) + "," + std::to_string(base.q) +
         ")";
}

GainGraph build_cycle(int n, std::span<const UnitGain> gains) {
  if (n < 3) throw Error(ErrorCode::TooSmall, "a cycle needs at least 3 vertices");
  expect_gain_count(gains, static_cast<std::size_t>(n), "cycle");
  std::vector<GainEdge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({i, i == n ? 1 : i + 1, gains[i - 1]});
  return GainGraph(n, edges);
}

GainGraph build_cycle(int n) { return build_cycle(n, ones(std::max(n, 0))); }

GainGraph build_path(int n, std::span<const UnitGain> gains) {
  if (n < 1) throw Error(ErrorCode::TooSmall, "a path needs at least one vertex");
  expect_gain_count(gains, static_cast<std::size_t>(n - 1), "path");
  std::vector<GainEdge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, gains[i - 1]});
  return GainGraph(n, edges);
}

GainGraph build_path(int n) { return build_path(n, ones(n > 0 ? n - 1 : 0)); }

GainGraph build_infinity(int p, int l, int q, std::span<const UnitGain> gains) {
  const BaseDescriptor d{BaseKind::Infinity, p, l, q};
  d.validate();
  expect_gain_count(gains, static_cast<std::size_t>(p + q + l - 1), "infinity base");

  const Vertex first_path = p + q - 1;  // v_1
  std::vector<Vertex> cycle_p{first_path};
  for (Vertex x = 1; x <= p - 1; ++x) cycle_p.push_back(x);
  cycle_p.push_back(first_path);
  std::vector<Vertex> path;
  for (int i = 0; i < l; ++i) path.push_back(first_path + i);
  const Vertex last_path = path.back();
  std::vector<Vertex> cycle_q{last_path};
  for (Vertex x = p; x <= p + q - 2; ++x) cycle_q.push_back(x);
  cycle_q.push_back(last_path);

  std::vector<GainEdge> edges;
  std::size_t cursor = 0;
  add_walk(edges, cycle_p, gains, cursor);
  add_walk(edges, path, gains, cursor);
  add_walk(edges, cycle_q, gains, cursor);
  return GainGraph(d.order(), edges);
}

GainGraph build_infinity(int p, int l, int q) {
  return build_infinity(p, l, q, ones(static_cast<std::size_t>(std::max(p + q + l - 1, 0))));
}

namespace {

struct ThetaLayout {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> p_path, l_path, q_path;  // each from u to v
};

ThetaLayout theta_layout(int p, int l, int q) {
  ThetaLayout t;
  if (l >= 1) {
    const int outer = l + q + 2;
    t.u = 2;
    t.v = q + 3;
    t.q_path.push_back(t.u);
    for (Vertex x = 3; x <= q + 2; ++x) t.q_path.push_back(x);
    t.q_path.push_back(t.v);
    t.l_path = {t.u, 1};
    for (Vertex x = outer; x >= q + 4; --x) t.l_path.push_back(x);
    t.l_path.push_back(t.v);
    t.p_path.push_back(t.u);
    for (Vertex x = outer + 1; x <= outer + p; ++x) t.p_path.push_back(x);
    t.p_path.push_back(t.v);
  } else {
    t.u = 1;
    t.v = q + 2;
    t.q_path.push_back(t.u);
    for (Vertex x = 2; x <= q + 1; ++x) t.q_path.push_back(x);
    t.q_path.push_back(t.v);
    t.l_path = {t.u, t.v};
    t.p_path.push_back(t.u);
    for (Vertex x = q + 3; x <= q + 2 + p; ++x) t.p_path.push_back(x);
    t.p_path.push_back(t.v);
  }
  return t;
}

}  // namespace

GainGraph build_theta(int p, int l, int q, std::span<const UnitGain> gains) {
  const BaseDescriptor d{BaseKind::Theta, p, l, q};
  d.validate();
  expect_gain_count(gains, static_cast<std::size_t>(p + l + q + 3), "theta base");
  const auto t = theta_layout(p, l, q);
  std::vector<GainEdge> edges;
  std::size_t cursor = 0;
  add_walk(edges, t.p_path, gains, cursor);
  add_walk(edges, t.l_path, gains, cursor);
  add_walk(edges, t.q_path, gains, cursor);
  return GainGraph(d.order(), edges);
}

GainGraph build_theta(int p, int l, int q) {
  return build_theta(p, l, q, ones(static_cast<std::size_t>(std::max(p + l + q + 3, 0))));
}

std::pair<Vertex, Vertex> theta_branch_vertices(int p, int l, int q) {
  BaseDescriptor{BaseKind::Theta, p, l, q}.validate();
  const auto t = theta_layout(p, l, q);
  return {t.u, t.v};
}

GainGraph attach_pendants(const GainGraph& g, Vertex at, int k, std::span<const UnitGain> gains) {
  if (!g.contains(at)) {
    throw Error(ErrorCode::VertexOutOfRange, "attachment vertex " + std::to_string(at));
  }
  if (k < 1) throw Error(ErrorCode::TooSmall, "attach at least one pendant");
  expect_gain_count(gains, static_cast<std::size_t>(k), "pendants");
  std::vector<GainEdge> edges(g.edges().begin(), g.edges().end());
  for (int i = 0; i < k; ++i) edges.push_back({at, g.order() + 1 + i, gains[i]});
  return GainGraph(g.order() + k, edges);
}

GainGraph attach_pendants(const GainGraph& g, Vertex at, int k) {
  return attach_pendants(g, at, k, ones(static_cast<std::size_t>(std::max(k, 0))));
}

GainGraph disjoint_union(const GainGraph& a, const GainGraph& b) {
  std::vector<GainEdge> edges(a.edges().begin(), a.edges().end());
  for (const auto& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order(), e.gain});
  return GainGraph(a.order() + b.order(), edges);
}

Vertex glued_label(const GainGraph& a, Vertex at_a, Vertex at_b, Vertex w) {
  if (w == at_b) return at_a;
  return a.order() + (w < at_b ? w : w - 1);
}

GainGraph glue(const GainGraph& a, Vertex at_a, const GainGraph& b, Vertex at_b) {
  if (!a.contains(at_a) || !b.contains(at_b)) {
    throw Error(ErrorCode::VertexOutOfRange, "glue vertex out of range");
  }
  std::vector<GainEdge> edges(a.edges().begin(), a.edges().end());
  for (const auto& e : b.edges()) {
    edges.push_back({glued_label(a, at_a, at_b, e.u), glued_label(a, at_a, at_b, e.v), e.gain});
  }
  return GainGraph(a.order() + b.order() - 1, edges);
}

GainGraph add_edge(const GainGraph& g, Vertex u, Vertex v, UnitGain gain) {
  std::vector<GainEdge> edges(g.edges().begin(), g.edges().end());
  edges.push_back({u, v, gain});
  return GainGraph(g.order(), edges);
}

GainGraph gauge(const GainGraph& g, Vertex v, UnitGain z) {
  if (!g.contains(v)) throw Error(ErrorCode::VertexOutOfRange, "gauge vertex " + std::to_string(v));
  std::vector<GainEdge> edges;
  for (auto e : g.edges()) {
    if (e.u == v) e.gain = z * e.gain;
    if (e.v == v) e.gain = e.gain * z.conj();
    edges.push_back(e);
  }
  return GainGraph(g.order(), edges);
}

GainGraph with_gains(const GainGraph& g, std::span<const UnitGain> gains) {
  expect_gain_count(gains, static_cast<std::size_t>(g.size()), "graph");
  std::vector<GainEdge> edges(g.edges().begin(), g.edges().end());
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].gain = gains[i];
  return GainGraph(g.order(), edges);
}

}  // namespace gainrank
