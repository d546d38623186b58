#include "gainrank/graph.hpp"

#include <algorithm>
#include <string>

#include "gainrank/error.hpp"

namespace gainrank {

GainGraph::GainGraph(int order) : GainGraph(order, {}) {}

GainGraph::GainGraph(int order, std::span<const GainEdge> edges) : order_(order) {
  if (order < 0) throw Error(ErrorCode::VertexOutOfRange, "negative vertex count");
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) {
      throw Error(ErrorCode::InvalidEdge, "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u < e.v) {
      edges_.push_back(e);
    } else {
      edges_.push_back({e.v, e.u, e.gain.conj()});
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const GainEdge& a, const GainEdge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw Error(ErrorCode::InvalidEdge, "duplicate edge {" + std::to_string(edges_[i].u) + "," +
                                              std::to_string(edges_[i].v) + "}");
    }
  }
  adjacency_.assign(static_cast<std::size_t>(order_) + 1, {});
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

void GainGraph::check_vertex(Vertex v) const {
  if (!contains(v)) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(order_));
  }
}

std::optional<UnitGain> GainGraph::find_gain(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v) || u == v) return std::nullopt;
  const Vertex a = std::min(u, v);
  const Vertex b = std::max(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(a, b),
                             [](const GainEdge& e, const std::pair<Vertex, Vertex>& key) {
                               return std::pair(e.u, e.v) < key;
                             });
  if (it == edges_.end() || it->u != a || it->v != b) return std::nullopt;
  return u < v ? it->gain : it->gain.conj();
}

bool GainGraph::adjacent(Vertex u, Vertex v) const { return find_gain(u, v).has_value(); }

UnitGain GainGraph::gain(Vertex u, Vertex v) const {
  if (auto g = find_gain(u, v)) return *g;
  throw Error(ErrorCode::InvalidEdge,
              "no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
}

std::span<const Vertex> GainGraph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::vector<std::vector<Vertex>> GainGraph::components() const {
  std::vector<int> seen(static_cast<std::size_t>(order_) + 1, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 1; s <= order_; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : adjacency_[comp[i]]) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool GainGraph::is_connected() const { return order_ > 0 && components().size() == 1; }

GraphFamily GainGraph::family() const {
  const int m = size();
  if (!is_connected()) {
    return m == order_ - static_cast<int>(components().size()) ? GraphFamily::Forest
                                                               : GraphFamily::Other;
  }
  if (m == order_ - 1) return GraphFamily::Tree;
  if (m == order_) return GraphFamily::Unicyclic;
  if (m == order_ + 1) return GraphFamily::Bicyclic;
  return GraphFamily::Other;
}

bool operator==(const GainGraph& a, const GainGraph& b) {
  if (a.order_ != b.order_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& x = a.edges_[i];
    const auto& y = b.edges_[i];
    if (x.u != y.u || x.v != y.v || !(x.gain == y.gain)) return false;
  }
  return true;
}

Relabeled induced_subgraph(const GainGraph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<Vertex> new_label(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (!g.contains(kept[i])) {
      throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(kept[i]));
    }
    new_label[kept[i]] = static_cast<Vertex>(i) + 1;
  }
  std::vector<GainEdge> edges;
  for (const auto& e : g.edges()) {
    if (new_label[e.u] && new_label[e.v]) edges.push_back({new_label[e.u], new_label[e.v], e.gain});
  }
  return {GainGraph(static_cast<int>(kept.size()), edges), kept};
}

Relabeled remove_vertices(const GainGraph& g, std::span<const Vertex> drop) {
  std::vector<int> dropped(static_cast<std::size_t>(g.order()) + 1, 0);
  for (Vertex v : drop) {
    if (!g.contains(v)) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    dropped[v] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (!dropped[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

}  // namespace gainrank
