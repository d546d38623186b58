#include "gainrank/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <functional>

#include "gainrank/error.hpp"

namespace gainrank {
namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

CatalogEntry entry(CatalogId id, int order, EdgeList edges, BaseDescriptor base) {
  std::sort(edges.begin(), edges.end());
  return {id, order, std::move(edges), base.canonical()};
}

constexpr BaseDescriptor infinity(int p, int l, int q) { return {BaseKind::Infinity, p, l, q}; }
constexpr BaseDescriptor theta(int p, int l, int q) { return {BaseKind::Theta, p, l, q}; }

// G1 and G4..G11 follow the printed adjacency matrices. G2 and G3 follow the
// vertex names of their rank conditions. G12..G22 hang pendants or a P2 on
// the G5, G6 and G9 labelings; for G17 the base is relabeled so the quad
// carrying the condition is 1-2-3-4.
const std::array<CatalogEntry, kCatalogSize>& table() {
  static const std::array<CatalogEntry, kCatalogSize> entries = {
      entry(CatalogId::G1, 5, {{1, 2}, {1, 5}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}, infinity(3, 1, 3)),
      entry(CatalogId::G2, 6, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 6}},
            infinity(3, 1, 4)),
      entry(CatalogId::G3, 7, {{1, 2}, {2, 4}, {3, 4}, {1, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}},
            infinity(4, 1, 4)),
      entry(CatalogId::G4, 6, {{1, 2}, {1, 5}, {2, 5}, {3, 4}, {3, 6}, {4, 6}, {5, 6}},
            infinity(3, 2, 3)),
      entry(CatalogId::G5, 4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}, theta(0, 1, 1)),
      entry(CatalogId::G6, 5, {{1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {4, 5}}, theta(0, 1, 2)),
      entry(CatalogId::G7, 6, {{1, 2}, {1, 6}, {2, 3}, {2, 6}, {3, 4}, {4, 5}, {5, 6}},
            theta(0, 1, 3)),
      entry(CatalogId::G8, 6, {{1, 2}, {1, 6}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {5, 6}},
            theta(0, 2, 2)),
      entry(CatalogId::G9, 5, {{1, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {4, 5}}, theta(1, 1, 1)),
      entry(CatalogId::G10, 6, {{1, 2}, {1, 5}, {2, 3}, {2, 6}, {3, 4}, {4, 5}, {5, 6}},
            theta(1, 1, 2)),
      entry(CatalogId::G11, 7, {{1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {4, 5}, {5, 6}, {6, 7}},
            theta(1, 1, 3)),
      entry(CatalogId::G12, 5, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}}, theta(0, 1, 1)),
      entry(CatalogId::G13, 5, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {2, 5}}, theta(0, 1, 1)),
      entry(CatalogId::G14, 6, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {2, 5}, {3, 6}},
            theta(0, 1, 1)),
      entry(CatalogId::G15, 6, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}},
            theta(0, 1, 1)),
      entry(CatalogId::G16, 6, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {2, 5}, {5, 6}},
            theta(0, 1, 1)),
      entry(CatalogId::G17, 6, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {2, 5}, {5, 6}},
            theta(0, 1, 2)),
      entry(CatalogId::G18, 6, {{1, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {5, 6}},
            theta(1, 1, 1)),
      entry(CatalogId::G19, 6, {{1, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {2, 6}},
            theta(1, 1, 1)),
      entry(CatalogId::G20, 7, {{1, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {2, 6}, {4, 7}},
            theta(1, 1, 1)),
      entry(CatalogId::G21, 7, {{1, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {5, 6}, {6, 7}},
            theta(1, 1, 1)),
      entry(CatalogId::G22, 7, {{1, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {2, 6}, {6, 7}},
            theta(1, 1, 1)),
  };
  return entries;
}

bool same_edges(const GainGraph& g, const EdgeList& edges) {
  if (g.size() != static_cast<int>(edges.size())) return false;
  auto ge = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (ge[i].u != edges[i].first || ge[i].v != edges[i].second) return false;
  }
  return true;
}

}  // namespace

std::string to_string(CatalogId id) { return "G" + std::to_string(static_cast<int>(id)); }

CatalogId catalog_id_from_index(int index) {
  if (index < 1 || index > kCatalogSize) {
    throw Error(ErrorCode::UnknownCatalogId, "G" + std::to_string(index));
  }
  return static_cast<CatalogId>(index);
}

CatalogId parse_catalog_id(std::string_view text) {
  if (text.size() < 2 || std::toupper(static_cast<unsigned char>(text[0])) != 'G') {
    throw Error(ErrorCode::UnknownCatalogId, std::string(text));
  }
  int index = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), index);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::UnknownCatalogId, std::string(text));
  }
  return catalog_id_from_index(index);
}

std::vector<CatalogId> all_catalog_ids() {
  std::vector<CatalogId> ids;
  for (int i = 1; i <= kCatalogSize; ++i) ids.push_back(static_cast<CatalogId>(i));
  return ids;
}

bool has_pendants(CatalogId id) noexcept { return static_cast<int>(id) >= 12; }

const CatalogEntry& catalog_entry(CatalogId id) {
  const int index = static_cast<int>(id);
  if (index < 1 || index > kCatalogSize) {
    throw Error(ErrorCode::UnknownCatalogId, "G" + std::to_string(index));
  }
  return table()[static_cast<std::size_t>(index - 1)];
}

GainGraph catalog_graph(CatalogId id, std::span<const UnitGain> gains) {
  const auto& e = catalog_entry(id);
  if (gains.size() != e.edges.size()) {
    throw Error(ErrorCode::GainMismatch, to_string(id) + " has " + std::to_string(e.edges.size()) +
                                             " edges, got " + std::to_string(gains.size()) +
                                             " gains");
  }
  std::vector<GainEdge> edges;
  for (std::size_t i = 0; i < gains.size(); ++i) {
    edges.push_back({e.edges[i].first, e.edges[i].second, gains[i]});
  }
  return GainGraph(e.order, edges);
}

GainGraph catalog_graph(CatalogId id) {
  return catalog_graph(id, std::vector<UnitGain>(catalog_entry(id).edges.size()));
}

std::optional<CatalogId> exact_catalog_id(const GainGraph& g) {
  for (const auto& e : table()) {
    if (e.order == g.order() && same_edges(g, e.edges)) return e.id;
  }
  return std::nullopt;
}

std::optional<CatalogMatch> match_catalog(const GainGraph& g) {
  const int n = g.order();
  for (const auto& e : table()) {
    if (e.order != n || static_cast<int>(e.edges.size()) != g.size()) continue;
    const GainGraph target = catalog_graph(e.id);

    std::vector<Vertex> map(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> used(static_cast<std::size_t>(n) + 1, 0);
    // Assign input vertices 1..n in order; every edge to an already-mapped
    // vertex must land on a target edge. Edge counts agree, so an injective
    // edge-preserving map is an isomorphism.
    std::function<bool(Vertex)> extend = [&](Vertex v) -> bool {
      if (v > n) return true;
      for (Vertex t = 1; t <= n; ++t) {
        if (used[t] || target.degree(t) != g.degree(v)) continue;
        bool ok = true;
        for (Vertex w : g.neighbors(v)) {
          if (w < v && !target.adjacent(map[w], t)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        map[v] = t;
        used[t] = 1;
        if (extend(v + 1)) return true;
        used[t] = 0;
      }
      return false;
    };
    if (!extend(1)) continue;

    std::vector<GainEdge> edges;
    for (const auto& ge : g.edges()) edges.push_back({map[ge.u], map[ge.v], ge.gain});
    return CatalogMatch{e.id, std::vector<Vertex>(map.begin() + 1, map.end()),
                        GainGraph(n, edges)};
  }
  return std::nullopt;
}

}  // namespace gainrank
