#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gainrank/gain.hpp"

namespace gainrank {

/// Vertices are labeled 1..n.
using Vertex = int;

/// An edge together with the gain of its u -> v orientation. The opposite
/// orientation carries the conjugate.
struct GainEdge {
  Vertex u = 0;
  Vertex v = 0;
  UnitGain gain;
};

enum class GraphFamily { Forest, Tree, Unicyclic, Bicyclic, Other };

/// A complex unit gain graph on a simple underlying graph.
///
/// Immutable after construction. Edges are stored once, oriented from the
/// smaller to the larger label, sorted lexicographically; gain(v, u) is
/// always the conjugate of gain(u, v).
class GainGraph {
 public:
  GainGraph() = default;
  explicit GainGraph(int order);

  /// Validates labels, loops and duplicate pairs (Error InvalidEdge /
  /// VertexOutOfRange).
  GainGraph(int order, std::span<const GainEdge> edges);

  int order() const noexcept { return order_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const GainEdge> edges() const noexcept { return edges_; }

  bool contains(Vertex v) const noexcept { return v >= 1 && v <= order_; }
  bool adjacent(Vertex u, Vertex v) const;
  /// Gain of the oriented edge u -> v; Error(InvalidEdge) if not an edge.
  UnitGain gain(Vertex u, Vertex v) const;
  std::optional<UnitGain> find_gain(Vertex u, Vertex v) const;

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool is_connected() const;
  /// Vertex sets of the connected components, each sorted, ordered by their
  /// smallest vertex.
  std::vector<std::vector<Vertex>> components() const;
  GraphFamily family() const;

  friend bool operator==(const GainGraph& a, const GainGraph& b);

 private:
  void check_vertex(Vertex v) const;

  int order_ = 0;
  std::vector<GainEdge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// A graph derived from another by deleting vertices. original[i] is the
/// label, in the source graph, of vertex i + 1.
struct Relabeled {
  GainGraph graph;
  std::vector<Vertex> original;
};

/// Subgraph induced on `keep`; surviving vertices are relabeled 1..k in
/// increasing order of their old labels.
Relabeled induced_subgraph(const GainGraph& g, std::span<const Vertex> keep);

/// Deletes `drop` and every incident edge, compacting the labels.
Relabeled remove_vertices(const GainGraph& g, std::span<const Vertex> drop);

}  // namespace gainrank
