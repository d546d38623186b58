#pragma once

#include <span>
#include <string>

#include "gainrank/graph.hpp"

namespace gainrank {

enum class BaseKind { Infinity, Theta };

/// Shape of the pendant-free core of a bicyclic graph.
///
/// Infinity(p, l, q): cycles C_p and C_q joined by a path on l vertices
/// (l = 1 means the cycles share a vertex). Theta(p, l, q): two branch
/// vertices joined by three internally disjoint paths with p, l and q
/// internal vertices.
struct BaseDescriptor {
  BaseKind kind = BaseKind::Infinity;
  int p = 0;
  int l = 0;
  int q = 0;

  bool valid() const noexcept;
  /// Throws Error(InvalidBase) unless valid().
  void validate() const;
  int order() const noexcept;
  int edge_count() const noexcept { return order() + 1; }
  /// Infinity: p <= q. Theta: p <= l <= q.
  BaseDescriptor canonical() const noexcept;

  friend bool operator==(const BaseDescriptor&, const BaseDescriptor&) = default;
};

std::string to_string(const BaseDescriptor& base);

/// Cycle 1-2-...-n-1. gains[i] sits on (i+1) -> (i+2), the last on n -> 1.
GainGraph build_cycle(int n, std::span<const UnitGain> gains);
GainGraph build_cycle(int n);

/// Path 1-2-...-n with gains[i] on (i+1) -> (i+2).
GainGraph build_path(int n, std::span<const UnitGain> gains);
GainGraph build_path(int n);

/// Infinity(p, l, q). Labels: the p-1 non-junction vertices of C_p are
/// 1..p-1, those of C_q are p..p+q-2, then the connecting path v_1..v_l
/// (v_1 on C_p, v_l on C_q). Gain order: C_p walked v_1, 1, 2, ..., p-1,
/// back to v_1; then the path v_1 -> ... -> v_l; then C_q walked v_l, p,
/// ..., p+q-2, back to v_l.
GainGraph build_infinity(int p, int l, int q, std::span<const UnitGain> gains);
GainGraph build_infinity(int p, int l, int q);

/// Theta(p, l, q). Labels: branch vertex u = 2; the q-path interior is
/// 3..q+2 and v = q+3; the l-path interior continues q+4..N and ends at 1
/// (adjacent to u), N = l+q+2; the p-path interior is N+1..N+p. When l = 0
/// the outer cycle is the q-path plus the edge uv: u = 1, q-interior
/// 2..q+1, v = q+2, p-interior follows. Gain order:
/// the p-path from u to v, then the l-path from u to v, then the q-path
/// from u to v.
GainGraph build_theta(int p, int l, int q, std::span<const UnitGain> gains);
GainGraph build_theta(int p, int l, int q);

/// Branch vertices (u, v) of build_theta(p, l, q).
std::pair<Vertex, Vertex> theta_branch_vertices(int p, int l, int q);

/// Adds k new vertices n+1..n+k, each joined to `at` with gains[i] on
/// at -> n+1+i.
GainGraph attach_pendants(const GainGraph& g, Vertex at, int k, std::span<const UnitGain> gains);
GainGraph attach_pendants(const GainGraph& g, Vertex at, int k);

/// Vertices of b are shifted by a.order().
GainGraph disjoint_union(const GainGraph& a, const GainGraph& b);

/// Identifies vertex `at_a` of a with vertex `at_b` of b. The merged vertex
/// keeps label at_a; the other vertices of b follow a's labels in order.
GainGraph glue(const GainGraph& a, Vertex at_a, const GainGraph& b, Vertex at_b);

/// Label that vertex w of b receives in glue(a, at_a, b, at_b).
Vertex glued_label(const GainGraph& a, Vertex at_a, Vertex at_b, Vertex w);

/// Adds one edge u -> v with the given gain.
GainGraph add_edge(const GainGraph& g, Vertex u, Vertex v, UnitGain gain = {});

/// Multiplies every gain on edges leaving v by z (a diagonal unitary
/// congruence of the adjacency matrix).
GainGraph gauge(const GainGraph& g, Vertex v, UnitGain z);

/// Replaces all gains, in the canonical (sorted) edge order.
GainGraph with_gains(const GainGraph& g, std::span<const UnitGain> gains);

}  // namespace gainrank
