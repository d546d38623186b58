#pragma once

#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gainrank/builders.hpp"
#include "gainrank/graph.hpp"
#include "gainrank/hermitian.hpp"

namespace gainrank {

enum class CycleType { A, B, C, D, E };

std::string to_string(CycleType t);
/// "A".."E"; Error(ParseError) otherwise.
CycleType parse_cycle_type(std::string_view text);
bool is_even_type(CycleType t) noexcept;

/// A closed walk v_1 .. v_n with w_i = gain(v_i, v_{i+1}) and
/// w_n = gain(v_n, v_1).
struct CycleWalk {
  std::vector<Vertex> vertices;
  std::vector<UnitGain> gains;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
  /// w_1 * ... * w_n.
  std::complex<double> gain_product() const;
};

/// Error(NotACycle) unless the vertices are distinct, at least three, and
/// consecutive (cyclically) vertices are adjacent.
CycleWalk cycle_walk(const GainGraph& g, std::span<const Vertex> vertices);

/// Rotation/reflection representative: lowest label first, then its
/// lower-labeled cycle neighbor.
std::vector<Vertex> canonical_cycle_order(std::span<const Vertex> vertices);

struct CycleClassification {
  CycleType type = CycleType::A;
  /// Even cycles: |w_1...w_n - (-1)^(n/2)|. Odd cycles:
  /// Re((-1)^((n-1)/2) w_1...w_n).
  double residual = 0.0;
  bool fragile = false;
};

/// A decision scalar x is fragile when tol/10 < |x| <= 10 tol: close enough
/// to the boundary that the verdict depends on the tolerance, but not an
/// exact tie.
bool is_fragile(double x, double tol) noexcept;

CycleClassification classify_cycle(const CycleWalk& c, double tol = kDefaultTol);
CycleType cycle_type(const CycleWalk& c, double tol = kDefaultTol);

/// The older classification that conjugates the closing gain w_n. It does
/// not match the spectrum of the cycle and is kept only so tests can show
/// the disagreement.
CycleType cycle_type_conjugated_closing(const CycleWalk& c, double tol = kDefaultTol);

/// Lowest-labeled degree-1 vertex and its neighbor.
std::optional<std::pair<Vertex, Vertex>> find_pendant(const GainGraph& g);

/// Removes pendant v and its neighbor u. Error(NotAPendant) unless v has
/// degree 1 with neighbor u.
Relabeled delete_pendant_pair(const GainGraph& g, Vertex v, Vertex u);

/// All pendant pairs (v, w), v < w, sharing their neighbor; sorted.
std::vector<std::pair<Vertex, Vertex>> pendant_twins(const GainGraph& g);

struct ReductionStep {
  enum class Kind { PendantPair, Twin };
  Kind kind = Kind::PendantPair;
  /// Deleted pendant (or deleted twin), as labeled in the input graph.
  Vertex v = 0;
  /// Its neighbor for PendantPair; 0 for Twin.
  Vertex u = 0;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Relabeled residual;
  /// Twice the number of pendant-pair deletions.
  int rank_offset = 0;
};

/// Deletes the higher vertex of the first twin pair while any exists, else
/// the first pendant pair, until neither applies.
ReductionTrace reduce(const GainGraph& g);
/// Same deletions in a random order.
ReductionTrace reduce_random(const GainGraph& g, std::mt19937_64& rng);

struct BicyclicBase {
  BaseDescriptor descriptor;  // canonical
  /// The pendant-free core, relabeled 1..k, with labels of g.
  Relabeled core;
  /// Infinity: {C_p, connecting path, C_q}; cycles start and end at their
  /// junction vertex, the path runs from C_p to C_q.
  /// Theta: the three branch paths, each from the same branch vertex to the
  /// other, in the order (p, l, q) of the descriptor.
  /// All in labels of g.
  std::vector<std::vector<Vertex>> segments;
};

/// Error(NotConnected) or Error(NotBicyclic) when g is not a connected
/// graph with m = n + 1.
BicyclicBase bicyclic_base(const GainGraph& g);

/// Infinity: the two cycles. Theta: the three cycles formed by pairs of
/// branch paths. Canonically oriented, sorted lexicographically.
std::vector<CycleWalk> fundamental_cycles(const GainGraph& g, const BicyclicBase& base);
std::vector<CycleWalk> fundamental_cycles(const GainGraph& g);

}  // namespace gainrank
