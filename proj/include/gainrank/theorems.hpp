#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gainrank/catalog.hpp"
#include "gainrank/classify.hpp"
#include "gainrank/hermitian.hpp"

namespace gainrank {

struct RankPrediction {
  enum class Kind { Exact, Bounds, LowerBound };
  Kind kind = Kind::LowerBound;
  int lower = 0;
  std::optional<int> upper;
  std::string provenance;

  static RankPrediction exact(int r, std::string why);
  static RankPrediction bounds(int lo, int hi, std::string why);
  static RankPrediction at_least(int lo, std::string why);

  bool admits(int r) const noexcept { return r >= lower && (!upper || r <= *upper); }
  /// Sum of predictions for disjoint components.
  friend RankPrediction operator+(const RankPrediction& a, const RankPrediction& b);
};

std::string to_string(const RankPrediction& p);

/// Inertia of a gain cycle of the given type and length.
/// Error(TypeParityError) when the parity of n does not fit the type.
InertiaTriple cycle_inertia_formula(CycleType t, int n);

/// Rank of a cycle of type t and length n glued at one vertex to a graph H,
/// given r(H) and r(F) with F = H minus the glued vertex.
RankPrediction rank_cycle_with_graph(CycleType t, int n, int rank_h, int rank_f);

/// Lower bound for a graph with pendants whose base is Infinity(p, l, q).
RankPrediction infinity_rank_lower_bound(int p, int q);

/// Lower bound for a graph with pendants whose base is Theta(p, l, q).
/// `odd_case_type_a` matters only when exactly one path length is odd: it
/// says whether the even cycle avoiding that path is of Type A.
RankPrediction theta_rank_lower_bound(int p, int l, int q, bool odd_case_type_a);

/// Signed product of gains: sign * prod(numerator) / prod(denominator),
/// each oriented edge (a, b) contributing gain(a, b).
struct GainTerm {
  double sign = 1.0;
  std::vector<std::pair<Vertex, Vertex>> numerator;
  std::vector<std::pair<Vertex, Vertex>> denominator;

  std::complex<double> evaluate(const GainGraph& g) const;
};

struct ScalarCondition {
  /// RealPartSum: sum of Re(term) vanishes. ComplexSum: the sum of terms
  /// vanishes.
  enum class Kind { RealPartSum, ComplexSum };
  Kind kind = Kind::RealPartSum;
  std::vector<GainTerm> terms;

  /// |sum| for the condition's kind.
  double residual(const GainGraph& g) const;
};

struct CycleClause {
  std::vector<Vertex> cycle;
  std::vector<CycleType> allowed;
};

/// One row of a gain-condition table: the graph has the stated rank when
/// every clause holds.
struct TableRow {
  CatalogId id;
  int rank = 0;
  std::vector<CycleClause> clauses;
  std::optional<ScalarCondition> scalar;
};

/// Rows for pendant-free catalog graphs (ranks 2, 3, 4; none for G4).
std::span<const TableRow> table1_rows();
/// Rows for catalog graphs with pendants (rank 4).
std::span<const TableRow> table2_rows();
std::vector<TableRow> rows_for(CatalogId id);

struct ClauseReport {
  int row = 0;  // index into rows_for(catalog)
  std::string description;
  std::optional<CycleClassification> cycle;
  std::optional<double> residual;
  bool holds = false;
};

struct ConditionReport {
  CatalogId catalog = CatalogId::G1;
  bool satisfied = false;
  std::vector<ClauseReport> clauses;
  std::optional<int> predicted_rank;
  bool fragile = false;
};

/// Evaluates every row of `id` on g, which must carry the catalog labeling.
ConditionReport evaluate_rows(CatalogId id, const GainGraph& g, double tol = kDefaultTol);

/// g must be (isomorphic to) one of G1..G11; Error(NotInCatalog) otherwise.
ConditionReport evaluate_table1(const GainGraph& g, double tol = kDefaultTol);

/// g must have no pendant twins (Error(HasTwins)) and be (isomorphic to)
/// one of G12..G22 (Error(NotInCatalog)).
ConditionReport evaluate_table2(const GainGraph& g, double tol = kDefaultTol);

/// The Theta path of odd length, when exactly one of p, l, q is odd, and the
/// even cycle made of the other two paths.
std::optional<CycleWalk> theta_odd_case_cycle(const GainGraph& g, const BicyclicBase& base);

/// Closed-form rank of a connected bicyclic gain graph: pendant reduction,
/// then cycle and catalog formulas on the residual components, combined
/// with the lower bounds that apply to graphs with pendants.
RankPrediction predict_rank(const GainGraph& g, double tol = kDefaultTol);

}  // namespace gainrank
