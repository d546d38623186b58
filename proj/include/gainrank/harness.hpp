#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gainrank/catalog.hpp"
#include "gainrank/classify.hpp"
#include "gainrank/theorems.hpp"

namespace gainrank {

using Rng = std::mt19937_64;

/// How random gains are drawn: uniformly on the circle, or uniformly among
/// the k-th roots of unity (1 <= k <= 12), which hits equality conditions
/// with positive probability.
struct GainMode {
  int roots = 0;  // 0 means uniform

  static GainMode uniform() { return {0}; }
  static GainMode roots_of_unity(int k);
};

UnitGain sample_unit_gain(Rng& rng, GainMode mode = GainMode::uniform());
std::vector<UnitGain> sample_gains(Rng& rng, std::size_t count, GainMode mode = GainMode::uniform());

/// Erdos-Renyi underlying graph on n vertices with edge probability p.
GainGraph random_gain_graph(Rng& rng, int n, double p, GainMode mode = GainMode::uniform());
/// Random labeled tree on n vertices (random attachment).
GainGraph random_tree(Rng& rng, int n, GainMode mode = GainMode::uniform());
/// Hangs `extra` new vertices as random trees off the existing vertices.
GainGraph grow_pendant_trees(Rng& rng, const GainGraph& g, int extra,
                             GainMode mode = GainMode::uniform());
/// Cycle of length n whose type is forced to t (roots-of-unity gains with
/// the closing gain solved for the required cycle gain). For B the cycle
/// gain is a root of unity other than (-1)^(n/2).
GainGraph forced_type_cycle(Rng& rng, int n, CycleType t, GainMode mode = GainMode::roots_of_unity(12));

/// Infinity(p, 1, q), all gains 1, with one pendant at the shared vertex.
GainGraph sharpness_witness_infinity(int p, int q);
/// Theta(p, l, q) with one pendant meeting the lower bound: at a branch
/// vertex with all gains 1, except when exactly one of p, l, q is odd. Then
/// the pendant goes next to a branch vertex on the odd path and the even
/// cycle avoiding that path is made Type A.
GainGraph sharpness_witness_theta(int p, int l, int q);

struct TrialSpec {
  std::string claim;
  int trials = 100;
  std::uint64_t seed = 0;
  int max_n = 12;
};

struct Failure {
  std::string input;  // graph file text
  std::string expected;
  std::string observed;
};

struct Report {
  std::string claim;
  int trials = 0;
  std::uint64_t seed = 0;
  int forward_checks = 0;
  int backward_checks = 0;
  int fragile = 0;
  int failure_count = 0;
  /// The first few failures, in trial order.
  std::vector<Failure> failures;

  bool passed() const noexcept { return failure_count == 0; }
  /// Deterministic JSON text (sorted keys).
  std::string to_json() const;
};

/// Canonical claim identifiers, in registry order.
std::vector<std::string> claim_ids();
/// Maps an identifier or alias (for example "lemma2.3") to its canonical
/// form; Error(UnknownClaim) otherwise.
std::string canonical_claim(std::string_view id);

/// Runs the checks registered for spec.claim. Trial i draws from
/// Rng(spec.seed ^ i), so reports do not depend on evaluation order.
Report verify_claim(const TrialSpec& spec);

enum class TransformationLemma { StarToNeighbor, StarMerge, PathContraction };

/// Builds random (first, second) pairs for the lemma and checks
/// rank(first) >= rank(second).
Report verify_transformation_lemma(TransformationLemma which, const TrialSpec& spec);

/// Two-sided check of the table rows for one catalog graph: constructed
/// witnesses reach the row rank, and random gains reach a row rank exactly
/// when a row holds.
Report iff_fuzz_table(CatalogId id, const TrialSpec& spec);

}  // namespace gainrank
