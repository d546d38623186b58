#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gainrank/builders.hpp"
#include "gainrank/graph.hpp"

namespace gainrank {

/// The named bicyclic graphs G1..G22. G1..G11 are pendant-free bases;
/// G12..G22 carry pendant vertices but no pendant twins.
enum class CatalogId : int {
  G1 = 1, G2, G3, G4, G5, G6, G7, G8, G9, G10, G11,
  G12, G13, G14, G15, G16, G17, G18, G19, G20, G21, G22,
};

inline constexpr int kCatalogSize = 22;

std::string to_string(CatalogId id);
/// Accepts "G9" or "g9"; Error(UnknownCatalogId) otherwise.
CatalogId parse_catalog_id(std::string_view text);
CatalogId catalog_id_from_index(int index);
std::vector<CatalogId> all_catalog_ids();

bool has_pendants(CatalogId id) noexcept;

struct CatalogEntry {
  CatalogId id;
  int order;
  /// Labeled edges, sorted, each with u < v. This is also the gain order
  /// used by catalog_graph.
  std::vector<std::pair<Vertex, Vertex>> edges;
  BaseDescriptor base;  // canonical form
};

const CatalogEntry& catalog_entry(CatalogId id);

/// gains[i] is placed on edges[i].first -> edges[i].second.
GainGraph catalog_graph(CatalogId id, std::span<const UnitGain> gains);
GainGraph catalog_graph(CatalogId id);

/// Catalog entry whose labeled edge set equals g's exactly.
std::optional<CatalogId> exact_catalog_id(const GainGraph& g);

struct CatalogMatch {
  CatalogId id;
  /// to_catalog[v - 1] is the catalog label of vertex v of the input.
  std::vector<Vertex> to_catalog;
  /// The input graph relabeled into the catalog labeling, gains preserved.
  GainGraph relabeled;
};

/// Finds a catalog graph isomorphic to the underlying graph of g
/// (brute-force search; catalog graphs have at most 8 vertices).
std::optional<CatalogMatch> match_catalog(const GainGraph& g);

}  // namespace gainrank
