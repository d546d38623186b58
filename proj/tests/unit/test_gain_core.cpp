#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "gainrank/builders.hpp"
#include "gainrank/catalog.hpp"
#include "gainrank/error.hpp"

using namespace gainrank;

namespace {

using EdgePairs = std::vector<std::pair<Vertex, Vertex>>;

EdgePairs pairs(const GainGraph& g) {
  EdgePairs out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST(MakeGain, QuarterTurnsAreExact) {
  EXPECT_EQ(make_gain(0.0).value(), std::complex<double>(1, 0));
  EXPECT_EQ(make_gain(0.25).value(), std::complex<double>(0, 1));
  EXPECT_EQ(make_gain(0.5).value(), std::complex<double>(-1, 0));
  EXPECT_EQ(make_gain(0.75).value(), std::complex<double>(0, -1));
}

TEST(MakeGain, PeriodicInWholeTurns) {
  for (double t : {0.1, 0.3, 0.77, -0.4}) {
    EXPECT_NEAR(std::abs(make_gain(t).value() - make_gain(t + 1).value()), 0.0, 1e-15);
  }
  EXPECT_EQ(make_gain(0.375), make_gain(1.375));
}

TEST(MakeGain, RejectsNonFinite) {
  EXPECT_EQ(code_of([] { make_gain(std::numeric_limits<double>::infinity()); }), ErrorCode::InvalidGain);
  EXPECT_EQ(code_of([] { make_gain(std::nan("")); }), ErrorCode::InvalidGain);
}

TEST(UnitGain, StaysOnCircleAndInverseIsConjugate) {
  UnitGain p;
  for (int i = 1; i < 200; ++i) {
    const UnitGain g = make_gain(i * 0.0137);
    EXPECT_LE(std::abs(g.re() * g.re() + g.im() * g.im() - 1.0), 1e-12);
    EXPECT_EQ(g.inverse().re(), g.re());
    EXPECT_EQ(g.inverse().im(), -g.im());
    p = p * g;
    EXPECT_LE(std::abs(std::norm(p.value()) - 1.0), 1e-12);
  }
  EXPECT_EQ(code_of([] { UnitGain::from_complex({0.5, 0.5}); }), ErrorCode::InvalidGain);
}

TEST(GainGraph, HermitianSymmetryAndValidation) {
  const GainEdge edges[] = {{1, 2, make_gain(0.1)}, {3, 2, make_gain(0.25)}};
  const GainGraph g(3, edges);
  EXPECT_EQ(g.gain(2, 1), make_gain(0.1).conj());
  EXPECT_EQ(g.gain(3, 2), make_gain(0.25));
  EXPECT_EQ(g.gain(2, 3).value(), std::complex<double>(0, -1));
  EXPECT_EQ(code_of([&] { g.gain(1, 3); }), ErrorCode::InvalidEdge);

  const GainEdge loop[] = {{1, 1, UnitGain{}}};
  EXPECT_EQ(code_of([&] { GainGraph(2, loop); }), ErrorCode::InvalidEdge);
  const GainEdge dup[] = {{1, 2, UnitGain{}}, {2, 1, UnitGain{}}};
  EXPECT_EQ(code_of([&] { GainGraph(2, dup); }), ErrorCode::InvalidEdge);
  const GainEdge out_of_range[] = {{1, 4, UnitGain{}}};
  EXPECT_EQ(code_of([&] { GainGraph(3, out_of_range); }), ErrorCode::VertexOutOfRange);
}

TEST(BuildCycle, GainsFollowTheWalk) {
  const UnitGain gains[] = {UnitGain{}, UnitGain{}, make_gain(0.25)};
  const GainGraph c = build_cycle(3, gains);
  EXPECT_EQ(c.size(), 3);
  EXPECT_EQ(c.gain(3, 1).value(), std::complex<double>(0, 1));
  EXPECT_EQ(c.gain(1, 3).value(), std::complex<double>(0, -1));

  const UnitGain neg[] = {UnitGain{}, UnitGain{}, UnitGain{}, make_gain(0.5)};
  EXPECT_EQ(build_cycle(4, neg).gain(4, 1).re(), -1.0);
  EXPECT_EQ(code_of([] { build_cycle(2); }), ErrorCode::TooSmall);
  EXPECT_EQ(code_of([&] { build_cycle(4, gains); }), ErrorCode::GainMismatch);
}

TEST(BuildInfinity, MatchesPrintedLabelings) {
  EXPECT_EQ(pairs(build_infinity(3, 1, 3)), catalog_entry(CatalogId::G1).edges);
  EXPECT_EQ(pairs(build_infinity(3, 2, 3)), catalog_entry(CatalogId::G4).edges);
  const auto m = match_catalog(build_infinity(4, 1, 4));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->id, CatalogId::G3);
  EXPECT_EQ(build_infinity(4, 1, 4).order(), 7);
  EXPECT_EQ(code_of([] { build_infinity(2, 1, 3); }), ErrorCode::InvalidBase);
  EXPECT_EQ(code_of([] { build_infinity(3, 0, 3); }), ErrorCode::InvalidBase);
}

TEST(BuildTheta, MatchesPrintedLabelings) {
  EXPECT_EQ(pairs(build_theta(1, 1, 1)), catalog_entry(CatalogId::G9).edges);
  EXPECT_EQ(pairs(build_theta(0, 1, 2)), catalog_entry(CatalogId::G6).edges);
  EXPECT_EQ(pairs(build_theta(0, 1, 3)), catalog_entry(CatalogId::G7).edges);
  EXPECT_EQ(pairs(build_theta(0, 2, 2)), catalog_entry(CatalogId::G8).edges);
  EXPECT_EQ(pairs(build_theta(1, 1, 2)), catalog_entry(CatalogId::G10).edges);
  EXPECT_EQ(pairs(build_theta(1, 1, 3)), catalog_entry(CatalogId::G11).edges);
  const auto m = match_catalog(build_theta(0, 1, 1));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->id, CatalogId::G5);
  EXPECT_EQ(code_of([] { build_theta(0, 0, 2); }), ErrorCode::InvalidBase);
}

TEST(Builders, BicyclicEdgeCount) {
  for (int p = 3; p <= 6; ++p) {
    for (int l = 1; l <= 3; ++l) {
      for (int q = 3; q <= 6; ++q) {
        const GainGraph g = build_infinity(p, l, q);
        EXPECT_EQ(g.order(), p + q + l - 2);
        EXPECT_EQ(g.size(), g.order() + 1);
        EXPECT_EQ(g.family(), GraphFamily::Bicyclic);
      }
    }
  }
  for (int p = 0; p <= 3; ++p) {
    for (int l = 0; l <= 3; ++l) {
      for (int q = 0; q <= 3; ++q) {
        if (!BaseDescriptor{BaseKind::Theta, p, l, q}.valid()) continue;
        const GainGraph g = build_theta(p, l, q);
        EXPECT_EQ(g.order(), p + l + q + 2);
        EXPECT_EQ(g.size(), g.order() + 1);
      }
    }
  }
}

TEST(Catalog, EntriesAndErrors) {
  const GainGraph g5 = catalog_graph(CatalogId::G5);
  EXPECT_EQ(g5.order(), 4);
  EXPECT_EQ(g5.size(), 5);
  EXPECT_EQ(pairs(catalog_graph(CatalogId::G11)),
            (EdgePairs{{1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}));
  EXPECT_EQ(catalog_graph(CatalogId::G13).order(), 5);
  EXPECT_EQ(parse_catalog_id("g9"), CatalogId::G9);
  EXPECT_EQ(code_of([] { parse_catalog_id("G23"); }), ErrorCode::UnknownCatalogId);
  EXPECT_EQ(code_of([] { parse_catalog_id("H1"); }), ErrorCode::UnknownCatalogId);
  const UnitGain two[2];
  EXPECT_EQ(code_of([&] { catalog_graph(CatalogId::G5, two); }), ErrorCode::GainMismatch);
}

TEST(Catalog, GraphsArePairwiseDistinctAndBicyclic) {
  for (CatalogId id : all_catalog_ids()) {
    const GainGraph g = catalog_graph(id);
    EXPECT_EQ(g.size(), g.order() + 1) << to_string(id);
    EXPECT_TRUE(g.is_connected()) << to_string(id);
    const auto m = match_catalog(g);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->id, id);
    EXPECT_EQ(exact_catalog_id(g), id);
  }
}

TEST(Catalog, MatchRelabelsGains) {
  // G9 with vertices reversed: v -> 6 - v.
  const GainGraph g9 = catalog_graph(CatalogId::G9, std::vector<UnitGain>{
      make_gain(0.1), make_gain(0.2), make_gain(0.3), make_gain(0.4), make_gain(0.5), make_gain(0.6)});
  std::vector<GainEdge> flipped;
  for (const auto& e : g9.edges()) flipped.push_back({6 - e.u, 6 - e.v, e.gain});
  const GainGraph h(5, flipped);
  const auto m = match_catalog(h);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->id, CatalogId::G9);
  for (const auto& e : h.edges()) {
    EXPECT_EQ(m->relabeled.gain(m->to_catalog[static_cast<std::size_t>(e.u - 1)],
                                m->to_catalog[static_cast<std::size_t>(e.v - 1)]),
              e.gain);
  }
}

TEST(AttachPendants, Examples) {
  const GainGraph tadpole = attach_pendants(build_cycle(3), 1, 1);
  EXPECT_EQ(tadpole.order(), 4);
  EXPECT_EQ(tadpole.family(), GraphFamily::Unicyclic);
  EXPECT_EQ(pairs(attach_pendants(catalog_graph(CatalogId::G5), 4, 1)), catalog_entry(CatalogId::G12).edges);
  const GainGraph s4 = attach_pendants(build_path(2), 1, 2);
  EXPECT_EQ(s4.degree(1), 3);
  EXPECT_EQ(code_of([] { attach_pendants(build_path(2), 3, 1); }), ErrorCode::VertexOutOfRange);
}

TEST(DisjointUnion, Examples) {
  const GainGraph k2 = disjoint_union(GainGraph(1), GainGraph(1));
  EXPECT_EQ(k2.order(), 2);
  EXPECT_EQ(k2.size(), 0);
  const GainGraph u = disjoint_union(build_cycle(3), build_path(2));
  EXPECT_EQ(u.order(), 5);
  EXPECT_EQ(u.size(), 4);
  EXPECT_TRUE(u.adjacent(4, 5));
  EXPECT_EQ(disjoint_union(build_cycle(4), GainGraph(0)), build_cycle(4));
  const GainGraph a = build_cycle(3), b = build_path(3), c = build_cycle(5);
  EXPECT_EQ(disjoint_union(disjoint_union(a, b), c), disjoint_union(a, disjoint_union(b, c)));
}

TEST(Gauge, MultipliesOutgoingGains) {
  const GainGraph c = build_cycle(4);
  const GainGraph h = gauge(c, 2, make_gain(0.25));
  EXPECT_EQ(h.gain(2, 3).value(), std::complex<double>(0, 1));
  EXPECT_EQ(h.gain(2, 1).value(), std::complex<double>(0, 1));
  EXPECT_EQ(h.gain(1, 2).value(), std::complex<double>(0, -1));
  EXPECT_EQ(h.gain(3, 4), UnitGain{});
}
