#include <gtest/gtest.h>

#include "gainrank/builders.hpp"
#include "gainrank/catalog.hpp"
#include "gainrank/graph_file.hpp"
#include "gainrank/harness.hpp"

using namespace gainrank;

namespace {

ParseError parse_failure(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << text;
  return ParseError(ParseErrorKind::Malformed, 0, "");
}

}  // namespace

TEST(ParseGraph, Examples) {
  const GainGraph p2 = parse_graph("# gaingraph v1\nn 2\ne 1 2 t:0\n");
  EXPECT_EQ(p2, build_path(2));
  const GainGraph gi = parse_graph("# gaingraph v1\nn 2\ne 1 2 c:0,1\n");
  EXPECT_NEAR(gi.gain(1, 2).im(), 1.0, 1e-15);
  EXPECT_NEAR(gi.gain(2, 1).im(), -1.0, 1e-15);
  const GainGraph q = parse_graph("# gaingraph v1\nn 3\n\n# a comment\ne 3 2 t:0.25\n");
  EXPECT_NEAR(q.gain(3, 2).im(), 1.0, 1e-15);
  EXPECT_NEAR(q.gain(2, 3).im(), -1.0, 1e-15);
  EXPECT_EQ(parse_graph("# gaingraph v1\nn 0\n").order(), 0);
}

TEST(ParseGraph, Errors) {
  const ParseError nonunit = parse_failure("# gaingraph v1\nn 2\ne 1 2 c:0.5,0.5\n");
  EXPECT_EQ(nonunit.kind(), ParseErrorKind::NonUnitGain);
  EXPECT_EQ(nonunit.line(), 3);
  EXPECT_EQ(nonunit.code(), ErrorCode::ParseError);

  EXPECT_EQ(parse_failure("# gaingraph v2\nn 2\n").kind(), ParseErrorKind::Malformed);
  EXPECT_EQ(parse_failure("# gaingraph v1\nm 2\n").line(), 2);
  EXPECT_EQ(parse_failure("# gaingraph v1\nn 2\ne 1 1 t:0\n").kind(), ParseErrorKind::Malformed);
  EXPECT_EQ(parse_failure("# gaingraph v1\nn 2\ne 1 2 x:0\n").kind(), ParseErrorKind::Malformed);
  EXPECT_EQ(parse_failure("# gaingraph v1\nn 2\ne 1 2 t:zero\n").kind(), ParseErrorKind::Malformed);
  EXPECT_EQ(parse_failure("# gaingraph v1\nn 2\ne 1 2\n").kind(), ParseErrorKind::Malformed);

  const ParseError dup = parse_failure("# gaingraph v1\nn 3\ne 1 2 t:0\ne 2 3 t:0\ne 2 1 t:0.5\n");
  EXPECT_EQ(dup.kind(), ParseErrorKind::DuplicateEdge);
  EXPECT_EQ(dup.line(), 5);

  const ParseError range = parse_failure("# gaingraph v1\nn 2\ne 1 3 t:0\n");
  EXPECT_EQ(range.kind(), ParseErrorKind::VertexOutOfRange);
  EXPECT_EQ(range.line(), 3);
}

TEST(FormatGain, PrefersExactTurns) {
  EXPECT_EQ(format_gain(UnitGain{}), "t:0");
  EXPECT_EQ(format_gain(make_gain(0.25)), "t:0.25");
  EXPECT_EQ(format_gain(make_gain(0.5)), "t:0.5");
  EXPECT_EQ(parse_gain_token(format_gain(make_gain(1.0 / 3))), make_gain(1.0 / 3));
}

TEST(EmitGraph, RoundTrips) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const GainMode mode = trial % 2 ? GainMode::uniform() : GainMode::roots_of_unity(12);
    const GainGraph g = random_gain_graph(rng, 1 + trial % 10, 0.4, mode);
    const std::string text = emit_graph(g);
    EXPECT_EQ(parse_graph(text), g) << text;
    EXPECT_EQ(emit_graph(parse_graph(text)), text);
  }
  for (CatalogId id : all_catalog_ids()) {
    EXPECT_EQ(parse_graph(emit_graph(catalog_graph(id))), catalog_graph(id));
  }
}
