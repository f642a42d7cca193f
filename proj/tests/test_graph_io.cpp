#include <random>
#include <sstream>

#include "doctest.h"
#include "nig/canonical.hpp"
#include "nig/families.hpp"
#include "nig/graph_io.hpp"
#include "oracles.hpp"

using namespace nig;

namespace {

ParseErrorKind kind_of(std::string_view rec, int cap = kMaxOrder) {
  try {
    parse_graph6(rec, cap);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("record parsed: " << rec);
  return ParseErrorKind::kBadToken;
}

ParseErrorKind edge_list_kind(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("edge list parsed: " << text);
  return ParseErrorKind::kBadToken;
}

}  // namespace

TEST_CASE("smallest records") {
  Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.adjacent(0, 1));
  CHECK(emit_graph6(gen_path(2)) == "A_");
  CHECK(emit_graph6(Graph(1)) == "@");
  CHECK(parse_graph6("@").order() == 1);
  CHECK(emit_graph6(Graph(0)) == "?");
}

TEST_CASE("D?{ is the star with centre 4") {
  Graph g = parse_graph6("D?{");
  CHECK(g.order() == 5);
  CHECK(g.size() == 4);
  CHECK(g.degree(4) == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(g.adjacent(v, 4));
  CHECK(emit_graph6(g) == "D?{");
}

TEST_CASE("graph6 bit layout is column-major upper triangle") {
  // x(0,1) x(0,2) x(1,2) ... : edge 0-2 alone sets the second bit.
  Graph g(3, {{0, 2}});
  CHECK(emit_graph6(g) == std::string{char(63 + 3), char(63 + 0b010000)});
}

TEST_CASE("C5 round-trips through the encoder") {
  Graph c5 = gen_cycle(5);
  Graph back = parse_graph6(emit_graph6(c5));
  CHECK(back == c5);
  CHECK(is_isomorphic(back, c5));
}

TEST_CASE("random round trips, short and long form") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 65);
    Graph g = oracle::random_graph(rng, n, 0.3);
    const std::string rec = emit_graph6(g);
    CHECK(parse_graph6(rec) == g);
    CHECK(emit_graph6(parse_graph6(rec)) == rec);
    if (n > 62) CHECK(rec[0] == '~');
  }
}

TEST_CASE("distinct graph6 errors") {
  CHECK(kind_of("") == ParseErrorKind::kMalformedHeader);
  CHECK(kind_of("~?") == ParseErrorKind::kMalformedHeader);
  CHECK(kind_of("~???") == ParseErrorKind::kMalformedHeader);  // long form for order < 63
  CHECK(kind_of("A ") == ParseErrorKind::kByteOutOfRange);
  CHECK(kind_of("D?") == ParseErrorKind::kTruncated);
  CHECK(kind_of("A_?") == ParseErrorKind::kTrailingGarbage);
  CHECK(kind_of("A`") == ParseErrorKind::kNonzeroPadding);
  CHECK(kind_of("D?{", 4) == ParseErrorKind::kOrderAboveCap);
  CHECK(kind_of("~~??????") == ParseErrorKind::kOrderAboveCap);
  CHECK(kind_of(emit_graph6(Graph(64)), 63) == ParseErrorKind::kOrderAboveCap);
}

TEST_CASE("graph6 marker and stream reading") {
  CHECK(parse_graph6(">>graph6<<A_") == gen_path(2));
  std::istringstream in("A_\n\nBw\r\nD?{\n");
  auto gs = read_graph6_stream(in);
  REQUIRE(gs.size() == 3);
  CHECK(gs[1] == gen_complete(3));
}

TEST_CASE("edge lists") {
  CHECK(parse_edge_list("0 1\n1 2") == gen_path(3));
  Graph g = parse_edge_list("n 4\n0 1");
  CHECK(g.order() == 4);
  CHECK(g.size() == 1);
  CHECK(parse_edge_list("# comment\n0 1\n1 0\n\n0 1\n").size() == 1);
  CHECK(edge_list_kind("0 0") == ParseErrorKind::kSelfLoop);
  CHECK(edge_list_kind("0 x") == ParseErrorKind::kBadToken);
  CHECK(edge_list_kind("0 1 2") == ParseErrorKind::kBadToken);
  CHECK(edge_list_kind("0 64") == ParseErrorKind::kLabelAboveCap);
  CHECK(edge_list_kind("n 3\n0 5") == ParseErrorKind::kLabelAboveOrder);
}
