#include <gtest/gtest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "ivdg/error.hpp"
#include "ivdg/io.hpp"
#include "ivdg/point_point.hpp"

namespace ivdg {
namespace {

namespace fs = std::filesystem;

std::string squash(std::string_view text) {
  std::string out;
  bool space = false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      space = !out.empty();
    } else {
      if (space) out += ' ';
      out += c;
      space = false;
    }
  }
  return out;
}

std::string emit_instance(const io::Instance& inst) {
  return std::visit([](const auto& x) { return io::emit(x); }, inst);
}

TEST(Io, FixtureFilesRoundTrip) {
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(IVDG_FIXTURE_DIR)) {
    std::string text = io::read_file(entry.path().string());
    std::string ext = entry.path().extension().string();
    std::string again;
    if (ext == ".ord" || ext == ".set") {
      again = io::emit(io::parse_ordering(text));
      if (ext == ".set") again = io::emit_vertex_list(io::parse_vertex_list(text));
    } else if (ext == ".w") {
      again = io::emit_weights(io::parse_weights(text));
    } else if (ext == ".map") {
      again = io::emit(io::parse_subdivision(text));
    } else {
      again = emit_instance(io::parse_instance(text));
    }
    EXPECT_EQ(squash(again), squash(text)) << entry.path();
    ++seen;
  }
  EXPECT_GE(seen, 6);
}

TEST(Io, DigraphRoundTrip) {
  Digraph g = fixtures::no_kernel_digraph();
  EXPECT_EQ(io::parse_digraph(io::emit(g)), g);
  Digraph loops(3, {{1, 1}, {0, 2}});
  EXPECT_EQ(io::emit(loops), "digraph 3\n0 2\n1 1\n");
}

TEST(Io, IntervalsWithRationalsAndDecimals) {
  IntervalRep rep = io::parse_intervals("intervals 2\n1 4 6 1.5 5\n0 0 2 1 3\n");
  EXPECT_EQ(rep, fixtures::two_vertex_rep());
  EXPECT_EQ(io::emit(rep), "intervals 2\n0 0 2 1 3\n1 4 6 3/2 5\n");
}

TEST(Io, CommentsAndBlankLinesAreSkipped) {
  Digraph g = io::parse_digraph("# header comment\n\ndigraph 2\n\n0 1  # arc\n");
  EXPECT_EQ(g, Digraph(2, {{0, 1}}));
}

TEST(Io, BigraphRoundTrip) {
  std::string text = "bigraph 2 1\nA 0 0 1\nA 1 2 5/2\nB 0 1/2 2\n";
  IntervalBigraphRep rep = io::parse_bigraph(text);
  EXPECT_EQ(rep.a_size(), 2);
  EXPECT_EQ(io::emit(rep), text);
}

TEST(Io, WeightsOrderingsAndSets) {
  EXPECT_EQ(io::parse_weights("weights 3\n2 7\n0 1\n1 0\n"), (std::vector<Weight>{1, 0, 7}));
  EXPECT_EQ(io::parse_ordering("2 0 1\n").perm, (std::vector<Vertex>{2, 0, 1}));
  EXPECT_TRUE(io::parse_vertex_list("\n").empty());
  EXPECT_EQ(io::emit_vertex_list(std::vector<Vertex>{3, 1}), "3 1\n");
}

TEST(Io, SubdivisionRoundTrip) {
  SubdivisionMap map = k_subdivision(fixtures::directed_triangle(), 2);
  SubdivisionMap again = io::parse_subdivision(io::emit(map));
  EXPECT_EQ(again.origin, map.origin);
  EXPECT_EQ(again.host, map.host);
  EXPECT_EQ(again.arcs, map.arcs);
  EXPECT_EQ(again.k, 2);
}

TEST(Io, ParseErrorsCarryLineNumbers) {
  auto line_of = [](auto&& fn) -> std::size_t {
    try {
      fn();
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of([] { io::parse_digraph("digraph 2\n0 1\n0 x\n"); }), 3U);
  EXPECT_EQ(line_of([] { io::parse_digraph("digraph 2\n\n0 5\n"); }), 3U);
  EXPECT_EQ(line_of([] { io::parse_digraph("graph 2\n"); }), 1U);
  EXPECT_EQ(line_of([] { io::parse_digraph("digraph 2\n0 1 1\n"); }), 2U);
  EXPECT_EQ(line_of([] { io::parse_intervals("intervals 2\n0 0 1 0 1\n"); }), 2U);
  EXPECT_EQ(line_of([] { io::parse_intervals("intervals 1\n0 0 1 0 1\n0 0 1 0 1\n"); }), 3U);
  EXPECT_EQ(line_of([] { io::parse_intervals("intervals 1\n0 2 1 0 1\n"); }), 2U);
  EXPECT_EQ(line_of([] { io::parse_bigraph("bigraph 1 1\nA 0 0 1\nC 0 0 1\n"); }), 3U);
  EXPECT_EQ(line_of([] { io::parse_weights("weights 1\n0 -4\n"); }), 2U);
  EXPECT_EQ(line_of([] { io::parse_instance("mystery 3\n"); }), 1U);
  EXPECT_EQ(line_of([] { io::parse_ordering("0 1\n1\n"); }), 2U);
}

TEST(Io, ParseInstanceDispatches) {
  EXPECT_TRUE(std::holds_alternative<Digraph>(io::parse_instance("digraph 1\n")));
  EXPECT_TRUE(std::holds_alternative<IntervalRep>(io::parse_instance("intervals 1\n0 0 1 0 1\n")));
  EXPECT_TRUE(std::holds_alternative<IntervalBigraphRep>(io::parse_instance("bigraph 0 0\n")));
}

TEST(Io, MissingFileIsAnError) {
  EXPECT_THROW(io::read_file("/nonexistent/ivdg/file"), Error);
}

}  // namespace
}  // namespace ivdg
