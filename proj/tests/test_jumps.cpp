#include <doctest.h>

#include "evenhole/cycles.hpp"
#include "evenhole/generators.hpp"
#include "evenhole/jumps.hpp"
#include "support.hpp"

using namespace evenhole;
using namespace evenhole::testing;

namespace {

const VertexList kC8{0, 1, 2, 3, 4, 5, 6, 7};

// C8 on 0..7 plus extra vertices 8.. and the given edges.
Graph c8_plus(std::size_t extra, std::vector<Edge> edges) {
  for (Vertex i = 0; i < 8; ++i) edges.emplace_back(i, (i + 1) % 8);
  return Graph::from_edges(8 + extra, edges);
}

Hole c8_hole(const Graph& g) { return Hole::validated(g, kC8); }

}  // namespace

TEST_CASE("the third ear of theta(4,4,4) is a type-e short jump") {
  const Graph t = gen_theta(4, 4, 4);
  const Hole c = Hole::validated(t, VertexList{0, 2, 3, 4, 1, 7, 6, 5});
  const auto e = enumerate_jumps(t, c);
  CHECK_FALSE(e.truncated);
  REQUIRE(e.jumps.size() == 1);
  const auto& j = e.jumps[0];
  CHECK(j.kind == JumpKind::ShortJump);
  CHECK(j.short_type == ShortType::TypeE);
  CHECK(j.length() == 4);
  CHECK(j.ends == Edge{0, 1});
  CHECK(j.arc1_length() == 4);
  CHECK(j.arc2_length() == 4);
}

TEST_CASE("a pendant path is no jump") {
  const Graph g = c8_plus(3, {{0, 8}, {8, 9}, {9, 10}});
  CHECK(enumerate_jumps(g, c8_hole(g)).jumps.empty());
}

TEST_CASE("local jump across one vertex") {
  // v1-a-b-v3 with b adjacent to v2; a = 8, b = 9.
  const Graph g = c8_plus(2, {{0, 8}, {8, 9}, {9, 2}, {9, 1}});
  const auto e = enumerate_jumps(g, c8_hole(g));
  std::size_t local = 0;
  for (const auto& j : e.jumps) {
    if (j.kind != JumpKind::LocalJumpAcrossOneVertex) continue;
    ++local;
    CHECK(j.ends == Edge{0, 2});
    CHECK(j.across_vertex == 1);
  }
  CHECK(local == 1);
}

TEST_CASE("classify_jump on C8") {
  SUBCASE("type-e short jump") {
    const Graph g = c8_plus(3, {{0, 8}, {8, 9}, {9, 10}, {10, 4}});
    const auto j = classify_jump(g, c8_hole(g), {0, 8, 9, 10, 4});
    CHECK(j.kind == JumpKind::ShortJump);
    CHECK(j.short_type == ShortType::TypeE);
  }
  SUBCASE("type-o short jump") {
    const Graph g = c8_plus(4, {{0, 8}, {8, 9}, {9, 10}, {10, 11}, {11, 4}});
    const auto j = classify_jump(g, c8_hole(g), {0, 8, 9, 10, 11, 4});
    CHECK(j.kind == JumpKind::ShortJump);
    CHECK(j.short_type == ShortType::TypeO);
    CHECK((j.length() + j.arc1_length()) % 2 == 1);
  }
  SUBCASE("edge link") {
    const Graph g = c8_plus(2, {{0, 8}, {8, 9}, {9, 1}});
    const auto j = classify_jump(g, c8_hole(g), {0, 8, 9, 1});
    CHECK(j.kind == JumpKind::EdgeLink);
  }
  SUBCASE("not a jump") {
    const Graph g = c8_plus(2, {{0, 8}, {8, 9}, {9, 1}, {0, 9}});
    CHECK_THROWS_AS(classify_jump(g, c8_hole(g), {0, 8, 9, 1}), GraphError);
    CHECK_THROWS_AS(classify_jump(g, c8_hole(g), {0, 1}), GraphError);
    CHECK_THROWS_AS(classify_jump(g, c8_hole(g), {8, 9, 1}), GraphError);
  }
}

TEST_CASE("sct link and local jump across a set") {
  // Ends v1, v4 (0, 3); interior 8..10; the arc interior {1, 2}.
  SUBCASE("only the successor of an end sees the interior") {
    const Graph g = c8_plus(3, {{0, 8}, {8, 9}, {9, 10}, {10, 3}, {9, 1}});
    const auto j = classify_jump(g, c8_hole(g), {0, 8, 9, 10, 3});
    CHECK(j.kind == JumpKind::SCTLink);
    CHECK(j.across_vertex == 1);
    CHECK(j.ends == Edge{0, 3});
  }
  SUBCASE("successor of the far end is reported with that end first") {
    const Graph g = c8_plus(3, {{0, 8}, {8, 9}, {9, 10}, {10, 3}, {9, 2}});
    const auto j = classify_jump(g, c8_hole(g), {0, 8, 9, 10, 3});
    CHECK(j.kind == JumpKind::SCTLink);
    CHECK(j.across_vertex == 2);
    CHECK(j.ends == Edge{3, 0});
    CHECK(j.path.front() == 3);
  }
  SUBCASE("two arc vertices see the interior") {
    const Graph g = c8_plus(3, {{0, 8}, {8, 9}, {9, 10}, {10, 3}, {9, 1}, {9, 2}});
    const auto j = classify_jump(g, c8_hole(g), {0, 8, 9, 10, 3});
    CHECK(j.kind == JumpKind::LocalJumpAcrossSet);
    CHECK(j.across == VertexList{1, 2});
  }
  SUBCASE("both arcs see the interior") {
    const Graph g = c8_plus(3, {{0, 8}, {8, 9}, {9, 10}, {10, 3}, {9, 1}, {9, 5}});
    CHECK(classify_jump(g, c8_hole(g), {0, 8, 9, 10, 3}).kind == JumpKind::GeneralJump);
  }
}

TEST_CASE("jump pair relations") {
  const Hole c = Hole::from_cycle(kC8);
  CHECK(relation(c, Edge{0, 4}, Edge{1, 5}) == JumpPairRelation::Crossing);
  CHECK(relation(c, Edge{0, 3}, Edge{0, 5}) == JumpPairRelation::Parallel);
  CHECK(relation(c, Edge{0, 2}, Edge{4, 6}) == JumpPairRelation::Parallel);
  CHECK(relation(c, Edge{5, 1}, Edge{4, 0}) == JumpPairRelation::Crossing);
}

TEST_CASE("end sets") {
  const Graph t = gen_theta(4, 4, 4);
  const Hole ct = Hole::validated(t, VertexList{0, 2, 3, 4, 1, 7, 6, 5});
  CHECK(end_set(t, ct).vertices == VertexList{0, 1});

  const Graph c8 = gen_cycle(8);
  CHECK(end_set(c8, c8_hole(c8)).vertices.empty());

  const Graph two = c8_plus(6, {{0, 8}, {8, 9}, {9, 10}, {10, 4},
                                {1, 11}, {11, 12}, {12, 13}, {13, 5}});
  CHECK(end_set(two, c8_hole(two)).vertices == VertexList{0, 1, 4, 5});
}

TEST_CASE("enumeration rejects non-holes and flags truncation") {
  const Graph t = gen_theta(4, 4, 4);
  CHECK_THROWS_AS(enumerate_jumps(t, Hole::from_cycle(VertexList{0, 2, 3, 4})), GraphError);
  const Hole c = Hole::validated(t, VertexList{0, 2, 3, 4, 1, 7, 6, 5});
  JumpSearchOptions opts;
  opts.interior_cap = 2;
  const auto e = enumerate_jumps(t, c, opts);
  CHECK(e.truncated);
  CHECK(e.jumps.empty());
  CHECK(end_set(t, c, opts).truncated);
}

TEST_CASE("enumerated jumps agree with a definitional classifier") {
  std::mt19937_64 rng(17);
  std::size_t jumps_seen = 0;
  for (int round = 0; round < 200; ++round) {
    const Graph g = random_graph(7 + rng() % 5, 0.3, rng);
    for (const Hole& c : enumerate_holes(g)) {
      for (const auto& j : enumerate_jumps(g, c).jumps) {
        ++jumps_seen;
        // Re-orient to s < t so the oracle sees the path as enumerated.
        VertexList path = j.path;
        if (path.front() > path.back()) std::reverse(path.begin(), path.end());
        const auto o = oracle_classify(g, c.vertices(), path);
        CHECK(o.kind == j.kind);
        CHECK(o.type == j.short_type);
        if (c.is_even()) {
          CHECK((j.length() + j.arc1_length()) % 2 == (j.length() + j.arc2_length()) % 2);
        }
        if (j.kind == JumpKind::ShortJump) CHECK(c.is_even() == (j.short_type != ShortType::NotApplicable));
      }
    }
  }
  CHECK(jumps_seen > 500);
}
