// Fixture access and brute-force oracles shared by the test binaries. The
// oracles only use Graph::order/has_edge/neighbors and their own loops.
#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "evenhole/graph.hpp"
#include "evenhole/jumps.hpp"

#ifndef EVENHOLE_FIXTURE_DIR
#error "EVENHOLE_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace evenhole::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(EVENHOLE_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::vector<std::string> fixture_lines(const std::string& name) {
  std::istringstream in(read_fixture(name));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

inline std::vector<std::string> split(const std::string& s, char sep = ' ') {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

inline Graph from_pairs(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return Graph::from_edges(n, list);
}

// Number of connected components of g minus the flagged vertices.
inline std::size_t oracle_components(const Graph& g, const std::vector<bool>& removed) {
  const std::size_t n = g.order();
  std::vector<bool> seen(removed);
  std::size_t count = 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (seen[r]) continue;
    ++count;
    std::vector<std::size_t> stack{r};
    seen[r] = true;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < n; ++y) {
        if (!seen[y] && g.has_edge(static_cast<Vertex>(x), static_cast<Vertex>(y))) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

inline VertexList oracle_k1(const Graph& g) {
  VertexList out;
  const std::vector<bool> none(g.order(), false);
  const std::size_t base = oracle_components(g, none);
  for (std::size_t v = 0; v < g.order(); ++v) {
    std::vector<bool> removed(g.order(), false);
    removed[v] = true;
    if (oracle_components(g, removed) > base) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

inline std::vector<Edge> oracle_k2(const Graph& g) {
  std::vector<Edge> out;
  const std::vector<bool> none(g.order(), false);
  const std::size_t base = oracle_components(g, none);
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) continue;
      std::vector<bool> removed(g.order(), false);
      removed[u] = removed[v] = true;
      if (oracle_components(g, removed) > base) {
        out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  }
  return out;
}

// Shortest cycle by walking every simple path from each vertex back to it.
inline std::optional<std::size_t> oracle_girth(const Graph& g) {
  const std::size_t n = g.order();
  std::optional<std::size_t> best;
  std::vector<bool> used(n, false);
  std::function<void(std::size_t, std::size_t, std::size_t)> walk = [&](std::size_t root,
                                                                          std::size_t x,
                                                                          std::size_t len) {
    if (best && len + 1 >= *best) return;
    for (std::size_t y = 0; y < n; ++y) {
      if (!g.has_edge(static_cast<Vertex>(x), static_cast<Vertex>(y))) continue;
      if (y == root && len >= 2) best = len + 1;
      if (y <= root || used[y]) continue;
      used[y] = true;
      walk(root, y, len + 1);
      used[y] = false;
    }
  };
  for (std::size_t r = 0; r < n; ++r) {
    used[r] = true;
    walk(r, r, 0);
    used[r] = false;
  }
  return best;
}

// Vertex sets (ascending) of all holes: subsets of size >= 4 inducing a
// connected 2-regular graph. Only for small n.
inline std::vector<VertexList> oracle_holes(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexList> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexList s;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1u) s.push_back(static_cast<Vertex>(v));
    }
    if (s.size() < 4) continue;
    bool regular = true;
    for (Vertex v : s) {
      std::size_t d = 0;
      for (Vertex w : s) d += g.has_edge(v, w) ? 1 : 0;
      regular = regular && d == 2;
    }
    if (!regular) continue;
    std::vector<bool> removed(n, true);
    for (Vertex v : s) removed[v] = false;
    if (oracle_components(g, removed) == 1) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct OracleJump {
  JumpKind kind;
  ShortType type;
};

// Classification straight from the definitions: `cycle` lists the hole in
// cyclic order and `path` runs s..t. Q1 is the arc whose interior holds the
// smaller vertex (an empty interior never wins).
inline OracleJump oracle_classify(const Graph& g, const VertexList& cycle,
                                  const VertexList& path) {
  const std::size_t k = cycle.size();
  const Vertex s = path.front(), t = path.back();
  const std::size_t ps = std::find(cycle.begin(), cycle.end(), s) - cycle.begin();
  const std::size_t pt = std::find(cycle.begin(), cycle.end(), t) - cycle.begin();
  VertexList a, b;  // interiors walking forwards from s and from t
  for (std::size_t i = (ps + 1) % k; i != pt; i = (i + 1) % k) a.push_back(cycle[i]);
  for (std::size_t i = (pt + 1) % k; i != ps; i = (i + 1) % k) b.push_back(cycle[i]);
  const VertexList inner(path.begin() + 1, path.end() - 1);
  auto sees = [&](Vertex x) {
    return std::any_of(inner.begin(), inner.end(), [&](Vertex p) { return g.has_edge(x, p); });
  };
  auto seers = [&](const VertexList& arc) {
    VertexList out;
    for (Vertex x : arc) {
      if (sees(x)) out.push_back(x);
    }
    return out;
  };
  if (g.has_edge(s, t)) {
    return {seers(a).empty() && seers(b).empty() ? JumpKind::EdgeLink : JumpKind::GeneralJump,
            ShortType::NotApplicable};
  }
  const auto smallest = [](const VertexList& v) {
    return v.empty() ? 1 << 30 : *std::min_element(v.begin(), v.end());
  };
  const bool a_first = smallest(a) <= smallest(b);
  const VertexList& q1 = a_first ? a : b;
  const VertexList& q2 = a_first ? b : a;
  const VertexList s1 = seers(q1), s2 = seers(q2);
  if (s1.empty() && s2.empty()) {
    if (k % 2 == 1) return {JumpKind::ShortJump, ShortType::NotApplicable};
    const std::size_t p = path.size() - 1, q = q1.size() + 1;
    return {JumpKind::ShortJump, (p + q) % 2 ? ShortType::TypeO : ShortType::TypeE};
  }
  if (!s1.empty() && !s2.empty()) return {JumpKind::GeneralJump, ShortType::NotApplicable};
  const VertexList& arc = s1.empty() ? q2 : q1;
  const VertexList& other = s1.empty() ? q1 : q2;
  const VertexList& seen = s1.empty() ? s2 : s1;
  if (arc.size() == 1) return {JumpKind::LocalJumpAcrossOneVertex, ShortType::NotApplicable};
  // The arc interior runs from a neighbour of one end to a neighbour of the other.
  if (seen.size() == 1 && other.size() != 1 &&
      (seen[0] == arc.front() || seen[0] == arc.back())) {
    return {JumpKind::SCTLink, ShortType::NotApplicable};
  }
  return {JumpKind::LocalJumpAcrossSet, ShortType::NotApplicable};
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace evenhole::testing
