#include "evenhole/generators.hpp"

#include <array>

namespace evenhole {

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph::from_edges(n, edges);
}

Graph gen_path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return Graph::from_edges(n, edges);
}

Graph gen_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_petersen() { return gen_generalized_petersen(5, 2); }

Graph gen_lcf(std::size_t n, std::span<const int> jumps) {
  if (n < 4 || jumps.empty()) throw GraphError("LCF needs n >= 4 and a jump list");
  std::vector<Edge> edges;
  const long ln = static_cast<long>(n);
  for (long i = 0; i < ln; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % ln));
    const long j = ((i + jumps[static_cast<std::size_t>(i) % jumps.size()]) % ln + ln) % ln;
    if (i < j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph::from_edges(n, edges);
}

Graph gen_tutte_coxeter() {
  constexpr std::array<int, 6> jumps{-13, -9, 7, -7, 9, 13};
  return gen_lcf(30, jumps);
}

Graph gen_generalized_petersen(std::size_t n, std::size_t k) {
  if (n < 3 || k == 0 || 2 * k >= n) {
    throw GraphError("generalized Petersen graph needs n >= 3 and 1 <= k < n/2");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const auto outer = static_cast<Vertex>(i);
    const auto inner = static_cast<Vertex>(n + i);
    edges.emplace_back(outer, static_cast<Vertex>((i + 1) % n));
    edges.emplace_back(outer, inner);
    edges.emplace_back(inner, static_cast<Vertex>(n + (i + k) % n));
  }
  return Graph::from_edges(2 * n, edges);
}

Graph gen_theta(std::size_t a, std::size_t b, std::size_t c) {
  const std::array<std::size_t, 3> ears{a, b, c};
  std::size_t ones = 0;
  for (auto len : ears) {
    if (len == 0) throw GraphError("theta ears need length >= 1");
    ones += len == 1 ? 1 : 0;
  }
  if (ones > 1) throw GraphError("two ears of length one would be parallel edges");
  std::vector<Edge> edges;
  Vertex next = 2;
  for (auto len : ears) {
    Vertex prev = 0;
    for (std::size_t i = 1; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  }
  return Graph::from_edges(static_cast<std::size_t>(next), edges);
}

Graph gen_subdivision(const Graph& base, std::span<const std::size_t> lengths) {
  const auto base_edges = base.edges();
  if (lengths.size() != base_edges.size()) {
    throw GraphError("need one path length per edge: " + std::to_string(base_edges.size()) +
                     " edges, " + std::to_string(lengths.size()) + " lengths");
  }
  std::vector<Edge> edges;
  auto next = static_cast<Vertex>(base.order());
  for (std::size_t i = 0; i < base_edges.size(); ++i) {
    if (lengths[i] == 0) throw GraphError("subdivision length must be at least 1");
    Vertex prev = base_edges[i].first;
    for (std::size_t k = 1; k < lengths[i]; ++k) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, base_edges[i].second);
  }
  return Graph::from_edges(static_cast<std::size_t>(next), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.order() + b.order(), edges);
}

namespace {

// b's vertices mapped into the merged graph; fixed pairs identify b-vertices
// with a-vertices.
Graph glue(const Graph& a, const Graph& b, std::span<const Edge> identify) {
  std::vector<Vertex> map(b.order(), -1);
  for (const auto& [va, vb] : identify) {
    if (!a.contains(va) || !b.contains(vb)) throw GraphError("glue vertex out of range");
    map[vb] = va;
  }
  auto next = static_cast<Vertex>(a.order());
  for (auto& m : map) {
    if (m < 0) m = next++;
  }
  auto edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(map[u], map[v]);
  // The identified edge appears twice and collapses.
  return Graph::from_edges(static_cast<std::size_t>(next), edges);
}

}  // namespace

Graph glue_at_vertex(const Graph& a, Vertex va, const Graph& b, Vertex vb) {
  const Edge pairs[] = {{va, vb}};
  return glue(a, b, pairs);
}

Graph glue_at_edge(const Graph& a, Edge ea, const Graph& b, Edge eb) {
  if (!a.has_edge(ea.first, ea.second) || !b.has_edge(eb.first, eb.second)) {
    throw GraphError("glue_at_edge needs an edge on both sides");
  }
  const Edge pairs[] = {{ea.first, eb.first}, {ea.second, eb.second}};
  return glue(a, b, pairs);
}

Graph gen_random(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace evenhole
