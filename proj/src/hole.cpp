#include "evenhole/hole.hpp"

#include <algorithm>
#include <set>

namespace evenhole {

Hole Hole::from_cycle(std::span<const Vertex> cycle) {
  if (cycle.size() < 3) throw GraphError("a cycle needs at least three vertices");
  if (std::set<Vertex>(cycle.begin(), cycle.end()).size() != cycle.size()) {
    throw GraphError("cycle repeats a vertex");
  }
  const std::size_t len = cycle.size();
  const auto min_it = std::min_element(cycle.begin(), cycle.end());
  const std::size_t start = static_cast<std::size_t>(min_it - cycle.begin());
  VertexList forward, backward;
  forward.reserve(len);
  backward.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    forward.push_back(cycle[(start + i) % len]);
    backward.push_back(cycle[(start + len - i) % len]);
  }
  return Hole(std::min(forward, backward));
}

Hole Hole::validated(const Graph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 4) {
    throw GraphError("a hole has length at least 4, got " +
                     std::to_string(cycle.size()));
  }
  for (Vertex v : cycle) {
    if (!g.contains(v)) throw GraphError("hole vertex out of range");
  }
  Hole h = from_cycle(cycle);
  if (!is_induced_cycle(g, h.vertices())) {
    throw GraphError("vertex sequence is not an induced cycle of the graph");
  }
  return h;
}

std::optional<std::size_t> Hole::position(Vertex v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Hole::consecutive(Vertex u, Vertex v) const {
  auto pu = position(u);
  auto pv = position(v);
  if (!pu || !pv) return false;
  const std::size_t len = length();
  return (*pu + 1) % len == *pv || (*pv + 1) % len == *pu;
}

bool is_induced_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t len = cycle.size();
  if (len < 3) return false;
  for (std::size_t i = 0; i < len; ++i) {
    if (!g.contains(cycle[i])) return false;
    for (std::size_t j = i + 1; j < len; ++j) {
      if (cycle[i] == cycle[j]) return false;
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

std::size_t cycle_distance(const Hole& c, Vertex s, Vertex t) {
  auto ps = c.position(s);
  auto pt = c.position(t);
  if (!ps || !pt) {
    throw GraphError("vertex " + std::to_string(ps ? t : s) + " is not on the hole");
  }
  const std::size_t d = *ps > *pt ? *ps - *pt : *pt - *ps;
  return std::min(d, c.length() - d);
}

}  // namespace evenhole
