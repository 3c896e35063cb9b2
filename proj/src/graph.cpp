#include "evenhole/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace evenhole {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw GraphError("label count " + std::to_string(labels.size()) +
                     " does not match vertex count " + std::to_string(n));
  }
  Graph g;
  g.adjacency_.resize(n);
  g.matrix_.assign(n * n, 0);
  g.labels_ = std::move(labels);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." +
                       std::to_string(static_cast<long>(n) - 1));
    }
    if (u == v) {
      throw GraphError("self-loop at vertex " + std::to_string(u));
    }
    auto& cell = g.matrix_[static_cast<std::size_t>(u) * n + v];
    if (cell != 0) {
      ++g.duplicate_edges_;
      continue;
    }
    cell = 1;
    g.matrix_[static_cast<std::size_t>(v) * n + u] = 1;
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
    ++g.edge_count_;
  }
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; static_cast<std::size_t>(u) < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_.at(v);
}

std::size_t Graph::min_degree() const {
  std::size_t best = 0;
  bool first = true;
  for (const auto& row : adjacency_) {
    if (first || row.size() < best) best = row.size();
    first = false;
  }
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& row : adjacency_) best = std::max(best, row.size());
  return best;
}

bool is_anticomplete(const Graph& g, std::span<const Vertex> a,
                     std::span<const Vertex> b) {
  for (Vertex x : a) {
    if (!g.contains(x)) throw GraphError("vertex out of range");
    for (Vertex y : b) {
      if (!g.contains(y)) throw GraphError("vertex out of range");
      if (x == y) {
        throw GraphError("anticompleteness needs disjoint sets; vertex " +
                         std::to_string(x) + " is in both");
      }
    }
  }
  for (Vertex x : a) {
    for (Vertex y : b) {
      if (g.has_edge(x, y)) return false;
    }
  }
  return true;
}

VertexList degree2_vertices(const Graph& g) {
  VertexList out;
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v) {
    if (g.degree(v) == 2) out.push_back(v);
  }
  return out;
}

namespace {

// Labels each vertex with a component id; removed vertices get -1.
std::size_t label_components(const Graph& g, std::vector<int>& comp,
                             std::span<const Vertex> removed) {
  comp.assign(g.order(), -2);
  for (Vertex r : removed) comp.at(r) = -1;
  std::size_t count = 0;
  VertexList stack;
  for (Vertex s = 0; static_cast<std::size_t>(s) < g.order(); ++s) {
    if (comp[s] != -2) continue;
    comp[s] = static_cast<int>(count);
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (comp[w] == -2) {
          comp[w] = static_cast<int>(count);
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return count;
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) {
    throw GraphError(std::string(what) +
                     " requires a connected graph; split into components first");
  }
}

}  // namespace

std::vector<VertexList> connected_components(const Graph& g) {
  std::vector<int> comp;
  std::size_t count = label_components(g, comp, {});
  std::vector<VertexList> out(count);
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v) {
    out[comp[v]].push_back(v);
  }
  return out;
}

bool is_connected(const Graph& g) {
  std::vector<int> comp;
  return label_components(g, comp, {}) <= 1;
}

std::size_t components_without(const Graph& g, std::span<const Vertex> removed) {
  std::vector<int> comp;
  return label_components(g, comp, removed);
}

VertexList k1_cuts(const Graph& g) {
  require_connected(g, "k1_cuts");
  const std::size_t n = g.order();
  VertexList out;
  if (n < 3) return out;

  // Iterative lowpoint DFS rooted at 0.
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_child(n, 0);
  std::vector<bool> is_cut(n, false);
  int timer = 0;
  int root_children = 0;
  VertexList stack{0};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Vertex u = stack.back();
    const auto& nbrs = g.neighbors(u);
    if (next_child[u] < nbrs.size()) {
      Vertex w = nbrs[next_child[u]++];
      if (disc[w] == -1) {
        parent[w] = u;
        disc[w] = low[w] = timer++;
        if (u == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    Vertex p = parent[u];
    if (p >= 0) {
      low[p] = std::min(low[p], low[u]);
      if (p != 0 && low[u] >= disc[p]) is_cut[p] = true;
    }
  }
  if (root_children > 1) is_cut[0] = true;
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

std::vector<Edge> k2_cuts(const Graph& g) {
  require_connected(g, "k2_cuts");
  std::vector<Edge> out;
  for (const auto& [u, v] : g.edges()) {
    const Vertex removed[] = {u, v};
    if (components_without(g, removed) > 1) out.emplace_back(u, v);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  InducedSubgraph out;
  out.from_parent.assign(g.order(), -1);
  VertexList sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    if (!g.contains(v)) throw GraphError("subset vertex out of range");
    out.from_parent[v] = static_cast<int>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : out.to_parent) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && out.from_parent[w] >= 0) {
        edges.emplace_back(out.from_parent[v], out.from_parent[w]);
      }
    }
  }
  std::vector<std::string> labels;
  labels.reserve(out.to_parent.size());
  for (Vertex v : out.to_parent) labels.push_back(g.label(v));
  out.graph = Graph::from_edges(out.to_parent.size(), edges, std::move(labels));
  return out;
}

std::string to_string(CutKind kind) {
  switch (kind) {
    case CutKind::Degree2Vertex:
      return "degree2_vertex";
    case CutKind::K1Cut:
      return "k1_cut";
    case CutKind::K2Cut:
      return "k2_cut";
  }
  return "unknown";
}

std::optional<CutKind> cut_kind_from_string(const std::string& s) {
  if (s == "degree2_vertex") return CutKind::Degree2Vertex;
  if (s == "k1_cut") return CutKind::K1Cut;
  if (s == "k2_cut") return CutKind::K2Cut;
  return std::nullopt;
}

bool validate_certificate(const Graph& g, const CutCertificate& cert) {
  for (Vertex v : cert.vertices) {
    if (!g.contains(v)) return false;
  }
  switch (cert.kind) {
    case CutKind::Degree2Vertex:
      return cert.vertices.size() == 1 && g.degree(cert.vertices[0]) <= 2;
    case CutKind::K1Cut:
      return cert.vertices.size() == 1 &&
             components_without(g, cert.vertices) > components_without(g, {});
    case CutKind::K2Cut:
      return cert.vertices.size() == 2 &&
             g.has_edge(cert.vertices[0], cert.vertices[1]) &&
             components_without(g, cert.vertices) > components_without(g, {});
  }
  return false;
}

std::optional<CutCertificate> find_cut_certificate(const Graph& g) {
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v) {
    if (g.degree(v) <= 2) return CutCertificate{CutKind::Degree2Vertex, {v}};
  }
  if (auto cuts = k1_cuts(g); !cuts.empty()) {
    return CutCertificate{CutKind::K1Cut, {cuts.front()}};
  }
  if (auto cuts = k2_cuts(g); !cuts.empty()) {
    return CutCertificate{CutKind::K2Cut, {cuts.front().first, cuts.front().second}};
  }
  return std::nullopt;
}

}  // namespace evenhole
