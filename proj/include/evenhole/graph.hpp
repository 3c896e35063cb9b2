#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace evenhole {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexList = std::vector<Vertex>;

/// Raised for malformed graph input or violated operation preconditions.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted; an n*n bit matrix backs has_edge. Optional
/// vertex labels follow vertices through induced_subgraph so that results
/// computed on pieces can still name the original vertices.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges are collapsed and
  /// counted (see duplicate_edges()); self-loops and out-of-range endpoints
  /// throw GraphError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }
  bool empty() const { return adjacency_.empty(); }

  const VertexList& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * order() + v] != 0;
  }
  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < order();
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Label of v; the decimal index when no labels were supplied.
  std::string label(Vertex v) const;
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Number of repeated edges dropped during construction.
  std::size_t duplicate_edges() const { return duplicate_edges_; }

  std::size_t min_degree() const;
  std::size_t max_degree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<VertexList> adjacency_;
  std::vector<unsigned char> matrix_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
  std::size_t duplicate_edges_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

/// True iff no edge joins A and B. A and B must be disjoint.
bool is_anticomplete(const Graph& g, std::span<const Vertex> a,
                     std::span<const Vertex> b);

/// Vertices of degree exactly two, ascending.
VertexList degree2_vertices(const Graph& g);

/// Connected components, each sorted, ordered by their minimum vertex.
std::vector<VertexList> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Number of components of g after deleting `removed`.
std::size_t components_without(const Graph& g, std::span<const Vertex> removed);

/// Articulation vertices of a connected graph, ascending.
VertexList k1_cuts(const Graph& g);

/// Edges {u, v} (u < v) whose two ends together disconnect a connected graph.
std::vector<Edge> k2_cuts(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  VertexList to_parent;    // new index -> old index
  std::vector<int> from_parent;  // old index -> new index, -1 if dropped
};

/// G[S]. The vertex order of the result follows ascending order of S.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

enum class CutKind { Degree2Vertex, K1Cut, K2Cut };

std::string to_string(CutKind kind);
std::optional<CutKind> cut_kind_from_string(const std::string& s);

struct CutCertificate {
  CutKind kind = CutKind::Degree2Vertex;
  VertexList vertices;

  friend bool operator==(const CutCertificate&, const CutCertificate&) = default;
};

/// Re-checks a certificate against raw adjacency.
bool validate_certificate(const Graph& g, const CutCertificate& cert);

/// First certificate in priority order: lowest vertex of degree <= 2, then
/// the lowest articulation vertex, then the lexicographically first K2-cut.
/// g must be connected.
std::optional<CutCertificate> find_cut_certificate(const Graph& g);

}  // namespace evenhole
