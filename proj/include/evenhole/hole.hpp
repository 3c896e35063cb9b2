#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "evenhole/graph.hpp"

namespace evenhole {

enum class Parity { Even, Odd };

/// An induced cycle of length at least four, stored in canonical rotation:
/// the minimum vertex first, followed by the direction whose second vertex is
/// smaller.
class Hole {
 public:
  Hole() = default;

  /// Canonicalizes `cycle` without consulting any graph. Throws GraphError if
  /// the sequence has fewer than three vertices or repeats a vertex.
  static Hole from_cycle(std::span<const Vertex> cycle);

  /// Canonicalizes and checks the hole conditions against g: length >= 4,
  /// consecutive vertices adjacent, no chords.
  static Hole validated(const Graph& g, std::span<const Vertex> cycle);

  const VertexList& vertices() const { return vertices_; }
  std::size_t length() const { return vertices_.size(); }
  Parity parity() const { return length() % 2 == 0 ? Parity::Even : Parity::Odd; }
  bool is_even() const { return parity() == Parity::Even; }

  bool contains(Vertex v) const { return position(v).has_value(); }
  std::optional<std::size_t> position(Vertex v) const;

  /// Vertex at position i (mod length).
  Vertex at(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  /// Whether u and v are consecutive on the cycle.
  bool consecutive(Vertex u, Vertex v) const;

  friend bool operator==(const Hole&, const Hole&) = default;
  friend auto operator<=>(const Hole& a, const Hole& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return a.vertices_ <=> b.vertices_;
  }

 private:
  explicit Hole(VertexList vertices) : vertices_(std::move(vertices)) {}
  VertexList vertices_;
};

/// True iff `cycle` is an induced cycle of g (any length >= 3).
bool is_induced_cycle(const Graph& g, std::span<const Vertex> cycle);

/// Shorter arc length between s and t along the hole.
std::size_t cycle_distance(const Hole& c, Vertex s, Vertex t);

}  // namespace evenhole
