#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "evenhole/graph.hpp"

namespace evenhole {

Graph gen_cycle(std::size_t n);
Graph gen_path(std::size_t n);
Graph gen_complete(std::size_t n);
Graph gen_petersen();

/// Cubic graph from LCF notation: a Hamiltonian cycle 0..n-1 plus the chords
/// i -> i + jumps[i mod |jumps|].
Graph gen_lcf(std::size_t n, std::span<const int> jumps);

/// The (3,8)-cage on 30 vertices, LCF [-13,-9,7,-7,9,13]^5.
Graph gen_tutte_coxeter();

/// Generalized Petersen graph GP(n, k).
Graph gen_generalized_petersen(std::size_t n, std::size_t k);

/// Hubs 0 and 1 joined by ears of lengths a, b, c (any order; at most one
/// equal to 1). Interior vertices are numbered ear by ear.
Graph gen_theta(std::size_t a, std::size_t b, std::size_t c);

/// Replaces edge i of base.edges() by a path of length lengths[i] (1 keeps
/// the edge). New vertices are appended after the base vertices.
Graph gen_subdivision(const Graph& base, std::span<const std::size_t> lengths);

/// Disjoint union with b's vertices shifted after a's.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Identifies vertex `va` of a with vertex `vb` of b.
Graph glue_at_vertex(const Graph& a, Vertex va, const Graph& b, Vertex vb);

/// Identifies edge ea of a with edge eb of b (ea.first with eb.first).
Graph glue_at_edge(const Graph& a, Edge ea, const Graph& b, Edge eb);

/// G(n, p) with a caller-supplied engine.
Graph gen_random(std::size_t n, double p, std::mt19937_64& rng);

}  // namespace evenhole
