#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evenhole/graph.hpp"

namespace evenhole {

/// Vertex colouring with colours 0..k-1. Entries of -1 mark uncoloured
/// vertices in partial colourings produced while merging pieces.
struct Coloring {
  std::vector<int> colors;

  /// Palette size: largest colour plus one.
  int palette() const;
  bool complete() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct ColoringCheck {
  bool proper = true;
  std::optional<Edge> violation;  // first offending edge in edge order
};

/// Scans every edge. Throws GraphError if some vertex is uncoloured.
ColoringCheck verify_coloring(const Graph& g, const Coloring& c);

/// Permutes c2's palette so that it agrees with c1 on `shared` (one vertex,
/// or two vertices coloured differently in both), then takes the union.
/// Unmapped colours keep their value when free, otherwise fill the remaining
/// targets in increasing order.
Coloring merge_colorings(const Coloring& c1, const Coloring& c2,
                         std::span<const Vertex> shared);

/// Proper colouring with at most k colours, if one exists. The first vertex
/// in search order gets colour 0 and new colours open one at a time.
std::optional<Coloring> k_coloring(const Graph& g, int k);

struct ChromaticResult {
  int value = 0;            // exact chromatic number when !exceeds_cap
  bool exceeds_cap = false;  // chromatic number > cap
};

inline constexpr std::size_t kDefaultBruteLimit = 24;

/// Exact chromatic number by backtracking, or "> cap". Throws GraphError if
/// the graph has more than `limit` vertices.
ChromaticResult brute_force_chromatic(const Graph& g, int cap,
                                      std::size_t limit = kDefaultBruteLimit);

enum class StepKind { StripDegree2, SplitAtCut, SplitComponents, BaseCase };
enum class BaseMethod { Trivial, Bipartite, Brute };

std::string to_string(StepKind k);
std::string to_string(BaseMethod m);
std::optional<StepKind> step_kind_from_string(const std::string& s);
std::optional<BaseMethod> base_method_from_string(const std::string& s);

/// One node of the decomposition tree. Vertex indices refer to the input
/// graph.
struct TraceStep {
  StepKind kind = StepKind::BaseCase;
  VertexList vertices;                 // vertex set handled at this node
  Vertex stripped = -1;                // StripDegree2
  std::optional<CutCertificate> cut;   // SplitAtCut
  std::vector<VertexList> pieces;      // SplitAtCut / SplitComponents
  std::vector<bool> piece_in_class;    // filled when membership tracking is on
  BaseMethod method = BaseMethod::Trivial;  // BaseCase
  bool stuck_without_cut = false;      // BaseCase reached with no cut available
  std::string note;
  std::vector<std::size_t> children;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct DecompositionTrace {
  std::vector<TraceStep> steps;  // steps[0] is the root

  /// Leaves' vertex sets.
  std::vector<VertexList> leaves() const;
  bool stuck_without_cut() const;

  friend bool operator==(const DecompositionTrace&, const DecompositionTrace&) = default;
};

struct ColorOptions {
  std::size_t base_threshold = 8;
  std::size_t brute_limit = kDefaultBruteLimit;
  int membership_ell = 0;  // > 0: record whether each split piece is in H_l
};

struct ColorFailure {
  VertexList leaf;
  std::optional<int> chromatic;  // exact value on the leaf when computed
  std::string reason;

  friend bool operator==(const ColorFailure&, const ColorFailure&) = default;
};

struct Color3Result {
  bool success = false;
  Coloring coloring;  // complete and proper when success
  DecompositionTrace trace;
  std::optional<ColorFailure> failure;
};

/// Strips vertices of degree <= 2, splits at K1/K2 cuts, and brute-forces
/// small or cut-free residues.
Color3Result color3(const Graph& g, const ColorOptions& options = {});

/// Recomputes the colouring from a trace without searching for cuts.
/// Throws GraphError when the trace is inconsistent with g.
Coloring replay_trace(const Graph& g, const DecompositionTrace& trace,
                      const ColorOptions& options = {});

}  // namespace evenhole
