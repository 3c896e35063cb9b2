#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evenhole/graph.hpp"
#include "evenhole/hole.hpp"

namespace evenhole {

/// Length of a shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

/// Vertex sequence of one shortest cycle (empty for forests).
VertexList shortest_cycle(const Graph& g);

/// Visits every induced cycle with length in [min_len, max_len] exactly once,
/// in canonical form. The visitor returns false to stop the search.
/// Triangles are reported when min_len <= 3.
void for_each_induced_cycle(const Graph& g, std::size_t min_len,
                            std::size_t max_len,
                            const std::function<bool(const VertexList&)>& visit);

/// All holes with length in [min_len, max_len] sorted by (length, vertices).
/// max_len == 0 means n.
std::vector<Hole> enumerate_holes(const Graph& g, std::size_t min_len = 4,
                                  std::size_t max_len = 0);

enum class WitnessKind {
  None,
  Acyclic,        // forest: girth is infinite
  GirthTooSmall,  // witness is a shortest cycle
  GirthTooLarge,  // witness is a shortest cycle
  LongEvenHole,   // witness is a shortest even hole longer than 2l
};

std::string to_string(WitnessKind kind);
std::optional<WitnessKind> witness_kind_from_string(const std::string& s);

/// Class H_l: girth exactly 2l and no even hole longer than 2l.
struct MembershipVerdict {
  int ell = 4;
  std::optional<std::size_t> girth;
  bool is_member = false;
  WitnessKind witness_kind = WitnessKind::None;
  VertexList witness;
};

MembershipVerdict is_member(const Graph& g, int ell = 4);

/// Two hubs joined by three internally disjoint paths. Each ear runs from
/// hubs.first to hubs.second; ears are ordered by (length, vertices).
struct ThetaSubgraph {
  Edge hubs{};
  std::array<VertexList, 3> ears;
  bool induced = false;

  std::array<std::size_t, 3> ear_lengths() const;
  VertexList vertex_set() const;
};

/// Builds a theta from three hub-to-hub paths, normalizing orientation and
/// ear order. Throws GraphError unless the paths form a theta in g.
ThetaSubgraph make_theta(const Graph& g, std::array<VertexList, 3> ears);

/// Theta subgraphs of g, deduplicated by vertex set and sorted.
///
/// With induced_only every induced theta is listed: each one is an induced
/// cycle plus a path whose interior avoids the cycle's neighbourhood except at
/// its two ends. Otherwise one theta per hub pair with three internally
/// disjoint paths is returned (found by unit-capacity augmentation along
/// shortest paths), with `induced` set when that particular theta happens to
/// be induced.
std::vector<ThetaSubgraph> find_theta_subgraphs(const Graph& g, bool induced_only);

enum class Status { Pass, Violation, Vacuous, Truncated };

std::string to_string(Status s);
std::optional<Status> status_from_string(const std::string& s);

struct EarLemmaResult {
  Status status = Status::Pass;
  int lemma_case = 1;  // 1: all three cycles even; 2: some cycle odd
  std::string detail;
  std::array<std::size_t, 3> ear_lengths{};
};

/// Ear-length lemma for induced thetas in H_l. Throws GraphError when the
/// theta is not induced.
EarLemmaResult check_theta_ear_lemma(const ThetaSubgraph& h, int ell);

}  // namespace evenhole
