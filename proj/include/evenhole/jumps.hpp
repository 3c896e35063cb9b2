#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evenhole/graph.hpp"
#include "evenhole/hole.hpp"

namespace evenhole {

// Classification of an induced path P hanging off a hole C. With ends s, t
// and arcs Q1, Q2 of C between them:
//   ShortJump          s, t non-adjacent; neither arc interior sees P*
//   LocalJumpAcrossOneVertex  exactly one arc interior sees P* and it is a
//                      single vertex c
//   SCTLink            exactly one arc interior sees P*, both arc interiors
//                      have size != 1, and the only vertex of it seeing P* is
//                      the C-neighbour c of an end (that end is reported as s)
//   LocalJumpAcrossSet any other case where exactly one arc interior sees P*
//   EdgeLink           s, t adjacent and C - {s, t} anticomplete to P*
//   GeneralJump        everything else (both arcs see P*, or adjacent ends
//                      with C - {s, t} seeing P*)
enum class JumpKind {
  ShortJump,
  LocalJumpAcrossOneVertex,
  LocalJumpAcrossSet,
  EdgeLink,
  SCTLink,
  GeneralJump,
};

enum class ShortType { NotApplicable, TypeO, TypeE };

std::string to_string(JumpKind kind);
std::string to_string(ShortType type);
std::optional<JumpKind> jump_kind_from_string(const std::string& s);
std::optional<ShortType> short_type_from_string(const std::string& s);

struct JumpRecord {
  Hole hole;
  Edge ends{};            // (s, t)
  VertexList path;        // s, P*, t
  JumpKind kind = JumpKind::GeneralJump;
  ShortType short_type = ShortType::NotApplicable;
  Vertex across_vertex = -1;  // c for LocalJumpAcrossOneVertex and SCTLink
  VertexList across;          // seen arc interior for local jumps and SCT links
  VertexList arc1, arc2;      // Q1, Q2 as s..t sequences; Q1 holds the lower interior vertex

  std::size_t length() const { return path.size() - 1; }
  VertexList interior() const { return VertexList(path.begin() + 1, path.end() - 1); }
  std::size_t arc1_length() const { return arc1.size() - 1; }
  std::size_t arc2_length() const { return arc2.size() - 1; }
  bool has_end(Vertex v) const { return ends.first == v || ends.second == v; }

  friend bool operator==(const JumpRecord&, const JumpRecord&) = default;
};

/// Checks that `path` is a jump over c (|P| >= 2, ends on c, interior off c,
/// induced apart from a possible hole edge between the ends) and classifies it.
/// Throws GraphError otherwise.
JumpRecord classify_jump(const Graph& g, const Hole& c, const VertexList& path);

struct JumpSearchOptions {
  std::size_t interior_cap = 0;        // 0: n - |C|
  std::size_t record_limit = 1000000;  // stop and flag truncation beyond this
};

struct JumpEnumeration {
  std::vector<JumpRecord> jumps;  // sorted by (ends, path)
  bool truncated = false;
};

/// Every jump over c, classified. Throws GraphError when c is not a hole of g.
JumpEnumeration enumerate_jumps(const Graph& g, const Hole& c,
                                const JumpSearchOptions& options = {});

enum class JumpPairRelation { Crossing, Parallel };

std::string to_string(JumpPairRelation r);

/// Crossing iff the four ends are distinct and interleave around c.
JumpPairRelation relation(const Hole& c, const JumpRecord& a, const JumpRecord& b);

/// Ends-only form of relation().
JumpPairRelation relation(const Hole& c, Edge a, Edge b);

struct EndSet {
  Hole hole;
  VertexList vertices;  // ascending
  bool truncated = false;
};

/// Ends of all short jumps over c.
EndSet end_set(const Graph& g, const Hole& c, const JumpSearchOptions& options = {});
EndSet end_set(const Hole& c, const JumpEnumeration& jumps);

}  // namespace evenhole
