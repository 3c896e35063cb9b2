#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evenhole/audit.hpp"
#include "evenhole/coloring.hpp"
#include "evenhole/cycles.hpp"
#include "evenhole/graph.hpp"
#include "evenhole/jumps.hpp"

namespace evenhole {

inline constexpr const char* kSchemaVersion = "1";

struct MembershipEntry {
  int ell = 4;
  std::optional<std::size_t> girth;
  bool member = false;
  WitnessKind witness_kind = WitnessKind::None;
  VertexList witness;

  friend bool operator==(const MembershipEntry&, const MembershipEntry&) = default;
};

struct ColoringEntry {
  bool success = false;
  int palette = 0;
  std::vector<int> colors;
  bool stuck_without_cut = false;
  std::optional<ColorFailure> failure;
  DecompositionTrace trace;

  friend bool operator==(const ColoringEntry&, const ColoringEntry&) = default;
};

struct JumpEntry {
  VertexList path;
  JumpKind kind = JumpKind::ShortJump;
  ShortType short_type = ShortType::NotApplicable;
  Vertex across_vertex = -1;
  VertexList across;

  friend bool operator==(const JumpEntry&, const JumpEntry&) = default;
};

struct HoleEntry {
  VertexList hole;
  std::optional<std::vector<JumpEntry>> jumps;  // absent when jumps were not requested
  std::optional<VertexList> end_set;
  bool truncated = false;

  friend bool operator==(const HoleEntry&, const HoleEntry&) = default;
};

struct ThetaEntry {
  Edge hubs{};
  std::vector<VertexList> ears;
  bool induced = false;

  friend bool operator==(const ThetaEntry&, const ThetaEntry&) = default;
};

struct ErrorEntry {
  std::string message;
  std::size_t line = 0;
  std::size_t offset = 0;

  friend bool operator==(const ErrorEntry&, const ErrorEntry&) = default;
};

/// One input graph. Absent optionals were not computed; `error` replaces
/// everything else for inputs that failed to parse.
struct GraphRecord {
  std::string id;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string graph6;
  std::size_t duplicate_edges = 0;
  std::vector<std::string> labels;  // only for graphs with custom labels
  std::optional<MembershipEntry> membership;
  bool certificate_searched = false;
  std::optional<CutCertificate> certificate;  // null when searched and none found
  std::optional<ColoringEntry> coloring;
  std::vector<AuditFinding> findings;
  std::optional<std::vector<HoleEntry>> holes;
  std::optional<std::vector<ThetaEntry>> thetas;
  std::optional<ErrorEntry> error;

  friend bool operator==(const GraphRecord&, const GraphRecord&) = default;
};

struct StatusCounts {
  std::size_t pass = 0;
  std::size_t violation = 0;
  std::size_t vacuous = 0;
  std::size_t truncated = 0;
  std::size_t informational = 0;

  friend bool operator==(const StatusCounts&, const StatusCounts&) = default;
};

struct Summary {
  std::size_t graphs = 0;
  std::size_t members = 0;
  std::size_t parse_errors = 0;
  std::size_t violations = 0;  // non-informational VIOLATION findings
  std::size_t chromatic_excess = 0;
  std::map<std::string, StatusCounts> lemmas;

  friend bool operator==(const Summary&, const Summary&) = default;
};

struct Report {
  std::string schema_version = kSchemaVersion;
  std::vector<GraphRecord> graphs;
  std::optional<Summary> summary;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Fills id, sizes, graph6, duplicate count and labels.
GraphRecord base_record(const Graph& g, std::string id);
GraphRecord error_record(std::string id, const std::string& message, std::size_t line,
                         std::size_t offset);

MembershipEntry membership_entry(const MembershipVerdict& v);
ColoringEntry coloring_entry(const Color3Result& r);
JumpEntry jump_entry(const JumpRecord& j);
HoleEntry hole_entry(const Hole& c, const JumpEnumeration* jumps);
ThetaEntry theta_entry(const ThetaSubgraph& h);
void set_certificate(GraphRecord& r, const std::optional<CutCertificate>& cert);

/// Tallies records into a summary.
Summary summarize(const std::vector<GraphRecord>& records);

/// Whole report as one JSON document.
std::string emit_report(const Report& report, bool pretty = false);
Report parse_report(const std::string& text);

/// One line of a JSON-Lines stream, without the trailing newline.
std::string emit_record_line(const GraphRecord& record);
std::string emit_summary_line(const Summary& summary);
GraphRecord parse_record(const std::string& text);

/// Reads a JSON-Lines stream produced by the emitters above.
Report parse_report_lines(const std::string& text);

std::string trace_to_json(const DecompositionTrace& trace);
DecompositionTrace trace_from_json(const std::string& text);

}  // namespace evenhole
