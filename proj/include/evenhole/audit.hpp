#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evenhole/cycles.hpp"
#include "evenhole/graph.hpp"
#include "evenhole/hole.hpp"
#include "evenhole/jumps.hpp"

namespace evenhole {

/// Lemma identifiers used in findings and reports.
namespace lemma {
inline constexpr const char* kTheorem1 = "theorem1";
inline constexpr const char* kThetaEars = "theta_ears";
inline constexpr const char* kThreeVertexPath = "three_vertex_path";
inline constexpr const char* kTypeEEnds = "type_e_ends";
inline constexpr const char* kShortJumpLengths = "short_jump_lengths";
inline constexpr const char* kParallelCrossing = "parallel_crossing";
inline constexpr const char* kLocalJump = "local_jump";
inline constexpr const char* kFivePathS = "five_path_s";
inline constexpr const char* kAnticompleteJumps = "anticomplete_jumps";
inline constexpr const char* kClaimSNonEmpty = "claim_s_nonempty";
inline constexpr const char* kClaimSNot2 = "claim_s_not_2";
inline constexpr const char* kClaimSNot3 = "claim_s_not_3";
inline constexpr const char* kClaimNoDistance2 = "claim_no_distance_2";
inline constexpr const char* kClaimNoDistance3 = "claim_no_distance_3";
}  // namespace lemma

struct WitnessPart {
  std::string role;
  VertexList vertices;

  friend bool operator==(const WitnessPart&, const WitnessPart&) = default;
};

struct AuditFinding {
  std::string lemma;
  std::string graph_id;
  Status status = Status::Vacuous;
  // Set when the graph lies outside the class the statement is about; the
  // outcome is then recorded but carries no weight.
  bool informational = false;
  std::vector<WitnessPart> witness;
  std::string note;

  friend bool operator==(const AuditFinding&, const AuditFinding&) = default;
};

struct AuditConfig {
  int ell = 4;
  JumpSearchOptions jumps;
  bool include_short_ear_thetas = true;
};

/// Per-graph cache of the membership verdict, cut structure, holes and jumps
/// shared by all audits of that graph.
class AuditSubject {
 public:
  AuditSubject(const Graph& g, std::string id, AuditConfig config = {});

  const Graph& graph() const { return g_; }
  const std::string& id() const { return id_; }
  const AuditConfig& config() const { return config_; }

  const MembershipVerdict& membership();
  bool member() { return membership().is_member; }

  /// Empty when the graph is connected, has minimum degree >= 3, and has
  /// neither a K1-cut nor a K2-cut; otherwise the reason it fails.
  const std::string& cut_hypothesis_failure();
  bool no_cut_hypothesis() { return cut_hypothesis_failure().empty(); }

  const std::vector<Hole>& holes();
  const JumpEnumeration& jumps(const Hole& c);

 private:
  const Graph& g_;
  std::string id_;
  AuditConfig config_;
  std::optional<MembershipVerdict> membership_;
  std::optional<std::string> hypothesis_;
  std::optional<std::vector<Hole>> holes_;
  std::vector<std::pair<Hole, JumpEnumeration>> jumps_;
};

AuditFinding audit_theorem1(AuditSubject& s);
std::vector<AuditFinding> audit_theta_ears(AuditSubject& s);
std::vector<AuditFinding> audit_three_vertex_path(AuditSubject& s);
std::vector<AuditFinding> audit_type_e_ends(AuditSubject& s);
std::vector<AuditFinding> audit_short_jump_lengths(AuditSubject& s);
std::vector<AuditFinding> audit_parallel_crossing(AuditSubject& s);
std::vector<AuditFinding> audit_local_jump_lemma(AuditSubject& s);
std::vector<AuditFinding> audit_five_path_s(AuditSubject& s);
std::vector<AuditFinding> audit_anticomplete_jumps(AuditSubject& s);

/// Statement-level checks for one 8-hole: S non-empty, |S| != 2, |S| != 3,
/// and no short jump with ends at hole distance 2 or 3. `informational` is
/// copied into every finding.
std::vector<AuditFinding> check_section_claims(const Graph& g, const Hole& c,
                                               const JumpEnumeration& jumps,
                                               const std::string& graph_id,
                                               bool informational);

/// Gated claim checks: run only for members without any cut certificate.
std::vector<AuditFinding> audit_section_claims(AuditSubject& s);

/// Five-vertex-path condition on one hole: every five consecutive hole
/// vertices have a middle vertex in `end_set`. Returns the first failing
/// path. Throws GraphError for holes shorter than five.
std::optional<VertexList> five_path_gap(const Hole& c, const VertexList& end_set);

/// Every audit above, in a fixed order.
std::vector<AuditFinding> run_all_audits(AuditSubject& s);

/// Re-validates a VIOLATION witness from raw adjacency. Returns true for
/// findings of other statuses.
bool recheck_witness(const Graph& g, const AuditFinding& f, int ell = 4);

}  // namespace evenhole
