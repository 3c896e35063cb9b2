#include <doctest.h>

#include <sstream>

#include "evenhole/audit.hpp"
#include "evenhole/generators.hpp"
#include "evenhole/graph_io.hpp"
#include "evenhole/search.hpp"
#include "support.hpp"

using namespace evenhole;
using namespace evenhole::testing;

namespace {

const VertexList kC8{0, 1, 2, 3, 4, 5, 6, 7};

Graph c8_plus(std::size_t extra, std::vector<Edge> edges) {
  for (Vertex i = 0; i < 8; ++i) edges.emplace_back(i, (i + 1) % 8);
  return Graph::from_edges(8 + extra, edges);
}

Graph k33() {
  return from_pairs(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

bool all_status(const std::vector<AuditFinding>& fs, Status s) {
  return !fs.empty() &&
         std::all_of(fs.begin(), fs.end(), [&](const AuditFinding& f) { return f.status == s; });
}

}  // namespace

TEST_CASE("theorem 1 audit") {
  {
    const Graph g = gen_theta(4, 4, 4);
    AuditSubject s(g, "theta");
    const auto f = audit_theorem1(s);
    CHECK(f.status == Status::Pass);
    REQUIRE(f.witness.size() == 1);
    CHECK(f.witness[0].role == "degree2_vertex");
  }
  {
    const Graph g = gen_cycle(8);
    AuditSubject s(g, "c8");
    CHECK(audit_theorem1(s).status == Status::Pass);
  }
  {
    const Graph g = gen_tutte_coxeter();
    AuditSubject s(g, "tc");
    const auto f = audit_theorem1(s);
    CHECK(f.status == Status::Vacuous);
    REQUIRE(f.witness.size() == 1);
    CHECK(f.witness[0].role == "long_even_hole");
    CHECK(f.witness[0].vertices.size() >= 10);
  }
  {
    // Each component of a disconnected member gets its own certificate.
    const Graph g = disjoint_union(gen_cycle(8), gen_theta(4, 4, 4));
    AuditSubject s(g, "union");
    const auto f = audit_theorem1(s);
    CHECK(f.status == Status::Pass);
    CHECK(f.witness.size() == 2);
  }
}

TEST_CASE("theorem 1 audit catches a cut-free member of H_2") {
  // K3,3 has girth 4 and its only holes are 4-cycles, so it lies in H_2, yet
  // it is cubic and 3-connected.
  const Graph g = k33();
  AuditConfig cfg;
  cfg.ell = 2;
  AuditSubject s(g, "k33", cfg);
  REQUIRE(s.member());
  const auto f = audit_theorem1(s);
  CHECK(f.status == Status::Violation);
  CHECK(recheck_witness(g, f, 2));
  CHECK_FALSE(recheck_witness(g, f, 4));
  AuditFinding tampered = f;
  tampered.witness[0].vertices.pop_back();
  CHECK_FALSE(recheck_witness(g, tampered, 2));
}

TEST_CASE("theta ear audit") {
  const Graph t = gen_theta(4, 4, 4);
  AuditSubject s(t, "t");
  const auto fs = audit_theta_ears(s);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].status == Status::Pass);
  CHECK(fs[0].witness.size() == 3);

  const Graph p = gen_petersen();
  AuditSubject sp(p, "p");
  CHECK(all_status(audit_theta_ears(sp), Status::Vacuous));

  const Graph t177 = gen_theta(1, 7, 7);
  AuditConfig no_short;
  no_short.include_short_ear_thetas = false;
  AuditSubject s177(t177, "t177", no_short);
  const auto skipped = audit_theta_ears(s177);
  CHECK(all_status(skipped, Status::Vacuous));
}

TEST_CASE("hypothesis-gated audits are vacuous on members") {
  for (const Graph& g : {gen_theta(4, 4, 4), gen_cycle(8), gen_theta(9, 4, 4)}) {
    AuditSubject s(g, "m");
    CHECK(all_status(audit_three_vertex_path(s), Status::Vacuous));
    CHECK(all_status(audit_parallel_crossing(s), Status::Vacuous));
    CHECK(all_status(audit_local_jump_lemma(s), Status::Vacuous));
    CHECK(all_status(audit_five_path_s(s), Status::Vacuous));
    CHECK(all_status(audit_section_claims(s), Status::Vacuous));
  }
}

TEST_CASE("out-of-class probes are informational") {
  const Graph p = gen_petersen();
  AuditSubject s(p, "petersen");
  const auto fs = audit_three_vertex_path(s);
  REQUIRE_FALSE(fs.empty());
  for (const auto& f : fs) {
    CHECK(f.informational);
    CHECK(f.status != Status::Vacuous);
    CHECK(f.witness.at(0).role == "hole");
  }
  for (const auto& f : audit_parallel_crossing(s)) {
    if (f.status != Status::Vacuous) CHECK(f.informational);
  }
  // The 5-cycle holes of the Petersen graph have no outside vertex with two
  // neighbours on them, so they all qualify.
  std::size_t five = 0;
  for (const auto& f : fs) five += f.witness[0].vertices.size() == 5;
  CHECK(five == 12);
}

TEST_CASE("type-e ends and short jump lengths on members") {
  const Graph t = gen_theta(4, 4, 4);
  AuditSubject s(t, "t");
  const auto ends = audit_type_e_ends(s);
  CHECK(ends.size() == 3);
  CHECK(all_status(ends, Status::Pass));
  CHECK(all_status(audit_short_jump_lengths(s), Status::Pass));

  const Graph k4 = gen_complete(4);
  AuditSubject sk(k4, "k4");
  CHECK(all_status(audit_type_e_ends(sk), Status::Vacuous));
  CHECK(all_status(audit_short_jump_lengths(sk), Status::Vacuous));
}

TEST_CASE("type-e witnesses re-check from adjacency") {
  // Two type-e short jumps over C8 with different ends: (0,4) and (2,6).
  const Graph g = c8_plus(6, {{0, 8}, {8, 9}, {9, 10}, {10, 4},
                              {2, 11}, {11, 12}, {12, 13}, {13, 6}});
  AuditFinding f;
  f.lemma = lemma::kTypeEEnds;
  f.status = Status::Violation;
  f.witness = {{"hole", kC8}, {"jump", {0, 8, 9, 10, 4}}, {"jump", {2, 11, 12, 13, 6}}};
  CHECK(recheck_witness(g, f));
  f.witness[2].vertices = {0, 8, 9, 10, 4};
  CHECK_FALSE(recheck_witness(g, f));
}

TEST_CASE("five-vertex-path gap") {
  const Hole c = Hole::from_cycle(kC8);
  CHECK(five_path_gap(c, {0, 4}) == VertexList{0, 1, 2, 3, 4});
  CHECK_FALSE(five_path_gap(c, {0, 1, 4, 5}));
  CHECK_THROWS_AS(five_path_gap(Hole::from_cycle(VertexList{0, 1, 2, 3}), {}), GraphError);
}

TEST_CASE("anticomplete jumps") {
  {
    const Graph g = gen_cycle(8);
    AuditSubject s(g, "c8");
    const auto fs = audit_anticomplete_jumps(s);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].status == Status::Pass);
  }
  // A (v1,v3)-short jump and a (v2,v6)-short jump joined by an edge between
  // their interiors. The host cannot be a member.
  const Graph g = c8_plus(6, {{0, 8}, {8, 9}, {9, 10}, {10, 2},
                              {1, 11}, {11, 12}, {12, 13}, {13, 5}, {9, 12}});
  AuditSubject s(g, "probe");
  CHECK_FALSE(s.member());
  const auto fs = audit_anticomplete_jumps(s);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].status == Status::Violation);
  CHECK(fs[0].informational);
  CHECK(recheck_witness(g, fs[0]));
}

TEST_CASE("section claims evaluated directly") {
  // theta(4,4,4) has degree-2 vertices, so the claims carry no weight there;
  // evaluating them still exercises every check.
  const Graph t = gen_theta(4, 4, 4);
  const Hole c = Hole::validated(t, VertexList{0, 2, 3, 4, 1, 7, 6, 5});
  const auto e = enumerate_jumps(t, c);
  const auto fs = check_section_claims(t, c, e, "t", true);
  REQUIRE(fs.size() == 5);
  CHECK(fs[0].lemma == lemma::kClaimSNonEmpty);
  CHECK(fs[0].status == Status::Pass);
  CHECK(fs[1].lemma == lemma::kClaimSNot2);
  CHECK(fs[1].status == Status::Violation);
  CHECK(fs[2].status == Status::Pass);
  CHECK(fs[3].status == Status::Pass);
  CHECK(fs[4].status == Status::Pass);
  for (const auto& f : fs) CHECK(f.informational);
}

TEST_CASE("truncation propagates") {
  const Graph t = gen_theta(4, 4, 4);
  AuditConfig cfg;
  cfg.jumps.interior_cap = 1;
  AuditSubject s(t, "t", cfg);
  CHECK(all_status(audit_type_e_ends(s), Status::Truncated));
  const auto a = audit_anticomplete_jumps(s);
  CHECK(a[0].status == Status::Truncated);
}

TEST_CASE("run_all_audits covers every lemma") {
  const Graph t = gen_theta(4, 4, 4);
  AuditSubject s(t, "t");
  std::set<std::string> lemmas;
  for (const auto& f : run_all_audits(s)) lemmas.insert(f.lemma);
  for (const char* id : {lemma::kTheorem1, lemma::kThetaEars, lemma::kThreeVertexPath,
                         lemma::kTypeEEnds, lemma::kShortJumpLengths, lemma::kParallelCrossing,
                         lemma::kLocalJump, lemma::kFivePathS, lemma::kAnticompleteJumps,
                         lemma::kClaimSNonEmpty}) {
    CHECK(lemmas.count(id) == 1);
  }
}

TEST_CASE("counterexample search") {
  std::ostringstream g6;
  g6 << write_graph6(gen_theta(4, 4, 4)) << "\n" << write_graph6(gen_tutte_coxeter()) << "\n"
     << "not graph6!\n" << write_graph6(gen_cycle(8)) << "\n";
  std::istringstream in(g6.str());
  GraphStream stream(in, GraphFormat::Graph6, "s");
  std::vector<GraphRecord> records;
  const auto summary = search_counterexamples(stream, {}, 2, [&](const GraphRecord& r) {
    records.push_back(r);
  });
  REQUIRE(records.size() == 4);
  CHECK(records[0].id == "s:0");
  CHECK(records[0].membership->member);
  CHECK(records[0].findings.at(0).status == Status::Pass);
  CHECK_FALSE(records[1].membership->member);
  CHECK(records[1].findings.empty());
  CHECK(records[2].error);
  CHECK(records[3].membership->member);
  CHECK(summary.graphs == 4);
  CHECK(summary.members == 2);
  CHECK(summary.parse_errors == 1);
  CHECK(summary.violations == 0);
  CHECK(summary.lemmas.at(lemma::kTheorem1).pass == 2);

  std::istringstream empty("");
  GraphStream none(empty, GraphFormat::Graph6);
  const auto s0 = search_counterexamples(none, {}, 1, [](const GraphRecord&) {});
  CHECK(s0.graphs == 0);
}

TEST_CASE("search dumps a bundle for a cut-free member") {
  AuditConfig cfg;
  cfg.ell = 2;
  const auto r = search_record(k33(), "k33", cfg);
  REQUIRE(r.holes);
  CHECK(r.findings.at(0).status == Status::Violation);
}

TEST_CASE("stream processing is independent of the worker count") {
  std::ostringstream g6;
  for (const auto& g : random_subdivided_members(30, {})) g6 << write_graph6(g) << "\n";
  auto run = [&](std::size_t workers) {
    std::istringstream in(g6.str());
    GraphStream stream(in, GraphFormat::Graph6, "w");
    std::string out;
    process_stream(stream, workers,
                   [](const Graph& g, const std::string& id) { return audit_record(g, id, {}); },
                   [&](const GraphRecord& r) { out += emit_record_line(r) + "\n"; });
    return out;
  };
  CHECK(run(1) == run(4));
}

TEST_CASE("random member corpus") {
  CorpusOptions opts;
  opts.seed = 99;
  const auto a = random_subdivided_members(40, opts);
  const auto b = random_subdivided_members(40, opts);
  REQUIRE(a.size() == 40);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(is_member(a[i], 4).is_member);
    CHECK(is_connected(a[i]));
    CHECK(a[i].order() <= opts.max_order);
  }
}
