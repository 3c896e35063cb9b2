#include <doctest.h>

#include <json.hpp>

#include "evenhole/generators.hpp"
#include "evenhole/graph_io.hpp"
#include "evenhole/report.hpp"
#include "evenhole/search.hpp"

using namespace evenhole;

namespace {

GraphRecord full_record(const Graph& g, const std::string& id) {
  GraphRecord r = audit_record(g, id, {});
  r.coloring = coloring_entry(color3(g));
  r.holes.emplace();
  for (const auto& c : enumerate_holes(g)) {
    const auto e = enumerate_jumps(g, c);
    r.holes->push_back(hole_entry(c, &e));
  }
  r.thetas.emplace();
  for (const auto& h : find_theta_subgraphs(g, true)) r.thetas->push_back(theta_entry(h));
  return r;
}

}  // namespace

TEST_CASE("membership record round-trips through a JSON parser") {
  GraphRecord r = base_record(gen_theta(4, 4, 4), "t");
  r.membership = membership_entry(is_member(gen_theta(4, 4, 4), 4));
  const std::string line = emit_record_line(r);
  const auto j = nlohmann::json::parse(line);
  CHECK(j["membership"]["member"] == true);
  CHECK(j["membership"]["girth"] == 8);
  CHECK(j["schema_version"] == "1");
  CHECK(parse_record(line) == r);
}

TEST_CASE("empty report skeleton") {
  const auto j = nlohmann::json::parse(emit_report(Report{}));
  CHECK(j["graphs"].is_array());
  CHECK(j["graphs"].empty());
  CHECK(j["schema_version"] == "1");
  CHECK(parse_report(emit_report(Report{})) == Report{});
}

TEST_CASE("full records round-trip losslessly") {
  Report report;
  for (const Graph& g : {gen_theta(4, 4, 4), gen_petersen(), gen_complete(4), gen_cycle(8),
                         glue_at_vertex(gen_theta(9, 4, 4), 0, gen_cycle(8), 0)}) {
    report.graphs.push_back(full_record(g, "g" + std::to_string(report.graphs.size())));
  }
  report.graphs.push_back(error_record("bad", "nonzero padding bits", 3, 5));
  report.summary = summarize(report.graphs);
  for (bool pretty : {false, true}) {
    const std::string text = emit_report(report, pretty);
    CHECK(parse_report(text) == report);
    CHECK(emit_report(parse_report(text), pretty) == text);
  }
  std::string lines;
  for (const auto& r : report.graphs) lines += emit_record_line(r) + "\n";
  lines += emit_summary_line(*report.summary) + "\n";
  CHECK(parse_report_lines(lines) == report);
}

TEST_CASE("labels and duplicate counts are kept") {
  std::vector<Edge> edges{{0, 1}, {1, 0}, {1, 2}};
  const Graph g = Graph::from_edges(3, edges, {"x", "y", "z"});
  const GraphRecord r = base_record(g, "lab");
  CHECK(r.labels == std::vector<std::string>{"x", "y", "z"});
  CHECK(r.duplicate_edges == 1);
  CHECK(parse_record(emit_record_line(r)) == r);
}

TEST_CASE("summary counts") {
  std::vector<GraphRecord> records;
  records.push_back(audit_record(gen_theta(4, 4, 4), "a", {}));
  records.push_back(audit_record(gen_petersen(), "b", {}));
  records.push_back(error_record("c", "oops", 1, 0));
  GraphRecord k4 = base_record(gen_complete(4), "d");
  k4.coloring = coloring_entry(color3(gen_complete(4)));
  records.push_back(k4);
  const Summary s = summarize(records);
  CHECK(s.graphs == 4);
  CHECK(s.members == 1);
  CHECK(s.parse_errors == 1);
  CHECK(s.chromatic_excess == 1);
  CHECK(s.violations == 0);
  CHECK(s.lemmas.at("theorem1").pass == 1);
  CHECK(s.lemmas.at("theorem1").vacuous == 1);
}

TEST_CASE("malformed reports are rejected") {
  CHECK_THROWS_AS(parse_report("{"), ParseError);
  CHECK_THROWS_AS(parse_report(R"({"schema_version":"2","graphs":[]})"), ParseError);
  CHECK_THROWS_AS(parse_record(R"({"schema_version":"1","id":"x"})"), ParseError);
  CHECK_THROWS_AS(trace_from_json(R"([{"kind":"base_case","vertices":[],"children":[0]}])"),
                  ParseError);
  CHECK_THROWS_AS(trace_from_json(R"([{"kind":"teleport","vertices":[],"children":[]}])"),
                  ParseError);
}
