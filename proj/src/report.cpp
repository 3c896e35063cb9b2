#include "evenhole/report.hpp"

#include <sstream>

#include <json.hpp>

#include "evenhole/graph_io.hpp"

using nlohmann::json;

namespace evenhole {

namespace {

template <typename E, typename F>
E enum_from(const json& j, F parse, const char* what) {
  auto v = parse(j.get<std::string>());
  if (!v) throw ParseError(std::string("unknown ") + what + " \"" + j.get<std::string>() + "\"", 0);
  return *v;
}

json edge_json(Edge e) { return json::array({e.first, e.second}); }
Edge edge_from(const json& j) { return {j.at(0).get<Vertex>(), j.at(1).get<Vertex>()}; }

json membership_json(const MembershipEntry& m) {
  json j;
  j["ell"] = m.ell;
  j["girth"] = m.girth ? json(*m.girth) : json(nullptr);
  j["member"] = m.member;
  j["witness_kind"] = to_string(m.witness_kind);
  j["witness"] = m.witness;
  return j;
}

MembershipEntry membership_from(const json& j) {
  MembershipEntry m;
  m.ell = j.at("ell").get<int>();
  if (!j.at("girth").is_null()) m.girth = j.at("girth").get<std::size_t>();
  m.member = j.at("member").get<bool>();
  m.witness_kind = enum_from<WitnessKind>(j.at("witness_kind"), witness_kind_from_string,
                                          "witness kind");
  m.witness = j.at("witness").get<VertexList>();
  return m;
}

json certificate_json(const CutCertificate& c) {
  return {{"kind", to_string(c.kind)}, {"vertices", c.vertices}};
}

CutCertificate certificate_from(const json& j) {
  return {enum_from<CutKind>(j.at("kind"), cut_kind_from_string, "cut kind"),
          j.at("vertices").get<VertexList>()};
}

json step_json(const TraceStep& s) {
  json j;
  j["kind"] = to_string(s.kind);
  j["vertices"] = s.vertices;
  j["children"] = s.children;
  switch (s.kind) {
    case StepKind::StripDegree2:
      j["stripped"] = s.stripped;
      break;
    case StepKind::SplitAtCut:
      j["cut"] = s.cut ? certificate_json(*s.cut) : json(nullptr);
      [[fallthrough]];
    case StepKind::SplitComponents:
      j["pieces"] = s.pieces;
      if (!s.piece_in_class.empty()) j["piece_in_class"] = s.piece_in_class;
      break;
    case StepKind::BaseCase:
      j["method"] = to_string(s.method);
      j["stuck_without_cut"] = s.stuck_without_cut;
      break;
  }
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

TraceStep step_from(const json& j) {
  TraceStep s;
  s.kind = enum_from<StepKind>(j.at("kind"), step_kind_from_string, "step kind");
  s.vertices = j.at("vertices").get<VertexList>();
  s.children = j.at("children").get<std::vector<std::size_t>>();
  if (j.contains("stripped")) s.stripped = j["stripped"].get<Vertex>();
  if (j.contains("cut") && !j["cut"].is_null()) s.cut = certificate_from(j["cut"]);
  if (j.contains("pieces")) s.pieces = j["pieces"].get<std::vector<VertexList>>();
  if (j.contains("piece_in_class")) s.piece_in_class = j["piece_in_class"].get<std::vector<bool>>();
  if (j.contains("method")) {
    s.method = enum_from<BaseMethod>(j["method"], base_method_from_string, "base method");
  }
  if (j.contains("stuck_without_cut")) s.stuck_without_cut = j["stuck_without_cut"].get<bool>();
  if (j.contains("note")) s.note = j["note"].get<std::string>();
  return s;
}

json trace_json(const DecompositionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) steps.push_back(step_json(s));
  return steps;
}

DecompositionTrace trace_from(const json& j) {
  DecompositionTrace t;
  for (const auto& s : j) t.steps.push_back(step_from(s));
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    for (std::size_t c : t.steps[i].children) {
      if (c <= i || c >= t.steps.size()) {
        throw ParseError("trace step " + std::to_string(i) + " has bad child index", 0);
      }
    }
  }
  return t;
}

json coloring_json(const ColoringEntry& c) {
  json j;
  j["success"] = c.success;
  j["palette"] = c.palette;
  j["colors"] = c.colors;
  j["stuck_without_cut"] = c.stuck_without_cut;
  if (c.failure) {
    j["failure"] = {{"leaf", c.failure->leaf},
                    {"chromatic", c.failure->chromatic ? json(*c.failure->chromatic) : json(nullptr)},
                    {"reason", c.failure->reason}};
  } else {
    j["failure"] = nullptr;
  }
  j["trace"] = trace_json(c.trace);
  return j;
}

ColoringEntry coloring_from(const json& j) {
  ColoringEntry c;
  c.success = j.at("success").get<bool>();
  c.palette = j.at("palette").get<int>();
  c.colors = j.at("colors").get<std::vector<int>>();
  c.stuck_without_cut = j.at("stuck_without_cut").get<bool>();
  if (!j.at("failure").is_null()) {
    const auto& f = j["failure"];
    ColorFailure failure;
    failure.leaf = f.at("leaf").get<VertexList>();
    if (!f.at("chromatic").is_null()) failure.chromatic = f["chromatic"].get<int>();
    failure.reason = f.at("reason").get<std::string>();
    c.failure = failure;
  }
  c.trace = trace_from(j.at("trace"));
  return c;
}

json finding_json(const AuditFinding& f) {
  json witness = json::array();
  for (const auto& p : f.witness) witness.push_back({{"role", p.role}, {"vertices", p.vertices}});
  return {{"lemma", f.lemma},
          {"status", to_string(f.status)},
          {"informational", f.informational},
          {"witness", witness},
          {"note", f.note}};
}

AuditFinding finding_from(const json& j, const std::string& graph_id) {
  AuditFinding f;
  f.lemma = j.at("lemma").get<std::string>();
  f.graph_id = graph_id;
  f.status = enum_from<Status>(j.at("status"), status_from_string, "status");
  f.informational = j.at("informational").get<bool>();
  for (const auto& p : j.at("witness")) {
    f.witness.push_back({p.at("role").get<std::string>(), p.at("vertices").get<VertexList>()});
  }
  f.note = j.at("note").get<std::string>();
  return f;
}

json jump_json(const JumpEntry& e) {
  json j;
  j["path"] = e.path;
  j["kind"] = to_string(e.kind);
  j["short_type"] = to_string(e.short_type);
  if (e.across_vertex >= 0) j["across_vertex"] = e.across_vertex;
  if (!e.across.empty()) j["across"] = e.across;
  return j;
}

JumpEntry jump_from(const json& j) {
  JumpEntry e;
  e.path = j.at("path").get<VertexList>();
  e.kind = enum_from<JumpKind>(j.at("kind"), jump_kind_from_string, "jump kind");
  e.short_type = enum_from<ShortType>(j.at("short_type"), short_type_from_string, "short type");
  if (j.contains("across_vertex")) e.across_vertex = j["across_vertex"].get<Vertex>();
  if (j.contains("across")) e.across = j["across"].get<VertexList>();
  return e;
}

json hole_json(const HoleEntry& h) {
  json j;
  j["hole"] = h.hole;
  j["length"] = h.hole.size();
  if (h.jumps) {
    json list = json::array();
    for (const auto& e : *h.jumps) list.push_back(jump_json(e));
    j["jumps"] = list;
    j["truncated"] = h.truncated;
  }
  if (h.end_set) j["end_set"] = *h.end_set;
  return j;
}

HoleEntry hole_from(const json& j) {
  HoleEntry h;
  h.hole = j.at("hole").get<VertexList>();
  if (j.contains("jumps")) {
    h.jumps.emplace();
    for (const auto& e : j["jumps"]) h.jumps->push_back(jump_from(e));
    h.truncated = j.at("truncated").get<bool>();
  }
  if (j.contains("end_set")) h.end_set = j["end_set"].get<VertexList>();
  return h;
}

json record_json(const GraphRecord& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["id"] = r.id;
  if (r.error) {
    j["error"] = {{"message", r.error->message}, {"line", r.error->line},
                  {"offset", r.error->offset}};
    return j;
  }
  j["n"] = r.n;
  j["m"] = r.m;
  j["graph6"] = r.graph6;
  if (r.duplicate_edges > 0) j["duplicate_edges"] = r.duplicate_edges;
  if (!r.labels.empty()) j["labels"] = r.labels;
  if (r.membership) j["membership"] = membership_json(*r.membership);
  if (r.certificate_searched) {
    j["certificate"] = r.certificate ? certificate_json(*r.certificate) : json(nullptr);
  }
  if (r.coloring) j["coloring"] = coloring_json(*r.coloring);
  json findings = json::array();
  for (const auto& f : r.findings) findings.push_back(finding_json(f));
  j["findings"] = findings;
  if (r.holes) {
    json list = json::array();
    for (const auto& h : *r.holes) list.push_back(hole_json(h));
    j["holes"] = list;
  }
  if (r.thetas) {
    json list = json::array();
    for (const auto& t : *r.thetas) {
      list.push_back({{"hubs", edge_json(t.hubs)}, {"ears", t.ears}, {"induced", t.induced}});
    }
    j["thetas"] = list;
  }
  return j;
}

GraphRecord record_from(const json& j) {
  if (j.at("schema_version").get<std::string>() != kSchemaVersion) {
    throw ParseError("unsupported schema version", 0);
  }
  GraphRecord r;
  r.id = j.at("id").get<std::string>();
  if (j.contains("error")) {
    const auto& e = j["error"];
    r.error = ErrorEntry{e.at("message").get<std::string>(), e.at("line").get<std::size_t>(),
                         e.at("offset").get<std::size_t>()};
    return r;
  }
  r.n = j.at("n").get<std::size_t>();
  r.m = j.at("m").get<std::size_t>();
  r.graph6 = j.at("graph6").get<std::string>();
  if (j.contains("duplicate_edges")) r.duplicate_edges = j["duplicate_edges"].get<std::size_t>();
  if (j.contains("labels")) r.labels = j["labels"].get<std::vector<std::string>>();
  if (j.contains("membership")) r.membership = membership_from(j["membership"]);
  if (j.contains("certificate")) {
    r.certificate_searched = true;
    if (!j["certificate"].is_null()) r.certificate = certificate_from(j["certificate"]);
  }
  if (j.contains("coloring")) r.coloring = coloring_from(j["coloring"]);
  for (const auto& f : j.at("findings")) r.findings.push_back(finding_from(f, r.id));
  if (j.contains("holes")) {
    r.holes.emplace();
    for (const auto& h : j["holes"]) r.holes->push_back(hole_from(h));
  }
  if (j.contains("thetas")) {
    r.thetas.emplace();
    for (const auto& t : j["thetas"]) {
      r.thetas->push_back({edge_from(t.at("hubs")), t.at("ears").get<std::vector<VertexList>>(),
                           t.at("induced").get<bool>()});
    }
  }
  return r;
}

json counts_json(const StatusCounts& c) {
  return {{"PASS", c.pass},
          {"VIOLATION", c.violation},
          {"VACUOUS", c.vacuous},
          {"TRUNCATED", c.truncated},
          {"informational", c.informational}};
}

json summary_json(const Summary& s) {
  json lemmas = json::object();
  for (const auto& [name, c] : s.lemmas) lemmas[name] = counts_json(c);
  return {{"graphs", s.graphs},         {"members", s.members},
          {"parse_errors", s.parse_errors}, {"violations", s.violations},
          {"chromatic_excess", s.chromatic_excess}, {"lemmas", lemmas}};
}

Summary summary_from(const json& j) {
  Summary s;
  s.graphs = j.at("graphs").get<std::size_t>();
  s.members = j.at("members").get<std::size_t>();
  s.parse_errors = j.at("parse_errors").get<std::size_t>();
  s.violations = j.at("violations").get<std::size_t>();
  s.chromatic_excess = j.at("chromatic_excess").get<std::size_t>();
  for (const auto& [name, c] : j.at("lemmas").items()) {
    s.lemmas[name] = {c.at("PASS").get<std::size_t>(), c.at("VIOLATION").get<std::size_t>(),
                      c.at("VACUOUS").get<std::size_t>(), c.at("TRUNCATED").get<std::size_t>(),
                      c.at("informational").get<std::size_t>()};
  }
  return s;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

template <typename F>
auto guarded(F f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), 0);
  }
}

}  // namespace

GraphRecord base_record(const Graph& g, std::string id) {
  GraphRecord r;
  r.id = std::move(id);
  r.n = g.order();
  r.m = g.size();
  r.graph6 = write_graph6(g);
  r.duplicate_edges = g.duplicate_edges();
  if (g.has_labels()) r.labels = g.labels();
  return r;
}

GraphRecord error_record(std::string id, const std::string& message, std::size_t line,
                         std::size_t offset) {
  GraphRecord r;
  r.id = std::move(id);
  r.error = ErrorEntry{message, line, offset};
  return r;
}

MembershipEntry membership_entry(const MembershipVerdict& v) {
  return {v.ell, v.girth, v.is_member, v.witness_kind, v.witness};
}

ColoringEntry coloring_entry(const Color3Result& r) {
  ColoringEntry c;
  c.success = r.success;
  c.palette = r.success ? r.coloring.palette() : 0;
  if (r.success) c.colors = r.coloring.colors;
  c.stuck_without_cut = r.trace.stuck_without_cut();
  c.failure = r.failure;
  c.trace = r.trace;
  return c;
}

JumpEntry jump_entry(const JumpRecord& j) {
  return {j.path, j.kind, j.short_type, j.across_vertex, j.across};
}

HoleEntry hole_entry(const Hole& c, const JumpEnumeration* jumps) {
  HoleEntry h;
  h.hole = c.vertices();
  if (jumps) {
    h.jumps.emplace();
    for (const auto& j : jumps->jumps) h.jumps->push_back(jump_entry(j));
    h.truncated = jumps->truncated;
    h.end_set = end_set(c, *jumps).vertices;
  }
  return h;
}

ThetaEntry theta_entry(const ThetaSubgraph& h) {
  return {h.hubs, {h.ears.begin(), h.ears.end()}, h.induced};
}

void set_certificate(GraphRecord& r, const std::optional<CutCertificate>& cert) {
  r.certificate_searched = true;
  r.certificate = cert;
}

Summary summarize(const std::vector<GraphRecord>& records) {
  Summary s;
  for (const auto& r : records) {
    ++s.graphs;
    if (r.error) {
      ++s.parse_errors;
      continue;
    }
    if (r.membership && r.membership->member) ++s.members;
    if (r.coloring && !r.coloring->success) ++s.chromatic_excess;
    for (const auto& f : r.findings) {
      auto& c = s.lemmas[f.lemma];
      switch (f.status) {
        case Status::Pass: ++c.pass; break;
        case Status::Violation: ++c.violation; break;
        case Status::Vacuous: ++c.vacuous; break;
        case Status::Truncated: ++c.truncated; break;
      }
      if (f.informational) {
        ++c.informational;
      } else if (f.status == Status::Violation) {
        ++s.violations;
      }
    }
  }
  return s;
}

std::string emit_report(const Report& report, bool pretty) {
  json j;
  j["schema_version"] = report.schema_version;
  json graphs = json::array();
  for (const auto& r : report.graphs) {
    json g = record_json(r);
    g.erase("schema_version");
    graphs.push_back(std::move(g));
  }
  j["graphs"] = graphs;
  if (report.summary) j["summary"] = summary_json(*report.summary);
  return pretty ? j.dump(2) : j.dump();
}

Report parse_report(const std::string& text) {
  const json j = parse_json(text);
  return guarded([&] {
    Report r;
    r.schema_version = j.at("schema_version").get<std::string>();
    if (r.schema_version != kSchemaVersion) throw ParseError("unsupported schema version", 0);
    for (json g : j.at("graphs")) {
      g["schema_version"] = kSchemaVersion;
      r.graphs.push_back(record_from(g));
    }
    if (j.contains("summary")) r.summary = summary_from(j["summary"]);
    return r;
  });
}

std::string emit_record_line(const GraphRecord& record) { return record_json(record).dump(); }

std::string emit_summary_line(const Summary& summary) {
  return json{{"schema_version", kSchemaVersion}, {"summary", summary_json(summary)}}.dump();
}

GraphRecord parse_record(const std::string& text) {
  const json j = parse_json(text);
  return guarded([&] { return record_from(j); });
}

Report parse_report_lines(const std::string& text) {
  Report r;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = parse_json(line);
    guarded([&] {
      if (j.contains("summary")) {
        r.summary = summary_from(j["summary"]);
      } else {
        r.graphs.push_back(record_from(j));
      }
      return 0;
    });
  }
  return r;
}

std::string trace_to_json(const DecompositionTrace& trace) { return trace_json(trace).dump(); }

DecompositionTrace trace_from_json(const std::string& text) {
  const json j = parse_json(text);
  return guarded([&] { return trace_from(j); });
}

}  // namespace evenhole
