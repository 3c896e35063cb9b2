#include "evenhole/search.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "evenhole/generators.hpp"

namespace evenhole {

namespace {

GraphRecord guarded_work(const std::function<GraphRecord(const Graph&, const std::string&)>& work,
                         const Graph& g, const std::string& id, std::size_t line) {
  try {
    return work(g, id);
  } catch (const std::exception& e) {
    return error_record(id, e.what(), line, 0);
  }
}

}  // namespace

std::string stream_id(const std::string& source, std::size_t index) {
  return source + ":" + std::to_string(index);
}

Summary process_stream(GraphStream& stream, std::size_t workers,
                       const std::function<GraphRecord(const Graph&, const std::string&)>& work,
                       const std::function<void(const GraphRecord&)>& sink) {
  workers = std::max<std::size_t>(workers, 1);
  const std::size_t batch = workers * 8;
  std::vector<GraphRecord> all;
  while (true) {
    std::vector<GraphStream::Item> items;
    while (items.size() < batch) {
      auto item = stream.next();
      if (!item) break;
      items.push_back(std::move(*item));
    }
    if (items.empty()) break;

    std::vector<GraphRecord> records(items.size());
    std::atomic<std::size_t> cursor{0};
    auto run = [&] {
      for (std::size_t i = cursor++; i < items.size(); i = cursor++) {
        const auto& item = items[i];
        const std::string id = stream_id(stream.source(), item.index);
        if (const auto* err = std::get_if<ParseError>(&item.value)) {
          records[i] = error_record(id, err->what(), err->line(), err->offset());
        } else {
          records[i] = guarded_work(work, std::get<Graph>(item.value), id, item.line);
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < std::min(workers, items.size()); ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();

    for (auto& r : records) {
      sink(r);
      all.push_back(std::move(r));
    }
  }
  return summarize(all);
}

GraphRecord search_record(const Graph& g, const std::string& id, const AuditConfig& config) {
  GraphRecord r = base_record(g, id);
  AuditSubject s(g, id, config);
  r.membership = membership_entry(s.membership());
  if (!s.member()) return r;
  const AuditFinding t1 = audit_theorem1(s);
  r.findings.push_back(t1);
  if (t1.status != Status::Violation) return r;

  // Witness bundle for a would-be counterexample: its holes of length 2l.
  const auto comp = induced_subgraph(g, t1.witness.at(0).vertices);
  const auto len = static_cast<std::size_t>(2 * config.ell);
  set_certificate(r, std::nullopt);
  r.holes.emplace();
  for (const Hole& local : enumerate_holes(comp.graph, len, len)) {
    VertexList parent;
    for (Vertex v : local.vertices()) parent.push_back(comp.to_parent[v]);
    const Hole c = Hole::from_cycle(parent);
    const auto jumps = enumerate_jumps(g, c, config.jumps);
    r.holes->push_back(hole_entry(c, &jumps));
  }
  for (auto& f : audit_section_claims(s)) r.findings.push_back(std::move(f));
  return r;
}

GraphRecord audit_record(const Graph& g, const std::string& id, const AuditConfig& config) {
  GraphRecord r = base_record(g, id);
  AuditSubject s(g, id, config);
  r.membership = membership_entry(s.membership());
  set_certificate(r, is_connected(g) && g.order() > 0 ? find_cut_certificate(g) : std::nullopt);
  r.findings = run_all_audits(s);
  return r;
}

Summary search_counterexamples(GraphStream& stream, const AuditConfig& config,
                               std::size_t workers,
                               const std::function<void(const GraphRecord&)>& sink) {
  return process_stream(
      stream, workers,
      [&](const Graph& g, const std::string& id) { return search_record(g, id, config); }, sink);
}

std::vector<Graph> theta_members(std::size_t max_ear, int ell) {
  std::vector<Graph> out;
  for (std::size_t a = 1; a <= max_ear; ++a) {
    for (std::size_t b = a; b <= max_ear; ++b) {
      if (a == 1 && b == 1) continue;
      for (std::size_t c = b; c <= max_ear; ++c) {
        Graph g = gen_theta(a, b, c);
        if (is_member(g, ell).is_member) out.push_back(std::move(g));
      }
    }
  }
  return out;
}

namespace {

std::vector<Graph> corpus_bases() {
  const std::vector<Edge> k33{{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}};
  const std::vector<Edge> prism{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}};
  const std::vector<Edge> wheel{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}};
  const std::vector<Edge> diamond{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  return {gen_complete(4), gen_cycle(3), build_graph(4, diamond), build_graph(6, k33),
          build_graph(6, prism), build_graph(5, wheel)};
}

}  // namespace

std::vector<Graph> random_subdivided_members(std::size_t count, const CorpusOptions& options) {
  std::mt19937_64 rng(options.seed);
  const auto bases = corpus_bases();
  std::uniform_int_distribution<std::size_t> pick_base(0, bases.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_len(1, options.max_ear);
  std::bernoulli_distribution glue_coin(0.25);

  std::vector<Graph> out;
  while (out.size() < count) {
    std::optional<Graph> candidate;
    if (out.size() >= 2 && glue_coin(rng)) {
      std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
      const Graph& a = out[pick(rng)];
      const Graph& b = out[pick(rng)];
      if (a.order() + b.order() > options.max_order) continue;
      std::uniform_int_distribution<Vertex> va(0, static_cast<Vertex>(a.order()) - 1);
      std::uniform_int_distribution<Vertex> vb(0, static_cast<Vertex>(b.order()) - 1);
      if (std::bernoulli_distribution(0.5)(rng)) {
        candidate = glue_at_vertex(a, va(rng), b, vb(rng));
      } else {
        const auto ea = a.edges(), eb = b.edges();
        std::uniform_int_distribution<std::size_t> ia(0, ea.size() - 1), ib(0, eb.size() - 1);
        candidate = glue_at_edge(a, ea[ia(rng)], b, eb[ib(rng)]);
      }
    } else {
      const Graph& base = bases[pick_base(rng)];
      std::vector<std::size_t> lengths(base.size());
      for (auto& len : lengths) len = pick_len(rng);
      candidate = gen_subdivision(base, lengths);
    }
    if (candidate->order() > options.max_order) continue;
    if (!is_connected(*candidate) || !is_member(*candidate, options.ell).is_member) continue;
    out.push_back(std::move(*candidate));
  }
  return out;
}

}  // namespace evenhole
