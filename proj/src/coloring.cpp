#include "evenhole/coloring.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "evenhole/cycles.hpp"

namespace evenhole {

int Coloring::palette() const {
  int top = -1;
  for (int c : colors) top = std::max(top, c);
  return top + 1;
}

bool Coloring::complete() const {
  return std::all_of(colors.begin(), colors.end(), [](int c) { return c >= 0; });
}

ColoringCheck verify_coloring(const Graph& g, const Coloring& c) {
  if (c.colors.size() != g.order()) {
    throw GraphError("colouring covers " + std::to_string(c.colors.size()) +
                     " vertices, graph has " + std::to_string(g.order()));
  }
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v) {
    if (c.colors[v] < 0) throw GraphError("vertex " + std::to_string(v) + " is uncoloured");
  }
  ColoringCheck out;
  for (const auto& [u, v] : g.edges()) {
    if (c.colors[u] == c.colors[v]) {
      out.proper = false;
      out.violation = Edge{u, v};
      break;
    }
  }
  return out;
}

Coloring merge_colorings(const Coloring& c1, const Coloring& c2,
                         std::span<const Vertex> shared) {
  if (c1.colors.size() != c2.colors.size()) {
    throw GraphError("colourings index different vertex ranges");
  }
  if (shared.empty() || shared.size() > 2) {
    throw GraphError("pieces must share one vertex or one edge");
  }
  const std::size_t n = c1.colors.size();
  for (Vertex s : shared) {
    if (s < 0 || static_cast<std::size_t>(s) >= n || c1.colors[s] < 0 || c2.colors[s] < 0) {
      throw GraphError("shared vertex " + std::to_string(s) + " is not coloured in both pieces");
    }
  }
  if (shared.size() == 2 && (c1.colors[shared[0]] == c1.colors[shared[1]] ||
                             c2.colors[shared[0]] == c2.colors[shared[1]])) {
    throw GraphError("shared edge ends carry the same colour");
  }
  const int palette = std::max(c1.palette(), c2.palette());
  std::vector<int> perm(palette, -1);
  std::vector<bool> target_used(palette, false);
  for (Vertex s : shared) {
    perm[c2.colors[s]] = c1.colors[s];
    target_used[c1.colors[s]] = true;
  }
  for (int col = 0; col < palette; ++col) {
    if (perm[col] == -1 && !target_used[col]) {
      perm[col] = col;
      target_used[col] = true;
    }
  }
  for (int col = 0; col < palette; ++col) {
    if (perm[col] != -1) continue;
    int target = 0;
    while (target_used[target]) ++target;
    perm[col] = target;
    target_used[target] = true;
  }
  Coloring out;
  out.colors.assign(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    const bool in_shared = std::find(shared.begin(), shared.end(),
                                     static_cast<Vertex>(v)) != shared.end();
    if (c1.colors[v] >= 0 && c2.colors[v] >= 0 && !in_shared) {
      throw GraphError("pieces overlap outside the shared vertices at " + std::to_string(v));
    }
    out.colors[v] = c2.colors[v] >= 0 ? perm[c2.colors[v]] : c1.colors[v];
  }
  return out;
}

std::optional<Coloring> k_coloring(const Graph& g, int k) {
  const std::size_t n = g.order();
  Coloring out;
  out.colors.assign(n, -1);
  if (n == 0) return out;
  if (k <= 0) return std::nullopt;

  // Static order: repeatedly take the vertex with most already-placed
  // neighbours (ties to the larger degree, then the lower index).
  std::vector<Vertex> order;
  std::vector<int> placed_nbrs(n, 0);
  std::vector<bool> placed(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
      if (placed[v]) continue;
      if (best < 0 || placed_nbrs[v] > placed_nbrs[best] ||
          (placed_nbrs[v] == placed_nbrs[best] && g.degree(v) > g.degree(best))) {
        best = v;
      }
    }
    placed[best] = true;
    order.push_back(best);
    for (Vertex w : g.neighbors(best)) ++placed_nbrs[w];
  }

  std::function<bool(std::size_t, int)> assign = [&](std::size_t i, int used) {
    if (i == n) return true;
    const Vertex v = order[i];
    const int limit = std::min(k, used + 1);
    for (int col = 0; col < limit; ++col) {
      bool clash = false;
      for (Vertex w : g.neighbors(v)) {
        if (out.colors[w] == col) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      out.colors[v] = col;
      if (assign(i + 1, std::max(used, col + 1))) return true;
    }
    out.colors[v] = -1;
    return false;
  };
  if (!assign(0, 0)) return std::nullopt;
  return out;
}

ChromaticResult brute_force_chromatic(const Graph& g, int cap, std::size_t limit) {
  if (g.order() > limit) {
    throw GraphError("brute-force chromatic number limited to " + std::to_string(limit) +
                     " vertices, graph has " + std::to_string(g.order()));
  }
  if (g.order() == 0) return {0, false};
  for (int k = 1; k <= cap; ++k) {
    if (k_coloring(g, k)) return {k, false};
  }
  return {cap, true};
}

std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::StripDegree2: return "strip_degree2";
    case StepKind::SplitAtCut: return "split_at_cut";
    case StepKind::SplitComponents: return "split_components";
    case StepKind::BaseCase: return "base_case";
  }
  return "unknown";
}

std::string to_string(BaseMethod m) {
  switch (m) {
    case BaseMethod::Trivial: return "trivial";
    case BaseMethod::Bipartite: return "bipartite";
    case BaseMethod::Brute: return "brute";
  }
  return "unknown";
}

std::optional<StepKind> step_kind_from_string(const std::string& s) {
  for (auto k : {StepKind::StripDegree2, StepKind::SplitAtCut, StepKind::SplitComponents,
                 StepKind::BaseCase}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::optional<BaseMethod> base_method_from_string(const std::string& s) {
  for (auto m : {BaseMethod::Trivial, BaseMethod::Bipartite, BaseMethod::Brute}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

std::vector<VertexList> DecompositionTrace::leaves() const {
  std::vector<VertexList> out;
  for (const auto& s : steps) {
    if (s.children.empty()) out.push_back(s.vertices);
  }
  return out;
}

bool DecompositionTrace::stuck_without_cut() const {
  return std::any_of(steps.begin(), steps.end(),
                     [](const TraceStep& s) { return s.stuck_without_cut; });
}

namespace {

std::optional<std::vector<int>> two_coloring(const Graph& h) {
  std::vector<int> col(h.order(), -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; static_cast<std::size_t>(s) < h.order(); ++s) {
    if (col[s] >= 0) continue;
    col[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : h.neighbors(u)) {
        if (col[w] < 0) {
          col[w] = 1 - col[u];
          queue.push_back(w);
        } else if (col[w] == col[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return col;
}

struct BaseColoring {
  BaseMethod method = BaseMethod::Trivial;
  std::optional<std::vector<int>> local;
};

BaseColoring color_base(const Graph& h) {
  BaseColoring out;
  if (h.size() == 0) {
    out.local = std::vector<int>(h.order(), 0);
    return out;
  }
  if (auto two = two_coloring(h)) {
    out.method = BaseMethod::Bipartite;
    out.local = std::move(two);
    return out;
  }
  out.method = BaseMethod::Brute;
  if (auto three = k_coloring(h, 3)) out.local = std::move(three->colors);
  return out;
}

VertexList without(const VertexList& set, std::span<const Vertex> removed) {
  VertexList out;
  for (Vertex v : set) {
    if (std::find(removed.begin(), removed.end(), v) == removed.end()) out.push_back(v);
  }
  return out;
}

int smallest_free(const Graph& g, Vertex v, const std::vector<int>& colors,
                  const VertexList& scope) {
  std::vector<bool> taken(g.degree(v) + 1, false);
  for (Vertex w : g.neighbors(v)) {
    if (colors[w] >= 0 && std::binary_search(scope.begin(), scope.end(), w) &&
        static_cast<std::size_t>(colors[w]) < taken.size()) {
      taken[colors[w]] = true;
    }
  }
  int c = 0;
  while (taken[c]) ++c;
  return c;
}

class Engine {
 public:
  Engine(const Graph& g, const ColorOptions& options) : g_(g), options_(options) {}

  Color3Result run() {
    VertexList all(g_.order());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Vertex>(v);
    Color3Result result;
    auto colors = solve(all);
    result.trace = std::move(trace_);
    if (colors) {
      result.success = true;
      result.coloring.colors = std::move(*colors);
    } else {
      result.failure = std::move(failure_);
    }
    return result;
  }

 private:
  using Colors = std::vector<int>;

  std::optional<Colors> leaf(std::size_t node, const InducedSubgraph& sub, bool stuck) {
    trace_.steps[node].kind = StepKind::BaseCase;
    trace_.steps[node].stuck_without_cut = stuck;
    const Graph& h = sub.graph;
    if (h.order() > options_.brute_limit && h.order() > options_.base_threshold) {
      trace_.steps[node].method = BaseMethod::Brute;
      trace_.steps[node].note = "no low-degree vertex or cut; too large for brute force";
      failure_ = ColorFailure{trace_.steps[node].vertices, std::nullopt,
                              "cut-free piece exceeds the brute-force limit"};
      return std::nullopt;
    }
    auto base = color_base(h);
    trace_.steps[node].method = base.method;
    if (stuck) trace_.steps[node].note = "no vertex of degree <= 2 and no K1/K2 cut";
    if (!base.local) {
      auto chi = brute_force_chromatic(h, static_cast<int>(h.order()),
                                       std::max(options_.brute_limit, h.order()));
      failure_ = ColorFailure{trace_.steps[node].vertices, chi.value,
                              "chromatic number " + std::to_string(chi.value) + " exceeds 3"};
      trace_.steps[node].note += trace_.steps[node].note.empty() ? "" : "; ";
      trace_.steps[node].note += "not 3-colourable";
      return std::nullopt;
    }
    Colors out(g_.order(), -1);
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i) out[sub.to_parent[i]] = (*base.local)[i];
    return out;
  }

  std::optional<Colors> solve(const VertexList& vertices) {
    const std::size_t node = trace_.steps.size();
    trace_.steps.emplace_back();
    trace_.steps[node].vertices = vertices;
    const auto sub = induced_subgraph(g_, vertices);
    const Graph& h = sub.graph;

    if (vertices.size() <= options_.base_threshold) return leaf(node, sub, false);

    auto comps = connected_components(h);
    if (comps.size() > 1) {
      trace_.steps[node].kind = StepKind::SplitComponents;
      Colors out(g_.order(), -1);
      for (auto& comp : comps) {
        for (auto& v : comp) v = sub.to_parent[v];
        if (options_.membership_ell > 0) {
          trace_.steps[node].piece_in_class.push_back(
              is_member(induced_subgraph(g_, comp).graph, options_.membership_ell).is_member);
        }
        trace_.steps[node].pieces.push_back(comp);
      }
      for (const auto& piece : trace_.steps[node].pieces) {
        trace_.steps[node].children.push_back(trace_.steps.size());
        auto child = solve(piece);
        if (!child) return std::nullopt;
        for (Vertex v : piece) out[v] = (*child)[v];
      }
      return out;
    }

    for (Vertex v = 0; static_cast<std::size_t>(v) < h.order(); ++v) {
      if (h.degree(v) > 2) continue;
      const Vertex original = sub.to_parent[v];
      trace_.steps[node].kind = StepKind::StripDegree2;
      trace_.steps[node].stripped = original;
      trace_.steps[node].children.push_back(trace_.steps.size());
      const Vertex removed[] = {original};
      auto child = solve(without(vertices, removed));
      if (!child) return std::nullopt;
      (*child)[original] = smallest_free(g_, original, *child, vertices);
      return child;
    }

    std::optional<CutCertificate> cut;
    if (auto k1 = k1_cuts(h); !k1.empty()) {
      cut = CutCertificate{CutKind::K1Cut, {sub.to_parent[k1.front()]}};
    } else if (auto k2 = k2_cuts(h); !k2.empty()) {
      cut = CutCertificate{CutKind::K2Cut,
                           {sub.to_parent[k2.front().first], sub.to_parent[k2.front().second]}};
    }
    if (!cut) return leaf(node, sub, true);

    trace_.steps[node].kind = StepKind::SplitAtCut;
    trace_.steps[node].cut = cut;
    const VertexList rest = without(vertices, cut->vertices);
    const auto rest_sub = induced_subgraph(g_, rest);
    for (auto comp : connected_components(rest_sub.graph)) {
      for (auto& v : comp) v = rest_sub.to_parent[v];
      comp.insert(comp.end(), cut->vertices.begin(), cut->vertices.end());
      std::sort(comp.begin(), comp.end());
      if (options_.membership_ell > 0) {
        const auto piece_graph = induced_subgraph(g_, comp).graph;
        trace_.steps[node].piece_in_class.push_back(
            is_member(piece_graph, options_.membership_ell).is_member);
      }
      trace_.steps[node].pieces.push_back(std::move(comp));
    }
    std::optional<Colors> acc;
    for (std::size_t i = 0; i < trace_.steps[node].pieces.size(); ++i) {
      const VertexList piece = trace_.steps[node].pieces[i];
      trace_.steps[node].children.push_back(trace_.steps.size());
      auto child = solve(piece);
      if (!child) return std::nullopt;
      if (!acc) {
        acc = std::move(child);
      } else {
        acc = merge_colorings(Coloring{*acc}, Coloring{*child}, cut->vertices).colors;
      }
    }
    return acc;
  }

  const Graph& g_;
  const ColorOptions& options_;
  DecompositionTrace trace_;
  std::optional<ColorFailure> failure_;
};

std::vector<int> replay_step(const Graph& g, const DecompositionTrace& trace,
                             std::size_t node) {
  if (node >= trace.steps.size()) throw GraphError("trace refers to a missing step");
  const TraceStep& step = trace.steps[node];
  std::vector<int> out(g.order(), -1);
  switch (step.kind) {
    case StepKind::BaseCase: {
      const auto sub = induced_subgraph(g, step.vertices);
      auto base = color_base(sub.graph);
      if (!base.local) throw GraphError("trace leaf is not 3-colourable");
      for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
        out[sub.to_parent[i]] = (*base.local)[i];
      }
      return out;
    }
    case StepKind::StripDegree2: {
      if (step.children.size() != 1) throw GraphError("strip step needs one child");
      out = replay_step(g, trace, step.children[0]);
      out[step.stripped] = smallest_free(g, step.stripped, out, step.vertices);
      return out;
    }
    case StepKind::SplitComponents: {
      for (std::size_t i = 0; i < step.children.size(); ++i) {
        auto child = replay_step(g, trace, step.children[i]);
        for (Vertex v : step.pieces.at(i)) out[v] = child[v];
      }
      return out;
    }
    case StepKind::SplitAtCut: {
      if (!step.cut) throw GraphError("split step without a cut");
      std::optional<std::vector<int>> acc;
      for (std::size_t child : step.children) {
        auto colors = replay_step(g, trace, child);
        acc = acc ? merge_colorings(Coloring{*acc}, Coloring{colors}, step.cut->vertices).colors
                  : colors;
      }
      if (!acc) throw GraphError("split step without pieces");
      return *acc;
    }
  }
  return out;
}

}  // namespace

Color3Result color3(const Graph& g, const ColorOptions& options) {
  return Engine(g, options).run();
}

Coloring replay_trace(const Graph& g, const DecompositionTrace& trace, const ColorOptions&) {
  if (trace.steps.empty()) throw GraphError("empty trace");
  return Coloring{replay_step(g, trace, 0)};
}

}  // namespace evenhole
