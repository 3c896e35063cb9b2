#include "evenhole/jumps.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

namespace evenhole {

std::string to_string(JumpKind kind) {
  switch (kind) {
    case JumpKind::ShortJump: return "short_jump";
    case JumpKind::LocalJumpAcrossOneVertex: return "local_jump_across_one_vertex";
    case JumpKind::LocalJumpAcrossSet: return "local_jump_across_set";
    case JumpKind::EdgeLink: return "edge_link";
    case JumpKind::SCTLink: return "sct_link";
    case JumpKind::GeneralJump: return "general_jump";
  }
  return "unknown";
}

std::string to_string(ShortType type) {
  switch (type) {
    case ShortType::NotApplicable: return "n/a";
    case ShortType::TypeO: return "type_o";
    case ShortType::TypeE: return "type_e";
  }
  return "unknown";
}

std::optional<JumpKind> jump_kind_from_string(const std::string& s) {
  for (auto k : {JumpKind::ShortJump, JumpKind::LocalJumpAcrossOneVertex,
                 JumpKind::LocalJumpAcrossSet, JumpKind::EdgeLink, JumpKind::SCTLink,
                 JumpKind::GeneralJump}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::optional<ShortType> short_type_from_string(const std::string& s) {
  for (auto t : {ShortType::NotApplicable, ShortType::TypeO, ShortType::TypeE}) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

std::string to_string(JumpPairRelation r) {
  return r == JumpPairRelation::Crossing ? "crossing" : "parallel";
}

namespace {

VertexList arc_between(const Hole& c, std::size_t from, std::size_t to) {
  VertexList arc;
  for (std::size_t k = from;; k = (k + 1) % c.length()) {
    arc.push_back(c.at(k));
    if (k == to) break;
  }
  return arc;
}

VertexList arc_interior(const VertexList& arc) {
  if (arc.size() <= 2) return {};
  return VertexList(arc.begin() + 1, arc.end() - 1);
}

VertexList seeing(const Graph& g, const VertexList& arc_inner, const VertexList& inner) {
  VertexList out;
  for (Vertex x : arc_inner) {
    for (Vertex y : inner) {
      if (g.has_edge(x, y)) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

void require_hole(const Graph& g, const Hole& c) {
  if (c.length() < 4 || !is_induced_cycle(g, c.vertices())) {
    throw GraphError("jump analysis needs a hole of the graph");
  }
}

}  // namespace

JumpRecord classify_jump(const Graph& g, const Hole& c, const VertexList& path) {
  if (path.size() < 3) throw GraphError("a jump has at least one interior vertex");
  const Vertex s = path.front(), t = path.back();
  auto ps = c.position(s), pt = c.position(t);
  if (!ps || !pt) throw GraphError("jump ends must lie on the hole");
  if (s == t) throw GraphError("jump ends must be distinct");
  std::set<Vertex> distinct(path.begin(), path.end());
  if (distinct.size() != path.size()) throw GraphError("jump repeats a vertex");
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (!g.contains(path[i])) throw GraphError("jump vertex out of range");
    if (c.contains(path[i])) throw GraphError("jump interior meets the hole");
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (std::size_t j = i + 1; j < path.size(); ++j) {
      const bool want = j == i + 1;
      const bool ends = i == 0 && j == path.size() - 1;
      const bool have = g.has_edge(path[i], path[j]);
      if (ends) continue;  // a hole edge between the ends is allowed
      if (have != want) throw GraphError("jump is not an induced path");
    }
  }

  JumpRecord r;
  r.hole = c;
  r.path = path;
  r.ends = {s, t};
  VertexList fwd = arc_between(c, *ps, *pt);
  VertexList back = arc_between(c, *pt, *ps);
  std::reverse(back.begin(), back.end());
  const VertexList fwd_in = arc_interior(fwd), back_in = arc_interior(back);
  auto min_or_max = [](const VertexList& v) {
    return v.empty() ? std::numeric_limits<Vertex>::max()
                     : *std::min_element(v.begin(), v.end());
  };
  if (min_or_max(fwd_in) <= min_or_max(back_in)) {
    r.arc1 = std::move(fwd), r.arc2 = std::move(back);
  } else {
    r.arc1 = std::move(back), r.arc2 = std::move(fwd);
  }
  const VertexList q1 = arc_interior(r.arc1), q2 = arc_interior(r.arc2);
  const VertexList inner = r.interior();
  const VertexList seen1 = seeing(g, q1, inner), seen2 = seeing(g, q2, inner);

  if (g.has_edge(s, t)) {
    r.kind = seen1.empty() && seen2.empty() ? JumpKind::EdgeLink : JumpKind::GeneralJump;
    return r;
  }
  if (seen1.empty() && seen2.empty()) {
    r.kind = JumpKind::ShortJump;
    if (c.is_even()) {
      r.short_type = (r.length() + r.arc1_length()) % 2 == 1 ? ShortType::TypeO
                                                              : ShortType::TypeE;
    }
    return r;
  }
  if (!seen1.empty() && !seen2.empty()) {
    r.kind = JumpKind::GeneralJump;
    return r;
  }
  const bool first = !seen1.empty();
  const VertexList& arc = first ? r.arc1 : r.arc2;
  const VertexList& arc_in = first ? q1 : q2;
  const VertexList& other_in = first ? q2 : q1;
  const VertexList& seen = first ? seen1 : seen2;
  r.across = arc_in;
  if (arc_in.size() == 1) {
    r.kind = JumpKind::LocalJumpAcrossOneVertex;
    r.across_vertex = arc_in[0];
    return r;
  }
  r.kind = JumpKind::LocalJumpAcrossSet;
  if (seen.size() == 1 && other_in.size() != 1) {
    const Vertex w = seen[0];
    if (w == arc[1] || w == arc[arc.size() - 2]) {
      r.kind = JumpKind::SCTLink;
      r.across_vertex = w;
      if (w != arc[1]) {
        // Report the end adjacent to c as s.
        std::swap(r.ends.first, r.ends.second);
        std::reverse(r.path.begin(), r.path.end());
        std::reverse(r.arc1.begin(), r.arc1.end());
        std::reverse(r.arc2.begin(), r.arc2.end());
      }
    }
  }
  return r;
}

JumpEnumeration enumerate_jumps(const Graph& g, const Hole& c,
                                const JumpSearchOptions& options) {
  require_hole(g, c);
  const std::size_t n = g.order();
  const std::size_t cap =
      options.interior_cap == 0 ? n - c.length() : options.interior_cap;
  std::vector<bool> on_hole(n, false), on_path(n, false);
  for (Vertex v : c.vertices()) on_hole[v] = true;

  JumpEnumeration out;
  VertexList path;
  bool stop = false;

  // path = s, x1, ..., xk with k >= 1, an induced path off the hole.
  std::function<void()> grow = [&] {
    const Vertex s = path.front();
    const Vertex last = path.back();
    for (Vertex t : g.neighbors(last)) {
      if (stop) return;
      if (!on_hole[t] || t <= s) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (g.has_edge(t, path[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (out.jumps.size() >= options.record_limit) {
        out.truncated = true;
        stop = true;
        return;
      }
      path.push_back(t);
      out.jumps.push_back(classify_jump(g, c, path));
      path.pop_back();
    }
    for (Vertex y : g.neighbors(last)) {
      if (stop) return;
      if (on_hole[y] || on_path[y]) continue;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (g.has_edge(y, path[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (path.size() - 1 >= cap) {
        out.truncated = true;
        continue;
      }
      path.push_back(y);
      on_path[y] = true;
      grow();
      on_path[y] = false;
      path.pop_back();
    }
  };

  VertexList ends = c.vertices();
  std::sort(ends.begin(), ends.end());
  for (Vertex s : ends) {
    for (Vertex x : g.neighbors(s)) {
      if (on_hole[x] || stop) continue;
      if (cap == 0) {
        out.truncated = true;
        continue;
      }
      path = {s, x};
      on_path[x] = true;
      grow();
      on_path[x] = false;
    }
  }
  std::sort(out.jumps.begin(), out.jumps.end(),
            [](const JumpRecord& a, const JumpRecord& b) {
              auto ka = std::minmax(a.ends.first, a.ends.second);
              auto kb = std::minmax(b.ends.first, b.ends.second);
              if (ka != kb) return ka < kb;
              return a.path < b.path;
            });
  return out;
}

JumpPairRelation relation(const Hole& c, Edge a, Edge b) {
  auto pos = [&](Vertex v) {
    auto p = c.position(v);
    if (!p) throw GraphError("jump end " + std::to_string(v) + " is not on the hole");
    return *p;
  };
  const std::size_t u1 = pos(a.first), v1 = pos(a.second);
  const std::size_t u2 = pos(b.first), v2 = pos(b.second);
  std::set<std::size_t> distinct{u1, v1, u2, v2};
  if (distinct.size() != 4) return JumpPairRelation::Parallel;
  const std::size_t lo = std::min(u1, v1), hi = std::max(u1, v1);
  const bool in2 = lo < u2 && u2 < hi;
  const bool in3 = lo < v2 && v2 < hi;
  return in2 != in3 ? JumpPairRelation::Crossing : JumpPairRelation::Parallel;
}

JumpPairRelation relation(const Hole& c, const JumpRecord& a, const JumpRecord& b) {
  if (a.hole != c || b.hole != c) throw GraphError("jumps lie over different holes");
  return relation(c, a.ends, b.ends);
}

EndSet end_set(const Hole& c, const JumpEnumeration& jumps) {
  EndSet s;
  s.hole = c;
  s.truncated = jumps.truncated;
  std::set<Vertex> ends;
  for (const auto& j : jumps.jumps) {
    if (j.kind == JumpKind::ShortJump) {
      ends.insert(j.ends.first);
      ends.insert(j.ends.second);
    }
  }
  s.vertices.assign(ends.begin(), ends.end());
  return s;
}

EndSet end_set(const Graph& g, const Hole& c, const JumpSearchOptions& options) {
  return end_set(c, enumerate_jumps(g, c, options));
}

}  // namespace evenhole
