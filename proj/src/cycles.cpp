#include "evenhole/cycles.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

namespace evenhole {

namespace {

struct BfsCycle {
  std::size_t length = std::numeric_limits<std::size_t>::max();
  VertexList cycle;
};

// Shortest cycle through BFS from every root. A detection whose length equals
// the global minimum always closes a simple cycle, so the walk is returned
// as is.
BfsCycle bfs_shortest_cycle(const Graph& g, bool want_cycle) {
  const std::size_t n = g.order();
  BfsCycle best;
  std::vector<int> dist(n), parent(n);
  std::deque<Vertex> queue;
  for (Vertex root = 0; static_cast<std::size_t>(root) < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[root] = 0;
    queue.assign(1, root);
    Vertex hit_u = -1, hit_w = -1;
    std::size_t local_best = best.length;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      if (2 * static_cast<std::size_t>(dist[u]) + 1 >= local_best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          const std::size_t len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
          if (len < local_best) {
            local_best = len;
            hit_u = u;
            hit_w = w;
          }
        }
      }
    }
    if (local_best < best.length) {
      best.length = local_best;
      if (want_cycle) {
        VertexList left, right;
        for (Vertex v = hit_u; v != -1; v = parent[v]) left.push_back(v);
        for (Vertex v = hit_w; v != -1; v = parent[v]) right.push_back(v);
        // left ends at root; drop the duplicated root from right.
        right.pop_back();
        std::reverse(left.begin(), left.end());
        left.insert(left.end(), right.begin(), right.end());
        best.cycle = std::move(left);
      }
    }
  }
  return best;
}

class InducedCycleSearch {
 public:
  InducedCycleSearch(const Graph& g, std::size_t min_len, std::size_t max_len,
                     const std::function<bool(const VertexList&)>& visit)
      : g_(g), min_len_(min_len), max_len_(max_len), visit_(visit),
        on_path_(g.order(), false) {}

  void run() {
    for (Vertex r = 0; static_cast<std::size_t>(r) < g_.order() && !stopped_; ++r) {
      root_ = r;
      path_.assign(1, r);
      on_path_[r] = true;
      for (Vertex x : g_.neighbors(r)) {
        if (x <= r || stopped_) continue;
        if (max_len_ < 3) break;
        push(x);
        extend();
        pop();
      }
      on_path_[r] = false;
    }
  }

 private:
  void push(Vertex x) {
    path_.push_back(x);
    on_path_[x] = true;
  }
  void pop() {
    on_path_[path_.back()] = false;
    path_.pop_back();
  }

  // path_ = root, p1, ..., pk with k >= 1; every pair non-adjacent except
  // consecutive ones and (root, p1).
  void extend() {
    const Vertex last = path_.back();
    for (Vertex x : g_.neighbors(last)) {
      if (stopped_) return;
      if (x <= root_ || on_path_[x]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path_.size(); ++i) {
        if (g_.has_edge(x, path_[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (g_.has_edge(x, root_)) {
        const std::size_t len = path_.size() + 1;
        if (path_[1] < x && len >= min_len_ && len <= max_len_) {
          push(x);
          if (!visit_(path_)) stopped_ = true;
          pop();
        }
        continue;
      }
      if (path_.size() + 2 > max_len_) continue;
      push(x);
      extend();
      pop();
    }
  }

  const Graph& g_;
  std::size_t min_len_, max_len_;
  const std::function<bool(const VertexList&)>& visit_;
  std::vector<bool> on_path_;
  VertexList path_;
  Vertex root_ = 0;
  bool stopped_ = false;
};

}  // namespace

std::optional<std::size_t> girth(const Graph& g) {
  auto best = bfs_shortest_cycle(g, false);
  if (best.length == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best.length;
}

VertexList shortest_cycle(const Graph& g) {
  return bfs_shortest_cycle(g, true).cycle;
}

void for_each_induced_cycle(const Graph& g, std::size_t min_len,
                            std::size_t max_len,
                            const std::function<bool(const VertexList&)>& visit) {
  min_len = std::max<std::size_t>(min_len, 3);
  if (max_len < min_len) return;
  InducedCycleSearch(g, min_len, max_len, visit).run();
}

std::vector<Hole> enumerate_holes(const Graph& g, std::size_t min_len,
                                  std::size_t max_len) {
  if (max_len == 0) max_len = g.order();
  std::vector<Hole> out;
  for_each_induced_cycle(g, std::max<std::size_t>(min_len, 4), max_len,
                         [&](const VertexList& c) {
                           out.push_back(Hole::from_cycle(c));
                           return true;
                         });
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::None: return "none";
    case WitnessKind::Acyclic: return "acyclic";
    case WitnessKind::GirthTooSmall: return "girth_too_small";
    case WitnessKind::GirthTooLarge: return "girth_too_large";
    case WitnessKind::LongEvenHole: return "long_even_hole";
  }
  return "unknown";
}

std::optional<WitnessKind> witness_kind_from_string(const std::string& s) {
  for (auto k : {WitnessKind::None, WitnessKind::Acyclic, WitnessKind::GirthTooSmall,
                 WitnessKind::GirthTooLarge, WitnessKind::LongEvenHole}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

MembershipVerdict is_member(const Graph& g, int ell) {
  if (ell < 2) throw GraphError("class parameter l must be at least 2");
  MembershipVerdict v;
  v.ell = ell;
  v.girth = girth(g);
  const std::size_t target = 2 * static_cast<std::size_t>(ell);
  if (!v.girth) {
    v.witness_kind = WitnessKind::Acyclic;
    return v;
  }
  if (*v.girth != target) {
    v.witness_kind = *v.girth < target ? WitnessKind::GirthTooSmall
                                       : WitnessKind::GirthTooLarge;
    v.witness = Hole::from_cycle(shortest_cycle(g)).vertices();
    return v;
  }
  // Deepen by even lengths so the first hole found is a shortest offender.
  for (std::size_t len = target + 2; len <= g.order(); len += 2) {
    for_each_induced_cycle(g, len, len, [&](const VertexList& c) {
      v.witness = Hole::from_cycle(c).vertices();
      return false;
    });
    if (!v.witness.empty()) {
      v.witness_kind = WitnessKind::LongEvenHole;
      return v;
    }
  }
  v.is_member = true;
  return v;
}

std::array<std::size_t, 3> ThetaSubgraph::ear_lengths() const {
  return {ears[0].size() - 1, ears[1].size() - 1, ears[2].size() - 1};
}

VertexList ThetaSubgraph::vertex_set() const {
  VertexList out;
  for (const auto& ear : ears) out.insert(out.end(), ear.begin(), ear.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ThetaSubgraph make_theta(const Graph& g, std::array<VertexList, 3> ears) {
  for (const auto& ear : ears) {
    if (ear.size() < 2) throw GraphError("theta ear needs at least one edge");
  }
  Vertex a = std::min(ears[0].front(), ears[0].back());
  Vertex b = std::max(ears[0].front(), ears[0].back());
  if (a == b) throw GraphError("theta hubs must be distinct");
  std::size_t short_ears = 0;
  std::set<Vertex> interior;
  std::size_t interior_count = 0;
  for (auto& ear : ears) {
    if (ear.front() == b) std::reverse(ear.begin(), ear.end());
    if (ear.front() != a || ear.back() != b) {
      throw GraphError("theta ears must share both hubs");
    }
    if (ear.size() == 2) ++short_ears;
    for (std::size_t i = 0; i + 1 < ear.size(); ++i) {
      if (!g.contains(ear[i]) || !g.contains(ear[i + 1]) ||
          !g.has_edge(ear[i], ear[i + 1])) {
        throw GraphError("theta ear is not a path of the graph");
      }
    }
    for (std::size_t i = 1; i + 1 < ear.size(); ++i) {
      if (ear[i] == a || ear[i] == b) throw GraphError("ear interior meets a hub");
      interior.insert(ear[i]);
      ++interior_count;
    }
  }
  if (short_ears > 1) throw GraphError("two ears of length one would be parallel edges");
  if (interior.size() != interior_count) {
    throw GraphError("theta ears are not internally disjoint");
  }
  std::sort(ears.begin(), ears.end(), [](const VertexList& x, const VertexList& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  ThetaSubgraph h;
  h.hubs = {a, b};
  h.ears = std::move(ears);
  std::size_t ear_edges = 0;
  for (const auto& ear : h.ears) ear_edges += ear.size() - 1;
  auto sub = induced_subgraph(g, h.vertex_set());
  h.induced = sub.graph.size() == ear_edges;
  return h;
}

namespace {

// Arc of the cycle from position i to position j walking forward.
VertexList forward_arc(const VertexList& cycle, std::size_t i, std::size_t j) {
  VertexList arc;
  const std::size_t len = cycle.size();
  for (std::size_t k = i;; k = (k + 1) % len) {
    arc.push_back(cycle[k]);
    if (k == j) break;
  }
  return arc;
}

void collect_induced_thetas(const Graph& g,
                            std::set<VertexList>& seen,
                            std::vector<ThetaSubgraph>& out) {
  const std::size_t n = g.order();
  for_each_induced_cycle(g, 3, n, [&](const VertexList& cycle) {
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < cycle.size(); ++i) pos[cycle[i]] = static_cast<int>(i);
    // Neighbours on the cycle for every outside vertex.
    std::vector<VertexList> touch(n);
    for (Vertex c : cycle) {
      for (Vertex w : g.neighbors(c)) {
        if (pos[w] < 0) touch[w].push_back(c);
      }
    }
    auto emit = [&](Vertex s, Vertex t, const VertexList& path) {
      std::array<VertexList, 3> ears{
          forward_arc(cycle, pos[s], pos[t]), forward_arc(cycle, pos[t], pos[s]), path};
      std::reverse(ears[1].begin(), ears[1].end());
      VertexList key = path;
      key.insert(key.end(), cycle.begin(), cycle.end());
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) return;
      out.push_back(make_theta(g, std::move(ears)));
    };

    std::vector<bool> used(n, false);
    VertexList path;
    // Interior vertices after the first may only touch the cycle at the far
    // end, and only as the last interior vertex.
    std::function<void(Vertex)> walk = [&](Vertex s) {
      const Vertex last = path.back();
      for (Vertex x : g.neighbors(last)) {
        if (pos[x] >= 0 || used[x] || touch[x].size() > 1) continue;
        bool chord = false;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
          if (g.has_edge(x, path[i])) {
            chord = true;
            break;
          }
        }
        if (chord) continue;
        if (touch[x].size() == 1) {
          const Vertex t = touch[x][0];
          if (t > s) {
            path.push_back(x);
            path.push_back(t);
            emit(s, t, path);
            path.pop_back();
            path.pop_back();
          }
          continue;
        }
        used[x] = true;
        path.push_back(x);
        walk(s);
        path.pop_back();
        used[x] = false;
      }
    };

    for (Vertex x = 0; static_cast<std::size_t>(x) < n; ++x) {
      if (pos[x] >= 0) continue;
      if (touch[x].size() == 2) {
        emit(touch[x][0], touch[x][1], VertexList{touch[x][0], x, touch[x][1]});
      } else if (touch[x].size() == 1) {
        const Vertex s = touch[x][0];
        path = {s, x};
        used[x] = true;
        walk(s);
        used[x] = false;
      }
    }
    return true;
  });
}

// Up to three internally vertex-disjoint a-b paths by augmentation on the
// vertex-split network. Returns fewer than three paths when none exist.
std::vector<VertexList> disjoint_paths(const Graph& g, Vertex a, Vertex b) {
  const std::size_t n = g.order();
  // Node 2v is v_in, 2v+1 is v_out. Interior vertices have unit capacity.
  std::vector<std::vector<std::pair<int, int>>> adj(2 * n);  // (to, edge id)
  std::vector<int> cap, to;
  auto add = [&](int u, int v, int c) {
    adj[u].emplace_back(v, static_cast<int>(to.size()));
    to.push_back(v);
    cap.push_back(c);
    adj[v].emplace_back(u, static_cast<int>(to.size()));
    to.push_back(u);
    cap.push_back(0);
  };
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    add(2 * v, 2 * v + 1, (v == a || v == b) ? 3 : 1);
  }
  for (const auto& [u, v] : g.edges()) {
    add(2 * u + 1, 2 * v, 1);
    add(2 * v + 1, 2 * u, 1);
  }
  const int source = 2 * a + 1, sink = 2 * b;
  int flow = 0;
  while (flow < 3) {
    std::vector<int> via(2 * n, -1);
    std::deque<int> queue{source};
    std::vector<bool> seen(2 * n, false);
    seen[source] = true;
    while (!queue.empty() && !seen[sink]) {
      int u = queue.front();
      queue.pop_front();
      for (auto [v, e] : adj[u]) {
        if (cap[e] > 0 && !seen[v]) {
          seen[v] = true;
          via[v] = e;
          queue.push_back(v);
        }
      }
    }
    if (!seen[sink]) break;
    for (int v = sink; v != source; v = to[via[v] ^ 1]) {
      --cap[via[v]];
      ++cap[via[v] ^ 1];
    }
    ++flow;
  }
  std::vector<VertexList> paths;
  if (flow < 3) return paths;
  // Decompose: follow saturated vertex-to-vertex arcs from a.
  auto used_arc = [&](int u, int v) {
    for (auto [w, e] : adj[u]) {
      if (w == v && (e % 2 == 0) && cap[e] == 0) return true;
    }
    return false;
  };
  std::vector<bool> taken(n, false);
  for (int k = 0; k < 3; ++k) {
    VertexList path{a};
    Vertex cur = a;
    while (cur != b) {
      Vertex next = -1;
      for (Vertex w : g.neighbors(cur)) {
        if (taken[w] && w != b) continue;
        if (w == a) continue;
        if (used_arc(2 * cur + 1, 2 * w)) {
          if (w == b && cur == a) {
            // The direct edge carries at most one unit; claim it once.
            bool already = false;
            for (const auto& p : paths) already = already || p.size() == 2;
            if (already) continue;
          }
          next = w;
          break;
        }
      }
      if (next < 0) return {};
      if (next != b) taken[next] = true;
      path.push_back(next);
      cur = next;
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace

std::vector<ThetaSubgraph> find_theta_subgraphs(const Graph& g, bool induced_only) {
  std::vector<ThetaSubgraph> out;
  std::set<VertexList> seen;
  if (induced_only) {
    collect_induced_thetas(g, seen, out);
  } else {
    for (Vertex a = 0; static_cast<std::size_t>(a) < g.order(); ++a) {
      if (g.degree(a) < 3) continue;
      for (Vertex b = a + 1; static_cast<std::size_t>(b) < g.order(); ++b) {
        if (g.degree(b) < 3) continue;
        auto paths = disjoint_paths(g, a, b);
        if (paths.size() != 3) continue;
        auto h = make_theta(g, {paths[0], paths[1], paths[2]});
        if (seen.insert(h.vertex_set()).second) out.push_back(std::move(h));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ThetaSubgraph& x, const ThetaSubgraph& y) {
    if (x.hubs != y.hubs) return x.hubs < y.hubs;
    return x.ears < y.ears;
  });
  return out;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Violation: return "VIOLATION";
    case Status::Vacuous: return "VACUOUS";
    case Status::Truncated: return "TRUNCATED";
  }
  return "UNKNOWN";
}

std::optional<Status> status_from_string(const std::string& s) {
  for (auto st : {Status::Pass, Status::Violation, Status::Vacuous, Status::Truncated}) {
    if (to_string(st) == s) return st;
  }
  return std::nullopt;
}

EarLemmaResult check_theta_ear_lemma(const ThetaSubgraph& h, int ell) {
  if (!h.induced) throw GraphError("ear-length lemma applies to induced thetas only");
  EarLemmaResult r;
  r.ear_lengths = h.ear_lengths();
  const auto [a, b, c] = r.ear_lengths;
  const std::size_t l = static_cast<std::size_t>(ell);
  const auto ones = std::count(r.ear_lengths.begin(), r.ear_lengths.end(), 1u);
  auto lengths = [&] {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ")";
  };
  if (a % 2 == b % 2 && b % 2 == c % 2) {
    r.lemma_case = 1;
    if (a == l && b == l && c == l) {
      r.detail = "all ears length l";
    } else if (ones == 1) {
      r.detail = "exactly one ear length one";
    } else {
      r.status = Status::Violation;
      r.detail = "all cycles even but ears " + lengths() +
                 " are neither all l nor contain exactly one ear of length one";
    }
    return r;
  }
  r.lemma_case = 2;
  // The ear whose parity differs from the other two lies on both odd cycles.
  std::size_t shared, p, q;
  if (a % 2 == b % 2) {
    shared = c, p = a, q = b;
  } else if (a % 2 == c % 2) {
    shared = b, p = a, q = c;
  } else {
    shared = a, p = b, q = c;
  }
  const std::size_t bound = std::max({l, p, q});
  if (shared == 1) {
    r.detail = "odd-cycle ear has length one";
  } else if (shared > bound) {
    r.detail = "odd-cycle ear " + std::to_string(shared) + " exceeds max(l,|P|,|P'|)=" +
               std::to_string(bound);
  } else {
    r.status = Status::Violation;
    r.detail = "odd-cycle ear " + std::to_string(shared) + " of " + lengths() +
               " is neither one nor above " + std::to_string(bound);
  }
  return r;
}

}  // namespace evenhole
