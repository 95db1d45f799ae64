#include "ortho/edge_routing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "ortho/errors.hpp"

namespace ortho {

namespace {
constexpr double kLenEps = 1e-7;
}

Dir direction_between(const Point& from, const Point& to) {
  if (nearly_equal(from.y, to.y)) return to.x > from.x ? Dir::East : Dir::West;
  return to.y > from.y ? Dir::North : Dir::South;
}

Dir opposite(Dir d) {
  switch (d) {
    case Dir::East: return Dir::West;
    case Dir::West: return Dir::East;
    case Dir::North: return Dir::South;
    case Dir::South: return Dir::North;
    default: return Dir::None;
  }
}

bool is_horizontal(Dir d) { return d == Dir::East || d == Dir::West; }

EdgePath route_edge(const RoutingGraph& h, int source_vertex, int target_vertex, int edge,
                    const std::string& edge_id) {
  EdgePath out;
  out.edge = edge;
  if (source_vertex == target_vertex) {
    out.verts = {source_vertex};
    return out;
  }

  struct State {
    double len;
    int bends;
    int vertex;
    int dir;
    long long seq;
  };
  struct Better {
    bool operator()(const State& a, const State& b) const {
      if (std::fabs(a.len - b.len) > kLenEps) return a.len > b.len;
      if (a.bends != b.bends) return a.bends > b.bends;
      if (a.dir != b.dir) return a.dir > b.dir;
      return a.seq > b.seq;
    }
  };

  int nv = static_cast<int>(h.verts.size());
  std::vector<std::array<double, 5>> len(static_cast<size_t>(nv));
  std::vector<std::array<int, 5>> bends(static_cast<size_t>(nv));
  std::vector<std::array<std::pair<int, int>, 5>> parent(static_cast<size_t>(nv));
  std::vector<std::array<char, 5>> done(static_cast<size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    len[static_cast<size_t>(v)].fill(std::numeric_limits<double>::infinity());
    bends[static_cast<size_t>(v)].fill(std::numeric_limits<int>::max());
    done[static_cast<size_t>(v)].fill(0);
    parent[static_cast<size_t>(v)].fill({-1, -1});
  }

  std::priority_queue<State, std::vector<State>, Better> pq;
  long long seq = 0;
  len[static_cast<size_t>(source_vertex)][4] = 0.0;
  bends[static_cast<size_t>(source_vertex)][4] = 0;
  pq.push({0.0, 0, source_vertex, 4, seq++});

  auto improves = [&](double nl, int nb, int v, int d) {
    double cl = len[static_cast<size_t>(v)][static_cast<size_t>(d)];
    int cb = bends[static_cast<size_t>(v)][static_cast<size_t>(d)];
    if (nl < cl - kLenEps) return true;
    if (nl <= cl + kLenEps && nb < cb) return true;
    return false;
  };

  while (!pq.empty()) {
    State s = pq.top();
    pq.pop();
    if (done[static_cast<size_t>(s.vertex)][static_cast<size_t>(s.dir)]) continue;
    done[static_cast<size_t>(s.vertex)][static_cast<size_t>(s.dir)] = 1;

    for (int ei : h.incident[static_cast<size_t>(s.vertex)]) {
      const auto& e = h.edges[static_cast<size_t>(ei)];
      int w = h.other(ei, s.vertex);
      Dir d = direction_between(h.verts[static_cast<size_t>(s.vertex)].p,
                                h.verts[static_cast<size_t>(w)].p);
      int di = static_cast<int>(d);
      double nl = s.len + e.length;
      int nb = s.bends + ((s.dir != 4 && s.dir != di) ? 1 : 0);
      if (improves(nl, nb, w, di)) {
        len[static_cast<size_t>(w)][static_cast<size_t>(di)] = nl;
        bends[static_cast<size_t>(w)][static_cast<size_t>(di)] = nb;
        parent[static_cast<size_t>(w)][static_cast<size_t>(di)] = {s.vertex, s.dir};
        pq.push({nl, nb, w, di, seq++});
      }
    }
  }

  int best_dir = -1;
  for (int d = 0; d < 4; ++d) {
    if (!std::isfinite(len[static_cast<size_t>(target_vertex)][static_cast<size_t>(d)])) continue;
    if (best_dir < 0 ||
        improves(len[static_cast<size_t>(target_vertex)][static_cast<size_t>(d)],
                 bends[static_cast<size_t>(target_vertex)][static_cast<size_t>(d)],
                 target_vertex, best_dir)) {
      best_dir = d;
    }
  }
  if (best_dir < 0) {
    throw RoutingError(edge_id.empty() ? std::to_string(edge) : edge_id,
                       "ports are disconnected in the routing graph");
  }

  std::vector<int> rev;
  int v = target_vertex, d = best_dir;
  while (v != -1) {
    rev.push_back(v);
    auto [pv, pd] = parent[static_cast<size_t>(v)][static_cast<size_t>(d)];
    v = pv;
    d = pd;
  }
  out.verts.assign(rev.rbegin(), rev.rend());
  return out;
}

std::optional<double> shortest_path_length(const RoutingGraph& h, int source, int target) {
  std::vector<double> dist(h.verts.size(), std::numeric_limits<double>::infinity());
  using QT = std::pair<double, int>;
  std::priority_queue<QT, std::vector<QT>, std::greater<>> pq;
  dist[static_cast<size_t>(source)] = 0.0;
  pq.push({0.0, source});
  while (!pq.empty()) {
    auto [dl, v] = pq.top();
    pq.pop();
    if (dl > dist[static_cast<size_t>(v)] + kLenEps) continue;
    for (int ei : h.incident[static_cast<size_t>(v)]) {
      int w = h.other(ei, v);
      double nl = dl + h.edges[static_cast<size_t>(ei)].length;
      if (nl < dist[static_cast<size_t>(w)] - kLenEps) {
        dist[static_cast<size_t>(w)] = nl;
        pq.push({nl, w});
      }
    }
  }
  if (!std::isfinite(dist[static_cast<size_t>(target)])) return std::nullopt;
  return dist[static_cast<size_t>(target)];
}

int turn_side(Dir travel, Dir exit) {
  if (exit == travel || exit == opposite(travel)) return 0;
  // Left of travel: E->N, N->W, W->S, S->E.
  static constexpr Dir left_of[4] = {Dir::North, Dir::West, Dir::South, Dir::East};
  if (exit == left_of[static_cast<int>(travel)]) return -1;
  return 1;
}

namespace {

std::vector<SharedRun> shared_runs(const EdgePath& p, const EdgePath& q,
                                   const std::map<int, int>& qpos) {
  std::vector<SharedRun> runs;
  int np = static_cast<int>(p.verts.size());
  int i = 0;
  while (i < np) {
    auto it = qpos.find(p.verts[static_cast<size_t>(i)]);
    if (it == qpos.end()) {
      ++i;
      continue;
    }
    int qstart = it->second;
    int j = i;
    int qdir = 0;
    int qcur = qstart;
    while (j + 1 < np) {
      auto nx = qpos.find(p.verts[static_cast<size_t>(j + 1)]);
      if (nx == qpos.end()) break;
      int step = nx->second - qcur;
      if (step != 1 && step != -1) break;
      if (qdir == 0) {
        qdir = step;
      } else if (step != qdir) {
        break;
      }
      qcur = nx->second;
      ++j;
    }
    runs.push_back({i, j, qstart, qcur});
    i = j + 1;
  }
  return runs;
}

// Cyclic interleaving of two direction pairs around a vertex.
bool directions_interleave(Dir p1, Dir p2, Dir q1, Dir q2) {
  auto idx = [](Dir d) { return static_cast<int>(d); };
  int a = idx(p1), b = idx(p2);
  auto between = [&](int x) {
    // walk clockwise from a to b; is x strictly inside?
    for (int c = (a + 1) % 4; c != b; c = (c + 1) % 4) {
      if (c == x) return true;
    }
    return false;
  };
  bool q1_in = between(idx(q1));
  bool q2_in = between(idx(q2));
  return q1_in != q2_in;
}

}  // namespace

std::vector<SharedRun> path_shared_runs(const EdgePath& p, const EdgePath& q) {
  std::map<int, int> qpos;
  for (int k = 0; k < static_cast<int>(q.verts.size()); ++k) {
    qpos[q.verts[static_cast<size_t>(k)]] = k;
  }
  return shared_runs(p, q, qpos);
}

int path_crossings(const RoutingGraph& h, const EdgePath& p, const EdgePath& q) {
  if (p.verts.size() < 2 || q.verts.size() < 2) return 0;
  std::map<int, int> qpos;
  for (int k = 0; k < static_cast<int>(q.verts.size()); ++k) qpos[q.verts[static_cast<size_t>(k)]] = k;

  auto pt = [&](int vid) { return h.verts[static_cast<size_t>(vid)].p; };
  auto pdir = [&](const EdgePath& path, int from_idx, int to_idx) {
    return direction_between(pt(path.verts[static_cast<size_t>(from_idx)]),
                             pt(path.verts[static_cast<size_t>(to_idx)]));
  };

  int crossings = 0;
  for (const SharedRun& run : shared_runs(p, q, qpos)) {
    int np = static_cast<int>(p.verts.size());
    int nq = static_cast<int>(q.verts.size());
    if (run.p_begin == run.p_end) {
      // Single shared vertex: transversal iff the two direction pairs interleave.
      int pi = run.p_begin, qi = run.q_begin;
      if (pi == 0 || pi == np - 1 || qi == 0 || qi == nq - 1) continue;
      Dir p1 = pdir(p, pi, pi - 1), p2 = pdir(p, pi, pi + 1);
      Dir q1 = pdir(q, qi, qi - 1), q2 = pdir(q, qi, qi + 1);
      if (directions_interleave(p1, p2, q1, q2)) ++crossings;
      continue;
    }
    // Proper shared subpath: sides at both ends decide.
    // Start end: travel points into the run.
    Dir d_start = pdir(p, run.p_begin, run.p_begin + 1);
    std::optional<int> ps_side, qs_side, pe_side, qe_side;
    if (run.p_begin > 0) ps_side = turn_side(d_start, pdir(p, run.p_begin, run.p_begin - 1));
    int q_start = run.q_begin;
    int q_step = run.q_end >= run.q_begin ? 1 : -1;
    if (q_start - q_step >= 0 && q_start - q_step < nq) {
      qs_side = turn_side(d_start, pdir(q, q_start, q_start - q_step));
    }
    Dir d_end = pdir(p, run.p_end - 1, run.p_end);
    if (run.p_end + 1 < np) pe_side = turn_side(d_end, pdir(p, run.p_end, run.p_end + 1));
    int q_end = run.q_end;
    if (q_end + q_step >= 0 && q_end + q_step < nq) {
      qe_side = turn_side(d_end, pdir(q, q_end, q_end + q_step));
    }
    if (ps_side && qs_side && pe_side && qe_side) {
      int start_order = *ps_side - *qs_side;
      int end_order = *pe_side - *qe_side;
      if (start_order != 0 && end_order != 0 &&
          ((start_order > 0) != (end_order > 0))) {
        ++crossings;
      }
    }
  }
  return crossings;
}

namespace {

void rewrite_section(const EdgePath& keep, EdgePath& rw) {
  std::set<int> shared;
  {
    std::set<int> kv(keep.verts.begin(), keep.verts.end());
    for (int v : rw.verts) {
      if (kv.count(v)) shared.insert(v);
    }
  }
  int f_idx = -1, l_idx = -1;
  for (int i = 0; i < static_cast<int>(rw.verts.size()); ++i) {
    if (shared.count(rw.verts[static_cast<size_t>(i)])) {
      if (f_idx < 0) f_idx = i;
      l_idx = i;
    }
  }
  if (f_idx < 0 || l_idx <= f_idx) return;
  int f = rw.verts[static_cast<size_t>(f_idx)];
  int l = rw.verts[static_cast<size_t>(l_idx)];
  int pf = -1, pl = -1;
  for (int i = 0; i < static_cast<int>(keep.verts.size()); ++i) {
    if (keep.verts[static_cast<size_t>(i)] == f) pf = i;
    if (keep.verts[static_cast<size_t>(i)] == l) pl = i;
  }
  std::vector<int> section;
  if (pf <= pl) {
    section.assign(keep.verts.begin() + pf, keep.verts.begin() + pl + 1);
  } else {
    section.assign(keep.verts.begin() + pl, keep.verts.begin() + pf + 1);
    std::reverse(section.begin(), section.end());
  }
  std::vector<int> result(rw.verts.begin(), rw.verts.begin() + f_idx);
  result.insert(result.end(), section.begin(), section.end());
  result.insert(result.end(), rw.verts.begin() + l_idx + 1, rw.verts.end());
  rw.verts = std::move(result);
}

}  // namespace

std::vector<EdgePath> reduce_crossings(const RoutingGraph& h, std::vector<EdgePath> paths) {
  int n = static_cast<int>(paths.size());
  long rewrites = 0;
  const long cap = 16L + 4L * n * n;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n && !changed; ++i) {
      for (int j = i + 1; j < n && !changed; ++j) {
        if (path_crossings(h, paths[static_cast<size_t>(i)], paths[static_cast<size_t>(j)]) > 1) {
          rewrite_section(paths[static_cast<size_t>(i)], paths[static_cast<size_t>(j)]);
          changed = true;
          if (++rewrites > cap) {
            throw InternalError("reduce_crossings did not reach a fixed point");
          }
        }
      }
    }
  }
  return paths;
}

}  // namespace ortho
