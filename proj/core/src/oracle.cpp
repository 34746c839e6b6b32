#include "dptree/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdint>
#include <functional>
#include <queue>
#include <set>
#include <thread>

#include "dptree/error.hpp"
#include "dptree/maxflow.hpp"

namespace dptree {

namespace {

using Mask = std::uint32_t;

void check_size(const Digraph& host, int max_vertices, bool force, const char* what) {
  if (!force && host.vertex_count() > max_vertices) {
    throw Error(ErrorCode::InstanceTooLarge,
                std::string(what) + ": " + std::to_string(host.vertex_count()) +
                    " vertices exceeds the bound " + std::to_string(max_vertices) +
                    " (use force to override)");
  }
}

void check_spec(const Digraph& host, const TerminalSpec& spec) {
  for (VertexId s : spec.terminals()) {
    if (!host.is_vertex(s)) throw Error(ErrorCode::InvalidVertex, "terminal " + std::to_string(s));
  }
}

// Non-terminal vertices get dense bit positions.
struct Instance {
  Instance(const Digraph& g, const TerminalSpec& s) : host(g), spec(s) {
    index.assign(g.vertex_count(), -1);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!s.is_terminal(v)) {
        index[v] = static_cast<int>(free.size());
        free.push_back(v);
      }
    }
    f = static_cast<int>(free.size());
    full = f == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << f) - 1);
  }

  const Digraph& host;
  TerminalSpec spec;
  std::vector<VertexId> free;
  std::vector<int> index;
  int f = 0;
  Mask full = 0;
};

// t[m] holds the free vertices v for which a path anchor -> v (forward) or
// v -> anchor (backward) has free vertex set exactly m.
std::vector<Mask> path_table(const Instance& in, VertexId anchor, bool forward) {
  const std::size_t size = std::size_t{1} << in.f;
  std::vector<Mask> t(size, 0);
  auto step = [&](VertexId v) {
    return forward ? in.host.out_neighbors(v) : in.host.in_neighbors(v);
  };
  for (VertexId u : step(anchor)) {
    if (int i = in.index[u]; i >= 0) t[Mask{1} << i] |= Mask{1} << i;
  }
  for (Mask m = 1; m < size; ++m) {
    for (Mask ends = t[m]; ends != 0; ends &= ends - 1) {
      const int e = std::countr_zero(ends);
      for (VertexId u : step(in.free[e])) {
        const int i = in.index[u];
        if (i >= 0 && !((m >> i) & 1)) t[m | (Mask{1} << i)] |= Mask{1} << i;
      }
    }
  }
  return t;
}

// Inclusion-minimal free-vertex sets that carry a minimal pendant tree.
std::vector<Mask> minimal_supports(const Instance& in) {
  const std::size_t size = std::size_t{1} << in.f;
  const auto pr = path_table(in, in.spec.root(), true);
  const auto rx = path_table(in, in.spec.x(), false);
  const auto ry = path_table(in, in.spec.y(), false);

  std::vector<std::uint8_t> feasible(size, 0);
  std::vector<std::uint8_t> xy(size, 0);
  for (int a = 0; a < in.f; ++a) {
    const Mask abit = Mask{1} << a;
    std::fill(xy.begin(), xy.end(), 0);
    for (Mask b = 0; b < size; ++b) {
      if (!(b & abit) || !(rx[b] & abit)) continue;
      const Mask rest = in.full & ~b;
      for (Mask c = rest;; c = (c - 1) & rest) {
        if (ry[c | abit] & abit) xy[b | c] = 1;
        if (c == 0) break;
      }
    }
    for (Mask nmask = 0; nmask < size; ++nmask) {
      if (!xy[nmask]) continue;
      const Mask rest = in.full & ~nmask;
      for (Mask c = rest;; c = (c - 1) & rest) {
        if (pr[c | abit] & abit) feasible[nmask | c] = 1;
        if (c == 0) break;
      }
    }
  }

  std::vector<std::uint8_t> support = feasible;
  for (int i = 0; i < in.f; ++i) {
    for (Mask m = 0; m < size; ++m) {
      if ((m >> i) & 1) support[m] |= support[m ^ (Mask{1} << i)];
    }
  }
  std::vector<Mask> result;
  for (Mask m = 1; m < size; ++m) {
    if (!feasible[m]) continue;
    bool minimal = true;
    for (Mask bits = m; bits != 0 && minimal; bits &= bits - 1) {
      if (support[m ^ (bits & -bits)]) minimal = false;
    }
    if (minimal) result.push_back(m);
  }
  std::stable_sort(result.begin(), result.end(), [](Mask a, Mask b) {
    return std::popcount(a) < std::popcount(b);
  });
  return result;
}

class Packer {
 public:
  Packer(const Instance& in, std::vector<Mask> sets, int cap)
      : in_(in), cap_(cap), memo_(std::size_t{1} << in.f, -1), by_low_(in.f) {
    for (Mask s : sets) by_low_[std::countr_zero(s)].push_back(s);
  }

  int value(Mask m) {
    if (m == 0) return 0;
    if (memo_[m] >= 0) return memo_[m];
    const Mask low = m & -m;
    int best = value(m & ~low);
    for (Mask s : by_low_[std::countr_zero(m)]) {
      if (best >= cap_) break;
      if ((s & ~m) == 0) best = std::max(best, std::min(1 + value(m & ~s), cap_));
    }
    memo_[m] = static_cast<std::int8_t>(best);
    return best;
  }

  std::vector<Mask> choose(int count) {
    std::vector<Mask> chosen;
    Mask m = in_.full;
    while (static_cast<int>(chosen.size()) < count) {
      const int need = count - static_cast<int>(chosen.size());
      const Mask low = m & -m;
      if (value(m & ~low) >= need) {
        m &= ~low;
        continue;
      }
      for (Mask s : by_low_[std::countr_zero(m)]) {
        if ((s & ~m) == 0 && 1 + value(m & ~s) >= need) {
          chosen.push_back(s);
          m &= ~s;
          break;
        }
      }
    }
    return chosen;
  }

 private:
  const Instance& in_;
  int cap_;
  std::vector<std::int8_t> memo_;
  std::vector<std::vector<Mask>> by_low_;
};

// Depth-first search for a path from `from` to `target` whose intermediate
// vertices are free, inside `allowed` and not yet `used`.
bool search_path(const Instance& in, VertexId from, VertexId target, Mask allowed, Mask& used,
                 std::vector<VertexId>& path, const std::function<bool()>& found) {
  for (VertexId u : in.host.out_neighbors(from)) {
    if (u == target) {
      path.push_back(u);
      if (found()) return true;
      path.pop_back();
      continue;
    }
    const int i = in.index[u];
    if (i < 0 || !((allowed >> i) & 1) || ((used >> i) & 1)) continue;
    used |= Mask{1} << i;
    path.push_back(u);
    if (search_path(in, u, target, allowed, used, path, found)) return true;
    path.pop_back();
    used &= ~(Mask{1} << i);
  }
  return false;
}

std::vector<Arc> path_arcs(const std::vector<VertexId>& path) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) arcs.push_back({path[i], path[i + 1]});
  return arcs;
}

// A minimal pendant tree using only free vertices from `allowed`.
std::optional<OutTree> tree_within(const Instance& in, Mask allowed) {
  const VertexId r = in.spec.root(), x = in.spec.x(), y = in.spec.y();
  std::optional<OutTree> result;
  for (Mask bits = allowed; bits != 0 && !result; bits &= bits - 1) {
    const int ai = std::countr_zero(bits);
    const VertexId alpha = in.free[ai];
    Mask used = Mask{1} << ai;
    std::vector<VertexId> p1{r}, p2{alpha}, p3{alpha};
    search_path(in, r, alpha, allowed, used, p1, [&] {
      return search_path(in, alpha, x, allowed, used, p2, [&] {
        return search_path(in, alpha, y, allowed, used, p3, [&] {
          std::vector<Arc> arcs = path_arcs(p1);
          for (const auto* p : {&p2, &p3}) {
            auto more = path_arcs(*p);
            arcs.insert(arcs.end(), more.begin(), more.end());
          }
          result = assemble_tree(in.host, r, arcs);
          return true;
        });
      });
    });
  }
  return result;
}

// BFS over free vertices in `avail`, forward from `from` or backward from it.
std::vector<VertexId> bfs_parents(const Instance& in, VertexId from, Mask avail, bool forward,
                                  std::vector<int>& dist) {
  const VertexId n = in.host.vertex_count();
  std::vector<VertexId> parent(n, -1);
  dist.assign(n, INT_MAX);
  dist[from] = 0;
  std::queue<VertexId> queue;
  queue.push(from);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    auto nbrs = forward ? in.host.out_neighbors(v) : in.host.in_neighbors(v);
    for (VertexId u : nbrs) {
      const int i = in.index[u];
      if (i < 0 || !((avail >> i) & 1) || dist[u] != INT_MAX) continue;
      dist[u] = dist[v] + 1;
      parent[u] = v;
      queue.push(u);
    }
  }
  return parent;
}

// Shortest path from -> target with free intermediates in avail.
std::optional<std::vector<VertexId>> shortest_path(const Instance& in, VertexId from,
                                                   VertexId target, Mask avail) {
  std::vector<VertexId> parent(in.host.vertex_count(), -1);
  std::vector<char> seen(in.host.vertex_count(), 0);
  std::queue<VertexId> queue;
  queue.push(from);
  seen[from] = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    for (VertexId u : in.host.out_neighbors(v)) {
      if (seen[u]) continue;
      if (u == target) {
        std::vector<VertexId> path{u};
        for (VertexId w = v; w != -1; w = parent[w]) path.push_back(w);
        std::reverse(path.begin(), path.end());
        return path;
      }
      const int i = in.index[u];
      if (i < 0 || !((avail >> i) & 1)) continue;
      seen[u] = 1;
      parent[u] = v;
      queue.push(u);
    }
  }
  return std::nullopt;
}

Mask free_mask(const Instance& in, const std::vector<VertexId>& path) {
  Mask m = 0;
  for (VertexId v : path) {
    if (in.index[v] >= 0) m |= Mask{1} << in.index[v];
  }
  return m;
}

// Repeatedly peels off a short tree; a lower bound only.
std::vector<OutTree> greedy_packing(const Instance& in, int cap) {
  const VertexId r = in.spec.root(), x = in.spec.x(), y = in.spec.y();
  std::vector<OutTree> trees;
  Mask avail = in.full;
  while (static_cast<int>(trees.size()) < cap) {
    std::vector<int> dr, dx, dy;
    auto pr = bfs_parents(in, r, avail, true, dr);
    bfs_parents(in, x, avail, false, dx);
    bfs_parents(in, y, avail, false, dy);
    std::vector<std::pair<long, VertexId>> order;
    for (Mask bits = avail; bits != 0; bits &= bits - 1) {
      const VertexId a = in.free[std::countr_zero(bits)];
      if (dr[a] == INT_MAX || dx[a] == INT_MAX || dy[a] == INT_MAX) continue;
      order.push_back({static_cast<long>(dr[a]) + dx[a] + dy[a], a});
    }
    std::sort(order.begin(), order.end());
    bool placed = false;
    for (const auto& [cost, alpha] : order) {
      std::vector<VertexId> p1{alpha};
      while (p1.back() != r) p1.push_back(pr[p1.back()]);
      std::reverse(p1.begin(), p1.end());
      Mask left = avail & ~free_mask(in, p1);
      auto p2 = shortest_path(in, alpha, x, left);
      if (!p2) continue;
      left &= ~free_mask(in, *p2);
      auto p3 = shortest_path(in, alpha, y, left);
      if (!p3) continue;
      std::vector<Arc> arcs = path_arcs(p1);
      for (const auto* p : {&*p2, &*p3}) {
        auto more = path_arcs(*p);
        arcs.insert(arcs.end(), more.begin(), more.end());
      }
      trees.push_back(assemble_tree(in.host, r, arcs));
      avail = left & ~free_mask(in, *p3);
      placed = true;
      break;
    }
    if (!placed) break;
  }
  return trees;
}

// Disjoint r -> t paths through non-terminals cap the packing: every tree
// holds one such path to each leaf.
int leaf_path_bound(const Instance& in, VertexId leaf, VertexId other) {
  const VertexId r = in.spec.root();
  std::vector<Arc> arcs;
  for (const Arc& a : in.host.arcs()) {
    if (a.tail == other || a.head == other) continue;
    if (a.tail == r && a.head == leaf) continue;
    arcs.push_back(a);
  }
  Digraph g = Digraph::from_arcs(in.host.vertex_count(), arcs);
  return max_internally_disjoint_paths(g, r, leaf);
}

int upper_bound(const Instance& in) {
  auto count_free = [&](std::span<const VertexId> nbrs) {
    return static_cast<int>(std::count_if(nbrs.begin(), nbrs.end(),
                                          [&](VertexId v) { return in.index[v] >= 0; }));
  };
  int ub = count_free(in.host.out_neighbors(in.spec.root()));
  ub = std::min(ub, count_free(in.host.in_neighbors(in.spec.x())));
  ub = std::min(ub, count_free(in.host.in_neighbors(in.spec.y())));
  if (ub == 0) return 0;
  ub = std::min(ub, leaf_path_bound(in, in.spec.x(), in.spec.y()));
  ub = std::min(ub, leaf_path_bound(in, in.spec.y(), in.spec.x()));
  return ub;
}

}  // namespace

PackingResult tau_s_r(const Digraph& host, const TerminalSpec& spec,
                      const OracleOptions& options) {
  check_size(host, options.max_vertices, options.force, "tau_s_r");
  check_spec(host, spec);
  Instance in(host, spec);
  if (in.f > 22) {
    throw Error(ErrorCode::InstanceTooLarge, "more than 22 non-terminal vertices");
  }
  int cap = options.cap < 0 ? INT8_MAX : std::min(options.cap, int{INT8_MAX});
  cap = std::min(cap, upper_bound(in));
  PackingResult result;
  if (cap == 0) return result;

  result.witness = greedy_packing(in, cap);
  if (static_cast<int>(result.witness.size()) >= cap) {
    result.value = cap;
    return result;
  }
  Packer packer(in, minimal_supports(in), cap);
  result.value = packer.value(in.full);
  if (result.value <= static_cast<int>(result.witness.size())) {
    result.witness.erase(result.witness.begin() + result.value, result.witness.end());
    return result;
  }
  result.witness.clear();
  for (Mask s : packer.choose(result.value)) {
    auto t = tree_within(in, s);
    if (!t) throw Error(ErrorCode::InternalContractViolation, "support set without a tree");
    result.witness.push_back(*t);
  }
  return result;
}

std::vector<OutTree> enumerate_minimal_pendant_trees(const Digraph& host,
                                                     const TerminalSpec& spec,
                                                     const EnumerationOptions& options) {
  check_size(host, options.max_vertices, options.force, "enumerate_minimal_pendant_trees");
  check_spec(host, spec);
  const VertexId r = spec.root(), x = spec.x(), y = spec.y();
  std::vector<char> used(host.vertex_count(), 0);
  for (VertexId s : spec.terminals()) used[s] = 1;
  std::set<std::vector<Arc>> seen;
  std::vector<VertexId> p1, p2, p3;

  // Every simple path from `from` to `target` through unused vertices.
  std::function<void(VertexId, VertexId, std::vector<VertexId>&, const std::function<void()>&)>
      walk = [&](VertexId from, VertexId target, std::vector<VertexId>& path,
                 const std::function<void()>& found) {
        for (VertexId u : host.out_neighbors(from)) {
          if (u == target) {
            path.push_back(u);
            found();
            path.pop_back();
          } else if (!used[u]) {
            used[u] = 1;
            path.push_back(u);
            walk(u, target, path, found);
            path.pop_back();
            used[u] = 0;
          }
        }
      };

  for (VertexId alpha = 0; alpha < host.vertex_count(); ++alpha) {
    if (spec.is_terminal(alpha)) continue;
    used[alpha] = 1;
    p1 = {r};
    walk(r, alpha, p1, [&] {
      p2 = {alpha};
      walk(alpha, x, p2, [&] {
        p3 = {alpha};
        walk(alpha, y, p3, [&] {
          std::vector<Arc> arcs = path_arcs(p1);
          for (const auto* p : {&p2, &p3}) {
            auto more = path_arcs(*p);
            arcs.insert(arcs.end(), more.begin(), more.end());
          }
          std::sort(arcs.begin(), arcs.end());
          seen.insert(std::move(arcs));
          if (seen.size() > options.max_candidates) {
            throw Error(ErrorCode::InstanceTooLarge,
                        "more than " + std::to_string(options.max_candidates) + " candidates");
          }
        });
      });
    });
    used[alpha] = 0;
  }

  std::vector<std::vector<Arc>> sorted(seen.begin(), seen.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<OutTree> trees;
  trees.reserve(sorted.size());
  for (const auto& arcs : sorted) trees.push_back(assemble_tree(host, r, arcs));
  return trees;
}

PackingResult tau_s_r_branch_and_bound(const Digraph& host, const TerminalSpec& spec,
                                       const EnumerationOptions& options) {
  if (host.vertex_count() > 64) {
    throw Error(ErrorCode::InstanceTooLarge, "branch-and-bound supports at most 64 vertices");
  }
  auto candidates = enumerate_minimal_pendant_trees(host, spec, options);
  std::vector<std::uint64_t> inner;
  for (const OutTree& t : candidates) {
    std::uint64_t m = 0;
    for (VertexId v : t.vertices()) {
      if (!spec.is_terminal(v)) m |= std::uint64_t{1} << v;
    }
    inner.push_back(m);
  }
  std::uint64_t all_free = 0;
  for (VertexId v = 0; v < host.vertex_count(); ++v) {
    if (!spec.is_terminal(v)) all_free |= std::uint64_t{1} << v;
  }

  std::vector<std::size_t> current, best;
  std::function<void(std::size_t, std::uint64_t)> search = [&](std::size_t from,
                                                               std::uint64_t taken) {
    if (current.size() > best.size()) best = current;
    const std::size_t remaining = candidates.size() - from;
    const std::size_t free_left = std::popcount(all_free & ~taken);
    if (current.size() + std::min(remaining, free_left) <= best.size()) return;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      if (inner[i] & taken) continue;
      current.push_back(i);
      search(i + 1, taken | inner[i]);
      current.pop_back();
      if (current.size() + std::min(candidates.size() - i - 1,
                                    static_cast<std::size_t>(
                                        std::popcount(all_free & ~taken))) <= best.size()) {
        return;
      }
    }
  };
  search(0, 0);

  PackingResult result;
  result.value = static_cast<int>(best.size());
  for (std::size_t i : best) result.witness.push_back(candidates[i]);
  return result;
}

Tau3Result tau3(const Digraph& host, const Tau3Options& options) {
  const VertexId n = host.vertex_count();
  if (n < 3) throw Error(ErrorCode::InvalidParameter, "tau3 needs at least three vertices");
  check_size(host, options.max_vertices, options.force, "tau3");

  Tau3Result result;
  // A vertex with semi-degree at most 2 can be boxed in by the other two
  // terminals, so no pendant tree exists for that triple.
  for (VertexId v = 0; v < n; ++v) {
    if (host.out_degree(v) <= 2 || host.in_degree(v) <= 2) {
      const bool out_side = host.out_degree(v) <= 2;
      auto nbrs = out_side ? host.out_neighbors(v) : host.in_neighbors(v);
      std::vector<VertexId> others(nbrs.begin(), nbrs.end());
      for (VertexId u = 0; u < n && others.size() < 2; ++u) {
        if (u != v && std::find(others.begin(), others.end(), u) == others.end()) {
          others.push_back(u);
        }
      }
      std::sort(others.begin(), others.end());
      result.fast_path = true;
      result.witness_spec = out_side ? TerminalSpec(v, others[0], others[1])
                                     : TerminalSpec(others[0], v, others[1]);
      return result;
    }
  }

  std::vector<TerminalSpec> specs;
  for (VertexId r = 0; r < n; ++r) {
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId y = x + 1; y < n; ++y) {
        if (x != r && y != r) specs.emplace_back(r, x, y);
      }
    }
  }

  OracleOptions inner{n, true, -1};
  std::vector<int> capped(specs.size(), INT_MAX);
  std::atomic<int> best{INT_MAX};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      int cap = best.load();
      if (cap == 0) break;
      OracleOptions o = inner;
      o.cap = cap == INT_MAX ? -1 : cap;
      const int v = tau_s_r(host, specs[i], o).value;
      capped[i] = v;
      int seen = best.load();
      while (v < seen && !best.compare_exchange_weak(seen, v)) {
      }
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  result.value = best.load();
  // Capped values equal to the minimum may hide larger true values; confirm
  // in order so the witness is the first spec attaining it.
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (capped[i] != result.value) continue;
    OracleOptions o = inner;
    o.cap = result.value + 1;
    if (tau_s_r(host, specs[i], o).value == result.value) {
      result.witness_spec = specs[i];
      break;
    }
  }
  if (result.witness_spec) {
    result.witness_family = tau_s_r(host, *result.witness_spec, inner).witness;
  }
  return result;
}

NecessaryConditionReport check_necessary_conditions(const Digraph& host, int l) {
  NecessaryConditionReport report;
  report.l = l;
  report.kappa = vertex_connectivity(host);
  report.min_semi_degree = min_semi_degree(host);
  report.kappa_margin = report.kappa - (l + 1);
  report.degree_margin = report.min_semi_degree - (l + 2);
  return report;
}

}  // namespace dptree
