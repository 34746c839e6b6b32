#include "dptree/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <string>

#include "dptree/error.hpp"
#include "dptree/maxflow.hpp"

namespace dptree {

VertexSet::VertexSet(std::initializer_list<VertexId> ids)
    : VertexSet(std::vector<VertexId>(ids)) {}

VertexSet::VertexSet(std::vector<VertexId> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Digraph::Digraph(VertexId vertex_count) {
  if (vertex_count < 0) {
    throw Error(ErrorCode::InvalidParameter, "negative vertex count");
  }
  out_.resize(static_cast<std::size_t>(vertex_count));
  in_.resize(static_cast<std::size_t>(vertex_count));
}

Digraph Digraph::from_arcs(VertexId vertex_count, std::initializer_list<Arc> arcs) {
  return from_arcs(vertex_count, std::span<const Arc>(arcs.begin(), arcs.size()));
}

Digraph Digraph::from_arcs(VertexId vertex_count, std::span<const Arc> arcs) {
  Digraph d(vertex_count);
  for (const Arc& a : arcs) {
    d.check_vertex(a.tail);
    d.check_vertex(a.head);
    if (a.tail == a.head) {
      throw Error(ErrorCode::InvalidParameter,
                  "loop at vertex " + std::to_string(a.tail));
    }
    d.out_[a.tail].push_back(a.head);
    d.in_[a.head].push_back(a.tail);
  }
  for (VertexId v = 0; v < vertex_count; ++v) {
    auto& out = d.out_[v];
    std::sort(out.begin(), out.end());
    auto dup = std::adjacent_find(out.begin(), out.end());
    if (dup != out.end()) {
      throw Error(ErrorCode::InvalidParameter, "duplicate arc " + std::to_string(v) +
                                                   " -> " + std::to_string(*dup));
    }
    std::sort(d.in_[v].begin(), d.in_[v].end());
  }
  d.arc_count_ = arcs.size();
  return d;
}

void Digraph::check_vertex(VertexId v) const {
  if (!is_vertex(v)) {
    throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) +
                                              " outside [0, " +
                                              std::to_string(vertex_count()) + ")");
  }
}

bool Digraph::has_arc(VertexId tail, VertexId head) const {
  if (!is_vertex(tail) || !is_vertex(head)) return false;
  const auto& out = out_[tail];
  return std::binary_search(out.begin(), out.end(), head);
}

std::span<const VertexId> Digraph::out_neighbors(VertexId v) const {
  check_vertex(v);
  return out_[v];
}

std::span<const VertexId> Digraph::in_neighbors(VertexId v) const {
  check_vertex(v);
  return in_[v];
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (VertexId t = 0; t < vertex_count(); ++t) {
    for (VertexId h : out_[t]) result.push_back({t, h});
  }
  return result;
}

namespace {

std::vector<char> reach(const Digraph& d, VertexId start, bool forward) {
  std::vector<char> seen(static_cast<std::size_t>(d.vertex_count()), 0);
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    auto next = forward ? d.out_neighbors(v) : d.in_neighbors(v);
    for (VertexId w : next) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

// Calls visit(X) for every subset X of [0, n) with |X| == k, in
// lexicographic order; stops early when visit returns false.
template <typename Visit>
bool for_each_subset(VertexId n, int k, Visit&& visit) {
  std::vector<VertexId> chosen(static_cast<std::size_t>(k));
  std::iota(chosen.begin(), chosen.end(), 0);
  if (k > n) return true;
  while (true) {
    if (!visit(chosen)) return false;
    int i = k - 1;
    while (i >= 0 && chosen[i] == n - k + i) --i;
    if (i < 0) return true;
    ++chosen[i];
    for (int j = i + 1; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
  }
}

}  // namespace

bool is_strong(const Digraph& d) {
  if (d.vertex_count() <= 1) return true;
  auto fwd = reach(d, 0, true);
  auto bwd = reach(d, 0, false);
  return std::all_of(fwd.begin(), fwd.end(), [](char c) { return c != 0; }) &&
         std::all_of(bwd.begin(), bwd.end(), [](char c) { return c != 0; });
}

bool is_l_strong(const Digraph& d, int l) {
  if (l < 1) throw Error(ErrorCode::InvalidParameter, "l must be positive");
  if (d.vertex_count() < l + 1) return false;
  for (int k = 0; k < l; ++k) {
    bool ok = for_each_subset(d.vertex_count(), k, [&](const std::vector<VertexId>& x) {
      return is_strong(remove_vertices(d, VertexSet(x)).graph);
    });
    if (!ok) return false;
  }
  return true;
}

int vertex_connectivity(const Digraph& d) {
  if (!is_strong(d)) throw Error(ErrorCode::NotStrong, "vertex connectivity needs a strong digraph");
  const VertexId n = d.vertex_count();
  int best = n > 0 ? n - 1 : 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u == v || d.has_arc(u, v)) continue;
      best = std::min(best, max_internally_disjoint_paths(d, u, v));
    }
  }
  return best;
}

int min_semi_degree(const Digraph& d) {
  int best = 0;
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    int semi = std::min(d.out_degree(v), d.in_degree(v));
    best = v == 0 ? semi : std::min(best, semi);
  }
  return best;
}

VertexSet out_neighbors(const Digraph& d, VertexId v) {
  auto span = d.out_neighbors(v);
  return VertexSet(std::vector<VertexId>(span.begin(), span.end()));
}

VertexSet in_neighbors(const Digraph& d, VertexId v) {
  auto span = d.in_neighbors(v);
  return VertexSet(std::vector<VertexId>(span.begin(), span.end()));
}

InducedSubgraph remove_vertices(const Digraph& d, const VertexSet& x) {
  for (VertexId v : x) {
    if (!d.is_vertex(v)) {
      throw Error(ErrorCode::InvalidVertex, "cannot remove vertex " + std::to_string(v));
    }
  }
  InducedSubgraph result;
  result.new_of.assign(static_cast<std::size_t>(d.vertex_count()), -1);
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (x.contains(v)) continue;
    result.new_of[v] = static_cast<VertexId>(result.original_of.size());
    result.original_of.push_back(v);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    VertexId t = result.new_of[a.tail];
    VertexId h = result.new_of[a.head];
    if (t >= 0 && h >= 0) arcs.push_back({t, h});
  }
  result.graph = Digraph::from_arcs(static_cast<VertexId>(result.original_of.size()), arcs);
  return result;
}

Digraph bidirected_path(VertexId n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "bidirected path needs n >= 1");
  std::vector<Arc> arcs;
  for (VertexId i = 0; i + 1 < n; ++i) {
    arcs.push_back({i, i + 1});
    arcs.push_back({i + 1, i});
  }
  return Digraph::from_arcs(n, arcs);
}

Digraph directed_path(VertexId n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "directed path needs n >= 1");
  std::vector<Arc> arcs;
  for (VertexId i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  return Digraph::from_arcs(n, arcs);
}

Digraph directed_cycle(VertexId m) {
  if (m < 2) throw Error(ErrorCode::InvalidParameter, "directed cycle needs m >= 2");
  std::vector<Arc> arcs;
  for (VertexId j = 0; j < m; ++j) arcs.push_back({j, (j + 1) % m});
  return Digraph::from_arcs(m, arcs);
}

Digraph complete_symmetric(VertexId n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "complete digraph needs n >= 1");
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = 0; j < n; ++j) {
      if (i != j) arcs.push_back({i, j});
    }
  }
  return Digraph::from_arcs(n, arcs);
}

Digraph random_strong(VertexId n, double arc_probability, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "random digraph needs n >= 1");
  if (!(arc_probability >= 0.0 && arc_probability <= 1.0)) {
    throw Error(ErrorCode::InvalidParameter, "arc probability must lie in [0, 1]");
  }
  constexpr int kMaxSamples = 1000;
  // Raw engine output only: distribution objects are not portable across
  // standard library implementations.
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  std::vector<char> adjacency;
  auto sample = [&] {
    adjacency.assign(static_cast<std::size_t>(n) * n, 0);
    for (VertexId i = 0; i < n; ++i) {
      for (VertexId j = 0; j < n; ++j) {
        if (i != j && unit() < arc_probability) adjacency[i * n + j] = 1;
      }
    }
  };
  auto build = [&] {
    std::vector<Arc> arcs;
    for (VertexId i = 0; i < n; ++i) {
      for (VertexId j = 0; j < n; ++j) {
        if (adjacency[i * n + j]) arcs.push_back({i, j});
      }
    }
    return Digraph::from_arcs(n, arcs);
  };

  for (int attempt = 0; attempt < kMaxSamples; ++attempt) {
    sample();
    Digraph d = build();
    if (is_strong(d)) return d;
  }
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (VertexId i = n - 1; i > 0; --i) {
    auto j = static_cast<VertexId>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[i], order[j]);
  }
  for (VertexId i = 0; i < n && n > 1; ++i) {
    adjacency[order[i] * n + order[(i + 1) % n]] = 1;
  }
  return build();
}

}  // namespace dptree
