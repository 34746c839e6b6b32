#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace dptree {

using VertexId = std::int32_t;

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids);
  explicit VertexSet(std::vector<VertexId> ids);

  bool contains(VertexId v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  VertexId operator[](std::size_t i) const { return members_[i]; }
  const std::vector<VertexId>& members() const { return members_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<VertexId> members_;
};

// Loop-free digraph without parallel arcs on the dense id range [0, n).
// Immutable once built; adjacency lists are kept sorted ascending.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(VertexId vertex_count);

  // Throws InvalidVertex for out-of-range endpoints and InvalidParameter for
  // loops or repeated arcs.
  static Digraph from_arcs(VertexId vertex_count, std::span<const Arc> arcs);
  static Digraph from_arcs(VertexId vertex_count, std::initializer_list<Arc> arcs);

  VertexId vertex_count() const { return static_cast<VertexId>(out_.size()); }
  std::size_t arc_count() const { return arc_count_; }

  bool is_vertex(VertexId v) const { return v >= 0 && v < vertex_count(); }
  bool has_arc(VertexId tail, VertexId head) const;

  std::span<const VertexId> out_neighbors(VertexId v) const;
  std::span<const VertexId> in_neighbors(VertexId v) const;
  int out_degree(VertexId v) const { return static_cast<int>(out_neighbors(v).size()); }
  int in_degree(VertexId v) const { return static_cast<int>(in_neighbors(v).size()); }

  // Lexicographically sorted arc list.
  std::vector<Arc> arcs() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.out_ == b.out_;
  }

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::size_t arc_count_ = 0;
};

// D - X together with the id mapping between the two graphs.
struct InducedSubgraph {
  Digraph graph;
  std::vector<VertexId> original_of;  // new id -> old id
  std::vector<VertexId> new_of;       // old id -> new id, -1 when removed
};

bool is_strong(const Digraph& d);
bool is_l_strong(const Digraph& d, int l);
// Largest l with is_l_strong(d, l); requires a strong digraph.
int vertex_connectivity(const Digraph& d);
int min_semi_degree(const Digraph& d);

VertexSet out_neighbors(const Digraph& d, VertexId v);
VertexSet in_neighbors(const Digraph& d, VertexId v);

InducedSubgraph remove_vertices(const Digraph& d, const VertexSet& x);

Digraph bidirected_path(VertexId n);
Digraph directed_path(VertexId n);
Digraph directed_cycle(VertexId m);
Digraph complete_symmetric(VertexId n);
// Samples each ordered pair independently with the given probability until
// the result is strong; after 1000 rejected samples a random Hamiltonian
// cycle is added to the last sample.
Digraph random_strong(VertexId n, double arc_probability, std::uint64_t seed);

}  // namespace dptree
