#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "dptree/digraph.hpp"
#include "dptree/maxflow.hpp"
#include "dptree/pendant_tree.hpp"

namespace dptree {

// Coordinates of a product vertex: `d` is the vertex of the first factor,
// `h` the vertex of the second.
struct Coord {
  VertexId d = 0;
  VertexId h = 0;

  friend auto operator<=>(const Coord&, const Coord&) = default;
};

// D □ H with the fixed flat encoding (i, j) -> i * |V(H)| + j.
class ProductDigraph {
 public:
  ProductDigraph(Digraph graph, VertexId d_size, VertexId h_size)
      : graph_(std::move(graph)), d_size_(d_size), h_size_(h_size) {}

  const Digraph& graph() const { return graph_; }
  VertexId d_size() const { return d_size_; }
  VertexId h_size() const { return h_size_; }

  VertexId encode(VertexId i, VertexId j) const;
  VertexId encode(Coord c) const { return encode(c.d, c.h); }
  Coord decode(VertexId v) const;

 private:
  Digraph graph_;
  VertexId d_size_;
  VertexId h_size_;
};

ProductDigraph cartesian_product(const Digraph& d, const Digraph& h);

enum class LayerKind {
  D,  // copy of the first factor at a fixed vertex of the second
  H,  // copy of the second factor at a fixed vertex of the first
};

struct Layer {
  LayerKind kind = LayerKind::D;
  VertexId index = 0;
  std::vector<VertexId> vertices;  // factor vertex k -> product vertex

  VertexId to_product(VertexId factor_vertex) const { return vertices.at(factor_vertex); }
};

// D(v_j): all (i, j) for fixed j.
Layer layer_d(const ProductDigraph& p, VertexId j);
// H(u_i): all (i, j) for fixed i.
Layer layer_h(const ProductDigraph& p, VertexId i);
Layer layer(const ProductDigraph& p, LayerKind kind, VertexId index);

struct Projection {
  VertexSet d;
  VertexSet h;
  std::map<VertexId, int> d_multiplicity;
  std::map<VertexId, int> h_multiplicity;
};

Projection project(const ProductDigraph& p, std::span<const VertexId> s);

DirectedPath lift_path(const ProductDigraph& p, const DirectedPath& path, LayerKind kind,
                       VertexId index);
inline DirectedPath lift_path_to_d_layer(const ProductDigraph& p, const DirectedPath& path,
                                         VertexId j) {
  return lift_path(p, path, LayerKind::D, j);
}
inline DirectedPath lift_path_to_h_layer(const ProductDigraph& p, const DirectedPath& path,
                                         VertexId i) {
  return lift_path(p, path, LayerKind::H, i);
}

OutTree lift_tree_to_layer(const ProductDigraph& p, const OutTree& tree, LayerKind kind,
                           VertexId index);

}  // namespace dptree
