#include "dptree/product.hpp"

#include <string>

#include "dptree/error.hpp"

namespace dptree {

VertexId ProductDigraph::encode(VertexId i, VertexId j) const {
  if (i < 0 || i >= d_size_ || j < 0 || j >= h_size_) {
    throw Error(ErrorCode::InvalidVertex,
                "coordinate (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
  return i * h_size_ + j;
}

Coord ProductDigraph::decode(VertexId v) const {
  if (!graph_.is_vertex(v)) {
    throw Error(ErrorCode::InvalidVertex, "product vertex " + std::to_string(v));
  }
  return {v / h_size_, v % h_size_};
}

ProductDigraph cartesian_product(const Digraph& d, const Digraph& h) {
  const VertexId n = d.vertex_count();
  const VertexId m = h.vertex_count();
  if (n == 0 || m == 0) throw Error(ErrorCode::InvalidParameter, "factors must be nonempty");
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * h.arc_count() + static_cast<std::size_t>(m) * d.arc_count());
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = 0; j < m; ++j) {
      for (VertexId i2 : d.out_neighbors(i)) arcs.push_back({i * m + j, i2 * m + j});
      for (VertexId j2 : h.out_neighbors(j)) arcs.push_back({i * m + j, i * m + j2});
    }
  }
  return ProductDigraph(Digraph::from_arcs(n * m, arcs), n, m);
}

Layer layer(const ProductDigraph& p, LayerKind kind, VertexId index) {
  Layer result{kind, index, {}};
  if (kind == LayerKind::D) {
    if (index < 0 || index >= p.h_size()) {
      throw Error(ErrorCode::InvalidVertex, "no D-layer at " + std::to_string(index));
    }
    for (VertexId i = 0; i < p.d_size(); ++i) result.vertices.push_back(p.encode(i, index));
  } else {
    if (index < 0 || index >= p.d_size()) {
      throw Error(ErrorCode::InvalidVertex, "no H-layer at " + std::to_string(index));
    }
    for (VertexId j = 0; j < p.h_size(); ++j) result.vertices.push_back(p.encode(index, j));
  }
  return result;
}

Layer layer_d(const ProductDigraph& p, VertexId j) { return layer(p, LayerKind::D, j); }
Layer layer_h(const ProductDigraph& p, VertexId i) { return layer(p, LayerKind::H, i); }

Projection project(const ProductDigraph& p, std::span<const VertexId> s) {
  Projection result;
  std::vector<VertexId> ds;
  std::vector<VertexId> hs;
  for (VertexId v : s) {
    Coord c = p.decode(v);
    ds.push_back(c.d);
    hs.push_back(c.h);
    ++result.d_multiplicity[c.d];
    ++result.h_multiplicity[c.h];
  }
  result.d = VertexSet(ds);
  result.h = VertexSet(hs);
  return result;
}

namespace {

VertexId lift_vertex(const ProductDigraph& p, VertexId v, LayerKind kind, VertexId index) {
  return kind == LayerKind::D ? p.encode(v, index) : p.encode(index, v);
}

}  // namespace

DirectedPath lift_path(const ProductDigraph& p, const DirectedPath& path, LayerKind kind,
                       VertexId index) {
  DirectedPath lifted;
  lifted.vertices.reserve(path.vertices.size());
  for (VertexId v : path.vertices) lifted.vertices.push_back(lift_vertex(p, v, kind, index));
  return lifted;
}

OutTree lift_tree_to_layer(const ProductDigraph& p, const OutTree& tree, LayerKind kind,
                           VertexId index) {
  std::vector<Arc> arcs;
  for (const Arc& a : tree.arcs()) {
    arcs.push_back({lift_vertex(p, a.tail, kind, index), lift_vertex(p, a.head, kind, index)});
  }
  return assemble_tree(p.graph(), lift_vertex(p, tree.root(), kind, index), arcs);
}

}  // namespace dptree
