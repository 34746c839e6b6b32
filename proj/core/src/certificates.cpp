#include "dptree/certificates.hpp"

#include "dptree/error.hpp"

namespace dptree {

bool is_complete_symmetric(const Digraph& g) {
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  return g.arc_count() == n * (n == 0 ? 0 : n - 1);
}

std::vector<OutTree> certify_factor(const Digraph& g, const TerminalSpec& spec, int k,
                                    const OracleOptions& options) {
  std::vector<OutTree> trees;
  if (k <= 0) return trees;
  if (is_complete_symmetric(g)) {
    for (VertexId a = 0; a < g.vertex_count() && static_cast<int>(trees.size()) < k; ++a) {
      if (spec.is_terminal(a)) continue;
      const Arc arcs[] = {{spec.root(), a}, {a, spec.x()}, {a, spec.y()}};
      trees.push_back(assemble_tree(g, spec.root(), arcs));
    }
  } else {
    OracleOptions capped = options;
    capped.cap = k;
    trees = tau_s_r(g, spec, capped).witness;
  }
  if (static_cast<int>(trees.size()) < k) {
    throw Error(ErrorCode::PreconditionViolated,
                "only " + std::to_string(trees.size()) + " disjoint pendant trees for root " +
                    std::to_string(spec.root()) + ", needed " + std::to_string(k));
  }
  return trees;
}

FactorCertificates certificates_for(const Digraph& d, const Digraph& h, const ProductDigraph& p,
                                    const TerminalSpec& spec, int l, int k,
                                    const OracleOptions& options) {
  FactorCertificates certs;
  certs.l = l;
  certs.h = k;
  const Coord r = p.decode(spec.root()), x = p.decode(spec.x()), y = p.decode(spec.y());
  if (r.d != x.d && r.d != y.d && x.d != y.d) {
    certs.d_trees = certify_factor(d, TerminalSpec(r.d, x.d, y.d), l, options);
  }
  if (r.h != x.h && r.h != y.h && x.h != y.h) {
    certs.h_trees = certify_factor(h, TerminalSpec(r.h, x.h, y.h), k, options);
  }
  return certs;
}

}  // namespace dptree
