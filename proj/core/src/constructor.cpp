#include "dptree/constructor.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <utility>

#include "dptree/error.hpp"
#include "dptree/maxflow.hpp"

namespace dptree {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string coord_str(Coord c) {
  return "(" + std::to_string(c.d) + "," + std::to_string(c.h) + ")";
}

// Prefix of `path` ending at the first occurrence of `last`.
DirectedPath prefix_to(const DirectedPath& path, VertexId last) {
  auto it = std::find(path.vertices.begin(), path.vertices.end(), last);
  if (it == path.vertices.end()) {
    throw Error(ErrorCode::NotOnPath, "vertex " + std::to_string(last) + " not on path");
  }
  return DirectedPath{std::vector<VertexId>(path.vertices.begin(), it + 1)};
}

VertexId predecessor_of_end(const DirectedPath& path) {
  return path.vertices[path.vertices.size() - 2];
}

// ℓ+1 paths sorted ascending become P_1..P_ℓ, P_{ℓ+1} with the shortest last.
std::vector<DirectedPath> shortest_last(std::vector<DirectedPath> sorted) {
  std::rotate(sorted.begin(), sorted.begin() + 1, sorted.end());
  return sorted;
}

class Builder {
 public:
  Builder(const Digraph& d, const Digraph& h, const ProductDigraph& p, const TerminalSpec& spec,
          const FactorCertificates& certs)
      : d_(d), h_(h), p_(p), spec_(spec), certs_(certs) {}

  ConstructionResult run(int required_sd);

 private:
  struct Draft {
    TreeProvenance prov;
  };

  void validate();
  void check_factor(const Digraph& g, int k, const char* name);
  void check_certificates(const Digraph& g, const std::vector<OutTree>& trees, int k,
                          const TerminalSpec& fspec, const char* name);

  void one_layer();
  void two_layers();
  void three_layers();

  // Flow calls, timed and mapped onto contract violations.
  Fan fan(const Digraph& g, const std::vector<VertexId>& sources, VertexId target,
          const char* what);
  std::vector<DirectedPath> iddp(const Digraph& g, VertexId u, VertexId v, int count,
                                 const char* what);

  VertexId at(VertexId i, VertexId j) const { return p_.encode(i, j); }
  std::vector<Arc> d_lift(const DirectedPath& path, VertexId j) const;
  std::vector<Arc> h_lift(const DirectedPath& path, VertexId i) const;
  std::vector<Arc> d_lift(const OutTree& t, VertexId j) const;
  std::vector<Arc> h_lift(const OutTree& t, VertexId i) const;

  Draft& start(std::string name);
  void add(Draft& t, std::string label, std::vector<Arc> arcs);
  void add_arc(Draft& t, Coord from, Coord to);
  [[noreturn]] void contract_failure(const std::string& what) const;

  const Digraph& d_;
  const Digraph& h_;
  const ProductDigraph& p_;
  const TerminalSpec& spec_;
  const FactorCertificates& certs_;

  int l_ = 0;
  int hh_ = 0;
  Coord r_, x_, y_;
  ConstructionTrace trace_;
  PhaseTimings timings_;
  std::vector<Draft> primes_;  // T'_j
  std::vector<Draft> stars_;   // T*_i
};

std::vector<Arc> Builder::d_lift(const DirectedPath& path, VertexId j) const {
  std::vector<Arc> arcs;
  for (const Arc& a : path.arcs()) arcs.push_back({at(a.tail, j), at(a.head, j)});
  return arcs;
}

std::vector<Arc> Builder::h_lift(const DirectedPath& path, VertexId i) const {
  std::vector<Arc> arcs;
  for (const Arc& a : path.arcs()) arcs.push_back({at(i, a.tail), at(i, a.head)});
  return arcs;
}

std::vector<Arc> Builder::d_lift(const OutTree& t, VertexId j) const {
  std::vector<Arc> arcs;
  for (const Arc& a : t.arcs()) arcs.push_back({at(a.tail, j), at(a.head, j)});
  return arcs;
}

std::vector<Arc> Builder::h_lift(const OutTree& t, VertexId i) const {
  std::vector<Arc> arcs;
  for (const Arc& a : t.arcs()) arcs.push_back({at(i, a.tail), at(i, a.head)});
  return arcs;
}

Builder::Draft& Builder::start(std::string name) {
  auto& list = name.starts_with("T'") ? primes_ : stars_;
  list.push_back(Draft{TreeProvenance{std::move(name), {}}});
  return list.back();
}

void Builder::add(Draft& t, std::string label, std::vector<Arc> arcs) {
  t.prov.pieces.push_back({std::move(label), std::move(arcs)});
}

void Builder::add_arc(Draft& t, Coord from, Coord to) {
  add(t, "arc " + coord_str(from) + "->" + coord_str(to), {{at(from.d, from.h), at(to.d, to.h)}});
}

void Builder::contract_failure(const std::string& what) const {
  ConstructionTrace partial = trace_;
  for (const auto& list : {&primes_, &stars_}) {
    for (const Draft& t : *list) partial.trees.push_back(t.prov);
  }
  throw Error(ErrorCode::InternalContractViolation, what + "\n" + describe(partial));
}

Fan Builder::fan(const Digraph& g, const std::vector<VertexId>& sources, VertexId target,
                 const char* what) {
  auto t0 = Clock::now();
  try {
    Fan result = find_fan(g, std::span<const VertexId>(sources), target);
    timings_.flow_ms += ms_since(t0);
    return result;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::FanNotFound) throw;
    contract_failure(std::string(what) + ": " + e.what());
  }
}

std::vector<DirectedPath> Builder::iddp(const Digraph& g, VertexId u, VertexId v, int count,
                                        const char* what) {
  auto t0 = Clock::now();
  try {
    auto result = find_iddp(g, u, v, count);
    timings_.flow_ms += ms_since(t0);
    return result;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PathsNotFound) throw;
    contract_failure(std::string(what) + ": " + e.what());
  }
}

void Builder::check_factor(const Digraph& g, int k, const char* name) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::PreconditionViolated, std::string("factor ") + name + ": " + what);
  };
  if (k < 1) fail("packing size must be at least 1, got " + std::to_string(k));
  if (!is_strong(g)) fail("not strong");
  // A factor whose tau3 is at least k has kappa >= k+1 and min semi-degree
  // >= k+2; the flow steps below rely on exactly these bounds.
  const int delta = min_semi_degree(g);
  if (delta < k + 2) {
    fail("min semi-degree " + std::to_string(delta) + " < " + std::to_string(k + 2) +
         ", so tau3 < " + std::to_string(k));
  }
  const int kappa = vertex_connectivity(g);
  if (kappa < k + 1) {
    fail("vertex connectivity " + std::to_string(kappa) + " < " + std::to_string(k + 1) +
         ", so tau3 < " + std::to_string(k));
  }
}

void Builder::check_certificates(const Digraph& g, const std::vector<OutTree>& trees, int k,
                                 const TerminalSpec& fspec, const char* name) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::PreconditionViolated,
                std::string("certificate for ") + name + ": " + what);
  };
  if (static_cast<int>(trees.size()) != k) {
    fail("expected " + std::to_string(k) + " trees, got " + std::to_string(trees.size()));
  }
  for (const OutTree& t : trees) {
    for (const Arc& a : t.arcs()) {
      if (!g.is_vertex(a.tail) || !g.is_vertex(a.head)) fail("vertex outside the factor");
    }
  }
  FamilyReport report = verify_family(TreeFamily{g, fspec, trees});
  for (std::size_t i = 0; i < report.trees.size(); ++i) {
    if (!report.trees[i].ok()) {
      fail("tree " + std::to_string(i + 1) + " " +
           std::string(to_string(report.trees[i].condition)) + " at vertex " +
           std::to_string(report.trees[i].witness));
    }
  }
  if (!report.pair_failures.empty()) {
    const PairFailure& pf = report.pair_failures.front();
    fail("trees " + std::to_string(pf.first + 1) + " and " + std::to_string(pf.second + 1) +
         " " + std::string(to_string(pf.diagnostic.condition)) + " at vertex " +
         std::to_string(pf.diagnostic.witness));
  }
}

void Builder::validate() {
  auto t0 = Clock::now();
  if (p_.d_size() != d_.vertex_count() || p_.h_size() != h_.vertex_count()) {
    throw Error(ErrorCode::PreconditionViolated, "product does not match the factor sizes");
  }
  for (VertexId s : spec_.terminals()) {
    if (!p_.graph().is_vertex(s)) {
      throw Error(ErrorCode::PreconditionViolated, "terminal " + std::to_string(s) +
                                                       " is not a product vertex");
    }
  }
  l_ = certs_.l;
  hh_ = certs_.h;
  check_factor(d_, l_, "D");
  check_factor(h_, hh_, "H");

  r_ = p_.decode(spec_.root());
  x_ = p_.decode(spec_.x());
  y_ = p_.decode(spec_.y());
  std::vector<VertexId> s{spec_.root(), spec_.x(), spec_.y()};
  Projection proj = project(p_, s);
  trace_.sd = static_cast<int>(proj.d.size());
  trace_.sh = static_cast<int>(proj.h.size());

  if (trace_.sd == 3) {
    check_certificates(d_, certs_.d_trees, l_, TerminalSpec(r_.d, x_.d, y_.d), "D");
  } else if (!certs_.d_trees.empty()) {
    trace_.notes.push_back("D certificate trees not needed and ignored");
  }
  if (trace_.sh == 3) {
    check_certificates(h_, certs_.h_trees, hh_, TerminalSpec(r_.h, x_.h, y_.h), "H");
  } else if (!certs_.h_trees.empty()) {
    trace_.notes.push_back("H certificate trees not needed and ignored");
  }
  timings_.validation_ms += ms_since(t0);
}

ConstructionResult Builder::run(int required_sd) {
  validate();
  if (required_sd != 0 && trace_.sd != required_sd) {
    throw Error(ErrorCode::PreconditionViolated,
                "terminals project onto " + std::to_string(trace_.sd) +
                    " D-vertices, this branch handles " + std::to_string(required_sd));
  }
  switch (trace_.sd) {
    case 1: one_layer(); break;
    case 2: two_layers(); break;
    default: three_layers(); break;
  }

  auto t0 = Clock::now();
  ConstructionResult result{TreeFamily{p_.graph(), spec_, {}}, trace_, timings_};
  for (const auto& list : {&primes_, &stars_}) {
    for (const Draft& t : *list) {
      std::vector<Arc> arcs;
      for (const TracePiece& piece : t.prov.pieces) {
        arcs.insert(arcs.end(), piece.arcs.begin(), piece.arcs.end());
      }
      try {
        result.family.trees.push_back(assemble_tree(p_.graph(), spec_.root(), arcs));
      } catch (const Error& e) {
        contract_failure(t.prov.name + " does not assemble: " + e.what());
      }
      result.trace.trees.push_back(t.prov);
    }
  }
  result.timings.assembly_ms += ms_since(t0);
  return result;
}

// All terminals share the D-coordinate p.
void Builder::one_layer() {
  trace_.subcase = "sd1";
  const VertexId p = r_.d, a = r_.h, b = x_.h, c = y_.h;
  auto nbrs = d_.out_neighbors(p);
  std::vector<VertexId> z(nbrs.begin(), nbrs.begin() + l_);
  Fan R = fan(d_, z, p, "fan z_i -> u_p in D");

  auto t0 = Clock::now();
  const auto& that = certs_.h_trees;
  for (int j = 0; j < hh_; ++j) {
    Draft& t = start("T'_" + std::to_string(j + 1));
    add(t, "That_" + std::to_string(j + 1) + " in H(u" + std::to_string(p) + ")",
        h_lift(that[j], p));
  }
  for (int i = 0; i < l_; ++i) {
    const std::string k = std::to_string(i + 1);
    const VertexId zi = z[i];
    Draft& t = start("T*_" + k);
    add_arc(t, r_, {zi, a});
    add(t, "That_1 in H(u" + std::to_string(zi) + ")", h_lift(that[0], zi));
    add(t, "R_" + k + " in D(v" + std::to_string(b) + ")", d_lift(R.paths[i], b));
    add(t, "R_" + k + " in D(v" + std::to_string(c) + ")", d_lift(R.paths[i], c));
  }
  timings_.lifting_ms += ms_since(t0);
}

// Exactly two distinct D-coordinates among the terminals.
void Builder::two_layers() {
  const VertexId p = r_.d, a = r_.h;
  // (f,g) and (f',g') with f' != p; y goes second whenever it can.
  Coord first = x_, second = y_;
  if (second.d == p) std::swap(first, second);
  const VertexId f = first.d, g = first.h, f2 = second.d, g2 = second.h;
  const std::string sp = std::to_string(p);

  auto P = shortest_last(iddp(d_, p, f2, l_ + 1, "IDDPs u_p -> u_f' in D"));
  std::vector<VertexId> z;
  for (int i = 0; i < l_; ++i) z.push_back(predecessor_of_end(P[i]));
  std::vector<VertexId> sources = z;
  sources.push_back(f2);
  Fan R = fan(d_, sources, p, "fan {z_i, u_f'} -> u_p in D");
  const DirectedPath& last = P[l_];

  auto lbl_p = [](int i) { return "P_" + std::to_string(i + 1); };
  auto in_d = [](VertexId j) { return " in D(v" + std::to_string(j) + ")"; };
  auto in_h = [](VertexId i) { return " in H(u" + std::to_string(i) + ")"; };
  auto t0 = Clock::now();

  if (f == p) {
    if (g2 != a && g2 != g) {
      trace_.subcase = "sd2.root-layer.distinct";
      const auto& that = certs_.h_trees;
      for (int j = 0; j < hh_; ++j) {
        const std::string k = std::to_string(j + 1);
        const VertexId sj = *that[j].parent(g2);
        Draft& t = start("T'_" + k);
        std::vector<Arc> lifted = h_lift(that[j], p);
        std::erase(lifted, Arc{at(p, sj), at(p, g2)});
        add(t, "That_" + k + in_h(p) + " without its arc into v" + std::to_string(g2), lifted);
        add(t, lbl_p(l_) + in_d(sj), d_lift(last, sj));
        add_arc(t, {f2, sj}, {f2, g2});
      }
      for (int i = 0; i < l_; ++i) {
        const std::string k = std::to_string(i + 1);
        Draft& t = start("T*_" + k);
        add(t, lbl_p(i) + in_d(a) + " up to z_" + k, d_lift(prefix_to(P[i], z[i]), a));
        add(t, "That_1" + in_h(z[i]), h_lift(that[0], z[i]));
        add(t, "R_" + k + in_d(g), d_lift(R.paths[i], g));
        add_arc(t, {z[i], g2}, {f2, g2});
      }
    } else {
      timings_.lifting_ms += ms_since(t0);
      auto Q = shortest_last(iddp(h_, a, g, hh_ + 1, "IDDPs v_a -> v_g in H"));
      std::vector<VertexId> s;
      for (int j = 0; j < hh_; ++j) s.push_back(predecessor_of_end(Q[j]));
      if (g2 == g) {
        t0 = Clock::now();
        trace_.subcase = "sd2.root-layer.shared-leaf";
        for (int j = 0; j < hh_; ++j) {
          const std::string k = std::to_string(j + 1);
          Draft& t = start("T'_" + k);
          add(t, "Q_" + k + in_h(p), h_lift(Q[j], p));
          add(t, lbl_p(l_) + in_d(s[j]), d_lift(last, s[j]));
          add_arc(t, {f2, s[j]}, {f2, g});
        }
        for (int i = 0; i < l_; ++i) {
          const std::string k = std::to_string(i + 1);
          Draft& t = start("T*_" + k);
          add(t, lbl_p(i) + in_d(a) + " up to z_" + k, d_lift(prefix_to(P[i], z[i]), a));
          add(t, "Q_1" + in_h(z[i]), h_lift(Q[0], z[i]));
          add(t, "R_" + k + in_d(g), d_lift(R.paths[i], g));
          add_arc(t, {z[i], g}, {f2, g});
        }
      } else {
        std::vector<VertexId> wsrc = s;
        wsrc.push_back(g);
        Fan W = fan(h_, wsrc, a, "fan {s_j, v_g} -> v_a in H");
        t0 = Clock::now();
        trace_.subcase = "sd2.root-layer.shared-root";
        for (int j = 0; j < hh_; ++j) {
          const std::string k = std::to_string(j + 1);
          Draft& t = start("T'_" + k);
          add(t, "Q_" + k + in_h(p), h_lift(Q[j], p));
          add(t, lbl_p(l_) + in_d(s[j]), d_lift(last, s[j]));
          add(t, "W_" + k + in_h(f2), h_lift(W.paths[j], f2));
        }
        for (int i = 0; i < l_; ++i) {
          const std::string k = std::to_string(i + 1);
          Draft& t = start("T*_" + k);
          add(t, lbl_p(i) + in_d(a), d_lift(P[i], a));
          add(t, "Q_1" + in_h(z[i]), h_lift(Q[0], z[i]));
          add(t, "R_" + k + in_d(g), d_lift(R.paths[i], g));
        }
      }
    }
  } else if (a != g && a != g2) {
    // Both leaves sit in H(u_f'), f = f'.
    trace_.subcase = "sd2.leaf-layer.distinct";
    const auto& that = certs_.h_trees;
    TerminalSpec hspec(a, x_.h, y_.h);
    for (int j = 0; j < hh_; ++j) {
      const std::string k = std::to_string(j + 1);
      const VertexId sj = branch_vertex(h_, that[j], hspec);
      Draft& t = start("T'_" + k);
      add(t, "That_" + k + "[v_a,s_" + k + "]" + in_h(p), h_lift(tree_path(that[j], a, sj), p));
      add(t, lbl_p(l_) + in_d(sj), d_lift(last, sj));
      add(t, "That_" + k + "[s_" + k + ",v_g]" + in_h(f), h_lift(tree_path(that[j], sj, g), f));
      add(t, "That_" + k + "[s_" + k + ",v_g']" + in_h(f2),
          h_lift(tree_path(that[j], sj, g2), f2));
    }
    for (int i = 0; i < l_; ++i) {
      const std::string k = std::to_string(i + 1);
      Draft& t = start("T*_" + k);
      add(t, lbl_p(i) + in_d(a) + " up to z_" + k, d_lift(prefix_to(P[i], z[i]), a));
      add(t, "That_1" + in_h(z[i]), h_lift(that[0], z[i]));
      add_arc(t, {z[i], g}, {f, g});
      add_arc(t, {z[i], g2}, {f2, g2});
    }
  } else {
    trace_.subcase = "sd2.leaf-layer.root-row";
    // (d,e) has e = a; the other leaf is (d',e').
    const Coord leaf = (g == a) ? second : first;
    const VertexId d2 = leaf.d, e2 = leaf.h;
    timings_.lifting_ms += ms_since(t0);
    auto Q = shortest_last(iddp(h_, a, e2, hh_ + 1, "IDDPs v_a -> v_e' in H"));
    std::vector<VertexId> s;
    for (int j = 0; j < hh_; ++j) s.push_back(predecessor_of_end(Q[j]));
    std::vector<VertexId> wsrc = s;
    wsrc.push_back(e2);
    Fan W = fan(h_, wsrc, a, "fan {s_j, v_e'} -> v_a in H");
    t0 = Clock::now();
    for (int j = 0; j < hh_; ++j) {
      const std::string k = std::to_string(j + 1);
      Draft& t = start("T'_" + k);
      add(t, "Q_" + k + in_h(p) + " up to s_" + k, h_lift(prefix_to(Q[j], s[j]), p));
      add(t, lbl_p(l_) + in_d(s[j]), d_lift(last, s[j]));
      add(t, "W_" + k + in_h(d2), h_lift(W.paths[j], d2));
      add_arc(t, {d2, s[j]}, {d2, e2});
    }
    for (int i = 0; i < l_; ++i) {
      const std::string k = std::to_string(i + 1);
      Draft& t = start("T*_" + k);
      add(t, lbl_p(i) + in_d(a), d_lift(P[i], a));
      add(t, "Q_1" + in_h(z[i]), h_lift(Q[0], z[i]));
      add_arc(t, {z[i], e2}, {d2, e2});
    }
  }
  trace_.notes.push_back("ordering (f,g)=" + coord_str(first) + ", (f',g')=" + coord_str(second) +
                         ", root row u" + sp);
  timings_.lifting_ms += ms_since(t0);
}

// Three distinct D-coordinates: the D certificate trees carry the D-part.
void Builder::three_layers() {
  const VertexId p = r_.d, a = r_.h, q = x_.d, b = x_.h, w = y_.d, c = y_.h;
  const auto& ttil = certs_.d_trees;
  TerminalSpec dspec(p, q, w);
  std::vector<VertexId> z;
  for (const OutTree& t : ttil) z.push_back(branch_vertex(d_, t, dspec));

  auto in_d = [](VertexId j) { return " in D(v" + std::to_string(j) + ")"; };
  auto in_h = [](VertexId i) { return " in H(u" + std::to_string(i) + ")"; };
  auto tt = [](int i) { return "Ttil_" + std::to_string(i + 1); };

  if (trace_.sh == 3) {
    trace_.subcase = "sd3.sh3";
    const auto& that = certs_.h_trees;
    TerminalSpec hspec(a, b, c);
    std::vector<VertexId> s;
    for (const OutTree& t : that) s.push_back(branch_vertex(h_, t, hspec));
    std::vector<VertexId> src = s;
    src.push_back(a);
    Fan W = fan(h_, src, b, "fan {s_j, v_a} -> v_b in H");
    Fan Y = fan(h_, src, c, "fan {s_j, v_a} -> v_c in H");
    auto t0 = Clock::now();
    for (int j = 0; j < hh_; ++j) {
      const std::string k = std::to_string(j + 1);
      Draft& t = start("T'_" + k);
      add(t, "That_" + k + "[v_a,s_" + k + "]" + in_h(p), h_lift(tree_path(that[j], a, s[j]), p));
      add(t, tt(0) + in_d(s[j]), d_lift(ttil[0], s[j]));
      add(t, "W_" + k + in_h(q), h_lift(W.paths[j], q));
      add(t, "Y_" + k + in_h(w), h_lift(Y.paths[j], w));
    }
    for (int i = 1; i < l_; ++i) {
      Draft& t = start("T*_" + std::to_string(i));
      add(t, tt(i) + "[u_p,z]" + in_d(a), d_lift(tree_path(ttil[i], p, z[i]), a));
      add(t, "That_1" + in_h(z[i]), h_lift(that[0], z[i]));
      add(t, tt(i) + "[z,u_q]" + in_d(b), d_lift(tree_path(ttil[i], z[i], q), b));
      add(t, tt(i) + "[z,u_w]" + in_d(c), d_lift(tree_path(ttil[i], z[i], w), c));
    }
    Draft& t = start("T*_" + std::to_string(l_));
    add(t, tt(0) + in_d(a), d_lift(ttil[0], a));
    add(t, "W_" + std::to_string(hh_ + 1) + in_h(q), h_lift(W.paths[hh_], q));
    add(t, "Y_" + std::to_string(hh_ + 1) + in_h(w), h_lift(Y.paths[hh_], w));
    timings_.lifting_ms += ms_since(t0);
    return;
  }

  if (trace_.sh == 2) {
    // (f,g), (f',g') with g' != a.
    Coord first = x_, second = y_;
    if (second.h == a) std::swap(first, second);
    const VertexId f = first.d, g = first.h, f2 = second.d, g2 = second.h;
    auto Q = shortest_last(iddp(h_, a, g2, hh_ + 1, "IDDPs v_a -> v_g' in H"));
    std::vector<VertexId> s;
    for (int j = 0; j < hh_; ++j) s.push_back(predecessor_of_end(Q[j]));
    const DirectedPath& qlast = Q[hh_];
    const std::string qlast_name = "Q_" + std::to_string(hh_ + 1);

    if (a == g) {
      trace_.subcase = "sd3.sh2.root-row";
      trace_.notes.push_back("the last H-path of the family is read as Q_{h+1}");
      std::vector<VertexId> wsrc = s;
      wsrc.push_back(g2);
      Fan W = fan(h_, wsrc, a, "fan {s_j, v_g'} -> v_a in H");
      auto t0 = Clock::now();
      for (int j = 0; j < hh_; ++j) {
        const std::string k = std::to_string(j + 1);
        Draft& t = start("T'_" + k);
        add(t, "Q_" + k + in_h(p) + " up to s_" + k, h_lift(prefix_to(Q[j], s[j]), p));
        add(t, tt(0) + in_d(s[j]), d_lift(ttil[0], s[j]));
        add(t, "W_" + k + in_h(f), h_lift(W.paths[j], f));
        add_arc(t, {f2, s[j]}, {f2, g2});
      }
      for (int i = 1; i < l_; ++i) {
        Draft& t = start("T*_" + std::to_string(i));
        add(t, tt(i) + "[u_p,u_f]" + in_d(a), d_lift(tree_path(ttil[i], p, f), a));
        add(t, qlast_name + in_h(z[i]), h_lift(qlast, z[i]));
        add(t, tt(i) + "[z,u_f']" + in_d(g2), d_lift(tree_path(ttil[i], z[i], f2), g2));
      }
      Draft& t = start("T*_" + std::to_string(l_));
      add(t, tt(0) + in_d(a), d_lift(ttil[0], a));
      add(t, qlast_name + in_h(f2), h_lift(qlast, f2));
      timings_.lifting_ms += ms_since(t0);
    } else {
      // b = c, both leaves in D(v_b).
      trace_.subcase = "sd3.sh2.leaf-row";
      trace_.notes.push_back("Q_{h+1} lifted into H(u_q) and H(u_w)");
      auto t0 = Clock::now();
      for (int j = 0; j < hh_; ++j) {
        const std::string k = std::to_string(j + 1);
        Draft& t = start("T'_" + k);
        add(t, "Q_" + k + in_h(p) + " up to s_" + k, h_lift(prefix_to(Q[j], s[j]), p));
        add(t, tt(0) + in_d(s[j]), d_lift(ttil[0], s[j]));
        add_arc(t, {q, s[j]}, {q, b});
        add_arc(t, {w, s[j]}, {w, c});
      }
      for (int i = 1; i < l_; ++i) {
        Draft& t = start("T*_" + std::to_string(i));
        add(t, tt(i) + "[u_p,z]" + in_d(a), d_lift(tree_path(ttil[i], p, z[i]), a));
        add(t, "Q_1" + in_h(z[i]), h_lift(Q[0], z[i]));
        add(t, tt(i) + "[z,u_q]" + in_d(b), d_lift(tree_path(ttil[i], z[i], q), b));
        add(t, tt(i) + "[z,u_w]" + in_d(b), d_lift(tree_path(ttil[i], z[i], w), b));
      }
      Draft& t = start("T*_" + std::to_string(l_));
      add(t, tt(0) + in_d(a), d_lift(ttil[0], a));
      add(t, qlast_name + in_h(q), h_lift(qlast, q));
      add(t, qlast_name + in_h(w), h_lift(qlast, w));
      timings_.lifting_ms += ms_since(t0);
    }
    return;
  }

  trace_.subcase = "sd3.sh1";
  auto nbrs = h_.out_neighbors(a);
  std::vector<VertexId> s(nbrs.begin(), nbrs.begin() + hh_);
  Fan W = fan(h_, s, a, "fan s_j -> v_a in H");
  auto t0 = Clock::now();
  for (int j = 0; j < hh_; ++j) {
    const std::string k = std::to_string(j + 1);
    Draft& t = start("T'_" + k);
    add_arc(t, r_, {p, s[j]});
    add(t, tt(0) + in_d(s[j]), d_lift(ttil[0], s[j]));
    add(t, "W_" + k + in_h(q), h_lift(W.paths[j], q));
    add(t, "W_" + k + in_h(w), h_lift(W.paths[j], w));
  }
  for (int i = 0; i < l_; ++i) {
    Draft& t = start("T*_" + std::to_string(i + 1));
    add(t, tt(i) + in_d(a), d_lift(ttil[i], a));
  }
  timings_.lifting_ms += ms_since(t0);
}

}  // namespace

ConstructionResult construct(const Digraph& d, const Digraph& h, const ProductDigraph& p,
                             const TerminalSpec& spec, const FactorCertificates& certs) {
  return Builder(d, h, p, spec, certs).run(0);
}

ConstructionResult case_one_layer(const Digraph& d, const Digraph& h, const ProductDigraph& p,
                                  const TerminalSpec& spec, const FactorCertificates& certs) {
  return Builder(d, h, p, spec, certs).run(1);
}

ConstructionResult case_two_layers(const Digraph& d, const Digraph& h, const ProductDigraph& p,
                                   const TerminalSpec& spec, const FactorCertificates& certs) {
  return Builder(d, h, p, spec, certs).run(2);
}

ConstructionResult case_three_layers(const Digraph& d, const Digraph& h,
                                     const ProductDigraph& p, const TerminalSpec& spec,
                                     const FactorCertificates& certs) {
  return Builder(d, h, p, spec, certs).run(3);
}

std::string describe(const ConstructionTrace& trace) {
  std::ostringstream out;
  out << "case |S_D|=" << trace.sd << " |S_H|=" << trace.sh << " " << trace.subcase << "\n";
  for (const std::string& note : trace.notes) out << "  note: " << note << "\n";
  for (const TreeProvenance& t : trace.trees) {
    out << "  " << t.name << "\n";
    for (const TracePiece& piece : t.pieces) {
      out << "    " << piece.label << ":";
      for (const Arc& a : piece.arcs) out << " " << a.tail << "->" << a.head;
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace dptree
