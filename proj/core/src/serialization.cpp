#include "dptree/serialization.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dptree/error.hpp"

namespace dptree {

namespace {

using nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field \"") + key + "\": " + e.what());
  }
}

std::vector<Arc> arcs_from(const json& list) {
  if (!list.is_array()) throw Error(ErrorCode::ParseError, "arcs must be a list");
  std::vector<Arc> arcs;
  for (const json& a : list) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer()) {
      throw Error(ErrorCode::ParseError, "arc must be a pair of integers: " + a.dump());
    }
    arcs.push_back({a[0].get<VertexId>(), a[1].get<VertexId>()});
  }
  return arcs;
}

json arcs_to(const std::vector<Arc>& arcs) {
  json list = json::array();
  for (const Arc& a : arcs) list.push_back({a.tail, a.head});
  return list;
}

json tree_json(const OutTree& t) { return {{"root", t.root()}, {"arcs", arcs_to(t.arcs())}}; }

OutTree tree_from(const Digraph& host, const json& j) {
  const auto root = field<VertexId>(j, "root");
  const auto arcs = arcs_from(j.contains("arcs") ? j["arcs"] : json());
  try {
    return assemble_tree(host, root, arcs);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, std::string("tree rooted at ") + std::to_string(root) +
                                           ": " + e.what());
  }
}

std::vector<OutTree> trees_from(const Digraph& host, const json& list) {
  if (!list.is_array()) throw Error(ErrorCode::ParseError, "expected a list of trees");
  std::vector<OutTree> trees;
  for (const json& t : list) trees.push_back(tree_from(host, t));
  return trees;
}

json trees_json(const std::vector<OutTree>& trees) {
  json list = json::array();
  for (const OutTree& t : trees) list.push_back(tree_json(t));
  return list;
}

json spec_json(const TerminalSpec& s) {
  return {{"root", s.root()}, {"x", s.x()}, {"y", s.y()}};
}

}  // namespace

std::string digraph_to_json(const Digraph& d) {
  return json{{"n", d.vertex_count()}, {"arcs", arcs_to(d.arcs())}}.dump();
}

Digraph digraph_from_json(std::string_view text) {
  json j = parse(text);
  const auto n = field<VertexId>(j, "n");
  if (n < 0) throw Error(ErrorCode::ParseError, "negative vertex count");
  auto arcs = arcs_from(j.contains("arcs") ? j["arcs"] : json());
  std::set<Arc> seen;
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw Error(ErrorCode::ParseError, "arc [" + std::to_string(a.tail) + "," +
                                             std::to_string(a.head) + "] leaves [0," +
                                             std::to_string(n) + ")");
    }
    if (a.tail == a.head) {
      throw Error(ErrorCode::ParseError, "loop at vertex " + std::to_string(a.tail));
    }
    if (!seen.insert(a).second) {
      throw Error(ErrorCode::ParseError, "duplicate arc [" + std::to_string(a.tail) + "," +
                                             std::to_string(a.head) + "]");
    }
  }
  return Digraph::from_arcs(n, arcs);
}

std::string product_coordinates_json(const ProductDigraph& p) {
  json j = json::object();
  for (VertexId v = 0; v < p.graph().vertex_count(); ++v) {
    Coord c = p.decode(v);
    j[std::to_string(v)] = {c.d, c.h};
  }
  return j.dump();
}

std::string tree_to_json(const OutTree& t) { return tree_json(t).dump(); }

OutTree tree_from_json(const Digraph& host, std::string_view text) {
  return tree_from(host, parse(text));
}

std::string family_to_json(const std::vector<OutTree>& trees) { return trees_json(trees).dump(); }

std::vector<OutTree> family_from_json(const Digraph& host, std::string_view text) {
  return trees_from(host, parse(text));
}

std::string certificate_to_json(const std::vector<OutTree>& trees) {
  return json{{"count", trees.size()}, {"trees", trees_json(trees)}}.dump();
}

std::vector<OutTree> certificate_from_json(const Digraph& host, std::string_view text) {
  json j = parse(text);
  if (j.is_array()) return trees_from(host, j);
  auto trees = trees_from(host, j.contains("trees") ? j["trees"] : json());
  if (j.contains("count") && field<std::size_t>(j, "count") != trees.size()) {
    throw Error(ErrorCode::ParseError, "count does not match the number of trees");
  }
  return trees;
}

std::string spec_to_json(const TerminalSpec& spec) { return spec_json(spec).dump(); }

std::string trace_to_json(const ConstructionTrace& trace) {
  json trees = json::array();
  for (const TreeProvenance& t : trace.trees) {
    json pieces = json::array();
    for (const TracePiece& piece : t.pieces) {
      pieces.push_back({{"label", piece.label}, {"arcs", arcs_to(piece.arcs)}});
    }
    trees.push_back({{"name", t.name}, {"pieces", pieces}});
  }
  json j{{"sd", trace.sd},
         {"sh", trace.sh},
         {"subcase", trace.subcase},
         {"notes", trace.notes},
         {"trees", trees}};
  return j.dump(2);
}

std::string timings_to_json(const PhaseTimings& timings) {
  return json{{"validation", timings.validation_ms},
              {"flow", timings.flow_ms},
              {"lifting", timings.lifting_ms},
              {"assembly", timings.assembly_ms},
              {"total", timings.total_ms()}}
      .dump();
}

std::string report_to_json(const FamilyReport& report) {
  json trees = json::array();
  for (const PendantDiagnostic& d : report.trees) {
    json t{{"condition", to_string(d.condition)}};
    if (!d.ok()) t["witness"] = d.witness;
    if (d.witness_arc) t["witness_arc"] = {d.witness_arc->tail, d.witness_arc->head};
    trees.push_back(t);
  }
  json pairs = json::array();
  for (const PairFailure& f : report.pair_failures) {
    json p{{"first", f.first},
           {"second", f.second},
           {"condition", to_string(f.diagnostic.condition)},
           {"witness", f.diagnostic.witness}};
    if (f.diagnostic.witness_arc) {
      p["witness_arc"] = {f.diagnostic.witness_arc->tail, f.diagnostic.witness_arc->head};
    }
    pairs.push_back(p);
  }
  return json{{"valid", report.valid},
              {"size", report.trees.size()},
              {"trees", trees},
              {"pair_failures", pairs}}
      .dump(2);
}

std::string oracle_result_to_json(int value, const TerminalSpec* spec,
                                  const std::vector<OutTree>& family) {
  return json{{"value", value},
              {"witness_spec", spec ? spec_json(*spec) : json(nullptr)},
              {"witness_family", trees_json(family)}}
      .dump();
}

std::string digraph_to_dot(const Digraph& d, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (VertexId v = 0; v < d.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Arc& a : d.arcs()) out << "  " << a.tail << " -> " << a.head << ";\n";
  out << "}\n";
  return out.str();
}

std::string family_to_dot(const TreeFamily& family, std::string_view name) {
  static const char* const palette[] = {"red",    "blue",   "darkgreen", "orange", "purple",
                                        "brown",  "cyan4",  "magenta",   "gold3",  "navy",
                                        "olivedrab", "deeppink"};
  std::map<Arc, std::size_t> owner;
  for (std::size_t i = 0; i < family.trees.size(); ++i) {
    for (const Arc& a : family.trees[i].arcs()) owner.emplace(a, i);
  }
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (VertexId v = 0; v < family.host.vertex_count(); ++v) {
    out << "  " << v;
    if (v == family.spec.root()) {
      out << " [style=filled, fillcolor=black, fontcolor=white]";
    } else if (family.spec.is_terminal(v)) {
      out << " [style=filled, fillcolor=gray70]";
    }
    out << ";\n";
  }
  for (const Arc& a : family.host.arcs()) {
    out << "  " << a.tail << " -> " << a.head;
    auto it = owner.find(a);
    if (it == owner.end()) {
      out << " [color=gray85]";
    } else {
      out << " [color=" << palette[it->second % std::size(palette)]
          << ", penwidth=2, label=\"" << it->second + 1 << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << content;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace dptree
