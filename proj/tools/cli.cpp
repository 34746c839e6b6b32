#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "dptree/dptree.hpp"

namespace dptree::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr const char* kVersion = "0.1.0";

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Globals {
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  bool force = false;
};

// Collected while a command runs; written next to --out.
struct Manifest {
  std::string command;
  std::vector<std::string> args;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  json timings = json::object();
  json extra = json::object();
};

void write_manifest(const Globals& g, const Manifest& m) {
  if (g.out.empty()) return;
  json inputs = json::array();
  for (const auto& p : m.inputs) inputs.push_back({{"path", p}, {"sha256", file_sha256(p)}});
  json outputs = json::array();
  for (const auto& p : m.outputs) outputs.push_back({{"path", p}, {"sha256", file_sha256(p)}});
  json j{{"command", m.command}, {"args", m.args},       {"seed", g.seed},
         {"version", kVersion},  {"inputs", inputs},    {"outputs", outputs},
         {"timings_ms", m.timings}};
  for (const auto& [k, v] : m.extra.items()) j[k] = v;
  write_file(g.out + ".manifest.json", j.dump(2) + "\n");
}

// Writes to --out (recording it) or to stdout.
void emit(const Globals& g, Manifest& m, std::ostream& out, const std::string& content,
          const std::string& suffix = "") {
  if (g.out.empty()) {
    out << content;
    if (!content.empty() && content.back() != '\n') out << "\n";
    return;
  }
  const std::string path = g.out + suffix;
  write_file(path, content.back() == '\n' ? content : content + "\n");
  m.outputs.push_back(path);
}

Digraph load_digraph(const std::string& path, Manifest& m) {
  m.inputs.push_back(path);
  return digraph_from_json(read_file(path));
}

// "17", "(1,2)" or "1,2"; pairs need the H-side size.
VertexId parse_vertex(const std::string& text, std::optional<VertexId> h_size,
                      VertexId vertex_count) {
  static const std::regex flat(R"(\s*(\d+)\s*)");
  static const std::regex pair(R"(\s*\(?\s*(\d+)\s*,\s*(\d+)\s*\)?\s*)");
  std::smatch match;
  VertexId v = -1;
  if (std::regex_match(text, match, flat)) {
    v = std::stoi(match[1]);
  } else if (std::regex_match(text, match, pair)) {
    if (!h_size) {
      throw Error(ErrorCode::InvalidParameter,
                  "coordinate pair \"" + text + "\" needs the product dimensions");
    }
    const VertexId i = std::stoi(match[1]), j = std::stoi(match[2]);
    if (j >= *h_size || i * *h_size + j >= vertex_count) {
      throw Error(ErrorCode::InvalidVertex, "coordinate pair \"" + text + "\" out of range");
    }
    v = i * *h_size + j;
  } else {
    throw Error(ErrorCode::InvalidParameter, "cannot read vertex \"" + text + "\"");
  }
  if (v < 0 || v >= vertex_count) {
    throw Error(ErrorCode::InvalidVertex, "vertex " + text + " out of range");
  }
  return v;
}

TerminalSpec parse_spec(const std::vector<std::string>& terms, std::optional<VertexId> h_size,
                        VertexId vertex_count) {
  if (terms.size() != 3) throw Error(ErrorCode::InvalidParameter, "need exactly three terminals");
  return TerminalSpec(parse_vertex(terms[0], h_size, vertex_count),
                      parse_vertex(terms[1], h_size, vertex_count),
                      parse_vertex(terms[2], h_size, vertex_count));
}

json paths_json(const std::vector<DirectedPath>& paths) {
  json list = json::array();
  for (const auto& p : paths) list.push_back(p.vertices);
  return list;
}

// ---------------------------------------------------------------- commands

int cmd_gen(const Globals& g, Manifest& m, std::ostream& out, const std::string& kind,
            const std::vector<std::string>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw Error(ErrorCode::InvalidParameter,
                  kind + " takes " + std::to_string(k) + " parameter(s)");
    }
  };
  auto as_int = [&](std::size_t i) {
    try {
      return std::stoi(params.at(i));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidParameter, "not an integer: " + params.at(i));
    }
  };
  Digraph d;
  if (kind == "bipath") {
    need(1);
    d = bidirected_path(as_int(0));
  } else if (kind == "dipath") {
    need(1);
    d = directed_path(as_int(0));
  } else if (kind == "dicycle") {
    need(1);
    d = directed_cycle(as_int(0));
  } else if (kind == "complete-sym") {
    need(1);
    d = complete_symmetric(as_int(0));
  } else if (kind == "random-strong") {
    need(2);
    double prob = 0;
    try {
      prob = std::stod(params[1]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidParameter, "not a probability: " + params[1]);
    }
    d = random_strong(as_int(0), prob, g.seed);
  } else {
    throw Error(ErrorCode::InvalidParameter, "unknown kind " + kind);
  }
  emit(g, m, out, g.format == "dot" ? digraph_to_dot(d, "G") : digraph_to_json(d));
  return kExitOk;
}

int cmd_product(const Globals& g, Manifest& m, std::ostream& out, const std::string& d_file,
                const std::string& h_file) {
  Digraph d = load_digraph(d_file, m);
  Digraph h = load_digraph(h_file, m);
  ProductDigraph p = cartesian_product(d, h);
  emit(g, m, out, g.format == "dot" ? digraph_to_dot(p.graph(), "P") : digraph_to_json(p.graph()));
  if (!g.out.empty()) emit(g, m, out, product_coordinates_json(p), ".coords.json");
  return kExitOk;
}

struct ConstructArgs {
  std::string d_file, h_file;
  std::vector<std::string> terminals;
  int l = -1;
  int h = -1;
  std::string d_cert, h_cert;
  bool swap = false;
  std::string dot;
  int max_vertices = 14;
};

std::vector<OutTree> load_certificate(const std::string& path, const Digraph& g,
                                      Manifest& m) {
  m.inputs.push_back(path);
  try {
    return certificate_from_json(g, read_file(path));
  } catch (const Error& e) {
    throw Error(ErrorCode::PreconditionViolated, "certificate " + path + ": " + e.what());
  }
}

int factor_tau3(const Digraph& g, const char* name, const ConstructArgs& a, bool force) {
  try {
    return tau3(g, Tau3Options{a.max_vertices, force, 1}).value;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InstanceTooLarge) throw;
    throw Error(ErrorCode::PreconditionViolated,
                std::string("factor ") + name + " too large for the oracle; pass its packing size");
  }
}

int cmd_construct(const Globals& g, Manifest& m, std::ostream& out, std::ostream& err,
                  const ConstructArgs& a) {
  Digraph d0 = load_digraph(a.d_file, m);
  Digraph h0 = load_digraph(a.h_file, m);
  ProductDigraph original = cartesian_product(d0, h0);
  TerminalSpec spec0 = parse_spec(a.terminals, h0.vertex_count(), original.graph().vertex_count());

  // With --swap-factors the algorithm runs on H □ D and the result is mapped
  // back through (i,j) <-> (j,i).
  const Digraph& d = a.swap ? h0 : d0;
  const Digraph& h = a.swap ? d0 : h0;
  ProductDigraph p = a.swap ? cartesian_product(d, h) : original;
  auto to_work = [&](VertexId v) {
    if (!a.swap) return v;
    Coord c = original.decode(v);
    return p.encode(c.h, c.d);
  };
  auto to_original = [&](VertexId v) {
    if (!a.swap) return v;
    Coord c = p.decode(v);
    return original.encode(c.h, c.d);
  };
  TerminalSpec spec(to_work(spec0.root()), to_work(spec0.x()), to_work(spec0.y()));

  const std::string& d_cert = a.swap ? a.h_cert : a.d_cert;
  const std::string& h_cert = a.swap ? a.d_cert : a.h_cert;
  const int l_arg = a.swap ? a.h : a.l;
  const int h_arg = a.swap ? a.l : a.h;

  auto t0 = Clock::now();
  FactorCertificates certs;
  certs.l = l_arg >= 0 ? l_arg : factor_tau3(d, "D", a, g.force);
  certs.h = h_arg >= 0 ? h_arg : factor_tau3(h, "H", a, g.force);
  if (certs.l < 1 || certs.h < 1) {
    const bool d_side = certs.l < 1;
    const Digraph& bad = d_side ? d : h;
    throw Error(ErrorCode::PreconditionViolated,
                std::string("factor ") + (d_side ? "D" : "H") +
                    " has tau3 = 0 (min semi-degree " + std::to_string(min_semi_degree(bad)) +
                    "; at least 3 is needed for a single pendant tree)");
  }
  {
    OracleOptions oo{20, g.force, -1};
    FactorCertificates auto_certs = certificates_for(
        d, h, p, spec, d_cert.empty() ? certs.l : 0, h_cert.empty() ? certs.h : 0, oo);
    certs.d_trees = d_cert.empty() ? auto_certs.d_trees : load_certificate(d_cert, d, m);
    certs.h_trees = h_cert.empty() ? auto_certs.h_trees : load_certificate(h_cert, h, m);
  }
  const double cert_ms = ms_since(t0);

  ConstructionResult result = construct(d, h, p, spec, certs);

  std::vector<OutTree> trees;
  for (const OutTree& t : result.family.trees) {
    std::vector<Arc> arcs;
    for (const Arc& arc : t.arcs()) arcs.push_back({to_original(arc.tail), to_original(arc.head)});
    trees.push_back(assemble_tree(original.graph(), spec0.root(), arcs));
  }
  TreeFamily family{original.graph(), spec0, trees};
  auto tv = Clock::now();
  FamilyReport report = verify_family(family);
  const double verify_ms = ms_since(tv);

  m.timings = json::parse(timings_to_json(result.timings));
  m.timings["certificates"] = cert_ms;
  m.timings["verification"] = verify_ms;
  m.extra["terminals"] = json::parse(spec_to_json(spec0));
  m.extra["l"] = certs.l;
  m.extra["h"] = certs.h;
  m.extra["swap_factors"] = a.swap;

  if (g.out.empty()) {
    out << (g.format == "dot" ? family_to_dot(family, "family") : family_to_json(trees)) << "\n";
  } else {
    emit(g, m, out, family_to_json(trees), ".family.json");
    emit(g, m, out, trace_to_json(result.trace), ".trace.json");
    json summary{{"trees", trees.size()},
                 {"l", certs.l},
                 {"h", certs.h},
                 {"subcase", result.trace.subcase},
                 {"valid", report.valid}};
    out << summary.dump() << "\n";
  }
  if (!a.dot.empty()) {
    write_file(a.dot, family_to_dot(family, "family"));
    m.outputs.push_back(a.dot);
  }
  if (!report.valid) {
    err << report_to_json(report) << "\n";
    return kExitVerification;
  }
  return kExitOk;
}

int cmd_verify(Manifest& m, std::ostream& out, const std::string& host_file,
               const std::string& family_file, const std::vector<std::string>& terminals,
               int h_size) {
  Digraph host = load_digraph(host_file, m);
  std::optional<VertexId> hs;
  if (h_size > 0) hs = h_size;
  TerminalSpec spec = parse_spec(terminals, hs, host.vertex_count());
  m.inputs.push_back(family_file);
  std::vector<OutTree> trees;
  try {
    trees = family_from_json(host, read_file(family_file));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    // A tree that is not even an arborescence in the host fails verification.
    out << json{{"valid", false}, {"error", e.what()}}.dump(2) << "\n";
    return kExitVerification;
  }
  FamilyReport report = verify_family(TreeFamily{host, spec, trees});
  out << report_to_json(report) << "\n";
  return report.valid ? kExitOk : kExitVerification;
}

int cmd_tau3(const Globals& g, Manifest& m, std::ostream& out, const std::string& host_file,
             int threads, int max_vertices) {
  Digraph host = load_digraph(host_file, m);
  auto t0 = Clock::now();
  Tau3Result r = tau3(host, Tau3Options{max_vertices, g.force, threads});
  m.timings["oracle"] = ms_since(t0);
  emit(g, m, out,
       oracle_result_to_json(r.value, r.witness_spec ? &*r.witness_spec : nullptr,
                             r.witness_family));
  return kExitOk;
}

int cmd_tau_sr(const Globals& g, Manifest& m, std::ostream& out, const std::string& host_file,
               const std::vector<std::string>& terminals, int h_size, int max_vertices) {
  Digraph host = load_digraph(host_file, m);
  std::optional<VertexId> hs;
  if (h_size > 0) hs = h_size;
  TerminalSpec spec = parse_spec(terminals, hs, host.vertex_count());
  auto t0 = Clock::now();
  PackingResult r = tau_s_r(host, spec, OracleOptions{max_vertices, g.force, -1});
  m.timings["oracle"] = ms_since(t0);
  emit(g, m, out, oracle_result_to_json(r.value, &spec, r.witness));
  return kExitOk;
}

int cmd_iddp(const Globals& g, Manifest& m, std::ostream& out, const std::string& host_file,
             VertexId u, VertexId v, int l) {
  Digraph host = load_digraph(host_file, m);
  auto paths = find_iddp(host, u, v, l);
  emit(g, m, out, json{{"source", u}, {"sink", v}, {"paths", paths_json(paths)}}.dump());
  return kExitOk;
}

int cmd_fan(const Globals& g, Manifest& m, std::ostream& out, const std::string& host_file,
            const std::vector<VertexId>& sources, VertexId target) {
  Digraph host = load_digraph(host_file, m);
  Fan f = find_fan(host, std::span<const VertexId>(sources), target);
  emit(g, m, out, json{{"target", f.target}, {"paths", paths_json(f.paths)}}.dump());
  return kExitOk;
}

int cmd_export_dot(const Globals& g, Manifest& m, std::ostream& out, const std::string& host_file,
                   const std::string& family_file, const std::vector<std::string>& terminals,
                   int h_size, const std::string& name) {
  Digraph host = load_digraph(host_file, m);
  if (family_file.empty()) {
    emit(g, m, out, digraph_to_dot(host, name));
    return kExitOk;
  }
  std::optional<VertexId> hs;
  if (h_size > 0) hs = h_size;
  TerminalSpec spec = parse_spec(terminals, hs, host.vertex_count());
  m.inputs.push_back(family_file);
  auto trees = family_from_json(host, read_file(family_file));
  emit(g, m, out, family_to_dot(TreeFamily{host, spec, trees}, name));
  return kExitOk;
}

int cmd_bench(const Globals& g, Manifest& m, std::ostream& out, const std::vector<int>& sizes,
              int repeat) {
  std::mt19937_64 rng(g.seed);
  std::ostringstream csv;
  csv << "n,product_vertices,trees,subcase,validation_ms,flow_ms,lifting_ms,assembly_ms,"
         "verification_ms,total_ms\n";
  csv << std::fixed << std::setprecision(4);
  for (int n : sizes) {
    if (n < 4) throw Error(ErrorCode::InvalidParameter, "bench sizes must be at least 4");
    Digraph k = complete_symmetric(n);
    ProductDigraph p = cartesian_product(k, k);
    const VertexId count = p.graph().vertex_count();
    std::vector<VertexId> pick;
    while (pick.size() < 3) {
      const VertexId v = static_cast<VertexId>(rng() % static_cast<std::uint64_t>(count));
      if (std::find(pick.begin(), pick.end(), v) == pick.end()) pick.push_back(v);
    }
    TerminalSpec spec(pick[0], pick[1], pick[2]);
    FactorCertificates certs = certificates_for(k, k, p, spec, n - 3, n - 3);
    std::optional<PhaseTimings> best;
    double best_verify = 0;
    std::size_t trees = 0;
    std::string subcase;
    for (int rep = 0; rep < std::max(1, repeat); ++rep) {
      ConstructionResult r = construct(k, k, p, spec, certs);
      auto tv = Clock::now();
      const bool ok = verify_family(r.family).valid;
      const double verify_ms = ms_since(tv);
      if (!ok) throw Error(ErrorCode::InternalContractViolation, "bench family failed to verify");
      if (!best || r.timings.total_ms() + verify_ms < best->total_ms() + best_verify) {
        best = r.timings;
        best_verify = verify_ms;
      }
      trees = r.family.trees.size();
      subcase = r.trace.subcase;
    }
    csv << n << "," << count << "," << trees << "," << subcase << "," << best->validation_ms
        << "," << best->flow_ms << "," << best->lifting_ms << "," << best->assembly_ms << ","
        << best_verify << "," << best->total_ms() + best_verify << "\n";
  }
  m.extra["sizes"] = sizes;
  emit(g, m, out, csv.str());
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::PreconditionViolated:
    case ErrorCode::NotStrong:
    case ErrorCode::InstanceTooLarge:
    case ErrorCode::FanNotFound:
    case ErrorCode::PathsNotFound:
      return kExitPrecondition;
    case ErrorCode::InternalContractViolation:
      return kExitVerification;
    default:
      return kExitUsage;
  }
}

}  // namespace

std::string file_sha256(const std::string& path) {
  const std::string data = read_file(path);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::IoError, "sha256 failed for " + path);
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disjoint pendant trees in Cartesian product digraphs", "dptree"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Globals g;
  auto globals = [&](CLI::App* sub) {
    sub->add_option("--seed", g.seed, "seed for every random choice");
    sub->add_option("--out", g.out, "output path (prefix for multi-file commands)");
    sub->add_option("--format", g.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    sub->add_flag("--force", g.force, "lift the oracle size guard");
  };

  std::string kind;
  std::vector<std::string> gen_params;
  auto* gen = app.add_subcommand("gen", "generate a digraph");
  gen->add_option("kind", kind, "bipath | dipath | dicycle | complete-sym | random-strong")
      ->required();
  gen->add_option("params", gen_params, "size (and arc probability for random-strong)");
  globals(gen);

  std::string f1, f2;
  auto* product = app.add_subcommand("product", "Cartesian product of two digraphs");
  product->add_option("d_file", f1)->required();
  product->add_option("h_file", f2)->required();
  globals(product);

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "build l+h disjoint pendant trees");
  construct_cmd->add_option("d_file", ca.d_file)->required();
  construct_cmd->add_option("h_file", ca.h_file)->required();
  construct_cmd->add_option("--terminals", ca.terminals, "root x y, flat ids or (i,j)")
      ->required()
      ->expected(3);
  construct_cmd->add_option("--d-packing", ca.l, "packing size l in D (default: oracle)");
  construct_cmd->add_option("--h-packing", ca.h, "packing size h in H (default: oracle)");
  construct_cmd->add_option("--d-cert", ca.d_cert, "certificate trees for D");
  construct_cmd->add_option("--h-cert", ca.h_cert, "certificate trees for H");
  construct_cmd->add_flag("--swap-factors", ca.swap, "run on H x D and map back");
  construct_cmd->add_option("--dot", ca.dot, "also write the family as DOT");
  construct_cmd->add_option("--max-vertices", ca.max_vertices, "oracle size guard");
  globals(construct_cmd);

  std::string family_file;
  std::vector<std::string> terminals;
  int h_size = 0;
  auto* verify = app.add_subcommand("verify", "check a tree family");
  verify->add_option("host", f1)->required();
  verify->add_option("family", family_file)->required();
  verify->add_option("--terminals", terminals)->required()->expected(3);
  verify->add_option("--h-size", h_size, "|V(H)| for (i,j) terminals");
  globals(verify);

  int threads = 1;
  int max_vertices = 14;
  auto* tau3_cmd = app.add_subcommand("tau3", "exact tau3 by exhaustive search");
  tau3_cmd->add_option("host", f1)->required();
  tau3_cmd->add_option("--threads", threads);
  tau3_cmd->add_option("--max-vertices", max_vertices);
  globals(tau3_cmd);

  int sr_max = 20;
  auto* tau_sr = app.add_subcommand("tau-sr", "exact packing number for one terminal triple");
  tau_sr->add_option("host", f1)->required();
  tau_sr->add_option("--terminals", terminals)->required()->expected(3);
  tau_sr->add_option("--h-size", h_size);
  tau_sr->add_option("--max-vertices", sr_max);
  globals(tau_sr);

  VertexId u = 0, v = 0;
  int l = 1;
  auto* iddp = app.add_subcommand("iddp", "internally-disjoint u-v paths");
  iddp->add_option("host", f1)->required();
  iddp->add_option("u", u)->required();
  iddp->add_option("v", v)->required();
  iddp->add_option("l", l)->required();
  globals(iddp);

  std::vector<VertexId> sources;
  VertexId target = 0;
  auto* fan = app.add_subcommand("fan", "fan from sources to a target");
  fan->add_option("host", f1)->required();
  fan->add_option("--sources", sources)->required();
  fan->add_option("--target", target)->required();
  globals(fan);

  std::string name = "G";
  auto* dot = app.add_subcommand("export-dot", "DOT for a digraph or a tree family");
  dot->add_option("host", f1)->required();
  dot->add_option("--family", family_file);
  dot->add_option("--terminals", terminals)->expected(3);
  dot->add_option("--h-size", h_size);
  dot->add_option("--name", name);
  globals(dot);

  std::vector<int> sizes{5, 10, 15, 20};
  int repeat = 3;
  auto* bench = app.add_subcommand("bench", "time construct on complete symmetric squares");
  bench->add_option("--sizes", sizes)->delimiter(',');
  bench->add_option("--repeat", repeat);
  globals(bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Manifest m;
  m.args = args;
  try {
    int code = kExitOk;
    auto t0 = Clock::now();
    if (*gen) {
      m.command = "gen";
      code = cmd_gen(g, m, out, kind, gen_params);
    } else if (*product) {
      m.command = "product";
      code = cmd_product(g, m, out, f1, f2);
    } else if (*construct_cmd) {
      m.command = "construct";
      code = cmd_construct(g, m, out, err, ca);
    } else if (*verify) {
      m.command = "verify";
      code = cmd_verify(m, out, f1, family_file, terminals, h_size);
    } else if (*tau3_cmd) {
      m.command = "tau3";
      code = cmd_tau3(g, m, out, f1, threads, max_vertices);
    } else if (*tau_sr) {
      m.command = "tau-sr";
      code = cmd_tau_sr(g, m, out, f1, terminals, h_size, sr_max);
    } else if (*iddp) {
      m.command = "iddp";
      code = cmd_iddp(g, m, out, f1, u, v, l);
    } else if (*fan) {
      m.command = "fan";
      code = cmd_fan(g, m, out, f1, sources, target);
    } else if (*dot) {
      m.command = "export-dot";
      if (!family_file.empty() && terminals.size() != 3) {
        err << "error: --family needs --terminals\n";
        return kExitUsage;
      }
      code = cmd_export_dot(g, m, out, f1, family_file, terminals, h_size, name);
    } else if (*bench) {
      m.command = "bench";
      code = cmd_bench(g, m, out, sizes, repeat);
    }
    m.timings["command"] = ms_since(t0);
    write_manifest(g, m);
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace dptree::cli
