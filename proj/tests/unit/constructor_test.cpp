#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "testkit.hpp"

using namespace dptree;

namespace {

struct Factor {
  Digraph g;
  int tau;
};

const std::vector<Factor>& factors() {
  static const std::vector<Factor> list = [] {
    std::vector<Factor> out{{complete_symmetric(4), 1}, {complete_symmetric(5), 2}};
    std::mt19937_64 rng(2024);
    for (int n : {5, 6, 6}) {
      int tau = 0;
      Digraph g = testkit::random_factor(rng, n, 0.8, &tau);
      out.push_back({g, tau});
    }
    return out;
  }();
  return list;
}

const std::vector<std::pair<int, int>> kShapes{{1, 3}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::IoError;
}

}  // namespace

TEST(Constructor, EverySubcaseVerifiesOnSampledSpecs) {
  std::map<std::string, int> tally;
  std::mt19937_64 rng(11);
  for (const Factor& d : factors()) {
    for (const Factor& h : factors()) {
      auto p = cartesian_product(d.g, h.g);
      for (int k = 0; k < 36; ++k) {
        auto [sd, sh] = kShapes[k % kShapes.size()];
        TerminalSpec s = testkit::shaped_spec(rng, p, sd, sh);
        auto certs = certificates_for(d.g, h.g, p, s, d.tau, h.tau);
        auto res = construct(d.g, h.g, p, s, certs);
        ASSERT_EQ(static_cast<int>(res.family.trees.size()), d.tau + h.tau);
        auto report = verify_family(res.family);
        ASSERT_TRUE(report.valid) << describe(res.trace);
        EXPECT_EQ(res.trace.sd, sd);
        EXPECT_EQ(res.trace.sh, sh);
        ++tally[res.trace.subcase];
      }
    }
  }
  for (const char* label :
       {"sd1", "sd2.root-layer.distinct", "sd2.root-layer.shared-leaf",
        "sd2.root-layer.shared-root", "sd2.leaf-layer.distinct", "sd2.leaf-layer.root-row",
        "sd3.sh3", "sd3.sh2.root-row", "sd3.sh2.leaf-row", "sd3.sh1"}) {
    EXPECT_GT(tally[label], 0) << label;
  }
  EXPECT_EQ(tally.size(), 10u);
}

TEST(Constructor, ExhaustiveOnSmallestProduct) {
  Digraph k4 = complete_symmetric(4);
  auto p = cartesian_product(k4, k4);
  int count = 0;
  for (const TerminalSpec& s : testkit::all_specs(16)) {
    auto certs = certificates_for(k4, k4, p, s, 1, 1);
    auto res = construct(k4, k4, p, s, certs);
    ASSERT_EQ(res.family.trees.size(), 2u);
    ASSERT_TRUE(verify_family(res.family).valid) << describe(res.trace);
    ++count;
  }
  EXPECT_EQ(count, 16 * 105);
}

TEST(Constructor, TraceCoversEveryArcExactlyOnce) {
  Digraph d = complete_symmetric(5);
  Digraph h = complete_symmetric(4);
  auto p = cartesian_product(d, h);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 60; ++k) {
    auto [sd, sh] = kShapes[k % kShapes.size()];
    TerminalSpec s = testkit::shaped_spec(rng, p, sd, sh);
    auto res = construct(d, h, p, s, certificates_for(d, h, p, s, 2, 1));
    ASSERT_EQ(res.trace.trees.size(), res.family.trees.size());
    for (std::size_t t = 0; t < res.family.trees.size(); ++t) {
      std::multiset<Arc> from_pieces;
      for (const auto& piece : res.trace.trees[t].pieces) {
        EXPECT_FALSE(piece.label.empty());
        from_pieces.insert(piece.arcs.begin(), piece.arcs.end());
      }
      auto arcs = res.family.trees[t].arcs();
      EXPECT_EQ(std::vector<Arc>(from_pieces.begin(), from_pieces.end()), arcs);
    }
    // T'_1..T'_h first, then T*_1..T*_l
    EXPECT_EQ(res.trace.trees[0].name, "T'_1");
    EXPECT_EQ(res.trace.trees[1].name, "T*_1");
    EXPECT_EQ(res.trace.trees[2].name, "T*_2");
  }
}

TEST(Constructor, Deterministic) {
  Digraph d = complete_symmetric(6);
  Digraph h = factors()[2].g;
  int th = factors()[2].tau;
  auto p = cartesian_product(d, h);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 24; ++k) {
    auto [sd, sh] = kShapes[k % kShapes.size()];
    TerminalSpec s = testkit::shaped_spec(rng, p, sd, sh);
    auto certs = certificates_for(d, h, p, s, 3, th);
    auto a = construct(d, h, p, s, certs);
    auto b = construct(d, h, p, s, certs);
    EXPECT_EQ(a.family.trees, b.family.trees);
    EXPECT_EQ(trace_to_json(a.trace), trace_to_json(b.trace));
  }
}

TEST(Constructor, BranchEntryPointsCheckShape) {
  Digraph k = complete_symmetric(4);
  auto p = cartesian_product(k, k);
  TerminalSpec one(p.encode(0, 0), p.encode(0, 1), p.encode(0, 2));
  TerminalSpec two(p.encode(0, 0), p.encode(0, 1), p.encode(1, 0));
  TerminalSpec three(p.encode(0, 0), p.encode(1, 1), p.encode(2, 2));
  for (const TerminalSpec& s : {one, two, three}) {
    auto certs = certificates_for(k, k, p, s, 1, 1);
    int sd = project(p, std::vector<VertexId>{s.root(), s.x(), s.y()}).d.size();
    auto run = [&](int which) {
      switch (which) {
        case 1: return case_one_layer(k, k, p, s, certs);
        case 2: return case_two_layers(k, k, p, s, certs);
        default: return case_three_layers(k, k, p, s, certs);
      }
    };
    for (int which = 1; which <= 3; ++which) {
      if (which == sd) {
        EXPECT_TRUE(verify_family(run(which).family).valid);
      } else {
        EXPECT_EQ(code_of([&] { run(which); }), ErrorCode::PreconditionViolated);
      }
    }
  }
}

TEST(Constructor, PreconditionViolations) {
  Digraph k4 = complete_symmetric(4);
  Digraph k5 = complete_symmetric(5);
  auto p = cartesian_product(k5, k4);
  TerminalSpec s(p.encode(0, 0), p.encode(1, 1), p.encode(2, 2));
  auto good = certificates_for(k5, k4, p, s, 2, 1);
  ASSERT_TRUE(verify_family(construct(k5, k4, p, s, good).family).valid);

  auto with = [&](auto edit) {
    FactorCertificates c = good;
    edit(c);
    return code_of([&] { construct(k5, k4, p, s, c); });
  };
  EXPECT_EQ(with([](auto& c) { c.l = 0; }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(with([](auto& c) { c.h = 2; }), ErrorCode::PreconditionViolated);  // K4 has tau3 = 1
  EXPECT_EQ(with([](auto& c) { c.d_trees.pop_back(); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(with([](auto& c) { c.d_trees[1] = c.d_trees[0]; }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(with([&](auto& c) {
              c.h_trees[0] = assemble_tree(k4, 0, std::vector<Arc>{{0, 1}, {1, 2}, {2, 3}});
            }),
            ErrorCode::PreconditionViolated);

  // wrong product for the factors
  auto other = cartesian_product(k4, k5);
  EXPECT_EQ(code_of([&] { construct(k5, k4, other, s, good); }), ErrorCode::PreconditionViolated);

  // a factor that is not strong
  Digraph weak = directed_path(5);
  auto pw = cartesian_product(weak, k4);
  EXPECT_EQ(code_of([&] { construct(weak, k4, pw, s, good); }), ErrorCode::PreconditionViolated);

  // Example Q's factors have tau3 = 0
  Digraph p3 = bidirected_path(3);
  Digraph c3 = directed_cycle(3);
  auto q = cartesian_product(p3, c3);
  FactorCertificates none{1, 1, {}, {}};
  EXPECT_EQ(code_of([&] { construct(p3, c3, q, TerminalSpec(0, 1, 3), none); }),
            ErrorCode::PreconditionViolated);
}

TEST(Constructor, UnneededCertificatesAreNoted) {
  Digraph k = complete_symmetric(5);
  auto p = cartesian_product(k, k);
  TerminalSpec s(p.encode(0, 0), p.encode(0, 1), p.encode(0, 2));  // one H-layer
  FactorCertificates c = certificates_for(k, k, p, s, 2, 2);
  EXPECT_TRUE(c.d_trees.empty());
  c.d_trees = certify_factor(k, TerminalSpec(0, 1, 2), 2);
  auto res = construct(k, k, p, s, c);
  EXPECT_TRUE(verify_family(res.family).valid);
  ASSERT_FALSE(res.trace.notes.empty());
}

TEST(Constructor, DescribeListsEveryTree) {
  Digraph k = complete_symmetric(4);
  auto p = cartesian_product(k, k);
  TerminalSpec s(p.encode(0, 0), p.encode(1, 1), p.encode(2, 2));
  auto res = construct(k, k, p, s, certificates_for(k, k, p, s, 1, 1));
  std::string text = describe(res.trace);
  EXPECT_NE(text.find("sd3.sh3"), std::string::npos);
  EXPECT_NE(text.find("T'_1"), std::string::npos);
  EXPECT_NE(text.find("T*_1"), std::string::npos);
}

TEST(Certificates, ClosedFormMatchesOracleCount) {
  for (VertexId n = 4; n <= 7; ++n) {
    Digraph k = complete_symmetric(n);
    TerminalSpec s(2, 0, 3);
    auto trees = certify_factor(k, s, n - 3);
    EXPECT_TRUE(verify_family({k, s, trees}).valid);
    EXPECT_EQ(static_cast<int>(trees.size()), n - 3);
    EXPECT_EQ(code_of([&] { certify_factor(k, s, n - 2); }), ErrorCode::PreconditionViolated);
  }
  EXPECT_TRUE(is_complete_symmetric(complete_symmetric(3)));
  EXPECT_FALSE(is_complete_symmetric(directed_cycle(3)));
}
