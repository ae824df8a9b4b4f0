#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "kmon/diagram.hpp"
#include "test_support.hpp"

namespace kmon {
namespace {

using test::G;

Matching pairs_to_matching(std::size_t n, std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> pairs) {
  Matching m(2 * n);
  for (auto [a, b] : pairs) {
    m[a] = b;
    m[b] = a;
  }
  return m;
}

// Independent planarity test: two chords cross iff their endpoints interleave
// in the circular order.
bool crossing_free_oracle(const Matching& m, std::size_t n) {
  auto pos = [n](std::size_t p) { return p < n ? p : 3 * n - 1 - p; };
  for (std::size_t p = 0; p < 2 * n; ++p)
    for (std::size_t q = 0; q < 2 * n; ++q) {
      std::size_t a = pos(p), b = pos(m[p]), c = pos(q), d = pos(m[q]);
      if (a > b) std::swap(a, b);
      if (c > d) std::swap(c, d);
      if (a < c && c < b && b < d) return false;
    }
  return true;
}

void all_matchings(std::vector<std::uint32_t>& m, std::vector<Matching>& out) {
  const auto it = std::find(m.begin(), m.end(), ~std::uint32_t{0});
  if (it == m.end()) {
    out.push_back(m);
    return;
  }
  const auto p = static_cast<std::uint32_t>(it - m.begin());
  for (std::uint32_t q = p + 1; q < m.size(); ++q) {
    if (m[q] != ~std::uint32_t{0}) continue;
    m[p] = q;
    m[q] = p;
    all_matchings(m, out);
    m[p] = m[q] = ~std::uint32_t{0};
  }
}

// Shapes reachable from the identity by multiplying with generators.
std::set<Matching> reachable_shapes(std::size_t n) {
  std::set<Matching> seen{TLDiagram::identity(n).matching()};
  std::vector<TLDiagram> frontier{TLDiagram::identity(n)};
  while (!frontier.empty()) {
    std::vector<TLDiagram> next;
    for (const auto& d : frontier)
      for (std::size_t i = 1; i < n; ++i) {
        const TLDiagram e = multiply(d, generator(n, Generator::h(i))).shape();
        if (seen.insert(e.matching()).second) next.push_back(e);
      }
    frontier = std::move(next);
  }
  return seen;
}

TEST(Generator, Definitions) {
  const TLDiagram c = generator(3, Generator::c());
  EXPECT_EQ(c, TLDiagram::identity(3, 1));
  EXPECT_EQ(generator(3, Generator::h(1)).matching(), pairs_to_matching(3, {{0, 1}, {3, 4}, {2, 5}}));
  EXPECT_EQ(generator(3, Generator::h(1)).loops(), 0u);
  EXPECT_EQ(generator(5, Generator::h(4)).matching(),
            pairs_to_matching(5, {{3, 4}, {8, 9}, {0, 5}, {1, 6}, {2, 7}}));
}

TEST(Generator, Errors) {
  EXPECT_THROW(generator(3, Generator::h(3)), std::invalid_argument);
  EXPECT_THROW(generator(1, Generator::c()), std::invalid_argument);
  EXPECT_THROW(TLDiagram::identity(1), std::invalid_argument);
  EXPECT_THROW(eval_word(3, G("h1 h4")), std::invalid_argument);
}

TEST(Multiply, ExamplesFromRelations) {
  const auto h1 = generator(3, Generator::h(1));
  EXPECT_EQ(multiply(h1, h1), h1.times_c(1));
  EXPECT_EQ(eval_word(3, G("h1 h2 h1")), h1);
  EXPECT_EQ(eval_word(5, G("h1 h2 h3 h1 h2 h3")), eval_word(5, G("h1 h3")));
  EXPECT_EQ(eval_word(5, G("h1 h2 h3 h1 h2 h3")).loops(), 0u);
}

TEST(Multiply, MismatchedStrands) {
  EXPECT_THROW(multiply(TLDiagram::identity(3), TLDiagram::identity(4)), std::invalid_argument);
}

TEST(Multiply, OverflowIsDetected) {
  const auto big = TLDiagram::identity(3, std::numeric_limits<std::uint64_t>::max());
  EXPECT_THROW(multiply(big, generator(3, Generator::c())), std::overflow_error);
}

TEST(EvalWord, Examples) {
  EXPECT_EQ(eval_word(3, {}), TLDiagram::identity(3));
  EXPECT_EQ(eval_word(3, G("c c")), TLDiagram::identity(3, 2));

  const TLDiagram lhs = eval_word(5, G("h1 h2 h3 h1 h2 h3 h4 h1 h2 h3"));  // x x y x
  const TLDiagram rhs = eval_word(5, G("h1 h2 h3 h4 h1 h2 h3 h1 h2 h3"));  // x y x x
  EXPECT_EQ(lhs, eval_word(5, G("c h1 h3 h2 h4 h3")));
  EXPECT_EQ(lhs.loops(), 1u);
  EXPECT_EQ(rhs, eval_word(5, G("h1 h3")));
  EXPECT_NE(lhs, rhs);
}

TEST(Relations, HoldForAllSmallN) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const TLDiagram c = generator(n, Generator::c());
    for (std::size_t i = 1; i < n; ++i) {
      const TLDiagram hi = generator(n, Generator::h(i));
      EXPECT_EQ(multiply(hi, hi), multiply(c, hi));
      EXPECT_EQ(multiply(c, hi), multiply(hi, c));
      for (std::size_t j = 1; j < n; ++j) {
        const TLDiagram hj = generator(n, Generator::h(j));
        const std::size_t dist = i > j ? i - j : j - i;
        if (dist >= 2) EXPECT_EQ(multiply(hi, hj), multiply(hj, hi)) << n << " " << i << " " << j;
        if (dist == 1) EXPECT_EQ(multiply(multiply(hi, hj), hi), hi) << n << " " << i << " " << j;
      }
    }
  }
}

TLDiagram random_diagram(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> sym(0, n - 1), len(0, 12);
  GeneratorWord w(len(rng));
  for (auto& g : w) g = Generator{sym(rng)};
  return eval_word(n, w);
}

TEST(Multiply, AssociativeAndLoopMonotone) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 2; n <= 7; ++n)
    for (int t = 0; t < 200; ++t) {
      const TLDiagram a = random_diagram(n, rng), b = random_diagram(n, rng), c = random_diagram(n, rng);
      ASSERT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
      ASSERT_GE(multiply(a, b).loops(), a.loops() + b.loops());
      ASSERT_TRUE(is_noncrossing(multiply(a, b).matching(), n));
    }
}

TEST(IsNoncrossing, Examples) {
  EXPECT_TRUE(is_noncrossing(TLDiagram::identity(4).matching(), 4));
  EXPECT_FALSE(is_noncrossing(pairs_to_matching(2, {{0, 3}, {1, 2}}), 2));  // T1-B2, T2-B1
  EXPECT_THROW(is_noncrossing(Matching{1, 0, 2, 3}, 2), std::invalid_argument);
  EXPECT_THROW(is_noncrossing(Matching{1, 2, 0, 3}, 2), std::invalid_argument);
  EXPECT_THROW(TLDiagram(2, pairs_to_matching(2, {{0, 3}, {1, 2}}), 0), std::invalid_argument);
}

TEST(IsNoncrossing, AgreesWithInterleavingOracle) {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<std::uint32_t> m(2 * n, ~std::uint32_t{0});
    std::vector<Matching> all;
    all_matchings(m, all);
    std::size_t planar = 0;
    for (const auto& mm : all) {
      const bool ok = is_noncrossing(mm, n);
      ASSERT_EQ(ok, crossing_free_oracle(mm, n));
      planar += ok;
    }
    // Planar perfect matchings on 2n points are counted by Catalan(n), and
    // all of them are products of generators.
    EXPECT_EQ(planar, reachable_shapes(n).size());
  }
}

TEST(NormalForm, EnumerationCounts) {
  const std::vector<JonesNF> k3 = enumerate_jnf_shapes(3);
  const std::vector<JonesNF> expected = {
      {0, {}}, {0, {{1, 1}}}, {0, {{1, 1}, {2, 2}}}, {0, {{2, 1}}}, {0, {{2, 2}}}};
  EXPECT_EQ(k3, expected);
  EXPECT_EQ(enumerate_jnf_shapes(2), (std::vector<JonesNF>{{0, {}}, {0, {{1, 1}}}}));
  EXPECT_EQ(enumerate_jnf_shapes(4).size(), 14u);
  EXPECT_THROW(enumerate_jnf_shapes(11), std::invalid_argument);
  EXPECT_THROW(enumerate_jnf_shapes(1), std::invalid_argument);
  EXPECT_NO_THROW(enumerate_jnf_shapes(11, 11));
}

TEST(NormalForm, ShapesMatchReachableDiagrams) {
  for (std::size_t n : {3u, 4u, 5u}) {
    std::set<Matching> from_shapes;
    for (const auto& nf : enumerate_jnf_shapes(n)) {
      const TLDiagram d = eval_word(n, to_generator_word(nf));
      EXPECT_EQ(d.loops(), 0u);
      from_shapes.insert(d.matching());
    }
    EXPECT_EQ(from_shapes, reachable_shapes(n)) << n;
  }
  EXPECT_EQ(reachable_shapes(3).size(), 5u);
  EXPECT_EQ(reachable_shapes(4).size(), 14u);
  EXPECT_EQ(reachable_shapes(5).size(), 42u);
}

TEST(NormalForm, Examples) {
  EXPECT_EQ(jones_nf(TLDiagram::identity(4, 2)), (JonesNF{2, {}}));
  const JonesNF lhs = jones_nf(eval_word(5, G("h1 h2 h3 h1 h2 h3 h4 h1 h2 h3")));
  const JonesNF rhs = jones_nf(eval_word(5, G("h1 h2 h3 h4 h1 h2 h3 h1 h2 h3")));
  EXPECT_EQ(lhs, (JonesNF{1, {{1, 1}, {3, 2}, {4, 3}}}));
  EXPECT_EQ(rhs, (JonesNF{0, {{1, 1}, {3, 3}}}));
  EXPECT_EQ(render(lhs), "c h[1] h[3,2] h[4,3]");
  EXPECT_EQ(render(rhs), "h[1] h[3]");
  EXPECT_EQ(render(JonesNF{2, {}}), "c^2");
  EXPECT_EQ(render(JonesNF{0, {}}), "1");
}

TEST(NormalForm, RoundTripsThroughEvaluation) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 2; n <= 8; ++n)
    for (int t = 0; t < 100; ++t) {
      const TLDiagram d = random_diagram(n, rng);
      const JonesNF nf = jones_nf(d);
      ASSERT_EQ(eval_word(n, to_generator_word(nf)), d);
      for (std::size_t i = 1; i < nf.runs.size(); ++i) {
        ASSERT_LT(nf.runs[i - 1].top, nf.runs[i].top);
        ASSERT_LT(nf.runs[i - 1].bottom, nf.runs[i].bottom);
      }
    }
  EXPECT_THROW(jones_nf(TLDiagram::identity(11)), std::invalid_argument);
}

TEST(ClassifyK3, Examples) {
  EXPECT_EQ(classify_k3(TLDiagram::identity(3)), (K3Class{K3Family::C, 0}));
  EXPECT_EQ(classify_k3(eval_word(3, G("h1 h2"))), (K3Class{K3Family::H12, 0}));
  EXPECT_EQ(classify_k3(eval_word(3, G("h2 h2 h1"))), (K3Class{K3Family::H21, 1}));
  EXPECT_EQ(classify_k3(eval_word(3, G("c h1 c"))), (K3Class{K3Family::H11, 2}));
  EXPECT_EQ(classify_k3(eval_word(3, G("h2"))), (K3Class{K3Family::H22, 0}));
  EXPECT_THROW(classify_k3(TLDiagram::identity(4)), std::invalid_argument);
}

// Independent route: H embeds in triples (row, k, column) with
// (a,k,b)(c,l,d) = (a, k+l+[b==c], d), h1 -> (1,0,1), h2 -> (2,0,2), and
// each c adds one to k.
K3Class classify_by_triples(const GeneratorWord& w) {
  std::uint64_t cs = 0;
  bool any = false;
  int row = 0, column = 0;
  std::uint64_t k = 0;
  for (const auto g : w) {
    if (g.is_c()) {
      ++cs;
      continue;
    }
    const int idx = static_cast<int>(g.index);
    if (!any) {
      row = idx;
      any = true;
    } else {
      k += column == idx ? 1 : 0;
    }
    column = idx;
  }
  if (!any) return {K3Family::C, cs};
  const K3Family f = row == 1 ? (column == 1 ? K3Family::H11 : K3Family::H12)
                              : (column == 1 ? K3Family::H21 : K3Family::H22);
  return {f, k + cs};
}

TEST(ClassifyK3, AgreesWithTripleSemanticsOnAllShortWords) {
  std::size_t count = 0;
  GeneratorWord w;
  std::function<void()> rec = [&] {
    ++count;
    ASSERT_EQ(classify_k3(eval_word(3, w)), classify_by_triples(w)) << render_generator_word(w);
    if (w.size() == 10) return;
    for (std::size_t s = 0; s < 3; ++s) {
      w.push_back(Generator{s});
      rec();
      w.pop_back();
    }
  };
  rec();
  EXPECT_EQ(count, 88573u);
}

TEST(GeneratorWordText, ParseAndRender) {
  EXPECT_EQ(G("h1.h2.h3"), G("h1 h2  h3"));
  EXPECT_EQ(G("c h12"), (GeneratorWord{Generator::c(), Generator::h(12)}));
  EXPECT_TRUE(G("").empty());
  EXPECT_EQ(render_generator_word(G("c h1 h12")), "c.h1.h12");
  EXPECT_EQ(render_generator_word({}), "1");
  EXPECT_EQ(G("1"), GeneratorWord{});
  EXPECT_EQ(G("h2.1.c"), G("h2 c"));
  for (const char* bad : {"h0", "x", "h", "h1x", "H1", "h-1"}) EXPECT_THROW(G(bad), std::invalid_argument) << bad;
}

TEST(DiagramText, Render) {
  EXPECT_EQ(render(generator(3, Generator::h(1))), "n=3 loops=0 T1-T2 T3-B3 B1-B2");
  EXPECT_EQ(render(TLDiagram::identity(2, 4)), "n=2 loops=4 T1-B1 T2-B2");
}

}  // namespace
}  // namespace kmon
