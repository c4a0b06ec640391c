#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"

using namespace k0qgr;

namespace {

LaurentPoly expected_charpoly(const DegreeData& dd) {
  return defining_poly(dd).shifted(dd.ell() - dd.d());
}

}  // namespace

TEST(Graphs, QuiverShape) {
  for (const auto& dd : enumerate_degree_data(12)) {
    const QuiverGraph q(dd);
    EXPECT_EQ(q.arrows().size(), static_cast<std::size_t>(dd.ell()));
    EXPECT_EQ(q.vertices().size(), static_cast<std::size_t>(dd.ell() - dd.g() + 1));
    // each generator's arrows form a cycle through the hub
    for (int i = 1; i <= dd.g(); ++i) {
      std::size_t at = q.index_of({0, 0});
      for (const auto& a : q.arrows()) {
        if (a.label.i != i) continue;
        EXPECT_EQ(a.tail, at);
        at = a.head;
      }
      EXPECT_EQ(at, q.index_of({0, 0}));
    }
  }
}

TEST(Graphs, SecondGraphExamples) {
  const SecondGraph g123(DegreeData::validate({1, 2, 3}));
  EXPECT_EQ(g123.size(), 6u);
  EXPECT_FALSE(g123.has_edge(g123.index_of({1, 0}), g123.index_of({3, 0})));
  EXPECT_TRUE(g123.has_edge(g123.index_of({1, 0}), g123.index_of({2, 0})));
  EXPECT_TRUE(g123.has_edge(g123.index_of({2, 1}), g123.index_of({3, 0})));

  const SecondGraph g111(DegreeData::validate({1, 1, 1}));
  EXPECT_EQ(g111.size(), 3u);
  EXPECT_EQ(g111.edge_count(), 8u);

  const SecondGraph g234(DegreeData::validate({2, 3, 4}));
  EXPECT_EQ(g234.size(), 9u);
  EXPECT_EQ(g234.removed_pair(), std::make_pair(g234.index_of({1, 1}), g234.index_of({3, 0})));
}

TEST(Graphs, EdgeCountIsCompositionsMinusOne) {
  for (const auto& dd : enumerate_degree_data(12)) {
    const QuiverGraph q(dd);
    const SecondGraph gr(q);
    std::size_t compositions = 0;
    for (const auto& u : q.arrows())
      for (const auto& v : q.arrows()) compositions += u.head == v.tail;
    EXPECT_EQ(gr.edge_count(), compositions - 1) << dd.to_string();
    // adjacency entry (u, v) counts arrows v -> u
    const auto m = gr.adjacency();
    for (std::size_t u = 0; u < gr.size(); ++u)
      for (std::size_t v = 0; v < gr.size(); ++v) EXPECT_EQ(m(u, v), gr.has_edge(v, u) ? 1 : 0);
  }
}

TEST(Graphs, DotOutput) {
  const auto dd = DegreeData::validate({1, 2, 3});
  const std::string q = QuiverGraph(dd).to_dot();
  const std::string g = SecondGraph(dd).to_dot();
  EXPECT_NE(q.find("star"), std::string::npos);
  EXPECT_NE(q.find("x_2_1"), std::string::npos);
  EXPECT_NE(g.find("a_3_2"), std::string::npos);
  EXPECT_EQ(g.find("\"a_1_0\" -> \"a_3_0\""), std::string::npos);
  EXPECT_EQ(g, SecondGraph(dd).to_dot());
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly_det(SecondGraph(DegreeData::validate({2, 3, 4}))),
            LaurentPoly::from_terms({{9, 1}, {7, -1}, {6, -1}, {5, -1}, {3, 1}}));
  EXPECT_EQ(char_poly_det(SecondGraph(DegreeData::validate({1, 1, 1}))),
            LaurentPoly::from_terms({{3, 1}, {2, -3}, {1, 1}}));
  const auto dd = DegreeData::validate({5, 6, 7});
  EXPECT_EQ(char_poly_det(SecondGraph(dd)), defining_poly(dd).shifted(6));
  EXPECT_EQ(char_poly_cycles(SecondGraph(dd), dd), defining_poly(dd).shifted(6));
}

TEST(CharPoly, C5ForTwoThreeFour) {
  const auto c5 = cycle_coefficient(DegreeData::validate({2, 3, 4}), 5);
  EXPECT_EQ(c5.value, 0);
  ASSERT_EQ(c5.contributions.size(), 1u);
  EXPECT_EQ(c5.contributions[0].first, 0b011u);
  const auto covers = enumerate_cycle_covers(HatGraph(3, 0b011));
  ASSERT_EQ(covers.size(), 2u);
  std::vector<std::size_t> components;
  for (const auto& c : covers) components.push_back(c.size());
  std::sort(components.begin(), components.end());
  EXPECT_EQ(components, (std::vector<std::size_t>{1, 2}));  // one 2-cycle, two loops
}

TEST(CharPoly, DeterminantMatchesFaddeevLeverrier) {
  for (const auto& dd : enumerate_degree_data(10)) {
    const SecondGraph gr(dd);
    EXPECT_EQ(char_poly_det(gr), LaurentPoly::from_poly(oracle::faddeev_leverrier(gr.adjacency()))) << dd.to_string();
  }
}

TEST(CharPoly, ExhaustiveThreeRoutesAgree) {
  for (const auto& dd : enumerate_degree_data(10)) {
    const SecondGraph gr(dd);
    const LaurentPoly expected = expected_charpoly(dd);
    EXPECT_EQ(char_poly_det(gr), expected) << dd.to_string();
    EXPECT_EQ(char_poly_cycles(gr, dd), expected) << dd.to_string();
    EXPECT_EQ(char_poly_cycles_direct(gr), expected) << dd.to_string();
  }
}

TEST(CharPoly, ConstantTermMatchesDeterminantValue) {
  for (const auto& dd : enumerate_degree_data(12)) {
    const SecondGraph gr(dd);
    const Int det = determinant(gr.adjacency());
    const Int p0 = (gr.size() % 2 == 0) ? det : Int(-det);
    EXPECT_EQ(char_poly_cycles(gr, dd).coeff(0), p0) << dd.to_string();
  }
}

TEST(CycleSums, HamiltonianDpMatchesExplicitCovers) {
  for (int g = 1; g <= 6; ++g) {
    const auto sums = cycle_cover_sums(g);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g); ++mask) {
      std::int64_t s = 0;
      for (const auto& cover : enumerate_cycle_covers(HatGraph(g, mask))) s += (cover.size() % 2 ? -1 : 1);
      EXPECT_EQ(sums[mask], s) << "g=" << g << " mask=" << mask;
    }
  }
}

TEST(HatConstantTerm, ThreeCaseFormula) {
  EXPECT_EQ(hat_constant_term(0b101, DegreeData::validate({1, 2, 3})), 1);
  EXPECT_EQ(hat_constant_term(0b010, DegreeData::validate({1, 2, 3})), -1);
  EXPECT_EQ(hat_constant_term(0b0111, DegreeData::validate({1, 1, 2, 2})), 0);
  for (int g = 3; g <= 6; ++g) {
    std::vector<std::int64_t> ones(static_cast<std::size_t>(g), 1);
    const auto dd = DegreeData::validate(std::span<const std::int64_t>(ones));
    const std::uint64_t ends = 1u | (std::uint64_t{1} << (g - 1));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g); ++mask) {
      const int expected = mask == ends ? 1 : (std::popcount(mask) == 1 ? -1 : 0);
      EXPECT_EQ(hat_constant_term(mask, dd), expected) << "g=" << g << " mask=" << mask;
    }
  }
  EXPECT_THROW(hat_constant_term(0, DegreeData::validate({1, 1, 1})), std::invalid_argument);
}

TEST(Cycles, SimpleCyclesDecomposeIntoGeneratorPaths) {
  for (const auto& dd : enumerate_degree_data(10)) {
    const SecondGraph gr(dd);
    const auto& labels = gr.labels();
    for (auto cycle : simple_cycles(gr)) {
      // rotate to start at an arrow leaving the hub
      const auto start = std::find_if(cycle.begin(), cycle.end(), [&](int v) { return labels[v].j == 0; });
      ASSERT_NE(start, cycle.end());
      std::rotate(cycle.begin(), start, cycle.end());
      std::vector<int> gens;
      std::size_t k = 0;
      while (k < cycle.size()) {
        const int i = labels[cycle[k]].i;
        const int di = dd.degrees()[static_cast<std::size_t>(i - 1)];
        for (int j = 0; j < di; ++j, ++k) {
          ASSERT_LT(k, cycle.size()) << dd.to_string();
          EXPECT_EQ(labels[cycle[k]], (ArrowLabel{i, j})) << dd.to_string();
        }
        gens.push_back(i);
      }
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const int from = gens[s], to = gens[(s + 1) % gens.size()];
        EXPECT_FALSE(from == 1 && to == dd.g()) << dd.to_string();
      }
    }
  }
}

TEST(Cycles, BijectionWithHatGraph) {
  for (const auto& dd : enumerate_degree_data(10)) {
    const SecondGraph gr(dd);
    const HatGraph full(dd.g(), (std::uint64_t{1} << dd.g()) - 1);
    const auto hat_cycles =
        oracle::simple_cycles(dd.g(), [&](int a, int b) { return full.arrow(a, b); });
    EXPECT_EQ(hat_cycles.size(), simple_cycles(gr).size()) << dd.to_string();

    std::map<std::pair<int, int>, std::int64_t> g_tally;
    char_poly_cycles_direct(gr, &g_tally);
    std::map<std::pair<int, int>, std::int64_t> hat_tally{{{0, 0}, 1}};  // the empty union
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << dd.g()); ++mask) {
      int dx = 0;
      for (int k = 0; k < dd.g(); ++k)
        if (mask >> k & 1) dx += dd.degrees()[static_cast<std::size_t>(k)];
      for (const auto& cover : enumerate_cycle_covers(HatGraph(dd.g(), mask)))
        ++hat_tally[{dx, static_cast<int>(cover.size())}];
    }
    EXPECT_EQ(g_tally, hat_tally) << dd.to_string();
  }
}

TEST(Primitive, Examples) {
  const auto r123 = certify_primitive(SecondGraph(DegreeData::validate({1, 2, 3})));
  EXPECT_TRUE(r123.strongly_connected);
  EXPECT_EQ(r123.period, 1);
  ASSERT_TRUE(r123.primitivity_witness.has_value());
  EXPECT_LE(*r123.primitivity_witness, 26);

  const auto r111 = certify_primitive(SecondGraph(DegreeData::validate({1, 1, 1})));
  EXPECT_EQ(r111.period, 1);
  EXPECT_EQ(r111.primitivity_witness, std::optional<int>(2));
  EXPECT_NEAR(r111.perron_root, (3 + std::sqrt(5.0)) / 2, 1e-10);

  const auto r567 = certify_primitive(SecondGraph(DegreeData::validate({5, 6, 7})));
  EXPECT_NEAR(r567.perron_root, 1.17628, 5e-6);
}

TEST(Primitive, WitnessByIntegerPowers) {
  // the boolean-pattern witness agrees with exact integer powers of M
  for (const auto& dd : enumerate_degree_data(8)) {
    const SecondGraph gr(dd);
    const auto w = primitivity_witness(gr);
    ASSERT_TRUE(w.has_value());
    const auto m = gr.adjacency();
    auto power = m;
    int n = 1;
    auto all_positive = [](const Matrix<Int>& a) {
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
          if (a(i, j).sign() <= 0) return false;
      return true;
    };
    while (!all_positive(power)) {
      power = power * m;
      ++n;
    }
    EXPECT_EQ(*w, n) << dd.to_string();
    EXPECT_LE(n, (dd.ell() - 1) * (dd.ell() - 1) + 1);
  }
}

TEST(Primitive, PeriodMethodsAgree) {
  for (const auto& dd : enumerate_degree_data(12)) {
    const SecondGraph gr(dd);
    EXPECT_TRUE(strongly_connected(gr));
    EXPECT_EQ(period_through(gr, gr.index_of({1, 0})), 1);
    EXPECT_EQ(period_by_levels(gr), 1);
  }
}

TEST(Primitive, PerronRootMatchesInverseTheta) {
  for (const auto& dd : enumerate_degree_data(12)) {
    const auto est = perron_root(SecondGraph(dd), 1e-12);
    const double inv = invert_interval(isolate_theta(dd, Rational(Int(1), Int(1) << 50))).approx();
    EXPECT_NEAR(est.value, inv, 1e-9) << dd.to_string();
    EXPECT_LE(est.lower, inv + 1e-12);
    EXPECT_GE(est.upper, inv - 1e-12);
  }
}

TEST(Oracle, FaddeevLeverrierOnThreeCycle) {
  Matrix<Int> m(3, 3);
  m(1, 0) = m(2, 1) = m(0, 2) = 1;
  EXPECT_EQ(oracle::faddeev_leverrier(m), (IntPoly{-1, 0, 0, 1}));
}
