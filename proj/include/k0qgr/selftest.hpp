#pragma once

// Worked examples reproduced end to end; used by `k0qgr selftest`.

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "k0qgr/charpoly.hpp"
#include "k0qgr/factor.hpp"
#include "k0qgr/hilbert.hpp"
#include "k0qgr/k0.hpp"
#include "k0qgr/modulus.hpp"
#include "k0qgr/primitive.hpp"
#include "k0qgr/realize.hpp"

namespace k0qgr {

struct SelftestItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline SelftestItem run_item(const std::string& name, const std::function<std::string()>& body) {
  SelftestItem item{name, false, ""};
  try {
    item.detail = body();
    item.passed = true;
  } catch (const std::exception& e) {
    item.detail = e.what();
  }
  return item;
}

inline void expect(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error("check failed: " + what);
}

}  // namespace detail

inline std::vector<SelftestItem> run_selftest() {
  using detail::expect;
  std::vector<SelftestItem> items;

  items.push_back(detail::run_item("lehmer (5,6,7) factorisation and 1/theta", [] {
    const auto dd = DegreeData::validate({5, 6, 7});
    expect(defining_int_poly(dd) == IntPoly{1, 0, 0, 0, 0, -1, -1, -1, 0, 0, 0, 0, 1}, "f = t^12 - t^7 - t^6 - t^5 + 1");
    const FactorList fl = factor_f(dd);
    expect(fl.factors.size() == 2, "two factors");
    expect(fl.factors[0].poly == IntPoly{1, -1, 1}, "t^2 - t + 1");
    expect(fl.factors[1].poly == IntPoly{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}, "Lehmer's polynomial");
    expect(fl.theta_factor == 1u, "theta belongs to the degree-10 factor");
    const double inv = invert_interval(isolate_theta(dd, Rational(1, 1'000'000'000))).approx();
    expect(std::abs(inv - 1.17628) < 5e-6, "1/theta = 1.17628 to five places");
    return "1/theta = " + std::to_string(inv);
  }));

  for (int g = 3; g <= 6; ++g) {
    items.push_back(detail::run_item("degree-one family g=" + std::to_string(g), [g] {
      std::vector<std::int64_t> ones(static_cast<std::size_t>(g), 1);
      const auto dd = DegreeData::validate(std::span<const std::int64_t>(ones));
      expect(defining_int_poly(dd) == IntPoly{1, -g, 1}, "f = t^2 - g t + 1");
      expect(factor_f(dd).irreducible_single(), "f irreducible");
      const auto iv = isolate_theta(dd, Rational(1, 1'000'000'000'000LL));
      const double exact = (g - std::sqrt(double(g * g - 4))) / 2;
      expect(std::abs(iv.approx() - exact) < 1e-12, "theta = (g - sqrt(g^2-4))/2");
      return "theta = " + std::to_string(iv.approx());
    }));
  }

  items.push_back(detail::run_item("reducible (1,1,2,2) splitting", [] {
    const auto dd = DegreeData::validate({1, 1, 2, 2});
    const FactorList fl = factor_f(dd);
    expect(fl.factors.size() == 2 && fl.factors[0].poly == IntPoly{1, 1} && fl.factors[1].poly == IntPoly{1, -3, 1},
           "f = (1 + t)(1 - 3t + t^2)");
    const K0Class c = reduce(LaurentPoly::from_terms({{0, 1}, {1, 1}}), dd);
    const auto evs = split_evaluations(c);
    expect(evs.size() == 2, "two split components");
    expect(evs[0].kind == SplitEvaluation::Kind::integer_root && evs[0].root == -1 && evs[0].coordinates[0] == 0,
           "(1+t)(-1) = 0");
    expect(evs[1].kind == SplitEvaluation::Kind::theta_factor && evs[1].coordinates == std::vector<Int>{1, 1},
           "1 + t mod (t^2 - 3t + 1) = 1 + t");
    expect(cone_position(c) == Cone::positive, "reduce(1+t) is positive");
    expect(!to_Z_theta(c).available, "no Z[theta] image for reducible f");
    return std::string("(p(-1), p(theta)) = (0, 1 + theta)");
  }));

  items.push_back(detail::run_item("negative-coefficient example end to end", [] {
    const auto dd = DegreeData::validate({1, 1, 1});
    const LaurentPoly p = LaurentPoly::from_terms({{0, -3}, {1, 13}, {2, -4}});
    expect(sign_at_theta(p, dd) == Sign::positive, "p(theta) > 0");
    expect(series_product_coeffs(p, dd, 2) == std::vector<Int>{-3, 4, 11}, "p H_A = -3 + 4t + 11t^2 + ...");
    const ModuleDescription witness({{Block::Kind::free, 0, 0, 1}, {Block::Kind::free, 0, 1, 1}});
    expect(q_of_module(witness, dd) - p == LaurentPoly::from_poly(Int(4) * defining_int_poly(dd)), "q_M - p = 4f");
    expect(verify_realization(p, witness, dd).passed(), "A + A(-1) verifies");
    const ModuleDescription m = realize(p, dd);
    expect(verify_realization(p, m, dd).passed(), "realised module verifies");
    return m.pretty(dd);
  }));

  items.push_back(detail::run_item("(2,3,4) cycle coefficient c5 and char poly", [] {
    const auto dd = DegreeData::validate({2, 3, 4});
    const CycleCoefficient c5 = cycle_coefficient(dd, 5);
    expect(c5.value == 0, "c5 = 0");
    expect(c5.contributions.size() == 1 && c5.contributions[0].first == 0b011, "only X = {x1, x2} has d(X) = 5");
    const auto covers = enumerate_cycle_covers(HatGraph(3, 0b011));
    expect(covers.size() == 2, "two unions E1, E2");
    const SecondGraph gr(dd);
    const LaurentPoly expected = LaurentPoly::from_poly(defining_int_poly(dd)).shifted(dd.ell() - dd.d());
    expect(char_poly_det(gr) == expected, "det(tI - M) = t^3 f");
    expect(char_poly_cycles(gr, dd) == expected, "cycle sum = t^3 f");
    return "p_G = " + expected.pretty();
  }));

  items.push_back(detail::run_item("(1,2,3) graph shape", [] {
    const auto dd = DegreeData::validate({1, 2, 3});
    const QuiverGraph q(dd);
    expect(q.vertices().size() == 4 && q.arrows().size() == 6, "4 vertices, 6 arrows");
    const SecondGraph gr(q);
    const auto a10 = gr.index_of({1, 0});
    const auto a30 = gr.index_of({3, 0});
    expect(!gr.has_edge(a10, a30), "no arrow a10 -> a30");
    expect(gr.removed_pair() == std::make_pair(a10, a30), "removed pair is (a10, a30)");
    const auto rep = certify_primitive(gr);
    expect(rep.period == 1 && *rep.primitivity_witness <= 26, "period 1, witness <= 26");
    return std::to_string(gr.edge_count()) + " edges";
  }));

  items.push_back(detail::run_item("Perron root equals 1/theta", [] {
    std::string out;
    for (auto dd : {DegreeData::validate({1, 1, 1}), DegreeData::validate({2, 3, 4}), DegreeData::validate({5, 6, 7})}) {
      const SecondGraph gr(dd);
      const auto rep = certify_primitive(gr);
      const double inv = invert_interval(isolate_theta(dd, Rational(Int(1), Int(1) << 50))).approx();
      expect(std::abs(rep.perron_root - inv) < 1e-9, "Perron root of " + dd.to_string());
      out += dd.to_string() + " ";
    }
    return out;
  }));

  items.push_back(detail::run_item("unique root of maximal modulus", [] {
    for (auto dd : {DegreeData::validate({1, 1, 1}), DegreeData::validate({2, 3, 4}), DegreeData::validate({5, 6, 7})})
      certify_max_modulus(dd, default_modulus_tolerance(dd));
    return std::string("ok");
  }));

  return items;
}

}  // namespace k0qgr
