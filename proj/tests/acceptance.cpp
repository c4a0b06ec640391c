// Acceptance suite: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "k0qgr/k0qgr.hpp"

using namespace k0qgr;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

const Rational kPico(Int(1), Int(1'000'000'000'000LL));

std::vector<DegreeData> realization_set() {
  return {DegreeData::validate({1, 1, 1}), DegreeData::validate({1, 2, 3}), DegreeData::validate({1, 1, 2, 2}),
          DegreeData::validate({2, 3, 4})};
}

LaurentPoly random_laurent(std::mt19937_64& rng, int lo, int hi, int c) {
  std::uniform_int_distribution<int> coeff(-c, c);
  LaurentPoly p;
  for (int e = lo; e <= hi; ++e) p.add_term(e, Int(coeff(rng)));
  return p;
}

std::string lehmer(Check& c) {
  const auto dd = DegreeData::validate({5, 6, 7});
  c.require(defining_int_poly(dd) == IntPoly{1, 0, 0, 0, 0, -1, -1, -1, 0, 0, 0, 0, 1}, "f mismatch");
  const FactorList fl = factor_f(dd);
  c.require(fl.factors.size() == 2 && fl.factors[0].poly == IntPoly{1, -1, 1} && fl.factors[0].multiplicity == 1 &&
                fl.factors[1].poly == IntPoly{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1} && fl.factors[1].multiplicity == 1,
            "factorisation mismatch");
  c.require(fl.product() == defining_int_poly(dd), "product differs from f");
  const auto inv = invert_interval(isolate_theta(dd, kPico));
  const double v = inv.approx();
  c.require(std::round(v * 1e5) / 1e5 == 1.17628, "1/theta does not round to 1.17628");
  return "1/theta = " + std::to_string(v);
}

std::string charpoly(Check& c) {
  const auto all = enumerate_degree_data(12);
  for (const auto& dd : all) {
    const SecondGraph gr(dd);
    const LaurentPoly expected = defining_poly(dd).shifted(dd.ell() - dd.d());
    c.require(char_poly_det(gr) == expected, "det route fails for " + dd.to_string());
    c.require(char_poly_cycles(gr, dd) == expected, "cycle route fails for " + dd.to_string());
  }
  const auto c5 = cycle_coefficient(DegreeData::validate({2, 3, 4}), 5);
  c.require(c5.value == 0, "c5 != 0 for (2,3,4)");
  return std::to_string(all.size()) + " degree data with ell <= 12; c5(2,3,4) = " + c5.value.str();
}

std::string perron(Check& c) {
  const auto all = enumerate_degree_data(12);
  double worst = 0;
  for (const auto& dd : all) {
    const SecondGraph gr(dd);
    const int ell = dd.ell();
    c.require(strongly_connected(gr), "not strongly connected: " + dd.to_string());
    c.require(period_through(gr, gr.index_of({1, 0})) == 1, "period != 1: " + dd.to_string());
    const auto w = primitivity_witness(gr);
    c.require(w && *w <= (ell - 1) * (ell - 1) + 1, "no primitivity witness: " + dd.to_string());
    const double rho = perron_root(gr, 1e-12).value;
    const double inv = invert_interval(isolate_theta(dd, Rational(Int(1), Int(1) << 50))).approx();
    worst = std::max(worst, std::abs(rho - inv));
    c.require(std::abs(rho - inv) < 1e-9, "Perron root differs from 1/theta: " + dd.to_string());
  }
  std::ostringstream s;
  s << all.size() << " instances; max |rho - 1/theta| = " << worst;
  return s.str();
}

std::string example_ex(Check& c) {
  const auto dd = DegreeData::validate({1, 1, 1});
  const auto p = LaurentPoly::from_terms({{0, -3}, {1, 13}, {2, -4}});
  c.require(sign_at_theta(p, dd) == Sign::positive, "p(theta) not positive");
  c.require(series_product_coeffs(p, dd, 2) == std::vector<Int>{-3, 4, 11}, "series does not begin -3, 4, 11");
  const ModuleDescription witness({{Block::Kind::free, 0, 0, 1}, {Block::Kind::free, 0, 1, 1}});
  c.require(q_of_module(witness, dd) - p == LaurentPoly::from_poly(Int(4) * defining_int_poly(dd)), "q_M - p != 4f");
  c.require(verify_realization(p, witness, dd).passed(), "witness fails verification");
  const ModuleDescription m = realize(p, dd);
  c.require(verify_realization(p, m, dd).passed(), "realised module fails verification");
  return "realize(p) = " + m.pretty(dd);
}

std::string round_trip(Check& c) {
  std::mt19937_64 rng(0x5eed01);
  int done = 0;
  for (const auto& dd : realization_set()) {
    int here = 0;
    while (here < 60) {
      const LaurentPoly p = random_laurent(rng, -3, 3, 10);
      if (sign_at_theta(p, dd) != Sign::positive) continue;
      try {
        const ModuleDescription m = realize(p, dd);
        const auto rep = verify_realization(p, m, dd);
        c.require(rep.congruent && rep.hilbert_nonnegative && rep.terms == 200 && rep.sign_nonnegative,
                  "verification failed for " + p.to_string() + " over " + dd.to_string());
      } catch (const std::exception& e) {
        c.require(false, std::string("realize threw ") + e.what() + " for " + p.to_string());
      }
      ++here;
    }
    done += here;
  }
  return std::to_string(done) + " positive classes realised and verified";
}

std::string positivity(Check& c) {
  std::mt19937_64 rng(0x5eed02);
  std::uniform_int_distribution<int> count(1, 4), kind(0, 2), shift(0, 6), mult(0, 5);
  int done = 0, zeros = 0;
  for (const auto& dd : realization_set()) {
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Block> blocks;
      const int n = count(rng);
      for (int k = 0; k < n; ++k) {
        const int which = kind(rng);
        if (which == 0) blocks.push_back({Block::Kind::free, 0, shift(rng), mult(rng)});
        else blocks.push_back({Block::Kind::cyclic, which == 1 ? 1 : dd.g(), shift(rng), mult(rng)});
      }
      const LaurentPoly q = q_of_module(ModuleDescription(std::move(blocks)), dd);
      const Sign s = sign_at_theta(q, dd);
      c.require(s != Sign::negative, "negative q_M(theta) for " + q.to_string());
      // exact divisibility by f, independent of the reduction routine
      const auto [poly, sh] = q.to_poly();
      (void)sh;
      const bool divisible = q.is_zero() || divide_exact(poly, defining_int_poly(dd)).has_value();
      c.require((s == Sign::zero) == divisible, "zero sign does not match f | q_M for " + q.to_string());
      zeros += s == Sign::zero;
      ++done;
    }
  }
  return std::to_string(done) + " module descriptions, " + std::to_string(zeros) + " torsion";
}

std::string degree_one_and_splitting(Check& c) {
  for (int g = 3; g <= 6; ++g) {
    std::vector<std::int64_t> ones(static_cast<std::size_t>(g), 1);
    const auto dd = DegreeData::validate(std::span<const std::int64_t>(ones));
    c.require(defining_int_poly(dd) == IntPoly{1, -g, 1}, "f mismatch for g=" + std::to_string(g));
    c.require(factor_f(dd).irreducible_single(), "f reducible for g=" + std::to_string(g));
    const auto iv = isolate_theta(dd, kPico);
    const double exact = (g - std::sqrt(double(g * g - 4))) / 2;
    c.require(iv.low.convert_to<double>() <= exact + 1e-12 && iv.high.convert_to<double>() >= exact - 1e-12 &&
                  std::abs(iv.approx() - exact) < 1e-12,
              "theta mismatch for g=" + std::to_string(g));
  }
  const auto dd = DegreeData::validate({1, 1, 2, 2});
  const K0Class c1 = reduce(LaurentPoly::from_terms({{0, 1}, {1, 1}}), dd);
  const auto evs = split_evaluations(c1);
  c.require(evs.size() == 2, "expected two split components");
  if (evs.size() == 2) {
    c.require(evs[0].factor == IntPoly{1, 1} && evs[0].root == -1 && evs[0].coordinates == std::vector<Int>{0},
              "evaluation at -1 is not 0");
    c.require(evs[1].factor == IntPoly{1, -3, 1} && evs[1].coordinates == std::vector<Int>{1, 1},
              "residue mod t^2 - 3t + 1 is not 1 + t");
  }
  c.require(cone_position(c1) == Cone::positive, "reduce(1+t) not positive");
  return "g = 3..6 irreducible; (1,1,2,2) splitting (p(-1), p mod t^2-3t+1) = (0, 1 + t)";
}

std::string max_modulus(Check& c) {
  std::vector<DegreeData> pool;
  for (const auto& dd : enumerate_degree_data(22))
    if (dd.d() <= 16) pool.push_back(dd);
  std::mt19937_64 rng(0x5eed03);
  std::shuffle(pool.begin(), pool.end(), rng);
  if (pool.size() > 19) pool.erase(pool.begin() + 19, pool.end());
  pool.push_back(DegreeData::validate({5, 6, 7}));
  int count = 0;
  for (const auto& dd : pool) {
    const auto rep = max_modulus_report(dd, 1e-9);
    c.require(rep.passed(), "separation fails for " + dd.to_string() + ": " + rep.failure);
    // explicit recheck of the report's root list
    const auto& roots = rep.roots;
    c.require(!roots.empty() && std::abs(roots.back().im) < 1e-9 &&
                  std::abs(roots.back().modulus - rep.theta_inv) < 1e-9,
              "largest root is not 1/theta for " + dd.to_string());
    for (std::size_t k = 0; k + 1 < roots.size(); ++k)
      c.require(roots[k].modulus < rep.theta_inv - 1e-9, "second maximal modulus for " + dd.to_string());
    c.require(std::abs(roots.front().modulus - rep.theta) < 1e-9, "smallest root is not theta for " + dd.to_string());
    for (std::size_t k = 1; k < roots.size(); ++k)
      c.require(roots[k].modulus > rep.theta + 1e-9, "second minimal modulus for " + dd.to_string());
    ++count;
  }
  return std::to_string(count) + " degree data with d <= 16 certified";
}

std::string ratios(Check& c) {
  double worst = 0;
  for (const auto& dd : realization_set()) {
    const auto a = hilbert_coeffs(dd, 203);
    const double theta = isolate_theta(dd, kPico).approx();
    for (int m : {1, 2, 3}) {
      const double ratio = Rational(a[200], a[200 + m]).convert_to<double>();
      const double err = std::abs(ratio - std::pow(theta, m));
      worst = std::max(worst, err);
      c.require(err < 1e-8, "ratio limit fails for " + dd.to_string() + " m=" + std::to_string(m));
    }
  }
  std::ostringstream s;
  s << "max error " << worst;
  return s.str();
}

std::string trig(Check& c) {
  const TrigReport rep = trig_inequality_check(std::numbers::pi / 50);
  c.require(rep.violations.empty(), std::to_string(rep.violations.size()) + " grid values below -1e-12");
  c.require(rep.equality_failures.empty(), "equality configuration not within 1e-9 of 0");
  std::ostringstream s;
  s << rep.evaluations << " evaluations; minima " << rep.min_value[0] << ", " << rep.min_value[1] << ", "
    << rep.min_value[2];
  return s.str();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string(Check&)>>> criteria = {
      {"Lehmer reproduction", lehmer},
      {"charpoly identity, all ell <= 12", charpoly},
      {"Perron-Frobenius certification", perron},
      {"negative-coefficient example end to end", example_ex},
      {"realisation round trip", round_trip},
      {"positivity and torsion", positivity},
      {"degree-one family and reducible splitting", degree_one_and_splitting},
      {"max-modulus certification", max_modulus},
      {"ratio limits", ratios},
      {"trigonometric grid", trig},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    try {
      detail = criteria[k].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !c.ok;
    std::cout << "criterion " << k + 1 << " " << (c.ok ? "PASS" : "FAIL") << "  " << criteria[k].first << ": "
              << (c.ok ? detail : c.why.str()) << " [" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << "s]" << std::defaultfloat << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
