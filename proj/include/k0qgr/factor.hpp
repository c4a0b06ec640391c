#pragma once

// Factorisation of f over Z: squarefree split, then reconstruction of monic
// factors from subsets of numerically computed roots, each candidate verified
// by exact division.

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>

#include "k0qgr/degree_data.hpp"
#include "k0qgr/error.hpp"
#include "k0qgr/polynomial.hpp"
#include "k0qgr/sturm.hpp"

namespace k0qgr {

/// All complex roots (with multiplicity) of a nonconstant polynomial, from the
/// eigenvalues of its companion matrix followed by a few Newton steps.
inline std::vector<std::complex<double>> numeric_roots(const IntPoly& p) {
  if (p.degree() < 1) return {};
  Eigen::VectorXd coeffs(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) coeffs[i] = p[static_cast<std::size_t>(i)].convert_to<double>();
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
  solver.compute(coeffs);
  std::vector<std::complex<double>> roots(solver.roots().begin(), solver.roots().end());

  const IntPoly dp = p.derivative();
  for (auto& z : roots) {
    for (int it = 0; it < 8; ++it) {
      const std::complex<double> fz = p.eval(z);
      const std::complex<double> dz = dp.eval(z);
      if (std::abs(dz) == 0.0) break;
      const std::complex<double> next = z - fz / dz;
      if (!(std::abs(p.eval(next)) < std::abs(fz))) break;
      z = next;
    }
  }
  return roots;
}

struct Factor {
  IntPoly poly;  // primitive, positive leading coefficient
  int multiplicity = 1;
};

struct FactorList {
  std::vector<Factor> factors;
  /// Index of the factor vanishing at theta (the minimal polynomial of theta)
  /// when the list is a factorisation of f.
  std::optional<std::size_t> theta_factor;

  IntPoly product() const {
    IntPoly r{1};
    for (const auto& f : factors)
      for (int k = 0; k < f.multiplicity; ++k) r *= f.poly;
    return r;
  }

  bool irreducible_single() const { return factors.size() == 1 && factors.front().multiplicity == 1; }
};

/// Yun's squarefree decomposition over Q: p = c * prod s_i^i with each s_i
/// primitive and squarefree. Entries with constant s_i are omitted.
inline std::vector<Factor> squarefree_decomposition(const IntPoly& p) {
  std::vector<Factor> out;
  if (p.degree() < 1) return out;
  IntPoly a = p.primitive_part();
  IntPoly b = gcd(a, a.derivative());
  IntPoly c = *divide_exact(a, b);           // primitive parts divide exactly
  IntPoly dpart;
  int i = 1;
  while (c.degree() >= 1) {
    IntPoly y = gcd(c, b);
    IntPoly s = *divide_exact(c, y);
    if (s.degree() >= 1) out.push_back({s.primitive_part(), i});
    c = std::move(y);
    b = *divide_exact(b, c);
    ++i;
  }
  return out;
}

namespace detail {

// A real root or a conjugate pair of non-real roots.
struct RootUnit {
  std::vector<std::complex<double>> roots;
};

inline std::vector<RootUnit> pair_conjugates(std::vector<std::complex<double>> roots, double imag_tol) {
  std::vector<RootUnit> units;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    if (std::abs(roots[i].imag()) <= imag_tol) {
      units.push_back({{std::complex<double>(roots[i].real(), 0.0)}});
      continue;
    }
    // closest unused conjugate
    std::size_t best = roots.size();
    double best_dist = 1e300;
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(roots[j] - std::conj(roots[i]));
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best == roots.size() || best_dist > 1e-4)
      throw Error(Errc::FactorizationAmbiguous, "non-real root without a numeric conjugate partner");
    used[best] = true;
    units.push_back({{roots[i], std::conj(roots[i])}});
  }
  return units;
}

// Monic integer polynomial with the given roots, if every coefficient of the
// numeric product is within tol of an integer.
inline std::optional<IntPoly> integer_poly_from_roots(const std::vector<std::complex<double>>& roots, double tol) {
  std::vector<std::complex<double>> c{1.0};
  for (const auto& r : roots) {
    std::vector<std::complex<double>> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  std::vector<Int> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double re = std::round(c[i].real());
    if (std::abs(c[i].real() - re) > tol || std::abs(c[i].imag()) > tol) return std::nullopt;
    out[i] = Int(static_cast<long long>(re));
  }
  return IntPoly(std::move(out));
}

}  // namespace detail

/// Irreducible factors over Z of a squarefree polynomial with leading
/// coefficient +-1. Factors are discovered in order of increasing degree, so
/// each one found is irreducible provided every smaller candidate was checked.
inline std::vector<IntPoly> factor_squarefree_monic(const IntPoly& p, double int_tol = 1e-4) {
  IntPoly rest = p.primitive_part();
  if (rest.degree() < 1) return {};
  if (rest.leading() != 1) throw std::invalid_argument("factor_squarefree_monic: leading coefficient must be +-1");
  std::vector<IntPoly> found;
  std::vector<detail::RootUnit> units = detail::pair_conjugates(numeric_roots(rest), 1e-7);

  auto unit_degree = [](const detail::RootUnit& u) { return static_cast<int>(u.roots.size()); };

  bool progress = true;
  while (progress && rest.degree() >= 2) {
    progress = false;
    const int n = rest.degree();
    const std::size_t m = units.size();
    // search subsets of units by increasing total degree
    for (int target = 1; target <= n / 2 && !progress; ++target) {
      std::vector<std::size_t> pick;
      auto rec = [&](auto&& self, std::size_t start, int deg) -> bool {
        if (deg == target) {
          std::vector<std::complex<double>> rs;
          for (auto k : pick) rs.insert(rs.end(), units[k].roots.begin(), units[k].roots.end());
          auto cand = detail::integer_poly_from_roots(rs, int_tol);
          if (!cand) return false;
          auto q = divide_exact(rest, *cand);
          if (!q) return false;
          found.push_back(*cand);
          rest = *q;
          std::vector<detail::RootUnit> remaining;
          for (std::size_t k = 0; k < m; ++k)
            if (std::find(pick.begin(), pick.end(), k) == pick.end()) remaining.push_back(units[k]);
          units = std::move(remaining);
          return true;
        }
        for (std::size_t k = start; k < m; ++k) {
          const int ud = unit_degree(units[k]);
          if (deg + ud > target) continue;
          pick.push_back(k);
          if (self(self, k + 1, deg + ud)) return true;
          pick.pop_back();
        }
        return false;
      };
      progress = rec(rec, 0, 0);
    }
  }
  if (rest.degree() >= 1) found.push_back(rest);

  IntPoly check{1};
  for (const auto& f : found) check *= f;
  if (check != p.primitive_part())
    throw Error(Errc::FactorizationAmbiguous, "reconstructed factors do not multiply back to the input");
  std::sort(found.begin(), found.end(), [](const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
  });
  return found;
}

/// Complete factorisation of f over Z, with the factor vanishing at theta
/// flagged.
inline FactorList factor_f(const DegreeData& dd) {
  const IntPoly f = defining_int_poly(dd);
  FactorList out;
  for (const auto& sq : squarefree_decomposition(f))
    for (auto& irr : factor_squarefree_monic(sq.poly)) out.factors.push_back({std::move(irr), sq.multiplicity});
  std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return std::lexicographical_compare(a.poly.coeffs().begin(), a.poly.coeffs().end(), b.poly.coeffs().begin(),
                                        b.poly.coeffs().end());
  });
  if (out.product() != f) throw Error(Errc::FactorizationAmbiguous, "factors do not multiply back to f");

  const IsolatingInterval theta = isolate_theta(dd, Rational(1, 1024));
  for (std::size_t i = 0; i < out.factors.size(); ++i) {
    if (SturmSequence(out.factors[i].poly).count_in(theta.low, theta.high) == 1) {
      if (out.theta_factor) throw Error(Errc::FactorizationAmbiguous, "two factors vanish at theta");
      out.theta_factor = i;
    }
  }
  if (!out.theta_factor) throw Error(Errc::FactorizationAmbiguous, "no factor vanishes at theta");
  return out;
}

}  // namespace k0qgr
