#pragma once

// Numeric certification that theta^-1 is the unique root of maximal modulus
// (and theta the unique root of minimal modulus), plus a grid check of the
// trigonometric inequalities used in the analytic argument for g >= 4.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "k0qgr/degree_data.hpp"
#include "k0qgr/factor.hpp"
#include "k0qgr/sturm.hpp"

namespace k0qgr {

struct NumericRoot {
  double re = 0;
  double im = 0;
  double modulus = 0;
};

struct MaxModulusReport {
  std::vector<NumericRoot> roots;  // sorted by modulus, then argument
  IsolatingInterval theta_interval;
  double theta = 0;
  double theta_inv = 0;
  double tolerance = 0;
  bool unique_max_modulus = false;  // one root near 1/theta, it is real, the rest well inside
  bool unique_min_modulus = false;  // dually for theta
  std::string failure;              // empty when both flags hold

  bool passed() const { return unique_max_modulus && unique_min_modulus; }
};

/// 1e-9 up to degree 16, 1e-6 above.
inline double default_modulus_tolerance(const DegreeData& dd) { return dd.d() <= 16 ? 1e-9 : 1e-6; }

/// Computes every complex root of f numerically and checks the separation of
/// the extreme moduli. Never throws on a failed check; see
/// certify_max_modulus.
inline MaxModulusReport max_modulus_report(const DegreeData& dd, double tol) {
  MaxModulusReport rep;
  rep.tolerance = tol;
  rep.theta_interval = isolate_theta(dd, Rational(Int(1), Int(1) << 60));
  rep.theta = rep.theta_interval.approx();
  rep.theta_inv = invert_interval(rep.theta_interval).approx();

  for (const auto& z : numeric_roots(defining_int_poly(dd))) rep.roots.push_back({z.real(), z.imag(), std::abs(z)});
  std::sort(rep.roots.begin(), rep.roots.end(), [](const NumericRoot& a, const NumericRoot& b) {
    if (a.modulus != b.modulus) return a.modulus < b.modulus;
    return std::atan2(a.im, a.re) < std::atan2(b.im, b.re);
  });

  auto check = [&](double target, bool is_max, std::string& why) {
    int near = 0;
    for (const auto& r : rep.roots) {
      if (std::abs(r.modulus - target) <= tol) {
        ++near;
        if (std::abs(r.im) > tol) {
          why = "root of modulus " + std::to_string(target) + " is not real";
          return false;
        }
      } else if (is_max ? r.modulus >= target - tol : r.modulus <= target + tol) {
        why = "root with modulus " + std::to_string(r.modulus) + " is not separated from " + std::to_string(target);
        return false;
      }
    }
    if (near != 1) {
      why = std::to_string(near) + " roots have modulus within tolerance of " + std::to_string(target);
      return false;
    }
    return true;
  };
  std::string why_max, why_min;
  rep.unique_max_modulus = check(rep.theta_inv, true, why_max);
  rep.unique_min_modulus = check(rep.theta, false, why_min);
  rep.failure = why_max.empty() ? why_min : why_max;
  return rep;
}

/// As max_modulus_report, but throws CertificationFailed when either
/// separation check fails.
inline MaxModulusReport certify_max_modulus(const DegreeData& dd, double tol) {
  MaxModulusReport rep = max_modulus_report(dd, tol);
  if (!rep.passed())
    throw Error(Errc::CertificationFailed, "max-modulus certification of f" + dd.to_string() + ": " + rep.failure);
  return rep;
}

// ---------------------------------------------------------------------------

/// 3 + cos 2e - cos(e+s) - cos(e-s) - cos(e+p) - cos(e-p)
inline double trig_expr1(double eta, double phi, double psi) {
  return 3 + std::cos(2 * eta) - std::cos(eta + psi) - std::cos(eta - psi) - std::cos(eta + phi) -
         std::cos(eta - phi);
}
/// 3 + cos 2e - cos(e+s) - 2 cos e - cos(e-s)
inline double trig_expr2(double eta, double psi) {
  return 3 + std::cos(2 * eta) - std::cos(eta + psi) - 2 * std::cos(eta) - std::cos(eta - psi);
}
/// 3 + cos 2e - 2 cos(e+s) - 2 cos(e-s)
inline double trig_expr3(double eta, double psi) {
  return 3 + std::cos(2 * eta) - 2 * std::cos(eta + psi) - 2 * std::cos(eta - psi);
}

struct TrigViolation {
  int expression = 0;  // 1, 2 or 3
  double eta = 0, phi = 0, psi = 0;
  double value = 0;
};

struct TrigReport {
  double grid_step = 0;
  std::size_t evaluations = 0;
  double min_value[3] = {0, 0, 0};
  std::vector<TrigViolation> violations;  // values below -1e-12
  std::vector<TrigViolation> equality_failures;  // |value| > 1e-9 at an equality configuration

  bool passed() const { return violations.empty() && equality_failures.empty(); }
};

inline TrigReport trig_inequality_check(double grid_step) {
  constexpr double pi = std::numbers::pi;
  if (!(grid_step > 0) || grid_step > pi / 10 + 1e-15)
    throw std::invalid_argument("trig_inequality_check: grid step must lie in (0, pi/10]");
  TrigReport rep;
  rep.grid_step = grid_step;
  std::vector<double> grid;
  for (int k = 0; k * grid_step < 2 * pi - 1e-12; ++k) grid.push_back(k * grid_step);
  rep.min_value[0] = rep.min_value[1] = rep.min_value[2] = 1e300;

  auto record = [&](int which, double eta, double phi, double psi, double v) {
    ++rep.evaluations;
    rep.min_value[which - 1] = std::min(rep.min_value[which - 1], v);
    if (v < -1e-12) rep.violations.push_back({which, eta, phi, psi, v});
  };
  for (double eta : grid) {
    for (double psi : grid) {
      record(2, eta, 0, psi, trig_expr2(eta, psi));
      record(3, eta, 0, psi, trig_expr3(eta, psi));
      for (double phi : grid) record(1, eta, phi, psi, trig_expr1(eta, phi, psi));
    }
  }

  auto equality = [&](int which, double eta, double phi, double psi, double v) {
    if (std::abs(v) > 1e-9) rep.equality_failures.push_back({which, eta, phi, psi, v});
  };
  equality(1, 0, 0, 0, trig_expr1(0, 0, 0));
  equality(1, pi, pi, pi, trig_expr1(pi, pi, pi));
  equality(2, 0, 0, 0, trig_expr2(0, 0));
  equality(3, 0, 0, 0, trig_expr3(0, 0));
  equality(3, pi, 0, pi, trig_expr3(pi, pi));
  return rep;
}

}  // namespace k0qgr
