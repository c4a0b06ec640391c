#pragma once

// Sturm sequences over Z, exact real-root counting and bisection on rational
// intervals, and the exact sign of a Laurent polynomial at theta.

#include <string>
#include <vector>

#include "k0qgr/degree_data.hpp"
#include "k0qgr/error.hpp"
#include "k0qgr/polynomial.hpp"

namespace k0qgr {

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline const char* to_string(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
  }
  return "?";
}

inline Sign sign_from_int(int s) { return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero); }

/// Sturm sequence p, p', -rem(p, p'), ... with every member replaced by a
/// positive multiple of itself (primitive integer form). Counts distinct real
/// roots, so p need not be squarefree.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("SturmSequence: zero polynomial");
    seq_.push_back(positive_multiple(p));
    IntPoly dp = p.derivative();
    if (dp.is_zero()) return;
    seq_.push_back(positive_multiple(dp));
    while (true) {
      IntPoly r = sign_preserving_prem(seq_[seq_.size() - 2], seq_.back());
      if (r.is_zero()) break;
      seq_.push_back(positive_multiple(-r));
    }
  }

  const std::vector<IntPoly>& members() const { return seq_; }

  int variations_at(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const auto& q : seq_) {
      const int s = q.sign_at(x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  int variations_at_pos_inf() const {
    int count = 0, last = 0;
    for (const auto& q : seq_) {
      const int s = q.leading().sign();
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  int variations_at_neg_inf() const {
    int count = 0, last = 0;
    for (const auto& q : seq_) {
      int s = q.leading().sign();
      if (q.degree() % 2 == 1) s = -s;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Number of distinct real roots in (a, b]; a < b.
  int count_in(const Rational& a, const Rational& b) const { return variations_at(a) - variations_at(b); }
  /// Number of distinct real roots in (a, +inf).
  int count_above(const Rational& a) const { return variations_at(a) - variations_at_pos_inf(); }
  int count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

 private:
  static IntPoly positive_multiple(const IntPoly& p) {
    const Int c = p.content();
    std::vector<Int> v(p.coeffs().begin(), p.coeffs().end());
    for (auto& x : v) x /= c;
    return IntPoly(std::move(v));
  }

  std::vector<IntPoly> seq_;
};

/// Open rational interval (low, high) holding exactly one real root of poly.
struct IsolatingInterval {
  Rational low;
  Rational high;
  IntPoly poly;

  Rational width() const { return high - low; }
  Rational midpoint() const { return (low + high) / 2; }
  double approx() const { return midpoint().convert_to<double>(); }
  bool contains(const Rational& x) const { return low < x && x < high; }
};

/// Halve an isolating interval until its width is at most `width`. Endpoints
/// stay non-roots of the polynomial.
inline IsolatingInterval refine(IsolatingInterval iv, const Rational& width) {
  int s_low = iv.poly.sign_at(iv.low);
  while (iv.width() > width) {
    const Rational mid = iv.midpoint();
    const int s_mid = iv.poly.sign_at(mid);
    if (s_mid == 0) {
      // rational root: shrink symmetrically around it
      const Rational q = iv.width() / 4;
      if (iv.poly.sign_at(mid - q) == 0 || iv.poly.sign_at(mid + q) == 0)
        throw Error(Errc::CertificationFailed, "isolating interval contains more than one root");
      iv.low = mid - q;
      iv.high = mid + q;
      s_low = iv.poly.sign_at(iv.low);
      continue;
    }
    if (s_mid == s_low) {
      iv.low = mid;
    } else {
      iv.high = mid;
    }
  }
  return iv;
}

/// Root counts used to certify the location of theta and 1/theta.
struct ThetaCertificate {
  int roots_in_unit_interval = 0;  // distinct real roots of f in (0,1)
  int roots_above_one = 0;         // distinct real roots of f in (1,inf)
};

inline ThetaCertificate certify_positive_roots(const DegreeData& dd) {
  const IntPoly f = defining_int_poly(dd);
  const SturmSequence sturm(f);
  ThetaCertificate c;
  c.roots_in_unit_interval = sturm.count_in(Rational(0), Rational(1));
  c.roots_above_one = sturm.count_above(Rational(1));
  return c;
}

/// Isolating interval of width <= width around theta, the root of f in (0,1).
inline IsolatingInterval isolate_theta(const DegreeData& dd, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("isolate_theta: width must be positive");
  const ThetaCertificate cert = certify_positive_roots(dd);
  if (cert.roots_in_unit_interval != 1 || cert.roots_above_one != 1)
    throw Error(Errc::CertificationFailed,
                "f" + dd.to_string() + " has " + std::to_string(cert.roots_in_unit_interval) + " roots in (0,1) and " +
                    std::to_string(cert.roots_above_one) + " in (1,inf); expected one each");
  // f(0) = 1 > 0 and f(1) = 2 - g < 0
  return refine(IsolatingInterval{Rational(0), Rational(1), defining_int_poly(dd)}, width);
}

/// The reciprocal interval around 1/theta.
inline IsolatingInterval invert_interval(IsolatingInterval iv) {
  while (iv.low.sign() <= 0) iv = refine(iv, iv.width() / 2);
  // t^d f(1/t) = f(t), so the same polynomial isolates 1/theta
  return IsolatingInterval{1 / iv.high, 1 / iv.low, iv.poly};
}

/// Exact bounds of P on [lo, hi] with 0 <= lo: P = P+ - P- with both parts
/// increasing on the positive axis.
inline std::pair<Rational, Rational> interval_eval_positive(const IntPoly& p, const Rational& lo, const Rational& hi) {
  std::vector<Int> pos(p.coeffs().size()), neg(p.coeffs().size());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i].sign() > 0) pos[i] = p.coeffs()[i];
    else neg[i] = -p.coeffs()[i];
  }
  const IntPoly pp(std::move(pos)), pn(std::move(neg));
  return {pp.eval(lo) - pn.eval(hi), pp.eval(hi) - pn.eval(lo)};
}

/// Exact sign of a polynomial at theta, given an isolating interval of f
/// inside (0,1).
inline Sign sign_at_theta(const IntPoly& p, const IsolatingInterval& theta) {
  if (p.is_zero()) return Sign::zero;
  const IntPoly common = gcd(p, theta.poly);
  if (common.degree() >= 1) {
    // common's roots are roots of f, so the interval endpoints are non-roots
    const SturmSequence s(common);
    if (s.count_in(theta.low, theta.high) > 0) return Sign::zero;
  }
  IsolatingInterval iv = theta;
  while (true) {
    auto [lo, hi] = interval_eval_positive(p, iv.low, iv.high);
    if (lo.sign() > 0) return Sign::positive;
    if (hi.sign() < 0) return Sign::negative;
    iv = refine(iv, iv.width() / 2);
  }
}

/// Exact sign of a Laurent polynomial at theta. Multiplying by a power of t
/// does not change the sign since theta > 0.
inline Sign sign_at_theta(const LaurentPoly& p, const DegreeData& dd) {
  if (p.is_zero()) return Sign::zero;
  const IntPoly shifted = p.to_poly().first;
  return sign_at_theta(shifted, isolate_theta(dd, Rational(1, 16)));
}

}  // namespace k0qgr
