#pragma once

// Exact integer polynomials (dense) and Laurent polynomials (sparse).

#include <algorithm>
#include <charconv>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "k0qgr/error.hpp"

namespace k0qgr {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rational& x) { return x.sign(); }

inline bool fits_int64(const Int& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

/// Dense integer polynomial, coefficients stored in ascending order with no
/// trailing zeros. The zero polynomial has an empty coefficient vector and
/// degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long long> coeffs) {
    c_.reserve(coeffs.size());
    for (long long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }
  static IntPoly monomial(const Int& c, std::size_t e) {
    std::vector<Int> v(e + 1);
    v[e] = c;
    return IntPoly(std::move(v));
  }

  std::span<const Int> coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& leading() const { return c_.back(); }

  const Int& operator[](std::size_t i) const {
    static const Int zero{0};
    return i < c_.size() ? c_[i] : zero;
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
    return IntPoly(std::move(r));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
  }
  friend IntPoly operator*(const Int& s, const IntPoly& a) {
    if (s.is_zero()) return {};
    IntPoly r = a;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  IntPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long long>(i);
    return IntPoly(std::move(r));
  }

  /// Multiply by t^k, k >= 0.
  IntPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Int> r(k, Int(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return IntPoly(std::move(r));
  }

  Int eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  }

  /// Sign of the value at a rational point, via the homogenised integer sum.
  int sign_at(const Rational& x) const {
    if (is_zero()) return 0;
    const Int p = boost::multiprecision::numerator(x);
    const Int q = boost::multiprecision::denominator(x);  // > 0
    Int acc = 0;
    Int qpow = 1;
    // sum c_i p^i q^(n-i), Horner in p with running powers of q
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * p + *it * qpow;
      qpow *= q;
    }
    return acc.sign();
  }

  std::complex<double> eval(std::complex<double> z) const {
    std::complex<double> acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->convert_to<double>();
    return acc;
  }

  Int content() const {
    Int g = 0;
    for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
    return abs(g);
  }

  /// Primitive part normalised to a positive leading coefficient.
  IntPoly primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    if (leading().sign() < 0) g = -g;
    IntPoly r = *this;
    for (auto& x : r.c_) x /= g;
    return r;
  }

  bool is_monic() const { return !is_zero() && leading() == 1; }

  /// Human-readable form in descending powers, e.g. "t^2 - 3t + 1".
  std::string pretty(std::string_view var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Int& c = c_[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      const bool neg = c.sign() < 0;
      const Int mag = abs(c);
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (mag != 1 || i == 0) out += mag.str();
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Int> c_;
};

struct DivMod {
  IntPoly quotient;
  IntPoly remainder;
};

/// Division by a divisor whose leading coefficient is +1 or -1.
inline DivMod divmod_unit_leading(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero() || abs(b.leading()) != 1)
    throw std::invalid_argument("divmod_unit_leading: divisor leading coefficient must be +-1");
  std::vector<Int> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {IntPoly{}, a};
  std::vector<Int> q(static_cast<std::size_t>(da - db + 1));
  const Int& lc = b.leading();
  for (int i = da; i >= db; --i) {
    Int c = r[static_cast<std::size_t>(i)] * lc;  // lc^-1 == lc
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

/// Exact quotient a / b over the integers, or nullopt when b does not divide a
/// in Z[t].
inline std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
  if (a.is_zero()) return IntPoly{};
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return std::nullopt;
  std::vector<Int> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Int> q(static_cast<std::size_t>(da - db + 1));
  const Int& lc = b.leading();
  for (int i = da; i >= db; --i) {
    const Int& top = r[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    if ((top % lc) != 0) return std::nullopt;
    Int c = top / lc;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(i - db)] = std::move(c);
  }
  for (const auto& x : r)
    if (!x.is_zero()) return std::nullopt;
  return IntPoly(std::move(q));
}

/// Pseudo-remainder scaled by |lc(b)|^k so that the result has the same sign
/// as the true rational remainder.
inline IntPoly sign_preserving_prem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("prem: division by zero polynomial");
  const int db = b.degree();
  int da = a.degree();
  if (da < db) return a;
  std::vector<Int> r(a.coeffs().begin(), a.coeffs().end());
  const Int lc = abs(b.leading());
  const int lc_sign = b.leading().sign();
  while (da >= db) {
    const Int top = r[static_cast<std::size_t>(da)] * lc_sign;
    for (auto& x : r) x *= lc;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(da - db + j)] -= top * b[static_cast<std::size_t>(j)];
    r.pop_back();
    --da;
    while (da >= 0 && r[static_cast<std::size_t>(da)].is_zero()) {
      r.pop_back();
      --da;
    }
  }
  return IntPoly(std::move(r));
}

/// Greatest common divisor over Q, returned as a primitive integer polynomial
/// with positive leading coefficient. gcd(0, 0) is 0.
inline IntPoly gcd(IntPoly a, IntPoly b) {
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    IntPoly r = sign_preserving_prem(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Sparse integer Laurent polynomial: exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;

  LaurentPoly() = default;

  static LaurentPoly from_poly(const IntPoly& p, Exponent shift = 0) {
    LaurentPoly r;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
      r.add_term(static_cast<Exponent>(i) + shift, p.coeffs()[i]);
    return r;
  }

  static LaurentPoly monomial(const Int& c, Exponent e) {
    LaurentPoly r;
    r.add_term(e, c);
    return r;
  }

  static LaurentPoly from_terms(std::initializer_list<std::pair<Exponent, long long>> terms) {
    LaurentPoly r;
    for (auto [e, c] : terms) r.add_term(e, Int(c));
    return r;
  }

  void add_term(Exponent e, const Int& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const std::map<Exponent, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Exponent min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  Exponent max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  Int coeff(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  /// Multiply by t^k.
  LaurentPoly shifted(Exponent k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  /// Split as t^shift * P with P an ordinary polynomial and P(0) != 0 (unless
  /// zero, which gives (0, 0)).
  std::pair<IntPoly, Exponent> to_poly() const {
    if (is_zero()) return {IntPoly{}, 0};
    const Exponent lo = min_exponent();
    std::vector<Int> v(static_cast<std::size_t>(max_exponent() - lo + 1));
    for (const auto& [e, c] : terms_) v[static_cast<std::size_t>(e - lo)] = c;
    return {IntPoly(std::move(v)), lo};
  }

  /// The polynomial itself, when no exponent is negative.
  IntPoly as_poly() const {
    if (!is_zero() && min_exponent() < 0)
      throw Error(Errc::NegativeExponent, "polynomial has a negative exponent; shift it first");
    auto [p, s] = to_poly();
    return p.shifted(static_cast<std::size_t>(s));
  }

  /// Sparse text form `e:c,e:c,...` in increasing exponent order; the zero
  /// polynomial is written `0:0`.
  std::string to_string() const {
    if (is_zero()) return "0:0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += ',';
      out += std::to_string(e) + ":" + c.str();
    }
    return out;
  }

  static LaurentPoly parse(std::string_view text) {
    LaurentPoly r;
    std::map<Exponent, bool> seen;
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    if (text.empty()) throw Error(Errc::Parse, "empty polynomial text");
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view item = trim(text.substr(pos, comma - pos));
      const std::size_t colon = item.find(':');
      if (colon == std::string_view::npos)
        throw Error(Errc::Parse, "term '" + std::string(item) + "' is not of the form exponent:coefficient");
      std::string_view es = trim(item.substr(0, colon));
      std::string_view cs = trim(item.substr(colon + 1));
      Exponent e = 0;
      auto [ptr, ec] = std::from_chars(es.data(), es.data() + es.size(), e);
      if (ec != std::errc{} || ptr != es.data() + es.size() || es.empty())
        throw Error(Errc::Parse, "bad exponent '" + std::string(es) + "'");
      if (!is_integer_text(cs)) throw Error(Errc::Parse, "bad coefficient '" + std::string(cs) + "'");
      if (!seen.emplace(e, true).second)
        throw Error(Errc::Parse, "duplicate exponent " + std::to_string(e));
      if (cs.front() == '+') cs.remove_prefix(1);
      r.add_term(e, Int(std::string(cs)));
      pos = comma + 1;
    }
    return r;
  }

  std::string pretty(std::string_view var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      const bool neg = c.sign() < 0;
      const Int mag = abs(c);
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (mag != 1 || e == 0) out += mag.str();
      if (e != 0) out += var;
      if (e != 0 && e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  static bool is_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  }

  std::map<Exponent, Int> terms_;
};

}  // namespace k0qgr
