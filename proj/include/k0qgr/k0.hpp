#pragma once

// The ordered group Z[t, t^-1]/(f): canonical representatives, the positive
// cone, the shift action and the maps to Z[theta] and to the factor rings.

#include <optional>
#include <string>
#include <vector>

#include "k0qgr/degree_data.hpp"
#include "k0qgr/factor.hpp"
#include "k0qgr/polynomial.hpp"
#include "k0qgr/sturm.hpp"

namespace k0qgr {

/// A class in Z[t, t^-1]/(f), stored as its unique representative of degree
/// < d. Since f is monic with constant term 1, t is a unit and Z[t]/(f) is
/// free on 1, t, ..., t^{d-1}.
class K0Class {
 public:
  K0Class(IntPoly rep, DegreeData dd) : rep_(std::move(rep)), dd_(std::move(dd)) {}

  const IntPoly& rep() const { return rep_; }
  const DegreeData& source() const { return dd_; }
  bool is_zero() const { return rep_.is_zero(); }

  /// Coefficients c_0..c_{d-1}, zero-padded.
  std::vector<Int> coordinates() const {
    std::vector<Int> v(static_cast<std::size_t>(dd_.d()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = rep_[i];
    return v;
  }

  friend bool operator==(const K0Class& a, const K0Class& b) { return a.dd_ == b.dd_ && a.rep_ == b.rep_; }

  friend K0Class operator+(const K0Class& a, const K0Class& b) { return {a.rep_ + b.rep_, a.dd_}; }
  friend K0Class operator-(const K0Class& a, const K0Class& b) { return {a.rep_ - b.rep_, a.dd_}; }

 private:
  IntPoly rep_;
  DegreeData dd_;
};

/// t^-1 mod f: sum_j n_j t^{j-1} - t^{d-1}.
inline IntPoly inverse_of_t(const DegreeData& dd) {
  std::vector<Int> c(static_cast<std::size_t>(dd.d()));
  c[static_cast<std::size_t>(dd.d() - 1)] -= 1;
  for (auto [j, n] : dd.multiplicities()) c[static_cast<std::size_t>(j - 1)] += n;
  return IntPoly(std::move(c));
}

inline IntPoly reduce_poly(const IntPoly& p, const DegreeData& dd) {
  return divmod_unit_leading(p, defining_int_poly(dd)).remainder;
}

inline K0Class reduce(const LaurentPoly& p, const DegreeData& dd) {
  const IntPoly f = defining_int_poly(dd);
  IntPoly nonneg;
  std::map<std::int64_t, Int> negative;
  for (const auto& [e, c] : p.terms()) {
    if (e >= 0) nonneg += IntPoly::monomial(c, static_cast<std::size_t>(e));
    else negative.emplace(-e, c);
  }
  IntPoly acc = divmod_unit_leading(nonneg, f).remainder;
  if (!negative.empty()) {
    const IntPoly inv = inverse_of_t(dd);
    IntPoly power{1};
    std::int64_t k = 0;
    for (const auto& [e, c] : negative) {  // ascending in e
      while (k < e) {
        power = divmod_unit_leading(power * inv, f).remainder;
        ++k;
      }
      acc += c * power;
    }
    acc = divmod_unit_leading(acc, f).remainder;
  }
  return {std::move(acc), dd};
}

enum class Cone { positive, zero, negative, incomparable };

inline const char* to_string(Cone c) {
  switch (c) {
    case Cone::positive: return "positive";
    case Cone::zero: return "zero";
    case Cone::negative: return "negative";
    case Cone::incomparable: return "incomparable";
  }
  return "?";
}

/// Position relative to the cone {p : p(theta) > 0} u {0}. A nonzero class
/// vanishing at theta (only possible for reducible f) is incomparable to 0.
inline Cone cone_position(const K0Class& c) {
  if (c.is_zero()) return Cone::zero;
  switch (sign_at_theta(LaurentPoly::from_poly(c.rep()), c.source())) {
    case Sign::positive: return Cone::positive;
    case Sign::negative: return Cone::negative;
    case Sign::zero: return Cone::incomparable;
  }
  return Cone::incomparable;
}

/// Class of t^{-k} rep, i.e. the image of [M(k)].
inline K0Class shift_class(const K0Class& c, std::int64_t k) {
  return reduce(LaurentPoly::from_poly(c.rep()).shifted(-k), c.source());
}

/// Coordinates in the basis 1, theta, ..., theta^{d-1} of Z[theta] when f is
/// irreducible; otherwise the factorisation that prevents it.
struct ZThetaImage {
  bool available = false;
  std::vector<Int> coordinates;
  FactorList factors;
};

inline ZThetaImage to_Z_theta(const K0Class& c) {
  ZThetaImage out;
  out.factors = factor_f(c.source());
  out.available = out.factors.irreducible_single();
  if (out.available) out.coordinates = c.coordinates();
  return out;
}

struct SplitEvaluation {
  enum class Kind { integer_root, theta_factor, other_factor };
  Kind kind = Kind::other_factor;
  IntPoly factor;
  Int root = 0;                  // integer_root only
  std::vector<Int> coordinates;  // value for integer_root (one entry), residue coordinates otherwise
};

inline const char* to_string(SplitEvaluation::Kind k) {
  switch (k) {
    case SplitEvaluation::Kind::integer_root: return "integer_root";
    case SplitEvaluation::Kind::theta_factor: return "theta_factor";
    case SplitEvaluation::Kind::other_factor: return "other_factor";
  }
  return "?";
}

/// One evaluation per distinct irreducible factor of f: rep(r) for a linear
/// factor t - r, and rep reduced modulo the factor otherwise (the factor
/// owning theta flagged).
inline std::vector<SplitEvaluation> split_evaluations(const K0Class& c) {
  const FactorList fl = factor_f(c.source());
  std::vector<SplitEvaluation> out;
  for (std::size_t k = 0; k < fl.factors.size(); ++k) {
    const IntPoly& fac = fl.factors[k].poly;
    SplitEvaluation ev;
    ev.factor = fac;
    if (fac.degree() == 1) {
      // monic: t + a has root -a
      ev.kind = SplitEvaluation::Kind::integer_root;
      ev.root = -fac[0];
      ev.coordinates = {c.rep().eval(ev.root)};
      if (fl.theta_factor == k) ev.kind = SplitEvaluation::Kind::theta_factor;
    } else {
      ev.kind = fl.theta_factor == k ? SplitEvaluation::Kind::theta_factor : SplitEvaluation::Kind::other_factor;
      const IntPoly r = divmod_unit_leading(c.rep(), fac).remainder;
      ev.coordinates.resize(static_cast<std::size_t>(fac.degree()));
      for (std::size_t i = 0; i < ev.coordinates.size(); ++i) ev.coordinates[i] = r[i];
    }
    out.push_back(std::move(ev));
  }
  return out;
}

/// True when q lies in (f), i.e. q is the q-polynomial of a finite-dimensional
/// (torsion) module.
inline bool classify_torsion(const LaurentPoly& q, const DegreeData& dd) { return reduce(q, dd).is_zero(); }

}  // namespace k0qgr
