#pragma once

// Constructive realisation of positive classes: given p with p(theta) > 0,
// an explicit sum of shifted free modules and shifted cyclic quotients
// A/x_1 A, A/x_g A whose q-polynomial is congruent to p modulo f.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "k0qgr/degree_data.hpp"
#include "k0qgr/hilbert.hpp"
#include "k0qgr/k0.hpp"
#include "k0qgr/sturm.hpp"

namespace k0qgr {

struct Block {
  enum class Kind { free, cyclic };
  Kind kind = Kind::free;
  int gen = 0;              // 1 or g for cyclic blocks, 0 for free ones
  std::int64_t shift = 0;   // the block is B(-shift)
  Int mult = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

/// A(-i)^e for Free; (A/x_gen A)(-i)^e for Cyclic.
class ModuleDescription {
 public:
  ModuleDescription() = default;
  explicit ModuleDescription(std::vector<Block> blocks) {
    for (auto& b : blocks) add(std::move(b));
  }

  /// Merges with an existing block of the same kind, generator and shift.
  /// Negative multiplicities are rejected.
  void add(Block b) {
    if (b.mult.sign() < 0) throw Error(Errc::MultiplicityNegative, "block multiplicity " + b.mult.str() + " < 0");
    if (b.kind == Block::Kind::free) b.gen = 0;
    if (b.mult.is_zero()) return;
    auto it = std::find_if(blocks_.begin(), blocks_.end(), [&](const Block& o) {
      return o.kind == b.kind && o.gen == b.gen && o.shift == b.shift;
    });
    if (it != blocks_.end()) {
      it->mult += b.mult;
    } else {
      blocks_.push_back(std::move(b));
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const Block& x, const Block& y) {
      return std::tie(x.kind, x.shift, x.gen) < std::tie(y.kind, y.shift, y.gen);
    });
  }

  const std::vector<Block>& blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }

  ModuleDescription shifted(std::int64_t s) const {
    ModuleDescription r = *this;
    for (auto& b : r.blocks_) b.shift += s;
    return r;
  }

  friend bool operator==(const ModuleDescription&, const ModuleDescription&) = default;

  std::string pretty(const DegreeData& dd) const {
    if (blocks_.empty()) return "0";
    std::string out;
    for (const auto& b : blocks_) {
      if (!out.empty()) out += " + ";
      std::string base = b.kind == Block::Kind::free ? "A" : "(A/x" + std::to_string(b.gen) + "A)";
      out += base + "(" + std::to_string(-b.shift) + ")";
      if (b.mult != 1) out += "^" + b.mult.str();
    }
    (void)dd;
    return out;
  }

 private:
  std::vector<Block> blocks_;
};

inline int generator_degree(int gen, const DegreeData& dd) {
  if (gen < 1 || gen > dd.g()) throw std::invalid_argument("generator index out of range");
  return dd.degrees()[static_cast<std::size_t>(gen - 1)];
}

/// q_M = sum_free e t^i + sum_cyclic e t^i (1 - t^{d_gen}).
inline LaurentPoly q_of_module(const ModuleDescription& m, const DegreeData& dd) {
  LaurentPoly q;
  for (const auto& b : m.blocks()) {
    q.add_term(b.shift, b.mult);
    if (b.kind == Block::Kind::cyclic) q.add_term(b.shift + generator_degree(b.gen, dd), -b.mult);
  }
  return q;
}

/// Cap on the index searched by find_m.
inline constexpr std::size_t kFindMLimit = 10'000;

/// Smallest m >= max(s, d) with 0 < b_{m-d} < b_{m-d+1} < ... < b_m.
inline std::size_t find_m(ProductSeries& b, const DegreeData& dd, std::size_t s, std::size_t limit = kFindMLimit) {
  const std::size_t d = static_cast<std::size_t>(dd.d());
  for (std::size_t m = std::max(s, d); m <= limit; ++m) {
    bool ok = b.at(m - d).sign() > 0;
    for (std::size_t i = m - d; ok && i < m; ++i) ok = b.at(i) < b.at(i + 1);
    if (ok) return m;
  }
  throw Error(Errc::SearchExhausted, "no increasing window of b found below index " + std::to_string(limit));
}

/// r_i = sum_{j=i-m}^{d-1} n_j b_{i-j} - b_{i-d} for m+1 <= i <= m+d.
inline std::map<std::int64_t, Int> residual_coeffs(ProductSeries& b, std::size_t m, const DegreeData& dd) {
  std::map<std::int64_t, Int> r;
  const std::int64_t mm = static_cast<std::int64_t>(m);
  const std::int64_t d = dd.d();
  for (std::int64_t i = mm + 1; i <= mm + d; ++i) {
    Int v = -b.at_signed(i - d);
    for (auto [j, nj] : dd.multiplicities())
      if (j >= i - mm && j <= d - 1) v += b.at_signed(i - j) * nj;
    r[i] = std::move(v);
  }
  return r;
}

/// The algorithm on a polynomial P in Z[t] with a given m; throws
/// MultiplicityNegative if a block would need a negative multiplicity.
inline ModuleDescription realize_with_m(ProductSeries& b, std::size_t m, const DegreeData& dd) {
  const auto r = residual_coeffs(b, m, dd);
  const std::int64_t mm = static_cast<std::int64_t>(m);
  std::vector<Block> blocks;
  auto need_nonneg = [](const Int& v, const char* what) {
    if (v.sign() < 0) throw Error(Errc::MultiplicityNegative, std::string(what) + " multiplicity " + v.str());
  };
  if (dd.d() == 2) {
    // all generators in degree 1
    const Int free_mult = Int(dd.multiplicity(1) - 1) * b.at(m) - b.at_signed(mm - 1);
    const Int cyc_mult = b.at(m);
    need_nonneg(free_mult, "free");
    need_nonneg(cyc_mult, "cyclic");
    blocks.push_back({Block::Kind::free, 0, mm + 1, free_mult});
    blocks.push_back({Block::Kind::cyclic, 1, mm + 1, cyc_mult});
  } else {
    const int d1 = dd.degrees().front();
    const int dg = dd.degrees().back();
    for (std::int64_t i = mm + d1 + 1; i <= mm + dg; ++i) {
      need_nonneg(r.at(i), "N-part");
      blocks.push_back({Block::Kind::free, 0, i, r.at(i)});
    }
    for (std::int64_t i = mm + 1; i <= mm + d1; ++i) {
      const Int bi = b.at_signed(i - d1);
      const Int free_mult = r.at(i) - bi;
      need_nonneg(free_mult, "L-part free");
      need_nonneg(bi, "L-part cyclic");
      blocks.push_back({Block::Kind::free, 0, i, free_mult});
      blocks.push_back({Block::Kind::cyclic, dd.g(), i, bi});
    }
  }
  return ModuleDescription(std::move(blocks));
}

/// Details of a realisation run, for reporting.
struct Realization {
  ModuleDescription module;
  std::int64_t shift = 0;  // p = t^shift * P with P in Z[t]
  std::size_t m = 0;
  int retries = 0;
};

inline Realization realize_detailed(const LaurentPoly& p, const DegreeData& dd) {
  if (sign_at_theta(p, dd) != Sign::positive)
    throw Error(Errc::NotPositive, "p(theta) is not positive for p = " + p.to_string());
  auto [poly, s0] = p.to_poly();
  ProductSeries b(poly, dd);
  std::size_t start = static_cast<std::size_t>(poly.degree());
  Realization out;
  out.shift = s0;
  constexpr int kMaxRetries = 5;
  for (int attempt = 0;; ++attempt) {
    const std::size_t m = find_m(b, dd, start);
    try {
      ModuleDescription mod = realize_with_m(b, m, dd).shifted(s0);
      if (!reduce(q_of_module(mod, dd) - p, dd).is_zero())
        throw Error(Errc::CertificationFailed, "realisation does not match p modulo f");
      out.module = std::move(mod);
      out.m = m;
      out.retries = attempt;
      return out;
    } catch (const Error& e) {
      if (e.code() != Errc::MultiplicityNegative || attempt >= kMaxRetries) throw;
      start = std::max<std::size_t>(2 * m, 1);
    }
  }
}

inline ModuleDescription realize(const LaurentPoly& p, const DegreeData& dd) { return realize_detailed(p, dd).module; }

struct VerificationReport {
  bool congruent = false;             // q_M - p in (f)
  bool hilbert_nonnegative = false;   // first `terms` coefficients of q_M H_A
  bool sign_nonnegative = false;      // q_M(theta) >= 0
  std::size_t terms = 0;

  bool passed() const { return congruent && hilbert_nonnegative && sign_nonnegative; }
};

inline VerificationReport verify_realization(const LaurentPoly& p, const ModuleDescription& m, const DegreeData& dd,
                                             std::size_t terms = 200) {
  VerificationReport rep;
  rep.terms = terms;
  const LaurentPoly q = q_of_module(m, dd);
  rep.congruent = reduce(q - p, dd).is_zero();
  const auto [qpoly, s] = q.to_poly();
  (void)s;
  rep.hilbert_nonnegative = true;
  if (!q.is_zero()) {
    const auto coeffs = series_product_coeffs(LaurentPoly::from_poly(qpoly), dd, terms - 1);
    rep.hilbert_nonnegative =
        std::all_of(coeffs.begin(), coeffs.end(), [](const Int& x) { return x.sign() >= 0; });
  }
  rep.sign_nonnegative = sign_at_theta(q, dd) != Sign::negative;
  return rep;
}

}  // namespace k0qgr
