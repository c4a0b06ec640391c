#pragma once

// Hilbert coefficients a_n = dim A_n and the coefficient streams b = p * H_A.

#include <vector>

#include "k0qgr/degree_data.hpp"
#include "k0qgr/polynomial.hpp"

namespace k0qgr {

namespace detail {

/// Appends terms to a series s with f * s = p until it has length n + 1,
/// using s_i = p_i + sum_j n_j s_{i-j} - s_{i-d}.
inline void extend_series(std::vector<Int>& s, const IntPoly& p, const DegreeData& dd, std::size_t n) {
  const auto& mult = dd.multiplicities();
  const std::size_t d = static_cast<std::size_t>(dd.d());
  while (s.size() <= n) {
    const std::size_t i = s.size();
    Int v = p[i];
    for (auto [j, nj] : mult)
      if (static_cast<std::size_t>(j) <= i) v += s[i - static_cast<std::size_t>(j)] * nj;
    if (d <= i) v -= s[i - d];
    s.push_back(std::move(v));
  }
}

}  // namespace detail

/// a_0, ..., a_n.
inline std::vector<Int> hilbert_coeffs(const DegreeData& dd, std::size_t n) {
  std::vector<Int> a;
  a.reserve(n + 1);
  detail::extend_series(a, IntPoly{1}, dd, n);
  return a;
}

/// Immutable prefix of the Hilbert series of A.
class HilbertStream {
 public:
  explicit HilbertStream(DegreeData dd) : dd_(std::move(dd)), prefix_{Int(1)} {}

  const DegreeData& source() const { return dd_; }
  const std::vector<Int>& prefix() const { return prefix_; }

  /// A new stream whose prefix reaches index n (or this one, if already long
  /// enough).
  HilbertStream extended(std::size_t n) const {
    HilbertStream r = *this;
    detail::extend_series(r.prefix_, IntPoly{1}, r.dd_, n);
    return r;
  }

 private:
  DegreeData dd_;
  std::vector<Int> prefix_;
};

/// b_0, ..., b_n with sum b_i t^i = p(t) H_A(t).
inline std::vector<Int> series_product_coeffs(const LaurentPoly& p, const DegreeData& dd, std::size_t n) {
  if (!p.is_zero() && p.min_exponent() < 0)
    throw Error(Errc::NegativeExponent, "series_product_coeffs needs a polynomial in t; shift the Laurent input");
  std::vector<Int> b;
  b.reserve(n + 1);
  detail::extend_series(b, p.as_poly(), dd, n);
  return b;
}

/// Lazily extended coefficients of p(t) H_A(t) for p in Z[t].
class ProductSeries {
 public:
  ProductSeries(IntPoly p, DegreeData dd) : p_(std::move(p)), dd_(std::move(dd)) {}

  const Int& at(std::size_t i) {
    detail::extend_series(b_, p_, dd_, i);
    return b_[i];
  }
  /// b_i with b_i = 0 for i < 0.
  Int at_signed(std::int64_t i) { return i < 0 ? Int(0) : at(static_cast<std::size_t>(i)); }

  const std::vector<Int>& computed() const { return b_; }

 private:
  IntPoly p_;
  DegreeData dd_;
  std::vector<Int> b_;
};

}  // namespace k0qgr
