#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "k0qgr/error.hpp"
#include "k0qgr/polynomial.hpp"

namespace k0qgr {

/// Generator degrees d_1 <= ... <= d_g of a two-dimensional regular algebra,
/// together with the quantities derived from them: the relation degree
/// d = d_i + d_{g+1-i}, the total ell = sum d_i and the multiplicities n_j.
class DegreeData {
 public:
  /// Accepts degrees in any order. Checks, in order: positivity, g >= 3,
  /// symmetric pairing after sorting, gcd 1.
  static DegreeData validate(std::span<const std::int64_t> raw) {
    for (auto v : raw)
      if (v <= 0) throw Error(Errc::NonPositiveDegree, "degree " + std::to_string(v) + " is not positive");
    if (raw.size() < 3)
      throw Error(Errc::GMin,
                  "need at least 3 generators; with g = 2 the category is that of a weighted "
                  "polynomial ring k[x0,x1] and is not handled here");
    for (auto v : raw)
      if (v > std::numeric_limits<int>::max() / 4)
        throw Error(Errc::NonPositiveDegree, "degree " + std::to_string(v) + " is out of range");

    DegreeData dd;
    dd.degrees_.assign(raw.begin(), raw.end());
    std::sort(dd.degrees_.begin(), dd.degrees_.end());
    const std::size_t g = dd.degrees_.size();
    dd.d_ = dd.degrees_.front() + dd.degrees_.back();
    for (std::size_t i = 0; i < g; ++i) {
      if (dd.degrees_[i] + dd.degrees_[g - 1 - i] != dd.d_)
        throw Error(Errc::PairingBroken, "d_" + std::to_string(i + 1) + " + d_" + std::to_string(g - i) +
                                             " = " + std::to_string(dd.degrees_[i] + dd.degrees_[g - 1 - i]) +
                                             " differs from " + std::to_string(dd.d_));
    }
    int common = 0;
    for (int v : dd.degrees_) common = std::gcd(common, v);
    if (common != 1) throw Error(Errc::GcdNotOne, "gcd of the degrees is " + std::to_string(common));
    dd.ell_ = std::accumulate(dd.degrees_.begin(), dd.degrees_.end(), 0);
    for (int v : dd.degrees_) ++dd.mult_[v];
    return dd;
  }

  static DegreeData validate(std::initializer_list<std::int64_t> raw) {
    std::vector<std::int64_t> v(raw);
    return validate(std::span<const std::int64_t>(v));
  }

  const std::vector<int>& degrees() const { return degrees_; }
  int g() const { return static_cast<int>(degrees_.size()); }
  int d() const { return d_; }
  int ell() const { return ell_; }
  /// n_j: number of generators of degree j.
  int multiplicity(int j) const {
    auto it = mult_.find(j);
    return it == mult_.end() ? 0 : it->second;
  }
  const std::map<int, int>& multiplicities() const { return mult_; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < degrees_.size(); ++i) s += (i ? "," : "") + std::to_string(degrees_[i]);
    return s + ")";
  }

  friend bool operator==(const DegreeData& a, const DegreeData& b) { return a.degrees_ == b.degrees_; }

 private:
  DegreeData() = default;

  std::vector<int> degrees_;
  int d_ = 0;
  int ell_ = 0;
  std::map<int, int> mult_;
};

/// f(t) = t^d - sum_j n_j t^j + 1 as a dense polynomial.
inline IntPoly defining_int_poly(const DegreeData& dd) {
  std::vector<Int> c(static_cast<std::size_t>(dd.d()) + 1);
  c[0] += 1;
  c[static_cast<std::size_t>(dd.d())] += 1;
  for (auto [j, n] : dd.multiplicities()) c[static_cast<std::size_t>(j)] -= n;
  return IntPoly(std::move(c));
}

inline LaurentPoly defining_poly(const DegreeData& dd) { return LaurentPoly::from_poly(defining_int_poly(dd)); }

/// Every valid degree vector with total ell <= max_ell, ordered by ell then
/// lexicographically.
inline std::vector<DegreeData> enumerate_degree_data(int max_ell) {
  std::vector<std::vector<std::int64_t>> candidates;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, int min_part, int budget) -> void {
    if (cur.size() >= 3) candidates.push_back(cur);
    for (int v = min_part; v <= budget; ++v) {
      cur.push_back(v);
      self(self, v, budget - v);
      cur.pop_back();
    }
  };
  rec(rec, 1, max_ell);
  std::vector<DegreeData> out;
  for (const auto& c : candidates) {
    try {
      out.push_back(DegreeData::validate(std::span<const std::int64_t>(c)));
    } catch (const Error&) {
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const DegreeData& a, const DegreeData& b) {
    if (a.ell() != b.ell()) return a.ell() < b.ell();
    return a.degrees() < b.degrees();
  });
  return out;
}

}  // namespace k0qgr
