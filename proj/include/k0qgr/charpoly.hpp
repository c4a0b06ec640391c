#pragma once

// Characteristic polynomial of the second graph, two ways: by exact
// determinant expansion, and by summing (-1)^{#cycles} over disjoint unions of
// simple cycles. The cycle sum is taken on the generator graph, where a union
// covering X corresponds to a union in the second graph on d(X) vertices.

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "k0qgr/degree_data.hpp"
#include "k0qgr/graph.hpp"
#include "k0qgr/matrix.hpp"
#include "k0qgr/polynomial.hpp"

namespace k0qgr {

inline LaurentPoly char_poly_det(const SecondGraph& gr) {
  return LaurentPoly::from_poly(characteristic_polynomial(gr.adjacency()));
}

/// A simple cycle given by its vertex sequence, starting at its smallest
/// vertex.
using Cycle = std::vector<int>;

/// Largest g for which the subset recursions below are attempted.
inline constexpr int kMaxCycleSumGenerators = 20;

/// For every subset X of generators (bitmask), the sum of (-1)^{#components}
/// over spanning disjoint unions of simple cycles of the full subgraph on X.
/// Uses Hamiltonian-cycle counts per subset and the recursion that removes
/// the cycle through the smallest member.
inline std::vector<std::int64_t> cycle_cover_sums(int g) {
  if (g < 1 || g > kMaxCycleSumGenerators) throw std::invalid_argument("cycle_cover_sums: unsupported g");
  const HatGraph full(g, (std::uint64_t{1} << g) - 1);
  const std::size_t subsets = std::size_t{1} << g;

  // paths[mask][v]: Hamiltonian paths of mask starting at its lowest member
  // and ending at v.
  std::vector<std::int64_t> paths(subsets * static_cast<std::size_t>(g), 0);
  std::vector<std::int64_t> cycles(subsets, 0);
  for (int s = 0; s < g; ++s) paths[(std::size_t{1} << s) * g + s] = 1;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const int low = std::countr_zero(mask);
    for (int v = 0; v < g; ++v) {
      const std::int64_t cnt = paths[mask * g + v];
      if (cnt == 0) continue;
      if (v == low ? std::popcount(mask) == 1 && full.arrow(v, low) : full.arrow(v, low)) cycles[mask] += cnt;
      for (int w = low + 1; w < g; ++w) {
        if (mask & (std::size_t{1} << w)) continue;
        if (full.arrow(v, w)) paths[(mask | (std::size_t{1} << w)) * g + w] += cnt;
      }
    }
  }

  std::vector<std::int64_t> sums(subsets, 0);
  sums[0] = 1;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const std::size_t low_bit = mask & (~mask + 1);
    const std::size_t rest = mask ^ low_bit;
    // T = low_bit | sub for every sub of rest
    std::int64_t total = 0;
    for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
      const std::size_t t = sub | low_bit;
      if (cycles[t] != 0) total -= cycles[t] * sums[mask ^ t];
      if (sub == 0) break;
    }
    sums[mask] = total;
  }
  return sums;
}

/// Every spanning disjoint union of simple cycles of a generator subgraph,
/// each union a list of cycles in generator indices. Exponential; meant for
/// small subsets and for illustration.
inline std::vector<std::vector<Cycle>> enumerate_cycle_covers(const HatGraph& x) {
  std::vector<std::vector<Cycle>> out;
  const auto& mem = x.members();
  const std::size_t n = mem.size();
  std::vector<bool> used(n, false);
  std::vector<Cycle> current;
  auto next_free = [&]() -> std::size_t {
    for (std::size_t k = 0; k < n; ++k)
      if (!used[k]) return k;
    return n;
  };
  std::function<void()> cover = [&]() {
    const std::size_t start = next_free();
    if (start == n) {
      out.push_back(current);
      return;
    }
    Cycle path{mem[start]};
    used[start] = true;
    std::function<void(std::size_t)> extend = [&](std::size_t at) {
      if (x.arrow(mem[at], mem[start])) {
        current.push_back(path);
        cover();
        current.pop_back();
      }
      for (std::size_t k = start + 1; k < n; ++k) {
        if (used[k] || !x.arrow(mem[at], mem[k])) continue;
        used[k] = true;
        path.push_back(mem[k]);
        extend(k);
        path.pop_back();
        used[k] = false;
      }
    };
    extend(start);
    used[start] = false;
  };
  cover();
  return out;
}

/// Coefficients c_1..c_ell of t^ell + c_1 t^{ell-1} + ... from cycle unions,
/// with c_i the sum of cover sums over generator subsets X with d(X) = i.
inline LaurentPoly char_poly_cycles(const SecondGraph& gr, const DegreeData& dd) {
  const int g = dd.g();
  const int ell = dd.ell();
  if (static_cast<int>(gr.size()) != ell) throw std::invalid_argument("char_poly_cycles: graph and degrees disagree");
  const auto sums = cycle_cover_sums(g);
  std::vector<Int> c(static_cast<std::size_t>(ell) + 1);
  c[0] = 1;
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    int dx = 0;
    for (int k = 0; k < g; ++k)
      if (mask & (std::size_t{1} << k)) dx += dd.degrees()[static_cast<std::size_t>(k)];
    c[static_cast<std::size_t>(dx)] += sums[mask];
  }
  LaurentPoly p;
  for (int i = 0; i <= ell; ++i) p.add_term(ell - i, c[static_cast<std::size_t>(i)]);
  return p;
}

/// c_i alone, with the contributing generator subsets.
struct CycleCoefficient {
  int index = 0;
  Int value = 0;
  std::vector<std::pair<std::uint64_t, std::int64_t>> contributions;  // (subset mask, cover sum)
};

inline CycleCoefficient cycle_coefficient(const DegreeData& dd, int i) {
  CycleCoefficient out;
  out.index = i;
  const auto sums = cycle_cover_sums(dd.g());
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    int dx = 0;
    for (int k = 0; k < dd.g(); ++k)
      if (mask & (std::size_t{1} << k)) dx += dd.degrees()[static_cast<std::size_t>(k)];
    if (dx != i) continue;
    out.value += sums[mask];
    out.contributions.emplace_back(mask, sums[mask]);
  }
  return out;
}

/// p_X(0) for the generator subgraph on X, from its exact determinant.
inline Int hat_constant_term(std::uint64_t mask, const DegreeData& dd) {
  if (mask == 0) throw std::invalid_argument("hat_constant_term: X must be nonempty");
  const HatGraph x(dd.g(), mask);
  const Int det = determinant(x.adjacency());
  return (x.size() % 2 == 0) ? det : Int(-det);
}

// ---------------------------------------------------------------------------
// Direct enumeration on the second graph (exponential in ell).

/// All simple cycles of the second graph, each starting at its smallest vertex.
inline std::vector<Cycle> simple_cycles(const SecondGraph& gr) {
  const auto succ = gr.successors();
  const int n = static_cast<int>(gr.size());
  std::vector<Cycle> out;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  Cycle path;
  std::function<void(int, int)> dfs = [&](int start, int at) {
    for (auto nb : succ[static_cast<std::size_t>(at)]) {
      const int v = static_cast<int>(nb);
      if (v == start) {
        out.push_back(path);
      } else if (v > start && !on_path[static_cast<std::size_t>(v)]) {
        on_path[static_cast<std::size_t>(v)] = true;
        path.push_back(v);
        dfs(start, v);
        path.pop_back();
        on_path[static_cast<std::size_t>(v)] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path[static_cast<std::size_t>(s)] = true;
    dfs(s, s);
    on_path[static_cast<std::size_t>(s)] = false;
  }
  return out;
}

/// Characteristic polynomial from a direct enumeration of disjoint unions of
/// simple cycles of the second graph. Also tallies unions by (vertex count,
/// component count) when `tally` is given.
inline LaurentPoly char_poly_cycles_direct(const SecondGraph& gr,
                                           std::map<std::pair<int, int>, std::int64_t>* tally = nullptr) {
  const auto succ = gr.successors();
  const int n = static_cast<int>(gr.size());
  std::vector<std::int64_t> coeff(static_cast<std::size_t>(n) + 1, 0);  // indexed by vertex count
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  int covered = 0, components = 0;

  std::function<void(int)> choose;
  std::function<void(int, int)> walk = [&](int start, int at) {
    for (auto nb : succ[static_cast<std::size_t>(at)]) {
      const int v = static_cast<int>(nb);
      if (v == start) {
        ++components;
        choose(start + 1);
        --components;
      } else if (v > start && !used[static_cast<std::size_t>(v)]) {
        used[static_cast<std::size_t>(v)] = true;
        ++covered;
        walk(start, v);
        --covered;
        used[static_cast<std::size_t>(v)] = false;
      }
    }
  };
  choose = [&](int from) {
    int v = from;
    while (v < n && used[static_cast<std::size_t>(v)]) ++v;
    if (v >= n) {
      coeff[static_cast<std::size_t>(covered)] += (components % 2 == 0) ? 1 : -1;
      if (tally) ++(*tally)[{covered, components}];
      return;
    }
    choose(v + 1);  // v not covered
    used[static_cast<std::size_t>(v)] = true;
    ++covered;
    walk(v, v);
    --covered;
    used[static_cast<std::size_t>(v)] = false;
  };
  choose(0);

  LaurentPoly p;
  for (int i = 0; i <= n; ++i) p.add_term(n - i, Int(coeff[static_cast<std::size_t>(i)]));
  return p;
}

}  // namespace k0qgr
