#pragma once

// Irreducibility, aperiodicity and primitivity of the second graph, and its
// Perron root by power iteration.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "k0qgr/error.hpp"
#include "k0qgr/graph.hpp"

namespace k0qgr {

namespace detail {

inline std::vector<bool> reachable(const std::vector<std::vector<std::size_t>>& adj, std::size_t from) {
  std::vector<bool> seen(adj.size(), false);
  std::queue<std::size_t> q;
  q.push(from);
  seen[from] = true;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (auto v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        q.push(v);
      }
  }
  return seen;
}

}  // namespace detail

inline bool strongly_connected(const SecondGraph& gr) {
  if (gr.size() == 0) return false;
  const auto succ = gr.successors();
  std::vector<std::vector<std::size_t>> pred(gr.size());
  for (std::size_t u = 0; u < gr.size(); ++u)
    for (auto v : succ[u]) pred[v].push_back(u);
  const auto fwd = detail::reachable(succ, 0);
  const auto bwd = detail::reachable(pred, 0);
  for (std::size_t v = 0; v < gr.size(); ++v)
    if (!fwd[v] || !bwd[v]) return false;
  return true;
}

/// gcd of the lengths of simple cycles through `vertex`; stops as soon as the
/// gcd reaches 1. Returns 0 when no cycle passes through the vertex.
inline int period_through(const SecondGraph& gr, std::size_t vertex) {
  const auto succ = gr.successors();
  std::vector<bool> on_path(gr.size(), false);
  int g = 0;
  std::function<bool(std::size_t, int)> dfs = [&](std::size_t at, int len) {
    for (auto v : succ[at]) {
      if (v == vertex) {
        g = std::gcd(g, len);
        if (g == 1) return true;
      } else if (!on_path[v]) {
        on_path[v] = true;
        const bool done = dfs(v, len + 1);
        on_path[v] = false;
        if (done) return true;
      }
    }
    return false;
  };
  on_path[vertex] = true;
  dfs(vertex, 1);
  return g;
}

/// Period of a strongly connected graph from BFS levels: gcd over edges u->v
/// of level(u) + 1 - level(v).
inline int period_by_levels(const SecondGraph& gr) {
  const auto succ = gr.successors();
  std::vector<long> level(gr.size(), -1);
  std::queue<std::size_t> q;
  level[0] = 0;
  q.push(0);
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (auto v : succ[u])
      if (level[v] < 0) {
        level[v] = level[u] + 1;
        q.push(v);
      }
  }
  long g = 0;
  for (std::size_t u = 0; u < gr.size(); ++u)
    for (auto v : succ[u])
      if (level[u] >= 0 && level[v] >= 0) g = std::gcd(g, std::labs(level[u] + 1 - level[v]));
  return static_cast<int>(g);
}

/// Smallest n <= (ell-1)^2 + 1 with every entry of M^n positive, from exact
/// powers of the 0/1 support pattern; nullopt if none exists.
inline std::optional<int> primitivity_witness(const SecondGraph& gr) {
  const std::size_t n = gr.size();
  if (n == 0) return std::nullopt;
  const int bound = static_cast<int>((n - 1) * (n - 1) + 1);
  std::vector<std::uint8_t> base(n * n), power(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) base[u * n + v] = gr.has_edge(u, v) ? 1 : 0;
  power = base;
  for (int k = 1; k <= bound; ++k) {
    bool all = true;
    for (auto x : power)
      if (!x) {
        all = false;
        break;
      }
    if (all) return k;
    std::vector<std::uint8_t> next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m < n; ++m) {
        if (!power[i * n + m]) continue;
        for (std::size_t j = 0; j < n; ++j) next[i * n + j] |= base[m * n + j];
      }
    power = std::move(next);
  }
  return std::nullopt;
}

struct PerronEstimate {
  double value = 0;
  double lower = 0;  // Collatz-Wielandt bracket
  double upper = 0;
  int iterations = 0;
};

/// Perron root of a primitive second graph by power iteration, stopped once
/// the Collatz-Wielandt bracket min_i (Mx)_i/x_i <= rho <= max_i (Mx)_i/x_i
/// is narrower than tol relative to rho.
inline PerronEstimate perron_root(const SecondGraph& gr, double tol, int max_iterations = 2'000'000) {
  const std::size_t n = gr.size();
  const auto succ = gr.successors();
  std::vector<long double> x(n, 1.0L), y(n);
  PerronEstimate est;
  for (int it = 1; it <= max_iterations; ++it) {
    // y = M^T x with the arrow direction as rows: spectra agree
    std::fill(y.begin(), y.end(), 0.0L);
    for (std::size_t u = 0; u < n; ++u)
      for (auto v : succ[u]) y[u] += x[v];
    long double lo = 1e300L, hi = 0, norm = 0;
    for (std::size_t u = 0; u < n; ++u) {
      const long double r = y[u] / x[u];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      norm = std::max(norm, y[u]);
    }
    est.lower = static_cast<double>(lo);
    est.upper = static_cast<double>(hi);
    est.value = static_cast<double>((lo + hi) / 2);
    est.iterations = it;
    if (hi - lo <= static_cast<long double>(tol) * lo) return est;
    for (std::size_t u = 0; u < n; ++u) x[u] = y[u] / norm;
  }
  throw Error(Errc::NoConvergence, "power iteration did not converge in " + std::to_string(max_iterations) + " steps");
}

struct PrimitivityReport {
  bool strongly_connected = false;
  int period = 0;
  std::optional<int> primitivity_witness;
  double perron_root = 0;

  bool passed() const { return strongly_connected && period == 1 && primitivity_witness.has_value(); }
};

/// Runs every check and throws NotPrimitive if any fails.
inline PrimitivityReport certify_primitive(const SecondGraph& gr, double perron_tol = 1e-12) {
  PrimitivityReport rep;
  rep.strongly_connected = strongly_connected(gr);
  // alpha_{10} is vertex 0 in lexicographic order
  rep.period = period_through(gr, 0);
  rep.primitivity_witness = primitivity_witness(gr);
  if (!rep.passed())
    throw Error(Errc::NotPrimitive, "second graph fails: strongly_connected=" +
                                        std::to_string(rep.strongly_connected) + " period=" +
                                        std::to_string(rep.period) +
                                        " witness=" + (rep.primitivity_witness ? "yes" : "none"));
  rep.perron_root = perron_root(gr, perron_tol).value;
  return rep;
}

}  // namespace k0qgr
