#pragma once

// The expanded quiver of a set of degrees, its "second graph" on arrows, and
// the complete-minus-one-arrow graph on the generators.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "k0qgr/degree_data.hpp"
#include "k0qgr/matrix.hpp"

namespace k0qgr {

/// Vertex of the expanded quiver: the hub (i == 0) or x_{ij}, 1 <= j < d_i.
struct QuiverVertex {
  int i = 0;
  int j = 0;

  bool is_star() const { return i == 0; }
  std::string name() const { return is_star() ? "star" : "x_" + std::to_string(i) + "_" + std::to_string(j); }
  friend bool operator==(const QuiverVertex&, const QuiverVertex&) = default;
};

/// Arrow alpha_{ij}, 1 <= i <= g, 0 <= j < d_i.
struct ArrowLabel {
  int i = 0;
  int j = 0;

  std::string name() const { return "a_" + std::to_string(i) + "_" + std::to_string(j); }
  friend bool operator==(const ArrowLabel&, const ArrowLabel&) = default;
};

/// One vertex (the hub) with each loop x_i subdivided into a directed cycle
/// of length d_i through new vertices x_{i1}, ..., x_{i,d_i-1}.
class QuiverGraph {
 public:
  struct Arrow {
    ArrowLabel label;
    std::size_t tail = 0;  // index into vertices()
    std::size_t head = 0;
  };

  explicit QuiverGraph(const DegreeData& dd) {
    vertices_.push_back({0, 0});
    for (int i = 1; i <= dd.g(); ++i)
      for (int j = 1; j < dd.degrees()[static_cast<std::size_t>(i - 1)]; ++j) vertices_.push_back({i, j});
    for (int i = 1; i <= dd.g(); ++i) {
      const int di = dd.degrees()[static_cast<std::size_t>(i - 1)];
      for (int j = 0; j < di; ++j) {
        const QuiverVertex tail = j == 0 ? QuiverVertex{0, 0} : QuiverVertex{i, j};
        const QuiverVertex head = j + 1 == di ? QuiverVertex{0, 0} : QuiverVertex{i, j + 1};
        arrows_.push_back({{i, j}, index_of(tail), index_of(head)});
      }
    }
  }

  const std::vector<QuiverVertex>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::size_t index_of(const QuiverVertex& v) const {
    for (std::size_t k = 0; k < vertices_.size(); ++k)
      if (vertices_[k] == v) return k;
    throw std::out_of_range("QuiverGraph: no vertex " + v.name());
  }

  std::string to_dot() const {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (const auto& v : vertices_) os << "  " << v.name() << ";\n";
    for (const auto& a : arrows_)
      os << "  " << vertices_[a.tail].name() << " -> " << vertices_[a.head].name() << " [label=\"" << a.label.name()
         << "\"];\n";
    os << "}\n";
    return os.str();
  }

 private:
  std::vector<QuiverVertex> vertices_;
  std::vector<Arrow> arrows_;
};

/// Vertices are the arrows of the quiver, ordered lexicographically by (i, j);
/// u -> v when v can follow u, except alpha_{1,d_1-1} -> alpha_{g,0}.
class SecondGraph {
 public:
  explicit SecondGraph(const QuiverGraph& q) {
    const auto& arrows = q.arrows();
    const std::size_t n = arrows.size();
    edge_.assign(n * n, 0);
    int max_i = 0;
    for (const auto& a : arrows) {
      labels_.push_back(a.label);
      max_i = std::max(max_i, a.label.i);
    }
    // alpha_{1,d_1'} is the last arrow of the first cycle
    std::size_t last_of_first = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (arrows[k].label.i == 1) last_of_first = k;
    std::size_t first_of_last = 0;
    for (std::size_t k = n; k-- > 0;)
      if (arrows[k].label.i == max_i && arrows[k].label.j == 0) first_of_last = k;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (arrows[u].head == arrows[v].tail && !(u == last_of_first && v == first_of_last)) edge_[u * n + v] = 1;
    removed_ = {last_of_first, first_of_last};
  }

  explicit SecondGraph(const DegreeData& dd) : SecondGraph(QuiverGraph(dd)) {}

  std::size_t size() const { return labels_.size(); }
  const std::vector<ArrowLabel>& labels() const { return labels_; }
  bool has_edge(std::size_t u, std::size_t v) const { return edge_[u * size() + v] != 0; }
  std::size_t edge_count() const {
    std::size_t c = 0;
    for (auto e : edge_) c += e;
    return c;
  }
  /// The composable pair that is left out.
  std::pair<std::size_t, std::size_t> removed_pair() const { return removed_; }

  std::size_t index_of(const ArrowLabel& a) const {
    for (std::size_t k = 0; k < labels_.size(); ++k)
      if (labels_[k] == a) return k;
    throw std::out_of_range("SecondGraph: no vertex " + a.name());
  }

  /// Adjacency matrix with entry (u, v) = number of arrows v -> u.
  Matrix<Int> adjacency() const {
    const std::size_t n = size();
    Matrix<Int> m(n, n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) m(u, v) = has_edge(v, u) ? 1 : 0;
    return m;
  }

  std::vector<std::vector<std::size_t>> successors() const {
    std::vector<std::vector<std::size_t>> out(size());
    for (std::size_t u = 0; u < size(); ++u)
      for (std::size_t v = 0; v < size(); ++v)
        if (has_edge(u, v)) out[u].push_back(v);
    return out;
  }

  std::string to_dot() const {
    std::ostringstream os;
    os << "digraph second {\n";
    for (const auto& l : labels_) os << "  " << l.name() << ";\n";
    for (std::size_t u = 0; u < size(); ++u)
      for (std::size_t v = 0; v < size(); ++v)
        if (has_edge(u, v)) os << "  " << labels_[u].name() << " -> " << labels_[v].name() << ";\n";
    os << "}\n";
    return os.str();
  }

 private:
  std::vector<ArrowLabel> labels_;
  std::vector<std::uint8_t> edge_;  // row-major, edge_[u*n+v] for u -> v
  std::pair<std::size_t, std::size_t> removed_{0, 0};
};

/// Full subgraph on a subset X of {x_1, ..., x_g} of the graph with an arrow
/// x_i -> x_j for every pair except (x_1, x_g). Bit k of the mask is x_{k+1}.
class HatGraph {
 public:
  HatGraph(int g, std::uint64_t mask) : g_(g), mask_(mask) {
    for (int k = 0; k < g; ++k)
      if (mask & (std::uint64_t{1} << k)) members_.push_back(k);
  }

  int g() const { return g_; }
  std::uint64_t mask() const { return mask_; }
  /// 0-based generator indices in increasing order.
  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  /// Arrow between 0-based generator indices.
  bool arrow(int from, int to) const { return !(from == 0 && to == g_ - 1); }

  Matrix<Int> adjacency() const {
    const std::size_t n = size();
    Matrix<Int> m(n, n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) m(u, v) = arrow(members_[v], members_[u]) ? 1 : 0;
    return m;
  }

 private:
  int g_;
  std::uint64_t mask_;
  std::vector<int> members_;
};

}  // namespace k0qgr
