#include "loopcalc/homology.hpp"

#include <deque>

namespace loopcalc {

IntVector gate_counts(std::span<const Letter> w, std::size_t gate_count) {
  IntVector c = IntVector::Zero(static_cast<Eigen::Index>(gate_count));
  for (Letter l : w) c(static_cast<Eigen::Index>(StarFilledSurface::letter_gate(l))) += l > 0 ? 1 : -1;
  return c;
}

SpanningTree spanning_tree(const StarFilledSurface& s) {
  const DualGraph g = dual_graph(s);
  std::vector<std::vector<std::size_t>> incident(g.vertex_count());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    incident[g.edges[e].first].push_back(e);
    incident[g.edges[e].second].push_back(e);
  }
  SpanningTree t;
  t.in_tree.assign(g.edges.size(), false);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : incident[v]) {
      const std::size_t w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
      if (seen[w]) continue;
      seen[w] = true;
      t.in_tree[e] = true;
      queue.push_back(w);
    }
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!t.in_tree[e]) t.cotree.push_back(e);
  }
  return t;
}

Abelianization::Abelianization(const StarFilledSurface& s) : gate_count_(s.gate_count()), tree_(spanning_tree(s)) {}

IntVector Abelianization::operator()(std::span<const Letter> w) const {
  const IntVector all = gate_counts(w, gate_count_);
  IntVector out(rank());
  for (int i = 0; i < rank(); ++i) out(i) = all(static_cast<Eigen::Index>(tree_.cotree[i]));
  return out;
}

HermiteForm row_hermite(const IntMatrix& M) {
  const Eigen::Index m = M.rows();
  const Eigen::Index n = M.cols();
  HermiteForm f;
  f.H = M;
  f.U = IntMatrix::Identity(m, m);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < m; ++col) {
    // Euclid on the column below `row` until a single nonzero entry remains.
    while (true) {
      Eigen::Index pivot = -1;
      for (Eigen::Index r = row; r < m; ++r) {
        if (f.H(r, col) != 0 && (pivot < 0 || std::abs(f.H(r, col)) < std::abs(f.H(pivot, col)))) pivot = r;
      }
      if (pivot < 0) break;
      f.H.row(row).swap(f.H.row(pivot));
      f.U.row(row).swap(f.U.row(pivot));
      bool done = true;
      for (Eigen::Index r = row + 1; r < m; ++r) {
        const std::int64_t q = f.H(r, col) / f.H(row, col);
        if (q != 0) {
          f.H.row(r) -= q * f.H.row(row);
          f.U.row(r) -= q * f.U.row(row);
        }
        if (f.H(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (f.H(row, col) == 0) continue;
    if (f.H(row, col) < 0) {
      f.H.row(row) *= -1;
      f.U.row(row) *= -1;
    }
    ++row;
  }
  f.rank = static_cast<int>(row);
  return f;
}

IntMatrix quotient_projection(const IntMatrix& R) {
  const HermiteForm f = row_hermite(R);
  return f.U.bottomRows(R.rows() - f.rank);
}

}  // namespace loopcalc
