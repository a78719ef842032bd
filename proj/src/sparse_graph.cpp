#include "nagc/sparse_graph.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace nagc {

SparseSymGraph::SparseSymGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count) {
  for (Edge& e : edges) {
    if (e.i >= n_ || e.j >= n_) throw InputError("graph edge endpoint out of range");
    if (!(e.w > 0.0) || !std::isfinite(e.w))
      throw InputError("graph edge weight must be positive and finite");
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (std::size_t e = 1; e < edges.size(); ++e)
    if (edges[e].i == edges[e - 1].i && edges[e].j == edges[e - 1].j)
      throw InputError("duplicate edge in graph construction");
  edges_ = std::move(edges);

  // Symmetrize into directed entries and sort once; rows end up ordered by
  // column, which fixes the (deterministic) accumulation order of every
  // edge-iterating kernel.
  struct Entry {
    std::size_t row, col;
    double w;
  };
  std::vector<Entry> entries;
  entries.reserve(2 * edges_.size());
  for (const Edge& e : edges_) {
    entries.push_back({e.i, e.j, e.w});
    if (e.i != e.j)
      entries.push_back({e.j, e.i, e.w});
    else
      ++self_loops_;
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  ptr_.assign(n_ + 1, 0);
  for (const Entry& e : entries) ++ptr_[e.row + 1];
  for (std::size_t i = 0; i < n_; ++i) ptr_[i + 1] += ptr_[i];
  col_.reserve(entries.size());
  val_.reserve(entries.size());
  for (const Entry& e : entries) {
    col_.push_back(e.col);
    val_.push_back(e.w);
  }
}

double SparseSymGraph::weight_sum() const {
  double s = 0.0;
  for (double v : val_) s += v;
  return s;
}

SparseSymGraph SparseSymGraph::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor))
    throw InputError("graph scale factor must be positive and finite");
  std::vector<Edge> scaled_edges = edges_;
  for (Edge& e : scaled_edges) e.w *= factor;
  return SparseSymGraph(n_, std::move(scaled_edges));
}

std::vector<std::size_t> SparseSymGraph::simple_degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const Edge& e : edges_) {
    if (e.i == e.j) continue;
    ++deg[e.i];
    ++deg[e.j];
  }
  return deg;
}

bool operator==(const SparseSymGraph& a, const SparseSymGraph& b) {
  if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t e = 0; e < a.edges_.size(); ++e) {
    if (a.edges_[e].i != b.edges_[e].i || a.edges_[e].j != b.edges_[e].j ||
        a.edges_[e].w != b.edges_[e].w)
      return false;
  }
  return true;
}

}  // namespace nagc
