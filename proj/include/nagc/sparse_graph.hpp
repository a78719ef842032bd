#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nagc/errors.hpp"

namespace nagc {

// Sparse symmetric weighted adjacency matrix stored as CSR over the full
// (symmetrized) entry set. Zero entries are absent; the set of stored
// positions implicitly defines the observed-edge mask used by the
// PU-weighted loss. All stored weights are strictly positive.
class SparseSymGraph {
 public:
  struct Edge {
    std::size_t i;
    std::size_t j;  // canonical order i <= j
    double w;
  };

  // `edges` lists each undirected edge once, endpoints in any order.
  // Duplicate pairs, zero/negative weights and out-of-range endpoints are
  // rejected. A pair (v, v) is a self-loop and is stored once in the CSR.
  SparseSymGraph(std::size_t vertex_count, std::vector<Edge> edges);

  static SparseSymGraph empty(std::size_t vertex_count) {
    return SparseSymGraph(vertex_count, {});
  }

  std::size_t vertex_count() const { return n_; }

  // Number of undirected edges (a self-loop counts as one edge).
  std::size_t edge_count() const { return edges_.size(); }

  // CSR entry count: every off-diagonal edge is stored in both rows.
  std::size_t stored_entries() const { return col_.size(); }

  // Canonical undirected edge list, sorted by (i, j).
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const std::size_t> row_neighbors(std::size_t i) const {
    return {col_.data() + ptr_[i], ptr_[i + 1] - ptr_[i]};
  }
  std::span<const double> row_weights(std::size_t i) const {
    return {val_.data() + ptr_[i], ptr_[i + 1] - ptr_[i]};
  }

  // Sum over all matrix entries: off-diagonal weights count twice, loops once.
  double weight_sum() const;

  bool has_self_loops() const { return self_loops_ > 0; }

  // New graph with every weight multiplied by `factor` (> 0).
  SparseSymGraph scaled(double factor) const;

  // Number of non-loop edges incident to each vertex (loops excluded).
  std::vector<std::size_t> simple_degrees() const;

  friend bool operator==(const SparseSymGraph& a, const SparseSymGraph& b);

 private:
  std::size_t n_ = 0;
  std::size_t self_loops_ = 0;
  std::vector<Edge> edges_;         // canonical list, sorted
  std::vector<std::size_t> ptr_;    // CSR row pointers, size n_+1
  std::vector<std::size_t> col_;
  std::vector<double> val_;
};

}  // namespace nagc
