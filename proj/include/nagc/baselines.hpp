#pragma once

#include <cstdint>
#include <vector>

#include "nagc/dense_matrix.hpp"
#include "nagc/sparse_graph.hpp"

// Reference clustering methods used for comparison: symmetric NMF on the
// topology alone, plain NMF and Lloyd k-means on the attributes alone.

namespace nagc {

struct SnmfResult {
  DenseMatrix U;
  std::vector<double> loss_trace;  // ‖S − U Uᵀ‖²_F after each round
};

// U ← U ⊙ (S U) ⊘ (U (UᵀU) + eps)
DenseMatrix snmf_update(const SparseSymGraph& s, const DenseMatrix& u, double eps);

SnmfResult snmf_fit(const SparseSymGraph& s, std::size_t k1, std::size_t iters,
                    std::uint64_t seed, double eps = 1e-10);

struct NmfResult {
  DenseMatrix U;
  DenseMatrix V;
  std::vector<double> loss_trace;  // ‖X − U Vᵀ‖²_F after each round
};

// Alternating multiplicative updates; the loss is non-increasing per round.
NmfResult nmf_fit(const DenseMatrix& x, std::size_t k1, std::size_t iters,
                  std::uint64_t seed, double eps = 1e-10);

struct KmeansResult {
  std::vector<int> labels;
  DenseMatrix centroids;               // k x dims
  double inertia = 0.0;                // within-cluster sum of squares
  std::vector<double> inertia_trace;   // per Lloyd iteration of the best restart
};

// Lloyd iterations with deterministic seeding; empty clusters are reseeded
// from the point farthest from its centroid; best of `restarts` by inertia.
KmeansResult kmeans_fit(const DenseMatrix& x, std::size_t k, std::size_t max_iters,
                        std::size_t restarts, std::uint64_t seed);

}  // namespace nagc
