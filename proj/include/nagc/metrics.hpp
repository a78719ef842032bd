#pragma once

#include <span>

#include "nagc/dense_matrix.hpp"
#include "nagc/sparse_graph.hpp"

namespace nagc {

// Hubert–Arabie adjusted Rand index between two partitions. Symmetric,
// invariant under relabeling, 1 for identical partitions; returns 0 when the
// chance-correction denominator vanishes.
double adjusted_rand_index(std::span<const int> labels_a, std::span<const int> labels_b);

// Newman modularity of a partition over the binarized graph (weights
// ignored, self-loops dropped). Returns 0 for an edgeless graph.
double modularity(const SparseSymGraph& g, std::span<const int> labels);

// Size-weighted mean over clusters of the per-attribute binary entropy (in
// bits) of attribute presence, attributes binarized at > 0. Lower means
// attribute-homogeneous clusters.
double average_entropy(const DenseMatrix& x, std::span<const int> labels);

}  // namespace nagc
