#pragma once

#include <vector>

#include "nagc/kernels.hpp"
#include "nagc/model.hpp"
#include "nagc/sparse_graph.hpp"

// The clustering model: PU-weighted symmetric factorization of the adjacency
// matrix combined with a sigmoid-projected factorization of the attribute
// matrix, fit by alternating multiplicative updates.
//
// Objective (the function `loss` evaluates and the `grad_*` functions
// differentiate):
//
//   L(U, V, H) = 1/2 [ ρ Σ_{(i,j) observed} (sᵢⱼ − [U Uᵀ]ᵢⱼ)²
//                      + (1−ρ) Σ_{(i,j) unobserved} [U Uᵀ]ᵢⱼ² ]
//                + λ/2 ‖X − f(U H) Vᵀ‖²_F
//
// with f the element-wise sigmoid. Sums run over ordered pairs, so each
// undirected edge contributes twice; diagonal pairs without a self-loop
// belong to the unobserved set. The unobserved sum is evaluated through
// ‖UᵀU‖²_F minus the edge-supported part, never touching n² pairs.

namespace nagc {

// Wall-clock split of the update work: everything whose cost scales with the
// attribute count m lands in `attribute_seconds`, the rest in
// `topology_seconds`.
struct PhaseTimers {
  double topology_seconds = 0.0;
  double attribute_seconds = 0.0;
};

// Rescales every edge weight by sum(X) / sum(S) (entry-wise sums) so the two
// reconstruction terms live on comparable scales. Rejects an edgeless graph
// or an all-zero attribute matrix.
SparseSymGraph normalize_adjacency(const SparseSymGraph& s, const DenseMatrix& x);

LossBreakdown loss(const SparseSymGraph& s, const DenseMatrix& x, const FactorModel& m,
                   const Hyperparams& hp);

// Analytic gradients of `loss` (the Lagrange multiplier terms used to derive
// the updates are not part of these).
DenseMatrix grad_u(const SparseSymGraph& s, const DenseMatrix& x, const FactorModel& m,
                   const Hyperparams& hp);
DenseMatrix grad_v(const SparseSymGraph& s, const DenseMatrix& x, const FactorModel& m,
                   const Hyperparams& hp);
DenseMatrix grad_h(const SparseSymGraph& s, const DenseMatrix& x, const FactorModel& m,
                   const Hyperparams& hp);

// One multiplicative update per factor. Non-negative in, non-negative out;
// the epsilon guard keeps every denominator positive.
DenseMatrix update_u(const SparseSymGraph& s, const DenseMatrix& x, const FactorModel& m,
                     const Hyperparams& hp, PhaseTimers* timers = nullptr);
DenseMatrix update_v(const SparseSymGraph& s, const DenseMatrix& x, const FactorModel& m,
                     const Hyperparams& hp, PhaseTimers* timers = nullptr);
DenseMatrix update_h(const SparseSymGraph& s, const DenseMatrix& x, const FactorModel& m,
                     const Hyperparams& hp, PhaseTimers* timers = nullptr);

// Uniform (0, 1] factors from the seed. U is drawn first, so a baseline
// seeded identically starts from the same U.
FactorModel init_random(std::size_t n, std::size_t m, const Hyperparams& hp);

// U from k-means over attribute rows, V from k-means over attribute columns,
// both one-hot plus uniform (0, 0.01] noise; H random as in init_random.
FactorModel init_kmeans(const DenseMatrix& x, const Hyperparams& hp);

struct FitResult {
  FactorModel model;
  std::vector<LossBreakdown> trace;  // recorded after every update round
};

// Normalize, initialize, then hp.iters rounds of U, V, H updates in that
// order. Throws NumericError naming the iteration if a factor or a recorded
// loss stops being finite.
FitResult fit(const SparseSymGraph& s, const DenseMatrix& x, const Hyperparams& hp,
              PhaseTimers* timers = nullptr);

// The update loop on an already-preprocessed graph and a caller-supplied
// initial model. `fit` delegates here; tests drive it directly.
FitResult fit_from(const SparseSymGraph& s_pre, const DenseMatrix& x, const Hyperparams& hp,
                   FactorModel model, PhaseTimers* timers = nullptr);

// Row-wise argmax of U; ties resolve to the lowest column index.
std::vector<int> assign_clusters(const DenseMatrix& u);
std::vector<int> assign_clusters(const FactorModel& m);

}  // namespace nagc
