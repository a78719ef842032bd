#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "nagc/dense_matrix.hpp"
#include "nagc/sparse_graph.hpp"

// Matrix primitives specialized for the multiplicative update rules.
//
// Every kernel is a pure function of its arguments and is safe to call
// concurrently on shared read-only inputs. Kernels may parallelize over
// output rows with OpenMP, but every output element is produced by a single
// serial reduction in a fixed order, so results are bit-identical for any
// thread count, matching the serial reference implementations in
// nagc::reference, which the tests and the kernel benchmark compare against.
//
// None of the graph kernels materializes an n-by-n matrix: the masked Gram
// products iterate edges, and the complement product uses the identity
//   (U Uᵀ ⊙ W') U = U (UᵀU) − (U Uᵀ ⊙ W) U,   W' = 1 − W.

namespace nagc {

// Runtime switch for the OpenMP paths; `false` forces serial execution.
bool parallel_kernels_enabled();
void set_parallel_kernels(bool enabled);

namespace detail {

template <typename Fn>
void parallel_rows(std::size_t count, Fn&& fn) {
  if (parallel_kernels_enabled()) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
      fn(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < count; ++i) fn(i);
  }
}

}  // namespace detail

// Logistic function, argument clamped to [−500, 500] before exponentiation
// and the result nudged below 1 so outputs stay inside the open interval
// (0, 1) even where the quotient rounds to 1.
inline double sigmoid_scalar(double x) {
  x = std::clamp(x, -500.0, 500.0);
  double s;
  if (x >= 0.0) {
    s = 1.0 / (1.0 + std::exp(-x));
  } else {
    const double t = std::exp(x);
    s = t / (1.0 + t);
  }
  if (s >= 1.0) s = std::nextafter(1.0, 0.0);
  return s;
}

// Element-wise logistic map; outputs in (0, 1).
DenseMatrix sigmoid_map(const DenseMatrix& m);

// Element-wise logistic derivative, computed exactly as s (1 − s) with
// s = sigmoid_scalar; outputs in (0, 0.25].
DenseMatrix sigmoid_deriv_map(const DenseMatrix& m);

// S · U by edge iteration; cost O(stored_entries · cols).
DenseMatrix sparse_dense_mul(const SparseSymGraph& s, const DenseMatrix& u);

// (U Uᵀ ⊙ W) U without forming U Uᵀ: row i accumulates (uᵢ·uⱼ) uⱼ over the
// stored neighbors j of i. Cost O(stored_entries · cols).
DenseMatrix masked_gram_times(const DenseMatrix& u, const SparseSymGraph& s);

// (U Uᵀ ⊙ W') U with W' = 1 − W (diagonal included in W' where no self-loop
// exists). Cost O(n · cols² + stored_entries · cols).
DenseMatrix complement_gram_times(const DenseMatrix& u, const SparseSymGraph& s);

// Plain products. matmul_tn(a, b) = aᵀ b; matmul_nt(a, b) = a bᵀ;
// gram(a) = aᵀ a.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix matmul_nt(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix gram(const DenseMatrix& a);

DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b);

// out = a + alpha * b
DenseMatrix add_scaled(const DenseMatrix& a, double alpha, const DenseMatrix& b);
DenseMatrix scale(const DenseMatrix& a, double alpha);

// base ⊙ num ⊘ (den + eps). With the guard, a 0/0 cell yields 0.
DenseMatrix multiplicative_update(const DenseMatrix& base, const DenseMatrix& num,
                                  const DenseMatrix& den, double eps);

// Deterministic reductions: per-row partial sums merged serially in row
// order, so totals do not depend on the thread count.
double frobenius_sq(const DenseMatrix& a);
double dot_all(const DenseMatrix& a, const DenseMatrix& b);

// Serial reference implementations of the kernels above, kept as the
// comparison baseline for correctness tests and the benchmark target.
namespace reference {

DenseMatrix sigmoid_map(const DenseMatrix& m);
DenseMatrix sigmoid_deriv_map(const DenseMatrix& m);
DenseMatrix sparse_dense_mul(const SparseSymGraph& s, const DenseMatrix& u);
DenseMatrix masked_gram_times(const DenseMatrix& u, const SparseSymGraph& s);
DenseMatrix complement_gram_times(const DenseMatrix& u, const SparseSymGraph& s);
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix gram(const DenseMatrix& a);

}  // namespace reference

}  // namespace nagc
