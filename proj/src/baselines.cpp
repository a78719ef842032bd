#include "nagc/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nagc/errors.hpp"
#include "nagc/kernels.hpp"
#include "nagc/rng.hpp"

namespace nagc {

namespace {

void fill_uniform(DenseMatrix& m, Rng& rng) {
  for (std::size_t i = 0; i < m.size(); ++i) m.data()[i] = rng.uniform_open0_closed1();
}

// ||S - U U^T||_F^2 without forming U U^T: edge-supported residuals plus
// ||U^T U||_F^2 minus the edge-supported reconstruction mass.
double snmf_loss(const SparseSymGraph& s, const DenseMatrix& u) {
  const std::size_t n = s.vertex_count(), k = u.cols();
  std::vector<double> resid(n, 0.0), recon(n, 0.0);
  detail::parallel_rows(n, [&](std::size_t i) {
    const double* ui = u.row(i);
    const auto cols = s.row_neighbors(i);
    const auto w = s.row_weights(i);
    double r = 0.0, q = 0.0;
    for (std::size_t e = 0; e < cols.size(); ++e) {
      const double* uj = u.row(cols[e]);
      double z = 0.0;
      for (std::size_t c = 0; c < k; ++c) z += ui[c] * uj[c];
      r += (w[e] - z) * (w[e] - z);
      q += z * z;
    }
    resid[i] = r;
    recon[i] = q;
  });
  double resid_sq = 0.0, recon_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    resid_sq += resid[i];
    recon_sq += recon[i];
  }
  return resid_sq + std::max(0.0, frobenius_sq(gram(u)) - recon_sq);
}

}  // namespace

DenseMatrix snmf_update(const SparseSymGraph& s, const DenseMatrix& u, double eps) {
  const DenseMatrix num = sparse_dense_mul(s, u);
  const DenseMatrix den = matmul(u, gram(u));
  return multiplicative_update(u, num, den, eps);
}

SnmfResult snmf_fit(const SparseSymGraph& s, std::size_t k1, std::size_t iters,
                    std::uint64_t seed, double eps) {
  if (k1 < 1) throw InputError("snmf_fit: k1 must be positive");
  Rng rng(seed);
  SnmfResult result;
  result.U = DenseMatrix(s.vertex_count(), k1);
  fill_uniform(result.U, rng);
  result.loss_trace.reserve(iters);
  for (std::size_t it = 0; it < iters; ++it) {
    result.U = snmf_update(s, result.U, eps);
    if (!result.U.all_finite()) throw NumericError("non-finite factor in snmf_fit", it);
    result.loss_trace.push_back(snmf_loss(s, result.U));
  }
  return result;
}

NmfResult nmf_fit(const DenseMatrix& x, std::size_t k1, std::size_t iters,
                  std::uint64_t seed, double eps) {
  if (!x.is_nonnegative()) throw InputError("nmf_fit: attributes must be non-negative");
  if (k1 < 1) throw InputError("nmf_fit: k1 must be positive");
  Rng rng(seed);
  NmfResult result;
  result.U = DenseMatrix(x.rows(), k1);
  result.V = DenseMatrix(x.cols(), k1);
  fill_uniform(result.U, rng);
  fill_uniform(result.V, rng);
  const double xsq = frobenius_sq(x);
  result.loss_trace.reserve(iters);
  for (std::size_t it = 0; it < iters; ++it) {
    result.U = multiplicative_update(result.U, matmul(x, result.V),
                                     matmul(result.U, gram(result.V)), eps);
    result.V = multiplicative_update(result.V, matmul_tn(x, result.U),
                                     matmul(result.V, gram(result.U)), eps);
    if (!result.U.all_finite() || !result.V.all_finite())
      throw NumericError("non-finite factor in nmf_fit", it);
    const double fit_sq = xsq - 2.0 * dot_all(matmul(x, result.V), result.U) +
                          dot_all(gram(result.U), gram(result.V));
    result.loss_trace.push_back(std::max(0.0, fit_sq));
  }
  return result;
}

namespace {

double sq_dist(const double* a, const double* b, std::size_t m) {
  double d = 0.0;
  for (std::size_t c = 0; c < m; ++c) {
    const double t = a[c] - b[c];
    d += t * t;
  }
  return d;
}

struct LloydRun {
  std::vector<int> labels;
  DenseMatrix centroids;
  double inertia = std::numeric_limits<double>::infinity();
  std::vector<double> inertia_trace;
};

LloydRun lloyd_once(const DenseMatrix& x, std::size_t k, std::size_t max_iters, Rng& rng) {
  const std::size_t n = x.rows(), m = x.cols();
  LloydRun run;
  run.centroids = DenseMatrix(k, m);

  // Forgy seeding from k distinct rows.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t c = 0; c < k; ++c) {
    const std::size_t pick = c + rng.below(n - c);
    std::swap(order[c], order[pick]);
    const double* src = x.row(order[c]);
    std::copy(src, src + m, run.centroids.row(c));
  }

  run.labels.assign(n, 0);
  std::vector<int> prev(n, -1);
  std::vector<double> dist(n, 0.0);
  std::vector<std::size_t> count(k, 0);

  // Assignment; ties go to the lowest centroid index.
  auto assign_all = [&]() {
    detail::parallel_rows(n, [&](std::size_t i) {
      const double* xi = x.row(i);
      std::size_t best = 0;
      double best_d = sq_dist(xi, run.centroids.row(0), m);
      for (std::size_t c = 1; c < k; ++c) {
        const double d = sq_dist(xi, run.centroids.row(c), m);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      run.labels[i] = static_cast<int>(best);
      dist[i] = best_d;
    });
  };

  // Defines labels and inertia even when no Lloyd iteration runs.
  assign_all();
  run.inertia = 0.0;
  for (std::size_t i = 0; i < n; ++i) run.inertia += dist[i];

  for (std::size_t it = 0; it < max_iters; ++it) {
    assign_all();

    // Give every empty cluster the farthest point of a non-singleton cluster.
    std::fill(count.begin(), count.end(), 0);
    for (int l : run.labels) ++count[static_cast<std::size_t>(l)];
    for (std::size_t c = 0; c < k; ++c) {
      if (count[c] > 0) continue;
      std::size_t far = n;
      double far_d = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (count[static_cast<std::size_t>(run.labels[i])] < 2) continue;
        if (dist[i] > far_d) {
          far_d = dist[i];
          far = i;
        }
      }
      if (far == n) break;  // fewer distinct points than clusters
      --count[static_cast<std::size_t>(run.labels[far])];
      run.labels[far] = static_cast<int>(c);
      ++count[c];
      dist[far] = 0.0;
    }

    // Centroid update (serial accumulation keeps runs reproducible).
    DenseMatrix sums(k, m);
    for (std::size_t i = 0; i < n; ++i) {
      const double* xi = x.row(i);
      double* srow = sums.row(static_cast<std::size_t>(run.labels[i]));
      for (std::size_t c = 0; c < m; ++c) srow[c] += xi[c];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (count[c] == 0) continue;
      double* crow = run.centroids.row(c);
      const double* srow = sums.row(c);
      const double inv = 1.0 / static_cast<double>(count[c]);
      for (std::size_t j = 0; j < m; ++j) crow[j] = srow[j] * inv;
    }

    double inertia = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      inertia += sq_dist(x.row(i), run.centroids.row(static_cast<std::size_t>(run.labels[i])), m);
    run.inertia = inertia;
    run.inertia_trace.push_back(inertia);

    if (run.labels == prev) break;
    prev = run.labels;
  }
  return run;
}

}  // namespace

KmeansResult kmeans_fit(const DenseMatrix& x, std::size_t k, std::size_t max_iters,
                        std::size_t restarts, std::uint64_t seed) {
  if (k == 0) throw InputError("kmeans_fit: k must be positive");
  if (x.rows() < k) throw InputError("kmeans_fit: need at least k points");
  if (restarts == 0) throw InputError("kmeans_fit: restarts must be positive");

  Rng rng(seed);
  LloydRun best;
  for (std::size_t r = 0; r < restarts; ++r) {
    LloydRun run = lloyd_once(x, k, max_iters, rng);
    if (run.inertia < best.inertia) best = std::move(run);
  }
  KmeansResult result;
  result.labels = std::move(best.labels);
  result.centroids = std::move(best.centroids);
  result.inertia = best.inertia;
  result.inertia_trace = std::move(best.inertia_trace);
  return result;
}

}  // namespace nagc
