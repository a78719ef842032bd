#include "nagc/core.hpp"

#include <chrono>
#include <utility>

#include "nagc/baselines.hpp"
#include "nagc/rng.hpp"

namespace nagc {

namespace {

using Clock = std::chrono::steady_clock;

// Accumulates elapsed seconds into one bucket of a PhaseTimers, if any.
class PhaseScope {
 public:
  PhaseScope(PhaseTimers* timers, double PhaseTimers::* bucket)
      : timers_(timers), bucket_(bucket), start_(Clock::now()) {}
  ~PhaseScope() {
    if (timers_ != nullptr)
      timers_->*bucket_ += std::chrono::duration<double>(Clock::now() - start_).count();
  }
  PhaseScope(const PhaseScope&) = delete;
  PhaseScope& operator=(const PhaseScope&) = delete;

 private:
  PhaseTimers* timers_;
  double PhaseTimers::* bucket_;
  Clock::time_point start_;
};

void check_dims(const SparseSymGraph& s, const DenseMatrix& x, const FactorModel& m,
                const Hyperparams& hp) {
  const std::size_t n = s.vertex_count();
  if (x.rows() != n) throw InputError("attribute row count must equal vertex count");
  if (m.U.rows() != n || m.U.cols() != hp.k1) throw InputError("U has wrong shape");
  if (m.V.rows() != x.cols() || m.V.cols() != hp.k2) throw InputError("V has wrong shape");
  if (m.H.rows() != hp.k1 || m.H.cols() != hp.k2) throw InputError("H has wrong shape");
}

// Edge-supported sums of the topology term, per-row partials merged in row
// order: sum over stored (i,j) of (s_ij - u_i.u_j)^2 and of (u_i.u_j)^2.
struct EdgeSums {
  double resid_sq = 0.0;
  double recon_sq = 0.0;
};

EdgeSums edge_sums(const SparseSymGraph& s, const DenseMatrix& u) {
  const std::size_t n = s.vertex_count();
  const std::size_t k = u.cols();
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
      const double d = w[e] - z;
      r += d * d;
      q += z * z;
    }
    resid[i] = r;
    recon[i] = q;
  });
  EdgeSums out;
  for (std::size_t i = 0; i < n; ++i) {
    out.resid_sq += resid[i];
    out.recon_sq += recon[i];
  }
  return out;
}

double attribute_loss_value(const DenseMatrix& x, const FactorModel& m, double lambda) {
  // ||X - F V^T||_F^2 = ||X||^2 - 2 <XV, F> + <F^T F, V^T V>, F = f(UH).
  const DenseMatrix f = sigmoid_map(matmul(m.U, m.H));
  const DenseMatrix xv = matmul(x, m.V);
  const double sq =
      frobenius_sq(x) - 2.0 * dot_all(xv, f) + dot_all(gram(f), gram(m.V));
  return 0.5 * lambda * std::max(0.0, sq);
}

}  // namespace

SparseSymGraph normalize_adjacency(const SparseSymGraph& s, const DenseMatrix& x) {
  if (!x.is_nonnegative()) throw InputError("preprocessing: attributes must be non-negative");
  if (s.edge_count() == 0) throw InputError("preprocessing: graph has no edges");
  const double xs = x.sum();
  if (!(xs > 0.0)) throw InputError("preprocessing: attribute matrix sums to zero");
  return s.scaled(xs / s.weight_sum());
}

namespace {

LossBreakdown loss_impl(const SparseSymGraph& s, const DenseMatrix& x, const FactorModel& m,
                        const Hyperparams& hp, PhaseTimers* timers) {
  check_dims(s, x, m, hp);
  LossBreakdown out;
  {
    PhaseScope scope(timers, &PhaseTimers::topology_seconds);
    const EdgeSums es = edge_sums(s, m.U);
    // Sum over all ordered pairs of (u_i.u_j)^2 equals ||U^T U||_F^2.
    const double all_pairs_sq = frobenius_sq(gram(m.U));
    const double unobserved = std::max(0.0, all_pairs_sq - es.recon_sq);
    out.topology = 0.5 * (hp.rho * es.resid_sq + (1.0 - hp.rho) * unobserved);
  }
  {
    PhaseScope scope(timers, &PhaseTimers::attribute_seconds);
    out.attribute = attribute_loss_value(x, m, hp.lambda);
  }
  out.total = out.topology + out.attribute;
  return out;
}

}  // namespace

LossBreakdown loss(const SparseSymGraph& s, const DenseMatrix& x, const FactorModel& m,
                   const Hyperparams& hp) {
  return loss_impl(s, x, m, hp, nullptr);
}

DenseMatrix grad_u(const SparseSymGraph& s, const DenseMatrix& x, const FactorModel& m,
                   const Hyperparams& hp) {
  check_dims(s, x, m, hp);
  const DenseMatrix su = sparse_dense_mul(s, m.U);
  const DenseMatrix masked = masked_gram_times(m.U, s);
  const DenseMatrix compl_part = complement_gram_times(m.U, s);

  const DenseMatrix p = matmul(m.U, m.H);
  const DenseMatrix f = sigmoid_map(p);
  const DenseMatrix fp = sigmoid_deriv_map(p);
  const DenseMatrix xv = matmul(x, m.V);
  const DenseMatrix fvv = matmul(f, gram(m.V));

  DenseMatrix g = scale(su, -2.0 * hp.rho);
  g = add_scaled(g, -hp.lambda, matmul_nt(hadamard(xv, fp), m.H));
  g = add_scaled(g, 2.0 * hp.rho, masked);
  g = add_scaled(g, 2.0 * (1.0 - hp.rho), compl_part);
  g = add_scaled(g, hp.lambda, matmul_nt(hadamard(fvv, fp), m.H));
  return g;
}

DenseMatrix grad_v(const SparseSymGraph& s, const DenseMatrix& x, const FactorModel& m,
                   const Hyperparams& hp) {
  check_dims(s, x, m, hp);
  const DenseMatrix f = sigmoid_map(matmul(m.U, m.H));
  DenseMatrix g = scale(matmul_tn(x, f), -hp.lambda);
  g = add_scaled(g, hp.lambda, matmul(m.V, gram(f)));
  return g;
}

DenseMatrix grad_h(const SparseSymGraph& s, const DenseMatrix& x, const FactorModel& m,
                   const Hyperparams& hp) {
  check_dims(s, x, m, hp);
  const DenseMatrix p = matmul(m.U, m.H);
  const DenseMatrix f = sigmoid_map(p);
  const DenseMatrix fp = sigmoid_deriv_map(p);
  const DenseMatrix xv = matmul(x, m.V);
  const DenseMatrix fvv = matmul(f, gram(m.V));
  // Chain rule through the sigmoid: both residual pieces are Hadamard-scaled
  // by f'(UH) before the projection onto H.
  DenseMatrix g = scale(matmul_tn(m.U, hadamard(xv, fp)), -hp.lambda);
  g = add_scaled(g, hp.lambda, matmul_tn(m.U, hadamard(fvv, fp)));
  return g;
}

DenseMatrix update_u(const SparseSymGraph& s, const DenseMatrix& x, const FactorModel& m,
                     const Hyperparams& hp, PhaseTimers* timers) {
  check_dims(s, x, m, hp);
  DenseMatrix num, den;
  {
    PhaseScope scope(timers, &PhaseTimers::topology_seconds);
    num = scale(sparse_dense_mul(s, m.U), 2.0 * hp.rho);
    // 2rho (UU^T . W) U + 2(1-rho) (UU^T . W') U, reassociated through the
    // complement identity as 2(1-rho) U (U^T U) + 2(2rho-1) (UU^T . W) U.
    // At rho = 1/2 this is exactly the symmetric-NMF denominator.
    den = scale(matmul(m.U, gram(m.U)), 2.0 * (1.0 - hp.rho));
    den = add_scaled(den, 2.0 * (2.0 * hp.rho - 1.0), masked_gram_times(m.U, s));
  }
  {
    PhaseScope scope(timers, &PhaseTimers::attribute_seconds);
    const DenseMatrix p = matmul(m.U, m.H);
    const DenseMatrix f = sigmoid_map(p);
    const DenseMatrix fp = sigmoid_deriv_map(p);
    const DenseMatrix xv = matmul(x, m.V);
    const DenseMatrix fvv = matmul(f, gram(m.V));
    num = add_scaled(num, hp.lambda, matmul_nt(hadamard(xv, fp), m.H));
    den = add_scaled(den, hp.lambda, matmul_nt(hadamard(fvv, fp), m.H));
  }
  return multiplicative_update(m.U, num, den, hp.epsilon);
}

DenseMatrix update_v(const SparseSymGraph& s, const DenseMatrix& x, const FactorModel& m,
                     const Hyperparams& hp, PhaseTimers* timers) {
  check_dims(s, x, m, hp);
  PhaseScope scope(timers, &PhaseTimers::attribute_seconds);
  const DenseMatrix f = sigmoid_map(matmul(m.U, m.H));
  const DenseMatrix num = matmul_tn(x, f);
  const DenseMatrix den = matmul(m.V, gram(f));
  return multiplicative_update(m.V, num, den, hp.epsilon);
}

DenseMatrix update_h(const SparseSymGraph& s, const DenseMatrix& x, const FactorModel& m,
                     const Hyperparams& hp, PhaseTimers* timers) {
  check_dims(s, x, m, hp);
  PhaseScope scope(timers, &PhaseTimers::attribute_seconds);
  const DenseMatrix p = matmul(m.U, m.H);
  const DenseMatrix f = sigmoid_map(p);
  const DenseMatrix fp = sigmoid_deriv_map(p);
  const DenseMatrix xv = matmul(x, m.V);
  const DenseMatrix num = matmul_tn(m.U, hadamard(fp, xv));
  // The update applies the V Gram factor after the projection onto H;
  // grad_h keeps it inside the Hadamard instead.
  const DenseMatrix den = matmul(matmul_tn(m.U, hadamard(fp, f)), gram(m.V));
  return multiplicative_update(m.H, num, den, hp.epsilon);
}

namespace {

void fill_uniform(DenseMatrix& m, Rng& rng, double scale_to = 1.0) {
  for (std::size_t i = 0; i < m.size(); ++i)
    m.data()[i] = scale_to * rng.uniform_open0_closed1();
}

}  // namespace

FactorModel init_random(std::size_t n, std::size_t m, const Hyperparams& hp) {
  Rng rng(hp.seed);
  FactorModel model;
  model.U = DenseMatrix(n, hp.k1);
  model.V = DenseMatrix(m, hp.k2);
  model.H = DenseMatrix(hp.k1, hp.k2);
  fill_uniform(model.U, rng);
  fill_uniform(model.V, rng);
  fill_uniform(model.H, rng);
  return model;
}

FactorModel init_kmeans(const DenseMatrix& x, const Hyperparams& hp) {
  const std::size_t n = x.rows(), m = x.cols();
  if (!x.is_nonnegative()) throw InputError("init_kmeans: attributes must be non-negative");
  if (hp.k1 < 1 || n < hp.k1) throw InputError("init_kmeans: need 1 <= k1 <= n");
  if (hp.k2 < 1 || m < hp.k2) throw InputError("init_kmeans: need 1 <= k2 <= m");

  Rng rng(hp.seed);
  const KmeansResult rows = kmeans_fit(x, hp.k1, 50, 1, hp.seed);
  const KmeansResult cols = kmeans_fit(transpose(x), hp.k2, 50, 1, hp.seed + 1);

  // One-hot memberships; clusters k-means could not fill get a random member
  // so no column starts identically zero.
  auto one_hot = [&](const std::vector<int>& labels, std::size_t k) {
    std::vector<int> fixed = labels;
    std::vector<std::size_t> count(k, 0);
    for (int l : fixed) ++count[static_cast<std::size_t>(l)];
    for (std::size_t c = 0; c < k; ++c)
      if (count[c] == 0) {
        const std::size_t pick = rng.below(fixed.size());
        --count[static_cast<std::size_t>(fixed[pick])];
        fixed[pick] = static_cast<int>(c);
        ++count[c];
      }
    DenseMatrix out(fixed.size(), k);
    for (std::size_t i = 0; i < fixed.size(); ++i)
      out(i, static_cast<std::size_t>(fixed[i])) = 1.0;
    return out;
  };

  FactorModel model;
  model.U = one_hot(rows.labels, hp.k1);
  model.V = one_hot(cols.labels, hp.k2);
  // Noise floor lets the multiplicative updates move entries off the initial
  // one-hot support.
  for (std::size_t i = 0; i < model.U.size(); ++i)
    model.U.data()[i] += 0.01 * rng.uniform_open0_closed1();
  for (std::size_t i = 0; i < model.V.size(); ++i)
    model.V.data()[i] += 0.01 * rng.uniform_open0_closed1();
  model.H = DenseMatrix(hp.k1, hp.k2);
  fill_uniform(model.H, rng);
  return model;
}

FitResult fit(const SparseSymGraph& s, const DenseMatrix& x, const Hyperparams& hp,
              PhaseTimers* timers) {
  validate_hyperparams(hp, s.vertex_count(), x.cols());
  if (x.rows() != s.vertex_count())
    throw InputError("attribute row count must equal vertex count");
  if (!x.is_nonnegative()) throw InputError("attributes must be non-negative");
  const SparseSymGraph sn = normalize_adjacency(s, x);
  FactorModel model = hp.init == InitScheme::kmeans
                          ? init_kmeans(x, hp)
                          : init_random(s.vertex_count(), x.cols(), hp);
  return fit_from(sn, x, hp, std::move(model), timers);
}

FitResult fit_from(const SparseSymGraph& s_pre, const DenseMatrix& x, const Hyperparams& hp,
                   FactorModel model, PhaseTimers* timers) {
  check_dims(s_pre, x, model, hp);
  FitResult result;
  result.trace.reserve(hp.iters);
  for (std::size_t it = 0; it < hp.iters; ++it) {
    model.U = update_u(s_pre, x, model, hp, timers);
    model.V = update_v(s_pre, x, model, hp, timers);
    model.H = update_h(s_pre, x, model, hp, timers);
    if (!model.all_finite())
      throw NumericError("non-finite factor entry during fit", it);
    const LossBreakdown lb = loss_impl(s_pre, x, model, hp, timers);
    if (!lb.all_finite()) throw NumericError("non-finite loss during fit", it);
    result.trace.push_back(lb);
  }
  result.model = std::move(model);
  return result;
}

std::vector<int> assign_clusters(const DenseMatrix& u) {
  std::vector<int> labels(u.rows(), 0);
  for (std::size_t i = 0; i < u.rows(); ++i) {
    const double* ui = u.row(i);
    std::size_t best = 0;
    for (std::size_t c = 1; c < u.cols(); ++c)
      if (ui[c] > ui[best]) best = c;
    labels[i] = static_cast<int>(best);
  }
  return labels;
}

std::vector<int> assign_clusters(const FactorModel& m) { return assign_clusters(m.U); }

}  // namespace nagc
