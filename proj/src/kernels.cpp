#include "nagc/kernels.hpp"

#include <atomic>

#include "nagc/errors.hpp"

namespace nagc {

namespace {

std::atomic<bool> g_parallel{true};

void require(bool cond, const char* msg) {
  if (!cond) throw InputError(msg);
}

}  // namespace

bool parallel_kernels_enabled() { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel_kernels(bool enabled) { g_parallel.store(enabled, std::memory_order_relaxed); }

DenseMatrix sigmoid_map(const DenseMatrix& m) {
  DenseMatrix out(m.rows(), m.cols());
  const double* in = m.data();
  double* o = out.data();
  detail::parallel_rows(m.size(), [&](std::size_t i) { o[i] = sigmoid_scalar(in[i]); });
  return out;
}

DenseMatrix sigmoid_deriv_map(const DenseMatrix& m) {
  DenseMatrix out(m.rows(), m.cols());
  const double* in = m.data();
  double* o = out.data();
  detail::parallel_rows(m.size(), [&](std::size_t i) {
    const double s = sigmoid_scalar(in[i]);
    o[i] = s * (1.0 - s);
  });
  return out;
}

DenseMatrix sparse_dense_mul(const SparseSymGraph& s, const DenseMatrix& u) {
  require(u.rows() == s.vertex_count(), "sparse_dense_mul: row count must equal vertex count");
  const std::size_t k = u.cols();
  DenseMatrix out(u.rows(), k);
  detail::parallel_rows(u.rows(), [&](std::size_t i) {
    double* oi = out.row(i);
    const auto cols = s.row_neighbors(i);
    const auto w = s.row_weights(i);
    for (std::size_t e = 0; e < cols.size(); ++e) {
      const double* uj = u.row(cols[e]);
      const double we = w[e];
      for (std::size_t c = 0; c < k; ++c) oi[c] += we * uj[c];
    }
  });
  return out;
}

DenseMatrix masked_gram_times(const DenseMatrix& u, const SparseSymGraph& s) {
  require(u.rows() == s.vertex_count(), "masked_gram_times: row count must equal vertex count");
  const std::size_t k = u.cols();
  DenseMatrix out(u.rows(), k);
  detail::parallel_rows(u.rows(), [&](std::size_t i) {
    const double* ui = u.row(i);
    double* oi = out.row(i);
    const auto cols = s.row_neighbors(i);
    for (std::size_t e = 0; e < cols.size(); ++e) {
      const double* uj = u.row(cols[e]);
      double d = 0.0;
      for (std::size_t c = 0; c < k; ++c) d += ui[c] * uj[c];
      for (std::size_t c = 0; c < k; ++c) oi[c] += d * uj[c];
    }
  });
  return out;
}

DenseMatrix complement_gram_times(const DenseMatrix& u, const SparseSymGraph& s) {
  require(u.rows() == s.vertex_count(),
          "complement_gram_times: row count must equal vertex count");
  const std::size_t k = u.cols();
  const DenseMatrix g = gram(u);
  DenseMatrix out(u.rows(), k);
  detail::parallel_rows(u.rows(), [&](std::size_t i) {
    const double* ui = u.row(i);
    double* oi = out.row(i);
    // masked part of this row, accumulated in neighbor order
    const auto cols = s.row_neighbors(i);
    for (std::size_t e = 0; e < cols.size(); ++e) {
      const double* uj = u.row(cols[e]);
      double d = 0.0;
      for (std::size_t c = 0; c < k; ++c) d += ui[c] * uj[c];
      for (std::size_t c = 0; c < k; ++c) oi[c] += d * uj[c];
    }
    // row of U (UᵀU) minus the masked part
    for (std::size_t c = 0; c < k; ++c) {
      double full = 0.0;
      for (std::size_t l = 0; l < k; ++l) full += ui[l] * g(l, c);
      oi[c] = full - oi[c];
    }
  });
  return out;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.cols() == b.rows(), "matmul: inner dimensions differ");
  DenseMatrix out(a.rows(), b.cols());
  const std::size_t inner = a.cols(), nc = b.cols();
  detail::parallel_rows(a.rows(), [&](std::size_t i) {
    const double* ai = a.row(i);
    double* oi = out.row(i);
    for (std::size_t c = 0; c < nc; ++c) {
      double acc = 0.0;
      for (std::size_t l = 0; l < inner; ++l) acc += ai[l] * b(l, c);
      oi[c] = acc;
    }
  });
  return out;
}

DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.rows() == b.rows(), "matmul_tn: row counts differ");
  const std::size_t n = a.rows(), nc = b.cols();
  DenseMatrix out(a.cols(), nc);
  // Each output row accumulates one column of `a` against all of `b`; the
  // output row itself is the accumulator, so no temporary is needed.
  detail::parallel_rows(a.cols(), [&](std::size_t r) {
    double* orow = out.row(r);
    for (std::size_t i = 0; i < n; ++i) {
      const double av = a(i, r);
      const double* bi = b.row(i);
      for (std::size_t c = 0; c < nc; ++c) orow[c] += av * bi[c];
    }
  });
  return out;
}

DenseMatrix matmul_nt(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.cols() == b.cols(), "matmul_nt: column counts differ");
  const std::size_t inner = a.cols(), nc = b.rows();
  DenseMatrix out(a.rows(), nc);
  detail::parallel_rows(a.rows(), [&](std::size_t i) {
    const double* ai = a.row(i);
    double* oi = out.row(i);
    for (std::size_t c = 0; c < nc; ++c) {
      const double* bc = b.row(c);
      double acc = 0.0;
      for (std::size_t l = 0; l < inner; ++l) acc += ai[l] * bc[l];
      oi[c] = acc;
    }
  });
  return out;
}

DenseMatrix gram(const DenseMatrix& a) {
  const std::size_t n = a.rows(), k = a.cols();
  DenseMatrix out(k, k);
  detail::parallel_rows(k, [&](std::size_t r) {
    double* orow = out.row(r);
    for (std::size_t i = 0; i < n; ++i) {
      const double* ai = a.row(i);
      const double av = ai[r];
      for (std::size_t c = 0; c < k; ++c) orow[c] += av * ai[c];
    }
  });
  return out;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix out(a.cols(), a.rows());
  detail::parallel_rows(a.cols(), [&](std::size_t r) {
    double* orow = out.row(r);
    for (std::size_t i = 0; i < a.rows(); ++i) orow[i] = a(i, r);
  });
  return out;
}

DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "hadamard: shapes differ");
  DenseMatrix out(a.rows(), a.cols());
  const double* pa = a.data();
  const double* pb = b.data();
  double* o = out.data();
  detail::parallel_rows(a.size(), [&](std::size_t i) { o[i] = pa[i] * pb[i]; });
  return out;
}

DenseMatrix add_scaled(const DenseMatrix& a, double alpha, const DenseMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "add_scaled: shapes differ");
  DenseMatrix out(a.rows(), a.cols());
  const double* pa = a.data();
  const double* pb = b.data();
  double* o = out.data();
  detail::parallel_rows(a.size(), [&](std::size_t i) { o[i] = pa[i] + alpha * pb[i]; });
  return out;
}

DenseMatrix scale(const DenseMatrix& a, double alpha) {
  DenseMatrix out(a.rows(), a.cols());
  const double* pa = a.data();
  double* o = out.data();
  detail::parallel_rows(a.size(), [&](std::size_t i) { o[i] = alpha * pa[i]; });
  return out;
}

DenseMatrix multiplicative_update(const DenseMatrix& base, const DenseMatrix& num,
                                  const DenseMatrix& den, double eps) {
  require(base.rows() == num.rows() && base.cols() == num.cols() &&
              base.rows() == den.rows() && base.cols() == den.cols(),
          "multiplicative_update: shapes differ");
  DenseMatrix out(base.rows(), base.cols());
  const double* pb = base.data();
  const double* pn = num.data();
  const double* pd = den.data();
  double* o = out.data();
  detail::parallel_rows(base.size(),
                        [&](std::size_t i) { o[i] = pb[i] * (pn[i] / (pd[i] + eps)); });
  return out;
}

double frobenius_sq(const DenseMatrix& a) {
  std::vector<double> partial(a.rows(), 0.0);
  detail::parallel_rows(a.rows(), [&](std::size_t i) {
    const double* ai = a.row(i);
    double acc = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c) acc += ai[c] * ai[c];
    partial[i] = acc;
  });
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

double dot_all(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "dot_all: shapes differ");
  std::vector<double> partial(a.rows(), 0.0);
  detail::parallel_rows(a.rows(), [&](std::size_t i) {
    const double* ai = a.row(i);
    const double* bi = b.row(i);
    double acc = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c) acc += ai[c] * bi[c];
    partial[i] = acc;
  });
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

namespace reference {

DenseMatrix sigmoid_map(const DenseMatrix& m) {
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.size(); ++i) out.data()[i] = sigmoid_scalar(m.data()[i]);
  return out;
}

DenseMatrix sigmoid_deriv_map(const DenseMatrix& m) {
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double s = sigmoid_scalar(m.data()[i]);
    out.data()[i] = s * (1.0 - s);
  }
  return out;
}

DenseMatrix sparse_dense_mul(const SparseSymGraph& s, const DenseMatrix& u) {
  if (u.rows() != s.vertex_count())
    throw InputError("sparse_dense_mul: row count must equal vertex count");
  const std::size_t k = u.cols();
  DenseMatrix out(u.rows(), k);
  for (std::size_t i = 0; i < u.rows(); ++i) {
    double* oi = out.row(i);
    const auto cols = s.row_neighbors(i);
    const auto w = s.row_weights(i);
    for (std::size_t e = 0; e < cols.size(); ++e) {
      const double* uj = u.row(cols[e]);
      for (std::size_t c = 0; c < k; ++c) oi[c] += w[e] * uj[c];
    }
  }
  return out;
}

DenseMatrix masked_gram_times(const DenseMatrix& u, const SparseSymGraph& s) {
  if (u.rows() != s.vertex_count())
    throw InputError("masked_gram_times: row count must equal vertex count");
  const std::size_t k = u.cols();
  DenseMatrix out(u.rows(), k);
  for (std::size_t i = 0; i < u.rows(); ++i) {
    const double* ui = u.row(i);
    double* oi = out.row(i);
    const auto cols = s.row_neighbors(i);
    for (std::size_t e = 0; e < cols.size(); ++e) {
      const double* uj = u.row(cols[e]);
      double d = 0.0;
      for (std::size_t c = 0; c < k; ++c) d += ui[c] * uj[c];
      for (std::size_t c = 0; c < k; ++c) oi[c] += d * uj[c];
    }
  }
  return out;
}

DenseMatrix complement_gram_times(const DenseMatrix& u, const SparseSymGraph& s) {
  if (u.rows() != s.vertex_count())
    throw InputError("complement_gram_times: row count must equal vertex count");
  const std::size_t k = u.cols();
  const DenseMatrix g = reference::gram(u);
  DenseMatrix out(u.rows(), k);
  for (std::size_t i = 0; i < u.rows(); ++i) {
    const double* ui = u.row(i);
    double* oi = out.row(i);
    const auto cols = s.row_neighbors(i);
    for (std::size_t e = 0; e < cols.size(); ++e) {
      const double* uj = u.row(cols[e]);
      double d = 0.0;
      for (std::size_t c = 0; c < k; ++c) d += ui[c] * uj[c];
      for (std::size_t c = 0; c < k; ++c) oi[c] += d * uj[c];
    }
    for (std::size_t c = 0; c < k; ++c) {
      double full = 0.0;
      for (std::size_t l = 0; l < k; ++l) full += ui[l] * g(l, c);
      oi[c] = full - oi[c];
    }
  }
  return out;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matmul: inner dimensions differ");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double* ai = a.row(i);
    double* oi = out.row(i);
    for (std::size_t c = 0; c < b.cols(); ++c) {
      double acc = 0.0;
      for (std::size_t l = 0; l < a.cols(); ++l) acc += ai[l] * b(l, c);
      oi[c] = acc;
    }
  }
  return out;
}

DenseMatrix gram(const DenseMatrix& a) {
  const std::size_t n = a.rows(), k = a.cols();
  DenseMatrix out(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    double* orow = out.row(r);
    for (std::size_t i = 0; i < n; ++i) {
      const double* ai = a.row(i);
      const double av = ai[r];
      for (std::size_t c = 0; c < k; ++c) orow[c] += av * ai[c];
    }
  }
  return out;
}

}  // namespace reference

}  // namespace nagc
