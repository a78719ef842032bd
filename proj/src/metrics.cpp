#include "nagc/metrics.hpp"

#include <cmath>
#include <unordered_map>
#include <vector>

#include "nagc/errors.hpp"

namespace nagc {

namespace {

std::vector<std::size_t> compact_labels(std::span<const int> labels, std::size_t* k_out) {
  std::unordered_map<int, std::size_t> ids;
  std::vector<std::size_t> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    out[i] = ids.try_emplace(labels[i], ids.size()).first->second;
  *k_out = ids.size();
  return out;
}

double choose2(double x) { return 0.5 * x * (x - 1.0); }

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace

double adjusted_rand_index(std::span<const int> labels_a, std::span<const int> labels_b) {
  if (labels_a.size() != labels_b.size())
    throw InputError("adjusted_rand_index: label vectors differ in length");
  const std::size_t n = labels_a.size();
  if (n < 2) throw InputError("adjusted_rand_index: need at least two points");

  std::size_t ka = 0, kb = 0;
  const std::vector<std::size_t> a = compact_labels(labels_a, &ka);
  const std::vector<std::size_t> b = compact_labels(labels_b, &kb);

  std::vector<double> table(ka * kb, 0.0);
  std::vector<double> rows(ka, 0.0), cols(kb, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    table[a[i] * kb + b[i]] += 1.0;
    rows[a[i]] += 1.0;
    cols[b[i]] += 1.0;
  }

  double index = 0.0;
  for (double c : table) index += choose2(c);
  double sum_a = 0.0, sum_b = 0.0;
  for (double c : rows) sum_a += choose2(c);
  for (double c : cols) sum_b += choose2(c);

  const double pairs = choose2(static_cast<double>(n));
  const double expected = sum_a * sum_b / pairs;
  const double max_index = 0.5 * (sum_a + sum_b);
  const double denom = max_index - expected;
  if (std::abs(denom) < 1e-12) return 0.0;  // chance correction degenerates
  return (index - expected) / denom;
}

double modularity(const SparseSymGraph& g, std::span<const int> labels) {
  if (labels.size() != g.vertex_count())
    throw InputError("modularity: label vector length must equal vertex count");

  // Binary view of the graph: weights ignored, self-loops dropped.
  double edge_total = 0.0;
  std::unordered_map<int, double> intra;      // edges inside each cluster
  std::unordered_map<int, double> degree;     // summed degrees per cluster
  for (const auto& e : g.edges()) {
    if (e.i == e.j) continue;
    edge_total += 1.0;
    degree[labels[e.i]] += 1.0;
    degree[labels[e.j]] += 1.0;
    if (labels[e.i] == labels[e.j]) intra[labels[e.i]] += 1.0;
  }
  if (edge_total == 0.0) return 0.0;

  double q = 0.0;
  for (const auto& [c, d] : degree) {
    const double frac = d / (2.0 * edge_total);
    const auto it = intra.find(c);
    const double inside = it == intra.end() ? 0.0 : it->second;
    q += inside / edge_total - frac * frac;
  }
  return q;
}

double average_entropy(const DenseMatrix& x, std::span<const int> labels) {
  if (labels.size() != x.rows())
    throw InputError("average_entropy: label vector length must equal attribute rows");
  const std::size_t n = x.rows(), m = x.cols();
  if (n == 0 || m == 0) return 0.0;

  std::size_t k = 0;
  const std::vector<std::size_t> c = compact_labels(labels, &k);
  std::vector<double> present(k * m, 0.0);
  std::vector<double> size(k, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    size[c[i]] += 1.0;
    const double* xi = x.row(i);
    double* row = present.data() + c[i] * m;
    for (std::size_t j = 0; j < m; ++j)
      if (xi[j] > 0.0) row[j] += 1.0;
  }

  double total = 0.0;
  for (std::size_t cl = 0; cl < k; ++cl) {
    if (size[cl] == 0.0) continue;
    double h = 0.0;
    for (std::size_t j = 0; j < m; ++j)
      h += binary_entropy(present[cl * m + j] / size[cl]);
    total += (size[cl] / static_cast<double>(n)) * (h / static_cast<double>(m));
  }
  return total;
}

}  // namespace nagc
