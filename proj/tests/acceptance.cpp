// Acceptance suite: one line per criterion, PASS/FAIL/SKIP, nonzero exit on
// any failure. Criteria that need the real datasets (WebKB, Cora, Citeseer,
// polblog) are skipped with a warning when the data directory is absent; see
// the README for the expected layout.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nagc/baselines.hpp"
#include "nagc/core.hpp"
#include "nagc/harness.hpp"
#include "nagc/metrics.hpp"
#include "oracles.hpp"

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using nagc::AttributedGraphDataset;
using nagc::DenseMatrix;
using nagc::FactorModel;
using nagc::Hyperparams;
using nagc::SparseSymGraph;

struct Outcome {
  enum Kind { pass, fail, skip } kind = pass;
  std::string detail;
};

Outcome ok(std::string detail = "") { return {Outcome::pass, std::move(detail)}; }
Outcome bad(std::string detail) { return {Outcome::fail, std::move(detail)}; }
Outcome skipped(std::string detail) { return {Outcome::skip, std::move(detail)}; }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

// --- dataset discovery -----------------------------------------------------

fs::path data_root() {
  if (const char* env = std::getenv("NAGC_DATA_DIR")) return fs::path(env);
  return fs::path("data");
}

std::optional<AttributedGraphDataset> try_load(const std::string& name) {
  const fs::path root = data_root() / name;
  try {
    if (name == "cora" || name == "citeseer") {
      const fs::path content = root / (name + ".content");
      const fs::path cites = root / (name + ".cites");
      if (!fs::exists(content) || !fs::exists(cites)) return std::nullopt;
      AttributedGraphDataset ds = nagc::load_linqs(content.string(), cites.string());
      ds.name = name;
      return ds;
    }
    const fs::path edges = root / (name + ".edges.tsv");
    const fs::path attrs = root / (name + ".attrs.tsv");
    const fs::path labels = root / (name + ".labels.tsv");
    if (!fs::exists(edges) || !fs::exists(attrs) || !fs::exists(labels)) return std::nullopt;
    AttributedGraphDataset ds = nagc::load_tsv(edges.string(), attrs.string(), labels.string());
    ds.name = name;
    return ds;
  } catch (const std::exception& e) {
    std::cerr << "warning: failed to load dataset '" << name << "': " << e.what() << "\n";
    return std::nullopt;
  }
}

// --- criterion 1: gradient consistency --------------------------------------

DenseMatrix fd_gradient(const SparseSymGraph& s, const DenseMatrix& x, FactorModel m,
                        const Hyperparams& hp, int which, double step) {
  DenseMatrix* target = which == 0 ? &m.U : which == 1 ? &m.V : &m.H;
  DenseMatrix g(target->rows(), target->cols());
  for (std::size_t i = 0; i < target->size(); ++i) {
    const double saved = target->data()[i];
    target->data()[i] = saved + step;
    const double up = nagc::loss(s, x, m, hp).total;
    target->data()[i] = saved - step;
    const double down = nagc::loss(s, x, m, hp).total;
    target->data()[i] = saved;
    g.data()[i] = (up - down) / (2.0 * step);
  }
  return g;
}

Outcome criterion_gradients() {
  const auto t0 = Clock::now();
  Hyperparams hp;
  hp.k1 = 3;
  hp.k2 = 2;
  hp.lambda = 0.5;
  hp.rho = 0.75;
  std::mt19937_64 eng(2024);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const SparseSymGraph s = oracle::random_graph(12, 0.35, eng());
    const DenseMatrix x = oracle::random_matrix(12, 8, eng(), 0.1, 1.0);
    FactorModel m;
    m.U = oracle::random_matrix(12, 3, eng(), 0.1, 1.0);
    m.V = oracle::random_matrix(8, 2, eng(), 0.1, 1.0);
    m.H = oracle::random_matrix(3, 2, eng(), 0.1, 1.0);
    const double eu = oracle::rel_diff(nagc::grad_u(s, x, m, hp), fd_gradient(s, x, m, hp, 0, 1e-5));
    const double ev = oracle::rel_diff(nagc::grad_v(s, x, m, hp), fd_gradient(s, x, m, hp, 1, 1e-5));
    const double eh = oracle::rel_diff(nagc::grad_h(s, x, m, hp), fd_gradient(s, x, m, hp, 2, 1e-5));
    worst = std::max({worst, eu, ev, eh});
  }
  const double elapsed = seconds_since(t0);
  if (worst > 1e-5) return bad("max relative error " + fmt(worst) + " > 1e-5");
  if (elapsed >= 5.0) return bad("took " + fmt(elapsed) + " s (budget 5 s)");
  return ok("max relative error " + fmt(worst) + ", " + fmt(elapsed) + " s");
}

// --- criterion 2: kernel oracle equivalence ---------------------------------

Outcome criterion_kernels() {
  std::mt19937_64 eng(777);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + eng() % 49;
    const std::size_t k = 1 + eng() % 5;
    const double p = 0.05 + 0.9 * static_cast<double>(eng() % 100) / 100.0;
    const SparseSymGraph s = oracle::random_graph(n, p, eng());
    const DenseMatrix u = oracle::random_matrix(n, k, eng());

    const DenseMatrix masked = nagc::masked_gram_times(u, s);
    const DenseMatrix compl_part = nagc::complement_gram_times(u, s);
    const DenseMatrix uut = oracle::matmul(u, oracle::transpose(u));
    const DenseMatrix masked_oracle =
        oracle::matmul(oracle::hadamard(uut, oracle::dense_mask(s)), u);
    const DenseMatrix compl_oracle =
        oracle::matmul(oracle::hadamard(uut, oracle::complement_mask(s)), u);
    const DenseMatrix full = oracle::matmul(u, oracle::matmul(oracle::transpose(u), u));

    worst = std::max(worst, oracle::rel_diff(masked, masked_oracle));
    worst = std::max(worst, oracle::rel_diff(compl_part, compl_oracle));
    worst = std::max(worst, oracle::rel_diff(oracle::add(masked, compl_part), full));
  }
  if (worst > 1e-10) return bad("max relative error " + fmt(worst) + " > 1e-10");
  return ok("max relative error " + fmt(worst) + " over 50 instances");
}

// --- criterion 3: symmetric-NMF specialization -------------------------------

Outcome criterion_snmf_specialization() {
  const SparseSymGraph s = oracle::random_graph(30, 0.25, 4242);
  const DenseMatrix x = oracle::random_matrix(30, 10, 4243, 0.1, 1.0);
  Hyperparams hp;
  hp.k1 = 4;
  hp.k2 = 3;
  hp.lambda = 0.0;
  hp.rho = 0.5;
  hp.seed = 99;

  FactorModel m = nagc::init_random(30, 10, hp);
  DenseMatrix u_snmf = nagc::snmf_fit(s, 4, 0, hp.seed).U;  // same stream, same init
  if (!(m.U == u_snmf)) return bad("shared initialization mismatch");

  double worst = 0.0;
  for (int it = 0; it < 100; ++it) {
    m.U = nagc::update_u(s, x, m, hp);
    m.V = nagc::update_v(s, x, m, hp);
    m.H = nagc::update_h(s, x, m, hp);
    u_snmf = nagc::snmf_update(s, u_snmf, hp.epsilon);
    worst = std::max(worst, oracle::rel_diff(m.U, u_snmf));
  }
  if (worst > 1e-12) return bad("max relative iterate gap " + fmt(worst) + " > 1e-12");
  return ok("max relative iterate gap " + fmt(worst) + " over 100 iterations");
}

// --- criterion 4: non-negativity and finiteness ------------------------------

Outcome criterion_nonnegativity(const std::vector<const AttributedGraphDataset*>& datasets) {
  std::size_t checked = 0;
  for (const AttributedGraphDataset* ds : datasets) {
    Hyperparams hp;
    hp.k1 = ds->labels ? ds->label_count() : 4;
    hp.k2 = hp.k1;
    hp.lambda = 0.01;
    hp.rho = 0.75;
    hp.iters = 100;
    hp.seed = 7;
    hp.init = nagc::InitScheme::random;
    const SparseSymGraph sn = nagc::normalize_adjacency(ds->graph, ds->attributes);
    FactorModel m = nagc::init_random(ds->vertex_count(), ds->attributes.cols(), hp);
    for (std::size_t it = 0; it < hp.iters; ++it) {
      m.U = nagc::update_u(sn, ds->attributes, m, hp);
      m.V = nagc::update_v(sn, ds->attributes, m, hp);
      m.H = nagc::update_h(sn, ds->attributes, m, hp);
      if (!m.is_nonnegative())
        return bad(ds->name + ": negative factor entry at iteration " + std::to_string(it));
      if (!m.all_finite())
        return bad(ds->name + ": non-finite factor entry at iteration " + std::to_string(it));
    }
    ++checked;
  }
  return ok(std::to_string(checked) + " dataset(s), 100 iterations each");
}

// --- criterion 5: V-step monotonicity ----------------------------------------

Outcome criterion_v_monotonicity() {
  std::mt19937_64 eng(555);
  for (int inst = 0; inst < 3; ++inst) {
    const SparseSymGraph s = oracle::random_graph(15, 0.3, eng());
    const DenseMatrix x = oracle::random_matrix(15, 8, eng(), 0.0, 1.0);
    Hyperparams hp;
    hp.k1 = 3;
    hp.k2 = 2;
    hp.lambda = 0.8;
    hp.rho = 0.75;
    FactorModel m;
    m.U = oracle::random_matrix(15, 3, eng(), 0.05, 1.0);
    m.V = oracle::random_matrix(8, 2, eng(), 0.05, 1.0);
    m.H = oracle::random_matrix(3, 2, eng(), 0.05, 1.0);
    for (int it = 0; it < 100; ++it) {
      m.U = nagc::update_u(s, x, m, hp);
      const double before = nagc::loss(s, x, m, hp).attribute;
      m.V = nagc::update_v(s, x, m, hp);
      const double after = nagc::loss(s, x, m, hp).attribute;
      if (after > before + 1e-12)
        return bad("attribute loss rose by " + fmt(after - before) + " at iteration " +
                   std::to_string(it));
      m.H = nagc::update_h(s, x, m, hp);
    }
  }
  return ok("3 instances, 100 iterations each");
}

// --- criterion 6: synthetic recovery -----------------------------------------

Outcome criterion_synthetic_recovery() {
  const auto t0 = Clock::now();
  Hyperparams hp;
  hp.k1 = 4;
  hp.k2 = 4;
  hp.lambda = 0.01;
  hp.rho = 0.75;
  hp.iters = 100;
  hp.init = nagc::InitScheme::kmeans;
  hp.seed = 1;

  nagc::PlantedConfig strong;
  strong.n = 200;
  strong.k = 4;
  strong.p_in = 0.2;
  strong.p_out = 0.01;
  strong.m = 40;
  strong.attr_signal = 0.8;
  strong.attr_noise = 0.05;
  strong.seed = 7;
  AttributedGraphDataset ds = nagc::generate_planted(strong);
  ds.name = "planted-strong";
  const nagc::RestartSummary nagc_strong = nagc::cmd_restarts(ds, "nagc", hp, 5);
  std::string detail = "strong: nagc " + fmt(nagc_strong.ari->mean);
  if (nagc_strong.ari->mean < 0.9) {
    return bad(detail + " < 0.9");
  }

  nagc::PlantedConfig weak = strong;
  weak.p_in = 0.05;
  AttributedGraphDataset wds = nagc::generate_planted(weak);
  wds.name = "planted-weak";
  const nagc::RestartSummary nagc_weak = nagc::cmd_restarts(wds, "nagc", hp, 5);
  const nagc::RestartSummary snmf_weak = nagc::cmd_restarts(wds, "snmf", hp, 5);
  const nagc::RestartSummary nmf_weak = nagc::cmd_restarts(wds, "nmf", hp, 5);
  const double bar = std::max(snmf_weak.ari->mean, nmf_weak.ari->mean);
  detail += "; weak: nagc " + fmt(nagc_weak.ari->mean) + " vs max(snmf " +
            fmt(snmf_weak.ari->mean) + ", nmf " + fmt(nmf_weak.ari->mean) + ")";

  const double elapsed = seconds_since(t0);
  if (elapsed >= 60.0) return bad(detail + "; took " + fmt(elapsed) + " s (budget 60 s)");
  if (nagc_weak.ari->mean < bar)
    return bad(detail +
               " -- complementary-signal bound unmet (known model limitation: the sigmoid "
               "projection of non-negative factors cannot express sharp attribute "
               "indicators, so the attribute-only ceiling sits below plain NMF; see "
               "README notes)");
  return ok(detail + "; " + fmt(elapsed) + " s");
}

// --- criterion 7: reported-number reproduction -------------------------------

struct ReportedTarget {
  std::string dataset;
  double lambda;
  double rho;
  std::size_t k2;  // 0 means use k1
  double min_ari;
  double reported;
  // expected shape after cleaning (0 = not pinned)
  std::size_t n, edges, m, labels;
};

Outcome criterion_paper_numbers() {
  const std::vector<ReportedTarget> targets = {
      {"webkb", 1e-4, 0.55, 20, 0.95, 0.995, 877, 0, 1703, 4},
      {"cora", 1e-2, 0.95, 10, 0.30, 0.348, 2708, 5278, 1433, 7},
      {"citeseer", 1e-2, 0.995, 10, 0.22, 0.280, 3312, 4660, 3703, 6},
      {"polblog", 1e-2, 0.95, 0, 0.55, 0.626, 1490, 0, 7, 2},
  };
  std::string detail;
  std::size_t present = 0;
  for (const ReportedTarget& t : targets) {
    const auto ds = try_load(t.dataset);
    if (!ds) continue;
    ++present;
    if (ds->vertex_count() != t.n || ds->attribute_count() != t.m ||
        ds->label_count() != t.labels || (t.edges != 0 && ds->graph.edge_count() != t.edges))
      return bad(t.dataset + ": unexpected shape n=" + std::to_string(ds->vertex_count()) +
                 " |E|=" + std::to_string(ds->graph.edge_count()) +
                 " m=" + std::to_string(ds->attribute_count()) +
                 " labels=" + std::to_string(ds->label_count()));
    Hyperparams hp;
    hp.k1 = ds->label_count();
    hp.k2 = t.k2 == 0 ? hp.k1 : t.k2;
    hp.lambda = t.lambda;
    hp.rho = t.rho;
    hp.iters = 100;
    hp.init = nagc::InitScheme::kmeans;
    hp.seed = 1;
    const nagc::RestartSummary s = nagc::cmd_restarts(*ds, "nagc", hp, 5);
    detail += t.dataset + " " + fmt(s.ari->mean) + " (reported " + fmt(t.reported) + "); ";
    if (s.ari->mean < t.min_ari)
      return bad(detail + "below the " + fmt(t.min_ari) + " floor");
  }
  if (present == 0)
    return skipped("datasets absent under " + data_root().string() + " (see README)");
  return ok(detail + std::to_string(present) + "/4 datasets present");
}

// --- criterion 8: baseline sanity ---------------------------------------------

Outcome criterion_baseline_sanity() {
  std::string detail;
  std::size_t present = 0;
  if (const auto webkb = try_load("webkb")) {
    ++present;
    Hyperparams hp;
    hp.k1 = webkb->label_count();
    hp.iters = 100;
    hp.seed = 1;
    const nagc::RestartSummary s = nagc::cmd_restarts(*webkb, "snmf", hp, 5);
    detail += "snmf/webkb " + fmt(s.ari->mean) + " (reported 0.840); ";
    if (std::abs(s.ari->mean - 0.840) > 0.15) return bad(detail + "outside +-0.15");
  }
  if (const auto citeseer = try_load("citeseer")) {
    ++present;
    Hyperparams hp;
    hp.k1 = citeseer->label_count();
    hp.iters = 100;
    hp.seed = 1;
    const nagc::RestartSummary s = nagc::cmd_restarts(*citeseer, "nmf", hp, 5);
    detail += "nmf/citeseer " + fmt(s.ari->mean) + " (reported 0.193); ";
    if (std::abs(s.ari->mean - 0.193) > 0.08) return bad(detail + "outside +-0.08");
  }
  if (present == 0)
    return skipped("datasets absent under " + data_root().string() + " (see README)");
  return ok(detail);
}

// --- criterion 9: complexity scaling -------------------------------------------

double best_attribute_phase(const AttributedGraphDataset& ds, Hyperparams hp, int reps) {
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < reps; ++r)
    best = std::min(best, nagc::cmd_bench(ds, "nagc", hp).attribute_phase_seconds);
  return best;
}

double best_total(const AttributedGraphDataset& ds, Hyperparams hp, int reps) {
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < reps; ++r)
    best = std::min(best, nagc::cmd_bench(ds, "nagc", hp).total_seconds);
  return best;
}

Outcome criterion_scaling() {
  // serial kernels keep the measurements stable
  nagc::set_parallel_kernels(false);
  nagc::PlantedConfig base;
  base.n = 1000;
  base.k = 4;
  base.p_in = 0.05;
  base.p_out = 0.005;
  base.m = 500;
  base.seed = 11;
  AttributedGraphDataset half = nagc::generate_planted(base);
  half.name = "scale-m500";
  base.m = 1000;
  AttributedGraphDataset full = nagc::generate_planted(base);
  full.name = "scale-m1000";

  Hyperparams hp;
  hp.k1 = 4;
  hp.k2 = 4;
  hp.lambda = 0.01;
  hp.rho = 0.75;
  hp.iters = 20;
  hp.init = nagc::InitScheme::random;
  hp.seed = 3;

  const double attr_half = best_attribute_phase(half, hp, 3) / static_cast<double>(hp.iters);
  const double attr_full = best_attribute_phase(full, hp, 3) / static_cast<double>(hp.iters);
  const double m_ratio = attr_full / attr_half;

  Hyperparams doubled = hp;
  doubled.iters = 40;
  const double t_small = best_total(half, hp, 3);
  const double t_large = best_total(half, doubled, 3);
  const double t_ratio = t_large / t_small;
  nagc::set_parallel_kernels(true);

  std::string detail = "attribute-phase ratio (m x2) " + fmt(m_ratio) + ", total ratio (t x2) " +
                       fmt(t_ratio);
  if (!(m_ratio <= 2.5)) return bad(detail + " -- m scaling above 2.5");
  if (!(t_ratio >= 1.8 && t_ratio <= 2.2)) return bad(detail + " -- t scaling outside [1.8, 2.2]");
  return ok(detail);
}

// --- criterion 10: metric unit suite -------------------------------------------

Outcome criterion_metrics() {
  const std::vector<int> part{0, 0, 1, 1, 2, 2};
  if (nagc::adjusted_rand_index(part, part) != 1.0) return bad("identical partitions != 1");
  const std::vector<int> one(6, 0);
  const std::vector<int> other{0, 1, 2, 0, 1, 2};
  if (std::abs(nagc::adjusted_rand_index(one, other)) > 1e-12)
    return bad("single cluster vs other != 0");
  const std::vector<int> a{0, 0, 1, 1};
  const std::vector<int> b{0, 1, 1, 1};
  const double oracle_value = oracle::ari_pair_counting(a, b);
  if (std::abs(nagc::adjusted_rand_index(a, b) - oracle_value) > 1e-12)
    return bad("worked ARI example disagrees with the pair-counting oracle");

  std::vector<SparseSymGraph::Edge> tri{{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0},
                                        {3, 4, 1.0}, {4, 5, 1.0}, {3, 5, 1.0}};
  const SparseSymGraph g(6, std::move(tri));
  const std::vector<int> two_tri{0, 0, 0, 1, 1, 1};
  if (std::abs(nagc::modularity(g, two_tri) - 0.5) > 1e-12)
    return bad("two-triangle modularity != 1/2");

  DenseMatrix pure(4, 2);
  pure(0, 0) = pure(1, 0) = 1.0;
  pure(2, 1) = pure(3, 1) = 1.0;
  const std::vector<int> pure_labels{0, 0, 1, 1};
  if (nagc::average_entropy(pure, pure_labels) != 0.0) return bad("pure clusters entropy != 0");
  DenseMatrix half(4, 2);
  half(0, 0) = 1.0;
  half(1, 1) = 1.0;
  half(2, 0) = 1.0;
  half(3, 1) = 1.0;
  if (std::abs(nagc::average_entropy(half, pure_labels) - 1.0) > 1e-12)
    return bad("p=1/2 entropy != 1");

  // Table-style anchors on WebKB, order of magnitude only.
  if (const auto webkb = try_load("webkb")) {
    Hyperparams hp;
    hp.k1 = webkb->label_count();
    hp.k2 = 20;
    hp.lambda = 1e-4;
    hp.rho = 0.55;
    hp.iters = 100;
    hp.init = nagc::InitScheme::kmeans;
    hp.seed = 1;
    const nagc::RunRecord rec = nagc::cmd_fit(*webkb, "nagc", hp);
    if (*rec.modularity < 0.37 || *rec.modularity > 1.0)
      return bad("webkb modularity " + fmt(*rec.modularity) + " not near 0.738");
    if (*rec.avg_entropy < 0.05 || *rec.avg_entropy > 0.46)
      return bad("webkb entropy " + fmt(*rec.avg_entropy) + " not near 0.152");
    return ok("unit checks passed; webkb anchors modularity " + fmt(*rec.modularity) +
              ", entropy " + fmt(*rec.avg_entropy));
  }
  return ok("unit checks passed; webkb anchors skipped (dataset absent)");
}

}  // namespace

int main() {
  // planted datasets shared by criterion 4
  nagc::PlantedConfig strong;
  strong.n = 200;
  strong.k = 4;
  strong.p_in = 0.2;
  strong.p_out = 0.01;
  strong.m = 40;
  strong.seed = 7;
  AttributedGraphDataset planted_strong = nagc::generate_planted(strong);
  planted_strong.name = "planted-strong";
  strong.p_in = 0.05;
  AttributedGraphDataset planted_weak = nagc::generate_planted(strong);
  planted_weak.name = "planted-weak";
  strong.p_in = 0.3;
  strong.cluster_map = {0, 0, 1, 1};
  AttributedGraphDataset planted_mapped = nagc::generate_planted(strong);
  planted_mapped.name = "planted-mapped";

  std::vector<const AttributedGraphDataset*> fit_datasets{&planted_strong, &planted_weak,
                                                          &planted_mapped};
  std::optional<AttributedGraphDataset> webkb = try_load("webkb");
  std::optional<AttributedGraphDataset> cora = try_load("cora");
  if (webkb) fit_datasets.push_back(&*webkb);
  if (cora) fit_datasets.push_back(&*cora);

  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 gradient consistency", criterion_gradients},
      {"2 kernel oracle equivalence", criterion_kernels},
      {"3 symmetric-NMF specialization", criterion_snmf_specialization},
      {"4 non-negativity and finiteness",
       [&] { return criterion_nonnegativity(fit_datasets); }},
      {"5 V-step monotonicity", criterion_v_monotonicity},
      {"6 synthetic recovery", criterion_synthetic_recovery},
      {"7 reported-number reproduction", criterion_paper_numbers},
      {"8 baseline sanity", criterion_baseline_sanity},
      {"9 complexity scaling", criterion_scaling},
      {"10 metric unit suite", criterion_metrics},
  };

  int failures = 0, skips = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = bad(std::string("exception: ") + e.what());
    }
    const char* tag = outcome.kind == Outcome::pass ? "PASS"
                      : outcome.kind == Outcome::fail ? "FAIL"
                                                      : "SKIP";
    if (outcome.kind == Outcome::fail) ++failures;
    if (outcome.kind == Outcome::skip) ++skips;
    std::cout << tag << "  criterion " << c.name;
    if (!outcome.detail.empty()) std::cout << " -- " << outcome.detail;
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failures - skips) << " passed, " << failures << " failed, "
            << skips << " skipped\n";
  return failures == 0 ? 0 : 1;
}
