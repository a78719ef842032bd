#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "nagc/harness.hpp"

namespace {

using nagc::AttributedGraphDataset;
using nagc::Hyperparams;

struct CommonOpts {
  std::string dataset_spec;
  std::string name;
  std::string method = "nagc";
  long long k1 = -1;  // -1: use the ground-truth label count
  long long k2 = -1;  // -1: same as k1
  double lambda = 0.01;
  double rho = 0.75;
  std::size_t iters = 100;
  std::string init = "kmeans";
  std::uint64_t seed = 1;
  std::size_t restarts = 5;
  std::string out_dir;
  std::string format = "json";
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_method = true) {
  cmd->add_option("--dataset", o.dataset_spec,
                  "Dataset spec: linqs:<content>,<cites> | tsv:<edges>,<attrs>[,<labels>] | "
                  "synth:n=..,k=..,p_in=..,p_out=..,m=..,signal=..,noise=..,seed=..[,map=0-0-1-1]")
      ->required();
  cmd->add_option("--name", o.name, "Dataset display name (defaults to a name from the spec)");
  if (with_method)
    cmd->add_option("--method", o.method, "nagc | nagc-nopu | snmf | nmf | kmeans")
        ->check(CLI::IsMember({"nagc", "nagc-nopu", "snmf", "nmf", "kmeans"}));
  cmd->add_option("--k1", o.k1, "Cluster count (default: number of ground-truth labels)");
  cmd->add_option("--k2", o.k2, "Attribute factor count (default: k1)");
  cmd->add_option("--lambda", o.lambda, "Topology/attribute balance (default 0.01)");
  cmd->add_option("--rho", o.rho, "PU bias weight in [0,1] (default 0.75)");
  cmd->add_option("--iters", o.iters, "Update rounds (default 100)");
  cmd->add_option("--init", o.init, "random | kmeans (default kmeans)")
      ->check(CLI::IsMember({"random", "kmeans"}));
  cmd->add_option("--seed", o.seed, "Base seed (default 1)");
  cmd->add_option("--restarts", o.restarts, "Restart count (default 5)");
  cmd->add_option("--out", o.out_dir, "Directory for emitted records/summaries");
  cmd->add_option("--format", o.format, "Console summary format: json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--threads", o.threads, "OpenMP thread count (0 = runtime default)");
}

AttributedGraphDataset load(const CommonOpts& o) {
#ifdef _OPENMP
  if (o.threads > 0) omp_set_num_threads(o.threads);
#endif
  AttributedGraphDataset ds = nagc::load_dataset_spec(o.dataset_spec);
  if (!o.name.empty()) ds.name = o.name;
  if (ds.dropped_edges > 0)
    std::cerr << "warning: dropped " << ds.dropped_edges
              << " edge(s) referencing unknown vertex ids\n";
  return ds;
}

Hyperparams resolve_hyperparams(const CommonOpts& o, const AttributedGraphDataset& ds) {
  Hyperparams hp;
  if (o.k1 > 0) {
    hp.k1 = static_cast<std::size_t>(o.k1);
  } else if (ds.labels) {
    hp.k1 = ds.label_count();
  } else {
    throw nagc::InputError("dataset has no labels; pass --k1 explicitly");
  }
  hp.k2 = o.k2 > 0 ? static_cast<std::size_t>(o.k2) : hp.k1;
  hp.lambda = o.lambda;
  hp.rho = o.rho;
  hp.iters = o.iters;
  hp.init = nagc::init_scheme_from_string(o.init);
  hp.seed = o.seed;
  return hp;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw nagc::InputError("cannot write file: " + path.string());
  out << text;
}

void emit_records(const CommonOpts& o, const std::vector<nagc::RunRecord>& records) {
  if (o.out_dir.empty()) return;
  std::filesystem::create_directories(o.out_dir);
  for (const nagc::RunRecord& rec : records) {
    const std::string file =
        "record_" + rec.method + "_" + rec.dataset + "_" + std::to_string(rec.seed) + ".json";
    write_file(std::filesystem::path(o.out_dir) / file, nagc::to_json(rec).dump(2) + "\n");
  }
}

int run_fit(const CommonOpts& o) {
  const AttributedGraphDataset ds = load(o);
  const nagc::RunRecord rec = nagc::cmd_fit(ds, o.method, resolve_hyperparams(o, ds));
  std::cout << nagc::to_json(rec).dump(2) << "\n";
  emit_records(o, {rec});
  return 0;
}

int run_restarts(const CommonOpts& o) {
  const AttributedGraphDataset ds = load(o);
  const nagc::RestartSummary s =
      nagc::cmd_restarts(ds, o.method, resolve_hyperparams(o, ds), o.restarts);
  if (o.format == "csv")
    std::cout << nagc::summary_csv_header() << "\n" << nagc::summary_csv_row(s) << "\n";
  else
    std::cout << nagc::to_json(s).dump(2) << "\n";
  emit_records(o, s.runs);
  if (!o.out_dir.empty()) {
    write_file(std::filesystem::path(o.out_dir) / "summary.json", nagc::to_json(s).dump(2) + "\n");
    write_file(std::filesystem::path(o.out_dir) / "summary.csv",
               nagc::summary_csv_header() + "\n" + nagc::summary_csv_row(s) + "\n");
  }
  return 0;
}

int run_grid(const CommonOpts& o, const std::vector<double>& lambdas,
             const std::vector<std::size_t>& k2s, const std::vector<double>& rhos) {
  const AttributedGraphDataset ds = load(o);
  const Hyperparams hp = resolve_hyperparams(o, ds);
  nagc::GridSpec grid = nagc::default_grid(hp.k1);
  if (!lambdas.empty()) grid.lambdas = lambdas;
  if (!k2s.empty()) grid.k2s = k2s;
  if (!rhos.empty()) grid.rhos = rhos;

  const nagc::GridResult result = nagc::cmd_grid(ds, o.method, hp, grid, o.restarts);
  const nagc::GridCell& best = result.cells[result.best_index];
  if (o.format == "csv") {
    std::cout << nagc::grid_csv(result);
  } else {
    nlohmann::json cells = nlohmann::json::array();
    for (const nagc::GridCell& c : result.cells)
      cells.push_back({{"lambda", c.lambda},
                       {"k2", c.k2},
                       {"rho", c.rho},
                       {"summary", nagc::to_json(c.summary)}});
    std::cout << nlohmann::json{{"cells", cells},
                                {"best",
                                 {{"lambda", best.lambda},
                                  {"k2", best.k2},
                                  {"rho", best.rho},
                                  {"summary", nagc::to_json(best.summary)}}}}
                     .dump(2)
              << "\n";
  }
  std::cerr << "best cell: lambda=" << best.lambda << " k2=" << best.k2 << " rho=" << best.rho
            << (best.summary.ari ? " mean ARI=" + std::to_string(best.summary.ari->mean) : "")
            << "\n";
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    write_file(std::filesystem::path(o.out_dir) / "grid.csv", nagc::grid_csv(result));
  }
  return 0;
}

int run_bench(const CommonOpts& o) {
  const AttributedGraphDataset ds = load(o);
  const nagc::BenchReport report = nagc::cmd_bench(ds, o.method, resolve_hyperparams(o, ds));
  std::cout << nagc::to_json(report).dump(2) << "\n";
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    write_file(std::filesystem::path(o.out_dir) / "bench.json",
               nagc::to_json(report).dump(2) + "\n");
  }
  return 0;
}

int run_synth(const CommonOpts& o) {
  AttributedGraphDataset ds = load(o);
  if (o.out_dir.empty()) throw nagc::InputError("synth requires --out <directory>");
  std::filesystem::create_directories(o.out_dir);
  const std::filesystem::path dir(o.out_dir);
  const std::string base = ds.name;
  nagc::save_tsv(ds, (dir / (base + ".edges.tsv")).string(),
                 (dir / (base + ".attrs.tsv")).string(),
                 (dir / (base + ".labels.tsv")).string());
  std::cout << nlohmann::json{{"dataset", ds.name},
                              {"vertices", ds.vertex_count()},
                              {"edges", ds.graph.edge_count()},
                              {"attributes", ds.attribute_count()},
                              {"labels", ds.label_count()},
                              {"out", o.out_dir}}
                   .dump(2)
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Attributed graph clustering by PU-weighted symmetric NMF with a non-linear "
               "cluster-assignment projection, plus baselines and an experiment harness"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::vector<double> grid_lambdas, grid_rhos;
  std::vector<std::size_t> grid_k2s;

  CLI::App* fit = app.add_subcommand("fit", "Run one method once and emit a run record");
  add_common(fit, opts);
  CLI::App* restarts =
      app.add_subcommand("restarts", "Average metrics over seeded restarts");
  add_common(restarts, opts);
  CLI::App* grid = app.add_subcommand("grid", "Hyperparameter grid search");
  add_common(grid, opts);
  grid->add_option("--grid-lambda", grid_lambdas, "Lambda candidates (default: standard grid)");
  grid->add_option("--grid-k2", grid_k2s, "k2 candidates (default: standard grid)");
  grid->add_option("--grid-rho", grid_rhos, "Rho candidates (default: standard grid)");
  CLI::App* bench = app.add_subcommand("bench", "Timing report with per-phase split");
  add_common(bench, opts);
  CLI::App* synth = app.add_subcommand("synth", "Generate a planted dataset and write TSV");
  add_common(synth, opts, /*with_method=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (fit->parsed()) return run_fit(opts);
    if (restarts->parsed()) return run_restarts(opts);
    if (grid->parsed()) return run_grid(opts, grid_lambdas, grid_k2s, grid_rhos);
    if (bench->parsed()) return run_bench(opts);
    if (synth->parsed()) return run_synth(opts);
  } catch (const nagc::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 2;
  } catch (const nagc::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
