#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nagc/core.hpp"
#include "nagc/dataset.hpp"

// Experiment harness: single fits, restart-averaged evaluation, grid search
// and timing benchmarks, each emitting serializable run records.

namespace nagc {

// Methods: "nagc", "nagc-nopu" (rho forced to 0.5), "snmf", "nmf", "kmeans".
bool is_known_method(const std::string& method);

struct RunRecord {
  std::string dataset;
  std::string method;
  Hyperparams hp;
  std::uint64_t seed = 0;                 // the seed this run actually used
  std::vector<LossBreakdown> trace;
  std::vector<int> labels;                // predicted assignment
  std::optional<double> ari;              // present iff ground truth exists
  std::optional<double> modularity;       // present iff a graph is available
  std::optional<double> avg_entropy;      // present iff attributes are available
  double wall_time_seconds = 0.0;
};

nlohmann::json to_json(const RunRecord& rec);
RunRecord run_record_from_json(const nlohmann::json& j);

// Checks a serialized record against the documented schema (see README);
// returns a human-readable complaint or nullopt when valid.
std::optional<std::string> validate_run_record(const nlohmann::json& j);

// Runs one method once and computes every available metric.
RunRecord cmd_fit(const AttributedGraphDataset& ds, const std::string& method,
                  Hyperparams hp);

struct MetricStats {
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
};

struct RestartSummary {
  std::string dataset;
  std::string method;
  Hyperparams hp;          // base hyperparameters (seed = base seed)
  std::size_t restarts = 0;
  std::optional<MetricStats> ari;
  MetricStats modularity;
  MetricStats avg_entropy;
  MetricStats wall_time;
  std::vector<RunRecord> runs;
};

// Restart r uses seed = hp.seed + r; reports mean and population stddev.
RestartSummary cmd_restarts(const AttributedGraphDataset& ds, const std::string& method,
                            Hyperparams hp, std::size_t restarts);

nlohmann::json to_json(const RestartSummary& s, bool include_runs = false);
std::string summary_csv_header();
std::string summary_csv_row(const RestartSummary& s);

struct GridSpec {
  std::vector<double> lambdas;
  std::vector<std::size_t> k2s;
  std::vector<double> rhos;
};

// The grids used throughout the evaluation protocol; k2 candidates include
// k1 itself.
GridSpec default_grid(std::size_t k1);

struct GridCell {
  double lambda = 0.0;
  std::size_t k2 = 0;
  double rho = 0.0;
  RestartSummary summary;
};

struct GridResult {
  std::vector<GridCell> cells;
  std::size_t best_index = 0;
};

// Best cell by mean ARI; exact ties prefer lower lambda, then lower k2, then
// lower rho. Pure function of the summary table.
std::size_t select_best_cell(const std::vector<GridCell>& cells);

GridResult cmd_grid(const AttributedGraphDataset& ds, const std::string& method,
                    Hyperparams base_hp, const GridSpec& grid, std::size_t restarts);

std::string grid_csv(const GridResult& g);

struct BenchReport {
  std::string dataset;
  std::string method;
  std::size_t iters = 0;
  double total_seconds = 0.0;
  double per_iteration_seconds = 0.0;
  double topology_phase_seconds = 0.0;
  double attribute_phase_seconds = 0.0;
  std::size_t peak_factor_elements = 0;  // U, V, H together
  std::size_t peak_factor_bytes = 0;
};

// Wall-clock timing with one untimed warm-up run; the phase split separates
// work that scales with the attribute count from the rest.
BenchReport cmd_bench(const AttributedGraphDataset& ds, const std::string& method,
                      Hyperparams hp);

nlohmann::json to_json(const BenchReport& b);

// Dataset specs accepted by the CLI:
//   linqs:<content>,<cites>
//   tsv:<edges>,<attrs>[,<labels>]
//   synth:n=..,k=..,p_in=..,p_out=..,m=..,signal=..,noise=..,seed=..[,map=0-0-1-1]
AttributedGraphDataset load_dataset_spec(const std::string& spec);

}  // namespace nagc
