#include "nagc/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "nagc/baselines.hpp"
#include "nagc/metrics.hpp"

namespace nagc {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

MetricStats stats_of(const std::vector<double>& xs) {
  MetricStats s;
  if (xs.empty()) return s;
  for (double x : xs) s.mean += x;
  s.mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - s.mean) * (x - s.mean);
  s.stddev = std::sqrt(var / static_cast<double>(xs.size()));
  return s;
}

}  // namespace

bool is_known_method(const std::string& method) {
  return method == "nagc" || method == "nagc-nopu" || method == "snmf" || method == "nmf" ||
         method == "kmeans";
}

RunRecord cmd_fit(const AttributedGraphDataset& ds, const std::string& method,
                  Hyperparams hp) {
  if (!is_known_method(method)) throw InputError("unknown method '" + method + "'");
  if (method == "nagc-nopu") hp.rho = 0.5;

  RunRecord rec;
  rec.dataset = ds.name;
  rec.method = method;
  rec.seed = hp.seed;

  const auto start = Clock::now();
  if (method == "nagc" || method == "nagc-nopu") {
    if (hp.iters == 0) {
      // Metrics on the initial assignment; the update loop never runs.
      validate_hyperparams(hp, ds.vertex_count(), ds.attributes.cols());
      normalize_adjacency(ds.graph, ds.attributes);
      const FactorModel init = hp.init == InitScheme::kmeans
                                   ? init_kmeans(ds.attributes, hp)
                                   : init_random(ds.vertex_count(), ds.attributes.cols(), hp);
      rec.labels = assign_clusters(init);
    } else {
      FitResult res = fit(ds.graph, ds.attributes, hp);
      rec.trace = std::move(res.trace);
      rec.labels = assign_clusters(res.model);
    }
  } else if (method == "snmf") {
    SnmfResult res = snmf_fit(ds.graph, hp.k1, hp.iters, hp.seed, hp.epsilon);
    for (double l : res.loss_trace) rec.trace.push_back({l, 0.0, l});
    rec.labels = assign_clusters(res.U);
  } else if (method == "nmf") {
    NmfResult res = nmf_fit(ds.attributes, hp.k1, hp.iters, hp.seed, hp.epsilon);
    for (double l : res.loss_trace) rec.trace.push_back({0.0, l, l});
    rec.labels = assign_clusters(res.U);
  } else {  // kmeans
    KmeansResult res = kmeans_fit(ds.attributes, hp.k1, hp.iters, 1, hp.seed);
    for (double l : res.inertia_trace) rec.trace.push_back({0.0, l, l});
    rec.labels = std::move(res.labels);
  }
  rec.wall_time_seconds = seconds_since(start);
  rec.hp = hp;

  if (ds.labels)
    rec.ari = adjusted_rand_index(*ds.labels, rec.labels);
  rec.modularity = modularity(ds.graph, rec.labels);
  rec.avg_entropy = average_entropy(ds.attributes, rec.labels);
  return rec;
}

RestartSummary cmd_restarts(const AttributedGraphDataset& ds, const std::string& method,
                            Hyperparams hp, std::size_t restarts) {
  if (restarts == 0) throw InputError("restarts must be at least 1");
  RestartSummary summary;
  summary.dataset = ds.name;
  summary.method = method;
  summary.hp = hp;
  summary.restarts = restarts;

  std::vector<double> aris, mods, ents, walls;
  for (std::size_t r = 0; r < restarts; ++r) {
    Hyperparams run_hp = hp;
    run_hp.seed = hp.seed + r;
    RunRecord rec = cmd_fit(ds, method, run_hp);
    if (rec.ari) aris.push_back(*rec.ari);
    if (rec.modularity) mods.push_back(*rec.modularity);
    if (rec.avg_entropy) ents.push_back(*rec.avg_entropy);
    walls.push_back(rec.wall_time_seconds);
    summary.runs.push_back(std::move(rec));
  }
  if (!aris.empty()) summary.ari = stats_of(aris);
  summary.modularity = stats_of(mods);
  summary.avg_entropy = stats_of(ents);
  summary.wall_time = stats_of(walls);
  return summary;
}

GridSpec default_grid(std::size_t k1) {
  GridSpec g;
  g.lambdas = {1e-10, 1e-8, 1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 0.1, 1.0, 10.0, 100.0};
  g.k2s = {k1, 5, 7, 10, 15, 20};
  g.rhos = {0.5, 0.55, 0.75, 0.95, 0.995};
  return g;
}

std::size_t select_best_cell(const std::vector<GridCell>& cells) {
  if (cells.empty()) throw InputError("grid has no cells");
  std::size_t best = 0;
  for (std::size_t i = 1; i < cells.size(); ++i) {
    if (!cells[i].summary.ari || !cells[best].summary.ari)
      throw InputError("grid selection needs ARI on every cell (dataset lacks labels)");
    const double a = cells[i].summary.ari->mean;
    const double b = cells[best].summary.ari->mean;
    if (a > b) {
      best = i;
    } else if (a == b) {
      const auto key = [](const GridCell& c) {
        return std::make_tuple(c.lambda, c.k2, c.rho);
      };
      if (key(cells[i]) < key(cells[best])) best = i;
    }
  }
  return best;
}

GridResult cmd_grid(const AttributedGraphDataset& ds, const std::string& method,
                    Hyperparams base_hp, const GridSpec& grid, std::size_t restarts) {
  if (grid.lambdas.empty() || grid.k2s.empty() || grid.rhos.empty())
    throw InputError("grid must be non-empty in every dimension");
  if (!ds.labels) throw InputError("grid search requires ground-truth labels");

  GridResult result;
  for (double lambda : grid.lambdas) {
    for (std::size_t k2 : grid.k2s) {
      for (double rho : grid.rhos) {
        Hyperparams hp = base_hp;
        hp.lambda = lambda;
        hp.k2 = k2;
        hp.rho = rho;
        GridCell cell{lambda, k2, rho, cmd_restarts(ds, method, hp, restarts)};
        result.cells.push_back(std::move(cell));
      }
    }
  }
  result.best_index = select_best_cell(result.cells);
  return result;
}

BenchReport cmd_bench(const AttributedGraphDataset& ds, const std::string& method,
                      Hyperparams hp) {
  if (!is_known_method(method)) throw InputError("unknown method '" + method + "'");
  if (method == "nagc-nopu") hp.rho = 0.5;

  BenchReport report;
  report.dataset = ds.name;
  report.method = method;
  report.iters = hp.iters;

  auto run_once = [&](PhaseTimers* timers) {
    const auto start = Clock::now();
    if (method == "nagc" || method == "nagc-nopu") {
      fit(ds.graph, ds.attributes, hp, timers);
      report.peak_factor_elements = ds.vertex_count() * hp.k1 +
                                    ds.attributes.cols() * hp.k2 + hp.k1 * hp.k2;
    } else if (method == "snmf") {
      const auto t0 = Clock::now();
      snmf_fit(ds.graph, hp.k1, hp.iters, hp.seed, hp.epsilon);
      if (timers) timers->topology_seconds += seconds_since(t0);
      report.peak_factor_elements = ds.vertex_count() * hp.k1;
    } else if (method == "nmf") {
      const auto t0 = Clock::now();
      nmf_fit(ds.attributes, hp.k1, hp.iters, hp.seed, hp.epsilon);
      if (timers) timers->attribute_seconds += seconds_since(t0);
      report.peak_factor_elements = (ds.vertex_count() + ds.attributes.cols()) * hp.k1;
    } else {
      const auto t0 = Clock::now();
      kmeans_fit(ds.attributes, hp.k1, hp.iters, 1, hp.seed);
      if (timers) timers->attribute_seconds += seconds_since(t0);
      report.peak_factor_elements = hp.k1 * ds.attributes.cols();
    }
    return seconds_since(start);
  };

  run_once(nullptr);  // warm-up, excluded from the report
  PhaseTimers timers;
  report.total_seconds = run_once(&timers);
  report.per_iteration_seconds =
      hp.iters == 0 ? 0.0 : report.total_seconds / static_cast<double>(hp.iters);
  report.topology_phase_seconds = timers.topology_seconds;
  report.attribute_phase_seconds = timers.attribute_seconds;
  report.peak_factor_bytes = report.peak_factor_elements * sizeof(double);
  return report;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

json hp_to_json(const Hyperparams& hp) {
  return json{{"k1", hp.k1},       {"k2", hp.k2},           {"lambda", hp.lambda},
              {"rho", hp.rho},     {"iters", hp.iters},     {"epsilon", hp.epsilon},
              {"init", to_string(hp.init)}, {"seed", hp.seed}};
}

Hyperparams hp_from_json(const json& j) {
  Hyperparams hp;
  hp.k1 = j.at("k1").get<std::size_t>();
  hp.k2 = j.at("k2").get<std::size_t>();
  hp.lambda = j.at("lambda").get<double>();
  hp.rho = j.at("rho").get<double>();
  hp.iters = j.at("iters").get<std::size_t>();
  hp.epsilon = j.at("epsilon").get<double>();
  hp.init = init_scheme_from_string(j.at("init").get<std::string>());
  hp.seed = j.at("seed").get<std::uint64_t>();
  return hp;
}

json stats_to_json(const MetricStats& s) {
  return json{{"mean", s.mean}, {"stddev", s.stddev}};
}

}  // namespace

json to_json(const RunRecord& rec) {
  json trace = json::array();
  for (const LossBreakdown& lb : rec.trace)
    trace.push_back({{"topology", lb.topology}, {"attribute", lb.attribute}, {"total", lb.total}});
  json metrics = json::object();
  if (rec.ari) metrics["ari"] = *rec.ari;
  if (rec.modularity) metrics["modularity"] = *rec.modularity;
  if (rec.avg_entropy) metrics["avg_entropy"] = *rec.avg_entropy;
  return json{{"dataset", rec.dataset},
              {"method", rec.method},
              {"hyperparams", hp_to_json(rec.hp)},
              {"seed", rec.seed},
              {"loss_trace", trace},
              {"labels", rec.labels},
              {"metrics", metrics},
              {"wall_time_seconds", rec.wall_time_seconds}};
}

RunRecord run_record_from_json(const json& j) {
  RunRecord rec;
  rec.dataset = j.at("dataset").get<std::string>();
  rec.method = j.at("method").get<std::string>();
  rec.hp = hp_from_json(j.at("hyperparams"));
  rec.seed = j.at("seed").get<std::uint64_t>();
  for (const json& t : j.at("loss_trace"))
    rec.trace.push_back({t.at("topology").get<double>(), t.at("attribute").get<double>(),
                         t.at("total").get<double>()});
  rec.labels = j.at("labels").get<std::vector<int>>();
  const json& metrics = j.at("metrics");
  if (metrics.contains("ari")) rec.ari = metrics["ari"].get<double>();
  if (metrics.contains("modularity")) rec.modularity = metrics["modularity"].get<double>();
  if (metrics.contains("avg_entropy")) rec.avg_entropy = metrics["avg_entropy"].get<double>();
  rec.wall_time_seconds = j.at("wall_time_seconds").get<double>();
  return rec;
}

std::optional<std::string> validate_run_record(const json& j) {
  auto missing = [&](const char* key) -> std::optional<std::string> {
    return "missing or mistyped field: " + std::string(key);
  };
  if (!j.is_object()) return "record must be a JSON object";
  if (!j.contains("dataset") || !j["dataset"].is_string()) return missing("dataset");
  if (!j.contains("method") || !j["method"].is_string()) return missing("method");
  if (!is_known_method(j["method"].get<std::string>()))
    return "unknown method name: " + j["method"].get<std::string>();
  if (!j.contains("hyperparams") || !j["hyperparams"].is_object()) return missing("hyperparams");
  const json& hp = j["hyperparams"];
  for (const char* key : {"k1", "k2", "iters", "seed"})
    if (!hp.contains(key) || !hp[key].is_number_unsigned()) return missing(key);
  for (const char* key : {"lambda", "rho", "epsilon"})
    if (!hp.contains(key) || !hp[key].is_number()) return missing(key);
  if (!hp.contains("init") || !hp["init"].is_string()) return missing("init");
  if (!j.contains("seed") || !j["seed"].is_number_unsigned()) return missing("seed");
  if (!j.contains("loss_trace") || !j["loss_trace"].is_array()) return missing("loss_trace");
  for (const json& t : j["loss_trace"]) {
    for (const char* key : {"topology", "attribute", "total"})
      if (!t.contains(key) || !t[key].is_number()) return missing(key);
  }
  const std::string method = j["method"].get<std::string>();
  const std::size_t iters = hp["iters"].get<std::size_t>();
  if (method != "kmeans" && j["loss_trace"].size() != iters)
    return "loss_trace length must equal iters";
  if (method == "kmeans" && j["loss_trace"].size() > std::max<std::size_t>(iters, 1))
    return "loss_trace length must not exceed iters";
  if (!j.contains("labels") || !j["labels"].is_array()) return missing("labels");
  if (!j.contains("metrics") || !j["metrics"].is_object()) return missing("metrics");
  if (!j.contains("wall_time_seconds") || !j["wall_time_seconds"].is_number())
    return missing("wall_time_seconds");
  return std::nullopt;
}

json to_json(const RestartSummary& s, bool include_runs) {
  json out{{"dataset", s.dataset},
           {"method", s.method},
           {"hyperparams", hp_to_json(s.hp)},
           {"restarts", s.restarts},
           {"modularity", stats_to_json(s.modularity)},
           {"avg_entropy", stats_to_json(s.avg_entropy)},
           {"wall_time_seconds", stats_to_json(s.wall_time)}};
  if (s.ari) out["ari"] = stats_to_json(*s.ari);
  if (include_runs) {
    json runs = json::array();
    for (const RunRecord& r : s.runs) runs.push_back(to_json(r));
    out["runs"] = runs;
  }
  return out;
}

std::string summary_csv_header() {
  return "dataset,method,k1,k2,lambda,rho,iters,init,base_seed,restarts,"
         "ari_mean,ari_std,modularity_mean,modularity_std,entropy_mean,entropy_std,"
         "wall_mean_seconds";
}

std::string summary_csv_row(const RestartSummary& s) {
  std::ostringstream os;
  os.precision(10);
  os << s.dataset << ',' << s.method << ',' << s.hp.k1 << ',' << s.hp.k2 << ',' << s.hp.lambda
     << ',' << s.hp.rho << ',' << s.hp.iters << ',' << to_string(s.hp.init) << ',' << s.hp.seed
     << ',' << s.restarts << ',';
  if (s.ari)
    os << s.ari->mean << ',' << s.ari->stddev;
  else
    os << ',';
  os << ',' << s.modularity.mean << ',' << s.modularity.stddev << ',' << s.avg_entropy.mean
     << ',' << s.avg_entropy.stddev << ',' << s.wall_time.mean;
  return os.str();
}

std::string grid_csv(const GridResult& g) {
  std::ostringstream os;
  os << "lambda,k2,rho," << summary_csv_header() << ",best\n";
  os.precision(10);
  for (std::size_t i = 0; i < g.cells.size(); ++i) {
    const GridCell& c = g.cells[i];
    os << c.lambda << ',' << c.k2 << ',' << c.rho << ',' << summary_csv_row(c.summary) << ','
       << (i == g.best_index ? 1 : 0) << '\n';
  }
  return os.str();
}

json to_json(const BenchReport& b) {
  return json{{"dataset", b.dataset},
              {"method", b.method},
              {"iters", b.iters},
              {"total_seconds", b.total_seconds},
              {"per_iteration_seconds", b.per_iteration_seconds},
              {"phase_seconds",
               {{"topology", b.topology_phase_seconds}, {"attribute", b.attribute_phase_seconds}}},
              {"peak_factor_elements", b.peak_factor_elements},
              {"peak_factor_bytes", b.peak_factor_bytes}};
}

// ---------------------------------------------------------------------------
// Dataset specs
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

AttributedGraphDataset load_synth_spec(const std::string& body) {
  PlantedConfig cfg;
  for (const std::string& kv : split_on(body, ',')) {
    if (kv.empty()) continue;
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos)
      throw InputError("synth spec entries must look like key=value: " + kv);
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    try {
      if (key == "n")
        cfg.n = std::stoul(value);
      else if (key == "k")
        cfg.k = std::stoul(value);
      else if (key == "p_in")
        cfg.p_in = std::stod(value);
      else if (key == "p_out")
        cfg.p_out = std::stod(value);
      else if (key == "m")
        cfg.m = std::stoul(value);
      else if (key == "signal")
        cfg.attr_signal = std::stod(value);
      else if (key == "noise")
        cfg.attr_noise = std::stod(value);
      else if (key == "seed")
        cfg.seed = std::stoull(value);
      else if (key == "map") {
        cfg.cluster_map.clear();
        for (const std::string& part : split_on(value, '-'))
          cfg.cluster_map.push_back(std::stoul(part));
      } else {
        throw InputError("unknown synth spec key: " + key);
      }
    } catch (const InputError&) {
      throw;
    } catch (const std::exception&) {
      throw InputError("cannot parse synth spec value: " + kv);
    }
  }
  AttributedGraphDataset ds = generate_planted(cfg);
  ds.name = "planted-n" + std::to_string(cfg.n) + "k" + std::to_string(cfg.k);
  return ds;
}

}  // namespace

AttributedGraphDataset load_dataset_spec(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw InputError("dataset spec must start with linqs:, tsv: or synth:");
  const std::string kind = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  if (kind == "linqs") {
    const auto parts = split_on(body, ',');
    if (parts.size() != 2) throw InputError("linqs spec: expected content,cites paths");
    return load_linqs(parts[0], parts[1]);
  }
  if (kind == "tsv") {
    const auto parts = split_on(body, ',');
    if (parts.size() != 2 && parts.size() != 3)
      throw InputError("tsv spec: expected edges,attrs[,labels] paths");
    return load_tsv(parts[0], parts[1], parts.size() == 3 ? parts[2] : "");
  }
  if (kind == "synth") return load_synth_spec(body);
  throw InputError("unknown dataset spec kind: " + kind);
}

}  // namespace nagc
