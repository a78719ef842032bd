#include "nagc/dataset.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "nagc/rng.hpp"

namespace nagc {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

double parse_double(const std::string& s, const std::string& where) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError(where + ": cannot parse number '" + s + "'");
  }
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

struct EdgeAccumulator {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<SparseSymGraph::Edge> edges;
  std::size_t dropped = 0;  // unknown endpoint
  std::size_t skipped = 0;  // self-loop or duplicate

  // Returns false when an endpoint is unknown.
  template <typename Lookup>
  bool add(const std::string& a, const std::string& b, double w, Lookup&& lookup) {
    const auto ia = lookup(a), ib = lookup(b);
    if (!ia || !ib) {
      ++dropped;
      return false;
    }
    if (*ia == *ib) {
      ++skipped;
      return true;
    }
    const auto key = std::minmax(*ia, *ib);
    if (!seen.insert(key).second) {
      ++skipped;
      return true;
    }
    edges.push_back({key.first, key.second, w});
    return true;
  }
};

void validate_dataset(const AttributedGraphDataset& ds) {
  if (ds.attributes.rows() != ds.graph.vertex_count())
    throw InputError("dataset invariant: attribute rows must equal vertex count");
  if (!ds.attributes.is_nonnegative())
    throw InputError("dataset invariant: attributes must be non-negative");
  if (ds.graph.has_self_loops())
    throw InputError("dataset invariant: self-loops are not allowed");
  if (ds.labels && ds.labels->size() != ds.graph.vertex_count())
    throw InputError("dataset invariant: label vector length must equal vertex count");
  if (ds.vertex_ids.size() != ds.graph.vertex_count())
    throw InputError("dataset invariant: vertex id count must equal vertex count");
}

std::string path_stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

}  // namespace

AttributedGraphDataset load_linqs(const std::string& content_path,
                                  const std::string& cites_path) {
  const std::vector<std::string> content = read_lines(content_path);

  std::vector<std::string> ids;
  std::vector<std::string> label_of_vertex;
  std::vector<std::vector<double>> features;
  std::unordered_map<std::string, std::size_t> index;
  std::size_t width = 0;

  for (std::size_t ln = 0; ln < content.size(); ++ln) {
    if (content[ln].empty()) continue;
    const std::string where = content_path + ":" + std::to_string(ln + 1);
    const std::vector<std::string> f = split_tabs(content[ln]);
    if (f.size() < 3) throw InputError(where + ": expected id, features, label");
    if (width == 0) width = f.size() - 2;
    if (f.size() - 2 != width)
      throw InputError(where + ": inconsistent feature width (" +
                       std::to_string(f.size() - 2) + " vs " + std::to_string(width) + ")");
    if (!index.try_emplace(f.front(), ids.size()).second)
      throw InputError(where + ": duplicate vertex id '" + f.front() + "'");
    ids.push_back(f.front());
    label_of_vertex.push_back(f.back());
    std::vector<double> row(width);
    for (std::size_t j = 0; j < width; ++j) {
      row[j] = parse_double(f[j + 1], where);
      if (row[j] < 0.0) throw InputError(where + ": negative attribute value");
    }
    features.push_back(std::move(row));
  }
  if (ids.empty()) throw InputError(content_path + ": no vertices");

  const std::vector<std::string> cites = read_lines(cites_path);
  EdgeAccumulator acc;
  auto lookup = [&](const std::string& id) -> std::optional<std::size_t> {
    const auto it = index.find(id);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  for (std::size_t ln = 0; ln < cites.size(); ++ln) {
    if (cites[ln].empty()) continue;
    const std::string where = cites_path + ":" + std::to_string(ln + 1);
    const std::vector<std::string> f = split_tabs(cites[ln]);
    if (f.size() != 2) throw InputError(where + ": expected target and source id");
    acc.add(f[0], f[1], 1.0, lookup);
  }

  AttributedGraphDataset ds{path_stem(content_path),
                            SparseSymGraph(ids.size(), std::move(acc.edges)),
                            DenseMatrix(ids.size(), width),
                            std::nullopt,
                            {},
                            std::move(ids),
                            acc.dropped};
  for (std::size_t i = 0; i < features.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) ds.attributes(i, j) = features[i][j];

  std::unordered_map<std::string, int> label_ids;
  std::vector<int> labels(label_of_vertex.size());
  for (std::size_t i = 0; i < label_of_vertex.size(); ++i) {
    const auto [it, inserted] =
        label_ids.try_emplace(label_of_vertex[i], static_cast<int>(label_ids.size()));
    if (inserted) ds.label_names.push_back(label_of_vertex[i]);
    labels[i] = it->second;
  }
  ds.labels = std::move(labels);

  validate_dataset(ds);
  return ds;
}

AttributedGraphDataset load_tsv(const std::string& edges_path, const std::string& attrs_path,
                                const std::string& labels_path) {
  const std::vector<std::string> attr_lines = read_lines(attrs_path);

  std::vector<std::string> ids;
  std::vector<std::vector<double>> features;
  std::unordered_map<std::string, std::size_t> index;
  std::size_t width = 0;

  for (std::size_t ln = 0; ln < attr_lines.size(); ++ln) {
    if (attr_lines[ln].empty()) continue;
    const std::string where = attrs_path + ":" + std::to_string(ln + 1);
    const std::vector<std::string> f = split_tabs(attr_lines[ln]);
    if (f.size() < 2) throw InputError(where + ": expected id and at least one value");
    if (width == 0) width = f.size() - 1;
    if (f.size() - 1 != width) throw InputError(where + ": inconsistent attribute width");
    if (!index.try_emplace(f.front(), ids.size()).second)
      throw InputError(where + ": duplicate vertex id '" + f.front() + "'");
    ids.push_back(f.front());
    std::vector<double> row(width);
    for (std::size_t j = 0; j < width; ++j) {
      row[j] = parse_double(f[j + 1], where);
      if (row[j] < 0.0) throw InputError(where + ": negative attribute value");
    }
    features.push_back(std::move(row));
  }
  if (ids.empty()) throw InputError(attrs_path + ": no vertices");

  const std::vector<std::string> edge_lines = read_lines(edges_path);
  EdgeAccumulator acc;
  auto lookup = [&](const std::string& id) -> std::optional<std::size_t> {
    const auto it = index.find(id);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  for (std::size_t ln = 0; ln < edge_lines.size(); ++ln) {
    if (edge_lines[ln].empty()) continue;
    const std::string where = edges_path + ":" + std::to_string(ln + 1);
    const std::vector<std::string> f = split_tabs(edge_lines[ln]);
    if (f.size() != 2 && f.size() != 3)
      throw InputError(where + ": expected src, dst and optional weight");
    const double w = f.size() == 3 ? parse_double(f[2], where) : 1.0;
    if (!(w > 0.0)) throw InputError(where + ": edge weight must be positive");
    acc.add(f[0], f[1], w, lookup);
  }

  AttributedGraphDataset ds{path_stem(edges_path),
                            SparseSymGraph(ids.size(), std::move(acc.edges)),
                            DenseMatrix(ids.size(), width),
                            std::nullopt,
                            {},
                            std::move(ids),
                            acc.dropped};
  for (std::size_t i = 0; i < features.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) ds.attributes(i, j) = features[i][j];

  if (!labels_path.empty()) {
    const std::vector<std::string> label_lines = read_lines(labels_path);
    std::unordered_map<std::string, std::string> label_of;
    for (std::size_t ln = 0; ln < label_lines.size(); ++ln) {
      if (label_lines[ln].empty()) continue;
      const std::string where = labels_path + ":" + std::to_string(ln + 1);
      const std::vector<std::string> f = split_tabs(label_lines[ln]);
      if (f.size() != 2) throw InputError(where + ": expected id and label");
      if (!label_of.emplace(f[0], f[1]).second)
        throw InputError(where + ": duplicate label for id '" + f[0] + "'");
    }
    std::unordered_map<std::string, int> label_ids;
    std::vector<int> labels(ds.vertex_ids.size());
    for (std::size_t i = 0; i < ds.vertex_ids.size(); ++i) {
      const auto it = label_of.find(ds.vertex_ids[i]);
      if (it == label_of.end())
        throw InputError(labels_path + ": missing label for id '" + ds.vertex_ids[i] + "'");
      const auto [lit, inserted] =
          label_ids.try_emplace(it->second, static_cast<int>(label_ids.size()));
      if (inserted) ds.label_names.push_back(it->second);
      labels[i] = lit->second;
    }
    ds.labels = std::move(labels);
  }

  validate_dataset(ds);
  return ds;
}

void save_tsv(const AttributedGraphDataset& ds, const std::string& edges_path,
              const std::string& attrs_path, const std::string& labels_path) {
  char buf[64];
  auto fmt = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };

  std::ofstream edges(edges_path);
  if (!edges) throw InputError("cannot write file: " + edges_path);
  for (const auto& e : ds.graph.edges())
    edges << ds.vertex_ids[e.i] << '\t' << ds.vertex_ids[e.j] << '\t' << fmt(e.w) << '\n';

  std::ofstream attrs(attrs_path);
  if (!attrs) throw InputError("cannot write file: " + attrs_path);
  for (std::size_t i = 0; i < ds.vertex_ids.size(); ++i) {
    attrs << ds.vertex_ids[i];
    for (std::size_t j = 0; j < ds.attributes.cols(); ++j)
      attrs << '\t' << fmt(ds.attributes(i, j));
    attrs << '\n';
  }

  if (ds.labels && !labels_path.empty()) {
    std::ofstream labels(labels_path);
    if (!labels) throw InputError("cannot write file: " + labels_path);
    for (std::size_t i = 0; i < ds.vertex_ids.size(); ++i)
      labels << ds.vertex_ids[i] << '\t' << ds.label_names[(*ds.labels)[i]] << '\n';
  }
}

AttributedGraphDataset generate_planted(const PlantedConfig& cfg) {
  if (cfg.n == 0 || cfg.k == 0 || cfg.m == 0)
    throw InputError("generate_planted: n, k and m must be positive");
  if (cfg.k > cfg.n) throw InputError("generate_planted: k must not exceed n");
  if (!(cfg.p_out >= 0.0 && cfg.p_out <= cfg.p_in && cfg.p_in <= 1.0))
    throw InputError("generate_planted: need 0 <= p_out <= p_in <= 1");
  for (double p : {cfg.attr_signal, cfg.attr_noise})
    if (!(p >= 0.0 && p <= 1.0))
      throw InputError("generate_planted: attribute probabilities must lie in [0, 1]");

  std::vector<std::size_t> map = cfg.cluster_map;
  if (map.empty()) {
    map.resize(cfg.k);
    for (std::size_t b = 0; b < cfg.k; ++b) map[b] = b;
  }
  if (map.size() != cfg.k)
    throw InputError("generate_planted: cluster_map must have one entry per block");
  std::size_t attr_k = 0;
  for (std::size_t v : map) attr_k = std::max(attr_k, v + 1);
  {
    std::vector<bool> hit(attr_k, false);
    for (std::size_t v : map) hit[v] = true;
    for (bool h : hit)
      if (!h) throw InputError("generate_planted: cluster_map must be surjective");
  }
  if (attr_k > cfg.m)
    throw InputError("generate_planted: more attribute clusters than attribute columns");

  Rng rng(cfg.seed);

  // Balanced blocks, remainder round-robin.
  auto block_of = [&](std::size_t i) { return i % cfg.k; };

  std::vector<SparseSymGraph::Edge> edges;
  for (std::size_t i = 0; i < cfg.n; ++i) {
    for (std::size_t j = i + 1; j < cfg.n; ++j) {
      const double p = block_of(i) == block_of(j) ? cfg.p_in : cfg.p_out;
      if (rng.uniform_half_open() < p) edges.push_back({i, j, 1.0});
    }
  }

  // Contiguous signature column ranges, one per attribute cluster.
  auto sig_begin = [&](std::size_t g) { return g * cfg.m / attr_k; };
  DenseMatrix attrs(cfg.n, cfg.m);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    const std::size_t g = map[block_of(i)];
    for (std::size_t j = 0; j < cfg.m; ++j) {
      const bool sig = j >= sig_begin(g) && j < sig_begin(g + 1);
      const double p = sig ? cfg.attr_signal : cfg.attr_noise;
      attrs(i, j) = rng.uniform_half_open() < p ? 1.0 : 0.0;
    }
  }

  AttributedGraphDataset ds{"planted",
                            SparseSymGraph(cfg.n, std::move(edges)),
                            std::move(attrs),
                            std::nullopt,
                            {},
                            {},
                            0};
  std::vector<int> labels(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) labels[i] = static_cast<int>(block_of(i));
  ds.labels = std::move(labels);
  ds.label_names.resize(cfg.k);
  for (std::size_t b = 0; b < cfg.k; ++b) ds.label_names[b] = std::to_string(b);
  ds.vertex_ids.resize(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) ds.vertex_ids[i] = "v" + std::to_string(i);

  validate_dataset(ds);
  return ds;
}

}  // namespace nagc
