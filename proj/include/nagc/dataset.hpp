#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nagc/dense_matrix.hpp"
#include "nagc/sparse_graph.hpp"

namespace nagc {

// A loaded attributed graph: symmetric weighted adjacency, non-negative
// vertex attributes, optional ground-truth labels. Immutable after
// construction; validated invariants: no self-loops or duplicate edges,
// attribute row count equals the vertex count, attributes non-negative.
struct AttributedGraphDataset {
  std::string name;
  SparseSymGraph graph;
  DenseMatrix attributes;
  std::optional<std::vector<int>> labels;   // dense ids 0..k-1
  std::vector<std::string> label_names;     // id -> original label string
  std::vector<std::string> vertex_ids;      // original string identifiers
  std::size_t dropped_edges = 0;            // references to unknown vertices

  std::size_t vertex_count() const { return graph.vertex_count(); }
  std::size_t attribute_count() const { return attributes.cols(); }
  std::size_t label_count() const { return label_names.size(); }
};

// Citation-network layout: a .content file with lines
//   <id> TAB <f1> ... <fm> TAB <label>
// and a .cites file with lines <target_id> TAB <source_id>. Direction is
// discarded, self-loops and duplicate edges are removed, edges referencing
// unknown ids are dropped and counted, and all kept edges get weight 1.
AttributedGraphDataset load_linqs(const std::string& content_path,
                                  const std::string& cites_path);

// Generic TSV layout. Edges: "src TAB dst [TAB weight]" (weight defaults
// to 1); attributes: "id TAB v1 ... vm"; labels (optional): "id TAB label".
// The attribute file defines the vertex set and order; ids present only in
// the attribute file become isolated vertices.
AttributedGraphDataset load_tsv(const std::string& edges_path,
                                const std::string& attrs_path,
                                const std::string& labels_path = "");

// Writes the three TSV files accepted by load_tsv; reloading yields an
// identical dataset.
void save_tsv(const AttributedGraphDataset& ds, const std::string& edges_path,
              const std::string& attrs_path, const std::string& labels_path);

struct PlantedConfig {
  std::size_t n = 200;
  std::size_t k = 4;        // topology blocks (vertex i belongs to block i mod k)
  double p_in = 0.2;        // intra-block edge probability
  double p_out = 0.01;      // inter-block edge probability
  std::size_t m = 40;       // attribute count
  double attr_signal = 0.8; // P(attribute on) on the block's signature columns
  double attr_noise = 0.05; // P(attribute on) elsewhere
  // Surjection from topology blocks onto attribute clusters; empty means
  // identity. A many-to-one map plants attribute structure coarser than the
  // topology, exercising the transfer factor.
  std::vector<std::size_t> cluster_map;
  std::uint64_t seed = 1;
};

// Planted-partition attributed graph with ground-truth labels set to the
// topology blocks. Deterministic for a fixed config.
AttributedGraphDataset generate_planted(const PlantedConfig& cfg);

}  // namespace nagc
