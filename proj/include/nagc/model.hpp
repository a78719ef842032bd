#pragma once

#include <cstdint>
#include <string>

#include "nagc/dense_matrix.hpp"
#include "nagc/errors.hpp"

namespace nagc {

enum class InitScheme { random, kmeans };

std::string to_string(InitScheme s);
InitScheme init_scheme_from_string(const std::string& s);

struct Hyperparams {
  std::size_t k1 = 2;        // number of vertex clusters
  std::size_t k2 = 2;        // number of attribute factors
  double lambda = 0.01;      // topology/attribute balance
  double rho = 0.75;         // PU bias weight on observed edges, in [0, 1]
  std::size_t iters = 100;   // fixed iteration count, no early stopping
  double epsilon = 1e-10;    // denominator guard in the multiplicative updates
  InitScheme init = InitScheme::kmeans;
  std::uint64_t seed = 1;
};

// Throws InputError unless 2 <= k1 <= min(n, m), k2 >= 1, rho in [0, 1],
// lambda >= 0 and epsilon > 0.
void validate_hyperparams(const Hyperparams& hp, std::size_t n, std::size_t m);

// The three factors: U holds vertex cluster memberships (n x k1), V holds
// attribute factors (m x k2), H transfers vertex clusters into attribute
// factor space (k1 x k2). All entries stay non-negative.
struct FactorModel {
  DenseMatrix U;
  DenseMatrix V;
  DenseMatrix H;

  bool all_finite() const { return U.all_finite() && V.all_finite() && H.all_finite(); }
  bool is_nonnegative() const {
    return U.is_nonnegative() && V.is_nonnegative() && H.is_nonnegative();
  }
};

struct LossBreakdown {
  double topology = 0.0;   // PU-weighted adjacency reconstruction error
  double attribute = 0.0;  // scaled attribute reconstruction error
  double total = 0.0;      // topology + attribute, exactly as computed

  bool all_finite() const {
    return std::isfinite(topology) && std::isfinite(attribute) && std::isfinite(total);
  }
};

}  // namespace nagc
