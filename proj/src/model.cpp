#include "nagc/model.hpp"

#include <algorithm>

namespace nagc {

std::string to_string(InitScheme s) {
  return s == InitScheme::random ? "random" : "kmeans";
}

InitScheme init_scheme_from_string(const std::string& s) {
  if (s == "random") return InitScheme::random;
  if (s == "kmeans") return InitScheme::kmeans;
  throw InputError("unknown init scheme '" + s + "' (expected random or kmeans)");
}

void validate_hyperparams(const Hyperparams& hp, std::size_t n, std::size_t m) {
  if (hp.k1 < 2) throw InputError("k1 must be at least 2");
  if (hp.k1 > std::min(n, m)) throw InputError("k1 must not exceed min(n, m)");
  if (hp.k2 < 1) throw InputError("k2 must be at least 1");
  if (!(hp.rho >= 0.0 && hp.rho <= 1.0)) throw InputError("rho must lie in [0, 1]");
  if (!(hp.lambda >= 0.0)) throw InputError("lambda must be non-negative");
  if (!(hp.epsilon > 0.0)) throw InputError("epsilon must be positive");
}

}  // namespace nagc
