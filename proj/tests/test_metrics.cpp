#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nagc/metrics.hpp"
#include "oracles.hpp"

using nagc::DenseMatrix;
using nagc::SparseSymGraph;

TEST_CASE("adjusted rand index") {
  SUBCASE("identical partitions score one") {
    const std::vector<int> a{0, 0, 1, 1, 2, 2};
    CHECK(nagc::adjusted_rand_index(a, a) == doctest::Approx(1.0));
    const std::vector<int> relabeled{5, 5, 3, 3, 9, 9};
    CHECK(nagc::adjusted_rand_index(a, relabeled) == doctest::Approx(1.0));
  }
  SUBCASE("one big cluster against anything scores zero") {
    const std::vector<int> one(8, 0);
    const std::vector<int> other{0, 1, 2, 0, 1, 2, 0, 1};
    CHECK(nagc::adjusted_rand_index(one, other) == doctest::Approx(0.0));
    CHECK(nagc::adjusted_rand_index(other, one) == doctest::Approx(0.0));
  }
  SUBCASE("worked example equals the pair-counting oracle") {
    const std::vector<int> a{0, 0, 1, 1};
    const std::vector<int> b{0, 1, 1, 1};
    const double expect = oracle::ari_pair_counting(a, b);
    CHECK(nagc::adjusted_rand_index(a, b) == doctest::Approx(expect).epsilon(1e-14));
    CHECK(expect == doctest::Approx(0.0));  // this instance lands exactly at chance level
  }
  SUBCASE("agrees with the pair-counting oracle on random partitions") {
    std::mt19937_64 eng(7);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 2 + eng() % 40;
      std::vector<int> a(n), b(n);
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = static_cast<int>(eng() % 4);
        b[i] = static_cast<int>(eng() % 3);
      }
      CHECK(nagc::adjusted_rand_index(a, b) ==
            doctest::Approx(oracle::ari_pair_counting(a, b)).epsilon(1e-12));
    }
  }
  SUBCASE("symmetric and relabel-invariant, bounded by one") {
    std::mt19937_64 eng(8);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 4 + eng() % 30;
      std::vector<int> a(n), b(n);
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = static_cast<int>(eng() % 3);
        b[i] = static_cast<int>(eng() % 4);
      }
      const double ab = nagc::adjusted_rand_index(a, b);
      CHECK(ab == doctest::Approx(nagc::adjusted_rand_index(b, a)).epsilon(1e-12));
      CHECK(ab <= 1.0 + 1e-12);
      std::vector<int> a_relabeled(n);
      for (std::size_t i = 0; i < n; ++i) a_relabeled[i] = 10 - a[i];
      CHECK(nagc::adjusted_rand_index(a_relabeled, b) == doctest::Approx(ab).epsilon(1e-12));
    }
  }
  SUBCASE("length mismatch is rejected") {
    const std::vector<int> a{0, 1};
    const std::vector<int> b{0, 1, 2};
    CHECK_THROWS_AS(nagc::adjusted_rand_index(a, b), nagc::InputError);
  }
}

TEST_CASE("modularity") {
  SUBCASE("two disjoint triangles, perfect partition: exactly one half") {
    std::vector<SparseSymGraph::Edge> edges{{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0},
                                            {3, 4, 1.0}, {4, 5, 1.0}, {3, 5, 1.0}};
    const SparseSymGraph g(6, std::move(edges));
    const std::vector<int> labels{0, 0, 0, 1, 1, 1};
    CHECK(nagc::modularity(g, labels) == doctest::Approx(0.5).epsilon(1e-14));
  }
  SUBCASE("everything in one cluster scores zero") {
    const SparseSymGraph g = oracle::random_graph(10, 0.4, 3);
    const std::vector<int> labels(10, 7);
    CHECK(nagc::modularity(g, labels) == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("edgeless graph scores zero") {
    const SparseSymGraph g = SparseSymGraph::empty(5);
    const std::vector<int> labels{0, 1, 0, 1, 0};
    CHECK(nagc::modularity(g, labels) == 0.0);
  }
  SUBCASE("weights are ignored (binary convention)") {
    std::vector<SparseSymGraph::Edge> light{{0, 1, 1.0}, {2, 3, 1.0}};
    std::vector<SparseSymGraph::Edge> heavy{{0, 1, 9.0}, {2, 3, 0.5}};
    const SparseSymGraph a(4, std::move(light));
    const SparseSymGraph b(4, std::move(heavy));
    const std::vector<int> labels{0, 0, 1, 1};
    CHECK(nagc::modularity(a, labels) == doctest::Approx(nagc::modularity(b, labels)));
  }
  SUBCASE("stays within [-1/2, 1] on random partitions") {
    std::mt19937_64 eng(9);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 5 + eng() % 20;
      const SparseSymGraph g = oracle::random_graph(n, 0.3, eng());
      if (g.edge_count() == 0) continue;
      std::vector<int> labels(n);
      for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(eng() % 4);
      const double q = nagc::modularity(g, labels);
      CHECK(q >= -0.5 - 1e-12);
      CHECK(q <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("average attribute entropy") {
  SUBCASE("attribute-pure clusters score zero") {
    DenseMatrix x(4, 3);
    x(0, 0) = 1.0;
    x(1, 0) = 1.0;  // cluster 0: attribute 0 always on, others off
    x(2, 1) = 1.0;
    x(3, 1) = 1.0;  // cluster 1: attribute 1 always on
    const std::vector<int> labels{0, 0, 1, 1};
    CHECK(nagc::average_entropy(x, labels) == 0.0);
  }
  SUBCASE("p = 1/2 everywhere scores one") {
    DenseMatrix x(4, 2);
    x(0, 0) = 1.0;
    x(1, 1) = 1.0;
    x(2, 0) = 1.0;
    x(3, 1) = 1.0;
    const std::vector<int> labels{0, 0, 1, 1};
    CHECK(nagc::average_entropy(x, labels) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("binarizes at strictly positive values") {
    DenseMatrix a(2, 1);
    a(0, 0) = 0.2;
    a(1, 0) = 7.0;
    DenseMatrix b(2, 1);
    b(0, 0) = 1.0;
    b(1, 0) = 1.0;
    const std::vector<int> labels{0, 0};
    CHECK(nagc::average_entropy(a, labels) == doctest::Approx(nagc::average_entropy(b, labels)));
  }
  SUBCASE("non-negative in general") {
    std::mt19937_64 eng(11);
    for (int trial = 0; trial < 10; ++trial) {
      const DenseMatrix x = oracle::random_matrix(20, 6, eng(), 0.0, 1.0);
      std::vector<int> labels(20);
      for (auto& l : labels) l = static_cast<int>(eng() % 3);
      CHECK(nagc::average_entropy(x, labels) >= 0.0);
    }
  }
}
