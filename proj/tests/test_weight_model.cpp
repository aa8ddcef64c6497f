#include <doctest.h>

#include <cmath>

#include "cyclemax/graph.hpp"
#include "cyclemax/random_weights.hpp"
#include "cyclemax/weight.hpp"

using namespace cyclemax;

namespace {

WeightFunction uniform_triangle() {
  return WeightFunction::from_entries(
      3, {{0, 1, 1.0 / 3}, {0, 2, 1.0 / 3}, {1, 2, 1.0 / 3}});
}

}  // namespace

TEST_SUITE_BEGIN("weight-model");

TEST_CASE("construction validates and flags normalization") {
  WeightFunction tri = uniform_triangle();
  CHECK(tri.normalized());
  CHECK(tri.n() == 3);
  CHECK(tri.value(0, 1) == doctest::Approx(1.0 / 3));
  CHECK(tri.value(1, 0) == tri.value(0, 1));

  WeightFunction five = uniform_cycle_weights(5, 5);
  CHECK(five.normalized());
  CHECK(five.support_size() == 5);
  CHECK(five.value(0, 4) == doctest::Approx(0.2));
  CHECK(five.value(0, 2) == 0.0);

  CHECK_THROWS_WITH_AS(WeightFunction::from_entries(3, {{0, 1, -0.1}}), "negative weight", Error);
  CHECK_THROWS_AS(WeightFunction::from_entries(3, {{1, 1, 0.5}}), Error);
  CHECK_THROWS_AS(WeightFunction::from_entries(3, {{0, 1, 0.5}, {1, 0, 0.5}}), Error);
  CHECK_THROWS_AS(WeightFunction::from_entries(3, {{0, 3, 0.5}}), Error);
  CHECK_THROWS_AS(WeightFunction::from_entries(1, {}), Error);

  try {
    WeightFunction::from_entries(4, {{0, 1, 0.5}, {2, 2, 0.5}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::self_loop);
  }
}

TEST_CASE("normalize rescales and is idempotent") {
  WeightFunction w = WeightFunction::from_entries(3, {{0, 1, 2.0}, {1, 2, 2.0}});
  CHECK(!w.normalized());
  WeightFunction nw = normalize(w);
  CHECK(nw.normalized());
  CHECK(nw.value(0, 1) == 0.5);
  CHECK(nw.value(1, 2) == 0.5);

  WeightFunction again = normalize(nw);
  CHECK(again.entries() == nw.entries());

  WeightFunction lopsided = normalize(WeightFunction::from_entries(3, {{0, 1, 3.0}, {0, 2, 1.0}}));
  CHECK(lopsided.value(0, 1) == 0.75);
  CHECK(lopsided.value(0, 2) == 0.25);

  WeightFunction zero = WeightFunction::from_entries(3, {{0, 1, 0.0}});
  CHECK_THROWS_AS(normalize(zero), Error);
}

TEST_CASE("weighted degree sums incident support") {
  SimpleGraph k3 = SimpleGraph::complete(3);
  CHECK(weighted_degree(uniform_triangle(), k3, 0) == doctest::Approx(2.0 / 3));

  WeightFunction five = uniform_cycle_weights(5, 5);
  SimpleGraph k5 = SimpleGraph::complete(5);
  for (int v = 0; v < 5; ++v) CHECK(weighted_degree(five, k5, v) == doctest::Approx(0.4));

  // K_4 with uniform 1/6 weights: three incident edges each.
  WeightFunction k4w = uniform_complete_weights(4);
  SimpleGraph k4 = SimpleGraph::complete(4);
  for (int v = 0; v < 4; ++v) {
    double direct = 0.0;
    for (int u = 0; u < 4; ++u)
      if (u != v) direct += k4w.value(u, v);
    CHECK(weighted_degree(k4w, k4, v) == doctest::Approx(0.5));
    CHECK(weighted_degree(k4w, k4, v) == doctest::Approx(direct));
  }

  CHECK_THROWS_AS(weighted_degree(k4w, k4, 5), Error);
  CHECK_THROWS_AS(weighted_degree(k4w, k4.without_vertex(2), 2), Error);
}

TEST_CASE("vertex deletion keeps identities") {
  SimpleGraph k4 = SimpleGraph::complete(4);
  SimpleGraph k3 = k4.without_vertex(3);
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.has_edge(0, 2));
  CHECK(!k3.has_vertex(3));

  CHECK(k4.without_vertices({}) == k4);

  SimpleGraph c5 = SimpleGraph::cycle(5);
  SimpleGraph path = c5.without_vertex(2);
  CHECK(path.order() == 4);
  CHECK(path.edge_count() == 3);
  CHECK(path.has_edge(3, 4));
  CHECK(path.has_edge(4, 0));
  CHECK(path.has_edge(0, 1));
  CHECK(!path.has_edge(1, 2));

  CHECK_THROWS_AS(c5.without_vertex(9), Error);
}

TEST_CASE("edge deletion and re-adding") {
  SimpleGraph k3 = SimpleGraph::complete(3);
  SimpleGraph path = k3.without_edge(EdgeKey(0, 1));
  CHECK(path.edge_count() == 2);
  CHECK(path.has_edge(0, 2));
  CHECK(path.has_edge(1, 2));
  CHECK(!path.has_edge(0, 1));

  CHECK(path.with_edge(EdgeKey(0, 1)) == k3);
  CHECK(SimpleGraph::complete(4).without_edge(EdgeKey(0, 1)).edge_count() == 5);
  CHECK_THROWS_AS(path.without_edge(EdgeKey(0, 1)), Error);
}

TEST_CASE("handshake: degrees sum to twice the mass") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rng.uniform_int(3, 9);
    WeightFunction w = random_weight_function(n, rng.next());
    SimpleGraph host = SimpleGraph::complete(n);
    double sum = 0.0;
    for (int v = 0; v < n; ++v) sum += weighted_degree(w, host, v);
    CHECK(std::abs(sum - 2.0) <= 1e-10);
  }
}

TEST_CASE("deleting vertex sets composes") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.uniform_int(5, 9);
    SimpleGraph g = SimpleGraph::complete(n);
    VertexId a = rng.uniform_int(0, n - 1);
    VertexId b = rng.uniform_int(0, n - 1);
    if (a == b) continue;
    std::vector<VertexId> both{a, b};
    CHECK(g.without_vertex(a).without_vertex(b) == g.without_vertices(both));
  }
}

TEST_CASE("degree is additive over edge deletion") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rng.uniform_int(3, 8);
    WeightFunction w = random_weight_function(n, rng.next());
    SimpleGraph g = SimpleGraph::complete(n);
    VertexId v = rng.uniform_int(0, n - 1);
    VertexId u = rng.uniform_int(0, n - 1);
    if (u == v) continue;
    EdgeKey e(u, v);
    double with_edge = weighted_degree(w, g, v);
    double without = weighted_degree(w, g.without_edge(e), v);
    CHECK(with_edge == doctest::Approx(without + w.value(u, v)).epsilon(1e-12));
  }
}

TEST_SUITE_END();
