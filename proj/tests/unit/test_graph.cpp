#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "swapqaoa/graph.hpp"

#include <map>
#include <set>

using namespace swapqaoa;

namespace {

Graph petersen() {
  return make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                         {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

Bits random_bits(int n, Rng& rng) {
  Bits b(static_cast<std::size_t>(n));
  for (auto& x : b) x = static_cast<std::uint8_t>(rng() & 1U);
  return b;
}

}  // namespace

TEST_CASE("make_graph normalizes and rejects malformed edge lists") {
  const Graph g = make_graph(3, {{2, 0}, {1, 2}});
  CHECK(g.edges == std::vector<Edge>{{0, 2}, {1, 2}});
  CHECK(g.weights == std::vector<double>{1.0, 1.0});
  CHECK_THROWS_AS(make_graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{0, 1}}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("rr3 graphs are simple, 3-regular and reproducible") {
  for (int n : {4, 10, 20, 40}) {
    for (std::uint64_t seed : {0ULL, 7ULL, 123ULL}) {
      const Graph g = generate_rr3(n, seed);
      CHECK(g.num_edges() == static_cast<std::size_t>(3 * n / 2));
      for (int d : g.degrees()) CHECK(d == 3);
      std::set<Edge> uniq(g.edges.begin(), g.edges.end());
      CHECK(uniq.size() == g.edges.size());
      for (auto [u, v] : g.edges) CHECK(u < v);
      CHECK(generate_rr3(n, seed).edges == g.edges);
    }
  }
  const Graph g40 = generate_rr3(40, 7);
  std::map<int, int> histogram;
  for (int d : g40.degrees()) ++histogram[d];
  CHECK(histogram == std::map<int, int>{{3, 40}});
  CHECK_THROWS_AS(generate_rr3(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_rr3(2, 1), std::invalid_argument);
}

TEST_CASE("energy and cut on small graphs") {
  const Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(energy_of(k3, Bits{0, 0, 0}) == 3.0);
  // bit k is node k: node 2 is on the other side, cutting two edges.
  CHECK(energy_of(k3, Bits{0, 0, 1}) == -1.0);
  CHECK(cut_value(k3, Bits{0, 0, 1}) == 2);
  CHECK_THROWS_AS(energy_of(k3, Bits{0, 1}), std::invalid_argument);
}

TEST_CASE("energy equals |E| - 2 cut on random pairs") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = generate_rr3(4 + 2 * static_cast<int>(rng() % 10), rng());
    const Bits a = random_bits(g.n, rng);
    CHECK(energy_of(g, a) == static_cast<double>(g.num_edges()) - 2.0 * cut_value(g, a));
  }
}

TEST_CASE("exact maxcut agrees with brute force") {
  const Graph p = petersen();
  const auto [lo, hi] = oracle::energy_range(p);
  const CutSolution sol = maxcut_oracle(p);
  CHECK(sol.exact);
  CHECK(sol.energy == lo);
  CHECK(sol.cut_value == 12);
  CHECK(energy_of(p, sol.assignment) == sol.energy);

  const Graph c6 = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  CHECK(maxcut_oracle(c6).cut_value == 6);
  CHECK(maxcut_oracle(c6).energy == -6.0);
  CHECK(maxcut_oracle(make_graph(3, {{0, 1}, {0, 2}, {1, 2}})).cut_value == 2);

  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = generate_rr3(12, s);
    const auto [l, h] = oracle::energy_range(g);
    const EnergyExtremes ext = energy_extremes(g);
    CHECK(ext.exact);
    CHECK(ext.min == l);
    CHECK(ext.max == h);
  }
}

TEST_CASE("bipartite graphs are fully cut") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = generate_rr3(8, s);
    if (!is_bipartite(g)) continue;
    CHECK(maxcut_oracle(g).cut_value == static_cast<int>(g.num_edges()));
  }
}

TEST_CASE("heuristic maxcut beyond the exhaustive limit") {
  const Graph g = generate_rr3(40, 3);
  const CutSolution sol = maxcut_oracle(g, 1);
  CHECK_FALSE(sol.exact);
  CHECK(cut_value(g, sol.assignment) == sol.cut_value);
  // Any local optimum of single flips cuts at least half the edges.
  CHECK(sol.cut_value >= 30);
}

TEST_CASE("approximation ratio endpoints and affine invariance") {
  const Graph p = petersen();
  const EnergyExtremes ext = energy_extremes(p);
  CHECK(approximation_ratio(ext, ext.min) == doctest::Approx(1.0));
  CHECK(approximation_ratio(ext, ext.max) == doctest::Approx(0.0));
  const double mu = 0.3 * ext.min + 0.7 * ext.max;
  const EnergyExtremes shifted{ext.min + 2.5, ext.max + 2.5, true};
  CHECK(approximation_ratio(shifted, mu + 2.5) == doctest::Approx(approximation_ratio(ext, mu)));
  CHECK_THROWS_AS(approximation_ratio(EnergyExtremes{1.0, 1.0, true}, 1.0), std::domain_error);
}

TEST_CASE("graph density") {
  CHECK(graph_density(make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 1.0);
  CHECK(graph_density(generate_rr3(10, 1)) == doctest::Approx(15.0 / 45.0));
  CHECK(graph_density(generate_rr3(40, 1)) == doctest::Approx(60.0 / 780.0));
}

TEST_CASE("graph json round trip") {
  const Graph g = make_graph(4, {{0, 1}, {2, 3}}, {0.5, -1.5});
  const Graph h = graph_from_json(to_json(g));
  CHECK(h.n == 4);
  CHECK(h.edges == g.edges);
  CHECK(h.weights == g.weights);
  CHECK_THROWS(graph_from_json(nlohmann::json{{"n", 2}, {"edges", {{0, 5}}}}));
}
