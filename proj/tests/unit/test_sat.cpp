#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swapqaoa/common.hpp"
#include "swapqaoa/graph.hpp"
#include "swapqaoa/sat_mapper.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace swapqaoa;

namespace {

// Line contents after each layer, computed by swapping array slots.
std::vector<std::vector<int>> line_history(int n, int layers, int first_offset) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 0);
  std::vector<std::vector<int>> out{line};
  for (int t = 0; t < layers; ++t) {
    for (int p = (first_offset + t) % 2; p + 1 < n; p += 2) std::swap(line[p], line[p + 1]);
    out.push_back(line);
  }
  return out;
}

bool covers(const Graph& g, const std::vector<int>& sigma, const std::vector<std::vector<int>>& history) {
  // history entries hold the starting slot now at each position.
  std::set<std::pair<int, int>> met;
  for (const auto& line : history) {
    for (std::size_t p = 0; p + 1 < line.size(); ++p) met.insert(std::minmax(line[p], line[p + 1]));
  }
  for (const auto& [u, v] : g.edges) {
    if (!met.count(std::minmax(sigma[u], sigma[v]))) return false;
  }
  return true;
}

int brute_min_layers(const Graph& g, int first_offset) {
  for (int layers = 0;; ++layers) {
    const auto history = line_history(g.n, layers, first_offset);
    std::vector<int> sigma(g.n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      if (covers(g, sigma, history)) return layers;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
}

Graph random_graph(int n, double density, Rng& rng) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (uniform01(rng) < density) edges.push_back({i, j});
    }
  }
  return make_graph(n, edges);
}

bool satisfied(const Cnf& cnf, const std::vector<char>& value) {
  for (const auto& clause : cnf.clauses) {
    bool ok = false;
    for (int lit : clause) ok = ok || (lit > 0 ? value[lit] : !value[-lit]);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("brick network positions") {
  for (int n : {2, 5, 8}) {
    for (Parity par : {Parity::Even, Parity::Odd}) {
      const auto s = brick_permutations(n, n + 2, par);
      const auto ref = line_history(n, n + 2, par == Parity::Even ? 0 : 1);
      REQUIRE(s.permutations.size() == ref.size());
      for (std::size_t t = 0; t < ref.size(); ++t) {
        for (int p = 0; p < n; ++p) CHECK(s.permutations[t][ref[t][p]] == p);
      }
      // n layers of odd-even transposition reverse the line.
      for (int q = 0; q < n; ++q) CHECK(s.permutations[n][q] == n - 1 - q);
    }
  }
  const auto s = brick_permutations(6, 3);
  CHECK(s.layer_pairs(0) == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}, {4, 5}});
  CHECK(s.layer_pairs(1) == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  CHECK_THROWS(brick_permutations(1, 2));
}

TEST_CASE("small fixed graphs") {
  const Graph path = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(solve_min_layers(path, 6).num_layers == 0);
  const Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto m = solve_min_layers(k4, 6);
  CHECK(m.num_layers == brute_min_layers(k4, 0));
  CHECK(m.num_layers == 2);
  validate_mapping(k4, m);
  const Graph empty = make_graph(5, {});
  CHECK(solve_min_layers(empty, 3).num_layers == 0);
  CHECK_THROWS(solve_min_layers(k4, 1));
}

TEST_CASE("minimal layer count matches exhaustive search") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 4;
    const Graph g = random_graph(n, 0.3 + 0.5 * uniform01(rng), rng);
    for (Parity par : {Parity::Even, Parity::Odd}) {
      MapperOptions opt;
      opt.first_parity = par;
      const auto m = solve_min_layers(g, n + 1, opt);
      CHECK(m.num_layers == brute_min_layers(g, par == Parity::Even ? 0 : 1));
      validate_mapping(g, m);
      CHECK(covers(g, m.sigma, line_history(n, m.num_layers, par == Parity::Even ? 0 : 1)));
    }
  }
}

TEST_CASE("regular graph ensembles at eight nodes") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = generate_rr3(8, seed);
    MapperOptions seq;
    seq.at_most_one = AtMostOne::Sequential;
    MapperOptions plain;
    plain.break_reversal_symmetry = false;
    const int expect = brute_min_layers(g, 0);
    CHECK(solve_min_layers(g, 8).num_layers == expect);
    CHECK(solve_min_layers(g, 8, seq).num_layers == expect);
    CHECK(solve_min_layers(g, 8, plain).num_layers == expect);
  }
}

TEST_CASE("feasibility is monotone in the layer count") {
  const Graph g = generate_rr3(12, 4);
  bool seen = false;
  for (int layers = 0; layers <= 8; ++layers) {
    const auto r = check_feasibility(g, layers);
    REQUIRE(r.status != Feasibility::Unknown);
    if (seen) CHECK(r.status == Feasibility::Feasible);
    if (r.status == Feasibility::Feasible) {
      seen = true;
      CHECK_NOTHROW(schedule_edges(g, r.sigma, brick_permutations(12, layers)));
    }
  }
  CHECK(seen);
}

TEST_CASE("encoding accepts exactly the covering placements") {
  const Graph g = make_graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}, {0, 4}});
  MapperOptions opt;
  opt.break_reversal_symmetry = false;
  const auto enc = encode_feasibility(g, 2, opt);
  CHECK(enc.cnf.num_vars >= 25);
  const auto history = line_history(5, 2, 0);
  std::vector<int> sigma{0, 1, 2, 3, 4};
  do {
    std::vector<char> value(static_cast<std::size_t>(enc.cnf.num_vars) + 1, 0);
    for (int v = 0; v < 5; ++v) value[enc.var(v, sigma[v])] = 1;
    // Auxiliary variables (if any) are fixed at zero, which only matters with
    // sequential constraints; pairwise constraints are used at this size.
    CHECK(satisfied(enc.cnf, value) == covers(g, sigma, history));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  const std::string dimacs = enc.cnf.to_dimacs();
  CHECK(dimacs.rfind("p cnf " + std::to_string(enc.cnf.num_vars) + " " + std::to_string(enc.cnf.clauses.size()), 0) ==
        0);
}

TEST_CASE("schedule and validation") {
  const Graph g = make_graph(4, {{0, 3}, {1, 2}});
  const auto sched = brick_permutations(4, 2);
  CHECK(schedule_edges(g, {0, 2, 1, 3}, sched) == std::vector<int>{1, 0});
  CHECK_THROWS(schedule_edges(g, {0, 1, 2, 3}, brick_permutations(4, 0)));
  auto m = solve_min_layers(g, 4);
  auto bad = m;
  bad.sigma[0] = bad.sigma[1];
  CHECK_THROWS(validate_mapping(g, bad));
  bad = m;
  bad.edge_times.pop_back();
  CHECK_THROWS(validate_mapping(g, bad));
}

TEST_CASE("mapping json round trip") {
  const Graph g = generate_rr3(10, 5);
  const auto m = solve_min_layers(g, 8);
  CHECK(m.num_layers == 2);
  const auto back = mapping_from_json(to_json(m));
  CHECK(back.sigma == m.sigma);
  CHECK(back.num_layers == m.num_layers);
  CHECK(back.edge_times == m.edge_times);
  CHECK(back.first_parity == m.first_parity);
}
