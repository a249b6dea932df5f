#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "swapqaoa/common.hpp"
#include "swapqaoa/hardware.hpp"

#include <algorithm>
#include <set>

using namespace swapqaoa;

namespace {

CouplingMap random_sparse(int n, Rng& rng) {
  std::set<std::pair<int, int>> e;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rng() % v);
    if (deg[u] < 3) {
      e.insert({u, v});
      ++deg[u];
      ++deg[v];
    }
  }
  for (int k = 0; k < n / 2; ++k) {
    const int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    if (a != b && deg[a] < 3 && deg[b] < 3 && e.insert(std::pair<int, int>(std::minmax(a, b))).second) {
      ++deg[a];
      ++deg[b];
    }
  }
  return make_coupling_map(n, {e.begin(), e.end()});
}

}  // namespace

TEST_CASE("line counts on small shapes") {
  const CouplingMap path = make_coupling_map(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(count_lines(path, 3) == 3);
  CHECK(count_lines(path, 5) == 1);
  LineOptions directed;
  directed.directed = true;
  CHECK(count_lines(path, 5, directed) == 2);
  const CouplingMap star = make_coupling_map(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(count_lines(star, 3) == 3);
  CHECK(count_lines(star, 4) == 0);
  const CouplingMap ring = make_coupling_map(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  for (int k = 2; k <= 6; ++k) CHECK(count_lines(ring, k) == 6);
  CHECK_THROWS(count_lines(ring, 1));
  CHECK_THROWS(count_lines(ring, 7));
}

TEST_CASE("line counts match bitmask dynamic programming") {
  Rng rng(8);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 8 + trial % 7;
    const CouplingMap m = random_sparse(n, rng);
    for (int length = 2; length <= n; length += 2) {
      const auto dp = oracle::count_paths_dp(n, m.edges, length);
      LineOptions directed;
      directed.directed = true;
      directed.threads = 2;
      CHECK(count_lines(m, length, directed) == dp);
      CHECK(count_lines(m, length) * 2 == dp);
    }
  }
  const CouplingMap small = heavy_hex(2, 1);
  for (int length = 2; length <= 8; ++length) {
    CHECK(count_lines(small, length) * 2 == oracle::count_paths_dp(small.num_qubits, small.edges, length));
  }
}

TEST_CASE("enumeration order and size") {
  Rng rng(3);
  const CouplingMap m = random_sparse(12, rng);
  std::vector<std::vector<int>> seen;
  enumerate_lines(m, 5, [&](const std::vector<int>& p) { seen.push_back(p); });
  CHECK(seen.size() == count_lines(m, 5));
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  for (const auto& p : seen) {
    CHECK(p.front() < p.back());
    for (std::size_t i = 1; i < p.size(); ++i) {
      CHECK(std::binary_search(m.edges.begin(), m.edges.end(), std::pair<int, int>(std::minmax(p[i - 1], p[i]))));
    }
  }
  std::size_t directed = 0;
  enumerate_lines(m, 5, [&](const std::vector<int>&) { ++directed; }, true);
  CHECK(directed == 2 * seen.size());
}

TEST_CASE("heavy hex structure") {
  const CouplingMap eagle = heavy_hex(7, 3);
  CHECK(eagle.num_qubits == 127);
  CHECK(eagle.edges.size() == 144);
  const auto adj = eagle.adjacency();
  int degree2 = 0, degree3 = 0;
  for (const auto& row : adj) {
    CHECK(row.size() >= 1);
    CHECK(row.size() <= 3);
    degree2 += row.size() == 2 ? 1 : 0;
    degree3 += row.size() == 3 ? 1 : 0;
  }
  CHECK(degree2 > 0);
  std::size_t degree_sum = 0;
  for (const auto& row : adj) degree_sum += row.size();
  CHECK(degree_sum == 2 * eagle.edges.size());
  // Heavy hex: no two degree-3 qubits are coupled.
  for (const auto& [a, b] : eagle.edges) CHECK((adj[a].size() < 3 || adj[b].size() < 3));
  CHECK(degree3 > 0);
  const CouplingMap fixture = eagle127();
  CHECK(fixture.edges == eagle.edges);
  CHECK(fixture.gate_errors.size() == 144);
  for (const auto& [e, err] : fixture.gate_errors) CHECK((err > 0.0 && err < 0.2));
  CHECK_THROWS(heavy_hex(1, 3));
}

TEST_CASE("fidelity and best line") {
  const CouplingMap m = make_coupling_map(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}},
                                          {{{0, 1}, 0.01}, {{1, 2}, 0.01}, {{2, 3}, 0.05}, {{0, 3}, 0.01}});
  CHECK(path_fidelity(m, {0, 1, 2}) == doctest::Approx(0.9801));
  CHECK(path_fidelity(m, {2, 1, 0}) == doctest::Approx(0.9801));
  const BestLine b = best_line(m, 3);
  // {3,0,1}, {0,1,2} both reach 0.9801; the smaller sequence wins.
  CHECK(b.path == std::vector<int>{0, 1, 2});
  CHECK(b.fidelity == doctest::Approx(0.9801));
  CHECK(b.lines == count_lines(m, 3));
  const BestLine whole = best_line(m, 4);
  CHECK(whole.fidelity == doctest::Approx(0.99 * 0.99 * 0.99));
  CHECK(m.error(3, 2) == 0.05);
  CHECK(m.error(0, 2) == 0.0);
}

TEST_CASE("coupling map validation and json") {
  CHECK_THROWS(make_coupling_map(3, {{0, 0}}));
  CHECK_THROWS(make_coupling_map(3, {{0, 1}, {1, 0}}));
  CHECK_THROWS(make_coupling_map(3, {{0, 3}}));
  CHECK_THROWS(make_coupling_map(3, {{0, 1}}, {{{1, 2}, 0.1}}));
  CHECK_THROWS(make_coupling_map(3, {{0, 1}}, {{{0, 1}, 1.5}}));
  const CouplingMap m = eagle127();
  const CouplingMap back = coupling_map_from_json(to_json(m));
  CHECK(back.edges == m.edges);
  CHECK(back.gate_errors == m.gate_errors);
  CHECK_THROWS(coupling_map_from_json(nlohmann::json{{"num_qubits", 2}, {"edges", {{0, 1}}}, {"errors", {{"01", 0.1}}}}));
}
