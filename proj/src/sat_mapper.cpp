#include "swapqaoa/sat_mapper.hpp"

#include "swapqaoa/sat_solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

namespace swapqaoa {

Parity BrickSchedule::layer_parity(int t) const {
  const int first = first_parity == Parity::Even ? 0 : 1;
  return ((t + first) % 2 == 0) ? Parity::Even : Parity::Odd;
}

std::vector<std::pair<int, int>> BrickSchedule::layer_pairs(int t) const {
  std::vector<std::pair<int, int>> pairs;
  const int start = layer_parity(t) == Parity::Even ? 0 : 1;
  for (int a = start; a + 1 < n; a += 2) pairs.emplace_back(a, a + 1);
  return pairs;
}

BrickSchedule brick_permutations(int n, int num_layers, Parity first_parity) {
  if (n < 2) throw std::invalid_argument("swap network needs at least two positions");
  if (num_layers < 0) throw std::invalid_argument("layer count must be non-negative");
  BrickSchedule s;
  s.n = n;
  s.num_layers = num_layers;
  s.first_parity = first_parity;
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) pos[q] = q;
  s.permutations.push_back(pos);
  for (int t = 0; t < num_layers; ++t) {
    const int par = s.layer_parity(t) == Parity::Even ? 0 : 1;
    for (int& p : pos) {
      if (p % 2 == par && p + 1 < n) {
        ++p;
      } else if (p >= 1 && (p - 1) % 2 == par) {
        --p;
      }
    }
    s.permutations.push_back(pos);
  }
  return s;
}

std::string Cnf::to_dimacs() const {
  std::ostringstream out;
  out << "p cnf " << num_vars << ' ' << clauses.size() << '\n';
  for (const auto& c : clauses) {
    for (int l : c) out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

namespace {

// neighbors[q] = start positions r whose element becomes adjacent to the
// element starting at q at some time t <= layers.
std::vector<std::vector<int>> reachable_neighbors(const BrickSchedule& s) {
  std::vector<std::vector<char>> mark(static_cast<std::size_t>(s.n), std::vector<char>(static_cast<std::size_t>(s.n), 0));
  for (const auto& perm : s.permutations) {
    std::vector<int> at(static_cast<std::size_t>(s.n));
    for (int q = 0; q < s.n; ++q) at[perm[q]] = q;
    for (int p = 0; p + 1 < s.n; ++p) {
      mark[at[p]][at[p + 1]] = 1;
      mark[at[p + 1]][at[p]] = 1;
    }
  }
  std::vector<std::vector<int>> nb(static_cast<std::size_t>(s.n));
  for (int q = 0; q < s.n; ++q) {
    for (int r = 0; r < s.n; ++r) {
      if (mark[q][r]) nb[q].push_back(r);
    }
  }
  return nb;
}

void add_at_most_one(Cnf& cnf, const std::vector<int>& xs, bool sequential) {
  const std::size_t k = xs.size();
  if (k <= 1) return;
  if (!sequential || k <= 4) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) cnf.clauses.push_back({-xs[a], -xs[b]});
    }
    return;
  }
  // Sequential counter: s_i is true once some x_j, j <= i, is true.
  std::vector<int> s(k - 1);
  for (auto& v : s) v = ++cnf.num_vars;
  cnf.clauses.push_back({-xs[0], s[0]});
  for (std::size_t i = 1; i + 1 < k; ++i) {
    cnf.clauses.push_back({-xs[i], s[i]});
    cnf.clauses.push_back({-s[i - 1], s[i]});
    cnf.clauses.push_back({-xs[i], -s[i - 1]});
  }
  cnf.clauses.push_back({-xs[k - 1], -s[k - 2]});
}

}  // namespace

FeasibilityEncoding encode_feasibility(const Graph& g, int num_layers, const MapperOptions& options) {
  const int n = g.n;
  if (n < 2) throw std::invalid_argument("mapping needs at least two nodes");
  FeasibilityEncoding enc;
  enc.n = n;
  enc.num_layers = num_layers;
  enc.cnf.num_vars = n * n;
  const bool sequential = options.at_most_one == AtMostOne::Sequential ||
                          (options.at_most_one == AtMostOne::Auto && n > 20);
  auto& cls = enc.cnf.clauses;
  for (int v = 0; v < n; ++v) {
    std::vector<int> row;
    for (int q = 0; q < n; ++q) row.push_back(enc.var(v, q));
    cls.push_back(row);
    add_at_most_one(enc.cnf, row, sequential);
  }
  for (int q = 0; q < n; ++q) {
    std::vector<int> col;
    for (int v = 0; v < n; ++v) col.push_back(enc.var(v, q));
    cls.push_back(col);  // implied by the bijection; helps propagation
    add_at_most_one(enc.cnf, col, sequential);
  }
  if (options.break_reversal_symmetry && n % 2 == 0) {
    for (int q = n / 2; q < n; ++q) cls.push_back({-enc.var(0, q)});
  }
  const auto nb = reachable_neighbors(brick_permutations(n, num_layers, options.first_parity));
  for (const auto& [u, v] : g.edges) {
    for (int q = 0; q < n; ++q) {
      std::vector<int> c{-enc.var(u, q)};
      for (int r : nb[q]) c.push_back(enc.var(v, r));
      cls.push_back(std::move(c));
    }
  }
  return enc;
}

FeasibilityResult check_feasibility(const Graph& g, int num_layers, const MapperOptions& options) {
  const auto enc = encode_feasibility(g, num_layers, options);
  sat::Solver solver(enc.cnf.num_vars);
  bool ok = true;
  for (const auto& c : enc.cnf.clauses) {
    if (!solver.add_clause(c)) {
      ok = false;
      break;
    }
  }
  FeasibilityResult res;
  if (!ok) {
    res.status = Feasibility::Infeasible;
    return res;
  }
  switch (solver.solve(options.conflict_budget)) {
    case sat::Result::Unsat:
      res.status = Feasibility::Infeasible;
      return res;
    case sat::Result::Unknown:
      res.status = Feasibility::Unknown;
      return res;
    case sat::Result::Sat:
      break;
  }
  res.status = Feasibility::Feasible;
  res.sigma.assign(static_cast<std::size_t>(g.n), -1);
  for (int v = 0; v < g.n; ++v) {
    for (int q = 0; q < g.n; ++q) {
      if (solver.model_value(enc.var(v, q))) res.sigma[v] = q;
    }
  }
  return res;
}

std::vector<int> schedule_edges(const Graph& g, const std::vector<int>& sigma, const BrickSchedule& schedule) {
  std::vector<int> times(g.edges.size(), -1);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto [u, v] = g.edges[k];
    for (int t = 0; t <= schedule.num_layers; ++t) {
      const auto& perm = schedule.permutations[t];
      if (std::abs(perm[sigma[u]] - perm[sigma[v]]) == 1) {
        times[k] = t;
        break;
      }
    }
    if (times[k] < 0) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") is never adjacent within " + std::to_string(schedule.num_layers) + " layers");
    }
  }
  return times;
}

MappingSolution solve_min_layers(const Graph& g, int max_layers, const MapperOptions& options) {
  if (max_layers < 0) throw std::invalid_argument("max_layers must be non-negative");
  auto feasible = [&](int layers) {
    auto r = check_feasibility(g, layers, options);
    if (r.status == Feasibility::Unknown) {
      throw std::runtime_error("SAT budget exhausted at " + std::to_string(layers) + " layers");
    }
    return r;
  };
  auto best = feasible(max_layers);
  if (best.status != Feasibility::Feasible) {
    throw std::runtime_error("graph is not routable within " + std::to_string(max_layers) + " swap layers");
  }
  int lo = 0;
  int hi = max_layers;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    auto r = feasible(mid);
    if (r.status == Feasibility::Feasible) {
      hi = mid;
      best = std::move(r);
    } else {
      lo = mid + 1;
    }
  }
  MappingSolution m;
  m.sigma = std::move(best.sigma);
  m.num_layers = hi;
  m.first_parity = options.first_parity;
  m.edge_times = schedule_edges(g, m.sigma, brick_permutations(std::max(g.n, 2), hi, options.first_parity));
  return m;
}

void validate_mapping(const Graph& g, const MappingSolution& m) {
  if (static_cast<int>(m.sigma.size()) != g.n) throw std::invalid_argument("mapping size does not match graph");
  std::vector<char> hit(static_cast<std::size_t>(g.n), 0);
  for (int q : m.sigma) {
    if (q < 0 || q >= g.n || hit[q]) throw std::invalid_argument("mapping is not a bijection onto the line");
    hit[q] = 1;
  }
  if (m.edge_times.size() != g.edges.size()) throw std::invalid_argument("mapping schedule does not match edge count");
  const auto s = brick_permutations(g.n, m.num_layers, m.first_parity);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const int t = m.edge_times[k];
    if (t < 0 || t > m.num_layers) throw std::invalid_argument("edge time out of range");
    const auto [u, v] = g.edges[k];
    if (std::abs(s.permutations[t][m.sigma[u]] - s.permutations[t][m.sigma[v]]) != 1) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") is not adjacent at its scheduled time");
    }
  }
}

nlohmann::json to_json(const MappingSolution& m) {
  return {{"sigma", m.sigma},
          {"num_layers", m.num_layers},
          {"first_parity", m.first_parity == Parity::Even ? "even" : "odd"},
          {"edge_times", m.edge_times}};
}

MappingSolution mapping_from_json(const nlohmann::json& j) {
  MappingSolution m;
  m.sigma = j.at("sigma").get<std::vector<int>>();
  m.num_layers = j.at("num_layers").get<int>();
  m.first_parity = j.value("first_parity", std::string("even")) == "odd" ? Parity::Odd : Parity::Even;
  m.edge_times = j.at("edge_times").get<std::vector<int>>();
  return m;
}

}  // namespace swapqaoa
