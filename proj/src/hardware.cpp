#include "swapqaoa/hardware.hpp"

#include "swapqaoa/common.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <stdexcept>

namespace swapqaoa {

std::vector<std::vector<int>> CouplingMap::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(num_qubits));
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

double CouplingMap::error(int a, int b) const {
  const auto it = gate_errors.find({std::min(a, b), std::max(a, b)});
  return it == gate_errors.end() ? 0.0 : it->second;
}

void CouplingMap::validate() const {
  if (num_qubits < 1) throw std::invalid_argument("coupling map needs at least one qubit");
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_qubits || b >= num_qubits) {
      throw std::invalid_argument("coupling (" + std::to_string(a) + ", " + std::to_string(b) + ") out of range");
    }
    if (a == b) throw std::invalid_argument("self-coupling on qubit " + std::to_string(a));
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      throw std::invalid_argument("duplicate coupling (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  }
  for (const auto& [e, err] : gate_errors) {
    if (!seen.count(e)) {
      throw std::invalid_argument("error given for missing coupling " + std::to_string(e.first) + "-" +
                                  std::to_string(e.second));
    }
    if (!(err >= 0.0 && err < 1.0)) throw std::invalid_argument("gate error must lie in [0, 1)");
  }
}

CouplingMap make_coupling_map(int num_qubits, std::vector<std::pair<int, int>> edges,
                              std::map<std::pair<int, int>, double> errors) {
  CouplingMap m;
  m.num_qubits = num_qubits;
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  m.edges = std::move(edges);
  for (const auto& [e, err] : errors) m.gate_errors[{std::min(e.first, e.second), std::max(e.first, e.second)}] = err;
  m.validate();
  return m;
}

CouplingMap heavy_hex(int rows, int cells) {
  if (rows < 2 || cells < 1) throw std::invalid_argument("heavy hex needs rows >= 2 and cells >= 1");
  const int width = 4 * cells + 3;
  // Gap g bridges columns 0, 4, 8, ... when g is even and 2, 6, 10, ... when odd.
  auto bridge_columns = [width](int gap) {
    std::vector<int> cols;
    for (int c = gap % 2 == 0 ? 0 : 2; c < width; c += 4) cols.push_back(c);
    return cols;
  };
  const bool last_gap_even = (rows - 2) % 2 == 0;
  std::vector<std::vector<int>> index(static_cast<std::size_t>(rows), std::vector<int>(width, -1));
  std::vector<std::pair<int, int>> edges;
  int next = 0;
  std::vector<std::vector<int>> bridges(static_cast<std::size_t>(rows - 1));
  for (int r = 0; r < rows; ++r) {
    int lo = 0, hi = width - 1;
    if (r == 0) hi = width - 2;
    if (r == rows - 1) {
      if (last_gap_even) {
        hi = width - 2;
      } else {
        lo = 1;
      }
    }
    for (int c = lo; c <= hi; ++c) {
      index[r][c] = next++;
      if (c > lo) edges.emplace_back(index[r][c - 1], index[r][c]);
    }
    if (r + 1 < rows) {
      for (std::size_t k = bridge_columns(r).size(); k > 0; --k) bridges[r].push_back(next++);
    }
  }
  for (int r = 0; r + 1 < rows; ++r) {
    const auto cols = bridge_columns(r);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const int q = bridges[r][k];
      if (index[r][cols[k]] >= 0) edges.emplace_back(index[r][cols[k]], q);
      if (index[r + 1][cols[k]] >= 0) edges.emplace_back(q, index[r + 1][cols[k]]);
    }
  }
  return make_coupling_map(next, std::move(edges));
}

CouplingMap eagle127() { return load_coupling_map(std::string(SWAPQAOA_DATA_DIR) + "/eagle127.json"); }

namespace {

void check_length(const CouplingMap& map, int length) {
  if (length < 2 || length > map.num_qubits) {
    throw std::invalid_argument("line length must lie in [2, " + std::to_string(map.num_qubits) + "]");
  }
}

// Depth-first walk over simple paths that start at `start`.
class PathWalker {
 public:
  PathWalker(const std::vector<std::vector<int>>& adj, int length)
      : adj_(adj), length_(length), visited_(adj.size(), 0) {
    path_.reserve(static_cast<std::size_t>(length));
  }

  template <typename Visit>
  void walk(int start, Visit&& visit) {
    path_.assign(1, start);
    visited_[start] = 1;
    step(visit);
    visited_[start] = 0;
  }

 private:
  template <typename Visit>
  void step(Visit& visit) {
    if (static_cast<int>(path_.size()) == length_) {
      visit(path_);
      return;
    }
    for (int w : adj_[path_.back()]) {
      if (visited_[w]) continue;
      visited_[w] = 1;
      path_.push_back(w);
      step(visit);
      path_.pop_back();
      visited_[w] = 0;
    }
  }

  const std::vector<std::vector<int>>& adj_;
  int length_;
  std::vector<char> visited_;
  std::vector<int> path_;
};

}  // namespace

std::uint64_t count_lines(const CouplingMap& map, int length, const LineOptions& options) {
  check_length(map, length);
  const auto adj = map.adjacency();
  std::vector<std::uint64_t> per_start(static_cast<std::size_t>(map.num_qubits), 0);
  parallel_for(
      per_start.size(),
      [&](std::size_t s) {
        PathWalker walker(adj, length);
        std::uint64_t c = 0;
        walker.walk(static_cast<int>(s), [&c](const std::vector<int>&) { ++c; });
        per_start[s] = c;
      },
      options.threads);
  std::uint64_t total = 0;
  for (auto c : per_start) total += c;
  // Every undirected path is found once from each endpoint.
  return options.directed ? total : total / 2;
}

void enumerate_lines(const CouplingMap& map, int length, const std::function<void(const std::vector<int>&)>& visit,
                     bool directed) {
  check_length(map, length);
  const auto adj = map.adjacency();
  PathWalker walker(adj, length);
  for (int s = 0; s < map.num_qubits; ++s) {
    walker.walk(s, [&](const std::vector<int>& path) {
      if (directed || path.front() < path.back()) visit(path);
    });
  }
}

double path_fidelity(const CouplingMap& map, const std::vector<int>& path) {
  double f = 1.0;
  for (std::size_t i = 1; i < path.size(); ++i) f *= 1.0 - map.error(path[i - 1], path[i]);
  return f;
}

BestLine best_line(const CouplingMap& map, int length, unsigned threads) {
  check_length(map, length);
  const auto adj = map.adjacency();
  std::vector<BestLine> per_start(static_cast<std::size_t>(map.num_qubits));
  parallel_for(
      per_start.size(),
      [&](std::size_t s) {
        PathWalker walker(adj, length);
        BestLine& best = per_start[s];
        best.fidelity = -1.0;
        walker.walk(static_cast<int>(s), [&](const std::vector<int>& path) {
          if (path.front() > path.back()) return;
          ++best.lines;
          const double f = path_fidelity(map, path);
          if (f > best.fidelity) {
            best.fidelity = f;
            best.path = path;
          }
        });
      },
      threads);
  BestLine out;
  out.fidelity = -1.0;
  // Starts are visited in increasing order, so the earliest maximum is the
  // lexicographically smallest.
  for (const auto& b : per_start) {
    out.lines += b.lines;
    if (b.lines > 0 && b.fidelity > out.fidelity) {
      out.fidelity = b.fidelity;
      out.path = b.path;
    }
  }
  if (out.path.empty()) throw std::invalid_argument("no line of length " + std::to_string(length) + " exists");
  return out;
}

nlohmann::json to_json(const CouplingMap& map) {
  nlohmann::json edges = nlohmann::json::array();
  nlohmann::json errors = nlohmann::json::object();
  for (const auto& [a, b] : map.edges) edges.push_back({a, b});
  for (const auto& [e, err] : map.gate_errors) errors[std::to_string(e.first) + "-" + std::to_string(e.second)] = err;
  return {{"num_qubits", map.num_qubits}, {"edges", edges}, {"errors", errors}};
}

CouplingMap coupling_map_from_json(const nlohmann::json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  std::map<std::pair<int, int>, double> errors;
  if (j.contains("errors")) {
    for (const auto& [key, value] : j.at("errors").items()) {
      const auto dash = key.find('-');
      if (dash == std::string::npos) throw std::invalid_argument("error key '" + key + "' is not of the form a-b");
      errors[{std::stoi(key.substr(0, dash)), std::stoi(key.substr(dash + 1))}] = value.get<double>();
    }
  }
  return make_coupling_map(j.at("num_qubits").get<int>(), std::move(edges), std::move(errors));
}

CouplingMap load_coupling_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coupling map '" + path + "'");
  return coupling_map_from_json(nlohmann::json::parse(in));
}

}  // namespace swapqaoa
