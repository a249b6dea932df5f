#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace swapqaoa::sat {

enum class Result { Sat, Unsat, Unknown };

struct Stats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t restarts = 0;
  std::uint64_t learnt_literals = 0;
};

/// Complete CDCL solver: two-watched-literal propagation, first-UIP clause
/// learning with recursive minimization, VSIDS branching with phase saving,
/// Luby restarts and LBD-based learnt clause reduction.
///
/// Literals use the DIMACS convention: variable v (1-based) is `v`, its
/// negation `-v`.
class Solver {
 public:
  Solver() = default;
  explicit Solver(int num_vars) { reserve_vars(num_vars); }

  int new_var();
  void reserve_vars(int num_vars);
  [[nodiscard]] int num_vars() const { return static_cast<int>(assigns_.size()); }

  /// Returns false if the formula became trivially unsatisfiable.
  bool add_clause(std::span<const int> dimacs_literals);
  bool add_clause(std::initializer_list<int> dimacs_literals) {
    return add_clause(std::span<const int>(dimacs_literals.begin(), dimacs_literals.size()));
  }

  /// conflict_budget < 0 means unlimited; Unknown is only returned when the
  /// budget runs out.
  Result solve(std::int64_t conflict_budget = -1);

  /// Value of variable v (1-based) in the last model.
  [[nodiscard]] bool model_value(int v) const { return model_.at(static_cast<std::size_t>(v - 1)) > 0; }
  [[nodiscard]] const Stats& stats() const { return stats_; }

 private:
  using Lit = int;  // 2 * var + negated
  using CRef = int;
  static constexpr CRef kNoReason = -1;

  struct Clause {
    std::vector<Lit> lits;
    bool learnt = false;
    bool deleted = false;
    int lbd = 0;
    double activity = 0.0;
  };
  struct Watcher {
    CRef cref;
    Lit blocker;
  };

  static constexpr Lit lit_of(int dimacs) { return dimacs > 0 ? 2 * (dimacs - 1) : 2 * (-dimacs - 1) + 1; }
  static constexpr int var_of(Lit l) { return l >> 1; }
  static constexpr Lit neg(Lit l) { return l ^ 1; }
  [[nodiscard]] std::int8_t value(Lit l) const {
    const std::int8_t a = assigns_[var_of(l)];
    return (l & 1) ? static_cast<std::int8_t>(-a) : a;
  }
  [[nodiscard]] int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  void assign(Lit l, CRef reason);
  CRef propagate();
  void analyze(CRef conflict, std::vector<Lit>& learnt, int& backtrack_level, int& lbd);
  bool redundant(Lit l, std::uint32_t abstract_levels);
  void backtrack(int level);
  Lit pick_branch();
  void attach(CRef cr);
  void bump_var(int v);
  void bump_clause(Clause& c);
  void reduce_learnts();

  // Max-heap of unassigned variables by activity.
  void heap_insert(int v);
  void heap_up(int pos);
  void heap_down(int pos);
  int heap_pop();
  [[nodiscard]] bool heap_contains(int v) const { return heap_index_[v] >= 0; }

  std::vector<Clause> clauses_;
  std::vector<CRef> learnts_;
  std::vector<std::vector<Watcher>> watches_;
  std::vector<std::int8_t> assigns_;
  std::vector<std::int8_t> phase_;
  std::vector<int> level_;
  std::vector<CRef> reason_;
  std::vector<double> activity_;
  std::vector<int> heap_;
  std::vector<int> heap_index_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<char> seen_;
  std::vector<Lit> analyze_stack_;
  std::vector<Lit> analyze_clear_;
  std::vector<int> lbd_stamp_;
  int lbd_counter_ = 0;
  double var_inc_ = 1.0;
  double clause_inc_ = 1.0;
  bool ok_ = true;
  std::vector<std::int8_t> model_;
  Stats stats_;
};

}  // namespace swapqaoa::sat
