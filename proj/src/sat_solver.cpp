#include "swapqaoa/sat_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swapqaoa::sat {

namespace {

constexpr double kVarDecay = 0.95;
constexpr double kClauseDecay = 0.999;
constexpr int kRestartUnit = 100;

// Luby sequence value for index i (0-based): 1 1 2 1 1 2 4 ...
double luby(double y, int x) {
  int size = 1;
  int seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(y, seq);
}

}  // namespace

int Solver::new_var() {
  const int v = num_vars();
  assigns_.push_back(0);
  phase_.push_back(-1);
  level_.push_back(0);
  reason_.push_back(kNoReason);
  activity_.push_back(0.0);
  heap_index_.push_back(-1);
  seen_.push_back(0);
  lbd_stamp_.push_back(0);
  lbd_stamp_.push_back(0);
  watches_.emplace_back();
  watches_.emplace_back();
  heap_insert(v);
  return v + 1;
}

void Solver::reserve_vars(int count) {
  while (num_vars() < count) new_var();
}

bool Solver::add_clause(std::span<const int> dimacs_literals) {
  if (!ok_) return false;
  if (decision_level() != 0) throw std::logic_error("clauses can only be added at level 0");
  std::vector<Lit> lits;
  lits.reserve(dimacs_literals.size());
  for (int d : dimacs_literals) {
    if (d == 0) throw std::invalid_argument("literal 0 is not allowed");
    reserve_vars(std::abs(d));
    lits.push_back(lit_of(d));
  }
  std::sort(lits.begin(), lits.end());
  std::vector<Lit> kept;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    const Lit l = lits[i];
    if (value(l) > 0) return true;                      // satisfied
    if (i + 1 < lits.size() && lits[i + 1] == neg(l)) return true;  // tautology
    if (value(l) < 0) continue;                          // false at root
    if (!kept.empty() && kept.back() == l) continue;
    kept.push_back(l);
  }
  if (kept.empty()) return ok_ = false;
  if (kept.size() == 1) {
    assign(kept[0], kNoReason);
    if (propagate() != kNoReason) ok_ = false;
    return ok_;
  }
  clauses_.push_back(Clause{std::move(kept)});
  attach(static_cast<CRef>(clauses_.size() - 1));
  return true;
}

void Solver::attach(CRef cr) {
  const auto& c = clauses_[cr].lits;
  watches_[neg(c[0])].push_back({cr, c[1]});
  watches_[neg(c[1])].push_back({cr, c[0]});
}

void Solver::assign(Lit l, CRef reason) {
  const int v = var_of(l);
  assigns_[v] = (l & 1) ? -1 : 1;
  level_[v] = decision_level();
  reason_[v] = reason;
  trail_.push_back(l);
}

Solver::CRef Solver::propagate() {
  CRef conflict = kNoReason;
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];
    const Lit false_lit = neg(p);
    auto& ws = watches_[p];
    ++stats_.propagations;
    std::size_t i = 0;
    std::size_t j = 0;
    const std::size_t end = ws.size();
    while (i < end) {
      const Watcher w = ws[i];
      if (value(w.blocker) > 0) {
        ws[j++] = ws[i++];
        continue;
      }
      Clause& c = clauses_[w.cref];
      if (c.deleted) {
        ++i;
        continue;
      }
      auto& lits = c.lits;
      if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
      ++i;
      const Lit first = lits[0];
      if (first != w.blocker && value(first) > 0) {
        ws[j++] = {w.cref, first};
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < lits.size(); ++k) {
        if (value(lits[k]) >= 0) {
          std::swap(lits[1], lits[k]);
          watches_[neg(lits[1])].push_back({w.cref, first});
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = {w.cref, first};
      if (value(first) < 0) {
        conflict = w.cref;
        qhead_ = trail_.size();
        while (i < end) ws[j++] = ws[i++];
      } else {
        assign(first, w.cref);
      }
    }
    ws.resize(j);
    if (conflict != kNoReason) break;
  }
  return conflict;
}

bool Solver::redundant(Lit p, std::uint32_t abstract_levels) {
  analyze_stack_.clear();
  analyze_stack_.push_back(p);
  const std::size_t top = analyze_clear_.size();
  while (!analyze_stack_.empty()) {
    const Lit q = analyze_stack_.back();
    analyze_stack_.pop_back();
    const auto& c = clauses_[reason_[var_of(q)]].lits;
    for (std::size_t i = 1; i < c.size(); ++i) {
      const Lit l = c[i];
      const int v = var_of(l);
      if (seen_[v] || level_[v] == 0) continue;
      if (reason_[v] != kNoReason && ((1U << (level_[v] & 31)) & abstract_levels) != 0) {
        seen_[v] = 1;
        analyze_stack_.push_back(l);
        analyze_clear_.push_back(l);
      } else {
        for (std::size_t k = top; k < analyze_clear_.size(); ++k) seen_[var_of(analyze_clear_[k])] = 0;
        analyze_clear_.resize(top);
        return false;
      }
    }
  }
  return true;
}

void Solver::analyze(CRef conflict, std::vector<Lit>& learnt, int& backtrack_level, int& lbd) {
  learnt.clear();
  learnt.push_back(0);  // slot for the asserting literal
  int pending = 0;
  Lit p = -1;
  std::size_t index = trail_.size();
  CRef cr = conflict;
  do {
    Clause& c = clauses_[cr];
    if (c.learnt) bump_clause(c);
    // Reason clauses keep their implied literal at position 0.
    for (std::size_t k = (p == -1) ? 0 : 1; k < c.lits.size(); ++k) {
      const Lit q = c.lits[k];
      const int v = var_of(q);
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = 1;
      bump_var(v);
      if (level_[v] >= decision_level()) {
        ++pending;
      } else {
        learnt.push_back(q);
      }
    }
    while (!seen_[var_of(trail_[--index])]) {
    }
    p = trail_[index];
    cr = reason_[var_of(p)];
    seen_[var_of(p)] = 0;
    --pending;
  } while (pending > 0);
  learnt[0] = neg(p);

  analyze_clear_.assign(learnt.begin(), learnt.end());
  std::uint32_t abstract_levels = 0;
  for (std::size_t i = 1; i < learnt.size(); ++i) abstract_levels |= 1U << (level_[var_of(learnt[i])] & 31);
  std::size_t j = 1;
  for (std::size_t i = 1; i < learnt.size(); ++i) {
    const int v = var_of(learnt[i]);
    if (reason_[v] == kNoReason || !redundant(learnt[i], abstract_levels)) learnt[j++] = learnt[i];
  }
  learnt.resize(j);
  for (Lit l : analyze_clear_) seen_[var_of(l)] = 0;

  backtrack_level = 0;
  if (learnt.size() > 1) {
    std::size_t max_i = 1;
    for (std::size_t i = 2; i < learnt.size(); ++i) {
      if (level_[var_of(learnt[i])] > level_[var_of(learnt[max_i])]) max_i = i;
    }
    std::swap(learnt[1], learnt[max_i]);
    backtrack_level = level_[var_of(learnt[1])];
  }
  ++lbd_counter_;
  lbd = 0;
  for (Lit l : learnt) {
    const int lv = level_[var_of(l)];
    if (lbd_stamp_[lv] != lbd_counter_) {
      lbd_stamp_[lv] = lbd_counter_;
      ++lbd;
    }
  }
}

void Solver::backtrack(int level) {
  if (decision_level() <= level) return;
  for (std::size_t k = trail_.size(); k-- > static_cast<std::size_t>(trail_lim_[level]);) {
    const int v = var_of(trail_[k]);
    phase_[v] = assigns_[v];
    assigns_[v] = 0;
    reason_[v] = kNoReason;
    if (!heap_contains(v)) heap_insert(v);
  }
  trail_.resize(trail_lim_[level]);
  trail_lim_.resize(level);
  qhead_ = trail_.size();
}

Solver::Lit Solver::pick_branch() {
  while (!heap_.empty()) {
    const int v = heap_pop();
    if (assigns_[v] == 0) return 2 * v + (phase_[v] < 0 ? 1 : 0);
  }
  return -1;
}

void Solver::bump_var(int v) {
  activity_[v] += var_inc_;
  if (activity_[v] > 1e100) {
    for (double& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  if (heap_contains(v)) heap_up(heap_index_[v]);
}

void Solver::bump_clause(Clause& c) {
  c.activity += clause_inc_;
  if (c.activity > 1e20) {
    for (CRef r : learnts_) clauses_[r].activity *= 1e-20;
    clause_inc_ *= 1e-20;
  }
}

void Solver::reduce_learnts() {
  auto locked = [&](CRef r) {
    const Lit first = clauses_[r].lits[0];
    return value(first) > 0 && reason_[var_of(first)] == r;
  };
  std::sort(learnts_.begin(), learnts_.end(), [&](CRef a, CRef b) {
    const Clause& ca = clauses_[a];
    const Clause& cb = clauses_[b];
    if (ca.lbd != cb.lbd) return ca.lbd > cb.lbd;
    return ca.activity < cb.activity;
  });
  const std::size_t half = learnts_.size() / 2;
  std::vector<CRef> kept;
  kept.reserve(learnts_.size());
  for (std::size_t k = 0; k < learnts_.size(); ++k) {
    const CRef r = learnts_[k];
    Clause& c = clauses_[r];
    if (k < half && c.lbd > 2 && c.lits.size() > 2 && !locked(r)) {
      c.deleted = true;
      c.lits.clear();
      c.lits.shrink_to_fit();
    } else {
      kept.push_back(r);
    }
  }
  learnts_ = std::move(kept);
}

void Solver::heap_insert(int v) {
  heap_index_[v] = static_cast<int>(heap_.size());
  heap_.push_back(v);
  heap_up(heap_index_[v]);
}

void Solver::heap_up(int pos) {
  const int v = heap_[pos];
  while (pos > 0) {
    const int parent = (pos - 1) / 2;
    if (activity_[heap_[parent]] >= activity_[v]) break;
    heap_[pos] = heap_[parent];
    heap_index_[heap_[pos]] = pos;
    pos = parent;
  }
  heap_[pos] = v;
  heap_index_[v] = pos;
}

void Solver::heap_down(int pos) {
  const int v = heap_[pos];
  const int size = static_cast<int>(heap_.size());
  for (;;) {
    int child = 2 * pos + 1;
    if (child >= size) break;
    if (child + 1 < size && activity_[heap_[child + 1]] > activity_[heap_[child]]) ++child;
    if (activity_[heap_[child]] <= activity_[v]) break;
    heap_[pos] = heap_[child];
    heap_index_[heap_[pos]] = pos;
    pos = child;
  }
  heap_[pos] = v;
  heap_index_[v] = pos;
}

int Solver::heap_pop() {
  const int top = heap_[0];
  heap_index_[top] = -1;
  const int last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_index_[last] = 0;
    heap_down(0);
  }
  return top;
}

Result Solver::solve(std::int64_t conflict_budget) {
  model_.clear();
  if (!ok_) return Result::Unsat;
  if (propagate() != kNoReason) {
    ok_ = false;
    return Result::Unsat;
  }
  std::vector<Lit> learnt;
  double max_learnts = std::max(2000.0, clauses_.size() / 3.0);
  std::int64_t used = 0;
  for (int restart = 0;; ++restart) {
    const auto limit = static_cast<std::int64_t>(luby(2.0, restart) * kRestartUnit);
    std::int64_t local = 0;
    for (;;) {
      const CRef conflict = propagate();
      if (conflict != kNoReason) {
        ++stats_.conflicts;
        ++local;
        ++used;
        if (decision_level() == 0) {
          ok_ = false;
          return Result::Unsat;
        }
        int bt = 0;
        int lbd = 0;
        analyze(conflict, learnt, bt, lbd);
        backtrack(bt);
        stats_.learnt_literals += learnt.size();
        if (learnt.size() == 1) {
          assign(learnt[0], kNoReason);
        } else {
          clauses_.push_back(Clause{learnt, true, false, lbd, 0.0});
          const CRef cr = static_cast<CRef>(clauses_.size() - 1);
          attach(cr);
          learnts_.push_back(cr);
          bump_clause(clauses_[cr]);
          assign(learnt[0], cr);
        }
        var_inc_ /= kVarDecay;
        clause_inc_ /= kClauseDecay;
        continue;
      }
      if (conflict_budget >= 0 && used >= conflict_budget) {
        backtrack(0);
        return Result::Unknown;
      }
      if (local >= limit) {
        backtrack(0);
        ++stats_.restarts;
        break;
      }
      if (static_cast<double>(learnts_.size()) > max_learnts + static_cast<double>(trail_.size())) {
        reduce_learnts();
        max_learnts *= 1.1;
      }
      const Lit next = pick_branch();
      if (next < 0) {
        model_.assign(assigns_.begin(), assigns_.end());
        backtrack(0);
        return Result::Sat;
      }
      ++stats_.decisions;
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      assign(next, kNoReason);
    }
  }
}

}  // namespace swapqaoa::sat
