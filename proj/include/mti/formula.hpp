#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Two-literal boolean formulas: conjunctive (every clause an AND of exactly
// two literals) and disjunctive (OR) instances, evaluation, validation, and
// an exhaustive optimization oracle.

namespace mti {

// 1-based variable index plus polarity. Index 0 is reserved as a terminator
// in file formats and never appears inside an instance.
struct Literal {
  int var = 0;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(int var) { return Literal{var, false}; }
inline Literal neg(int var) { return Literal{var, true}; }
inline Literal complement(Literal l) { return Literal{l.var, !l.negated}; }

struct Clause {
  Literal first;
  Literal second;

  friend bool operator==(const Clause&, const Clause&) = default;
};

enum class ClauseKind { conjunctive, disjunctive };

constexpr int csat_max_occurrences = 12;
constexpr int sat_exact_occurrences = 3;

// Conjunctive instance: every variable occurs at least once and at most 12
// times (an occurrence is one literal slot), no clause pairs a variable with
// its own negation. Duplicate-literal clauses (x AND x) are allowed.
struct CsatInstance {
  static constexpr ClauseKind kind = ClauseKind::conjunctive;
  int var_count = 0;
  std::vector<Clause> clauses;

  int clause_count() const { return static_cast<int>(clauses.size()); }
  friend bool operator==(const CsatInstance&, const CsatInstance&) = default;
};

// Disjunctive instance: every variable occurs exactly 3 times.
struct SatInstance {
  static constexpr ClauseKind kind = ClauseKind::disjunctive;
  int var_count = 0;
  std::vector<Clause> clauses;

  int clause_count() const { return static_cast<int>(clauses.size()); }
  friend bool operator==(const SatInstance&, const SatInstance&) = default;
};

struct Assignment {
  std::vector<bool> values;  // values[i-1] holds x_i

  Assignment() = default;
  explicit Assignment(std::vector<bool> v) : values(std::move(v)) {}

  static Assignment all_false(int n) { return Assignment(std::vector<bool>(n, false)); }

  int size() const { return static_cast<int>(values.size()); }
  bool value(int var) const { return values[static_cast<std::size_t>(var) - 1]; }

  std::string to_string() const {
    std::string s;
    s.reserve(values.size());
    for (bool b : values) s += b ? '1' : '0';
    return s;
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

inline bool holds(Literal l, const Assignment& a) { return a.value(l.var) != l.negated; }

inline bool clause_satisfied(const Clause& c, const Assignment& a, ClauseKind kind) {
  const bool x = holds(c.first, a);
  const bool y = holds(c.second, a);
  return kind == ClauseKind::conjunctive ? (x && y) : (x || y);
}

template <class Instance>
int evaluate(const Instance& f, const Assignment& a) {
  if (a.size() != f.var_count)
    throw std::invalid_argument("evaluate: assignment length " + std::to_string(a.size()) +
                                " != variable count " + std::to_string(f.var_count));
  int sat = 0;
  for (const Clause& c : f.clauses)
    if (clause_satisfied(c, a, Instance::kind)) ++sat;
  return sat;
}

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

template <class Instance>
ValidationReport validate(const Instance& f) {
  ValidationReport r;
  const int n = f.var_count;
  std::vector<int> occ(static_cast<std::size_t>(n) + 1, 0);
  int ci = 0;
  for (const Clause& c : f.clauses) {
    ++ci;
    for (Literal l : {c.first, c.second}) {
      if (l.var < 1 || l.var > n)
        r.violations.push_back("clause " + std::to_string(ci) + ": variable " +
                               std::to_string(l.var) + " out of range 1.." + std::to_string(n));
      else
        ++occ[static_cast<std::size_t>(l.var)];
    }
    if constexpr (Instance::kind == ClauseKind::conjunctive) {
      if (c.first.var == c.second.var && c.first.negated != c.second.negated)
        r.violations.push_back("clause " + std::to_string(ci) +
                               ": complementary literals of variable " +
                               std::to_string(c.first.var));
    }
  }
  for (int v = 1; v <= n; ++v) {
    const int k = occ[static_cast<std::size_t>(v)];
    if constexpr (Instance::kind == ClauseKind::conjunctive) {
      if (k == 0)
        r.violations.push_back("variable " + std::to_string(v) + ": unused");
      else if (k > csat_max_occurrences)
        r.violations.push_back("variable " + std::to_string(v) + ": occurs " +
                               std::to_string(k) + " times, cap " +
                               std::to_string(csat_max_occurrences));
    } else {
      if (k != sat_exact_occurrences)
        r.violations.push_back("variable " + std::to_string(v) + ": occurs " +
                               std::to_string(k) + " times, expected exactly " +
                               std::to_string(sat_exact_occurrences));
    }
  }
  return r;
}

struct OptResult {
  int best = 0;
  Assignment witness;
};

// Exhausts all 2^n assignments. Variable 1 maps to the most significant bit,
// so ascending code order is lexicographic order with false < true and the
// first maximum found is the lexicographically smallest witness. Each clause
// touches a fixed subcube of the code space, which is swept directly instead
// of re-evaluating every clause at every code.
template <class Instance>
OptResult brute_force_opt(const Instance& f, int cap = 24) {
  const int n = f.var_count;
  if (n > cap)
    throw std::invalid_argument("brute_force_opt: " + std::to_string(n) +
                                " variables exceeds cap " + std::to_string(cap));
  if (n > 26) throw std::invalid_argument("brute_force_opt: caps above 26 are not supported");
  if (f.clauses.size() > 30000)
    throw std::invalid_argument("brute_force_opt: too many clauses");

  const std::size_t space = std::size_t{1} << n;
  const std::uint32_t full = static_cast<std::uint32_t>(space - 1);
  std::vector<std::int16_t> delta(space, 0);
  int always = 0;  // clauses no assignment can falsify (disjunctive x OR ~x)

  for (const Clause& c : f.clauses) {
    std::uint32_t fixed_mask = 0;
    std::uint32_t fixed_val = 0;
    bool feasible = true;
    // Target subcube: both literals true (conjunctive) or both false (disjunctive).
    for (Literal l : {c.first, c.second}) {
      if (l.var < 1 || l.var > n)
        throw std::invalid_argument("brute_force_opt: literal variable out of range");
      const std::uint32_t bit = 1u << (n - l.var);
      const bool bitval = Instance::kind == ClauseKind::conjunctive ? !l.negated : l.negated;
      if (fixed_mask & bit) {
        if ((((fixed_val & bit) != 0)) != bitval) {
          feasible = false;
          break;
        }
      } else {
        fixed_mask |= bit;
        if (bitval) fixed_val |= bit;
      }
    }
    const std::uint32_t free = full & ~fixed_mask;
    if constexpr (Instance::kind == ClauseKind::conjunctive) {
      if (!feasible) continue;  // complementary conjunction, never satisfied
      std::uint32_t t = free;
      for (;;) {
        ++delta[fixed_val | t];
        if (t == 0) break;
        t = (t - 1) & free;
      }
    } else {
      ++always;
      if (!feasible) continue;  // tautology, never falsified
      std::uint32_t t = free;
      for (;;) {
        --delta[fixed_val | t];
        if (t == 0) break;
        t = (t - 1) & free;
      }
    }
  }

  std::uint32_t best_code = 0;
  int best = always + delta[0];
  for (std::uint32_t code = 0; code != full;) {
    ++code;
    const int v = always + delta[code];
    if (v > best) {
      best = v;
      best_code = code;
    }
  }

  std::vector<bool> values(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) values[static_cast<std::size_t>(i) - 1] = (best_code >> (n - i)) & 1u;
  return OptResult{best, Assignment(std::move(values))};
}

}  // namespace mti
