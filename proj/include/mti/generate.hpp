#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mti/formula.hpp"

// Seeded random instance generation under the occurrence constraints.

namespace mti {

// mt19937 output is byte-stable across standard libraries; the bounded draw
// below replaces std::uniform_int_distribution, whose mapping is
// implementation-defined, so equal seeds give equal instances everywhere.
class Rng {
 public:
  explicit Rng(std::uint32_t seed) : eng_(seed) {}

  std::uint32_t below(std::uint32_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
    const std::uint32_t limit = UINT32_MAX - UINT32_MAX % bound;
    std::uint32_t r;
    do {
      r = eng_();
    } while (r >= limit);
    return r % bound;
  }

  bool flip() { return below(2) == 1; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(static_cast<std::uint32_t>(i))]);
  }

 private:
  std::mt19937 eng_;
};

// Disjunctive instance with every variable in exactly 3 clauses and every
// clause over two distinct variables; n must be even so that m = 3n/2.
inline SatInstance gen_sat(int n, std::uint32_t seed) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("gen_sat: variable count must be even and at least 2");
  const int m = 3 * n / 2;
  Rng rng(seed);
  std::vector<int> slots;
  slots.reserve(static_cast<std::size_t>(3) * n);
  for (int v = 1; v <= n; ++v)
    for (int r = 0; r < sat_exact_occurrences; ++r) slots.push_back(v);

  for (int attempt = 0; attempt < 1000; ++attempt) {
    rng.shuffle(slots);
    bool ok = true;
    for (int t = 0; t < m && ok; ++t) {
      const std::size_t x = static_cast<std::size_t>(2 * t);
      if (slots[x] != slots[x + 1]) continue;
      bool fixed = false;
      for (std::size_t p = 0; p < slots.size() && !fixed; ++p) {
        if (p / 2 == static_cast<std::size_t>(t)) continue;
        const std::size_t q = p ^ 1;  // partner slot in p's pair
        if (slots[p] != slots[x] && slots[q] != slots[x + 1]) {
          std::swap(slots[x + 1], slots[p]);
          fixed = true;
        }
      }
      ok = fixed;
    }
    if (!ok) continue;
    SatInstance s;
    s.var_count = n;
    s.clauses.reserve(static_cast<std::size_t>(m));
    for (int t = 0; t < m; ++t) {
      const std::size_t x = static_cast<std::size_t>(2 * t);
      const Literal a{slots[x], rng.flip()};
      const Literal b{slots[x + 1], rng.flip()};
      s.clauses.push_back(Clause{a, b});
    }
    return s;
  }
  throw std::runtime_error("gen_sat: could not repair pairing");
}

// Conjunctive instance: m clauses, every variable used at least once and at
// most 12 times, no complementary pair inside a clause. When the two slots
// of a clause land on one variable they take the same polarity, producing a
// duplicate-literal clause.
inline CsatInstance gen_csat(int n, int m, std::uint32_t seed) {
  if (n < 1 || m < 1) throw std::invalid_argument("gen_csat: need at least one variable and clause");
  if (2 * m < n)
    throw std::invalid_argument("gen_csat: " + std::to_string(m) +
                                " clauses cannot cover " + std::to_string(n) + " variables");
  if (2 * m > csat_max_occurrences * n)
    throw std::invalid_argument("gen_csat: " + std::to_string(m) +
                                " clauses exceed the occurrence capacity of " +
                                std::to_string(n) + " variables");
  Rng rng(seed);
  std::vector<int> slots;
  slots.reserve(static_cast<std::size_t>(2) * m);
  std::vector<int> occ(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    slots.push_back(v);
    occ[static_cast<std::size_t>(v)] = 1;
  }
  for (int extra = 2 * m - n; extra > 0; --extra) {
    std::vector<int> eligible;
    for (int v = 1; v <= n; ++v)
      if (occ[static_cast<std::size_t>(v)] < csat_max_occurrences) eligible.push_back(v);
    const int v = eligible[rng.below(static_cast<std::uint32_t>(eligible.size()))];
    slots.push_back(v);
    ++occ[static_cast<std::size_t>(v)];
  }
  rng.shuffle(slots);

  CsatInstance c;
  c.var_count = n;
  c.clauses.reserve(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    const int a = slots[static_cast<std::size_t>(2 * t)];
    const int b = slots[static_cast<std::size_t>(2 * t + 1)];
    if (a == b) {
      const bool s = rng.flip();
      c.clauses.push_back(Clause{Literal{a, s}, Literal{a, s}});
    } else {
      c.clauses.push_back(Clause{Literal{a, rng.flip()}, Literal{b, rng.flip()}});
    }
  }
  return c;
}

}  // namespace mti
