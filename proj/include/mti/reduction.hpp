#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mti/family.hpp"
#include "mti/formula.hpp"
#include "mti/graph.hpp"

// The two reductions: the 6-clause gadget turning a disjunctive clause into
// conjunctive clauses, and the map from a conjunctive instance to a family of
// 3-track intervals whose intersection graph has maximum clique 12n + z*.
// Also the solution mappings between assignments and cliques.

namespace mti {

constexpr int literal_copies = 12;
constexpr int gadget_block_size = 6;

struct GadgetMap {
  int source_vars = 0;
  int source_clauses = 0;
  std::vector<std::array<int, gadget_block_size>> images;  // 1-based produced clause indices
  std::vector<int> dummies;                                // dummy variable per source clause

  friend bool operator==(const GadgetMap&, const GadgetMap&) = default;
};

// Replaces each disjunctive clause l1 OR l2 with the six conjunctive clauses
//   l1&y  l1&~y  l2&y  l2&~y  l1&~l2  ~l1&l2
// over a fresh dummy y. Exactly two of the six hold when the source clause
// holds and none otherwise, whatever value y takes. Each source occurrence
// becomes 4 occurrences, so 3-occurrence sources stay within the 12 cap.
//
// The source must be structurally sound with occurrences in 1..3 per
// variable; exact-3 occurrence is reported by validate() but not required
// here. A clause repeating one literal (x OR x) is rejected: its image would
// contain the complementary conjunction x & ~x.
inline std::pair<CsatInstance, GadgetMap> gadgetize(const SatInstance& s) {
  const int n = s.var_count;
  const int m = s.clause_count();
  std::vector<int> occ(static_cast<std::size_t>(n) + 1, 0);
  int ci = 0;
  for (const Clause& c : s.clauses) {
    ++ci;
    for (Literal l : {c.first, c.second}) {
      if (l.var < 1 || l.var > n)
        throw std::invalid_argument("gadgetize: clause " + std::to_string(ci) +
                                    " references variable " + std::to_string(l.var) +
                                    " outside 1.." + std::to_string(n));
      ++occ[static_cast<std::size_t>(l.var)];
    }
    if (c.first == c.second)
      throw std::invalid_argument("gadgetize: clause " + std::to_string(ci) +
                                  " repeats a literal");
  }
  for (int v = 1; v <= n; ++v) {
    if (occ[static_cast<std::size_t>(v)] == 0)
      throw std::invalid_argument("gadgetize: variable " + std::to_string(v) + " unused");
    if (occ[static_cast<std::size_t>(v)] > sat_exact_occurrences)
      throw std::invalid_argument("gadgetize: variable " + std::to_string(v) + " occurs " +
                                  std::to_string(occ[static_cast<std::size_t>(v)]) +
                                  " times, more than " + std::to_string(sat_exact_occurrences));
  }

  CsatInstance out;
  out.var_count = n + m;
  out.clauses.reserve(static_cast<std::size_t>(m) * gadget_block_size);
  GadgetMap map;
  map.source_vars = n;
  map.source_clauses = m;
  for (int k = 1; k <= m; ++k) {
    const Clause& c = s.clauses[static_cast<std::size_t>(k) - 1];
    const Literal l1 = c.first;
    const Literal l2 = c.second;
    const Literal y = pos(n + k);
    out.clauses.push_back(Clause{l1, y});
    out.clauses.push_back(Clause{l1, complement(y)});
    out.clauses.push_back(Clause{l2, y});
    out.clauses.push_back(Clause{l2, complement(y)});
    out.clauses.push_back(Clause{l1, complement(l2)});
    out.clauses.push_back(Clause{complement(l1), l2});
    std::array<int, gadget_block_size> img{};
    for (int j = 0; j < gadget_block_size; ++j) img[static_cast<std::size_t>(j)] = (k - 1) * gadget_block_size + j + 1;
    map.images.push_back(img);
    map.dummies.push_back(n + k);
  }
  return {std::move(out), std::move(map)};
}

// Literal geometry. The positive interval of x_i ends where the negative one
// begins on every track, so the two are disjoint, while literals of distinct
// variables always share a point on track 1 or 2.
inline MultiTrackInterval literal_tracks(int var, bool negated, int n) {
  if (!negated)
    return MultiTrackInterval{{{-var, var}, {var, n + 1}, {var, var + 1}}};
  return MultiTrackInterval{{{var, n + 1}, {-var, var}, {-(var + 1), -var}}};
}

// Clause geometry, by polarity pattern after normalizing literal order. The
// interval touches (without overlapping) exactly the intervals of the
// clause's own literals and overlaps every other literal interval.
inline MultiTrackInterval clause_tracks(const Clause& cl, int n) {
  Literal a = cl.first;
  Literal b = cl.second;
  if (a.var == b.var && a.negated != b.negated)
    throw std::invalid_argument("clause_tracks: complementary literals of variable " +
                                std::to_string(a.var));
  if (a.negated == b.negated) {
    if (a.var > b.var) std::swap(a, b);
    const int i = a.var;
    const int j = b.var;
    const OpenInterval third =
        j > i + 1 ? (a.negated ? OpenInterval{-j, -(i + 1)} : OpenInterval{i + 1, j})
                  : OpenInterval{-1, 1};
    if (!a.negated)
      return MultiTrackInterval{{{-(n + 1), -j}, {-(n + 1), i}, third}};
    return MultiTrackInterval{{{-(n + 1), i}, {-(n + 1), -j}, third}};
  }
  const Literal p = a.negated ? b : a;
  const Literal q = a.negated ? a : b;
  if (p.var < q.var) {
    const int i = p.var;
    const int j = q.var;
    return MultiTrackInterval{{{i, j}, {-(n + 1), -j}, {-1, i}}};
  }
  const int i = q.var;
  const int j = p.var;
  return MultiTrackInterval{{{-(n + 1), -j}, {i, j}, {-i, 1}}};
}

// Emits 12 copies per positive literal (variables ascending), then 12 per
// negative literal, then one member per clause: 24n + m members with all
// endpoints in [-(n+1), n+1].
inline TrackFamily construct_tracks(const CsatInstance& c) {
  const ValidationReport rep = validate(c);
  if (!rep.ok())
    throw std::invalid_argument("construct_tracks: invalid instance: " + rep.violations.front());
  TrackFamily f;
  f.var_count = c.var_count;
  f.clause_count = c.clause_count();
  f.members.reserve(static_cast<std::size_t>(2 * literal_copies) * c.var_count + c.clauses.size());
  for (int i = 1; i <= c.var_count; ++i)
    for (int copy = 1; copy <= literal_copies; ++copy)
      f.members.push_back(FamilyMember{pos_lit_tag(i, copy), literal_tracks(i, false, c.var_count)});
  for (int i = 1; i <= c.var_count; ++i)
    for (int copy = 1; copy <= literal_copies; ++copy)
      f.members.push_back(FamilyMember{neg_lit_tag(i, copy), literal_tracks(i, true, c.var_count)});
  for (int k = 1; k <= c.clause_count(); ++k)
    f.members.push_back(
        FamilyMember{clause_tag(k), clause_tracks(c.clauses[static_cast<std::size_t>(k) - 1], c.var_count)});
  return f;
}

// A clique is a set of family tags whose members pairwise intersect.
using CliqueWitness = std::vector<Tag>;

inline CliqueWitness normalize_witness(CliqueWitness k) {
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  return k;
}

namespace detail {

inline std::map<Tag, const MultiTrackInterval*> index_family(const TrackFamily& f) {
  std::map<Tag, const MultiTrackInterval*> idx;
  for (const FamilyMember& m : f.members) idx.emplace(m.tag, &m.interval);
  return idx;
}

inline const MultiTrackInterval& member_interval(
    const std::map<Tag, const MultiTrackInterval*>& idx, const Tag& t) {
  const auto it = idx.find(t);
  if (it == idx.end())
    throw std::invalid_argument("tag " + t.to_string() + " not in family");
  return *it->second;
}

}  // namespace detail

inline bool witness_is_clique(const TrackFamily& f, const CliqueWitness& k) {
  const auto idx = detail::index_family(f);
  std::vector<const MultiTrackInterval*> ivs;
  ivs.reserve(k.size());
  for (const Tag& t : k) ivs.push_back(&detail::member_interval(idx, t));
  for (std::size_t i = 0; i < ivs.size(); ++i)
    for (std::size_t j = i + 1; j < ivs.size(); ++j)
      if (!mti_intersects(*ivs[i], *ivs[j])) return false;
  return true;
}

// Builds the clique of size 12n + evaluate(c, a): the member of every
// satisfied clause plus, per variable, all 12 copies of one literal. The
// selected literal is the one the assignment makes FALSE (negative copies
// for a true variable): a clause interval is disjoint from exactly its own
// literals' intervals, and a satisfied clause contains no false literal, so
// the selection meets every selected clause member.
inline CliqueWitness assignment_to_clique(const CsatInstance& c, const TrackFamily& f,
                                          const Assignment& a) {
  if (a.size() != c.var_count)
    throw std::invalid_argument("assignment_to_clique: assignment length mismatch");
  if (f.var_count != c.var_count || f.clause_count != c.clause_count())
    throw std::invalid_argument("assignment_to_clique: family does not match instance");
  CliqueWitness k;
  for (int i = 1; i <= c.var_count; ++i)
    for (int copy = 1; copy <= literal_copies; ++copy)
      k.push_back(a.value(i) ? neg_lit_tag(i, copy) : pos_lit_tag(i, copy));
  for (int kk = 1; kk <= c.clause_count(); ++kk)
    if (clause_satisfied(c.clauses[static_cast<std::size_t>(kk) - 1], a, ClauseKind::conjunctive))
      k.push_back(clause_tag(kk));
  return normalize_witness(std::move(k));
}

// Converts any clique into one of at least the same size that contains, per
// variable, all 12 copies of exactly one literal. Clause members that are
// disjoint from a chosen literal (i.e. clauses containing it) are dropped;
// at most 12 can contain any one literal, so each variable's step never
// shrinks the clique.
inline CliqueWitness canonicalize_clique(const TrackFamily& f, const CliqueWitness& k) {
  if (!witness_is_clique(f, k))
    throw std::invalid_argument("canonicalize_clique: input is not a clique");
  const auto idx = detail::index_family(f);
  const int n = f.var_count;

  std::vector<Tag> clauses;
  std::vector<bool> has_pos(static_cast<std::size_t>(n) + 1, false);
  std::vector<bool> has_neg(static_cast<std::size_t>(n) + 1, false);
  for (const Tag& t : normalize_witness(k)) {
    if (t.kind == TagKind::clause)
      clauses.push_back(t);
    else if (t.kind == TagKind::pos_lit)
      has_pos[static_cast<std::size_t>(t.index)] = true;
    else if (t.kind == TagKind::neg_lit)
      has_neg[static_cast<std::size_t>(t.index)] = true;
    else
      throw std::invalid_argument("canonicalize_clique: tag " + t.to_string() +
                                  " is not a family tag");
  }

  CliqueWitness out;
  for (int i = 1; i <= n; ++i) {
    const MultiTrackInterval& posrep =
        detail::member_interval(idx, pos_lit_tag(i, 1));
    const MultiTrackInterval& negrep =
        detail::member_interval(idx, neg_lit_tag(i, 1));
    const auto conflicts = [&](const MultiTrackInterval& rep) {
      int cnt = 0;
      for (const Tag& t : clauses)
        if (!mti_intersects(detail::member_interval(idx, t), rep)) ++cnt;
      return cnt;
    };
    bool take_neg;
    if (has_pos[static_cast<std::size_t>(i)])
      take_neg = false;
    else if (has_neg[static_cast<std::size_t>(i)])
      take_neg = true;
    else
      take_neg = conflicts(negrep) < conflicts(posrep);  // tie goes positive
    const MultiTrackInterval& rep = take_neg ? negrep : posrep;
    std::erase_if(clauses, [&](const Tag& t) {
      return !mti_intersects(detail::member_interval(idx, t), rep);
    });
    for (int copy = 1; copy <= literal_copies; ++copy)
      out.push_back(take_neg ? neg_lit_tag(i, copy) : pos_lit_tag(i, copy));
  }
  out.insert(out.end(), clauses.begin(), clauses.end());
  return normalize_witness(std::move(out));
}

struct Extraction {
  Assignment assignment;
  int satisfied = 0;
};

// Reads the assignment off a canonical clique: x_i is false when the clique
// holds the positive copies. The satisfied count is geometric: a clause is
// satisfied exactly when its member intersects every selected literal
// interval, so it equals evaluate() on the source instance.
inline Extraction clique_to_assignment(const TrackFamily& f, const CliqueWitness& k) {
  const auto idx = detail::index_family(f);
  const int n = f.var_count;
  std::vector<int> pos_copies(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> neg_copies(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Tag> clauses;
  for (const Tag& t : normalize_witness(k)) {
    detail::member_interval(idx, t);
    if (t.kind == TagKind::clause)
      clauses.push_back(t);
    else if (t.kind == TagKind::pos_lit)
      ++pos_copies[static_cast<std::size_t>(t.index)];
    else
      ++neg_copies[static_cast<std::size_t>(t.index)];
  }

  std::vector<bool> values(static_cast<std::size_t>(n));
  std::vector<const MultiTrackInterval*> chosen;
  chosen.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int p = pos_copies[static_cast<std::size_t>(i)];
    const int q = neg_copies[static_cast<std::size_t>(i)];
    if (!((p == literal_copies && q == 0) || (p == 0 && q == literal_copies)))
      throw std::invalid_argument("clique_to_assignment: not canonical at variable " +
                                  std::to_string(i));
    const bool truth = q == literal_copies;
    values[static_cast<std::size_t>(i) - 1] = truth;
    chosen.push_back(&detail::member_interval(idx, truth ? neg_lit_tag(i, 1) : pos_lit_tag(i, 1)));
  }
  const auto compatible = [&chosen](const MultiTrackInterval& iv) {
    for (const MultiTrackInterval* rep : chosen)
      if (!mti_intersects(iv, *rep)) return false;
    return true;
  };
  for (const Tag& t : clauses)
    if (!compatible(detail::member_interval(idx, t)))
      throw std::invalid_argument("clique_to_assignment: not a clique: clause " +
                                  t.to_string() + " conflicts with a selected literal");

  int satisfied = 0;
  for (const FamilyMember& m : f.members)
    if (m.tag.kind == TagKind::clause && compatible(m.interval)) ++satisfied;
  return Extraction{Assignment(std::move(values)), satisfied};
}

// Expands collapsed literal classes (copy 0) back into their 12 copies so
// solver output over a collapsed graph can be checked as a family clique.
inline CliqueWitness expand_collapsed(const std::vector<Tag>& verts) {
  CliqueWitness out;
  for (const Tag& t : verts) {
    if (t.kind == TagKind::vertex)
      throw std::invalid_argument("expand_collapsed: anonymous vertex tag " + t.to_string());
    if (is_literal(t) && t.copy == 0)
      for (int copy = 1; copy <= literal_copies; ++copy)
        out.push_back(Tag{t.kind, t.index, copy});
    else
      out.push_back(t);
  }
  return normalize_witness(std::move(out));
}

}  // namespace mti
