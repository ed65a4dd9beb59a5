#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mti/clique.hpp"
#include "mti/formula.hpp"
#include "mti/graph.hpp"
#include "mti/reduction.hpp"

// Mechanical checks for every structural and quantitative property the
// reduction rests on, at brute-forceable scale.

namespace mti {

// The four structural facts about a constructed family:
//   [0] literal intervals of distinct variables pairwise overlap
//   [1] clause intervals pairwise overlap
//   [2] the positive and negative intervals of one variable are disjoint
//   [3] a clause interval is disjoint from its own literals' intervals and
//       overlaps every other literal interval
struct ObservationReport {
  struct Check {
    bool pass = true;
    Tag a{};
    Tag b{};
  };
  std::array<Check, 4> checks{};

  bool ok() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline ObservationReport check_observations(const CsatInstance& c, const TrackFamily& f) {
  ObservationReport rep;
  const auto fail = [&rep](int which, const Tag& a, const Tag& b) {
    auto& chk = rep.checks[static_cast<std::size_t>(which)];
    if (chk.pass) {
      chk.pass = false;
      chk.a = a;
      chk.b = b;
    }
  };
  const auto clause_has = [&c](int k, const Tag& lit) {
    const Clause& cl = c.clauses[static_cast<std::size_t>(k) - 1];
    const Literal want{lit.index, lit.kind == TagKind::neg_lit};
    return cl.first == want || cl.second == want;
  };

  for (std::size_t i = 0; i < f.members.size(); ++i) {
    for (std::size_t j = i + 1; j < f.members.size(); ++j) {
      const FamilyMember& u = f.members[i];
      const FamilyMember& v = f.members[j];
      const bool meets = mti_intersects(u.interval, v.interval);
      if (is_literal(u.tag) && is_literal(v.tag)) {
        if (u.tag.index != v.tag.index) {
          if (!meets) fail(0, u.tag, v.tag);
        } else if (u.tag.kind != v.tag.kind) {
          if (meets) fail(2, u.tag, v.tag);
        }
      } else if (u.tag.kind == TagKind::clause && v.tag.kind == TagKind::clause) {
        if (!meets) fail(1, u.tag, v.tag);
      } else if (u.tag.kind == TagKind::clause || v.tag.kind == TagKind::clause) {
        const FamilyMember& cl = u.tag.kind == TagKind::clause ? u : v;
        const FamilyMember& lit = u.tag.kind == TagKind::clause ? v : u;
        if (clause_has(cl.tag.index, lit.tag)) {
          if (meets) fail(3, cl.tag, lit.tag);
        } else {
          if (!meets) fail(3, cl.tag, lit.tag);
        }
      }
    }
  }
  return rep;
}

struct GadgetReport {
  int source_vars = 0;
  int source_clauses = 0;
  bool block_law_ok = true;  // each block satisfies 2 clauses iff its source clause holds, else 0
  bool profile_ok = true;    // originals occur exactly 12 times, dummies exactly 4
  bool optimum_ok = true;    // csat optimum == 2 * sat optimum
  int z_sat = 0;
  int z_csat = 0;
  std::string detail;

  bool ok() const { return block_law_ok && profile_ok && optimum_ok; }
};

// The satisfied count of one block depends only on the block's two source
// literals and its own dummy, so sweeping the joint values of those (at most
// three) variables covers every assignment of the full instance.
inline GadgetReport check_gadget(const SatInstance& s, int cap = 24) {
  GadgetReport rep;
  rep.source_vars = s.var_count;
  rep.source_clauses = s.clause_count();
  const auto [csat, map] = gadgetize(s);

  for (int k = 1; k <= s.clause_count() && rep.block_law_ok; ++k) {
    const Clause& src = s.clauses[static_cast<std::size_t>(k) - 1];
    std::vector<int> vars{src.first.var, src.second.var, map.dummies[static_cast<std::size_t>(k) - 1]};
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (std::uint32_t combo = 0; combo < (1u << vars.size()); ++combo) {
      std::map<int, bool> val;
      for (std::size_t b = 0; b < vars.size(); ++b) val[vars[b]] = (combo >> b) & 1u;
      const auto lit_holds = [&val](Literal l) { return val.at(l.var) != l.negated; };
      int block = 0;
      for (int idx : map.images[static_cast<std::size_t>(k) - 1]) {
        const Clause& cl = csat.clauses[static_cast<std::size_t>(idx) - 1];
        if (lit_holds(cl.first) && lit_holds(cl.second)) ++block;
      }
      const bool src_sat = lit_holds(src.first) || lit_holds(src.second);
      if (block != (src_sat ? 2 : 0)) {
        rep.block_law_ok = false;
        std::ostringstream os;
        os << "clause " << k << ": block satisfies " << block << " with source "
           << (src_sat ? "satisfied" : "unsatisfied");
        rep.detail = os.str();
        break;
      }
    }
  }

  // every source occurrence becomes exactly 4 slots; dummies get 4 each
  std::vector<int> occ(static_cast<std::size_t>(csat.var_count) + 1, 0);
  std::vector<int> src_occ(static_cast<std::size_t>(s.var_count) + 1, 0);
  for (const Clause& cl : csat.clauses) {
    ++occ[static_cast<std::size_t>(cl.first.var)];
    ++occ[static_cast<std::size_t>(cl.second.var)];
  }
  for (const Clause& cl : s.clauses) {
    ++src_occ[static_cast<std::size_t>(cl.first.var)];
    ++src_occ[static_cast<std::size_t>(cl.second.var)];
  }
  for (int v = 1; v <= s.var_count; ++v)
    if (occ[static_cast<std::size_t>(v)] != 4 * src_occ[static_cast<std::size_t>(v)])
      rep.profile_ok = false;
  for (int v = s.var_count + 1; v <= csat.var_count; ++v)
    if (occ[static_cast<std::size_t>(v)] != 4) rep.profile_ok = false;

  rep.z_sat = brute_force_opt(s, cap).best;
  rep.z_csat = brute_force_opt(csat, cap).best;
  rep.optimum_ok = rep.z_csat == 2 * rep.z_sat;
  return rep;
}

struct BetaRecord {
  int clique_size = 0;  // w
  int satisfied = 0;    // z of the recovered assignment
  bool bound_ok = false;  // z >= w - 12n, and the geometric and formula counts agree
  bool beta_ok = false;   // |z* - z| <= |w* - w|
};

struct LReductionReport {
  int var_count = 0;
  int clause_count = 0;
  int z_star = 0;
  int w_star = 0;
  bool identity_ok = false;  // w* == 12n + z*
  bool alpha_ok = false;     // w* <= 97 z*
  bool lower_ok = false;     // z* >= ceil(m/4)
  bool size_ok = false;      // n <= 2m
  bool engines_ok = true;    // enumeration agrees with branch and bound (when it ran)
  std::vector<BetaRecord> beta;

  bool ok() const {
    if (!(identity_ok && alpha_ok && lower_ok && size_ok && engines_ok)) return false;
    for (const BetaRecord& r : beta)
      if (!(r.bound_ok && r.beta_ok)) return false;
    return true;
  }
};

inline LReductionReport check_identity(const CsatInstance& c, int cap = 24) {
  LReductionReport rep;
  rep.var_count = c.var_count;
  rep.clause_count = c.clause_count();
  rep.z_star = brute_force_opt(c, cap).best;

  const TrackFamily f = construct_tracks(c);
  const IntersectionGraph g = collapse_twins(f);
  const CliqueSolution bb = max_clique_bb(g);
  rep.w_star = bb.weight;
  if (g.size() <= enum_vertex_cap)
    rep.engines_ok = max_clique_enum(g).weight == bb.weight;

  rep.identity_ok = rep.w_star == literal_copies * rep.var_count + rep.z_star;
  rep.alpha_ok = rep.w_star <= 97 * rep.z_star;
  rep.lower_ok = rep.z_star >= (rep.clause_count + 3) / 4;
  rep.size_ok = rep.var_count <= 2 * rep.clause_count;
  return rep;
}

inline BetaRecord check_beta(const CsatInstance& c, const TrackFamily& f, const CliqueWitness& k,
                             int z_star, int w_star) {
  BetaRecord r;
  r.clique_size = static_cast<int>(normalize_witness(k).size());
  const CliqueWitness canon = canonicalize_clique(f, k);
  const Extraction ex = clique_to_assignment(f, canon);
  const int z_eval = evaluate(c, ex.assignment);
  r.satisfied = z_eval;
  r.bound_ok = ex.satisfied == z_eval &&
               z_eval >= r.clique_size - literal_copies * c.var_count;
  r.beta_ok = std::abs(z_star - z_eval) <= std::abs(w_star - r.clique_size);
  return r;
}

enum class FaultKind { literal_twin_overlap, clause_self_overlap };

// Deliberately corrupts a family so the observation checks must fail:
// either the positive copies of a variable inherit the negative literal's
// track-3 interval, or a clause member inherits track 3 of one of its own
// literals.
inline TrackFamily inject_fault(TrackFamily f, FaultKind kind, int target) {
  if (kind == FaultKind::literal_twin_overlap) {
    if (target < 1 || target > f.var_count)
      throw std::invalid_argument("inject_fault: no variable " + std::to_string(target));
    bool touched = false;
    for (FamilyMember& m : f.members)
      if (m.tag.kind == TagKind::pos_lit && m.tag.index == target) {
        m.interval.tracks[2] = OpenInterval{-(target + 1), -target};
        touched = true;
      }
    if (!touched) throw std::invalid_argument("inject_fault: variable has no members");
    return f;
  }
  if (target < 1 || target > f.clause_count)
    throw std::invalid_argument("inject_fault: no clause " + std::to_string(target));
  FamilyMember* cl = nullptr;
  for (FamilyMember& m : f.members)
    if (m.tag == clause_tag(target)) cl = &m;
  if (cl == nullptr) throw std::invalid_argument("inject_fault: clause member missing");
  for (const FamilyMember& m : f.members)
    if (is_literal(m.tag) && !mti_intersects(m.interval, cl->interval)) {
      cl->interval.tracks[2] = m.interval.tracks[2];
      return f;
    }
  throw std::invalid_argument("inject_fault: clause already overlaps every literal");
}

inline std::string to_key_values(const LReductionReport& r) {
  std::ostringstream os;
  int beta_ok = 1;
  for (const BetaRecord& b : r.beta)
    if (!(b.bound_ok && b.beta_ok)) beta_ok = 0;
  os << "n=" << r.var_count << " m=" << r.clause_count << " z_star=" << r.z_star
     << " w_star=" << r.w_star << " identity_ok=" << r.identity_ok << " alpha_ok=" << r.alpha_ok
     << " lower_ok=" << r.lower_ok << " size_ok=" << r.size_ok << " engines_ok=" << r.engines_ok
     << " beta_records=" << r.beta.size() << " beta_ok=" << beta_ok;
  return os.str();
}

}  // namespace mti
