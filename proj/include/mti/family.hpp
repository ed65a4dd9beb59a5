#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mti/interval.hpp"

namespace mti {

enum class TagKind : std::uint8_t { pos_lit = 0, neg_lit = 1, clause = 2, vertex = 3 };

// Identity of a family member or graph vertex. Text forms:
//   +i.c  copy c of the positive-literal interval of x_i  (copy 0: collapsed class, "+i")
//   -i.c  copy c of the negative-literal interval of x_i
//   k#    the single interval of clause k
//   vK    anonymous graph vertex (DIMACS input without tag annotations)
// The default ordering (kind, index, copy) matches construction order:
// positive literals, negative literals, clauses.
struct Tag {
  TagKind kind = TagKind::vertex;
  int index = 0;
  int copy = 0;

  friend auto operator<=>(const Tag&, const Tag&) = default;

  std::string to_string() const {
    switch (kind) {
      case TagKind::pos_lit:
      case TagKind::neg_lit: {
        std::string s = (kind == TagKind::pos_lit ? "+" : "-") + std::to_string(index);
        if (copy != 0) s += "." + std::to_string(copy);
        return s;
      }
      case TagKind::clause:
        return std::to_string(index) + "#";
      case TagKind::vertex:
        return "v" + std::to_string(index);
    }
    return "?";
  }

  static Tag parse(const std::string& s) {
    const auto bad = [&s]() -> Tag {
      throw std::invalid_argument("bad tag '" + s + "'");
    };
    if (s.size() < 2) return bad();
    const auto num = [&s, &bad](std::size_t from, std::size_t to) {
      if (from >= to) bad();
      int value = 0;
      for (std::size_t i = from; i < to; ++i) {
        if (s[i] < '0' || s[i] > '9') bad();
        value = value * 10 + (s[i] - '0');
      }
      return value;
    };
    if (s[0] == '+' || s[0] == '-') {
      const TagKind k = s[0] == '+' ? TagKind::pos_lit : TagKind::neg_lit;
      const std::size_t dot = s.find('.');
      if (dot == std::string::npos) return Tag{k, num(1, s.size()), 0};
      const int copy = num(dot + 1, s.size());
      if (copy < 1) bad();
      return Tag{k, num(1, dot), copy};
    }
    if (s.back() == '#') return Tag{TagKind::clause, num(0, s.size() - 1), 0};
    if (s[0] == 'v') return Tag{TagKind::vertex, num(1, s.size()), 0};
    return bad();
  }
};

inline Tag pos_lit_tag(int var, int copy = 0) { return Tag{TagKind::pos_lit, var, copy}; }
inline Tag neg_lit_tag(int var, int copy = 0) { return Tag{TagKind::neg_lit, var, copy}; }
inline Tag clause_tag(int k) { return Tag{TagKind::clause, k, 0}; }
inline Tag vertex_tag(int k) { return Tag{TagKind::vertex, k, 0}; }

inline bool is_literal(const Tag& t) {
  return t.kind == TagKind::pos_lit || t.kind == TagKind::neg_lit;
}

struct FamilyMember {
  Tag tag;
  MultiTrackInterval interval;

  friend bool operator==(const FamilyMember&, const FamilyMember&) = default;
};

struct TrackFamily {
  int var_count = 0;
  int clause_count = 0;
  std::vector<FamilyMember> members;

  const FamilyMember* find(const Tag& t) const {
    for (const FamilyMember& m : members)
      if (m.tag == t) return &m;
    return nullptr;
  }

  friend bool operator==(const TrackFamily&, const TrackFamily&) = default;
};

}  // namespace mti
