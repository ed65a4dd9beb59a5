#pragma once

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mti/family.hpp"
#include "mti/formula.hpp"
#include "mti/graph.hpp"
#include "mti/reduction.hpp"

// Text formats. All are line oriented; lines whose first token is `c` are
// comments. Headers are `p <kind> ...` with kind one of sat, csat, tracks,
// edge. Serialization is deterministic byte for byte.

namespace mti {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

enum class FileKind { sat, csat, tracks, graph };

namespace detail {

struct Lines {
  std::vector<std::string> text;

  explicit Lines(const std::string& content) {
    std::string cur;
    for (char ch : content) {
      if (ch == '\n') {
        text.push_back(cur);
        cur.clear();
      } else if (ch != '\r') {
        cur += ch;
      }
    }
    if (!cur.empty()) text.push_back(cur);
  }
};

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

inline bool is_comment(const std::vector<std::string>& tok) {
  return !tok.empty() && tok[0] == "c";
}

inline int to_int(const std::string& s, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected integer, got '" + s + "'");
  }
  if (used != s.size()) throw ParseError(line, "expected integer, got '" + s + "'");
  return v;
}

}  // namespace detail

// Examines the header line to pick a parser; does not validate the body.
inline FileKind sniff_kind(const std::string& content) {
  detail::Lines lines(content);
  for (std::size_t i = 0; i < lines.text.size(); ++i) {
    const auto tok = detail::tokens(lines.text[i]);
    if (tok.empty() || detail::is_comment(tok)) continue;
    const int ln = static_cast<int>(i) + 1;
    if (tok[0] != "p" || tok.size() < 2) throw ParseError(ln, "expected header 'p <kind> ...'");
    if (tok[1] == "sat") return FileKind::sat;
    if (tok[1] == "csat") return FileKind::csat;
    if (tok[1] == "tracks") return FileKind::tracks;
    if (tok[1] == "edge") return FileKind::graph;
    throw ParseError(ln, "unknown format '" + tok[1] + "'");
  }
  throw ParseError(1, "empty input");
}

namespace detail {

template <class Instance>
Instance parse_formula(const std::string& content, const char* kind_word) {
  Lines lines(content);
  Instance out;
  bool got_header = false;
  int declared_m = 0;
  for (std::size_t i = 0; i < lines.text.size(); ++i) {
    const int ln = static_cast<int>(i) + 1;
    const auto tok = tokens(lines.text[i]);
    if (tok.empty() || is_comment(tok)) continue;
    if (!got_header) {
      if (tok.size() != 4 || tok[0] != "p")
        throw ParseError(ln, std::string("malformed header, expected 'p ") + kind_word + " N M'");
      if (tok[1] != kind_word)
        throw ParseError(ln, "expected kind '" + std::string(kind_word) + "', got '" + tok[1] + "'");
      out.var_count = to_int(tok[2], ln);
      declared_m = to_int(tok[3], ln);
      if (out.var_count < 0 || declared_m < 0) throw ParseError(ln, "negative size in header");
      got_header = true;
      continue;
    }
    if (tok.size() != 3) throw ParseError(ln, "clause line must be two nonzero literals then 0");
    const int a = to_int(tok[0], ln);
    const int b = to_int(tok[1], ln);
    const int z = to_int(tok[2], ln);
    if (a == 0 || b == 0 || z != 0)
      throw ParseError(ln, "clause line must be two nonzero literals then 0");
    for (int lit : {a, b})
      if (lit < -out.var_count || lit > out.var_count)
        throw ParseError(ln, "literal " + std::to_string(lit) + " out of range for " +
                                 std::to_string(out.var_count) + " variables");
    out.clauses.push_back(Clause{Literal{std::abs(a), a < 0}, Literal{std::abs(b), b < 0}});
  }
  if (!got_header) throw ParseError(1, "missing header");
  if (out.clause_count() != declared_m)
    throw ParseError(static_cast<int>(lines.text.size()),
                     "header declares " + std::to_string(declared_m) + " clauses, found " +
                         std::to_string(out.clause_count()));
  return out;
}

inline int literal_code(Literal l) { return l.negated ? -l.var : l.var; }

template <class Instance>
std::string serialize_formula(const Instance& f, const char* kind_word,
                              const GadgetMap* provenance) {
  std::ostringstream os;
  os << "p " << kind_word << " " << f.var_count << " " << f.clause_count() << "\n";
  if (provenance != nullptr) {
    for (int k = 1; k <= provenance->source_clauses; ++k) {
      const auto& img = provenance->images[static_cast<std::size_t>(k) - 1];
      os << "c gadget " << k << " -> " << img.front() << ".." << img.back() << " y="
         << provenance->dummies[static_cast<std::size_t>(k) - 1] << "\n";
    }
  }
  for (const Clause& cl : f.clauses)
    os << literal_code(cl.first) << " " << literal_code(cl.second) << " 0\n";
  return os.str();
}

}  // namespace detail

inline CsatInstance parse_csat(const std::string& content) {
  return detail::parse_formula<CsatInstance>(content, "csat");
}

inline SatInstance parse_sat(const std::string& content) {
  return detail::parse_formula<SatInstance>(content, "sat");
}

inline std::string serialize_csat(const CsatInstance& f, const GadgetMap* provenance = nullptr) {
  return detail::serialize_formula(f, "csat", provenance);
}

inline std::string serialize_sat(const SatInstance& f) {
  return detail::serialize_formula(f, "sat", nullptr);
}

// Single line of N characters over {0,1}, variable 1 first.
inline Assignment parse_assignment(const std::string& content) {
  detail::Lines lines(content);
  for (std::size_t i = 0; i < lines.text.size(); ++i) {
    const int ln = static_cast<int>(i) + 1;
    const auto tok = detail::tokens(lines.text[i]);
    if (tok.empty() || detail::is_comment(tok)) continue;
    if (tok.size() != 1) throw ParseError(ln, "assignment must be a single 0/1 word");
    std::vector<bool> values;
    values.reserve(tok[0].size());
    for (char ch : tok[0]) {
      if (ch != '0' && ch != '1') throw ParseError(ln, "assignment characters must be 0 or 1");
      values.push_back(ch == '1');
    }
    return Assignment(std::move(values));
  }
  throw ParseError(1, "empty input");
}

inline std::string serialize_assignment(const Assignment& a) { return a.to_string() + "\n"; }

// `p tracks N M`, then one member per line: tag and six endpoints
// (track 1 lo hi, track 2 lo hi, track 3 lo hi).
inline TrackFamily parse_tracks(const std::string& content) {
  detail::Lines lines(content);
  TrackFamily f;
  bool got_header = false;
  for (std::size_t i = 0; i < lines.text.size(); ++i) {
    const int ln = static_cast<int>(i) + 1;
    const auto tok = detail::tokens(lines.text[i]);
    if (tok.empty() || detail::is_comment(tok)) continue;
    if (!got_header) {
      if (tok.size() != 4 || tok[0] != "p" || tok[1] != "tracks")
        throw ParseError(ln, "malformed header, expected 'p tracks N M'");
      f.var_count = detail::to_int(tok[2], ln);
      f.clause_count = detail::to_int(tok[3], ln);
      if (f.var_count < 0 || f.clause_count < 0) throw ParseError(ln, "negative size in header");
      got_header = true;
      continue;
    }
    if (tok.size() != 7) throw ParseError(ln, "member line must be a tag and six endpoints");
    Tag tag;
    try {
      tag = Tag::parse(tok[0]);
    } catch (const std::exception& e) {
      throw ParseError(ln, e.what());
    }
    MultiTrackInterval iv;
    for (int t = 0; t < 3; ++t) {
      const OpenInterval seg{detail::to_int(tok[static_cast<std::size_t>(1 + 2 * t)], ln),
                             detail::to_int(tok[static_cast<std::size_t>(2 + 2 * t)], ln)};
      if (!nonempty(seg))
        throw ParseError(ln, "track " + std::to_string(t + 1) + " interval is empty");
      iv.tracks.push_back(seg);
    }
    if (f.find(tag) != nullptr) throw ParseError(ln, "duplicate tag " + tag.to_string());
    f.members.push_back(FamilyMember{tag, std::move(iv)});
  }
  if (!got_header) throw ParseError(1, "missing header");
  return f;
}

inline std::string serialize_tracks(const TrackFamily& f) {
  std::ostringstream os;
  os << "p tracks " << f.var_count << " " << f.clause_count << "\n";
  for (const FamilyMember& m : f.members) {
    os << m.tag.to_string();
    for (const OpenInterval& seg : m.interval.tracks) os << " " << seg.lo << " " << seg.hi;
    os << "\n";
  }
  return os.str();
}

// DIMACS `p edge V E` with `n <v> <weight>` extension lines; `c tag <v>
// <tag>` comments carry vertex identity and are optional on input.
inline IntersectionGraph parse_graph(const std::string& content) {
  detail::Lines lines(content);
  int declared_e = 0;
  bool got_header = false;
  IntersectionGraph g;
  int edges = 0;
  for (std::size_t i = 0; i < lines.text.size(); ++i) {
    const int ln = static_cast<int>(i) + 1;
    const auto tok = detail::tokens(lines.text[i]);
    if (tok.empty()) continue;
    if (detail::is_comment(tok)) {
      if (tok.size() == 4 && tok[1] == "tag") {
        if (!got_header) throw ParseError(ln, "tag annotation before header");
        const int v = detail::to_int(tok[2], ln);
        if (v < 1 || v > g.size()) throw ParseError(ln, "tag annotation for unknown vertex");
        try {
          g.vertices[static_cast<std::size_t>(v) - 1].tag = Tag::parse(tok[3]);
        } catch (const std::exception& e) {
          throw ParseError(ln, e.what());
        }
      }
      continue;
    }
    if (!got_header) {
      if (tok.size() != 4 || tok[0] != "p" || tok[1] != "edge")
        throw ParseError(ln, "malformed header, expected 'p edge V E'");
      const int v = detail::to_int(tok[2], ln);
      declared_e = detail::to_int(tok[3], ln);
      if (v < 0 || declared_e < 0) throw ParseError(ln, "negative size in header");
      std::vector<GraphVertex> vs;
      vs.reserve(static_cast<std::size_t>(v));
      for (int k = 1; k <= v; ++k) vs.push_back(GraphVertex{vertex_tag(k), 1});
      g = make_graph(std::move(vs));
      got_header = true;
      continue;
    }
    if (tok[0] == "n") {
      if (tok.size() != 3) throw ParseError(ln, "weight line must be 'n <v> <w>'");
      const int v = detail::to_int(tok[1], ln);
      const int w = detail::to_int(tok[2], ln);
      if (v < 1 || v > g.size()) throw ParseError(ln, "weight for unknown vertex " + tok[1]);
      if (w < 1) throw ParseError(ln, "vertex weight must be positive");
      g.vertices[static_cast<std::size_t>(v) - 1].weight = w;
      continue;
    }
    if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(ln, "edge line must be 'e <u> <v>'");
      const int u = detail::to_int(tok[1], ln);
      const int v = detail::to_int(tok[2], ln);
      if (u < 1 || u > g.size() || v < 1 || v > g.size())
        throw ParseError(ln, "edge endpoint out of range");
      if (u == v) throw ParseError(ln, "self loop on vertex " + tok[1]);
      if (!g.adjacent(u - 1, v - 1)) {
        g.add_edge(u - 1, v - 1);
        ++edges;
      }
      continue;
    }
    throw ParseError(ln, "unrecognized line '" + tok[0] + " ...'");
  }
  if (!got_header) throw ParseError(1, "missing header");
  if (edges != declared_e)
    throw ParseError(static_cast<int>(lines.text.size()),
                     "header declares " + std::to_string(declared_e) + " edges, found " +
                         std::to_string(edges));
  return g;
}

inline std::string serialize_graph(const IntersectionGraph& g) {
  std::ostringstream os;
  os << "p edge " << g.size() << " " << g.edge_count() << "\n";
  for (int v = 1; v <= g.size(); ++v)
    os << "c tag " << v << " " << g.vertices[static_cast<std::size_t>(v) - 1].tag.to_string() << "\n";
  for (int v = 1; v <= g.size(); ++v)
    os << "n " << v << " " << g.vertices[static_cast<std::size_t>(v) - 1].weight << "\n";
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v)) os << "e " << u + 1 << " " << v + 1 << "\n";
  return os.str();
}

}  // namespace mti
