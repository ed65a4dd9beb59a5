#pragma once

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mti/family.hpp"

// Draws a 3-track family as three stacked lanes, one labeled row per member
// per track. Text mode marks open endpoints with '(' and ')' (exclusive);
// SVG mode emits one rect per drawn segment.

namespace mti {

struct RenderSpec {
  enum class Format { text, svg };
  Format format = Format::text;
  int scale = 40;               // svg pixels per unit
  bool collapse_copies = true;  // one row per literal, like the duplicate-free figure style
};

namespace detail {

inline std::vector<FamilyMember> drawn_members(const TrackFamily& f, bool collapse) {
  std::vector<FamilyMember> out;
  for (const FamilyMember& m : f.members) {
    if (!collapse || !is_literal(m.tag) || m.tag.copy == 0) {
      out.push_back(m);
      continue;
    }
    const Tag cls{m.tag.kind, m.tag.index, 0};
    bool seen = false;
    for (const FamilyMember& d : out)
      if (d.tag == cls) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(FamilyMember{cls, m.interval});
  }
  return out;
}

inline int axis_half_range(const TrackFamily& f, const std::vector<FamilyMember>& drawn) {
  int a = std::max(1, f.var_count + 1);
  for (const FamilyMember& m : drawn)
    for (const OpenInterval& seg : m.interval.tracks)
      a = std::max({a, std::abs(seg.lo), std::abs(seg.hi)});
  return a;
}

constexpr int text_unit_width = 2;

inline std::string render_text(const TrackFamily& f, const std::vector<FamilyMember>& drawn) {
  const int half = axis_half_range(f, drawn);
  const auto col = [half](int p) { return (p + half) * text_unit_width; };
  const int width = col(half) + 1;

  std::size_t labelw = 2;
  for (const FamilyMember& m : drawn) labelw = std::max(labelw, m.tag.to_string().size());
  labelw += 1;

  const auto place = [](std::string& row, std::size_t at, const std::string& s) {
    if (row.size() < at + s.size()) row.resize(at + s.size(), ' ');
    for (std::size_t i = 0; i < s.size(); ++i) row[at + i] = s[i];
  };
  // axis labels keep one blank column of separation; crowded ones are dropped
  const auto place_label = [&place](std::string& row, std::size_t at, const std::string& s) {
    const std::size_t from = at == 0 ? 0 : at - 1;
    for (std::size_t i = from; i <= at + s.size(); ++i)
      if (i < row.size() && row[i] != ' ') return;
    place(row, at, s);
  };
  const auto rtrim = [](std::string row) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    return row;
  };

  std::ostringstream os;
  for (int t = 0; t < 3; ++t) {
    if (t > 0) os << "\n";
    os << "track " << t + 1 << "\n";

    std::string numbers(labelw, ' ');
    place_label(numbers, labelw + static_cast<std::size_t>(col(-half)), std::to_string(-half));
    place_label(numbers, labelw + static_cast<std::size_t>(col(0)), "0");
    place_label(numbers, labelw + static_cast<std::size_t>(col(half)), std::to_string(half));
    os << rtrim(numbers) << "\n";

    std::string ticks(labelw + static_cast<std::size_t>(width), ' ');
    for (int p = -half; p <= half; ++p) {
      ticks[labelw + static_cast<std::size_t>(col(p))] = '+';
      if (p < half)
        for (int x = col(p) + 1; x < col(p + 1); ++x) ticks[labelw + static_cast<std::size_t>(x)] = '-';
    }
    os << ticks << "\n";

    for (const FamilyMember& m : drawn) {
      const OpenInterval seg = m.interval.tracks[static_cast<std::size_t>(t)];
      std::string row(labelw, ' ');
      place(row, 0, m.tag.to_string());
      const std::size_t from = labelw + static_cast<std::size_t>(col(seg.lo));
      const std::size_t to = labelw + static_cast<std::size_t>(col(seg.hi));
      if (row.size() < to + 1) row.resize(to + 1, ' ');
      row[from] = '(';
      for (std::size_t x = from + 1; x < to; ++x) row[x] = '-';
      row[to] = ')';
      os << row << "\n";
    }
  }
  return os.str();
}

inline std::string render_svg(const TrackFamily& f, const std::vector<FamilyMember>& drawn,
                              int scale) {
  const int half = axis_half_range(f, drawn);
  std::size_t taglen = 2;
  for (const FamilyMember& m : drawn) taglen = std::max(taglen, m.tag.to_string().size());
  const int margin_left = 16 + 8 * static_cast<int>(taglen);
  const int row_h = 16;
  const int track_header_h = 34;
  const auto x_of = [half, scale, margin_left](int p) { return margin_left + (p + half) * scale; };

  const int rows = static_cast<int>(drawn.size());
  const int track_block_h = track_header_h + rows * row_h + 16;
  const int width = x_of(half) + 24;
  const int height = 12 + 3 * track_block_h;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"monospace\" font-size=\"12\">\n";
  for (int t = 0; t < 3; ++t) {
    const int top = 12 + t * track_block_h;
    os << "<text x=\"" << margin_left << "\" y=\"" << top + 12 << "\">track " << t + 1
       << "</text>\n";
    const int axis_y = top + 24;
    os << "<line class=\"axis\" x1=\"" << x_of(-half) << "\" y1=\"" << axis_y << "\" x2=\""
       << x_of(half) << "\" y2=\"" << axis_y << "\" stroke=\"black\"/>\n";
    for (int p = -half; p <= half; ++p)
      os << "<line class=\"tick\" x1=\"" << x_of(p) << "\" y1=\"" << axis_y - 3 << "\" x2=\""
         << x_of(p) << "\" y2=\"" << axis_y + 3 << "\" stroke=\"black\"/>\n";
    for (int p : {-half, 0, half})
      os << "<text x=\"" << x_of(p) - 4 << "\" y=\"" << axis_y - 6 << "\">" << p << "</text>\n";
    int y = axis_y + 10;
    for (const FamilyMember& m : drawn) {
      const OpenInterval seg = m.interval.tracks[static_cast<std::size_t>(t)];
      os << "<text x=\"8\" y=\"" << y + 9 << "\">" << m.tag.to_string() << "</text>\n";
      os << "<rect class=\"seg\" x=\"" << x_of(seg.lo) << "\" y=\"" << y << "\" width=\""
         << (seg.hi - seg.lo) * scale << "\" height=\"10\" fill=\"steelblue\"/>\n";
      y += row_h;
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace detail

inline std::string render_tracks(const TrackFamily& f, const RenderSpec& spec = {}) {
  if (spec.scale <= 0) throw std::invalid_argument("render_tracks: scale must be positive");
  for (const FamilyMember& m : f.members)
    if (m.interval.tracks.size() != 3)
      throw std::invalid_argument("render_tracks: member " + m.tag.to_string() +
                                  " does not have 3 tracks");
  const std::vector<FamilyMember> drawn = detail::drawn_members(f, spec.collapse_copies);
  if (spec.format == RenderSpec::Format::text) return detail::render_text(f, drawn);
  return detail::render_svg(f, drawn, spec.scale);
}

}  // namespace mti
