#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace mti {

// Open interval (lo, hi) with integer endpoints; nonempty iff lo < hi.
struct OpenInterval {
  int lo = 0;
  int hi = 0;

  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

inline bool nonempty(OpenInterval a) { return a.lo < a.hi; }

// Open intervals that merely touch at an endpoint do not intersect.
inline bool interval_intersects(OpenInterval a, OpenInterval b) {
  return std::max(a.lo, b.lo) < std::min(a.hi, b.hi);
}

// Union of one open interval per track. Intersection is same-track only:
// track t of one object is never compared against track u != t of another.
struct MultiTrackInterval {
  std::vector<OpenInterval> tracks;

  friend bool operator==(const MultiTrackInterval&, const MultiTrackInterval&) = default;
};

inline bool mti_intersects(const MultiTrackInterval& a, const MultiTrackInterval& b) {
  if (a.tracks.size() != b.tracks.size())
    throw std::invalid_argument("mti_intersects: track counts differ");
  for (std::size_t t = 0; t < a.tracks.size(); ++t)
    if (interval_intersects(a.tracks[t], b.tracks[t])) return true;
  return false;
}

}  // namespace mti
