// Sections (slices) of the translation quiver ZQ, stored as one integer offset
// per chart row.  The all-zero section is the projective slice; reflecting a
// sink lowers its offset by 1, so the composite of all sink reflections in an
// admissible order is tau.
#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "siltlab/derived.hpp"

namespace siltlab {

struct Section {
  std::vector<int> offsets;  // offsets[r-1] for chart row r

  int offset(int v) const { return offsets[v - 1]; }
  auto operator<=>(const Section&) const = default;
};

inline Section initial_section(const DerivedCategory& dc) {
  return Section{std::vector<int>(dc.n(), 0)};
}

namespace detail {
// Relative alignment of adjacent rows r, r+1.  Returns the row whose offset
// is the larger one when the slice bends: the valid patterns per row edge are
// m_hi - m_lo in {0, 1}.  Which row plays "hi" depends on the orientation of
// the underlying diagram edge n-r.
inline int hi_row(const DerivedCategory& dc, int r) {
  int edge = dc.n() - r;  // diagram edge between vertices edge, edge+1
  return dc.quiver().orientation[edge - 1] == Dir::Forward ? r : r + 1;
}
}  // namespace detail

inline bool section_is_valid(const DerivedCategory& dc, const Section& s) {
  if ((int)s.offsets.size() != dc.n()) return false;
  for (int r = 1; r < dc.n(); ++r) {
    int hi = detail::hi_row(dc, r);
    int lo = (hi == r) ? r + 1 : r;
    int d = s.offset(hi) - s.offset(lo);
    if (d != 0 && d != 1) return false;
  }
  return true;
}

// The quiver induced on a section: for each adjacent row pair there is exactly
// one arrow; hi -> lo when the offsets agree, lo -> hi when hi is one ahead.
inline std::vector<Arrow> section_quiver(const DerivedCategory& dc, const Section& s) {
  std::vector<Arrow> out;
  for (int r = 1; r < dc.n(); ++r) {
    int hi = detail::hi_row(dc, r);
    int lo = (hi == r) ? r + 1 : r;
    if (s.offset(hi) == s.offset(lo))
      out.push_back({hi, lo});
    else
      out.push_back({lo, hi});
  }
  return out;
}

inline bool section_is_sink(const DerivedCategory& dc, const Section& s, int v) {
  for (const Arrow& a : section_quiver(dc, s))
    if (a.src == v) return false;
  return true;
}

inline bool section_is_source(const DerivedCategory& dc, const Section& s, int v) {
  for (const Arrow& a : section_quiver(dc, s))
    if (a.dst == v) return false;
  return true;
}

// Reflection at a sink replaces the object by its tau-translate (offset - 1,
// sign +1); at a source by the inverse translate (offset + 1, sign -1).
inline std::pair<Section, int> reflect_section(const DerivedCategory& dc, const Section& s,
                                               int v) {
  if (v < 1 || v > dc.n()) throw std::invalid_argument("reflect_section: vertex out of range");
  if (!section_is_valid(dc, s)) throw std::invalid_argument("reflect_section: invalid section");
  Section t = s;
  if (section_is_sink(dc, s, v)) {
    t.offsets[v - 1] -= 1;
    return {t, +1};
  }
  if (section_is_source(dc, s, v)) {
    t.offsets[v - 1] += 1;
    return {t, -1};
  }
  throw std::invalid_argument("reflect_section: vertex is neither sink nor source");
}

struct SectionMove {
  Section target;
  int vertex = 0;
  int sign = 0;  // +1 sink reflection, -1 source reflection
};

// All legal reflections.  For A_1 the unique vertex is both a sink and a
// source, and both moves are emitted.
inline std::vector<SectionMove> section_neighbors(const DerivedCategory& dc, const Section& s) {
  std::vector<SectionMove> out;
  for (int v = 1; v <= dc.n(); ++v) {
    if (section_is_sink(dc, s, v)) {
      Section t = s;
      t.offsets[v - 1] -= 1;
      out.push_back({t, v, +1});
    }
    if (section_is_source(dc, s, v)) {
      Section t = s;
      t.offsets[v - 1] += 1;
      out.push_back({t, v, -1});
    }
  }
  return out;
}

inline std::vector<DerivedObject> section_objects(const DerivedCategory& dc, const Section& s) {
  if (!section_is_valid(dc, s)) throw std::invalid_argument("section_objects: invalid section");
  std::vector<DerivedObject> out;
  for (int v = 1; v <= dc.n(); ++v) out.push_back(dc.object_at({v, s.offset(v)}));
  return out;
}

// Reflection ball around the initial section.  Every visited node is checked
// to be a valid slice; used to probe connectivity of the reflection graph.
inline std::map<Section, int> explore_sections(const DerivedCategory& dc, int depth) {
  std::map<Section, int> dist;
  std::vector<Section> frontier{initial_section(dc)};
  dist[frontier[0]] = 0;
  for (int d = 1; d <= depth; ++d) {
    std::vector<Section> next;
    for (const Section& s : frontier)
      for (const SectionMove& mv : section_neighbors(dc, s)) {
        if (!section_is_valid(dc, mv.target))
          throw std::logic_error("explore_sections: reflection left the slice condition");
        if (dist.emplace(mv.target, d).second) next.push_back(mv.target);
      }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace siltlab
