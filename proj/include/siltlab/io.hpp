// JSON encodings and DOT writers for the CLI-facing formats.
#pragma once

#include <json.hpp>
#include <sstream>
#include <string>

#include "siltlab/orbit.hpp"

namespace siltlab {

using nlohmann::json;

inline json to_json(const QuiverA& q) {
  json j;
  j["n"] = q.n;
  json o = json::array();
  for (Dir d : q.orientation) o.push_back(d == Dir::Forward ? "F" : "B");
  j["orientation"] = o;
  return j;
}

inline QuiverA quiver_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<Dir> orient;
  for (const auto& s : j.at("orientation"))
    orient.push_back(s.get<std::string>() == "F" ? Dir::Forward : Dir::Backward);
  return QuiverA(n, std::move(orient));
}

inline json to_json(const IntervalModule& m) { return json{{"lo", m.lo}, {"hi", m.hi}}; }

inline json to_json(const DerivedCategory& dc, const DerivedObject& x) {
  json j{{"lo", x.m.lo}, {"hi", x.m.hi}, {"shift", x.shift}};
  if (dc.n() == 2) j["label"] = dc.a2_label(x);
  return j;
}

inline DerivedObject derived_from_json(const json& j) {
  return {{j.at("lo").get<int>(), j.at("hi").get<int>()}, j.at("shift").get<int>()};
}

inline json to_json(const Section& s) { return json{{"offsets", s.offsets}}; }

inline Section section_from_json(const json& j) {
  return Section{j.at("offsets").get<std::vector<int>>()};
}

inline json to_json(const DerivedCategory& dc, const SiltingCandidate& p) {
  json arr = json::array();
  for (const DerivedObject& x : p.summands) arr.push_back(to_json(dc, x));
  return arr;
}

inline json to_json(const DerivedCategory& dc, const HasseQuiver& h) {
  json j;
  j["nodes"] = json::array();
  for (const SiltingCandidate& nd : h.nodes) j["nodes"].push_back(to_json(dc, nd));
  j["arrows"] = json::array();
  for (const auto& [a, b] : h.arrows) j["arrows"].push_back(json::array({a, b}));
  return j;
}

inline json to_json(const DerivedCategory& dc, const AmiotReport& r) {
  json j;
  j["category"] = r.category;
  j["ind_count"] = r.ind_count;
  j["silt_in_F"] = json::array();
  for (const SiltingCandidate& p : r.silt_in_domain) j["silt_in_F"].push_back(to_json(dc, p));
  j["ctilt"] = json::array();
  for (const auto& u : r.ctilt) {
    json arr = json::array();
    for (const DerivedObject& x : u) arr.push_back(to_json(dc, x));
    j["ctilt"].push_back(arr);
  }
  j["bijection"] = r.bijection;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

// ---- display labels ----

inline std::string object_label(const DerivedCategory& dc, const DerivedObject& x) {
  if (dc.n() == 2) return std::to_string(dc.a2_label(x));
  std::ostringstream s;
  s << "[" << x.m.lo << "," << x.m.hi << "]";
  if (x.shift != 0) s << "[" << x.shift << "]";
  return s.str();
}

inline std::string silting_label(const DerivedCategory& dc, const SiltingCandidate& p) {
  std::vector<DerivedObject> xs = p.summands;
  if (dc.n() == 2)  // ascending Z-labels read better for A_2
    std::sort(xs.begin(), xs.end(), [&](const DerivedObject& a, const DerivedObject& b) {
      return dc.a2_label(a) < dc.a2_label(b);
    });
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += "+";
    s += object_label(dc, xs[i]);
  }
  return s;
}

// ---- DOT ----

inline std::string dot_ar_quiver(const ModuleCategory& mc) {
  std::ostringstream out;
  out << "digraph ar_quiver {\n  rankdir=LR;\n";
  auto id = [](const IntervalModule& m) {
    return "m" + std::to_string(m.lo) + "_" + std::to_string(m.hi);
  };
  for (const IntervalModule& m : mc.ar().vertices)
    out << "  " << id(m) << " [label=\"[" << m.lo << "," << m.hi << "]\"];\n";
  for (const auto& [a, b] : mc.ar().arrows) out << "  " << id(a) << " -> " << id(b) << ";\n";
  for (const auto& [znext, z] : mc.ar().translate)
    out << "  " << id(znext) << " -> " << id(z) << " [style=dashed, color=gray, label=\"tau\"];\n";
  out << "}\n";
  return out.str();
}

// Hasse quiver laid out in rows by distance from the maximal elements.
inline std::string dot_hasse(const DerivedCategory& dc, const HasseQuiver& h) {
  int m = (int)h.nodes.size();
  std::vector<std::vector<int>> in(m);
  for (const auto& [a, b] : h.arrows) in[b].push_back(a);
  std::vector<int> depth(m, 0);
  bool changed = true;  // longest path from a source; the graph is acyclic
  while (changed) {
    changed = false;
    for (const auto& [a, b] : h.arrows)
      if (depth[b] < depth[a] + 1) { depth[b] = depth[a] + 1; changed = true; }
  }
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=TB;\n";
  int maxd = 0;
  for (int d : depth) maxd = std::max(maxd, d);
  for (int d = 0; d <= maxd; ++d) {
    out << "  { rank=same;";
    for (int i = 0; i < m; ++i)
      if (depth[i] == d) out << " n" << i << ";";
    out << " }\n";
  }
  for (int i = 0; i < m; ++i)
    out << "  n" << i << " [label=\"" << silting_label(dc, h.nodes[i]) << "\"];\n";
  for (const auto& [a, b] : h.arrows) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string dot_exchange(const DerivedCategory& dc,
                                const std::vector<std::vector<DerivedObject>>& ctilt) {
  std::ostringstream out;
  out << "graph exchange {\n";
  auto label = [&](const std::vector<DerivedObject>& u) {
    std::string s;
    for (size_t i = 0; i < u.size(); ++i) {
      if (i) s += "+";
      s += object_label(dc, u[i]);
    }
    return s;
  };
  for (size_t i = 0; i < ctilt.size(); ++i)
    out << "  c" << i << " [label=\"" << label(ctilt[i]) << "\"];\n";
  for (size_t i = 0; i < ctilt.size(); ++i)
    for (size_t j = i + 1; j < ctilt.size(); ++j) {
      int shared = 0;
      for (const DerivedObject& x : ctilt[i])
        for (const DerivedObject& y : ctilt[j])
          if (x == y) ++shared;
      if (ctilt[i].size() == ctilt[j].size() && shared + 1 == (int)ctilt[i].size())
        out << "  c" << i << " -- c" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

// A window of the ZQ chart with its mesh arrows.
inline std::string dot_chart(const DerivedCategory& dc, int shift_lo, int shift_hi) {
  std::ostringstream out;
  out << "digraph chart {\n  rankdir=LR;\n";
  std::vector<DerivedObject> objs = dc.objects_with_shift(shift_lo, shift_hi);
  auto id = [&](const DerivedObject& x) {
    ChartCoord c = dc.chart_label(x);
    return "z" + std::to_string(c.row) + "_" +
           (c.step < 0 ? "m" + std::to_string(-c.step) : std::to_string(c.step));
  };
  for (const DerivedObject& x : objs)
    out << "  " << id(x) << " [label=\"" << object_label(dc, x) << "\"];\n";
  for (const DerivedObject& x : objs) {
    DerivedObject y = dc.tau_inv(x);
    // mesh arrows x -> w for each AR arrow; read off via column adjacency
    for (const DerivedObject& w : objs)
      if (dc.hom(x, w) > 0 && dc.col(w) == dc.col(x) + 1 &&
          std::abs(dc.chart_label(w).row - dc.chart_label(x).row) == 1)
        out << "  " << id(x) << " -> " << id(w) << ";\n";
    (void)y;
  }
  out << "}\n";
  return out.str();
}

}  // namespace siltlab
