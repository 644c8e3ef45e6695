// The section-to-braid map F: BFS over the reflection graph from the initial
// section, accumulating b_i^{-eps} per reflection.  Re-visits must produce the
// same normal form; that equality is asserted, not assumed.
#pragma once

#include <map>
#include <stdexcept>

#include "siltlab/braid.hpp"
#include "siltlab/section.hpp"

namespace siltlab {

struct SectionBraidBall {
  std::map<Section, BraidElement> value;  // F on the explored ball
  std::map<Section, int> depth;
};

inline SectionBraidBall section_braid_ball(const DerivedCategory& dc, const BraidGroup& bg,
                                           int depth) {
  if (bg.rank() != dc.n())
    throw std::invalid_argument("section_braid_ball: braid group rank must match quiver");
  SectionBraidBall ball;
  Section init = initial_section(dc);
  ball.value[init] = bg.identity_element();
  ball.depth[init] = 0;
  std::vector<Section> frontier{init};
  for (int d = 1; d <= depth; ++d) {
    std::vector<Section> next;
    for (const Section& s : frontier) {
      const BraidElement fs = ball.value.at(s);
      for (const SectionMove& mv : section_neighbors(dc, s)) {
        BraidElement fv = bg.multiply(bg.generator(mv.vertex, -mv.sign), fs);
        auto it = ball.value.find(mv.target);
        if (it == ball.value.end()) {
          ball.value.emplace(mv.target, std::move(fv));
          ball.depth.emplace(mv.target, d);
          next.push_back(mv.target);
        } else if (!(it->second == fv)) {
          throw std::logic_error("section_braid_ball: two reflection paths disagree");
        }
      }
    }
    frontier = std::move(next);
  }
  return ball;
}

inline BraidElement section_to_braid(const DerivedCategory& dc, const BraidGroup& bg,
                                     const Section& s, int depth) {
  SectionBraidBall ball = section_braid_ball(dc, bg, depth);
  auto it = ball.value.find(s);
  if (it == ball.value.end())
    throw std::runtime_error("section_to_braid: section unreachable at depth " +
                             std::to_string(depth));
  return it->second;
}

}  // namespace siltlab
