#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "siltlab/braid_map.hpp"
#include "siltlab/silting.hpp"

using namespace siltlab;

TEST_CASE("F maps the initial section to the identity") {
  for (const std::string& name : {"a2", "a3:FB"}) {
    DerivedCategory dc(parse_quiver(name));
    BraidGroup bg(dc.n());
    CHECK(section_to_braid(dc, bg, initial_section(dc), 4).is_identity());
  }
}

TEST_CASE("the A2 braid image is the double chain") {
  DerivedCategory dc(parse_quiver("a2"));
  BraidGroup bg(2);
  SectionBraidBall ball = section_braid_ball(dc, bg, 9);
  BraidElement b1 = bg.generator(1);
  BraidElement b2b1 = bg.multiply(bg.generator(2), bg.generator(1));
  std::set<BraidElement> expect;
  for (int m = -5; m <= 5; ++m) {
    expect.insert(bg.power(b2b1, m));
    expect.insert(bg.multiply(b1, bg.power(b2b1, m)));
  }
  for (const auto& [s, v] : ball.value) CHECK(expect.count(v) == 1);
  // and the one-step values are pinned explicitly
  Section right{{1, 0}};  // section {2,3}
  CHECK(section_to_braid(dc, bg, right, 3) == b1);
  Section left{{0, -1}};  // section {0,1}
  CHECK(section_to_braid(dc, bg, left, 3) == bg.generator(2, -1));
  Section two{{1, 1}};  // section {3,4}
  CHECK(section_to_braid(dc, bg, two, 3) == b2b1);
}

TEST_CASE("F is injective on the explored ball") {
  for (const std::string& name : {"a2", "a3", "a3:BF"}) {
    DerivedCategory dc(parse_quiver(name));
    BraidGroup bg(dc.n());
    SectionBraidBall ball = section_braid_ball(dc, bg, 6);
    std::set<BraidElement> values;
    for (const auto& [s, v] : ball.value) values.insert(v);
    CHECK(values.size() == ball.value.size());
  }
}

TEST_CASE("well-definedness: revisits never disagree") {
  // section_braid_ball throws on any disagreement; depth 8 on A2 and 6 on A3
  DerivedCategory a2(parse_quiver("a2"));
  BraidGroup b2(2);
  CHECK(section_braid_ball(a2, b2, 8).value.size() == 17);
  for (const std::string& name : {"a3:FF", "a3:FB", "a3:BF", "a3:BB"}) {
    DerivedCategory dc(parse_quiver(name));
    BraidGroup bg(3);
    CHECK_NOTHROW(section_braid_ball(dc, bg, 6));
  }
}

TEST_CASE("F reverses the silting order on covers") {
  for (const std::string& name : {"a2", "a3:FB"}) {
    DerivedCategory dc(parse_quiver(name));
    BraidGroup bg(dc.n());
    SectionBraidBall ball = section_braid_ball(dc, bg, 4);
    for (const auto& [s, fs] : ball.value) {
      if (ball.depth.at(s) >= 4) continue;
      SiltingCandidate ps = section_to_silting(dc, s);
      for (const SectionMove& mv : section_neighbors(dc, s)) {
        const BraidElement& ft = ball.value.at(mv.target);
        SiltingCandidate pt = section_to_silting(dc, mv.target);
        if (silting_gt(dc, ps, pt)) {
          // smaller silting object, larger braid: ft >= fs by one generator
          CHECK(bg.geq(ft, fs));
          CHECK(bg.multiply(ft, bg.inverse(fs)) == bg.generator(mv.vertex));
        } else {
          CHECK(silting_gt(dc, pt, ps));
          CHECK(bg.geq(fs, ft));
        }
      }
    }
  }
}

TEST_CASE("unreachable sections are reported") {
  DerivedCategory dc(parse_quiver("a2"));
  BraidGroup bg(2);
  Section far{{9, 9}};
  REQUIRE_THROWS_AS(section_to_braid(dc, bg, far, 3), std::runtime_error);
}

TEST_CASE("rank mismatch is rejected") {
  DerivedCategory dc(parse_quiver("a3"));
  BraidGroup bg(2);
  REQUIRE_THROWS_AS(section_braid_ball(dc, bg, 2), std::invalid_argument);
}
