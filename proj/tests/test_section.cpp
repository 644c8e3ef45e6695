#include <catch2/catch_amalgamated.hpp>

#include "siltlab/section.hpp"
#include "siltlab/silting.hpp"

using namespace siltlab;

TEST_CASE("A2: vertex 2 is a sink of the initial section") {
  DerivedCategory dc(parse_quiver("a2"));
  Section s = initial_section(dc);
  REQUIRE(section_is_valid(dc, s));
  CHECK(section_is_sink(dc, s, 2));
  CHECK(section_is_source(dc, s, 1));
  auto [t, sign] = reflect_section(dc, s, 2);
  CHECK(sign == +1);
  CHECK(t.offsets == std::vector<int>{0, -1});
  // reflecting again at the now-source returns the input
  auto [back, sign2] = reflect_section(dc, t, 2);
  CHECK(sign2 == -1);
  CHECK(back == s);
}

TEST_CASE("reflection at a non-extremal vertex is rejected") {
  DerivedCategory dc(parse_quiver("a3"));
  Section s = initial_section(dc);
  // in the initial A3 slice the middle vertex is neither sink nor source
  int middle = 0;
  for (int v = 1; v <= 3; ++v)
    if (!section_is_sink(dc, s, v) && !section_is_source(dc, s, v)) middle = v;
  REQUIRE(middle != 0);
  REQUIRE_THROWS_AS(reflect_section(dc, s, middle), std::invalid_argument);
}

TEST_CASE("a full sweep of sink reflections realizes tau") {
  for (const std::string& name : {"a2", "a3:FB", "a4:BFF"}) {
    DerivedCategory dc(parse_quiver(name));
    Section s = initial_section(dc);
    std::vector<bool> done(dc.n() + 1, false);
    int reflected = 0;
    while (reflected < dc.n()) {
      bool progress = false;
      for (int v = 1; v <= dc.n(); ++v) {
        if (done[v] || !section_is_sink(dc, s, v)) continue;
        s = reflect_section(dc, s, v).first;
        done[v] = true;
        ++reflected;
        progress = true;
      }
      REQUIRE(progress);
    }
    CHECK(s.offsets == std::vector<int>(dc.n(), -1));
  }
}

TEST_CASE("reflection ball stays valid and is connected onto nearby sections") {
  for (const std::string& name : {"a3", "a3:FB", "a3:BB"}) {
    DerivedCategory dc(parse_quiver(name));
    std::map<Section, int> ball = explore_sections(dc, 9);
    CHECK(ball.size() > 10);
    for (const auto& [s, d] : ball) CHECK(section_is_valid(dc, s));
    // the reflection graph reaches every valid slice near the origin: the
    // connectivity assertion behind the section calculus
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b)
        for (int c = -1; c <= 1; ++c) {
          Section s{{a, b, c}};
          if (section_is_valid(dc, s)) CHECK(ball.count(s) == 1);
        }
  }
}

TEST_CASE("sections carry 1-silting objects") {
  DerivedCategory dc(parse_quiver("a2"));
  for (const auto& [s, d] : explore_sections(dc, 6)) {
    SiltingCandidate p = section_to_silting(dc, s);
    // the A2 sections are exactly the label pairs {i, i+1}
    long long a = dc.a2_label(p.summands[0]), b = dc.a2_label(p.summands[1]);
    CHECK(std::abs(a - b) == 1);
    CHECK(is_d_silting(dc, p, 1));
  }
}

TEST_CASE("initial section maps to the projective slice") {
  for (const std::string& name : {"a2", "a3:BF", "a4"}) {
    DerivedCategory dc(parse_quiver(name));
    SiltingCandidate p = section_to_silting(dc, initial_section(dc));
    for (const DerivedObject& x : p.summands) {
      CHECK(x.shift == 0);
      CHECK(dc.modules().is_projective(x.m));
    }
  }
}

TEST_CASE("sections of a non-linear orientation also land on silting objects") {
  DerivedCategory dc(parse_quiver("a3:FB"));
  for (const auto& [s, d] : explore_sections(dc, 5)) {
    SiltingCandidate p = section_to_silting(dc, s);
    CHECK(is_silting(dc, p));
  }
}

TEST_CASE("reflections correspond to Hasse covers") {
  DerivedCategory dc(parse_quiver("a2"));
  Section s = initial_section(dc);
  SiltingCandidate t = section_to_silting(dc, s);
  for (const SectionMove& mv : section_neighbors(dc, s)) {
    SiltingCandidate r = section_to_silting(dc, mv.target);
    // one summand is exchanged and the two objects are comparable
    int shared = 0;
    for (const DerivedObject& x : t.summands)
      if (r.contains(x)) ++shared;
    CHECK(shared == dc.n() - 1);
    if (mv.sign == +1)  // sink reflection moves up in the silting order
      CHECK(silting_gt(dc, r, t));
    else
      CHECK(silting_gt(dc, t, r));
  }
}

TEST_CASE("A1 sections: the unique vertex is both sink and source") {
  DerivedCategory dc(parse_quiver("a1"));
  Section s = initial_section(dc);
  std::vector<SectionMove> nb = section_neighbors(dc, s);
  REQUIRE(nb.size() == 2);
  CHECK(nb[0].sign == +1);
  CHECK(nb[1].sign == -1);
  // reflect_section resolves the ambiguity sink-first
  CHECK(reflect_section(dc, s, 1).second == +1);
}
