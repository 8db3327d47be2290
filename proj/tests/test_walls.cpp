#include <doctest.h>

#include <set>

#include "graphprod/wall.hpp"
#include "instances.hpp"

using gp::GroupElement;

TEST_CASE("canonical wall representative strips trailing link syllables") {
  gp::ProductSpec spec = inst::pentagon();
  // 1 is in link(0): (1:1) A_0 = A_0.
  gp::Wall w = gp::canonical_wall(GroupElement::parse(spec, "1:1"), 0);
  CHECK(w.rep.is_identity());
  // 2 is not adjacent to 0: representative stays.
  gp::Wall u = gp::canonical_wall(GroupElement::parse(spec, "2:1"), 0);
  CHECK(u.rep.str() == "2:1");
  CHECK(u.str() == "(2:1)|0");
}

TEST_CASE("membership is translation of begins_with") {
  gp::ProductSpec spec = inst::pentagon();
  gp::Wall base{GroupElement::identity(spec), 0};
  CHECK(gp::member(GroupElement::parse(spec, "0:1"), base));
  CHECK(gp::member(GroupElement::parse(spec, "0:1 2:1"), base));
  CHECK_FALSE(gp::member(GroupElement::identity(spec), base));
  CHECK_FALSE(gp::member(GroupElement::parse(spec, "2:1"), base));
}

TEST_CASE("wall distance equals twice the reduced length") {
  gp::ProductSpec spec = inst::pentagon();
  GroupElement e = GroupElement::identity(spec);
  CHECK(gp::wall_distance(GroupElement::parse(spec, "0:1 2:1"), e) == 4);
  for (const auto& g : gp::enumerate_ball(spec, 2)) {
    CHECK(gp::wall_distance(g, e) == 2 * g.reduced_length());
  }
}

TEST_CASE("separating walls actually separate") {
  gp::ProductSpec spec = inst::path_323();
  auto ball = gp::enumerate_ball(spec, 2);
  for (const auto& g : ball) {
    for (const auto& h : ball) {
      for (const auto& w : gp::separating_walls(g, h)) {
        CHECK(gp::member(g, w) != gp::member(h, w));
        // Representative is canonical.
        CHECK(gp::canonical_wall(w.rep, w.vertex) == w);
      }
    }
  }
}

TEST_CASE("crossing verdicts on base walls") {
  gp::ProductSpec spec = inst::pentagon();
  GroupElement e = GroupElement::identity(spec);
  gp::Wall a0{e, 0}, a1{e, 1}, a2{e, 2};
  CHECK(gp::crosses(a0, a1, 3) == gp::CrossVerdict::Cross);  // adjacent vertices
  CHECK(gp::crosses(a0, a2, 3) == gp::CrossVerdict::ParallelCertified);
  CHECK(gp::crosses(a0, a0, 3) == gp::CrossVerdict::ParallelCertified);
  gp::Wall shifted = gp::canonical_wall(GroupElement::parse(spec, "0:1"), 0);
  CHECK(gp::crosses(a0, shifted, 3) == gp::CrossVerdict::ParallelCertified);
  CHECK(std::string(gp::verdict_code(gp::CrossVerdict::Cross)) == "X");
  CHECK(std::string(gp::verdict_code(gp::CrossVerdict::ParallelUpToRadius)) == "P?r");
}

TEST_CASE("chi_d flags the sphere") {
  gp::ProductSpec spec = inst::free_23();
  GroupElement e = GroupElement::identity(spec);
  GroupElement g = GroupElement::parse(spec, "0:1 1:1");
  CHECK(gp::chi_d(g, e, 2) == 1);
  CHECK(gp::chi_d(g, e, 1) == 0);
  CHECK(gp::chi_d(g, g, 0) == 1);
}
