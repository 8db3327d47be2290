#include <doctest.h>

#include <set>

#include "graphprod/oracle.hpp"
#include "graphprod/word.hpp"
#include "instances.hpp"

using gp::GroupElement;
using gp::Syllable;

TEST_CASE("parse and print round-trip") {
  gp::ProductSpec spec = inst::path_323();
  CHECK(GroupElement::parse(spec, "e").str() == "e");
  CHECK(GroupElement::parse(spec, "0:1 1:1").str() == "0:1 1:1");
  CHECK_THROWS_AS(GroupElement::parse(spec, "0:5"), gp::SpecError);
  CHECK_THROWS_AS(GroupElement::parse(spec, "7:1"), gp::SpecError);
  CHECK_THROWS_AS(GroupElement::parse(spec, "0:0"), gp::SpecError);
}

TEST_CASE("reduction amalgamates, cancels, and sorts") {
  gp::ProductSpec spec = inst::path_323();
  // Same-vertex amalgamation across a commuting syllable.
  GroupElement g = GroupElement::reduce(spec, {{0, 1}, {1, 1}, {0, 1}});
  CHECK(g.str() == "0:2 1:1");
  // Full cancellation.
  CHECK(GroupElement::reduce(spec, {{0, 1}, {1, 1}, {0, 2}, {1, 1}}).str() == "e");
  // Non-adjacent vertices block amalgamation.
  CHECK(GroupElement::reduce(spec, {{0, 1}, {2, 1}, {0, 1}}).reduced_length() == 3);
}

TEST_CASE("canonical order emits the smallest movable vertex first") {
  gp::ProductSpec spec = inst::pentagon();
  // 1 and 0 commute, so 0 moves to the front.
  CHECK(GroupElement::reduce(spec, {{1, 1}, {0, 1}}).str() == "0:1 1:1");
  // 2 and 0 do not commute: order is fixed.
  CHECK(GroupElement::reduce(spec, {{2, 1}, {0, 1}}).str() == "2:1 0:1");
}

TEST_CASE("multiplication against raw concatenation") {
  gp::ProductSpec spec = inst::pentagon();
  auto ball = gp::enumerate_ball(spec, 2);
  for (const auto& g : ball) {
    for (const auto& h : ball) {
      std::vector<Syllable> cat = g.word();
      cat.insert(cat.end(), h.word().begin(), h.word().end());
      CHECK((g * h) == GroupElement::reduce(spec, cat));
    }
  }
}

TEST_CASE("ball enumeration matches the rewrite-closure oracle") {
  for (const gp::ProductSpec& spec : {inst::pentagon(), inst::path_323(), inst::free_23()}) {
    for (int radius = 0; radius <= 3; ++radius) {
      auto ball = gp::enumerate_ball(spec, radius);
      auto words = gp::oracle::ball_words(spec, radius);
      REQUIRE(ball.size() == words.size());
      std::set<std::string> a, b;
      for (const auto& g : ball) a.insert(g.str());
      for (const auto& w : words) b.insert(GroupElement::reduce(spec, w).str());
      CHECK(a == b);
    }
  }
}

TEST_CASE("ball cap throws") {
  CHECK_THROWS_AS(gp::enumerate_ball(inst::pentagon(), 6, 10), gp::BallCapError);
}

TEST_CASE("alignment reconstructs the product length") {
  gp::ProductSpec spec = inst::path_323();
  auto ball = gp::enumerate_ball(spec, 3);
  for (const auto& g : ball) {
    for (const auto& h : ball) {
      gp::Alignment al = gp::align(g, h);
      int predicted = (h.reduced_length() - al.q - al.p) +
                      (g.reduced_length() - al.q - al.p) + al.nontrivial_amalgams;
      CHECK((h.inverse() * g).reduced_length() == predicted);
      CHECK(al.p <= spec.kappa);
    }
  }
}

TEST_CASE("d-tail positions match the representative oracle") {
  gp::ProductSpec spec = inst::pentagon();
  for (const auto& g : gp::enumerate_ball(spec, 4)) {
    for (int d = 1; d <= 4; ++d) {
      CHECK(g.d_tail_positions(d) ==
            gp::oracle::d_tail_positions_by_representatives(spec, g.word(), d));
      CHECK(static_cast<int>(g.d_tail(d).size()) <= d * spec.kappa);
    }
  }
}

TEST_CASE("begins_with and ends_with see through shuffles") {
  gp::ProductSpec spec = inst::pentagon();
  GroupElement g = GroupElement::parse(spec, "0:1 2:1");  // 0 and 2 commute? no edge
  CHECK(g.begins_with(0));
  CHECK_FALSE(g.begins_with(2));
  GroupElement h = GroupElement::parse(spec, "0:1 1:1");  // adjacent, both movable
  CHECK(h.begins_with(0));
  CHECK(h.begins_with(1));
  CHECK(h.ends_with(0));
  CHECK(h.ends_with(1));
}
