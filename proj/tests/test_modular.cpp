#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weylfilt/modular.hpp"

using namespace weylfilt;

TEST_CASE("steinberg decomposition") {
  RootSystem a1 = RootSystem::build(CartanType::parse("A1"));
  auto [l0, l1] = steinberg_decompose(a1, Weight({7}), 3);
  CHECK(l0 == Weight({1}));
  CHECK(l1 == Weight({2}));

  auto [r0, r1] = steinberg_decompose(a1, Weight({2}), 3);
  CHECK(r0 == Weight({2}));
  CHECK(r1 == Weight({0}));

  RootSystem a2 = RootSystem::build(CartanType::parse("A2"));
  auto [m0, m1] = steinberg_decompose(a2, Weight({10, 5}), 5);
  CHECK(m0 == Weight({0, 0}));
  CHECK(m1 == Weight({2, 1}));
  CHECK_THROWS_AS(steinberg_decompose(a2, Weight({-1, 0}), 5), DomainError);

  // uniqueness: recomposition and restrictedness
  for (Int a = 0; a <= 20; ++a) {
    auto [s0, s1] = steinberg_decompose(a1, Weight({a}), 3);
    CHECK(is_restricted(a1, s0, 3));
    CHECK(a1.is_dominant(s1));
    CHECK(s0 + 3 * s1 == Weight({a}));
  }
}

TEST_CASE("ch Delta^p examples at A1 p=3") {
  Engine eng(CartanType::parse("A1"), 3);

  // restricted weight: Delta^p = L
  CHECK(ch_delta_p(eng, Weight({1})) == eng.irreducible_character(Weight({1})));

  FormalCharacter d3 = ch_delta_p(eng, Weight({3}));
  CHECK(d3.terms().size() == 2);
  CHECK(d3.mult(Weight({3})) == 1);
  CHECK(d3.mult(Weight({-3})) == 1);

  FormalCharacter d4 = ch_delta_p(eng, Weight({4}));
  CHECK(d4.mass() == 4);
  CHECK(d4.mult(Weight({4})) == 1);
  CHECK(d4.mult(Weight({2})) == 1);
  CHECK(d4.mult(Weight({-2})) == 1);
  CHECK(d4.mult(Weight({-4})) == 1);
}

TEST_CASE("nabla_p is the same character as Delta^p") {
  Engine eng(CartanType::parse("A1"), 3);
  for (Int n = 0; n <= 12; ++n) {
    CHECK(ch_nabla_p(eng, Weight({n})) == ch_delta_p(eng, Weight({n})));
  }
  CHECK(ch_nabla_p(eng, Weight({0})).mass() == 1);
}

TEST_CASE("Delta^red equals Delta^p in LCF-assumed mode") {
  for (const auto& name : {"A1", "A2"}) {
    for (Int p : {3, 5}) {
      Engine eng(CartanType::parse(name), p);
      if (!eng.p_at_least_coxeter()) continue;
      for (const Weight& lambda : dominant_weights_below(eng.rs(), 4 * p))
        CHECK(eng.delta_red_character(lambda) == ch_delta_p(eng, lambda));
    }
  }
}

TEST_CASE("Delta^red trivialities") {
  Engine eng(CartanType::parse("A1"), 3);
  CHECK(eng.delta_red_character(Weight({0})).mass() == 1);
  FormalCharacter d3 = eng.delta_red_character(Weight({3}));
  CHECK(d3.mult(Weight({3})) == 1);
  CHECK(d3.mult(Weight({-3})) == 1);
  CHECK(d3.mass() == 2);
}

TEST_CASE("dimension multiplicativity and support bound") {
  Engine eng(CartanType::parse("A2"), 5);
  const RootSystem& rs = eng.rs();
  for (const Weight& lambda : dominant_weights_below(rs, 18)) {
    auto [l0, l1] = steinberg_decompose(rs, lambda, 5);
    FormalCharacter c = ch_delta_p(eng, lambda);
    CHECK(c.mass() == eng.irreducible_character(l0).mass() * weyl_dimension(rs, l1));
    // unitriangularity
    CHECK(c.mult(lambda) == 1);
    CHECK(eng.delta_red_character(lambda).mult(lambda) == 1);
    // support bound after dominant projection
    for (const auto& [w, m] : c.terms()) CHECK(rs.dominance_leq(rs.dominant_representative(w), lambda));
  }
}
