#include "doctest.h"

#include "fixtures.hpp"
#include "mxp/oracle.hpp"
#include "mxp/order.hpp"

using namespace mxp;
using mxp::test::w;
using mxp::test::ws;

TEST_CASE("natural partial order") {
  auto p = test::projective_plane();
  CHECK(leq(w(p, "rho"), w(p, "a a"), p));
  CHECK_FALSE(leq(w(p, "a a"), w(p, "rho"), p));
  CHECK(leq(w(p, "a rho"), w(p, "a rho"), p));
}

TEST_CASE("word problem") {
  auto p = test::projective_plane();
  CHECK(word_eq(w(p, "rho"), w(p, "rho a a"), p));
  auto free = test::free_on({"a", "b"});
  CHECK(word_eq(w(free, "a a' a"), w(free, "a"), free));
  CHECK_FALSE(word_eq(w(free, "a"), w(free, "b"), free));
}

TEST_CASE("idempotents") {
  auto p = test::projective_plane();
  CHECK(is_idempotent(w(p, "a a'"), p));
  CHECK(is_idempotent(w(p, "rho"), p));
  CHECK(is_idempotent(w(p, "a rho a'"), p));
  auto free = test::free_on({"a"});
  CHECK_FALSE(is_idempotent(w(free, "a"), free));
}

TEST_CASE("submonoid membership") {
  auto p = test::projective_plane();
  CHECK(submonoid_member(w(p, "a a"), ws(p, "a"), p));
  CHECK(submonoid_member(w(p, "a rho a"), ws(p, "rho; a rho a"), p));
  CHECK_FALSE(submonoid_member(w(p, "rho"), ws(p, "a"), p));
  CHECK(oracle::naive_member(w(p, "rho"), ws(p, "a"), p, 4)
        == oracle::Evidence::no_evidence);
}

TEST_CASE("conjugacy of closed inverse submonoids") {
  auto p = test::projective_plane();
  auto m = conjugate(ws(p, "rho"), ws(p, "a rho a"), p);
  REQUIRE(m.has_value());
  CHECK(p.format(*m) == "a");

  auto y  = ws(p, "a a a; rho");
  auto id = conjugate(y, y, p);
  REQUIRE(id.has_value());
  CHECK(id->empty());

  CHECK_FALSE(conjugate(ws(p, "a"), ws(p, "rho"), p).has_value());
}

TEST_CASE("conjugator satisfies the definition") {
  // m^-1 H2 m <= H1 and m H1 m^-1 <= H2, checked on the generators.
  auto p  = test::projective_plane();
  auto y1 = ws(p, "rho");
  auto y2 = ws(p, "a rho a");
  auto m  = *conjugate(y1, y2, p);
  for (auto const& h : y2) {
    CHECK(submonoid_member(concat(concat(invert(m), h), m), y1, p));
  }
  for (auto const& h : y1) {
    CHECK(submonoid_member(concat(concat(m, h), invert(m)), y2, p));
  }
}

TEST_CASE("budget exhaustion propagates") {
  auto p = test::torus();
  CHECK_THROWS_AS((void) submonoid_member(w(p, "a"),
                                          ws(p, "a' b' a b; a b rho a'"),
                                          p,
                                          {.budget = 1, .shuffle_seed = {}}),
                  BudgetExhausted);
}

TEST_CASE("order laws on random words") {
  test::RandomInstances gen(41);
  for (int i = 0; i < 150; ++i) {
    auto p = gen.presentation();
    auto u = gen.word(p, 6);
    auto v = gen.word(p, 6);
    auto x = gen.word(p, 6);
    CAPTURE(p.format(u));
    CAPTURE(p.format(v));

    CHECK(leq(u, u, p));
    CHECK(word_eq(u, concat(concat(u, invert(u)), u), p));
    auto uu = concat(u, invert(u));
    auto vv = concat(v, invert(v));
    CHECK(word_eq(concat(uu, vv), concat(vv, uu), p));
    CHECK(is_idempotent(uu, p));

    bool uv = leq(u, v, p);
    bool vu = leq(v, u, p);
    CHECK((uv && vu) == word_eq(u, v, p));
    if (uv) {
      CHECK(word_eq(u, concat(uu, v), p));
      if (leq(v, x, p)) {
        CHECK(leq(u, x, p));
      }
    }
  }
}

TEST_CASE("stabilisers of saturated automata are closed inverse submonoids") {
  test::RandomInstances gen(42);
  for (int i = 0; i < 100; ++i) {
    auto p = gen.presentation();
    auto a = coset_automaton(gen.generators(p, 3, 5), p).result;
    auto v = static_cast<Vertex>(gen.below(a.num_vertices()));
    // Loops at v from random closed walks.
    auto loop = [&] {
      Word   word;
      Vertex at = v;
      for (std::size_t k = gen.below(6); k > 0; --k) {
        auto l = static_cast<LetterCode>(gen.below(a.alphabet().size()));
        if (a.target(at, l) != kNoVertex) {
          word.push_back(a.alphabet().letter(l));
          at = a.target(at, l);
        }
      }
      auto back = a.rerooted(v, v);
      return concat(word, invert(shortest_path_label(back, at)));
    };
    auto s = loop();
    auto t = loop();
    REQUIRE(act(a, v, s) == v);
    CHECK(act(a, v, concat(s, t)) == v);
    CHECK(act(a, v, invert(s)) == v);
    // Closed upwards: s x x^-1 <= s, so s is in whenever s x x^-1 is.
    auto x     = gen.word(p, 3);
    auto below = concat(concat(s, x), invert(x));
    if (act(a, v, below) == v) {
      CHECK(act(a, v, s) == v);
    }
  }
}

TEST_CASE("conjugacy is an equivalence") {
  test::RandomInstances gen(43);
  auto                  p = test::projective_plane();
  std::vector<Automaton> automata;
  for (int i = 0; i < 12; ++i) {
    automata.push_back(coset_automaton(gen.generators(p, 2, 4), p).result);
  }
  for (auto const& a : automata) {
    CHECK(conjugate(a, a).has_value());
    for (auto const& b : automata) {
      CHECK(conjugate(a, b).has_value() == conjugate(b, a).has_value());
      for (auto const& c : automata) {
        if (conjugate(a, b) && conjugate(b, c)) {
          CHECK(conjugate(a, c).has_value());
        }
      }
    }
  }
}

TEST_CASE("membership agrees with the enumeration oracle") {
  test::RandomInstances gen(44);
  for (int i = 0; i < 60; ++i) {
    auto p = gen.presentation();
    auto y = gen.generators(p, 3, 4);
    for (int k = 0; k < 3; ++k) {
      auto u = gen.word(p, 6);
      if (oracle::naive_member(u, y, p, 2) == oracle::Evidence::yes) {
        CHECK(submonoid_member(u, y, p));
      }
    }
    for (auto const& g : y) {
      CHECK(oracle::naive_member(g, y, p, 1) == oracle::Evidence::yes);
    }
  }
}
