#include "doctest.h"

#include "fixtures.hpp"
#include "mxp/oracle.hpp"
#include "mxp/stephen.hpp"

using namespace mxp;
using mxp::test::w;
using mxp::test::ws;

namespace {

  LetterCode code(Presentation const& p, std::string_view name) {
    return p.alphabet().code(*p.find(name));
  }

  Automaton coset(Presentation const& p, std::string_view gens) {
    auto report = coset_automaton(ws(p, gens), p);
    REQUIRE_FALSE(report.budget_exhausted);
    return report.result;
  }

  Automaton generic_coset(Presentation const& p, std::string_view gens) {
    auto report = oracle::generic_saturate(flower(p, ws(p, gens)), p);
    REQUIRE_FALSE(report.budget_exhausted);
    return report.result;
  }

}  // namespace

TEST_CASE("linear automaton") {
  auto p = Presentation({"a", "b"}, {{"rho", {}}});
  auto g = linear_automaton(p, w(p, "1"));
  CHECK(g.num_vertices() == 1);
  CHECK(g.initial() == g.terminal());

  g = linear_automaton(p, w(p, "a b'"));
  CHECK(g.num_vertices() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 0, 1}, {2, 2, 1}});

  g = linear_automaton(p, w(p, "rho"));
  CHECK(g.num_vertices() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 4, 1}});
}

TEST_CASE("flower automaton") {
  auto p = test::torus();
  CHECK(flower(p, {}).num_vertices() == 1);
  auto g = flower(p, ws(p, "a b"));
  CHECK(g.num_vertices() == 2);
  CHECK(g.edges().size() == 2);
  // Hub plus three inner vertices per petal of length four.
  CHECK(flower(p, ws(p, "a' b' a b; a b rho a'")).num_vertices() == 7);
}

TEST_CASE("saturation: projective plane, <rho>") {
  auto p = test::projective_plane();
  auto a = coset(p, "rho");
  CHECK(a.num_vertices() == 2);
  CHECK(a.count_edges(code(p, "a")) == 2);
  CHECK(a.count_cell_loops() == 1);
  CHECK(a.target(a.initial(), code(p, "rho")) == a.initial());
  CHECK(iso_rooted(a, generic_coset(p, "rho")));
}

TEST_CASE("saturation: projective plane, <rho, a rho a>") {
  auto p = test::projective_plane();
  auto a = coset(p, "rho; a rho a");
  CHECK(a.num_vertices() == 2);
  CHECK(a.count_edges(code(p, "a")) == 2);
  CHECK(a.count_cell_loops() == 2);
  CHECK(is_saturated(a, p));
  CHECK(iso_rooted(a, generic_coset(p, "rho; a rho a")));
}

TEST_CASE("saturation: torus walkthrough") {
  auto p      = test::torus();
  auto report = coset_automaton(ws(p, "a' b' a b; a b rho a'"), p);
  auto const& a = report.result;
  CHECK_FALSE(report.budget_exhausted);
  CHECK(a.num_vertices() == 6);
  CHECK(a.count_edges(code(p, "a")) == 4);
  CHECK(a.count_edges(code(p, "b")) == 4);
  CHECK(a.count_cell_loops() == 1);
  CHECK(report.expansions_applied >= 2);
  CHECK(report.folds_applied >= 4);
  CHECK(iso_rooted(a, generic_coset(p, "a' b' a b; a b rho a'")));
}

TEST_CASE("Schützenberger automata") {
  auto free = test::free_on({"a"});
  auto sa   = schutzenberger(w(free, "a"), free).result;
  CHECK(sa.num_vertices() == 2);
  CHECK(sa.initial() != sa.terminal());

  sa = schutzenberger(w(free, "a a'"), free).result;
  CHECK(sa.num_vertices() == 2);
  CHECK(sa.initial() == sa.terminal());

  auto pp = test::projective_plane();
  sa      = schutzenberger(w(pp, "rho"), pp).result;
  CHECK(sa.initial() == sa.terminal());
  CHECK(iso_rooted(sa, coset(pp, "rho")));
  CHECK(member(sa, w(pp, "a a")));
  CHECK_FALSE(member(schutzenberger(w(free, "a"), free).result, w(free, "a a")));
}

TEST_CASE("omega-coset automata from the projective plane table") {
  auto p = test::projective_plane();
  auto a = coset(p, "a; rho");
  CHECK(a.num_vertices() == 1);
  CHECK(a.target(0, code(p, "a")) == 0);
  CHECK(a.target(0, code(p, "rho")) == 0);

  a = coset(p, "a a a a a");
  CHECK(a.num_vertices() == 5);
  CHECK(a.count_edges(code(p, "a")) == 5);
  CHECK(a.count_cell_loops() == 0);

  a = coset(p, "");
  CHECK(a.num_vertices() == 1);
  CHECK(a.positive_edges().empty());
  CHECK(member(a, w(p, "1")));
  CHECK_FALSE(member(a, w(p, "a a'")));

  a = coset(p, "a a a a a' a' a' a'");
  CHECK(a.num_vertices() == 5);
  CHECK(a.count_edges(code(p, "a")) == 4);
}

TEST_CASE("canonical codes of coset automata") {
  auto free = test::free_on({"a", "b"});
  CHECK(canonical_code(coset(free, "a b")) != canonical_code(coset(free, "b a")));
  CHECK(iso_rooted(coset(free, "a b"), coset(free, "a b; b' a'")));
}

TEST_CASE("budget exhaustion is reported") {
  auto p      = test::torus();
  auto report = coset_automaton(ws(p, "a' b' a b; a b rho a'"), p, {.budget = 2, .shuffle_seed = {}});
  CHECK(report.budget_exhausted);
  CHECK(report.expansions_applied + report.folds_applied <= 2);
}

TEST_CASE("empty boundary labels impose nothing") {
  auto p = Presentation({"a"}, {{"rho", {}}});
  auto a = coset(p, "a rho");
  CHECK(a.num_vertices() == 1);
  CHECK(a.count_cell_loops() == 1);
  CHECK(is_saturated(a, p));
}

TEST_CASE("saturation invariants on random instances") {
  test::RandomInstances gen(31);
  for (int i = 0; i < 200; ++i) {
    auto p      = gen.presentation();
    auto y      = gen.generators(p, 3, 6);
    auto report = coset_automaton(y, p);
    REQUIRE_FALSE(report.budget_exhausted);
    auto const& a = report.result;
    CAPTURE(io::format_presentation(p));

    CHECK(is_saturated(a, p));
    CHECK(a.initial() == a.terminal());
    for (auto const& g : y) {
      CHECK(member(a, g));
    }

    // Upward closure under the relations, on accepted words built around
    // every cell loop: u rho u^-1 is accepted when u reaches a loop.
    for (Vertex v = 0; v < a.num_vertices(); ++v) {
      auto u = shortest_path_label(a, v);
      for (std::uint32_t j = 0; j < p.alphabet().num_p; ++j) {
        Letter rho{LetterKind::cell, j};
        auto   with_rho = concat(concat(u, Word{rho}), invert(u));
        if (!member(a, with_rho)) {
          continue;
        }
        CHECK(member(a, concat(u, invert(u))));
        CHECK(member(a, concat(concat(u, p.boundary(j)), invert(u))));
      }
    }

    // Confluence: any schedule gives the same automaton.
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      auto shuffled = coset_automaton(y, p, {.shuffle_seed = seed * 7919 + i});
      CHECK(iso_rooted(shuffled.result, a));
    }

    // Agreement with the literal-relation engine.
    auto generic = oracle::generic_saturate(flower(p, y), p);
    REQUIRE_FALSE(generic.budget_exhausted);
    CHECK(iso_rooted(generic.result, a));
  }
}

TEST_CASE("coset automata are invariant under generator rewrites") {
  test::RandomInstances gen(32);
  for (int i = 0; i < 100; ++i) {
    auto p = gen.presentation();
    auto y = gen.generators(p, 3, 6);
    if (y.empty()) {
      continue;
    }
    auto base = canonical_code(coset_automaton(y, p).result);

    auto permuted = y;
    std::shuffle(permuted.begin(), permuted.end(), gen.engine());
    CHECK(canonical_code(coset_automaton(permuted, p).result) == base);

    auto duplicated = y;
    duplicated.push_back(y[gen.below(y.size())]);
    CHECK(canonical_code(coset_automaton(duplicated, p).result) == base);

    auto inverted = y;
    auto k        = gen.below(y.size());
    inverted[k]   = invert(y[k]);
    CHECK(canonical_code(coset_automaton(inverted, p).result) == base);

    auto tripled = y;
    tripled[k]   = concat(concat(y[k], invert(y[k])), y[k]);
    CHECK(canonical_code(coset_automaton(tripled, p).result) == base);
  }
}

TEST_CASE("without cells saturation is folding") {
  test::RandomInstances gen(33);
  for (int i = 0; i < 200; ++i) {
    auto p  = gen.presentation(2, 0);
    auto u  = gen.word(p, 10);
    auto sa = schutzenberger(u, p);
    CHECK(sa.expansions_applied == 0);
    CHECK(iso_rooted(sa.result, oracle::munn_tree(p, u)));
    CHECK(iso_rooted(sa.result, fold(linear_automaton(p, u))));
  }
}
