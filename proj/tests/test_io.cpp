#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "fixtures.hpp"
#include "mxp/io.hpp"
#include "mxp/order.hpp"
#include "mxp/stephen.hpp"

using namespace mxp;
using mxp::test::w;
using mxp::test::ws;

namespace {

  std::string error_of(std::string_view text) {
    try {
      (void) io::parse_presentation(text);
    } catch (InputError const& e) {
      return e.what();
    }
    return "";
  }

  std::size_t count(std::string const& haystack, std::string const& needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos;
         pos      = haystack.find(needle, pos + 1)) {
      ++n;
    }
    return n;
  }

}  // namespace

TEST_CASE("parse presentations") {
  auto p = io::parse_presentation("letters: a\ncell rho: a a");
  CHECK(p.x_letters() == std::vector<std::string>{"a"});
  REQUIRE(p.cells().size() == 1);
  CHECK(p.cells()[0].name == "rho");
  CHECK(p.format(p.boundary(0)) == "a a");

  auto t = io::parse_presentation("letters: a b\ncell rho: a b a' b'\n");
  CHECK(t.format(t.boundary(0)) == "a b a' b'");

  auto e = io::parse_presentation("# comment\nletters: a b\n\ncell rho: 1\n");
  CHECK(e.boundary(0).empty());

  CHECK(io::parse_presentation(io::format_presentation(t)) == t);
}

TEST_CASE("presentation errors carry line numbers") {
  CHECK(error_of("cell rho: a") == "line 1: expected 'letters: ...'");
  CHECK(error_of("letters: a\ncell rho: a b").rfind("line 2:", 0) == 0);
  CHECK(error_of("letters: a\ncell rho: a\ncell sigma: rho")
        == "line 3: cell letter 'rho' inside a boundary label");
  CHECK(error_of("letters: a a").rfind("line 1:", 0) == 0);
  CHECK(error_of("letters: a\ncell a: a").rfind("line 2:", 0) == 0);
  CHECK(error_of("letters: a\nrho: a").rfind("line 2:", 0) == 0);
  CHECK(error_of("").rfind("line 1:", 0) == 0);
}

TEST_CASE("parse complexes") {
  auto p = test::projective_plane();
  auto c = io::parse_complex(
      "vertex u v\n"
      "edge u a v\n"
      "edge v a u\n"
      "cell rho u: u a v v a u\n",
      p);
  CHECK(c.num_vertices() == 2);
  CHECK(c.one_cells().size() == 2);
  CHECK(c.two_cells().size() == 1);
  CHECK(c.vertex_name(1) == "v");
  CHECK(iso_rooted(graph_of_complex(c),
                   coset_automaton(ws(p, "rho"), p).result));

  auto reversed = io::parse_complex(
      "vertex u\nedge u a u\ncell rho u: u a' u u a' u\n",
      p.with_boundary(0, w(p, "a' a'")));
  CHECK(reversed.two_cells()[0].boundary[0].reversed);

  CHECK_THROWS_AS((void) io::parse_complex("vertex u\nedge u a w\n", p),
                  InputError);
  CHECK_THROWS_AS((void) io::parse_complex("vertex u\nedge u rho u\n", p),
                  InputError);
  CHECK_THROWS_AS(
      (void) io::parse_complex("vertex u\nedge u a u\ncell rho u: u a u\n", p),
      InputError);
  CHECK_THROWS_AS((void) io::parse_complex("vertex u\nface u\n", p),
                  InputError);
}

TEST_CASE("DOT export") {
  auto p    = test::free_on({"a"});
  auto loop = Automaton::from_edges(
      p.alphabet(), 1, std::vector<Edge>{{0, 0, 0}}, 0, 0);
  auto dot = io::to_dot(loop, p);
  CHECK(count(dot, "->") == 1);
  CHECK(dot.find("0 -> 0 [label=\"a\"]") != std::string::npos);
  CHECK(dot.find("0 [peripheries=2]") != std::string::npos);

  auto pp     = test::projective_plane();
  auto sphere = coset_automaton(ws(pp, "rho; a rho a"), pp).result;
  dot         = io::to_dot(sphere, pp);
  CHECK(count(dot, "[label=\"a\"]") == 2);
  CHECK(count(dot, "[label=\"rho\"]") == 2);
  CHECK(dot.find("0 -> 1 [label=\"a\"]") != std::string::npos);
  CHECK(dot.find("1 -> 0 [label=\"a\"]") != std::string::npos);

  auto complex = complex_of_automaton(sphere, pp);
  dot          = io::to_dot(complex, pp);
  CHECK(count(dot, "// cell rho") == 2);
  CHECK(dot.find("// cell rho at v0: v0 a v1 v1 a v0") != std::string::npos);
}

TEST_CASE("DOT and JSON are byte-stable across isomorphic automata") {
  test::RandomInstances gen(71);
  for (int i = 0; i < 50; ++i) {
    auto p = gen.presentation();
    auto a = coset_automaton(gen.generators(p, 3, 5), p).result;
    std::vector<Vertex> perm(a.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen.engine());
    auto b = a.relabeled(perm);
    CHECK(io::to_dot(a, p) == io::to_dot(b, p));
    CHECK(io::to_json(a, p) == io::to_json(b, p));
  }
}

TEST_CASE("automaton JSON round trip") {
  test::RandomInstances gen(72);
  for (int i = 0; i < 100; ++i) {
    auto p      = gen.presentation();
    auto a      = gen.below(2) == 0
                      ? coset_automaton(gen.generators(p, 3, 5), p).result
                      : schutzenberger(gen.word(p, 6), p).result;
    auto loaded = io::automaton_from_json(io::to_json(a, p));
    CHECK(loaded.presentation == p);
    CHECK(iso_rooted(loaded.automaton, a));
  }

  auto pp = test::projective_plane();
  auto h  = coset_automaton(ws(pp, "rho"), pp).result;
  auto j  = io::to_json(h, pp);
  CHECK(j.find("\"root_init\": 0") != std::string::npos);
  CHECK(iso_rooted(io::automaton_from_json(j).automaton, h));
}

TEST_CASE("automaton JSON errors") {
  std::string head = R"({"letters":["a"],"cells":[{"name":"rho","boundary":"a a"}],)";
  CHECK_THROWS_AS((void) io::automaton_from_json(
                      head + R"("vertices":[0,1],"edges":[{"from":0,"label":"q","to":1}],"root_init":0,"root_term":0})"),
                  InputError);
  CHECK_THROWS_AS((void) io::automaton_from_json(
                      head + R"("vertices":[0,1],"edges":[{"from":0,"label":"a'","to":1}],"root_init":0,"root_term":0})"),
                  InputError);
  CHECK_THROWS_AS((void) io::automaton_from_json(
                      head + R"("vertices":[0],"edges":[{"from":0,"label":"a","to":7}],"root_init":0,"root_term":0})"),
                  InputError);
  CHECK_THROWS_AS((void) io::automaton_from_json(
                      head + R"("vertices":[0,1,2],"edges":[{"from":0,"label":"a","to":1},{"from":0,"label":"a","to":2}],"root_init":0,"root_term":0})"),
                  InputError);
  CHECK_THROWS_AS((void) io::automaton_from_json(head + R"("vertices":[0]})"),
                  InputError);
  CHECK_THROWS_AS((void) io::automaton_from_json("not json"), InputError);
}

TEST_CASE("complex JSON round trip and validation") {
  test::RandomInstances gen(73);
  for (int i = 0; i < 50; ++i) {
    auto p = gen.presentation();
    auto c = complex_of_automaton(
        coset_automaton(gen.generators(p, 3, 5), p).result, p);
    auto loaded = io::complex_from_json(io::to_json(c, p));
    CHECK(loaded.presentation == p);
    CHECK(loaded.complex.one_cells() == c.one_cells());
    CHECK(loaded.complex.two_cells() == c.two_cells());
    CHECK(isomorphic(io::load_complex(io::to_json(c, p), p), c));
  }

  auto pp     = test::projective_plane();
  auto sphere = complex_of_automaton(
      coset_automaton(ws(pp, "rho; a rho a"), pp).result, pp);
  auto text = io::to_json(sphere, pp);
  // Break the first boundary step's label: a becomes a'.
  auto broken = text;
  auto pos    = broken.find("\"boundary\": [");
  pos         = broken.find("\"label\": \"a\"", pos);
  broken.replace(pos, 12, "\"label\": \"a'\"");
  CHECK_THROWS_AS((void) io::complex_from_json(broken), InputError);

  // A different presentation is refused.
  CHECK_THROWS_AS((void) io::load_complex(text, test::torus()), InputError);
}
