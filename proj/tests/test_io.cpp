#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "skeinrec/io.hpp"
#include "skeinrec/skein.hpp"

using namespace skeinrec;

namespace {

const std::string kFixtures = SKEINREC_FIXTURES;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("parse braids") {
  const BraidWord b = parse_braid("3; 1 -2 1 -2");
  CHECK(b.strands == 3);
  CHECK(b.generators == std::vector<int>{1, -2, 1, -2});
  CHECK(b.writhe() == 0);
  CHECK(render_braid(b) == "3; 1 -2 1 -2");
  CHECK(parse_braid("  2;1 1 1 ").writhe() == 3);
  CHECK(parse_braid("2;").generators.empty());
}

TEST_CASE("braid parse errors") {
  CHECK_THROWS_AS(parse_braid("2; 5"), ParseError);
  CHECK_THROWS_AS(parse_braid("2; 0"), ParseError);
  CHECK_THROWS_AS(parse_braid("2; -2"), ParseError);
  CHECK_THROWS_AS(parse_braid("1; "), ParseError);
  CHECK_THROWS_AS(parse_braid("2 1 1"), ParseError);
  CHECK_THROWS_AS(parse_braid("2; 1 x"), ParseError);
  CHECK_THROWS_AS(parse_braid(""), ParseError);
}

TEST_CASE("braid closures") {
  for (BraidClosure cl : {BraidClosure::right, BraidClosure::left}) {
    const MorseWord hopf = braid_to_morse(parse_braid("2; 1 1"), cl);
    const ComponentMap m = validate(hopf);
    CHECK(m.components.size() == 2);
    CHECK(m.total_writhe == 2);
    const MorseWord trefoil = braid_to_morse(parse_braid("2; 1 1 1"), cl);
    CHECK(validate(trefoil).components.size() == 1);
    CHECK(crossing_count(trefoil) == 3);
    const MorseWord unlink = braid_to_morse(parse_braid("3;"), cl);
    CHECK(validate(unlink).components.size() == 3);
    CHECK(eval_homfly(unlink) == constants::homfly_loop(Var::t).pow(3));
  }
  const MorseWord colored = braid_to_morse(parse_braid("2; 1"), BraidClosure::right, Var::u);
  CHECK(colors_of(colored) == std::vector<Var>{Var::u});
}

TEST_CASE("parse a Morse circle") {
  const MorseWord w = parse_morse("src:\ncup 0 ccw\ncap 0 ccw\n");
  REQUIRE(w.slices.size() == 2);
  CHECK(w.source.empty());
  CHECK(w.slices[0] == Slice::cup(0, Chirality::ccw, Var::t));
  CHECK(w.slices[1] == Slice::cap(0, Chirality::ccw));
  CHECK(render_morse(w) == "src:\ncup 0 ccw\ncap 0 ccw\n");
}

TEST_CASE("parse Morse tangles with boundary") {
  const MorseWord w = parse_morse("src: +t -t 0s\nx+ 0\nid\n# comment\n\ncap 0 ccw  # trailing\n");
  CHECK(w.source == Boundary{{Var::t, Dir::up}, {Var::t, Dir::down}, {Var::s, Dir::none}});
  CHECK(w.slices.size() == 3);
  CHECK(target(w) == Boundary{{Var::s, Dir::none}});
  const MorseWord u = parse_morse("src:\ncup 0 un\ncap 0 un\n");
  CHECK(u.slices[0].color == Var::s);
  CHECK(parse_morse("src:\ncup 0 cw q\ncap 0 cw\n").slices[0].color == Var::q);
}

TEST_CASE("Morse errors carry line numbers") {
  try {
    parse_morse(slurp(kFixtures + "/bad_width.morse"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_morse("cup 0 ccw\n"), ParseError);
  CHECK_THROWS_AS(parse_morse("src:\ncup 0 sideways\n"), ParseError);
  CHECK_THROWS_AS(parse_morse("src:\nflip 0\n"), ParseError);
  CHECK_THROWS_AS(parse_morse("src: *t\n"), ParseError);
  CHECK_THROWS_AS(parse_morse("src:\ncup x ccw\n"), ParseError);
  try {
    parse_morse("src:\ncup 0 cw\ncap 0 ccw\n");
    FAIL("expected an orientation error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("Morse round trip") {
  for (const auto& e : link_table())
    for (const MorseWord& w : e.presentations) CHECK(parse_morse(render_morse(w)) == w);
  for (const auto& f : std::filesystem::directory_iterator(kFixtures)) {
    if (f.path().extension() != ".morse" || f.path().stem() == "bad_width") continue;
    const MorseWord w = parse_morse(slurp(f.path().string()));
    CHECK(parse_morse(render_morse(w)) == w);
  }
}

TEST_CASE("link table invariants") {
  const auto& table = link_table();
  CHECK(table.size() >= 7);
  for (const char* name : {"unknot", "unknot+curl", "unknot-curl", "unlink2", "hopf", "trefoil", "figure8"})
    CHECK(find_link(name) != nullptr);
  CHECK(find_link("no-such-link") == nullptr);
  for (const auto& e : table) {
    CHECK(e.presentations.size() >= 2);
    for (const MorseWord& w : e.presentations) {
      const ComponentMap m = validate(w);
      CHECK(is_closed(w));
      CHECK(static_cast<int>(m.components.size()) == e.components);
      CHECK(m.total_writhe == e.writhe);
      CHECK(colors_of(w) == std::vector<Var>{Var::t});
    }
  }
  CHECK(find_link("unknot+curl")->writhe == 1);
  CHECK(find_link("unknot-curl")->writhe == -1);
  CHECK(find_link("figure8")->writhe == 0);
}

TEST_CASE("resolve links from names and files") {
  CHECK(resolve_link("hopf").name == "hopf");
  const LinkEntry f8 = resolve_link(kFixtures + "/figure8.braid");
  CHECK(f8.components == 1);
  CHECK(f8.writhe == 0);
  CHECK(eval_homfly(f8.primary()) == eval_homfly(find_link("figure8")->primary()));
  const LinkEntry h = resolve_link(kFixtures + "/hopf.morse");
  CHECK(h.components == 2);
  CHECK(eval_homfly(h.primary()) == eval_homfly(find_link("hopf")->primary()));
  CHECK_THROWS_AS(resolve_link(kFixtures + "/bad_generator.braid"), ParseError);
  CHECK_THROWS(resolve_link("no-such-link-or-file"));
}
