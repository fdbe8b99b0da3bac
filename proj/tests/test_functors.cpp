#include <doctest.h>

#include <map>

#include "skeinrec/functors.hpp"
#include "skeinrec/io.hpp"

using namespace skeinrec;

namespace {

const std::string kFixtures = SKEINREC_FIXTURES;

Scalar v(Var x, int e = 1) { return Scalar::var(x, e); }

MorseWord circle(Chirality c) { return {{}, {Slice::cup(0, c, Var::t), Slice::cap(0, c)}}; }

std::map<std::string, Scalar> by_word(const std::vector<ExpansionTerm>& terms) {
  std::map<std::string, Scalar> m;
  for (const auto& t : terms) m[render_morse(t.word)] += t.weight;
  return m;
}

const FunctorSpec& phi_tq() { return FunctorSpec::get(FunctorId::phi_tq); }
const FunctorSpec& psi() { return FunctorSpec::get(FunctorId::psi); }
const FunctorSpec& chi() { return FunctorSpec::get(FunctorId::chi); }

}  // namespace

TEST_CASE("functor lookup") {
  CHECK(FunctorSpec::by_name("phi-tq").id() == FunctorId::phi_tq);
  CHECK(FunctorSpec::by_name("phi_su").id() == FunctorId::phi_su);
  CHECK(FunctorSpec::by_name("chi").name() == "chi");
  CHECK_THROWS_AS(FunctorSpec::by_name("omega"), FunctorError);
  CHECK(FunctorSpec::all().size() == 4);
}

TEST_CASE("phi_tq passes a positive tt crossing through") {
  const Boundary tt{{Var::t, Dir::up}, {Var::t, Dir::up}};
  const auto terms = phi_tq().local_image(Slice::cross(0, true), tt, tt);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].coeff == Scalar(1));
  REQUIRE(terms[0].fragment.size() == 1);
  CHECK(terms[0].fragment[0].kind == SliceKind::pos_cross);
}

TEST_CASE("phi_tq cup images") {
  for (Chirality c : {Chirality::cw, Chirality::ccw}) {
    const auto terms = phi_tq().local_image(Slice::cup(0, c, Var::t), {});
    std::map<Var, Scalar> coeff;
    for (const auto& t : terms) {
      REQUIRE(t.output.size() == 2);
      CHECK(t.output[0].color == t.output[1].color);
      coeff[t.output[0].color] = t.coeff;
    }
    CHECK(coeff.size() == 2);
    // a ccw circle closes with unit caps; a cw circle moves the entries to the caps
    const auto caps_t = phi_tq().local_image(Slice::cap(0, c), terms[0].output);
    const auto caps_q = phi_tq().local_image(Slice::cap(0, c), terms[1].output);
    REQUIRE(caps_t.size() == 1);
    REQUIRE(caps_q.size() == 1);
    std::map<Var, Scalar> loop;
    loop[terms[0].output[0].color] = terms[0].coeff * caps_t[0].coeff;
    loop[terms[1].output[0].color] = terms[1].coeff * caps_q[0].coeff;
    const bool ccw = c == Chirality::ccw;
    CHECK(loop[Var::t] == v(Var::q, ccw ? 1 : -1));
    CHECK(loop[Var::q] == v(Var::t, ccw ? -1 : 1));
  }
  // ccw cup (left end down): the q and t^-1 entries; cw cup: unit entries
  std::map<Var, Scalar> ccw, cw;
  for (const auto& t : phi_tq().local_image(Slice::cup(0, Chirality::ccw, Var::t), {}))
    ccw[t.output[0].color] = t.coeff;
  for (const auto& t : phi_tq().local_image(Slice::cup(0, Chirality::cw, Var::t), {}))
    cw[t.output[0].color] = t.coeff;
  CHECK(ccw[Var::t] == v(Var::q));
  CHECK(ccw[Var::q] == v(Var::t, -1));
  CHECK(cw[Var::t] == Scalar(1));
  CHECK(cw[Var::q] == Scalar(1));
}

TEST_CASE("chi cup column") {
  std::map<std::string, Scalar> col;
  for (const auto& t : chi().local_image(Slice::cup(0, Chirality::none, Var::s), {})) {
    REQUIRE(t.output.size() == 2);
    const Strand& l = t.output[0];
    col[l.dir == Dir::up ? "+-" : l.dir == Dir::down ? "-+" : "00"] = t.coeff;
  }
  REQUIRE(col.size() == 3);
  CHECK(col["+-"] == v(Var::t, -1) * v(Var::a, -1));
  CHECK(col["-+"] == v(Var::a) * v(Var::q, -1));
  CHECK(col["00"] == v(Var::t, -1));
}

TEST_CASE("local images reject foreign states") {
  const Boundary ss{{Var::s, Dir::none}, {Var::s, Dir::none}};
  CHECK_THROWS(phi_tq().local_image(Slice::cross(0, true), ss));
}

TEST_CASE("expansion of the unknot under phi_tq") {
  const auto terms = expand(phi_tq(), circle(Chirality::ccw));
  REQUIRE(terms.size() == 2);
  std::map<Var, Scalar> w;
  for (const auto& t : terms) w[colors_of(t.word).at(0)] = t.weight;
  CHECK(w[Var::t] == v(Var::q));
  CHECK(w[Var::q] == v(Var::t, -1));
}

TEST_CASE("expansion of the unknot under psi") {
  const auto terms = expand(psi(), circle(Chirality::ccw));
  REQUIRE(terms.size() == 2);
  Scalar total;
  for (const auto& t : terms) {
    CHECK(colors_of(t.word) == std::vector<Var>{Var::t});
    total += t.weight;
  }
  CHECK(total == v(Var::t, -1) * v(Var::q) + v(Var::t) * v(Var::q, -1));
  const auto r = verify_recursion(psi(), circle(Chirality::ccw));
  CHECK(r.equal);
  CHECK(r.rhs == (v(Var::t, -1) * v(Var::q) + v(Var::t) * v(Var::q, -1)) * constants::homfly_loop(Var::t));
}

TEST_CASE("expansion of the unknot under chi") {
  const auto terms = expand(chi(), circle(Chirality::ccw));
  REQUIRE(terms.size() == 3);
  std::size_t kauffman_circles = 0;
  for (const auto& t : terms)
    if (colors_of(t.word) == std::vector<Var>{Var::s}) {
      ++kauffman_circles;
      CHECK(t.weight == Scalar(1));
    }
  CHECK(kauffman_circles == 1);
  CHECK(verify_recursion(chi(), circle(Chirality::ccw)).equal);
}

TEST_CASE("phi_tq on the unknot reproduces q delta_H + t^-1") {
  const auto r = verify_recursion(phi_tq(), circle(Chirality::ccw));
  const Scalar tq = v(Var::t) * v(Var::q);
  CHECK(r.lhs == (tq - tq.pow(-1)) * Scalar(LaurentPoly(1), 1));
  CHECK(r.rhs == v(Var::q) * constants::homfly_loop(Var::t) + v(Var::t, -1));
  CHECK(r.equal);
  CHECK(r.term_count == 2);
}

TEST_CASE("expansion terms are well colored") {
  for (FunctorId id : FunctorSpec::all()) {
    const FunctorSpec& spec = FunctorSpec::get(id);
    for (const auto& e : link_table())
      for (const auto& t : expand(spec, e.primary())) {
        CHECK_FALSE(t.weight.is_zero());
        const ComponentMap m = validate(t.word);
        for (const auto& c : m.components) {
          CHECK(c.closed);
          CHECK(spec.target_kinds().count(c.color) == 1);
          CHECK(c.oriented == (spec.target_kinds().at(c.color) == SkeinKind::homfly));
        }
      }
  }
}

TEST_CASE("phi weights are integer Laurent polynomials") {
  for (FunctorId id : {FunctorId::phi_tq, FunctorId::phi_su})
    for (const auto& e : link_table())
      for (const MorseWord& w : e.presentations)
        for (const auto& t : expand(FunctorSpec::get(id), w)) CHECK(t.weight.denom_pow() == 0);
}

TEST_CASE("expansion is monoidal on split unions") {
  const MorseWord a = find_link("hopf")->primary(), b = find_link("trefoil")->primary();
  for (FunctorId id : FunctorSpec::all()) {
    const FunctorSpec& spec = FunctorSpec::get(id);
    std::map<std::string, Scalar> product;
    for (const auto& x : expand(spec, a))
      for (const auto& y : expand(spec, b))
        product[render_morse(disjoint_union(x.word, y.word))] += x.weight * y.weight;
    CHECK(by_word(expand(spec, disjoint_union(a, b))) == product);
  }
}

TEST_CASE("expansion is deterministic and sorted") {
  const MorseWord w = find_link("figure8")->primary();
  const auto a = expand(chi(), w), b = expand(chi(), w);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].weight == b[i].weight);
    CHECK(a[i].word == b[i].word);
    if (i > 0) CHECK(render_morse(a[i - 1].word) < render_morse(a[i].word));
  }
}

TEST_CASE("recursion identity on every table link, serial and parallel") {
  for (FunctorId id : FunctorSpec::all()) {
    const FunctorSpec& spec = FunctorSpec::get(id);
    for (const auto& e : link_table())
      for (const MorseWord& w : e.presentations) {
        CAPTURE(spec.name());
        CAPTURE(e.name);
        const auto s = verify_recursion(spec, w, Execution::serial, e.name);
        const auto p = verify_recursion(spec, w, Execution::parallel, e.name);
        CHECK(s.equal);
        CHECK(p.equal);
        CHECK(s.lhs == p.lhs);
        CHECK(s.rhs == p.rhs);
        CHECK(s.term_count == p.term_count);
        CHECK(s.link == e.name);
      }
  }
}

TEST_CASE("recursion identity on Reidemeister III fixtures") {
  for (const char* name : {"r3_a", "r3_b", "r3_mixed_a", "r3_mixed_b"}) {
    const MorseWord w = resolve_link(kFixtures + "/" + name + ".braid").primary();
    for (FunctorId id : FunctorSpec::all()) CHECK(verify_recursion(FunctorSpec::get(id), w).equal);
  }
  // both sides of each move expand to sums with equal total value
  for (auto [x, y] : {std::pair{"r3_a", "r3_b"}, std::pair{"r3_mixed_a", "r3_mixed_b"}}) {
    const MorseWord wx = resolve_link(kFixtures + "/" + x + ".braid").primary();
    const MorseWord wy = resolve_link(kFixtures + "/" + y + ".braid").primary();
    for (FunctorId id : FunctorSpec::all()) {
      const FunctorSpec& spec = FunctorSpec::get(id);
      CHECK(verify_recursion(spec, wx).rhs == verify_recursion(spec, wy).rhs);
    }
  }
}

TEST_CASE("recursion identity on unoriented and colored fixtures") {
  const MorseWord tref = resolve_link(kFixtures + "/unoriented_trefoil.morse").primary();
  CHECK(verify_recursion(psi(), tref).equal);
  CHECK(verify_recursion(chi(), tref).equal);
  CHECK_THROWS(verify_recursion(phi_tq(), tref));
}

TEST_CASE("a corrupted table fails the identity") {
  // Scaling one expansion weight must break the recursion sum.
  const MorseWord w = find_link("trefoil")->primary();
  auto terms = expand(psi(), w);
  REQUIRE(terms.size() > 1);
  const auto ctx = psi().target_context();
  Scalar rhs;
  for (std::size_t i = 0; i < terms.size(); ++i)
    rhs += (i == 0 ? Scalar(2) : Scalar(1)) * terms[i].weight * ctx.evaluate(terms[i].word);
  CHECK_FALSE(rhs.substitute(psi().target_binding()) == verify_recursion(psi(), w).lhs);
}
