#include <doctest.h>

#include <random>

#include "block_entries.hpp"
#include "skeinrec/io.hpp"
#include "skeinrec/local_algebra.hpp"

using namespace skeinrec;

namespace {

const Scalar z{Scalar::z()};

Scalar v(Var x, int e = 1) { return Scalar::var(x, e); }

using blocks::entry;
using blocks::Shape;
const Strand P = blocks::kPlus, M = blocks::kMinus, Z = blocks::kZero;

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> expo(-2, 2), coef(-4, 4), k(0, 1);
  LaurentPoly p;
  for (int i = 0; i < 3; ++i) {
    Exponents e{};
    e[0] = expo(rng);
    e[2] = expo(rng);
    p += LaurentPoly::monomial(e, coef(rng));
  }
  return Scalar(p, k(rng));
}

}  // namespace

TEST_CASE("Hecke algebra rules") {
  const Hecke2 X = Hecke2::X(), one = Hecke2::one();
  CHECK(X * X == Hecke2{Scalar(1), z});
  CHECK(X * Hecke2::X_inverse() == one);
  CHECK(Hecke2::X_inverse() * X == one);
  CHECK(X * Hecke2{-z, Scalar(1)} == one);
}

TEST_CASE("BMW algebra rules") {
  const BMW2 X = BMW2::X(), e = BMW2::e(), Xi = BMW2::X_inverse();
  CHECK(X * Xi == BMW2::one());
  CHECK(Xi * X == BMW2::one());
  CHECK(X * e == BMW2{Scalar(0), Scalar(0), v(Var::s, -1)});
  CHECK(e * X == BMW2{Scalar(0), Scalar(0), v(Var::s, -1)});
  CHECK(Xi * e == BMW2{Scalar(0), Scalar(0), v(Var::s)});
  CHECK(e * e == BMW2{Scalar(0), Scalar(0), constants::kauffman_loop(Var::s)});
  // X - X^-1 = z (1 - e)
  const BMW2 lhs{X.c_id - Xi.c_id, X.c_X - Xi.c_X, X.c_e - Xi.c_e};
  CHECK(lhs == BMW2{z, Scalar(0), -z});
  // framing variable follows the element
  CHECK((BMW2::X(Var::u) * BMW2::e(Var::u)).c_e == v(Var::u, -1));
}

TEST_CASE("normal-form multiplication is associative") {
  std::mt19937 rng(77);
  for (int i = 0; i < 200; ++i) {
    const Hecke2 a{random_scalar(rng), random_scalar(rng)}, b{random_scalar(rng), random_scalar(rng)},
        c{random_scalar(rng), random_scalar(rng)};
    CHECK((a * b) * c == a * (b * c));
    const BMW2 x{random_scalar(rng), random_scalar(rng), random_scalar(rng)},
        y{random_scalar(rng), random_scalar(rng), random_scalar(rng)},
        w{random_scalar(rng), random_scalar(rng), random_scalar(rng)};
    CHECK((x * y) * w == x * (y * w));
    // distributivity against the generic interface
    CHECK(algebra_mul(x, algebra_add(y, w)) == algebra_add(algebra_mul(x, y), algebra_mul(x, w)));
  }
}

TEST_CASE("algebra type mismatch throws") {
  CHECK_THROWS_AS(algebra_mul(Hecke2::X(), BMW2::X()), FunctorError);
  CHECK_THROWS_AS(algebra_add(MixedPair2{Scalar(1)}, BMW2::e()), FunctorError);
  CHECK_THROWS_AS(algebra_mul(BMW2::X(Var::s), BMW2::X(Var::u)), FunctorError);
  CHECK(algebra_is_zero(algebra_scale(Scalar(0), BMW2::X())));
  CHECK(algebra_to_string(Hecke2::X()) == "Hecke2{id: 0, X: 1}");
}

TEST_CASE("psi positive crossing entry") {
  const BlockMatrix m = functor_block(FunctorSpec::get(FunctorId::psi), Generator::pos_cross);
  const Scalar a = entry(m, {P, M}, {P, M}, Shape::identity);
  const Scalar b = entry(m, {P, M}, {P, M}, Shape::turnback);
  CHECK(a == z);
  CHECK(b == -z * v(Var::t, -1) * v(Var::q));
  CHECK(entry(m, {P, M}, {M, P}, Shape::crossing) == Scalar(1));
}

TEST_CASE("psi invertibility coefficient identity") {
  const auto c = blocks::psi_coefficients();
  CHECK(c.a == z);
  CHECK(c.b == -z * v(Var::t, -1) * v(Var::q));
  CHECK(c.d == z * v(Var::t) * v(Var::q, -1));
  CHECK((c.a * z + c.b * v(Var::t) + c.d * v(Var::t, -1)).is_zero());
}

TEST_CASE("chi skein coefficient identities") {
  const auto c = blocks::chi_entries();
  const Bindings& bind = FunctorSpec::get(FunctorId::chi).target_binding();
  CHECK(c.a * c.a_inv == Scalar(1));
  CHECK(c.a == v(Var::a));
  CHECK(c.star1.is_zero());
  CHECK(c.star2.substitute(bind).is_zero());
  CHECK(c.star3.substitute(bind).is_zero());
  // the last two need the binding s = a^2 q^-1
  CHECK_FALSE(c.star2.is_zero());
  CHECK_FALSE(c.star3.is_zero());
}

TEST_CASE("every relation holds for every functor") {
  for (FunctorId id : FunctorSpec::all())
    for (Relation r : all_relations()) {
      const RelationReport rep = check_relation(FunctorSpec::get(id), r);
      CAPTURE(rep.functor);
      CAPTURE(rep.relation);
      CHECK(rep.holds);
      CHECK(rep.instances > 0);
      CHECK_FALSE(rep.residual.empty());
      for (const Block& b : rep.residual) CHECK(b.is_zero());
    }
}

TEST_CASE("normal forms agree with closure pairings") {
  // A block whose normal form is zero has zero pairings and conversely.
  for (FunctorId id : FunctorSpec::all())
    for (Generator g : {Generator::pos_cross, Generator::neg_cross, Generator::identity, Generator::turnback})
      for (const Block& b : functor_block(FunctorSpec::get(id), g)) {
        if (!b.normal_form) continue;
        bool pairings_zero = true;
        for (const auto& [name, val] : b.pairings) pairings_zero = pairings_zero && val.is_zero();
        CHECK(algebra_is_zero(*b.normal_form) == pairings_zero);
      }
}

TEST_CASE("negative controls are detected") {
  const Boundary up2{P, P};
  const MorseWord xp{up2, {Slice::cross(0, true)}}, xm{up2, {Slice::cross(0, false)}}, id{up2, {}};
  for (FunctorId f : {FunctorId::phi_tq, FunctorId::phi_su}) {
    const auto& spec = FunctorSpec::get(f);
    CHECK(check_identity(spec, "skein", {{Scalar(1), xp}, {Scalar(-1), xm}, {-z, id}}).holds);
    CHECK_FALSE(check_identity(spec, "wrong skein", {{Scalar(1), xp}, {Scalar(-1), xm}, {-z * 2, id}}).holds);
    CHECK_FALSE(check_identity(spec, "no smoothing", {{Scalar(1), xp}, {Scalar(-1), xm}}).holds);
  }
  const Boundary ss{Z, Z};
  const MorseWord yp{ss, {Slice::cross(0, true)}}, ym{ss, {Slice::cross(0, false)}}, yid{ss, {}};
  const MorseWord turn{ss, {Slice::cap(0, Chirality::none), Slice::cup(0, Chirality::none, Var::s)}};
  for (FunctorId f : {FunctorId::psi, FunctorId::chi}) {
    const auto& spec = FunctorSpec::get(f);
    CHECK(check_identity(spec, "skein", {{Scalar(1), yp}, {Scalar(-1), ym}, {-z, yid}, {z, turn}}).holds);
    CHECK_FALSE(check_identity(spec, "sign flip", {{Scalar(1), yp}, {Scalar(-1), ym}, {-z, yid}, {-z, turn}}).holds);
    CHECK_FALSE(check_identity(spec, "crossing is not its mirror", {{Scalar(1), yp}, {Scalar(-1), ym}}).holds);
  }
}

TEST_CASE("trace closure") {
  const Boundary up2{P, P};
  const MorseWord x{up2, {Slice::cross(0, true)}};
  const MorseWord c = trace_closure(x);
  CHECK(is_closed(c));
  CHECK(validate(c).components.size() == 1);
  CHECK(validate(trace_closure({up2, {}})).components.size() == 2);
  CHECK(validate(trace_closure({{}, {}})).components.empty());
  CHECK_THROWS(trace_closure({up2, {Slice::cap(0, Chirality::cw)}}));
}

TEST_CASE("relation names") {
  for (Relation r : all_relations()) CHECK(parse_relation(relation_name(r)) == r);
  CHECK(all_relations().size() == 5);
  CHECK_THROWS(parse_relation("associativity"));
}
