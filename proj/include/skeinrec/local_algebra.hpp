#pragma once

// Two-strand skein algebras and the relation checks for the functors.
//
// Hecke2  (equal colors, parallel oriented):  X^2 = z X + 1
// BMW2    (equal colors, unoriented):         X - X^-1 = z (1 - e),
//                                             X e = e X = s^-1 e,  e e = delta_K e
// MixedPair2 (different colors): one-dimensional, crossings are transparent.
//
// A block of a functor image (input states -> output states) is a linear
// combination of target tangles. It vanishes iff every trace closure of it
// composed with a test fragment (identity, a crossing or the turnback) evaluates to
// zero; this pairing is nondegenerate on every block that occurs.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skeinrec/functors.hpp"

namespace skeinrec {

struct Hecke2 {
  Scalar c_id, c_X;
  static Hecke2 one() { return {Scalar(1), Scalar(0)}; }
  static Hecke2 X() { return {Scalar(0), Scalar(1)}; }
  static Hecke2 X_inverse();
  friend bool operator==(const Hecke2&, const Hecke2&) = default;
};

struct BMW2 {
  Scalar c_id, c_X, c_e;
  Var framing = Var::s;
  static BMW2 one(Var framing = Var::s) { return {Scalar(1), Scalar(0), Scalar(0), framing}; }
  static BMW2 X(Var framing = Var::s) { return {Scalar(0), Scalar(1), Scalar(0), framing}; }
  static BMW2 e(Var framing = Var::s) { return {Scalar(0), Scalar(0), Scalar(1), framing}; }
  static BMW2 X_inverse(Var framing = Var::s);
  friend bool operator==(const BMW2&, const BMW2&) = default;
};

struct MixedPair2 {
  Scalar c_id;
  friend bool operator==(const MixedPair2&, const MixedPair2&) = default;
};

using AlgebraElement = std::variant<Hecke2, BMW2, MixedPair2>;

// Throws FunctorError when the operands are of different types.
AlgebraElement algebra_mul(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement algebra_add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement algebra_scale(const Scalar& c, const AlgebraElement& x);
bool algebra_is_zero(const AlgebraElement& x);
std::string algebra_to_string(const AlgebraElement& x);

Hecke2 operator*(const Hecke2& x, const Hecke2& y);
BMW2 operator*(const BMW2& x, const BMW2& y);
MixedPair2 operator*(const MixedPair2& x, const MixedPair2& y);

// One block of a functor image or of a relation residual.
struct Block {
  std::string label;  // source configuration the block belongs to
  Boundary input, output;
  std::vector<ExpansionTerm> terms;
  // Set when every term factors through rows of a single algebra type.
  std::optional<AlgebraElement> normal_form;
  // (test fragment, closure pairing) for every fragment valid on the block.
  std::vector<std::pair<std::string, Scalar>> pairings;
  bool is_zero() const;
};

using BlockMatrix = std::vector<Block>;

enum class Generator { pos_cross, neg_cross, identity, turnback };

// Image of a two-strand generator. Oriented sources use upward parallel
// strands, except the turnback which needs an antiparallel pair.
BlockMatrix functor_block(const FunctorSpec& spec, Generator g);

enum class Relation { skein, pos_twist, neg_twist, invertibility, zigzag };

const std::vector<Relation>& all_relations();
std::string relation_name(Relation r);
Relation parse_relation(const std::string& name);

struct RelationReport {
  std::string functor;
  std::string relation;
  bool holds = false;
  std::size_t instances = 0;  // source configurations checked
  BlockMatrix residual;       // every block, zero or not
  double elapsed_ms = 0;
};

RelationReport check_relation(const FunctorSpec& spec, Relation r);

// Checks that the image of an arbitrary linear combination of source words
// (all with the given source boundary and a common target) vanishes.
RelationReport check_identity(const FunctorSpec& spec, const std::string& label,
                              const std::vector<std::pair<Scalar, MorseWord>>& combination);

// Trace closure of an endomorphism word (source == target): nested cups
// on the right, the word, then nested caps.
MorseWord trace_closure(const MorseWord& endo);

}  // namespace skeinrec
