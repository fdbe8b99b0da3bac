#pragma once

// Reads single coefficients out of functor images of two-strand generators.

#include <stdexcept>

#include "skeinrec/local_algebra.hpp"

namespace blocks {

using namespace skeinrec;

inline const Strand kPlus{Var::t, Dir::up}, kMinus{Var::t, Dir::down}, kZero{Var::s, Dir::none};

enum class Shape { identity, crossing, turnback };

inline Shape shape_of(const MorseWord& w) {
  if (w.slices.empty()) return Shape::identity;
  if (w.slices.size() == 1 && w.slices[0].is_crossing()) return Shape::crossing;
  if (w.slices.size() == 2 && w.slices[0].kind == SliceKind::cap && w.slices[1].kind == SliceKind::cup)
    return Shape::turnback;
  throw std::logic_error("unexpected two-strand tangle in a generator image");
}

// Total coefficient of one tangle shape in the block input -> output.
inline Scalar entry(const BlockMatrix& m, const Boundary& in, const Boundary& out, Shape s) {
  Scalar c;
  for (const Block& b : m)
    if (b.input == in && b.output == out)
      for (const auto& t : b.terms)
        if (shape_of(t.word) == s) c += t.weight;
  return c;
}

inline Scalar over_z() { return Scalar(LaurentPoly(1), 1); }

// Coefficients entering the psi invertibility computation: a z + b t + d t^-1 = 0.
struct PsiCoefficients {
  Scalar a, b, d;
};

inline PsiCoefficients psi_coefficients() {
  const auto& psi = FunctorSpec::get(FunctorId::psi);
  const BlockMatrix pos = functor_block(psi, Generator::pos_cross);
  const BlockMatrix neg = functor_block(psi, Generator::neg_cross);
  return {entry(pos, {kPlus, kMinus}, {kPlus, kMinus}, Shape::identity),
          entry(pos, {kPlus, kMinus}, {kPlus, kMinus}, Shape::turnback),
          entry(neg, {kMinus, kPlus}, {kMinus, kPlus}, Shape::turnback)};
}

// The three chi skein entries, before the binding s = a^2 q^-1. Monomials in
// a and q are read off the chi tables; s-dependence comes from BMW2 products.
struct ChiEntries {
  Scalar star1, star2, star3;
  Scalar a, a_inv;
};

inline ChiEntries chi_entries() {
  const auto& chi = FunctorSpec::get(FunctorId::chi);
  const Scalar z = Scalar::z(), t = Scalar::var(Var::t);
  const BMW2 X = BMW2::X(), e = BMW2::e(), Xi = BMW2::X_inverse();
  const Scalar delta = (e * e).c_e, x_on_e = (X * e).c_e, xi_on_e = (Xi * e).c_e;
  const BlockMatrix pos = functor_block(chi, Generator::pos_cross);
  const BlockMatrix neg = functor_block(chi, Generator::neg_cross);
  const BlockMatrix turn = functor_block(chi, Generator::turnback);
  const Scalar a_over_q = entry(turn, {kZero, kZero}, {kMinus, kPlus}, Shape::turnback) * t.pow(-1);
  const Scalar a_inv = -entry(pos, {kZero, kZero}, {kPlus, kMinus}, Shape::turnback) * over_z();
  const Scalar a = entry(neg, {kMinus, kPlus}, {kZero, kZero}, Shape::turnback) * over_z();
  const Scalar q_over_a = -entry(pos, {kPlus, kMinus}, {kZero, kZero}, Shape::turnback) * over_z() * t;
  return {z * z - z * x_on_e + z * xi_on_e - z * z * delta, z * a_over_q - z * a_inv * xi_on_e,
          -z * q_over_a + z * a * x_on_e, a, a_inv};
}

}  // namespace blocks
