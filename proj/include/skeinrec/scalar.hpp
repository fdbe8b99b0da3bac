#pragma once

// Exact coefficient ring: integer Laurent polynomials in (q, t, s, u, a)
// divided by a nonnegative power of z = q - q^-1.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace skeinrec {

using Integer = boost::multiprecision::cpp_int;

enum class Var : std::uint8_t { q = 0, t = 1, s = 2, u = 3, a = 4 };
inline constexpr std::size_t kNumVars = 5;

char var_name(Var v);
Var var_from_char(char c);  // throws std::invalid_argument

using Exponents = std::array<int, kNumVars>;

class ScalarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LaurentPoly;
using Bindings = std::map<Var, LaurentPoly>;

class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT: integers embed in the ring

  static LaurentPoly monomial(const Exponents& e, Integer c = 1);
  static LaurentPoly var(Var v, int power = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // +-1 times a monomial, i.e. a unit of the Laurent ring.
  bool is_unit() const;
  LaurentPoly unit_inverse() const;  // throws unless is_unit()

  // Exponent range of a single variable; {0,0} for the zero polynomial.
  std::pair<int, int> degree_range(Var v) const;
  bool depends_on(Var v) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(int n) const;  // negative n requires a unit

  // Ring homomorphism fixing every unbound variable.
  LaurentPoly substitute(const Bindings& b) const;
  // Involution sending each listed variable v to v^-1.
  LaurentPoly invert_vars(std::initializer_list<Var> vars) const;

  // Exact quotient by (q - q^-1) if it exists.
  bool divide_by_z(LaurentPoly& quotient) const;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Integer& c);
  TermMap terms_;
};

// num / (q - q^-1)^denom_pow, always kept canonical: denom_pow is 0 or num
// is not divisible by (q - q^-1).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long c) : num_(c) {}  // NOLINT
  Scalar(LaurentPoly num) : num_(std::move(num)) {}  // NOLINT
  Scalar(LaurentPoly num, int denom_pow);

  static Scalar var(Var v, int power = 1) { return Scalar(LaurentPoly::var(v, power)); }
  // z = q - q^-1
  static const LaurentPoly& z();

  const LaurentPoly& num() const { return num_; }
  int denom_pow() const { return denom_pow_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return denom_pow_ == 0; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  Scalar operator-() const { return Scalar(-num_, denom_pow_); }
  Scalar pow(int n) const;  // n >= 0, or any n for a unit numerator with k = 0

  // Canonical forms are unique, so structural equality is value equality.
  friend bool operator==(const Scalar&, const Scalar&) = default;

  // q is never a binding source: the denominator must stay fixed.
  Scalar substitute(const Bindings& b) const;
  // v -> v^-1 for the listed variables; q may be listed (denominator sign flips).
  Scalar invert_vars(std::initializer_list<Var> vars) const;

  std::string to_string() const;

 private:
  void canonicalize();
  LaurentPoly num_;
  int denom_pow_ = 0;
};

bool eq(const Scalar& x, const Scalar& y);

// Frequently used constants.
namespace constants {
LaurentPoly z();                            // q - q^-1
Scalar homfly_loop(Var framing);            // (v - v^-1)/(q - q^-1)
Scalar kauffman_loop(Var framing);          // 1 + (s - s^-1)/(q - q^-1)
}  // namespace constants

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace skeinrec
