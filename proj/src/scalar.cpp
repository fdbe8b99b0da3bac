#include "skeinrec/scalar.hpp"

#include <ostream>
#include <sstream>

namespace skeinrec {

char var_name(Var v) {
  static constexpr char names[kNumVars] = {'q', 't', 's', 'u', 'a'};
  return names[static_cast<std::size_t>(v)];
}

Var var_from_char(char c) {
  switch (c) {
    case 'q': return Var::q;
    case 't': return Var::t;
    case 's': return Var::s;
    case 'u': return Var::u;
    case 'a': return Var::a;
    default: throw std::invalid_argument(std::string("unknown variable '") + c + "'");
  }
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_.emplace(Exponents{}, Integer(c));
}

LaurentPoly LaurentPoly::monomial(const Exponents& e, Integer c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(e, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::var(Var v, int power) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = power;
  return monomial(e);
}

bool LaurentPoly::is_unit() const {
  if (!is_monomial()) return false;
  const auto& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw ScalarError("not a unit of the Laurent ring: " + to_string());
  Exponents e = terms_.begin()->first;
  for (auto& x : e) x = -x;
  return monomial(e, terms_.begin()->second);
}

std::pair<int, int> LaurentPoly::degree_range(Var v) const {
  if (terms_.empty()) return {0, 0};
  const auto i = static_cast<std::size_t>(v);
  int lo = terms_.begin()->first[i], hi = lo;
  for (const auto& [e, c] : terms_) {
    lo = std::min(lo, e[i]);
    hi = std::max(hi, e[i]);
  }
  return {lo, hi};
}

bool LaurentPoly::depends_on(Var v) const {
  const auto i = static_cast<std::size_t>(v);
  for (const auto& [e, c] : terms_)
    if (e[i] != 0) return true;
  return false;
}

void LaurentPoly::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly r;
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kNumVars; ++i) e[i] = ex[i] + ey[i];
      r.add_term(e, cx * cy);
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) return unit_inverse().pow(-n);
  LaurentPoly result(1), base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::substitute(const Bindings& b) const {
  if (b.empty()) return *this;
  for (const auto& [v, image] : b) {
    if (v == Var::q) throw ScalarError("substitution into q is not allowed");
    if (image.is_zero()) throw ScalarError("binding target must be nonzero");
    auto [lo, hi] = degree_range(v);
    if (lo < 0 && !image.is_unit())
      throw ScalarError(std::string("binding for ") + var_name(v) +
                        " is not invertible but the variable appears with negative exponent");
  }
  // Cache powers per bound variable.
  std::map<std::pair<Var, int>, LaurentPoly> cache;
  auto power = [&](Var v, int n) -> const LaurentPoly& {
    auto key = std::make_pair(v, n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, b.at(v).pow(n)).first;
    return it->second;
  };
  LaurentPoly result;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    LaurentPoly term(1);
    for (const auto& [v, image] : b) {
      const auto i = static_cast<std::size_t>(v);
      if (rest[i] != 0) {
        term *= power(v, rest[i]);
        rest[i] = 0;
      }
    }
    result += term * monomial(rest, c);
  }
  return result;
}

LaurentPoly LaurentPoly::invert_vars(std::initializer_list<Var> vars) const {
  LaurentPoly r;
  for (const auto& [key, c] : terms_) {
    Exponents e = key;
    for (Var v : vars) e[static_cast<std::size_t>(v)] *= -1;
    r.terms_.emplace(e, c);
  }
  return r;
}

bool LaurentPoly::divide_by_z(LaurentPoly& quotient) const {
  // P / (q - q^-1) = q P / (q^2 - 1): synthetic division by q^2 - 1 in the
  // q-degree, with coefficients in the remaining variables.
  constexpr std::size_t iq = 0;
  std::map<int, LaurentPoly> work;  // q-degree -> coefficient (q exponent zeroed)
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[iq] = 0;
    work[e[iq] + 1] += monomial(rest, c);
  }
  if (work.empty()) {
    quotient = LaurentPoly();
    return true;
  }
  const int lo = work.begin()->first;
  std::map<int, LaurentPoly> q_coeffs;
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const int d = top->first;
    if (d < lo + 2) return false;
    LaurentPoly c = std::move(top->second);
    work.erase(top);
    auto& below = work[d - 2];
    below += c;
    if (below.is_zero()) work.erase(d - 2);
    q_coeffs[d - 2] += c;
  }
  LaurentPoly result;
  for (const auto& [d, c] : q_coeffs) result += c * var(Var::q, d);
  quotient = std::move(result);
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    std::string mono;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += var_name(static_cast<Var>(i));
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << mono;
    }
    first = false;
  }
  return os.str();
}

// --------------------------------------------------------------------- Scalar

const LaurentPoly& Scalar::z() {
  static const LaurentPoly value = LaurentPoly::var(Var::q) - LaurentPoly::var(Var::q, -1);
  return value;
}

Scalar::Scalar(LaurentPoly num, int denom_pow) : num_(std::move(num)), denom_pow_(denom_pow) {
  if (denom_pow < 0) throw ScalarError("negative denominator power");
  canonicalize();
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    denom_pow_ = 0;
    return;
  }
  LaurentPoly quotient;
  while (denom_pow_ > 0 && num_.divide_by_z(quotient)) {
    num_ = std::move(quotient);
    --denom_pow_;
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int k = std::max(denom_pow_, o.denom_pow_);
  num_ = num_ * z().pow(k - denom_pow_) + o.num_ * z().pow(k - o.denom_pow_);
  denom_pow_ = k;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  num_ *= o.num_;
  denom_pow_ += o.denom_pow_;
  canonicalize();
  return *this;
}

Scalar Scalar::pow(int n) const {
  if (n < 0) {
    if (denom_pow_ != 0) throw ScalarError("cannot invert a scalar with a denominator");
    return Scalar(num_.pow(n));
  }
  Scalar result(1), base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Scalar Scalar::substitute(const Bindings& b) const {
  return Scalar(num_.substitute(b), denom_pow_);
}

Scalar Scalar::invert_vars(std::initializer_list<Var> vars) const {
  LaurentPoly n = num_.invert_vars(vars);
  bool flips_q = false;
  for (Var v : vars) flips_q = flips_q || v == Var::q;
  // (q^-1 - q)^k = (-1)^k (q - q^-1)^k
  if (flips_q && denom_pow_ % 2 == 1) n = -n;
  return Scalar(std::move(n), denom_pow_);
}

std::string Scalar::to_string() const {
  if (denom_pow_ == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(q - q^-1)^" + std::to_string(denom_pow_);
}

bool eq(const Scalar& x, const Scalar& y) { return (x - y).is_zero(); }

namespace constants {
LaurentPoly z() { return Scalar::z(); }

Scalar homfly_loop(Var framing) {
  return Scalar(LaurentPoly::var(framing) - LaurentPoly::var(framing, -1), 1);
}

Scalar kauffman_loop(Var framing) { return Scalar(1) + homfly_loop(framing); }
}  // namespace constants

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace skeinrec
