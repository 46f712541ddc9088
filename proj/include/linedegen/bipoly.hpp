#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "linedegen/errors.hpp"

namespace linedegen {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent pair of a monomial a^p b^q. The defaulted ordering is
/// lexicographic with a > b, so the largest monomial sits at rbegin().
struct Monomial {
  unsigned a = 0;
  unsigned b = 0;

  auto operator<=>(const Monomial&) const = default;

  unsigned degree() const { return a + b; }
};

/// Exact bivariate polynomial in the Chern roots a, b with arbitrary-precision
/// integer coefficients. Zero coefficients are never stored; the zero
/// polynomial has an empty term map and no degree.
class BiPoly {
 public:
  using Terms = std::map<Monomial, BigInt>;

  BiPoly() = default;

  static BiPoly constant(const BigInt& c) { return term(c, 0, 0); }

  static BiPoly term(const BigInt& c, unsigned p, unsigned q) {
    BiPoly r;
    r.accumulate({p, q}, c);
    return r;
  }

  /// ca * a + cb * b
  static BiPoly linear(const BigInt& ca, const BigInt& cb) {
    BiPoly r;
    r.accumulate({1, 0}, ca);
    r.accumulate({0, 1}, cb);
    return r;
  }

  static BiPoly a() { return term(1, 1, 0); }
  static BiPoly b() { return term(1, 0, 1); }
  static BiPoly one() { return constant(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Total degree; std::nullopt for the zero polynomial.
  std::optional<unsigned> degree() const {
    if (terms_.empty()) return std::nullopt;
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  BigInt coeff(unsigned p, unsigned q) const {
    auto it = terms_.find({p, q});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// True when every term has total degree `deg`. The zero polynomial is
  /// homogeneous of every degree.
  bool is_homogeneous(unsigned deg) const {
    for (const auto& [m, c] : terms_)
      if (m.degree() != deg) return false;
    return true;
  }

  /// The polynomial with a and b exchanged.
  BiPoly swapped() const {
    BiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.b, m.a}, c);
    return r;
  }

  /// Adds c * a^m.a b^m.b in place, dropping the entry if it cancels.
  void accumulate(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BiPoly& operator+=(const BiPoly& y) {
    for (const auto& [m, c] : y.terms_) accumulate(m, c);
    return *this;
  }

  BiPoly& operator-=(const BiPoly& y) {
    for (const auto& [m, c] : y.terms_) accumulate(m, -c);
    return *this;
  }

  BiPoly& operator*=(const BigInt& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend BiPoly operator+(BiPoly x, const BiPoly& y) { return x += y; }
  friend BiPoly operator-(BiPoly x, const BiPoly& y) { return x -= y; }
  friend BiPoly operator-(BiPoly x) {
    for (auto& [m, c] : x.terms_) c = -c;
    return x;
  }
  friend BiPoly operator*(BiPoly x, const BigInt& s) { return x *= s; }
  friend BiPoly operator*(const BigInt& s, BiPoly x) { return x *= s; }

  friend BiPoly operator*(const BiPoly& x, const BiPoly& y) {
    BiPoly r;
    for (const auto& [mx, cx] : x.terms_)
      for (const auto& [my, cy] : y.terms_)
        r.accumulate({mx.a + my.a, mx.b + my.b}, cx * cy);
    return r;
  }

  BiPoly& operator*=(const BiPoly& y) { return *this = *this * y; }

  friend bool operator==(const BiPoly& x, const BiPoly& y) { return x.terms_ == y.terms_; }

  /// Human-readable rendering, highest lex monomial first: "2*a^2 + 5*a*b + 2*b^2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      bool has_var = m.a > 0 || m.b > 0;
      bool wrote = false;
      if (mag != 1 || !has_var) {
        os << mag;
        wrote = true;
      }
      auto var = [&](char v, unsigned e) {
        if (e == 0) return;
        if (wrote) os << '*';
        os << v;
        if (e > 1) os << '^' << e;
        wrote = true;
      };
      var('a', m.a);
      var('b', m.b);
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const BiPoly& x) { return os << x.str(); }

 private:
  Terms terms_;
};

inline BiPoly add(const BiPoly& x, const BiPoly& y) { return x + y; }
inline BiPoly mul(const BiPoly& x, const BiPoly& y) { return x * y; }

inline BiPoly pow(BiPoly base, unsigned e) {
  BiPoly r = BiPoly::one();
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return r;
}

inline bool is_symmetric(const BiPoly& x) { return x.swapped() == x; }
inline bool is_antisymmetric(const BiPoly& x) { return x.swapped() == -x; }

/// Exact division by a non-zero polynomial using lex leading terms. A single
/// polynomial is a Groebner basis of the ideal it generates, so the
/// remainder is zero exactly when `divisor` divides `x`.
inline std::optional<BiPoly> try_divide(BiPoly x, const BiPoly& divisor) {
  if (divisor.is_zero()) throw ArgumentError("division by the zero polynomial");
  const auto& [lead_m, lead_c] = *divisor.terms().rbegin();
  BiPoly quotient;
  while (!x.is_zero()) {
    const auto [m, c] = *x.terms().rbegin();
    if (m.a < lead_m.a || m.b < lead_m.b || c % lead_c != 0) return std::nullopt;
    BiPoly step = BiPoly::term(c / lead_c, m.a - lead_m.a, m.b - lead_m.b);
    x -= step * divisor;
    quotient += step;
  }
  return quotient;
}

inline BiPoly divide_exact(const BiPoly& x, const BiPoly& divisor) {
  auto q = try_divide(x, divisor);
  if (!q) throw InvariantViolation("(" + divisor.str() + ") does not divide " + x.str());
  return *q;
}

/// a - b
inline BiPoly vandermonde() { return BiPoly::linear(1, -1); }

/// Returns q with q * (a - b) = x.
inline BiPoly divide_by_vandermonde(const BiPoly& x) { return divide_exact(x, vandermonde()); }

/// Index (p, q) of a two-row partition / Schubert class, p >= q >= 0.
class Partition2 {
 public:
  Partition2(unsigned p, unsigned q) : p_(p), q_(q) {
    if (p < q) throw ArgumentError("partition requires p >= q");
  }

  unsigned p() const { return p_; }
  unsigned q() const { return q_; }
  unsigned size() const { return p_ + q_; }

  auto operator<=>(const Partition2&) const = default;

 private:
  unsigned p_;
  unsigned q_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition2& part) {
  return os << '(' << part.p() << ',' << part.q() << ')';
}

/// s_(p,q)(a,b) = (a^(p+1) b^q - a^q b^(p+1)) / (a - b) = (ab)^q h_(p-q)(a,b)
inline BiPoly schur_polynomial(const Partition2& part) {
  BiPoly r;
  unsigned w = part.p() - part.q();
  for (unsigned i = 0; i <= w; ++i) r.accumulate({part.q() + w - i, part.q() + i}, 1);
  return r;
}

/// Symmetric polynomial written in the Schur basis.
class SchurExpansion {
 public:
  using Coeffs = std::map<Partition2, BigInt>;

  SchurExpansion() = default;

  const Coeffs& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  BigInt coeff(const Partition2& part) const {
    auto it = coeffs_.find(part);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  void accumulate(const Partition2& part, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(part, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  /// Sum of coeffs[(p,q)] * s_(p,q)(a,b).
  BiPoly reconstruct() const {
    BiPoly r;
    for (const auto& [part, c] : coeffs_) r += c * schur_polynomial(part);
    return r;
  }

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

 private:
  Coeffs coeffs_;
};

/// Schur-basis expansion of a symmetric polynomial. Multiplies by (a - b) and
/// peels the lex-largest monomial a^(p+1) b^q of the resulting antisymmetric
/// polynomial one bialternant at a time; each step strictly lowers the
/// leading monomial.
inline SchurExpansion to_schur(const BiPoly& x) {
  if (!is_symmetric(x)) throw PreconditionError("to_schur: polynomial is not symmetric: " + x.str());
  BiPoly alt = x * vandermonde();
  SchurExpansion out;
  while (!alt.is_zero()) {
    const auto [m, c] = *alt.terms().rbegin();
    // Antisymmetric leading term has a-exponent strictly above b-exponent.
    if (m.a <= m.b) throw InvariantViolation("to_schur: bialternant peeling lost antisymmetry");
    Partition2 part(m.a - 1, m.b);
    BiPoly bialternant = BiPoly::term(c, m.a, m.b);
    bialternant.accumulate({m.b, m.a}, -c);
    alt -= bialternant;
    out.accumulate(part, c);
  }
  return out;
}

}  // namespace linedegen
