#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "linedegen/bipoly.hpp"

namespace linedegen {

using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial over Q, coefficients lowest degree first,
/// trailing zeros trimmed.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(const Rational& c, std::size_t e) {
    std::vector<Rational> v(e + 1);
    v[e] = c;
    return UPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }

  friend UPoly operator+(const UPoly& x, const UPoly& y) {
    std::vector<Rational> v(std::max(x.c_.size(), y.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = x.coeff(i) + y.coeff(i);
    return UPoly(std::move(v));
  }

  friend UPoly operator-(const UPoly& x, const UPoly& y) {
    std::vector<Rational> v(std::max(x.c_.size(), y.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = x.coeff(i) - y.coeff(i);
    return UPoly(std::move(v));
  }

  friend UPoly operator*(const UPoly& x, const UPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    std::vector<Rational> v(x.c_.size() + y.c_.size() - 1);
    for (std::size_t i = 0; i < x.c_.size(); ++i)
      for (std::size_t j = 0; j < y.c_.size(); ++j) v[i + j] += x.c_[i] * y.c_[j];
    return UPoly(std::move(v));
  }

  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Quotient and remainder of x by a non-zero divisor.
  friend std::pair<UPoly, UPoly> divmod(UPoly x, const UPoly& divisor) {
    if (divisor.is_zero()) throw ArgumentError("polynomial division by zero");
    UPoly quotient;
    while (!x.is_zero() && x.degree() >= divisor.degree()) {
      const UPoly step = monomial(x.lead() / divisor.lead(), static_cast<std::size_t>(x.degree() - divisor.degree()));
      x = x - step * divisor;
      quotient = quotient + step;
    }
    return {quotient, x};
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(v));
  }

  UPoly monic() const {
    if (is_zero()) return {};
    std::vector<Rational> v = c_;
    const Rational l = lead();
    for (auto& x : v) x /= l;
    return UPoly(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Monic gcd over Q.
inline UPoly gcd(UPoly x, UPoly y) {
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

/// Exact rational matrix of a linear map in chosen monomial bases.
class LinearMapMatrix {
 public:
  LinearMapMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw ArgumentError("vector length does not match matrix columns");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
    return out;
  }

  bool column_is_zero(std::size_t c) const {
    for (std::size_t r = 0; r < rows_; ++r)
      if (at(r, c) != 0) return false;
    return true;
  }

  /// Rank by fraction-free (Bareiss) elimination after clearing each row's
  /// denominators.
  std::size_t rank() const {
    std::vector<std::vector<BigInt>> m(rows_, std::vector<BigInt>(cols_));
    for (std::size_t r = 0; r < rows_; ++r) {
      BigInt lcm = 1;
      for (std::size_t c = 0; c < cols_; ++c) lcm = boost::multiprecision::lcm(lcm, denominator(at(r, c)));
      for (std::size_t c = 0; c < cols_; ++c) m[r][c] = numerator(at(r, c)) * (lcm / denominator(at(r, c)));
    }
    std::size_t rank = 0;
    BigInt prev_pivot = 1;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
      std::size_t pivot = rank;
      while (pivot < rows_ && m[pivot][c] == 0) ++pivot;
      if (pivot == rows_) continue;
      std::swap(m[pivot], m[rank]);
      for (std::size_t r = rank + 1; r < rows_; ++r) {
        for (std::size_t j = c + 1; j < cols_; ++j)
          m[r][j] = (m[rank][c] * m[r][j] - m[r][c] * m[rank][j]) / prev_pivot;
        m[r][c] = 0;
      }
      prev_pivot = m[rank][c];
      ++rank;
    }
    return rank;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

/// Sparse polynomial in x_0 .. x_n over Q, keyed by exponent vectors.
class FormN {
 public:
  using Exponents = std::vector<unsigned>;

  explicit FormN(unsigned nvars) : nvars_(nvars) {}

  unsigned nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void accumulate(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw ArgumentError("exponent vector has wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  FormN partial(unsigned var) const {
    FormN out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents f = e;
      --f[var];
      out.accumulate(f, c * e[var]);
    }
    return out;
  }

  /// Restriction to the line x_2 = ... = x_n = 0: coefficients of
  /// x_0^(deg-t) x_1^t indexed by t.
  std::map<unsigned, Rational> restrict_to_base_line() const {
    std::map<unsigned, Rational> out;
    for (const auto& [e, c] : terms_) {
      bool on_line = true;
      for (unsigned v = 2; v < nvars_; ++v) on_line = on_line && e[v] == 0;
      if (on_line) out[e[1]] += c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

 private:
  unsigned nvars_;
  std::map<Exponents, Rational> terms_;
};

/// The explicit degeneration family: a degree-k hypersurface K, a degree-l
/// hypersurface L: x_0^l - x_1^l, and the line alpha: x_2 = ... = x_n = 0.
class WitnessProblem {
 public:
  WitnessProblem(unsigned n, unsigned d, unsigned k) : n_(n), d_(d), k_(k) {
    if (n < 3) throw ArgumentError("witness problem requires n >= 3");
    if (d > 2 * n - 3)
      throw ArgumentError("d > 2n-3: a generic degree-" + std::to_string(d) + " hypersurface in P^" +
                          std::to_string(n) + " has no lines");
    if (k < 1 || k >= d) throw ArgumentError("witness problem requires 1 <= k < d");
    const unsigned bound = (k % 2 == 1) ? n - 1 : n;
    if (m() + 2 > bound)
      throw ArgumentError("m+2 <= " + std::string(k % 2 == 1 ? "n-1 (k odd)" : "n (k even)") + " violated");
    if (n - r() + 1 < m() + 2) throw ArgumentError("n-r+1 >= m+2 violated");
  }

  unsigned n() const { return n_; }
  unsigned d() const { return d_; }
  unsigned k() const { return k_; }
  unsigned l() const { return d_ - k_; }
  unsigned m() const { return k_ / 2; }
  unsigned r() const { return (l() + 1) / 2; }

 private:
  unsigned n_;
  unsigned d_;
  unsigned k_;
};

/// K = x_2 x_0^(k-1) + x_3 x_0^(k-3) x_1^2 + ... + x_{m+1} x_0^(k-2m+1) x_1^(2m-2) + x_{m+2} x_1^(k-1)
inline FormN witness_k_form(const WitnessProblem& p) {
  const unsigned nvars = p.n() + 1;
  FormN form(nvars);
  for (unsigned i = 1; i <= p.m(); ++i) {
    FormN::Exponents e(nvars, 0);
    e[i + 1] = 1;
    e[0] = p.k() - 2 * i + 1;
    e[1] = 2 * i - 2;
    form.accumulate(e, 1);
  }
  FormN::Exponents e(nvars, 0);
  e[p.m() + 2] = 1;
  e[1] = p.k() - 1;
  form.accumulate(e, 1);
  return form;
}

/// Matrix of (a_0..a_n) -> sum a_i dK/dX_i restricted to alpha.
/// Column 2i + s is the basis vector x_s e_i (s = 0, 1); row t is the
/// coefficient of x_0^(k-t) x_1^t.
inline LinearMapMatrix build_phi(const WitnessProblem& p) {
  const FormN form = witness_k_form(p);
  const unsigned nvars = p.n() + 1;
  LinearMapMatrix phi(p.k() + 1, 2 * nvars);
  for (unsigned i = 0; i < nvars; ++i) {
    for (const auto& [t, c] : form.partial(i).restrict_to_base_line()) {
      phi.at(t, 2 * i) += c;      // times x_0 keeps the x_1 degree
      phi.at(t + 1, 2 * i + 1) += c;  // times x_1 raises it
    }
  }
  return phi;
}

struct PhiCheck {
  bool surjective;
  std::size_t kernel_dim;
  std::size_t rank;
};

inline PhiCheck check_phi(const WitnessProblem& p) {
  const LinearMapMatrix phi = build_phi(p);
  const std::size_t rank = phi.rank();
  return {rank == p.k() + 1, phi.cols() - rank, rank};
}

/// For even k the kernel of the map contains (a_{m+1}, a_{m+2}) = (mu x_1, -mu x_0).
inline std::vector<Rational> even_degree_kernel_vector(const WitnessProblem& p, const Rational& mu) {
  if (p.k() % 2 != 0) throw ArgumentError("the explicit kernel vector exists only for even k");
  std::vector<Rational> v(2 * (p.n() + 1));
  v[2 * (p.m() + 1) + 1] = mu;
  v[2 * (p.m() + 2)] = -mu;
  return v;
}

struct RestrictionCheck {
  bool surjective;
  bool nodes_distinct;
};

/// Restriction of the span {t^e : e in exponents} (t = x_1/x_0) to the l
/// points x_0^l = x_1^l, realized as reduction modulo t^l - 1.
inline RestrictionCheck check_restriction(unsigned l, const std::vector<unsigned>& exponents) {
  if (l == 0) throw ArgumentError("check_restriction requires l >= 1");
  if (exponents.size() != l)
    throw ArgumentError("check_restriction expects " + std::to_string(l) + " exponents, got " +
                        std::to_string(exponents.size()));
  const UPoly modulus = UPoly::monomial(1, l) - UPoly::monomial(1, 0);
  RestrictionCheck out{};
  out.nodes_distinct = gcd(modulus, modulus.derivative()).degree() == 0;
  LinearMapMatrix a(l, l);
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    const UPoly reduced = divmod(UPoly::monomial(1, exponents[j]), modulus).second;
    for (std::size_t i = 0; i < l; ++i) a.at(i, j) = reduced.coeff(i);
  }
  out.surjective = a.rank() == l;
  return out;
}

struct WitnessReport {
  bool phi_surjective;
  std::size_t kernel_dim;
  std::size_t expected_kernel_dim;
  bool restriction_surjective;
  bool nodes_distinct;

  bool kernel_minimal() const { return kernel_dim == expected_kernel_dim; }
  bool all_pass() const { return phi_surjective && kernel_minimal() && restriction_surjective && nodes_distinct; }

  friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

inline WitnessReport witness_report(const WitnessProblem& p) {
  const PhiCheck phi = check_phi(p);
  std::vector<unsigned> consecutive(p.l());
  for (unsigned i = 0; i < p.l(); ++i) consecutive[i] = i;
  const RestrictionCheck res = check_restriction(p.l(), consecutive);
  return {phi.surjective, phi.kernel_dim, 2 * p.n() - p.k() + 1, res.surjective, res.nodes_distinct};
}

}  // namespace linedegen
