#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "linedegen/bipoly.hpp"

namespace linedegen {

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Chern root (k - i) a + i b of S^k U* under the splitting U* = A + B.
inline BiPoly chern_root(unsigned k, unsigned i) { return BiPoly::linear(k - i, i); }

/// Total Chern class of S^k U*: graded pieces c_0 .. c_{k+1} of
/// prod_{i=0}^{k} [1 + (k - i) a + i b].
class ChernSeries {
 public:
  ChernSeries(unsigned k, std::vector<BiPoly> graded) : k_(k), graded_(std::move(graded)) {}

  unsigned k() const { return k_; }
  const std::vector<BiPoly>& graded() const { return graded_; }

  /// c_i, zero above the rank.
  BiPoly operator[](std::size_t i) const { return i < graded_.size() ? graded_[i] : BiPoly{}; }

  const BiPoly& top() const { return graded_.back(); }

 private:
  unsigned k_;
  std::vector<BiPoly> graded_;
};

inline ChernSeries chern_sym_power(unsigned k) {
  std::vector<BiPoly> series{BiPoly::one()};
  for (unsigned i = 0; i <= k; ++i) {
    const BiPoly root = chern_root(k, i);
    series.emplace_back();
    for (std::size_t j = series.size() - 1; j > 0; --j) series[j] += series[j - 1] * root;
  }
  return ChernSeries(k, std::move(series));
}

/// c_i(S^d U* - S^k U*) for 0 <= i <= upto.
class DifferenceSeries {
 public:
  DifferenceSeries(unsigned d, unsigned k, std::vector<BiPoly> graded)
      : d_(d), k_(k), graded_(std::move(graded)) {}

  unsigned d() const { return d_; }
  unsigned k() const { return k_; }
  unsigned l() const { return d_ - k_; }
  unsigned upto() const { return static_cast<unsigned>(graded_.size() - 1); }
  const std::vector<BiPoly>& graded() const { return graded_; }
  const BiPoly& operator[](std::size_t i) const { return graded_.at(i); }

 private:
  unsigned d_;
  unsigned k_;
  std::vector<BiPoly> graded_;
};

/// c_0 = 1, c_i = c_i(S^d) - sum_{j<i} c_j * c_{i-j}(S^k).
inline DifferenceSeries difference_class(unsigned d, unsigned k, unsigned upto) {
  if (d <= k)
    throw ArgumentError("difference_class requires d > k (got d=" + std::to_string(d) +
                        ", k=" + std::to_string(k) + ")");
  const ChernSeries big = chern_sym_power(d);
  const ChernSeries small = chern_sym_power(k);
  std::vector<BiPoly> graded{BiPoly::one()};
  for (unsigned i = 1; i <= upto; ++i) {
    BiPoly ci = big[i];
    for (unsigned j = 0; j < i; ++j) ci -= graded[j] * small[i - j];
    graded.push_back(std::move(ci));
  }
  return DifferenceSeries(d, k, std::move(graded));
}

struct SegreCoefficient {
  unsigned l;
  unsigned i;
  BiPoly value;
};

/// f_0 .. f_upto of the formal inverse of c(S^l U*).
inline std::vector<BiPoly> segre_series(unsigned l, unsigned upto) {
  const ChernSeries c = chern_sym_power(l);
  std::vector<BiPoly> f{BiPoly::one()};
  for (unsigned m = 1; m <= upto; ++m) {
    BiPoly fm;
    for (unsigned j = 1; j <= m; ++j) fm -= c[j] * f[m - j];
    f.push_back(std::move(fm));
  }
  return f;
}

inline SegreCoefficient segre_f(unsigned l, unsigned i) {
  if (l == 0) throw ArgumentError("segre_f requires l >= 1");
  return {l, i, segre_series(l, i).back()};
}

namespace detail {

inline void require_positive(unsigned v, const char* what) {
  if (v == 0) throw ArgumentError(std::string(what) + " must be a positive integer");
}

inline BigInt signed_binomial(unsigned l, unsigned j, unsigned parity_shift) {
  BigInt c = binomial(l, j);
  return ((j + parity_shift) % 2 == 0) ? c : BigInt(-c);
}

}  // namespace detail

/// Closed form of the Segre coefficients with denominators cleared:
///   l! (a-b)^l f_i = sum_j (-1)^(i+j) C(l,j) [(l-j)a + jb]^(l+i)
/// checked for every i <= i_max.
inline bool verify_segre_closed_form(unsigned l, unsigned i_max) {
  detail::require_positive(l, "l");
  const std::vector<BiPoly> f = segre_series(l, i_max);
  const BiPoly scale = factorial(l) * pow(vandermonde(), l);
  for (unsigned i = 0; i <= i_max; ++i) {
    BiPoly rhs;
    for (unsigned j = 0; j <= l; ++j)
      rhs += detail::signed_binomial(l, j, i) * pow(chern_root(l, j), l + i);
    if (scale * f[i] != rhs) return false;
  }
  return true;
}

/// sum_j (-1)^(j+l) C(l,j) prod_{i != j} [(l-i)a + ib] = l! (a-b)^l
inline bool verify_root_product_identity(unsigned l) {
  detail::require_positive(l, "l");
  BiPoly lhs;
  for (unsigned j = 0; j <= l; ++j) {
    BiPoly prod = BiPoly::one();
    for (unsigned i = 0; i <= l; ++i)
      if (i != j) prod *= chern_root(l, i);
    lhs += detail::signed_binomial(l, j, l) * prod;
  }
  return lhs == factorial(l) * pow(vandermonde(), l);
}

/// sum_j (-1)^j C(l,j) [(l-j)a + jb]^n = 0 for 0 <= n <= l-1
inline bool verify_power_sum_vanishing(unsigned l) {
  detail::require_positive(l, "l");
  for (unsigned n = 0; n < l; ++n) {
    BiPoly sum;
    for (unsigned j = 0; j <= l; ++j) sum += detail::signed_binomial(l, j, 0) * pow(chern_root(l, j), n);
    if (!sum.is_zero()) return false;
  }
  return true;
}

/// c_{k+1}(k) c_l(k+l,k) + c_{l+1}(l) c_k(k+l,l) = c_{k+l+1}(k+l), where
/// c_i(k+l,k) is the difference class that subtracts S^k.
inline bool verify_degeneration_identity(unsigned k, unsigned l) {
  detail::require_positive(k, "k");
  detail::require_positive(l, "l");
  const unsigned d = k + l;
  const BiPoly lhs = chern_sym_power(k).top() * difference_class(d, k, l)[l] +
                     chern_sym_power(l).top() * difference_class(d, l, k)[k];
  return lhs == chern_sym_power(d).top();
}

/// sum_{j=0}^{k} C(l+j, j)
inline BigInt multiplicity_formula(unsigned k, unsigned l) {
  BigInt s = 0;
  for (unsigned j = 0; j <= k; ++j) s += binomial(l + j, j);
  return s;
}

struct MultiplicityCheck {
  bool holds = false;
  /// Constant quotient found by division; zero when the quotient is not a
  /// constant or the division is inexact.
  BigInt lambda = 0;
  BigInt expected_lambda = 0;
  std::string diagnostic;
};

/// Divides c_{l+1}(S^{k+l} - S^k) by c_{l+1}(S^l) and checks the quotient is
/// the constant sum_{j=0}^{k} C(l+j, j).
inline MultiplicityCheck verify_degeneracy_multiplicity(unsigned k, unsigned l) {
  detail::require_positive(l, "l");
  MultiplicityCheck r;
  r.expected_lambda = multiplicity_formula(k, l);
  const BiPoly numerator = difference_class(k + l, k, l + 1)[l + 1];
  const BiPoly denominator = chern_sym_power(l).top();
  auto quotient = try_divide(numerator, denominator);
  if (!quotient) {
    r.diagnostic = "c_{l+1}(S^l) does not divide the difference class";
    return r;
  }
  if (quotient->degree().value_or(0) != 0) {
    r.diagnostic = "quotient is not constant: " + quotient->str();
    return r;
  }
  r.lambda = quotient->coeff(0, 0);
  r.holds = r.lambda == r.expected_lambda;
  if (!r.holds) r.diagnostic = "quotient constant differs from sum_j C(l+j, j)";
  return r;
}

}  // namespace linedegen
