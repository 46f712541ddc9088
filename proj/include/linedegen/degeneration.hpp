#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linedegen/chern.hpp"
#include "linedegen/chow.hpp"

namespace linedegen {

namespace detail {

inline void require_split_range(unsigned n, unsigned d, unsigned k) {
  if (n < 2) throw ArgumentError("n must be >= 2");
  if (k < 1 || k + 1 > d)
    throw ArgumentError("k must satisfy 1 <= k <= d-1 (got d=" + std::to_string(d) + ", k=" +
                        std::to_string(k) + ")");
}

}  // namespace detail

/// Class of the lines on K (degree k) whose intersection with L lies in D:
///   c_{k+1}(S^k U*) * c_l(S^d U* - S^k U*),  l = d - k.
inline ChowElement sigma_class(unsigned n, unsigned d, unsigned k) {
  detail::require_split_range(n, d, k);
  const unsigned l = d - k;
  const BiPoly cls = chern_sym_power(k).top() * difference_class(d, k, l)[l];
  return project(to_schur(cls), GrassmannianContext(n));
}

/// Class of the lines on a generic degree-d hypersurface: c_{d+1}(S^d U*).
inline ChowElement total_class(unsigned n, unsigned d) {
  if (n < 2) throw ArgumentError("n must be >= 2");
  if (d < 1) throw ArgumentError("d must be >= 1");
  return project(to_schur(chern_sym_power(d).top()), GrassmannianContext(n));
}

struct DegenerationCounts {
  BigInt k_lines;
  BigInt l_lines;
  BigInt total;

  friend bool operator==(const DegenerationCounts&, const DegenerationCounts&) = default;
};

struct DegenerationReport {
  unsigned n;
  unsigned d;
  unsigned k;
  unsigned l;
  ChowElement class_k;
  ChowElement class_l;
  ChowElement total;
  bool sum_matches;
  /// Present exactly when d = 2n - 3, i.e. the classes are numbers.
  std::optional<DegenerationCounts> counts;

  friend bool operator==(const DegenerationReport&, const DegenerationReport&) = default;
};

inline DegenerationReport report(unsigned n, unsigned d, unsigned k) {
  detail::require_split_range(n, d, k);
  DegenerationReport r{n,
                       d,
                       k,
                       d - k,
                       sigma_class(n, d, k),
                       sigma_class(n, d, d - k),
                       total_class(n, d),
                       false,
                       std::nullopt};
  r.sum_matches = (r.class_k + r.class_l) == r.total;
  if (d + 1 == 2 * (n - 1)) r.counts = DegenerationCounts{integrate(r.class_k), integrate(r.class_l), integrate(r.total)};
  return r;
}

/// Degrees (a_1 >= ... >= a_{n-2}) of a normal bundle N_{alpha/K} = sum O(a_i).
struct SplittingType {
  std::vector<int> entries;

  friend auto operator<=>(const SplittingType&, const SplittingType&) = default;
};

struct NormalTypesResult {
  std::vector<SplittingType> types;
  /// Set when no lines are expected on a generic K.
  std::optional<std::string> advisory;
};

/// All descending tuples of length n-2 with entries in [-1, 1] summing to
/// n-1-k, in descending lexicographic order.
inline NormalTypesResult normal_bundle_types(unsigned n, unsigned k) {
  if (n < 3) throw ArgumentError("normal_bundle_types requires n >= 3");
  if (k < 1) throw ArgumentError("normal_bundle_types requires k >= 1");
  NormalTypesResult out;
  if (k > 2 * n - 3) {
    out.advisory = "a generic hypersurface of degree " + std::to_string(k) + " in P^" + std::to_string(n) +
                   " contains no lines (degree exceeds 2n-3)";
    return out;
  }
  const int len = static_cast<int>(n) - 2;
  const int target = static_cast<int>(n) - 1 - static_cast<int>(k);
  // ones + (-1)*minus = target, ones + zeros + minus = len
  for (int ones = len; ones >= 0; --ones) {
    for (int zeros = len - ones; zeros >= 0; --zeros) {
      const int minus = len - ones - zeros;
      if (ones - minus != target) continue;
      SplittingType t;
      t.entries.insert(t.entries.end(), ones, 1);
      t.entries.insert(t.entries.end(), zeros, 0);
      t.entries.insert(t.entries.end(), minus, -1);
      out.types.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace linedegen
