#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "linedegen/bipoly.hpp"

namespace linedegen {

/// G(2, n+1), the Grassmannian of lines in P^n.
class GrassmannianContext {
 public:
  explicit GrassmannianContext(unsigned n) : n_(n) {
    if (n < 2) throw ArgumentError("Grassmannian of lines needs n >= 2 (got " + std::to_string(n) + ")");
  }

  unsigned n() const { return n_; }
  unsigned dim() const { return 2 * (n_ - 1); }
  unsigned max_index() const { return n_ - 1; }

  bool admits(const Partition2& part) const { return part.p() <= max_index(); }

  friend bool operator==(const GrassmannianContext&, const GrassmannianContext&) = default;

 private:
  unsigned n_;
};

/// Element of A(G(2,n+1)) in the Schubert basis sigma_{p,q}, n-1 >= p >= q >= 0.
class ChowElement {
 public:
  using Coeffs = std::map<Partition2, BigInt>;

  explicit ChowElement(GrassmannianContext ctx) : ctx_(ctx) {}

  const GrassmannianContext& context() const { return ctx_; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  BigInt coeff(const Partition2& part) const {
    auto it = coeffs_.find(part);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  void accumulate(const Partition2& part, const BigInt& c) {
    if (!ctx_.admits(part)) {
      std::ostringstream os;
      os << "sigma" << part << " does not exist on G(2," << ctx_.n() + 1 << ")";
      throw ArgumentError(os.str());
    }
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(part, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  ChowElement& operator+=(const ChowElement& y) {
    require_same_context(y);
    for (const auto& [part, c] : y.coeffs_) accumulate(part, c);
    return *this;
  }

  friend ChowElement operator+(ChowElement x, const ChowElement& y) { return x += y; }

  friend bool operator==(const ChowElement&, const ChowElement&) = default;

  /// "2σ_{2,1}", "27σ_{2,2} + 3σ_{3,1}", or "0".
  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      const auto& [part, c] = *it;
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << '-';
      first = false;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (mag != 1) os << mag;
      os << "σ_{" << part.p() << ',' << part.q() << '}';
    }
    return os.str();
  }

 private:
  void require_same_context(const ChowElement& y) const {
    if (!(ctx_ == y.ctx_)) throw ArgumentError("Chow elements live on different Grassmannians");
  }

  GrassmannianContext ctx_;
  Coeffs coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const ChowElement& x) { return os << x.str(); }

/// Keeps the Schur terms that survive on G(2,n+1); s_(p,q) with p > n-1 vanishes.
inline ChowElement project(const SchurExpansion& x, const GrassmannianContext& ctx) {
  ChowElement out(ctx);
  for (const auto& [part, c] : x.coeffs())
    if (ctx.admits(part)) out.accumulate(part, c);
  return out;
}

/// Degree of a top-dimensional class: the coefficient of the point class.
inline BigInt integrate(const ChowElement& x) {
  const unsigned top = x.context().dim();
  for (const auto& [part, c] : x.coeffs()) {
    if (part.size() != top) {
      std::ostringstream os;
      os << "integrate: sigma" << part << " has codimension " << part.size() << ", expected " << top;
      throw DegreeError(os.str());
    }
  }
  const unsigned p = x.context().max_index();
  return x.coeff(Partition2(p, p));
}

enum class SpecialSchubert { sigma1, sigma11 };

/// Pieri rules on G(2,n+1):
///   sigma_1    * sigma_{p,q} = sigma_{p+1,q} + sigma_{p,q+1}
///   sigma_{1,1} * sigma_{p,q} = sigma_{p+1,q+1}
/// with terms outside n-1 >= p >= q dropped.
inline ChowElement pieri_multiply(const ChowElement& x, SpecialSchubert special) {
  const GrassmannianContext& ctx = x.context();
  ChowElement out(ctx);
  for (const auto& [part, c] : x.coeffs()) {
    const unsigned p = part.p();
    const unsigned q = part.q();
    if (special == SpecialSchubert::sigma1) {
      if (p + 1 <= ctx.max_index()) out.accumulate(Partition2(p + 1, q), c);
      if (q + 1 <= p) out.accumulate(Partition2(p, q + 1), c);
    } else {
      if (p + 1 <= ctx.max_index()) out.accumulate(Partition2(p + 1, q + 1), c);
    }
  }
  return out;
}

/// Rewrites a symmetric polynomial as sum c_{i,j} e1^i e2^j with e1 = a+b,
/// e2 = ab. Keys are (i, j).
inline std::map<std::pair<unsigned, unsigned>, BigInt> elementary_expansion(const BiPoly& x) {
  if (!is_symmetric(x)) throw PreconditionError("elementary_expansion: polynomial is not symmetric: " + x.str());
  std::map<std::pair<unsigned, unsigned>, BigInt> out;
  const BiPoly e1 = BiPoly::linear(1, 1);
  const BiPoly e2 = BiPoly::term(1, 1, 1);
  BiPoly rest = x;
  while (!rest.is_zero()) {
    const auto [m, c] = *rest.terms().rbegin();
    // lead of e1^i e2^j is a^(i+j) b^j
    if (m.a < m.b) throw InvariantViolation("elementary_expansion: lost symmetry while reducing");
    const unsigned i = m.a - m.b;
    const unsigned j = m.b;
    rest -= c * (pow(e1, i) * pow(e2, j));
    out[{i, j}] += c;
  }
  return out;
}

/// Evaluates a symmetric polynomial in A(G(2,n+1)) via e1 -> sigma_1,
/// e2 -> sigma_{1,1} and repeated Pieri products starting from sigma_{0,0}.
inline ChowElement evaluate_via_pieri(const BiPoly& x, const GrassmannianContext& ctx) {
  ChowElement out(ctx);
  for (const auto& [ij, c] : elementary_expansion(x)) {
    ChowElement term(ctx);
    term.accumulate(Partition2(0, 0), c);
    for (unsigned s = 0; s < ij.second && !term.is_zero(); ++s) term = pieri_multiply(term, SpecialSchubert::sigma11);
    for (unsigned s = 0; s < ij.first && !term.is_zero(); ++s) term = pieri_multiply(term, SpecialSchubert::sigma1);
    out += term;
  }
  return out;
}

}  // namespace linedegen
