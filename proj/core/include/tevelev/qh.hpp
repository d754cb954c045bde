#pragma once

// Small quantum cohomology of X = Bl_q(P^r), r >= 2, over Q[q1, q2] with
// q1 = q^{H^v + E^v} and q2 = q^{-E^v}. Writing u = H - E, the ring is
// generated by u and E subject to
//
//   u^{*r} = q2 E,      H * E = q1  (equivalently E*E = q1 - E*u).
//
// Elements are stored over the star basis u^i, E*u^i (i = 0..r-1).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tevelev/exactmath.hpp"
#include "tevelev/problem.hpp"
#include "tevelev/qpoly.hpp"

namespace tev {

class QhElement {
 public:
  explicit QhElement(int r);

  static QhElement one(int r);
  /// index < r: u^index; index >= r: E * u^{index - r}.
  static QhElement basis(int r, int index);
  static QhElement u(int r) { return basis(r, 1); }
  static QhElement exceptional(int r) { return basis(r, r); }

  int r() const { return r_; }
  int rank() const { return 2 * r_; }
  const QPoly& coeff(int index) const { return coeffs_.at(static_cast<std::size_t>(index)); }
  QPoly& coeff(int index) { return coeffs_.at(static_cast<std::size_t>(index)); }
  bool is_zero() const;

  /// Complex degree of a basis element: u^i has degree i, E*u^i degree i+1.
  int basis_degree(int index) const { return index < r_ ? index : index - r_ + 1; }
  /// deg q1 = 2, deg q2 = r - 1.
  int monomial_degree(QExponent e) const { return 2 * e.a + (r_ - 1) * e.b; }
  std::optional<int> homogeneous_degree() const;

  /// Drops quantum monomials with a > max_a or b > max_b. Exponents never
  /// decrease under the product, so this commutes with multiplication.
  void truncate(int max_a, int max_b);
  /// q1 = q2 = 0.
  QhElement classical_limit() const;

  QhElement& operator+=(const QhElement& o);
  QhElement& operator-=(const QhElement& o);
  QhElement& operator*=(const QPoly& s);

  friend QhElement operator+(QhElement a, const QhElement& b) { return a += b; }
  friend QhElement operator-(QhElement a, const QhElement& b) { return a -= b; }
  friend QhElement operator*(const QPoly& s, QhElement a) { return a *= s; }
  friend bool operator==(const QhElement& a, const QhElement& b) { return a.r_ == b.r_ && a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  int r_;
  std::vector<QPoly> coeffs_;
};

/// The quantum product. Throws RankMismatch for elements of different r.
QhElement star(const QhElement& a, const QhElement& b);
/// x^{*n} by iterated multiplication; optional truncation applied after each step.
QhElement star_pow(const QhElement& x, std::int64_t n, std::optional<QExponent> cap = std::nullopt);

/// Coefficients over the classical basis 1, H, ..., H^r, E, ..., E^{r-1}:
/// index 0 is 1, index i in 1..r is H^i, index r+j (j in 1..r-1) is E^j.
class ClassicalElement {
 public:
  explicit ClassicalElement(int r);
  static ClassicalElement basis(int r, int index);
  static ClassicalElement hyperplane_power(int r, int i);
  static ClassicalElement exceptional_power(int r, int j);
  static ClassicalElement point(int r) { return hyperplane_power(r, r); }

  int r() const { return r_; }
  int rank() const { return 2 * r_; }
  const QPoly& coeff(int index) const { return coeffs_.at(static_cast<std::size_t>(index)); }
  QPoly& coeff(int index) { return coeffs_.at(static_cast<std::size_t>(index)); }
  int basis_degree(int index) const { return index <= r_ ? index : index - r_; }

  ClassicalElement& operator+=(const ClassicalElement& o);
  ClassicalElement& operator*=(const QPoly& s);
  friend ClassicalElement operator+(ClassicalElement a, const ClassicalElement& b) { return a += b; }
  friend ClassicalElement operator*(const QPoly& s, ClassicalElement a) { return a *= s; }
  friend bool operator==(const ClassicalElement& a, const ClassicalElement& b) {
    return a.r_ == b.r_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const;

 private:
  int r_;
  std::vector<QPoly> coeffs_;
};

/// Cup product in H^*(X): H*E = 0, E^r = (-1)^{r-1} H^r.
ClassicalElement classical_product(const ClassicalElement& a, const ClassicalElement& b);
/// Poincare pairing against the fundamental class: the H^r coefficient.
QPoly classical_integral(const ClassicalElement& c);

QhElement classical_to_star(const ClassicalElement& c);
ClassicalElement star_to_classical(const QhElement& x);

/// 2r P - (r-1) q2 E.
QhElement euler_class_closed(int r);
/// sum over the classical basis b of b * b^dual, with the dual basis
/// obtained by inverting the Poincare Gram matrix.
QhElement euler_class_from_definition(int r);

/// Coeff(P^{*n} * Delta^{*g}, P q^{d H^v + k E^v}) for ell = 1. Throws
/// NotBalanced on unbalanced input.
BigRational vtev_qh(const Problem& p);

struct LemmaCheck {
  BigRational computed;
  BigInt predicted;
};

/// Coeff(P^{*(ell-m)} * E^{*m}, P q^{d H^v + (k+m) E^v}) against
/// binom(ell-d-m-1, k). Throws HypothesisViolation unless m, k >= 0,
/// ell, d > 0, ell-d-m > 0, d >= k and (r+1)d - (r-1)k = r(ell-1).
LemmaCheck qh_coeff_lemma_check(int r, std::int64_t ell, std::int64_t m, std::int64_t d, std::int64_t k);

}  // namespace tev
