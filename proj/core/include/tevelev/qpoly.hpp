#pragma once

#include <map>
#include <string>
#include <utility>

#include "tevelev/exactmath.hpp"

namespace tev {

/// Exponent pair (a, b) of the quantum monomial q1^a q2^b, where q1 is the
/// parameter of the cone generator H^v + E^v and q2 that of -E^v.
struct QExponent {
  int a = 0;
  int b = 0;
  auto operator<=>(const QExponent&) const = default;
};

/// Sparse polynomial in q1, q2 with rational coefficients. Zero
/// coefficients are never stored.
class QPoly {
 public:
  QPoly() = default;
  QPoly(const BigRational& c) { add_term({0, 0}, c); }  // NOLINT: constants convert implicitly
  static QPoly monomial(QExponent e, const BigRational& c = 1);
  static QPoly q1() { return monomial({1, 0}); }
  static QPoly q2() { return monomial({0, 1}); }

  BigRational coeff_at(QExponent e) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<QExponent, BigRational>& terms() const { return terms_; }

  void add_term(QExponent e, const BigRational& c);
  /// Drops every monomial with a > max_a or b > max_b.
  void truncate(int max_a, int max_b);
  /// Substitutes q1 = q2 = 0.
  BigRational constant_term() const { return coeff_at({0, 0}); }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const BigRational& s);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(QPoly a) { return a *= BigRational(-1); }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const BigRational& s, QPoly a) { return a *= s; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<QExponent, BigRational> terms_;
};

}  // namespace tev
