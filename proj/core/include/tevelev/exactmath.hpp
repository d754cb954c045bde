#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tev {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Coefficient of x^b in the power series (1+x)^a. Defined for every
/// integer a; zero whenever b < 0.
BigInt binom_gen(std::int64_t a, std::int64_t b);

BigInt factorial(std::int64_t n);

/// top! / prod(parts_i!). Throws PartsMismatch unless the parts sum to top.
BigInt multinomial(std::int64_t top, std::span<const std::int64_t> parts);

BigInt pow_int(const BigInt& base, std::int64_t exponent);

bool is_integer(const BigRational& q);

/// Decimal string for integers, "p/q" otherwise.
std::string to_decimal(const BigRational& q);
std::string to_decimal(const BigInt& z);

/// Truncated univariate power series sum_{j<size} c_j x^j over the rationals.
/// The truncation order is the vector length; products keep the shorter order.
class Series {
 public:
  Series() = default;
  explicit Series(std::size_t order) : coeffs_(order) {}
  Series(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) {}
  explicit Series(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {}

  /// (1+x)^exponent truncated to `order` terms, any integer exponent.
  static Series one_plus_x_pow(std::int64_t exponent, std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  const BigRational& operator[](std::size_t j) const { return coeffs_[j]; }
  BigRational& operator[](std::size_t j) { return coeffs_[j]; }
  /// Coefficient of x^j; zero past the truncation order.
  BigRational coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : BigRational(0); }
  std::span<const BigRational> coeffs() const { return coeffs_; }

  Series truncated(std::size_t order) const;
  Series pow(std::uint64_t exponent) const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const BigRational& s, const Series& a);

 private:
  std::vector<BigRational> coeffs_;
};

}  // namespace tev
