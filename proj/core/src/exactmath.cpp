#include "tevelev/exactmath.hpp"

#include <algorithm>
#include <numeric>

#include "tevelev/errors.hpp"

namespace tev {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::MalformedClass: return "MalformedClass";
    case ErrorCode::RegimeViolation: return "RegimeViolation";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::PartsMismatch: return "PartsMismatch";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonNilpotent: return "NonNilpotent";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

BigInt binom_gen(std::int64_t a, std::int64_t b) {
  if (b < 0) return 0;
  // mpz_bin_ui handles negative tops via binom(-n, k) = (-1)^k binom(n+k-1, k),
  // which is the power-series convention.
  BigInt top(static_cast<long>(a));
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(b));
  return out;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::IndexOutOfRange, "factorial of negative integer");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt multinomial(std::int64_t top, std::span<const std::int64_t> parts) {
  std::int64_t sum = 0;
  for (auto p : parts) {
    if (p < 0) throw Error(ErrorCode::PartsMismatch, "negative part");
    sum += p;
  }
  if (sum != top) {
    throw Error(ErrorCode::PartsMismatch,
                "parts sum to " + std::to_string(sum) + ", expected " + std::to_string(top));
  }
  // Product of successive binomials avoids the full factorial quotient.
  BigInt out = 1;
  std::int64_t running = 0;
  for (auto p : parts) {
    running += p;
    out *= binom_gen(running, p);
  }
  return out;
}

BigInt pow_int(const BigInt& base, std::int64_t exponent) {
  if (exponent < 0) throw Error(ErrorCode::IndexOutOfRange, "negative integer power");
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

// Divisibility rather than den == 1, so non-canonical values are handled too.
bool is_integer(const BigRational& q) { return mpz_divisible_p(q.get_num_mpz_t(), q.get_den_mpz_t()) != 0; }

std::string to_decimal(const BigInt& z) { return z.get_str(10); }

std::string to_decimal(const BigRational& value) {
  BigRational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

// --- Series -----------------------------------------------------------------

Series Series::one_plus_x_pow(std::int64_t exponent, std::size_t order) {
  Series out(order);
  for (std::size_t j = 0; j < order; ++j) {
    out.coeffs_[j] = binom_gen(exponent, static_cast<std::int64_t>(j));
  }
  return out;
}

Series Series::truncated(std::size_t order) const {
  Series out(order);
  for (std::size_t j = 0; j < std::min(order, coeffs_.size()); ++j) out.coeffs_[j] = coeffs_[j];
  return out;
}

Series Series::pow(std::uint64_t exponent) const {
  Series result(order());
  if (order() == 0) return result;
  result.coeffs_[0] = 1;
  Series base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Series operator+(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  for (std::size_t j = 0; j < out.order(); ++j) out.coeffs_[j] = a.coeffs_[j] + b.coeffs_[j];
  return out;
}

Series operator-(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  for (std::size_t j = 0; j < out.order(); ++j) out.coeffs_[j] = a.coeffs_[j] - b.coeffs_[j];
  return out;
}

Series operator*(const Series& a, const Series& b) {
  const std::size_t order = std::min(a.order(), b.order());
  Series out(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < order; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

Series operator*(const BigRational& s, const Series& a) {
  Series out = a;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

}  // namespace tev
