#pragma once

#include <cstdint>
#include <vector>

#include "tevelev/cohring.hpp"
#include "tevelev/exactmath.hpp"
#include "tevelev/problem.hpp"

namespace tev {

/// Geometric Tevelev degrees as integrals over S = Jac^d(C) x prod_i Sym^{k_i}(C):
///
///   Tev = sum_{m=0}^{min(n,k_1..k_{r+1})} binom(n,m) (-1)^m
///         ∫_S prod_i (1+eta_i)^{n-m-1+g-d+kbar_i} eta_i^m exp((taubar_i + Theta - xbar_i)/(1+eta_i))
///
/// The exponential part depends only on (g, k), so an evaluator is built once
/// per signature and reused across (n, d).
class GrrEvaluator {
 public:
  /// `padded_k` has r+1 entries.
  GrrEvaluator(int g, std::vector<std::int64_t> padded_k);

  const SignaturePtr& signature() const { return sig_; }
  /// prod_i exp((taubar_i + Theta - xbar_i)/(1+eta_i)), as a single exponential.
  const CohElement& exponential() const { return exponential_; }

  /// The m-th integral, without binom(n,m)(-1)^m.
  BigRational summand(std::int64_t n, std::int64_t d, std::int64_t m) const;
  /// The full alternating sum; throws NonIntegralResult unless it is a
  /// nonnegative integer.
  BigInt evaluate(std::int64_t n, std::int64_t d) const;

 private:
  int g_;
  std::vector<std::int64_t> k_;
  SignaturePtr sig_;
  CohElement exponential_;
};

/// Throws RegimeViolation outside the balanced / strong-inequality / n-d >= g+1
/// regime, except that balanced classes with d below the sum of the r largest
/// k_i and n >= 1 return 0 directly.
BigInt tev_grr(const Problem& p);

/// Coeff(A(eta) (C(eta)(1 + eta B(eta)) - eta D(eta)^2)^g ; eta^k) for
/// truncated power series A, B, C, D.
BigRational abcd_integral(const Series& a, const Series& b, const Series& c, const Series& d, int g, int k);

/// Coeff((1+eta)^{n-1-d} (2r eta + (r+1))^g ; eta^k), ell = 1 only.
BigInt tev_residue_l1(const Problem& p);

}  // namespace tev
