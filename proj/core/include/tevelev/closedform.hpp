#pragma once

#include <cstdint>

#include "tevelev/exactmath.hpp"
#include "tevelev/problem.hpp"

namespace tev {

/// Genus 0, any ell <= r+1:
///   sum_{m=0}^{min(k,n)} (-1)^m binom(n,m) prod_{i=1}^{r+1} binom(n-d+kbar_i-1-m, k_i-m).
BigInt tev_genus0(const Problem& p);

/// ell = 1, any genus:
///   sum_{m=0}^{g} (2r)^{g-m} (1-r)^m binom(g,m) binom(n-d+g-m-1, k).
BigInt tev_l1(const Problem& p);

/// Same sum as tev_l1, valid for virtual counts whenever n - d >= 1.
BigInt vtev_l1(const Problem& p);

/// r = 2, ell = 2 six-index sum. Asserted only for large anticanonical
/// degree, so callers should treat the value as conditional.
///
/// The binomial tops use 2d - (k_1 + a_3) and 2d - (k_2 + a_4).
BigInt tev_r2_l2(const Problem& p);

/// Same sum with tops 2d - (k_1 - a_3), 2d - (k_2 - a_4).
/// Kept for comparison only: for g >= 1 it disagrees with GRR, and with
/// tev_l1 when k_2 = 0.
BigInt tev_r2_l2_sign_variant(const Problem& p);

/// Virtual count (r+1)^g on P^r.
BigInt vtev_pr(int r, int g);

/// Tev of P^1; requires 2d = n + g - 1.
BigInt tev_p1(int g, std::int64_t d, std::int64_t n);

}  // namespace tev
