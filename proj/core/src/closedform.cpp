#include "tevelev/closedform.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "tevelev/errors.hpp"

namespace tev {
namespace {

void require(bool condition, const std::string& engine, const std::string& what) {
  if (!condition) throw Error(ErrorCode::RegimeViolation, engine + ": " + what);
}

void require_geometric(const Problem& p, const std::string& engine) {
  const RegimeReport rep = assess(p);
  require(rep.balanced, engine, "problem is not balanced");
  require(rep.strong_inequality, engine, "d - sum_{|I|<=r} k_i > 2g-1 fails");
  require(rep.geometric_range, engine, "n - d >= g+1 fails");
}

BigInt signed_unit(std::int64_t exponent) { return (exponent % 2 == 0) ? 1 : -1; }

BigInt l1_sum(const Problem& p) {
  const std::int64_t r = p.r;
  const std::int64_t g = p.g;
  const std::int64_t k = p.beta.k.front();
  const std::int64_t base = p.n - p.beta.d + g - 1;
  BigInt total = 0;
  for (std::int64_t m = 0; m <= g; ++m) {
    // (1-r)^m with sign handled by BigInt arithmetic.
    BigInt one_minus_r_pow = 1;
    for (std::int64_t j = 0; j < m; ++j) one_minus_r_pow *= (1 - r);
    total += pow_int(2 * r, g - m) * one_minus_r_pow * binom_gen(g, m) * binom_gen(base - m, k);
  }
  return total;
}

}  // namespace

BigInt tev_genus0(const Problem& p) {
  require(p.g == 0, "genus0", "requires g = 0");
  require_geometric(p, "genus0");
  const std::vector<std::int64_t> k = p.padded_k();
  const std::int64_t k_total = std::accumulate(k.begin(), k.end(), std::int64_t{0});
  std::int64_t m_max = p.n;
  for (auto ki : k) m_max = std::min(m_max, ki);
  BigInt total = 0;
  for (std::int64_t m = 0; m <= m_max; ++m) {
    BigInt term = signed_unit(m) * binom_gen(p.n, m);
    for (auto ki : k) {
      term *= binom_gen(p.n - p.beta.d + (k_total - ki) - 1 - m, ki - m);
      if (term == 0) break;
    }
    total += term;
  }
  return total;
}

BigInt tev_l1(const Problem& p) {
  require(p.beta.ell() == 1, "l1", "requires exactly one blown-up point");
  require_geometric(p, "l1");
  return l1_sum(p);
}

BigInt vtev_l1(const Problem& p) {
  require(p.beta.ell() == 1, "vtev_l1", "requires exactly one blown-up point");
  require(p.balanced(), "vtev_l1", "problem is not balanced");
  require(p.n - p.beta.d >= 1, "vtev_l1", "n - d >= 1 fails (n - d = " + std::to_string(p.n - p.beta.d) + ")");
  return l1_sum(p);
}

namespace {

// shift = +1 gives tops 2d - (k_i + a), shift = -1 2d - (k_i - a).
BigInt r2_l2_sum(const Problem& p, int shift) {
  require(p.r == 2 && p.beta.ell() == 2, "r2l2", "requires r = 2 and two blown-up points");
  require_geometric(p, "r2l2");
  const std::int64_t g = p.g;
  const std::int64_t n = p.n;
  const std::int64_t d = p.beta.d;
  const std::int64_t k1 = p.beta.k[0];
  const std::int64_t k2 = p.beta.k[1];

  BigInt total = 0;
  for (std::int64_t a1 = 0; a1 <= g; ++a1) {
    for (std::int64_t b1 = 0; a1 + b1 <= g; ++b1) {
      for (std::int64_t b2 = 0; a1 + b1 + b2 <= g; ++b2) {
        for (std::int64_t b3 = 0; a1 + b1 + b2 + b3 <= g; ++b3) {
          for (std::int64_t a3 = 0; a1 + b1 + b2 + b3 + a3 <= g; ++a3) {
            const std::int64_t a4 = g - (a1 + b1 + b2 + b3 + a3);
            const std::int64_t a2 = b1 + b2 + b3;
            const std::int64_t upper = std::min({k1 + a3 - a2, k2 + a4 - a2, b1});
            if (upper < 0) continue;

            BigInt inner = 0;
            for (std::int64_t l = 0; l <= upper; ++l) {
              inner += signed_unit(l) * binom_gen(b1, l) *
                       binom_gen(2 * d - (k1 + shift * a3) - g - n + 1 - b2 - b3 - l, k1 - a2 - b2 - l) *
                       binom_gen(2 * d - (k2 + shift * a4) - g - n + 1 - b2 - b3 - l, k2 - a2 - b3 - l);
            }
            if (inner == 0) continue;

            const std::array<std::int64_t, 4> outer{a1, a2, a3, a4};
            const std::array<std::int64_t, 3> split{b1, b2, b3};
            total += multinomial(g, outer) * multinomial(a2, split) * pow_int(5, a1) *
                     signed_unit(b1 + a3 + a4) * inner;
          }
        }
      }
    }
  }
  return total;
}

}  // namespace

BigInt tev_r2_l2(const Problem& p) { return r2_l2_sum(p, +1); }

BigInt tev_r2_l2_sign_variant(const Problem& p) { return r2_l2_sum(p, -1); }

BigInt vtev_pr(int r, int g) {
  if (r < 1 || g < 0) throw Error(ErrorCode::MalformedClass, "vtev_pr: requires r >= 1 and g >= 0");
  return pow_int(r + 1, g);
}

BigInt tev_p1(int g, std::int64_t d, std::int64_t n) {
  require(g >= 0 && d >= 0 && n >= 0, "p1", "negative argument");
  require(2 * d == n + g - 1, "p1", "requires 2d = n + g - 1");
  const std::int64_t gg = g;
  BigInt total = pow_int(2, gg);
  for (std::int64_t j = 0; j <= gg - d - 1; ++j) total -= binom_gen(gg, j);
  total += BigInt(static_cast<long>(gg - d - 1)) * binom_gen(gg, gg - d);
  total += BigInt(static_cast<long>(d - gg - 1)) * binom_gen(gg, gg - d + 1);
  return total;
}

}  // namespace tev
