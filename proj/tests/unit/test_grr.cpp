#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "tevelev/closedform.hpp"
#include "tevelev/errors.hpp"
#include "tevelev/grr.hpp"

using namespace tev;

namespace {

Problem make(int r, int g, std::int64_t d, std::vector<std::int64_t> k) {
  return validate(r, g, {d, std::move(k)}).problem;
}

CohElement poly_in_eta(const SignaturePtr& sig, const Series& s) {
  CohElement out(sig);
  CohElement power = CohElement::one(sig);
  for (std::size_t j = 0; j < s.order(); ++j) {
    out += s[j] * power;
    power = power * eta(sig, 1);
  }
  return out;
}

// Direct evaluation of  ∫ A exp(tau B + Theta C + x D)  on Jac x Sym^k.
BigRational direct_abcd(const Series& a, const Series& b, const Series& c, const Series& d, int g, int k) {
  auto sig = make_signature(g, {k});
  CohElement tau(sig), x(sig);
  for (int alpha = 1; alpha <= g; ++alpha) {
    tau += zeta(sig, 1, alpha) * zeta(sig, 1, alpha + g);
    x += jacobian_class(sig, alpha) * zeta(sig, 1, alpha + g);
    x -= jacobian_class(sig, alpha + g) * zeta(sig, 1, alpha);
  }
  const CohElement exponent = tau * poly_in_eta(sig, b) + theta(sig) * poly_in_eta(sig, c) + x * poly_in_eta(sig, d);
  return integrate(poly_in_eta(sig, a) * exp_nilpotent(exponent));
}

Series random_series(oracle::Gen& gen, std::size_t order) {
  Series s(order);
  for (std::size_t j = 0; j < order; ++j) s[j] = gen.uniform(0, 2) == 0 ? BigRational(0) : gen.rational();
  return s;
}

}  // namespace

TEST_SUITE("grr") {
  TEST_CASE("point values") {
    CHECK(tev_grr(make(2, 0, 3, {1})) == 1);
    CHECK(tev_grr(make(2, 1, 5, {1})) == 7);
    CHECK(tev_grr(make(2, 0, 2, {1, 1})) == 1);
    CHECK(make(2, 0, 2, {1, 1}).n == 3);
  }

  TEST_CASE("residue point values") {
    CHECK(tev_residue_l1(make(2, 0, 3, {1})) == 1);
    CHECK(tev_residue_l1(make(2, 1, 5, {1})) == 7);
    const Problem p = make(3, 0, 4, {2});
    CHECK(p.n == 5);
    CHECK(tev_residue_l1(p) == 0);
  }

  TEST_CASE("abcd point values") {
    CHECK(abcd_integral(Series{1}, Series{0}, Series{0}, Series{0}, 0, 0) == 1);
    CHECK(abcd_integral(Series{1}, Series{0}, Series{1}, Series{0}, 2, 0) == 1);
  }

  TEST_CASE("abcd equals direct ring integration on random series") {
    oracle::Gen gen(505);
    for (int g = 0; g <= 2; ++g) {
      for (int k = 0; k <= 3; ++k) {
        for (int trial = 0; trial < 6; ++trial) {
          const auto order = static_cast<std::size_t>(k + 1);
          const Series a = random_series(gen, order), b = random_series(gen, order);
          const Series c = random_series(gen, order), d = random_series(gen, order);
          CAPTURE(g);
          CAPTURE(k);
          CHECK(abcd_integral(a, b, c, d, g, k) == direct_abcd(a, b, c, d, g, k));
        }
      }
    }
  }

  TEST_CASE("abcd with the one-point data reproduces the residue formula") {
    // A = (1+eta)^{n-1+g-d}, B = r, C = (r eta + r + 1)/(1+eta), D = r.
    for (int r = 2; r <= 4; ++r) {
      for (int g = 0; g <= 2; ++g) {
        for (std::int64_t k = 1; k <= 3; ++k) {
          for (std::int64_t d = 0; d <= 25; ++d) {
            auto n = solve_marked_points(r, g, {d, {k}});
            if (!n) continue;
            const auto order = static_cast<std::size_t>(k + 1);
            const Series a = Series::one_plus_x_pow(*n - 1 + g - d, order);
            Series lin(order);
            lin[0] = r + 1;
            if (order > 1) lin[1] = r;
            const Series c = lin * Series::one_plus_x_pow(-1, order);
            Series plus_r(order), minus_r(order), dd(order);
            plus_r[0] = r;
            minus_r[0] = -r;
            dd[0] = r;
            const BigInt expect = oracle::residue_l1(r, g, *n, d, k);
            CHECK(abcd_integral(a, plus_r, c, dd, g, static_cast<int>(k)) == BigRational(expect));
            // B = -r gives a different value as soon as g >= 1
            if (g >= 1 && *n - d >= g + 1) {
              CHECK(abcd_integral(a, minus_r, c, dd, g, static_cast<int>(k)) != BigRational(expect));
            }
          }
        }
      }
    }
  }

  TEST_CASE("residue matches the polynomial-product oracle") {
    for (int r = 2; r <= 4; ++r) {
      for (int g = 0; g <= 3; ++g) {
        for (std::int64_t k = 0; k <= 4; ++k) {
          for (std::int64_t d = 0; d <= 30; ++d) {
            auto n = solve_marked_points(r, g, {d, {k}});
            if (!n) continue;
            const Problem p{r, g, *n, {d, {k}}};
            if (!assess(p).geometric_regime()) continue;
            CHECK(tev_residue_l1(p) == oracle::residue_l1(r, g, *n, d, k));
          }
        }
      }
    }
  }

  TEST_CASE("genus-0 GRR matches the multivariate series oracle") {
    for (int r = 2; r <= 3; ++r) {
      for (std::int64_t d = 0; d <= 14; ++d) {
        for (int k1 = 0; k1 <= 2; ++k1) {
          for (int k2 = 0; k2 <= 2; ++k2) {
            for (int k3 = 0; k3 <= 2; ++k3) {
              const std::vector<std::int64_t> k{k1, k2, k3};
              auto n = solve_marked_points(r, 0, {d, k});
              if (!n) continue;
              const Problem p{r, 0, *n, {d, k}};
              if (!assess(p).geometric_regime()) continue;
              CAPTURE(d);
              CHECK(tev_grr(p) == oracle::genus0_series(r, *n, d, k));
            }
          }
        }
      }
    }
  }

  TEST_CASE("invariant under permuting k") {
    for (std::int64_t d = 0; d <= 16; ++d) {
      std::vector<std::int64_t> k{1, 2, 0};
      auto n = solve_marked_points(2, 1, {d, k});
      if (!n) continue;
      const Problem base{2, 1, *n, {d, k}};
      if (!assess(base).geometric_regime()) continue;
      const BigInt ref = tev_grr(base);
      std::sort(k.begin(), k.end());
      do {
        CHECK(tev_grr(Problem{2, 1, *n, {d, k}}) == ref);
      } while (std::next_permutation(k.begin(), k.end()));
    }
  }

  TEST_CASE("evaluator reuse matches fresh evaluation") {
    GrrEvaluator ev(1, {2, 1, 0});
    for (std::int64_t d = 0; d <= 16; ++d) {
      auto n = solve_marked_points(2, 1, {d, {2, 1}});
      if (!n) continue;
      const Problem p{2, 1, *n, {d, {2, 1}}};
      if (!assess(p).geometric_regime()) continue;
      CHECK(ev.evaluate(*n, d) == tev_grr(p));
      // a padded zero caps the m-sum at m = 0
      CHECK(ev.summand(*n, d, 0) == BigRational(tev_grr(p)));
    }
  }

  TEST_CASE("small d short-circuits to zero") {
    // 3*4 - 6 = 2(n-1) -> n = 4; d - (3 + 3) < 0
    const Problem p{2, 0, 4, {4, {3, 3}}};
    REQUIRE(p.balanced());
    CHECK(tev_grr(p) == 0);
  }

  TEST_CASE("out of regime throws") {
    const Problem p{2, 1, 4, {3, {1}}};  // n - d = 1 < g + 1
    REQUIRE(p.balanced());
    CHECK_THROWS_AS(tev_grr(p), Error);
    try {
      tev_grr(p);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::RegimeViolation);
    }
    CHECK_THROWS_AS(tev_residue_l1(p), Error);
  }
}
