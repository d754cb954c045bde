#include "tevelev/grr.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tevelev/errors.hpp"

namespace tev {
namespace {

std::vector<int> to_int_vector(const std::vector<std::int64_t>& k) {
  std::vector<int> out;
  out.reserve(k.size());
  for (auto v : k) {
    if (v < 0 || v > AlgebraSignature::kMaxK) {
      throw Error(ErrorCode::Unsupported, "k entry " + std::to_string(v) + " outside the supported range");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

CohElement build_exponential(const SignaturePtr& sig) {
  // The factors are even and commute, so prod_i exp(u_i) = exp(sum_i u_i).
  CohElement exponent(sig);
  const CohElement th = theta(sig);
  for (int i = 1; i <= sig->factor_count(); ++i) {
    CohElement numerator = taubar(sig, i) + th - xbar(sig, i);
    if (sig->k(i) > 0) numerator = numerator * geom_inverse_one_plus(eta(sig, i));
    exponent += numerator;
  }
  return exp_nilpotent(exponent);
}

void require_regime(const Problem& p, const RegimeReport& rep, const char* engine) {
  if (!rep.balanced) throw Error(ErrorCode::RegimeViolation, std::string(engine) + ": problem is not balanced");
  if (!rep.strong_inequality) {
    throw Error(ErrorCode::RegimeViolation, std::string(engine) + ": d - sum_{|I|<=r} k_i > 2g-1 fails");
  }
  if (!rep.geometric_range) {
    throw Error(ErrorCode::RegimeViolation, std::string(engine) + ": n - d >= g+1 fails (n - d = " +
                                                std::to_string(p.n - p.beta.d) + ")");
  }
}

}  // namespace

GrrEvaluator::GrrEvaluator(int g, std::vector<std::int64_t> padded_k)
    : g_(g),
      k_(std::move(padded_k)),
      sig_(make_signature(g, to_int_vector(k_))),
      exponential_(build_exponential(sig_)) {}

BigRational GrrEvaluator::summand(std::int64_t n, std::int64_t d, std::int64_t m) const {
  const std::int64_t k_total = std::accumulate(k_.begin(), k_.end(), std::int64_t{0});
  CohElement prefactor = CohElement::one(sig_);
  for (int i = 1; i <= sig_->factor_count(); ++i) {
    const std::int64_t ki = k_[static_cast<std::size_t>(i - 1)];
    if (ki == 0) {
      // eta_i = 0 on Sym^0 = point.
      if (m > 0) return 0;
      continue;
    }
    const std::int64_t kbar = k_total - ki;
    const CohElement eta_i = eta(sig_, i);
    CohElement factor = pow_one_plus(eta_i, n - m - 1 + g_ - d + kbar);
    for (std::int64_t j = 0; j < m; ++j) factor = factor * eta_i;
    prefactor = prefactor * factor;
  }
  return integrate(prefactor * exponential_);
}

BigInt GrrEvaluator::evaluate(std::int64_t n, std::int64_t d) const {
  std::int64_t m_max = n;
  for (auto ki : k_) m_max = std::min(m_max, ki);
  BigRational total = 0;
  for (std::int64_t m = 0; m <= m_max; ++m) {
    const BigRational term = BigRational(binom_gen(n, m)) * summand(n, d, m);
    if (m % 2 == 0) total += term;
    else total -= term;
  }
  if (!is_integer(total) || total < 0) {
    throw Error(ErrorCode::NonIntegralResult, "GRR integral evaluated to " + to_decimal(total));
  }
  return total.get_num();
}

BigInt tev_grr(const Problem& p) {
  const RegimeReport rep = assess(p);
  if (rep.balanced && p.n >= 1) {
    std::vector<std::int64_t> sorted = p.beta.k;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    sorted.resize(std::min<std::size_t>(sorted.size(), static_cast<std::size_t>(p.r)));
    if (p.beta.d - std::accumulate(sorted.begin(), sorted.end(), std::int64_t{0}) < 0) return 0;
  }
  require_regime(p, rep, "grr");
  return GrrEvaluator(p.g, p.padded_k()).evaluate(p.n, p.beta.d);
}

BigRational abcd_integral(const Series& a, const Series& b, const Series& c, const Series& d, int g, int k) {
  if (g < 0 || k < 0) throw Error(ErrorCode::IndexOutOfRange, "negative genus or degree");
  const auto order = static_cast<std::size_t>(k) + 1;
  const Series eta{0, 1};
  const Series one{1};
  const auto lift = [order](const Series& s) { return s.truncated(order); };
  const Series bracket = lift(c) * (lift(one) + lift(eta) * lift(b)) - lift(eta) * lift(d) * lift(d);
  return (lift(a) * bracket.pow(static_cast<std::uint64_t>(g))).coeff(static_cast<std::size_t>(k));
}

BigInt tev_residue_l1(const Problem& p) {
  if (p.beta.ell() != 1) throw Error(ErrorCode::RegimeViolation, "residue: requires exactly one blown-up point");
  require_regime(p, assess(p), "residue");
  const std::int64_t r = p.r;
  const std::int64_t g = p.g;
  const std::int64_t k = p.beta.k.front();
  BigInt total = 0;
  for (std::int64_t j = 0; j <= std::min(g, k); ++j) {
    total += binom_gen(g, j) * pow_int(2 * r, j) * pow_int(r + 1, g - j) * binom_gen(p.n - 1 - p.beta.d, k - j);
  }
  return total;
}

}  // namespace tev
