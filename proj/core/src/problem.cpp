#include "tevelev/problem.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <string>
#include <utility>

#include "tevelev/errors.hpp"

namespace tev {
namespace {

constexpr std::array<std::pair<Engine, std::string_view>, 9> kEngineNames{{
    {Engine::Grr, "grr"},
    {Engine::Residue, "residue"},
    {Engine::ClosedGenus0, "genus0"},
    {Engine::ClosedL1, "l1"},
    {Engine::ClosedR2L2, "r2l2"},
    {Engine::ClosedP1, "p1"},
    {Engine::VirtualL1, "vtev_l1"},
    {Engine::QuantumCohomology, "qh"},
    {Engine::VirtualPr, "vtev_pr"},
}};

void check_well_formed(int r, int g, const CurveClass& beta) {
  if (r < 1) throw Error(ErrorCode::MalformedClass, "r must be at least 1");
  if (g < 0) throw Error(ErrorCode::MalformedClass, "g must be nonnegative");
  if (beta.d < 0) throw Error(ErrorCode::MalformedClass, "d must be nonnegative");
  if (beta.ell() > r + 1) {
    throw Error(ErrorCode::MalformedClass,
                "at most r+1 = " + std::to_string(r + 1) + " blown-up points, got " + std::to_string(beta.ell()));
  }
  for (auto ki : beta.k) {
    if (ki < 0) throw Error(ErrorCode::MalformedClass, "k entries must be nonnegative");
  }
}

}  // namespace

std::int64_t CurveClass::k_sum() const { return std::accumulate(k.begin(), k.end(), std::int64_t{0}); }

std::int64_t Problem::anticanonical_degree() const {
  return static_cast<std::int64_t>(r + 1) * beta.d - static_cast<std::int64_t>(r - 1) * beta.k_sum();
}

bool Problem::balanced() const {
  return anticanonical_degree() == static_cast<std::int64_t>(r) * (n + g - 1);
}

std::vector<std::int64_t> Problem::padded_k() const {
  std::vector<std::int64_t> out = beta.k;
  if (out.size() < static_cast<std::size_t>(r + 1)) out.resize(static_cast<std::size_t>(r + 1), 0);
  return out;
}

std::string_view engine_name(Engine e) {
  for (const auto& [engine, name] : kEngineNames) {
    if (engine == e) return name;
  }
  return "unknown";
}

std::optional<Engine> engine_from_name(std::string_view name) {
  for (const auto& [engine, n] : kEngineNames) {
    if (n == name) return engine;
  }
  return std::nullopt;
}

bool computes_virtual(Engine e) {
  return e == Engine::VirtualL1 || e == Engine::QuantumCohomology || e == Engine::VirtualPr;
}

bool is_conditional(Engine e) { return e == Engine::ClosedR2L2; }

std::optional<std::int64_t> solve_marked_points(int r, int g, const CurveClass& beta) {
  const std::int64_t degree = static_cast<std::int64_t>(r + 1) * beta.d - static_cast<std::int64_t>(r - 1) * beta.k_sum();
  if (degree % r != 0) return std::nullopt;
  const std::int64_t n = degree / r - g + 1;
  if (n < 0) return std::nullopt;
  return n;
}

bool strong_inequality(int r, int g, const CurveClass& beta) {
  // The inequality is tightest for the subset of the largest k_i.
  std::vector<std::int64_t> sorted = beta.k;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const auto take = std::min<std::size_t>(sorted.size(), static_cast<std::size_t>(r));
  const std::int64_t worst = std::accumulate(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(take), std::int64_t{0});
  return beta.d - worst > 2 * static_cast<std::int64_t>(g) - 1;
}

SaeStatus sae_status(int r, int ell) {
  if (r >= 4 && ell >= 2) return SaeStatus::Fails;
  if (ell <= 1) return SaeStatus::Holds;
  if (r == 2 && ell <= 8) return SaeStatus::Holds;
  if (r == 3 && ell <= 4) return SaeStatus::Holds;
  return SaeStatus::Unknown;
}

std::string_view to_string(SaeStatus s) {
  switch (s) {
    case SaeStatus::Holds: return "holds";
    case SaeStatus::Fails: return "fails";
    case SaeStatus::Unknown: return "unknown";
  }
  return "unknown";
}

RegimeReport assess(const Problem& p) {
  RegimeReport rep;
  rep.balanced = p.balanced();
  rep.strong_inequality = strong_inequality(p.r, p.g, p.beta);
  rep.geometric_range = p.n - p.beta.d >= p.g + 1;
  rep.virtual_range = p.n - p.beta.d >= 1;
  rep.sae = sae_status(p.r, p.beta.ell());

  const int ell = p.beta.ell();
  const bool blowup = p.r >= 2;
  if (rep.geometric_regime()) {
    rep.engines_available.insert(Engine::Grr);
    if (p.g == 0) rep.engines_available.insert(Engine::ClosedGenus0);
    if (ell == 1 && blowup) {
      rep.engines_available.insert(Engine::Residue);
      rep.engines_available.insert(Engine::ClosedL1);
    }
    if (p.r == 2 && ell == 2) rep.engines_available.insert(Engine::ClosedR2L2);
  }
  if (rep.balanced) {
    // The P^1 expression is stated for stable domains only.
    if (p.r == 1 && ell == 0 && 2 * p.g - 2 + p.n > 0) rep.engines_available.insert(Engine::ClosedP1);
    if (ell == 0) rep.engines_available.insert(Engine::VirtualPr);
    if (ell == 1 && blowup) {
      rep.engines_available.insert(Engine::QuantumCohomology);
      if (rep.virtual_range) rep.engines_available.insert(Engine::VirtualL1);
    }
  }
  return rep;
}

ValidatedProblem validate(int r, int g, const CurveClass& beta, std::optional<std::int64_t> n) {
  check_well_formed(r, g, beta);
  Problem p{r, g, 0, beta};
  if (n) {
    if (*n < 0) throw Error(ErrorCode::MalformedClass, "n must be nonnegative");
    p.n = *n;
    if (!p.balanced()) {
      throw Error(ErrorCode::NotBalanced,
                  "beta.K^v = " + std::to_string(p.anticanonical_degree()) + " but r(n+g-1) = " +
                      std::to_string(static_cast<std::int64_t>(r) * (*n + g - 1)));
    }
  } else {
    auto solved = solve_marked_points(r, g, beta);
    if (!solved) {
      throw Error(ErrorCode::NotBalanced, "beta.K^v = " + std::to_string(p.anticanonical_degree()) +
                                              " admits no nonnegative integral n");
    }
    p.n = *solved;
  }
  return {p, assess(p)};
}

}  // namespace tev
