#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

namespace tev {

/// beta = d H^v + sum_i k_i E_i^v on the blow-up of P^r at ell = k.size() points.
struct CurveClass {
  std::int64_t d = 0;
  std::vector<std::int64_t> k;

  int ell() const { return static_cast<int>(k.size()); }
  std::int64_t k_sum() const;
  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

struct Problem {
  int r = 1;
  int g = 0;
  std::int64_t n = 0;
  CurveClass beta;

  /// beta . K^v = (r+1) d - (r-1) sum k_i.
  std::int64_t anticanonical_degree() const;
  bool balanced() const;
  /// k padded with zeros to length r+1.
  std::vector<std::int64_t> padded_k() const;
  friend bool operator==(const Problem&, const Problem&) = default;
};

enum class SaeStatus { Holds, Fails, Unknown };

/// Every computation route the library offers. Tev engines compute the
/// geometric count, the others the virtual (Gromov-Witten) count.
enum class Engine {
  Grr,               // symbolic integral over Jac x prod Sym
  Residue,           // ell = 1 single-variable coefficient extraction
  ClosedGenus0,      // genus-0 binomial product sum
  ClosedL1,          // ell = 1 arbitrary-genus binomial sum
  ClosedR2L2,        // r = 2, ell = 2 six-index sum (conditional)
  ClosedP1,          // P^1 reference expression
  VirtualL1,         // ell = 1 virtual binomial sum
  QuantumCohomology, // coefficient extraction in QH*(Bl_q P^r)
  VirtualPr,         // (r+1)^g reference value for P^r
};

std::string_view engine_name(Engine e);
std::optional<Engine> engine_from_name(std::string_view name);
bool computes_virtual(Engine e);
/// The six-index r = 2, ell = 2 formula is only asserted for "sufficiently
/// large" anticanonical degree; its values are reported as conditional.
bool is_conditional(Engine e);

struct RegimeReport {
  bool balanced = false;
  bool strong_inequality = false;  // d - sum_{i in I} k_i > 2g-1 for all |I| <= r
  bool geometric_range = false;    // n - d >= g+1
  bool virtual_range = false;      // n - d >= 1
  SaeStatus sae = SaeStatus::Unknown;
  std::set<Engine> engines_available;

  /// balanced, strong inequality, and geometric range all hold.
  bool geometric_regime() const { return balanced && strong_inequality && geometric_range; }
  bool available(Engine e) const { return engines_available.contains(e); }
};

struct ValidatedProblem {
  Problem problem;
  RegimeReport regime;
};

/// Builds a Problem and classifies it. When n is absent it is solved from
/// r(n+g-1) = beta . K^v. Throws NotBalanced or MalformedClass.
ValidatedProblem validate(int r, int g, const CurveClass& beta, std::optional<std::int64_t> n = std::nullopt);

/// Classifies an already-constructed Problem. Never throws on well-formed input.
RegimeReport assess(const Problem& p);

/// n solving the dimension constraint, if it is a nonnegative integer.
std::optional<std::int64_t> solve_marked_points(int r, int g, const CurveClass& beta);

/// True iff d - (sum of the min(ell, r) largest k_i) > 2g - 1.
bool strong_inequality(int r, int g, const CurveClass& beta);

SaeStatus sae_status(int r, int ell);
std::string_view to_string(SaeStatus s);

}  // namespace tev
