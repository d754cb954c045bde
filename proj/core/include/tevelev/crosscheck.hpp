#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tevelev/exactmath.hpp"
#include "tevelev/grr.hpp"
#include "tevelev/problem.hpp"

namespace tev {

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool contains(std::int64_t v) const { return lo <= v && v <= hi; }
};

struct GridSpec {
  Range r{2, 2};
  Range g{0, 0};
  Range ell{1, 1};
  Range k{0, 0};  // applied to every k_i
  Range d{0, 0};
  /// Engines to run; empty means every engine.
  std::set<Engine> engines;
  /// Worker threads; results are returned in enumeration order regardless.
  int parallel = 1;
};

/// Shared per-run state: memoizes GRR evaluators by (g, padded k). Thread-safe.
class EngineContext {
 public:
  std::shared_ptr<const GrrEvaluator> grr_evaluator(int g, const std::vector<std::int64_t>& padded_k);

 private:
  std::mutex mutex_;
  std::map<std::pair<int, std::vector<std::int64_t>>, std::shared_ptr<const GrrEvaluator>> grr_;
};

/// Runs one engine. Throws the engine's Error when out of regime.
BigRational evaluate_engine(Engine engine, const Problem& p, EngineContext* context = nullptr);

enum class Verdict { Agree, Disagree, Skipped };
std::string_view to_string(Verdict v);

struct EngineValue {
  Engine engine;
  std::optional<BigRational> value;
  std::string error;  // set when the engine threw
};

struct CheckResult {
  Problem instance;
  RegimeReport regime;
  std::vector<EngineValue> values;
  Verdict verdict = Verdict::Skipped;
  std::string reason;
};

/// Runs every requested engine that the regime admits and compares values.
/// Geometric engines are compared with each other, virtual engines with each
/// other, and the two families with each other when ell <= 1 inside the
/// geometric regime. Fewer than two comparable values yields Skipped.
CheckResult check_instance(const ValidatedProblem& vp, const std::set<Engine>& engines, EngineContext* context = nullptr);

/// Balanced instances of the grid in lexicographic (r, ell, g, k, d) order.
std::vector<ValidatedProblem> enumerate_grid(const GridSpec& spec);

std::vector<CheckResult> run_grid(const GridSpec& spec);

struct LemmaResult {
  int r = 2;
  std::int64_t ell = 0, m = 0, d = 0, k = 0;
  BigRational computed;
  BigInt predicted;
  bool agree() const { return computed == BigRational(predicted); }
};

/// Every (ell, m, d, k) with ell <= ell_max satisfying the coefficient
/// lemma's hypotheses, for each r in `r`.
std::vector<LemmaResult> run_lemma_grid(Range r, std::int64_t ell_max);

std::string describe(const Problem& p);

}  // namespace tev
