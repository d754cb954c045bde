#include "tevelev/crosscheck.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "tevelev/closedform.hpp"
#include "tevelev/errors.hpp"
#include "tevelev/qh.hpp"

namespace tev {
namespace {

constexpr Engine kAllEngines[] = {
    Engine::Grr,       Engine::Residue,   Engine::ClosedGenus0,      Engine::ClosedL1,  Engine::ClosedR2L2,
    Engine::ClosedP1,  Engine::VirtualL1, Engine::QuantumCohomology, Engine::VirtualPr,
};

/// Fills k-vectors of length ell with entries in [lo, hi], lexicographically.
void for_each_k(int ell, Range k, const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> cur(static_cast<std::size_t>(ell), k.lo);
  if (k.lo > k.hi && ell > 0) return;
  while (true) {
    fn(cur);
    int pos = ell - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == k.hi) {
      cur[static_cast<std::size_t>(pos)] = k.lo;
      --pos;
    }
    if (pos < 0) return;
    ++cur[static_cast<std::size_t>(pos)];
  }
}

template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, int workers, Fn fn) {
  std::vector<T> out(count);
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const auto n_workers = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  for (std::size_t w = 0; w < n_workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace

std::shared_ptr<const GrrEvaluator> EngineContext::grr_evaluator(int g, const std::vector<std::int64_t>& padded_k) {
  const auto key = std::make_pair(g, padded_k);
  {
    std::lock_guard lock(mutex_);
    if (auto it = grr_.find(key); it != grr_.end()) return it->second;
  }
  // Built outside the lock; a concurrent duplicate build is harmless.
  auto built = std::make_shared<const GrrEvaluator>(g, padded_k);
  std::lock_guard lock(mutex_);
  return grr_.try_emplace(key, std::move(built)).first->second;
}

BigRational evaluate_engine(Engine engine, const Problem& p, EngineContext* context) {
  switch (engine) {
    case Engine::Grr:
      if (context != nullptr && assess(p).geometric_regime()) {
        return BigRational(context->grr_evaluator(p.g, p.padded_k())->evaluate(p.n, p.beta.d));
      }
      return BigRational(tev_grr(p));
    case Engine::Residue: return BigRational(tev_residue_l1(p));
    case Engine::ClosedGenus0: return BigRational(tev_genus0(p));
    case Engine::ClosedL1: return BigRational(tev_l1(p));
    case Engine::ClosedR2L2: return BigRational(tev_r2_l2(p));
    case Engine::ClosedP1:
      if (p.r != 1 || p.beta.ell() != 0) throw Error(ErrorCode::RegimeViolation, "p1: requires X = P^1");
      return BigRational(tev_p1(p.g, p.beta.d, p.n));
    case Engine::VirtualL1: return BigRational(vtev_l1(p));
    case Engine::QuantumCohomology: return vtev_qh(p);
    case Engine::VirtualPr:
      if (p.beta.ell() != 0) throw Error(ErrorCode::RegimeViolation, "vtev_pr: requires X = P^r");
      if (!p.balanced()) throw Error(ErrorCode::NotBalanced, "vtev_pr: problem is not balanced");
      return BigRational(vtev_pr(p.r, p.g));
  }
  throw Error(ErrorCode::Unsupported, "unknown engine");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Agree: return "agree";
    case Verdict::Disagree: return "disagree";
    case Verdict::Skipped: return "skipped";
  }
  return "skipped";
}

std::string describe(const Problem& p) {
  std::ostringstream os;
  os << "r=" << p.r << " g=" << p.g << " n=" << p.n << " d=" << p.beta.d << " k=[";
  for (std::size_t i = 0; i < p.beta.k.size(); ++i) os << (i ? " " : "") << p.beta.k[i];
  os << "]";
  return os.str();
}

CheckResult check_instance(const ValidatedProblem& vp, const std::set<Engine>& engines, EngineContext* context) {
  CheckResult res{vp.problem, vp.regime, {}, Verdict::Skipped, {}};
  std::vector<std::string> unavailable;
  for (Engine e : kAllEngines) {
    if (!engines.empty() && !engines.contains(e)) continue;
    if (!vp.regime.available(e)) {
      unavailable.emplace_back(engine_name(e));
      continue;
    }
    EngineValue ev{e, std::nullopt, {}};
    try {
      ev.value = evaluate_engine(e, vp.problem, context);
    } catch (const std::exception& ex) {
      ev.error = ex.what();
    }
    res.values.push_back(std::move(ev));
  }

  for (const auto& ev : res.values) {
    if (!ev.value) {
      res.verdict = Verdict::Disagree;
      res.reason = std::string(engine_name(ev.engine)) + " failed: " + ev.error;
      return res;
    }
  }

  const bool merge_families = vp.problem.beta.ell() <= 1 && vp.regime.geometric_regime();
  std::vector<const EngineValue*> geometric;
  std::vector<const EngineValue*> virtual_;
  for (const auto& ev : res.values) {
    (computes_virtual(ev.engine) && !merge_families ? virtual_ : geometric).push_back(&ev);
  }

  bool compared = false;
  for (const auto* group : {&geometric, &virtual_}) {
    if (group->size() < 2) continue;
    compared = true;
    const BigRational& ref = *group->front()->value;
    for (const auto* ev : *group) {
      if (*ev->value != ref) {
        res.verdict = Verdict::Disagree;
        res.reason = std::string(engine_name(group->front()->engine)) + "=" + to_decimal(ref) + " vs " +
                     std::string(engine_name(ev->engine)) + "=" + to_decimal(*ev->value);
        return res;
      }
    }
  }
  if (compared) {
    res.verdict = Verdict::Agree;
    return res;
  }

  std::ostringstream why;
  why << (res.values.empty() ? "no engine applies" : "only one comparable engine applies");
  if (!unavailable.empty()) {
    why << "; out of regime:";
    for (const auto& name : unavailable) why << " " << name;
  }
  if (!vp.regime.strong_inequality) why << "; strong inequality fails";
  if (!vp.regime.geometric_range) why << "; n-d < g+1";
  if (!vp.regime.virtual_range) why << "; n-d < 1";
  res.reason = why.str();
  return res;
}

std::vector<ValidatedProblem> enumerate_grid(const GridSpec& spec) {
  std::vector<ValidatedProblem> out;
  for (std::int64_t r = std::max<std::int64_t>(spec.r.lo, 1); r <= spec.r.hi; ++r) {
    for (std::int64_t ell = std::max<std::int64_t>(spec.ell.lo, 0); ell <= std::min(spec.ell.hi, r + 1); ++ell) {
      for (std::int64_t g = std::max<std::int64_t>(spec.g.lo, 0); g <= spec.g.hi; ++g) {
        for_each_k(static_cast<int>(ell), {std::max<std::int64_t>(spec.k.lo, 0), spec.k.hi},
                   [&](const std::vector<std::int64_t>& k) {
                     for (std::int64_t d = std::max<std::int64_t>(spec.d.lo, 0); d <= spec.d.hi; ++d) {
                       CurveClass beta{d, k};
                       if (!solve_marked_points(static_cast<int>(r), static_cast<int>(g), beta)) continue;
                       out.push_back(validate(static_cast<int>(r), static_cast<int>(g), beta));
                     }
                   });
      }
    }
  }
  return out;
}

std::vector<CheckResult> run_grid(const GridSpec& spec) {
  const std::vector<ValidatedProblem> instances = enumerate_grid(spec);
  EngineContext context;
  return parallel_map<CheckResult>(instances.size(), spec.parallel, [&](std::size_t i) {
    return check_instance(instances[i], spec.engines, &context);
  });
}

std::vector<LemmaResult> run_lemma_grid(Range r_range, std::int64_t ell_max) {
  std::vector<LemmaResult> out;
  for (std::int64_t r = std::max<std::int64_t>(r_range.lo, 2); r <= r_range.hi; ++r) {
    for (std::int64_t ell = 1; ell <= ell_max; ++ell) {
      for (std::int64_t m = 0; m < ell; ++m) {
        for (std::int64_t d = 1; ell - d - m > 0; ++d) {
          // (r+1)d - (r-1)k = r(ell-1) determines k.
          const std::int64_t rhs = (r + 1) * d - r * (ell - 1);
          if (r == 1 || rhs % (r - 1) != 0) continue;
          const std::int64_t k = rhs / (r - 1);
          if (k < 0 || k > d) continue;
          const LemmaCheck check = qh_coeff_lemma_check(static_cast<int>(r), ell, m, d, k);
          out.push_back({static_cast<int>(r), ell, m, d, k, check.computed, check.predicted});
        }
      }
    }
  }
  return out;
}

}  // namespace tev
