#include "memfir/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>

#include "memfir/errors.hpp"

namespace memfir {
namespace {

struct TapPick {
  std::size_t plus_idx = 0;
  std::size_t minus_idx = 0;
  double realized = 0.0;
  double abs_err = 0.0;
};

// Exact per-tap optimum for a fixed feedback resistance. inv[j] = r_f /
// levels[j] is strictly decreasing in j. For a fixed R+ index p the error
// |target - (inv[p] - inv[m])| is V-shaped in inv[m], so the optimum over m
// is one of the two neighbours of inv[p] - target in the sorted array;
// scanning p in ascending level order with strict improvement yields the
// lexicographically smallest (r_plus, r_minus) among all global optima.
TapPick best_pair_for_target(double target, std::span<const double> inv) {
  const std::size_t n = inv.size();
  TapPick best;
  best.abs_err = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < n; ++p) {
    const double want = inv[p] - target;
    const auto it = std::lower_bound(inv.begin(), inv.end(), want, std::greater<double>());
    const std::size_t at = static_cast<std::size_t>(it - inv.begin());
    // Try the smaller level index first so equal-error ties keep it.
    for (std::size_t m : {at - 1, at}) {
      if (m >= n) continue;  // wraps for at == 0
      const double realized = inv[p] - inv[m];
      const double err = std::fabs(target - realized);
      if (err < best.abs_err) {
        best = {p, m, realized, err};
      }
    }
  }
  return best;
}

double accumulate_objective(std::span<const double> errs, ObjectiveNorm norm) {
  double f = 0.0;
  switch (norm) {
    case ObjectiveNorm::sum_abs:
      for (double e : errs) f += e;
      return f;
    case ObjectiveNorm::sum_squared:
      for (double e : errs) f += e * e;
      return f;
    case ObjectiveNorm::max_abs:
      for (double e : errs) f = std::max(f, e);
      return f;
  }
  throw std::invalid_argument("unknown objective norm");
}

double candidate_objective(std::span<const double> targets, double r_f,
                           std::span<const double> levels, ObjectiveNorm norm,
                           std::vector<double>& inv_scratch,
                           std::vector<double>& err_scratch) {
  inv_scratch.resize(levels.size());
  for (std::size_t j = 0; j < levels.size(); ++j) inv_scratch[j] = r_f / levels[j];
  err_scratch.resize(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    err_scratch[i] = best_pair_for_target(targets[i], inv_scratch).abs_err;
  }
  return accumulate_objective(err_scratch, norm);
}

}  // namespace

double coefficient_from_pair(double r_feedback, double r_plus, double r_minus) {
  if (!(r_feedback > 0.0 && r_plus > 0.0 && r_minus > 0.0)) {
    throw std::invalid_argument("resistances must be positive");
  }
  return r_feedback / r_plus - r_feedback / r_minus;
}

double objective_value(std::span<const double> targets,
                       std::span<const double> realized, ObjectiveNorm norm) {
  if (targets.size() != realized.size()) {
    throw std::invalid_argument("objective: length mismatch");
  }
  double f = 0.0;
  switch (norm) {
    case ObjectiveNorm::sum_abs:
      for (std::size_t i = 0; i < targets.size(); ++i) f += std::fabs(targets[i] - realized[i]);
      return f;
    case ObjectiveNorm::sum_squared:
      for (std::size_t i = 0; i < targets.size(); ++i) {
        const double e = std::fabs(targets[i] - realized[i]);
        f += e * e;
      }
      return f;
    case ObjectiveNorm::max_abs:
      for (std::size_t i = 0; i < targets.size(); ++i) {
        f = std::max(f, std::fabs(targets[i] - realized[i]));
      }
      return f;
  }
  throw std::invalid_argument("unknown objective norm");
}

double percent_error(double target, double realized) {
  if (target == 0.0) {
    throw std::invalid_argument("percent error is undefined for a zero target");
  }
  return std::fabs((target - realized) / target) * 100.0;
}

TapError tap_error(double target, double realized) {
  if (target == 0.0) {
    return {std::fabs(realized), true};
  }
  return {percent_error(target, realized), false};
}

std::vector<double> r_f_sweep(double lo, double hi, double step) {
  if (!(lo > 0.0) || !(hi >= lo) || !(step > 0.0)) {
    throw std::invalid_argument("sweep needs 0 < lo <= hi and step > 0");
  }
  std::vector<double> out;
  for (std::size_t k = 0;; ++k) {
    const double v = lo + step * static_cast<double>(k);
    if (v > hi) break;
    out.push_back(v);
  }
  return out;
}

std::vector<double> default_r_f_candidates() { return r_f_sweep(1e3, 1e6, 1e3); }

SynthesisResult synthesize_simple(const CoefficientSet& targets,
                                  const MemristanceGrid& grid,
                                  std::optional<double> r_feedback) {
  const auto& b = targets.coefficients;
  const double r_min = grid.r_min();
  const double r_max = grid.r_max();

  // Unquantized free-side solution of r_f/r - r_f/r_max = |b|.
  const auto solve = [r_max](double r_f, double mag) {
    return r_f / (mag + r_f / r_max);
  };

  double r_f;
  if (r_feedback.has_value()) {
    if (!(*r_feedback > 0.0)) {
      throw std::invalid_argument("feedback resistance must be positive");
    }
    r_f = *r_feedback;
  } else {
    // Smallest 1 kOhm-stepped candidate that keeps every unquantized
    // solution inside [r_min, r_max]; the upper bound holds automatically.
    r_f = -1.0;
    for (double cand : r_f_sweep(r_min, r_max, 1e3)) {
      bool ok = true;
      for (double bi : b) {
        if (solve(cand, std::fabs(bi)) < r_min) {
          ok = false;
          break;
        }
      }
      if (ok) {
        r_f = cand;
        break;
      }
    }
    if (r_f < 0.0) {
      throw InfeasibleError(
          "simple method infeasible: coefficient magnitude too large for the grid range");
    }
  }

  SynthesisResult result;
  result.method = Method::simple;
  result.r_feedback = r_f;
  result.targets = b;
  result.pairs.reserve(b.size());
  result.realized.reserve(b.size());
  result.errors.reserve(b.size());
  for (double bi : b) {
    const double q = grid.quantize(solve(r_f, std::fabs(bi)));
    const MemristorPair pair =
        bi >= 0.0 ? MemristorPair{q, r_max} : MemristorPair{r_max, q};
    const double realized = coefficient_from_pair(r_f, pair.r_plus, pair.r_minus);
    result.pairs.push_back(pair);
    result.realized.push_back(realized);
    result.errors.push_back(tap_error(bi, realized));
  }
  result.objective = objective_value(b, result.realized, result.norm);
  return result;
}

SynthesisResult synthesize_advanced(const CoefficientSet& targets,
                                    const SearchConfig& config) {
  if (config.r_f_candidates.empty()) {
    throw InfeasibleError("advanced method infeasible: no feedback-resistance candidates");
  }
  for (double c : config.r_f_candidates) {
    if (!(c > 0.0) || !std::isfinite(c)) {
      throw std::invalid_argument("feedback-resistance candidates must be positive and finite");
    }
  }

  const auto& b = targets.coefficients;
  const std::span<const double> levels = config.grid.levels();

  std::vector<double> candidates = config.r_f_candidates;
  if (config.quantize_r_f) {
    for (double& c : candidates) c = config.grid.quantize(c);
  }

  // Phase 1: objective per candidate. Each entry depends only on its own
  // candidate, so the parallel fill is bitwise identical to the serial one.
  const std::ptrdiff_t n_cand = static_cast<std::ptrdiff_t>(candidates.size());
  std::vector<double> objective(candidates.size());
  const bool parallel = config.execution == Execution::parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (std::ptrdiff_t idx = 0; idx < n_cand; ++idx) {
    std::vector<double> inv_scratch;
    std::vector<double> err_scratch;
    objective[static_cast<std::size_t>(idx)] = candidate_objective(
        b, candidates[static_cast<std::size_t>(idx)], levels, config.norm,
        inv_scratch, err_scratch);
  }
#ifndef _OPENMP
  (void)parallel;
#endif

  // Phase 2: argmin by (objective, r_f), so ties pick the lowest candidate
  // value no matter how the list was ordered.
  std::size_t best = 0;
  for (std::size_t idx = 1; idx < candidates.size(); ++idx) {
    if (objective[idx] < objective[best] ||
        (objective[idx] == objective[best] && candidates[idx] < candidates[best])) {
      best = idx;
    }
  }

  // Phase 3: rebuild the winner's taps.
  const double r_f = candidates[best];
  std::vector<double> inv(levels.size());
  for (std::size_t j = 0; j < levels.size(); ++j) inv[j] = r_f / levels[j];

  SynthesisResult result;
  result.method = Method::advanced;
  result.norm = config.norm;
  result.r_feedback = r_f;
  result.targets = b;
  result.pairs.reserve(b.size());
  result.realized.reserve(b.size());
  result.errors.reserve(b.size());
  std::vector<double> errs;
  errs.reserve(b.size());
  for (double bi : b) {
    const TapPick pick = best_pair_for_target(bi, inv);
    result.pairs.push_back({levels[pick.plus_idx], levels[pick.minus_idx]});
    result.realized.push_back(pick.realized);
    result.errors.push_back(tap_error(bi, pick.realized));
    errs.push_back(pick.abs_err);
  }
  result.objective = accumulate_objective(errs, config.norm);
  return result;
}

bool verify_result(const SynthesisResult& result, const MemristanceGrid& grid) {
  const std::size_t n = result.targets.size();
  if (n == 0 || result.pairs.size() != n || result.realized.size() != n ||
      result.errors.size() != n) {
    return false;
  }
  if (!(result.r_feedback > 0.0)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = result.pairs[i];
    if (!grid.contains(p.r_plus) || !grid.contains(p.r_minus)) return false;
    if (result.realized[i] != coefficient_from_pair(result.r_feedback, p.r_plus, p.r_minus)) {
      return false;
    }
  }
  return true;
}

}  // namespace memfir
