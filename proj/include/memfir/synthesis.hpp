#pragma once

#include <optional>
#include <span>
#include <vector>

#include "memfir/filter_design.hpp"
#include "memfir/memristor.hpp"

namespace memfir {

enum class Method { simple, advanced };
enum class ObjectiveNorm { sum_abs, sum_squared, max_abs };
enum class Execution { serial, parallel };

struct MemristorPair {
  double r_plus = 0.0;
  double r_minus = 0.0;

  friend bool operator==(const MemristorPair&, const MemristorPair&) = default;
};

// Per-tap error. Percent of the target, except for zero targets where the
// relative form is undefined and the absolute |realized| is reported instead.
struct TapError {
  double value = 0.0;
  bool is_absolute = false;

  friend bool operator==(const TapError&, const TapError&) = default;
};

struct SynthesisResult {
  Method method = Method::simple;
  double r_feedback = 0.0;  // R_f of the first-stage summers (shared by both branches)
  std::vector<double> targets;
  std::vector<MemristorPair> pairs;   // one (R+, R-) per tap, grid members
  std::vector<double> realized;       // r_feedback/r_plus - r_feedback/r_minus per tap
  std::vector<TapError> errors;
  double objective = 0.0;
  ObjectiveNorm norm = ObjectiveNorm::sum_abs;
  double overall_gain = 1.0;  // final difference stage uses equal resistors: unit gain
};

struct SearchConfig {
  std::vector<double> r_f_candidates;  // nonempty, all positive
  ObjectiveNorm norm = ObjectiveNorm::sum_abs;
  MemristanceGrid grid;
  bool quantize_r_f = false;  // also force R_f onto the grid
  Execution execution = Execution::parallel;
};

// Signed coefficient realized by a differential pair; positive iff
// r_plus < r_minus, zero for an equal pair.
double coefficient_from_pair(double r_feedback, double r_plus, double r_minus);

double objective_value(std::span<const double> targets,
                       std::span<const double> realized, ObjectiveNorm norm);

// |(target - realized) / target| * 100. Requires target != 0.
double percent_error(double target, double realized);
TapError tap_error(double target, double realized);

// Inclusive stepped sweep used for R_f candidates: lo, lo+step, ... <= hi.
std::vector<double> r_f_sweep(double lo, double hi, double step = 1e3);
std::vector<double> default_r_f_candidates();

// Fixes the negative-branch memristor at r_max (mirrored for negative
// targets) and solves the other side. When r_feedback is omitted it is the
// smallest value from a 1 kOhm-stepped sweep of [r_min, r_max] that keeps
// every unquantized solution inside the grid range; throws InfeasibleError
// when no candidate does.
SynthesisResult synthesize_simple(const CoefficientSet& targets,
                                  const MemristanceGrid& grid,
                                  std::optional<double> r_feedback = std::nullopt);

// For every R_f candidate, finds the exact per-tap optimum over grid x grid
// pairs and keeps the candidate with the smallest total objective.
// Deterministic tie-breaks: lowest R_f, then lexicographically smallest
// (r_plus, r_minus). Results are bitwise identical for serial and parallel
// execution.
SynthesisResult synthesize_advanced(const CoefficientSet& targets,
                                    const SearchConfig& config);

// All SynthesisResult invariants: equal lengths, grid membership of every
// pair, and realized values that reproduce exactly from the pairs.
bool verify_result(const SynthesisResult& result, const MemristanceGrid& grid);

}  // namespace memfir
