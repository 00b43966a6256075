#include "memfir/behavioral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "memfir/errors.hpp"

namespace memfir {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double peak_abs(std::span<const double> samples) {
  double peak = 0.0;
  for (double v : samples) peak = std::max(peak, std::fabs(v));
  return peak;
}

void validate_config(const CircuitConfig& cfg) {
  if (!(cfg.scaling_gain > 0.0 && cfg.scaling_gain <= 1.0)) {
    throw std::invalid_argument("scaling gain must lie in (0, 1]");
  }
  if (!(cfg.r_s > 0.0)) {
    throw std::invalid_argument("final-stage resistance must be positive");
  }
  if (!(cfg.dead_zone_v > 0.0)) {
    throw std::invalid_argument("dead-zone voltage must be positive");
  }
}

void check_dead_zone(const Signal& input, const CircuitConfig& cfg) {
  const double peak = peak_abs(input.samples);
  if (cfg.scaling_gain * peak > cfg.dead_zone_v) {
    const double required = required_scale(input, cfg.dead_zone_v);
    throw DeadZoneError("scaled input exceeds the memristor dead-zone (" +
                            std::to_string(cfg.scaling_gain * peak) + " V > " +
                            std::to_string(cfg.dead_zone_v) +
                            " V); use a scaling gain of at most " +
                            std::to_string(required),
                        required);
  }
}

}  // namespace

Signal generate_tones(const ToneSpec& spec, double f_sample, double duration_s) {
  if (!(f_sample > 0.0)) throw std::invalid_argument("sample rate must be positive");
  if (!(duration_s > 0.0)) throw std::invalid_argument("duration must be positive");
  for (const auto& c : spec.components) {
    if (!(c.frequency_hz >= 0.0)) {
      throw std::invalid_argument("tone frequencies must be nonnegative");
    }
  }
  const auto count =
      static_cast<std::size_t>(std::max<long long>(1, std::llround(duration_s * f_sample)));
  Signal out;
  out.f_sample = f_sample;
  out.t0 = 0.0;
  out.samples.resize(count);
  for (std::size_t n = 0; n < count; ++n) {
    double v = 0.0;
    for (const auto& c : spec.components) {
      v += c.amplitude_v *
           std::sin(kTwoPi * c.frequency_hz * (static_cast<double>(n) / f_sample) +
                    c.phase_rad);
    }
    out.samples[n] = v;
  }
  return out;
}

Signal sample_hold(const Signal& dense, double f_s) {
  if (!(f_s > 0.0)) throw std::invalid_argument("sampling rate must be positive");
  if (!(dense.f_sample > 0.0)) throw std::invalid_argument("source signal has no rate");
  const double ratio = dense.f_sample / f_s;
  const long long r = std::llround(ratio);
  if (r < 1 || std::fabs(ratio - static_cast<double>(r)) > 1e-9 * static_cast<double>(r)) {
    throw std::invalid_argument(
        "rate mismatch: the dense rate must be an integer multiple of f_s");
  }
  Signal out;
  out.f_sample = f_s;
  out.t0 = dense.t0;
  const auto stride = static_cast<std::size_t>(r);
  out.samples.reserve(dense.samples.size() / stride + 1);
  for (std::size_t k = 0; k * stride < dense.samples.size(); ++k) {
    out.samples.push_back(dense.samples[k * stride]);
  }
  return out;
}

std::vector<std::vector<double>> delay_chain(const Signal& input, std::size_t order) {
  const auto& x = input.samples;
  std::vector<std::vector<double>> taps(order + 1, std::vector<double>(x.size(), 0.0));
  for (std::size_t k = 0; k <= order; ++k) {
    for (std::size_t n = k; n < x.size(); ++n) {
      taps[k][n] = x[n - k];
    }
  }
  return taps;
}

Signal evaluate_direct(std::span<const double> coeffs, const Signal& input) {
  if (coeffs.empty()) throw std::invalid_argument("no coefficients");
  const auto& x = input.samples;
  Signal out;
  out.f_sample = input.f_sample;
  out.t0 = input.t0;
  out.samples.resize(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) {
    double acc = 0.0;
    const std::size_t last = std::min(n, coeffs.size() - 1);
    for (std::size_t i = 0; i <= last; ++i) {
      acc += coeffs[i] * x[n - i];
    }
    out.samples[n] = acc;
  }
  return out;
}

Signal evaluate_direct(const CoefficientSet& coeffs, const Signal& input) {
  return evaluate_direct(std::span<const double>(coeffs.coefficients), input);
}

Signal evaluate_circuit(const SynthesisResult& result, const MemristanceGrid& grid,
                        const Signal& input, const CircuitConfig& cfg) {
  validate_config(cfg);
  if (!verify_result(result, grid)) {
    throw std::invalid_argument("synthesis result fails verification against the grid");
  }
  check_dead_zone(input, cfg);

  const std::size_t taps = result.pairs.size();
  std::vector<double> gain_plus(taps);
  std::vector<double> gain_minus(taps);
  for (std::size_t i = 0; i < taps; ++i) {
    gain_plus[i] = result.r_feedback / result.pairs[i].r_plus;
    gain_minus[i] = result.r_feedback / result.pairs[i].r_minus;
  }

  const auto& x = input.samples;
  const double a = cfg.scaling_gain;
  Signal out;
  out.f_sample = input.f_sample;
  out.t0 = input.t0;
  out.samples.resize(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) {
    // Both first-stage summers are inverting; the equal-R_s difference stage
    // subtracts them, leaving y = sum_i (R_f/R_i+ - R_f/R_i-) * a * x[n-i].
    double branch_plus = 0.0;
    double branch_minus = 0.0;
    const std::size_t last = std::min(n, taps - 1);
    for (std::size_t i = 0; i <= last; ++i) {
      const double sample = a * x[n - i];
      branch_plus += gain_plus[i] * sample;
      branch_minus += gain_minus[i] * sample;
    }
    double y = branch_plus - branch_minus;
    if (cfg.compensate_output) y /= a;
    out.samples[n] = y;
  }
  return out;
}

double required_scale(const Signal& input, double dead_zone_v) {
  if (!(dead_zone_v > 0.0)) {
    throw std::invalid_argument("dead-zone voltage must be positive");
  }
  const double peak = peak_abs(input.samples);
  if (peak == 0.0) return 1.0;
  double a = std::min(1.0, dead_zone_v / peak);
  // Guard the rounding of the quotient so a * peak <= dead_zone_v holds.
  while (a * peak > dead_zone_v) a = std::nextafter(a, 0.0);
  return a;
}

DriftReport drift_check(const SynthesisResult& result, const MemristanceGrid& grid,
                        const Signal& input, const CircuitConfig& cfg,
                        const DeviceParams& device) {
  validate_config(cfg);
  if (!verify_result(result, grid)) {
    throw std::invalid_argument("synthesis result fails verification against the grid");
  }
  check_dead_zone(input, cfg);
  if (!(input.f_sample > 0.0)) throw std::invalid_argument("input signal has no rate");

  const double dt = 1.0 / input.f_sample;
  const auto& x = input.samples;
  DriftReport report;
  report.devices = 2 * result.pairs.size();

  for (std::size_t tap = 0; tap < result.pairs.size(); ++tap) {
    const double values[2] = {result.pairs[tap].r_plus, result.pairs[tap].r_minus};
    for (int side = 0; side < 2; ++side) {
      MemristorState state;
      state.device = device;
      state = tune(state, values[side], grid);
      const double m0 = memristance(state);
      // Tap `tap` sees the scaled input delayed by `tap` samples; the
      // leading zeros sit inside the dead-zone and change nothing.
      for (std::size_t n = tap; n < x.size(); ++n) {
        state = step(state, cfg.scaling_gain * x[n - tap], dt);
        const double rel = std::fabs(memristance(state) - m0) / m0;
        if (rel > report.max_rel_change) {
          report.max_rel_change = rel;
          report.worst_tap = tap;
          report.worst_is_plus = side == 0;
        }
      }
    }
  }
  return report;
}

}  // namespace memfir
