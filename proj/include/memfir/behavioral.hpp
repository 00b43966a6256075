#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "memfir/filter_design.hpp"
#include "memfir/memristor.hpp"
#include "memfir/synthesis.hpp"

namespace memfir {

struct Signal {
  std::vector<double> samples;  // volts
  double f_sample = 0.0;        // Hz
  double t0 = 0.0;              // seconds
};

struct ToneComponent {
  double amplitude_v = 0.0;
  double frequency_hz = 0.0;
  double phase_rad = 0.0;
};

struct ToneSpec {
  std::vector<ToneComponent> components;
};

struct CircuitConfig {
  double scaling_gain = 1.0;      // attenuation a ahead of the memristors, 0 < a <= 1
  double r_s = 10e3;              // final difference-stage resistors (equal: unit gain)
  bool compensate_output = true;  // divide the reported output by a
  double dead_zone_v = 0.1;       // retention limit for the scaled samples
};

// samples[n] = sum_k A_k sin(2 pi f_k n / f_sample + phi_k), t0 = 0.
Signal generate_tones(const ToneSpec& spec, double f_sample, double duration_s);

// Ideal track-and-hold: keeps the value at every sampling instant. The dense
// rate must be an integer multiple of f_s so the instants are exact.
Signal sample_hold(const Signal& dense, double f_s);

// tap[k][n] = input[n - k], zero before the signal starts (filter at rest);
// each stage is an exact one-sample delay.
std::vector<std::vector<double>> delay_chain(const Signal& input, std::size_t order);

// Direct-form convolution y[n] = sum_i b_i x[n-i], zero initial conditions.
Signal evaluate_direct(std::span<const double> coeffs, const Signal& input);
Signal evaluate_direct(const CoefficientSet& coeffs, const Signal& input);

// Behavioral two-stage circuit: scales the input by a, forms the two
// inverting-summer branch outputs over r_plus and r_minus, differences them
// through the equal-R_s stage, and (optionally) divides by a. With ideal
// op-amps this equals evaluate_direct on the realized coefficients.
// Throws DeadZoneError when a * max|input| exceeds the dead-zone.
Signal evaluate_circuit(const SynthesisResult& result, const MemristanceGrid& grid,
                        const Signal& input, const CircuitConfig& cfg);

// Largest a <= 1 with a * max|input| <= dead_zone_v (1 for a silent input).
double required_scale(const Signal& input, double dead_zone_v);

struct DriftReport {
  double max_rel_change = 0.0;  // peak |M(t) - M0| / M0 over all devices and samples
  std::size_t worst_tap = 0;
  bool worst_is_plus = true;
  std::size_t devices = 0;
};

// Tunes one device per pair entry, plays the scaled per-tap sample voltages
// through the drift model for the whole run, and reports the worst relative
// memristance excursion. Zero whenever the dead-zone precondition holds.
DriftReport drift_check(const SynthesisResult& result, const MemristanceGrid& grid,
                        const Signal& input, const CircuitConfig& cfg,
                        const DeviceParams& device);

}  // namespace memfir
