#include "memfir/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "memfir/filter_design.hpp"

namespace memfir {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double magnitude_db(double magnitude) {
  if (magnitude <= 0.0) return kDbFloor;
  return std::max(20.0 * std::log10(magnitude), kDbFloor);
}

ResponsePoint make_point(double f, std::complex<double> h) {
  const double mag = std::abs(h);
  return {f, mag, magnitude_db(mag), std::atan2(h.imag(), h.real())};
}

}  // namespace

std::complex<double> response_at(std::span<const double> coeffs, double f_s, double f) {
  if (!(f_s > 0.0)) throw std::invalid_argument("sampling rate must be positive");
  const double w = kTwoPi * f / f_s;
  std::complex<double> h = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double phi = -w * static_cast<double>(i);
    h += coeffs[i] * std::complex<double>(std::cos(phi), std::sin(phi));
  }
  return h;
}

FrequencyResponse frequency_response(std::span<const double> coeffs, double f_s,
                                     std::size_t n_points) {
  if (coeffs.empty()) throw std::invalid_argument("no coefficients");
  if (!(f_s > 0.0)) throw std::invalid_argument("sampling rate must be positive");
  if (n_points < 2) throw std::invalid_argument("need at least 2 response points");

  FrequencyResponse fr;
  fr.f_s = f_s;
  fr.points.reserve(n_points);
  const double nyquist = f_s / 2.0;
  for (std::size_t k = 0; k < n_points; ++k) {
    const double f =
        nyquist * static_cast<double>(k) / static_cast<double>(n_points - 1);
    std::complex<double> h;
    if (k == 0) {
      h = {dc_gain(coeffs), 0.0};  // analytic endpoint
    } else if (k == n_points - 1) {
      h = {nyquist_gain(coeffs), 0.0};  // analytic endpoint
    } else {
      h = response_at(coeffs, f_s, f);
    }
    fr.points.push_back(make_point(f, h));
  }
  return fr;
}

double tone_amplitude(const Signal& signal, double f, std::size_t settle) {
  if (!(signal.f_sample > 0.0)) throw std::invalid_argument("signal has no rate");
  if (!(f > 0.0 && f < signal.f_sample / 2.0)) {
    throw std::invalid_argument("tone frequency must lie strictly inside (0, f_s/2)");
  }
  if (settle >= signal.samples.size()) {
    throw std::invalid_argument("window too short: nothing left after settling");
  }
  const std::size_t avail = signal.samples.size() - settle;
  const double samples_per_cycle = signal.f_sample / f;
  const auto max_cycles =
      static_cast<long long>(static_cast<double>(avail) / samples_per_cycle);
  if (max_cycles < 2) {
    throw std::invalid_argument(
        "window too short: need at least 2 whole periods after settling");
  }

  // Pick the longest whole-cycle span that is an integral number of samples.
  std::size_t n = 0;
  for (long long c = max_cycles; c >= 2; --c) {
    const double exact = static_cast<double>(c) * samples_per_cycle;
    const double rounded = std::round(exact);
    if (std::fabs(exact - rounded) <= 1e-6 &&
        rounded <= static_cast<double>(avail)) {
      n = static_cast<std::size_t>(rounded);
      break;
    }
  }
  if (n < 2) {
    throw std::invalid_argument(
        "unaligned frequency: no whole-cycle window fits the signal");
  }

  const double w = kTwoPi * f / signal.f_sample;
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double phi = w * static_cast<double>(k);
    const double v = signal.samples[settle + k];
    re += v * std::cos(phi);
    im -= v * std::sin(phi);
  }
  return 2.0 / static_cast<double>(n) * std::hypot(re, im);
}

ErrorReport error_report(std::span<const SynthesisResult> results,
                         std::span<const ReportLabel> labels) {
  if (results.empty()) throw std::invalid_argument("no results to report");
  if (results.size() != labels.size()) {
    throw std::invalid_argument("one label per result required");
  }
  const auto& targets = results.front().targets;
  for (const auto& r : results) {
    if (r.targets != targets) {
      throw std::invalid_argument("mismatched targets: results must share target coefficients");
    }
  }

  ErrorReport report;
  for (std::size_t ri = 0; ri < results.size(); ++ri) {
    const auto& r = results[ri];
    const auto& label = labels[ri];
    double max_pct = 0.0;
    double sum_pct = 0.0;
    std::size_t pct_rows = 0;
    for (std::size_t tap = 0; tap < r.targets.size(); ++tap) {
      report.rows.push_back(
          {tap, label.method, label.bits, r.targets[tap], r.realized[tap], r.errors[tap]});
      if (!r.errors[tap].is_absolute) {
        max_pct = std::max(max_pct, r.errors[tap].value);
        sum_pct += r.errors[tap].value;
        ++pct_rows;
      }
    }
    report.summaries.push_back(
        {label.method, label.bits, max_pct,
         pct_rows ? sum_pct / static_cast<double>(pct_rows) : 0.0});
  }
  return report;
}

ResponseDeviation response_deviation(const FrequencyResponse& ideal,
                                     const FrequencyResponse& realized,
                                     double passband_lo_hz, double passband_hi_hz) {
  if (!(passband_lo_hz <= passband_hi_hz)) {
    throw std::invalid_argument("passband edges out of order");
  }
  if (ideal.f_s != realized.f_s || ideal.points.size() != realized.points.size()) {
    throw std::invalid_argument("grid mismatch between responses");
  }
  ResponseDeviation dev;
  for (std::size_t k = 0; k < ideal.points.size(); ++k) {
    if (ideal.points[k].f_hz != realized.points[k].f_hz) {
      throw std::invalid_argument("grid mismatch between responses");
    }
    const double d = std::fabs(ideal.points[k].magnitude_db - realized.points[k].magnitude_db);
    dev.max_db_overall = std::max(dev.max_db_overall, d);
    if (ideal.points[k].f_hz >= passband_lo_hz && ideal.points[k].f_hz <= passband_hi_hz) {
      dev.max_db_passband = std::max(dev.max_db_passband, d);
    }
  }
  return dev;
}

}  // namespace memfir
