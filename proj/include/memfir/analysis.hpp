#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "memfir/behavioral.hpp"
#include "memfir/synthesis.hpp"

namespace memfir {

// Stand-in for -inf in serialized magnitude-dB columns.
inline constexpr double kDbFloor = -300.0;

struct ResponsePoint {
  double f_hz = 0.0;
  double magnitude = 0.0;
  double magnitude_db = 0.0;
  double phase_rad = 0.0;
};

struct FrequencyResponse {
  std::vector<ResponsePoint> points;  // strictly increasing f over [0, f_s/2]
  double f_s = 0.0;
};

// H(f) = sum_i b_i e^{-j 2 pi f i / f_s}.
std::complex<double> response_at(std::span<const double> coeffs, double f_s, double f);

// Uniform n_points grid over [0, f_s/2] inclusive. The two endpoints are
// evaluated analytically (plain and alternating coefficient sums) so they
// agree exactly with dc_gain / nyquist_gain.
FrequencyResponse frequency_response(std::span<const double> coeffs, double f_s,
                                     std::size_t n_points = 1024);

// Single-bin projection of the component at f over the post-settle window,
// 2/N scaling. The window is chosen internally: the largest whole number of
// cycles >= 2 whose span is an integral sample count. Throws when the window
// is too short or no aligned span exists. Requires 0 < f < f_s/2.
double tone_amplitude(const Signal& signal, double f, std::size_t settle);

struct ReportLabel {
  Method method = Method::simple;
  unsigned bits = 0;
};

struct ErrorReportRow {
  std::size_t tap = 0;
  Method method = Method::simple;
  unsigned bits = 0;
  double target = 0.0;
  double realized = 0.0;
  TapError error;
};

struct ErrorReportSummary {
  Method method = Method::simple;
  unsigned bits = 0;
  double max_error_pct = 0.0;   // over percent rows; flagged-absolute rows excluded
  double mean_error_pct = 0.0;
};

struct ErrorReport {
  std::vector<ErrorReportRow> rows;
  std::vector<ErrorReportSummary> summaries;
};

// Per-tap error table across results that share the same target
// coefficients (bitwise); one label per result.
ErrorReport error_report(std::span<const SynthesisResult> results,
                         std::span<const ReportLabel> labels);

struct ResponseDeviation {
  double max_db_passband = 0.0;
  double max_db_overall = 0.0;
};

// Element-wise |dB| differences between two responses on the same grid.
ResponseDeviation response_deviation(const FrequencyResponse& ideal,
                                     const FrequencyResponse& realized,
                                     double passband_lo_hz, double passband_hi_hz);

}  // namespace memfir
