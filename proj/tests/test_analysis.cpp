#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "memfir/analysis.hpp"
#include "memfir/filter_design.hpp"

using namespace memfir;
using namespace memfir::testing;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> lowpass() {
  return {kLowpassTargets.begin(), kLowpassTargets.end()};
}

std::vector<double> highpass() {
  return {kHighpassTargets.begin(), kHighpassTargets.end()};
}

Signal tone(double amp, double f, double f_s, std::size_t count) {
  Signal s{{}, f_s, 0.0};
  s.samples.resize(count);
  for (std::size_t n = 0; n < count; ++n) {
    s.samples[n] = amp * std::sin(kTwoPi * f * (static_cast<double>(n) / f_s));
  }
  return s;
}

}  // namespace

TEST_CASE("frequency response endpoints are the analytic sums") {
  const auto lp = lowpass();
  const FrequencyResponse fr = frequency_response(lp, 400e3, 256);
  REQUIRE(fr.points.size() == 256);
  CHECK(fr.points.front().f_hz == 0.0);
  CHECK(fr.points.back().f_hz == 200e3);
  CHECK(fr.points.front().magnitude == std::fabs(dc_gain(lp)));      // bit-for-bit
  CHECK(fr.points.back().magnitude == std::fabs(nyquist_gain(lp)));  // bit-for-bit
  CHECK(fr.points.front().magnitude == doctest::Approx(1.0).epsilon(1e-7));

  const auto hp = highpass();
  const FrequencyResponse hfr = frequency_response(hp, 500e3, 128);
  CHECK(hfr.points.front().magnitude == std::fabs(dc_gain(hp)));
  CHECK(hfr.points.front().magnitude <= 1e-15);  // antisymmetric: DC null
  CHECK(hfr.points.back().magnitude == std::fabs(nyquist_gain(hp)));

  for (std::size_t k = 1; k < fr.points.size(); ++k) {
    CHECK(fr.points[k].f_hz > fr.points[k - 1].f_hz);
  }
}

TEST_CASE("a single unit coefficient is all-pass") {
  const std::vector<double> one{1.0};
  const FrequencyResponse fr = frequency_response(one, 48e3, 64);
  for (const auto& p : fr.points) {
    CHECK(p.magnitude == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("exact nulls hit the dB floor") {
  // [1, -1] has an exact null at DC.
  const FrequencyResponse fr = frequency_response(std::vector{1.0, -1.0}, 1e3, 16);
  CHECK(fr.points.front().magnitude == 0.0);
  CHECK(fr.points.front().magnitude_db == kDbFloor);
}

TEST_CASE("response grid validation") {
  CHECK_THROWS_AS(frequency_response(std::vector{1.0, 1.0}, 1e3, 1), std::invalid_argument);
  CHECK_THROWS_AS(frequency_response(std::vector<double>{}, 1e3, 16), std::invalid_argument);
  CHECK_THROWS_AS(frequency_response(std::vector{1.0, 1.0}, 0.0, 16), std::invalid_argument);
}

TEST_CASE("symmetric sets have linear phase") {
  const auto check_linear_phase = [](const std::vector<double>& b, double f_s) {
    const double m = static_cast<double>(b.size() - 1);
    const FrequencyResponse fr = frequency_response(b, f_s, 512);
    bool have_ref = false;
    double ref = 0.0;
    for (const auto& p : fr.points) {
      if (p.magnitude <= 1e-12) continue;
      const double excess = p.phase_rad + kTwoPi * p.f_hz * (m / 2.0) / f_s;
      if (!have_ref) {
        ref = excess;
        have_ref = true;
        continue;
      }
      // Compare modulo pi; the phase of a tiny magnitude carries rounding
      // noise of order eps/|H|, so the tolerance scales with it.
      double d = std::fmod(excess - ref, std::numbers::pi);
      if (d < 0.0) d += std::numbers::pi;
      const double circular = std::min(d, std::numbers::pi - d);
      CHECK(circular < 1e-7 + 1e-13 / p.magnitude);
    }
  };
  check_linear_phase(lowpass(), 400e3);

  std::mt19937 rng(606);
  std::uniform_real_distribution<double> v(-1.0, 1.0);
  std::vector<double> b(9);
  for (std::size_t i = 0; i <= 4; ++i) {
    b[i] = v(rng);
    b[8 - i] = b[i];
  }
  check_linear_phase(b, 10e3);
}

TEST_CASE("tone_amplitude recovers aligned amplitudes exactly") {
  const Signal pure = tone(0.37, 1e3, 48e3, 480);
  CHECK(tone_amplitude(pure, 1e3, 0) == doctest::Approx(0.37).epsilon(1e-9));

  // Two-tone input: each component comes back, absent bins read zero.
  Signal mix = tone(0.4, 5e3, 400e3, 4000);
  const Signal second = tone(0.4, 60e3, 400e3, 4000);
  for (std::size_t n = 0; n < mix.samples.size(); ++n) {
    mix.samples[n] += second.samples[n];
  }
  CHECK(tone_amplitude(mix, 5e3, 0) == doctest::Approx(0.4).epsilon(1e-9));
  CHECK(tone_amplitude(mix, 60e3, 0) == doctest::Approx(0.4).epsilon(1e-9));
  CHECK(tone_amplitude(mix, 30e3, 0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
}

TEST_CASE("tone_amplitude is linear in the signal") {
  const Signal a = tone(0.2, 2e3, 100e3, 1000);
  Signal scaled = a;
  for (double& v : scaled.samples) v *= 3.5;
  CHECK(tone_amplitude(scaled, 2e3, 0) ==
        doctest::Approx(3.5 * tone_amplitude(a, 2e3, 0)).epsilon(1e-12));
}

TEST_CASE("tone_amplitude rejects bad windows") {
  const Signal s = tone(0.1, 1e3, 10e3, 25);
  CHECK_THROWS_AS(tone_amplitude(s, 1e3, 20), std::invalid_argument);   // too short
  CHECK_THROWS_AS(tone_amplitude(s, 1e3, 25), std::invalid_argument);   // nothing left
  CHECK_THROWS_AS(tone_amplitude(s, 0.0, 0), std::invalid_argument);    // bad frequency
  CHECK_THROWS_AS(tone_amplitude(s, 6e3, 0), std::invalid_argument);    // above Nyquist

  // No whole-cycle window of >= 2 cycles is an integral sample count here.
  const Signal odd = tone(0.1, 123.456, 1e3, 40);
  CHECK_THROWS_AS(tone_amplitude(odd, 123.456, 0), std::invalid_argument);
}

TEST_CASE("filtering a tone scales it by the response magnitude") {
  std::mt19937 rng(7171);
  std::uniform_real_distribution<double> v(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> coeffs(3 + rng() % 8);
    for (double& c : coeffs) c = v(rng);
    const double f_s = 64e3;
    const double f = 1e3 * static_cast<double>(1 + rng() % 8);  // aligned bins
    const Signal x = tone(0.25, f, f_s, 1024);
    const Signal y = evaluate_direct(std::span<const double>(coeffs), x);
    const double expected = 0.25 * std::abs(response_at(coeffs, f_s, f));
    const double measured = tone_amplitude(y, f, coeffs.size());
    CHECK(measured == doctest::Approx(expected).scale(1.0).epsilon(1e-6));
  }
}

TEST_CASE("error report flags, summarizes and validates") {
  SynthesisResult perfect;
  perfect.method = Method::advanced;
  perfect.r_feedback = 48e3;
  perfect.targets = {0.5, -0.25};
  perfect.pairs = {{1e3, 1e3}, {1e3, 1e3}};
  perfect.realized = perfect.targets;
  perfect.errors = {tap_error(0.5, 0.5), tap_error(-0.25, -0.25)};

  const ReportLabel label{Method::advanced, 7};
  const ErrorReport report = error_report(std::vector{perfect}, std::vector{label});
  REQUIRE(report.rows.size() == 2);
  for (const auto& row : report.rows) CHECK(row.error.value == 0.0);
  CHECK(report.summaries.front().max_error_pct == 0.0);
  CHECK(report.summaries.front().mean_error_pct == 0.0);

  SynthesisResult other = perfect;
  other.targets = {0.5, -0.3};
  CHECK_THROWS_AS(error_report(std::vector{perfect, other},
                               std::vector{label, label}),
                  std::invalid_argument);
  CHECK_THROWS_AS(error_report(std::vector{perfect}, std::vector<ReportLabel>{}),
                  std::invalid_argument);
}

TEST_CASE("error report ranks the methods on the bundled fixtures") {
  const MemristanceGrid grid(1e3, 1e6, 7, GridSpacing::linear_resistance);
  const CoefficientSet targets = make_coefficient_set(lowpass());
  const SynthesisResult simple = synthesize_simple(targets, grid);
  const SynthesisResult advanced = synthesize_advanced(
      targets, {.r_f_candidates = default_r_f_candidates(), .grid = grid});

  const ErrorReport report = error_report(
      std::vector{simple, advanced},
      std::vector{ReportLabel{Method::simple, 7}, ReportLabel{Method::advanced, 7}});
  REQUIRE(report.summaries.size() == 2);
  CHECK(report.summaries[1].max_error_pct < report.summaries[0].max_error_pct);
  CHECK(report.summaries[1].mean_error_pct < report.summaries[0].mean_error_pct);
  CHECK(report.rows.size() == 2 * targets.taps());

  const FrequencyResponse ideal = frequency_response(lowpass(), 400e3, 1024);
  const FrequencyResponse from_simple =
      frequency_response(simple.realized, 400e3, 1024);
  const FrequencyResponse from_advanced =
      frequency_response(advanced.realized, 400e3, 1024);
  const ResponseDeviation dev_simple = response_deviation(ideal, from_simple, 0.0, 20e3);
  const ResponseDeviation dev_advanced =
      response_deviation(ideal, from_advanced, 0.0, 20e3);
  CHECK(dev_advanced.max_db_passband < dev_simple.max_db_passband);
}

TEST_CASE("response deviation of the bundled lowpass columns stays in budget") {
  const FrequencyResponse ideal = frequency_response(lowpass(), 400e3, 1024);
  const FrequencyResponse realized = frequency_response(
      std::vector<double>(kLowpassRealized7Bit.begin(), kLowpassRealized7Bit.end()),
      400e3, 1024);
  const ResponseDeviation dev = response_deviation(ideal, realized, 0.0, 20e3);
  CHECK(dev.max_db_passband > 0.0);
  CHECK(dev.max_db_passband < 0.1);
  CHECK(dev.max_db_overall >= dev.max_db_passband);

  const ResponseDeviation self = response_deviation(ideal, ideal, 0.0, 20e3);
  CHECK(self.max_db_passband == 0.0);
  CHECK(self.max_db_overall == 0.0);
}

TEST_CASE("response deviation rejects mismatched grids") {
  const FrequencyResponse a = frequency_response(lowpass(), 400e3, 128);
  const FrequencyResponse b = frequency_response(lowpass(), 400e3, 256);
  CHECK_THROWS_AS(response_deviation(a, b, 0.0, 20e3), std::invalid_argument);
  const FrequencyResponse c = frequency_response(lowpass(), 500e3, 128);
  CHECK_THROWS_AS(response_deviation(a, c, 0.0, 20e3), std::invalid_argument);
  CHECK_THROWS_AS(response_deviation(a, a, 20e3, 0.0), std::invalid_argument);
}
