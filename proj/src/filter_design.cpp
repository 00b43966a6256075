#include "memfir/filter_design.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace memfir {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

double window_value(Window window, std::size_t k, std::size_t order) {
  const double m = static_cast<double>(order);
  const double t = kTwoPi * static_cast<double>(k) / m;
  switch (window) {
    case Window::rectangular:
      return 1.0;
    case Window::hamming:
      return 0.54 - 0.46 * std::cos(t);
    case Window::hann:
      return 0.5 - 0.5 * std::cos(t);
    case Window::blackman:
      return 0.42 - 0.5 * std::cos(t) + 0.08 * std::cos(2.0 * t);
  }
  throw std::invalid_argument("unknown window");
}

void validate(const FilterSpec& spec) {
  if (!(spec.f_s_hz > 0.0)) {
    throw std::invalid_argument("invalid spec: sampling frequency must be positive");
  }
  if (!(spec.f_c_hz > 0.0 && spec.f_c_hz < spec.f_s_hz / 2.0)) {
    throw std::invalid_argument("invalid spec: cutoff must satisfy 0 < f_c < f_s/2");
  }
  if (spec.order < 1) {
    throw std::invalid_argument("invalid spec: order must be at least 1");
  }
}

}  // namespace

Symmetry classify_symmetry(std::span<const double> coeffs, double tol) {
  if (coeffs.size() < 2) {
    throw std::invalid_argument("symmetry needs at least 2 coefficients");
  }
  if (!(tol >= 0.0)) {
    throw std::invalid_argument("symmetry tolerance must be nonnegative");
  }
  const std::size_t m = coeffs.size() - 1;
  bool sym = true;
  bool anti = true;
  for (std::size_t i = 0; i <= m; ++i) {
    if (std::fabs(coeffs[i] - coeffs[m - i]) > tol) sym = false;
    if (std::fabs(coeffs[i] + coeffs[m - i]) > tol) anti = false;
  }
  if (sym) return Symmetry::symmetric;  // ties (all-zero input) resolve here
  if (anti) return Symmetry::antisymmetric;
  return Symmetry::none;
}

CoefficientSet make_coefficient_set(std::vector<double> coeffs, double tol) {
  if (coeffs.size() < 2) {
    throw std::invalid_argument("a coefficient set needs at least 2 taps");
  }
  for (double v : coeffs) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("coefficients must be finite");
    }
  }
  CoefficientSet set;
  set.symmetry = classify_symmetry(coeffs, tol);
  set.coefficients = std::move(coeffs);
  return set;
}

CoefficientSet design_windowed(const FilterSpec& spec) {
  validate(spec);
  const bool highpass = spec.family == FilterFamily::highpass;
  if (highpass && spec.order % 2 != 0) {
    throw std::invalid_argument(
        "unsupported: odd-order highpass design; load the coefficients from a file instead");
  }

  const std::size_t m = spec.order;
  const double mid = static_cast<double>(m) / 2.0;
  const double nu = spec.f_c_hz / spec.f_s_hz;  // cycles per sample

  // Compute one half and mirror it so symmetry is exact in every bit.
  std::vector<double> h(m + 1, 0.0);
  for (std::size_t k = 0; 2 * k <= m; ++k) {
    const double x = kTwoPi * nu * (static_cast<double>(k) - mid);
    double v = 2.0 * nu * sinc(x);
    if (highpass) v = (static_cast<double>(k) == mid ? 1.0 : 0.0) - v;
    v *= window_value(spec.window, k, m);
    h[k] = v;
    h[m - k] = v;
  }

  double gain;
  if (highpass) {
    // Unit amplitude response at Nyquist; the alternating sum carries an
    // extra (-1)^(m/2) from the linear-phase term.
    gain = nyquist_gain(h);
    if ((m / 2) % 2 != 0) gain = -gain;
  } else {
    gain = dc_gain(h);
  }
  if (gain == 0.0) {
    throw std::invalid_argument("invalid spec: design has zero gain at the reference frequency");
  }
  for (double& v : h) v /= gain;

  return make_coefficient_set(std::move(h));
}

double dc_gain(std::span<const double> coeffs) {
  double s = 0.0;
  for (double v : coeffs) s += v;
  return s;
}

double nyquist_gain(std::span<const double> coeffs) {
  double s = 0.0;
  double sign = 1.0;
  for (double v : coeffs) {
    s += sign * v;
    sign = -sign;
  }
  return s;
}

}  // namespace memfir
