#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace memfir {

enum class FilterFamily { lowpass, highpass };
enum class Window { rectangular, hamming, hann, blackman };
enum class Symmetry { symmetric, antisymmetric, none };

struct FilterSpec {
  FilterFamily family = FilterFamily::lowpass;
  double f_s_hz = 0.0;  // sampling frequency
  double f_c_hz = 0.0;  // cutoff frequency, 0 < f_c < f_s/2
  std::size_t order = 0;  // filter has order + 1 taps
  Window window = Window::hamming;
};

struct CoefficientSet {
  std::vector<double> coefficients;  // b_0 .. b_m
  Symmetry symmetry = Symmetry::none;

  std::size_t taps() const { return coefficients.size(); }
  std::size_t order() const { return coefficients.size() - 1; }
};

inline constexpr double kDefaultSymmetryTol = 1e-9;

// symmetric when |b_i - b_{m-i}| <= tol for all i, antisymmetric when
// |b_i + b_{m-i}| <= tol; symmetric is checked first, so an all-zero set
// classifies as symmetric.
Symmetry classify_symmetry(std::span<const double> coeffs, double tol);

// Validates length >= 2 and attaches the symmetry classification.
CoefficientSet make_coefficient_set(std::vector<double> coeffs,
                                    double tol = kDefaultSymmetryTol);

// Windowed-sinc design. Lowpass output is normalized to unit DC gain,
// highpass to unit gain at Nyquist; coefficients are exactly symmetric by
// construction. Highpass requires an even order (odd-length, type I).
CoefficientSet design_windowed(const FilterSpec& spec);

// DC gain (plain coefficient sum) and the signed response at Nyquist,
// sum of (-1)^i b_i. Both are the analytic endpoint values of the
// frequency response.
double dc_gain(std::span<const double> coeffs);
double nyquist_gain(std::span<const double> coeffs);

}  // namespace memfir
