#pragma once

#include <array>
#include <cstdlib>
#include <filesystem>
#include <stdexcept>
#include <string>

namespace memfir::testing {

// Target coefficients of the bundled 16th-order low-pass reference filter
// (f_s = 400 kHz, f_c = 20 kHz); same values as
// data/lowpass_fs400k_fc20k_order16.txt.
inline constexpr std::array<double, 17> kLowpassTargets = {
    0.00154566, 0.00569446, 0.01524095, 0.03180934, 0.05533191, 0.08306805,
    0.10980299, 0.12928842, 0.13643644, 0.12928842, 0.10980299, 0.08306805,
    0.05533191, 0.03180934, 0.01524095, 0.00569446, 0.00154566};

// Target coefficients of the bundled 11th-order high-pass reference filter
// (f_s = 500 kHz, f_c = 10 kHz); antisymmetric, same values as
// data/highpass_fs500k_fc10k_order11.txt.
inline constexpr std::array<double, 12> kHighpassTargets = {
    0.00341238, 0.01072902,  0.01438623,  -0.01139188, -0.11947815, -0.6108322,
    0.6108322,  0.11947815,  0.01139188,  -0.01438623, -0.01072902, -0.00341238};

// Known-good realized coefficients for the low-pass targets from a 7-bit
// synthesis (R_f = 48 kOhm); used as a deviation/objective fixture.
inline constexpr std::array<double, 17> kLowpassRealized7Bit = {
    0.001543060, 0.005681641, 0.015224887, 0.031811106, 0.055341896,
    0.083064799, 0.109803747, 0.129297782, 0.136423789, 0.129297782,
    0.109803747, 0.083064799, 0.055341896, 0.031811106, 0.015224887,
    0.005681641, 0.001543060};

// Reference design for the low-pass spec above, computed with an independent
// FIR design implementation (windowed-sinc, Hamming, unity DC gain). Used to
// cross-check design_windowed.
inline constexpr std::array<double, 17> kLowpassReferenceDesign = {
    0.0025399938350134568, 0.005744201059608384, 0.014708336514842971,
    0.031456060871750804,  0.05548225080960399,  0.08344191096544862,
    0.10988891143829414,   0.12885958166909486,  0.13575750567268552,
    0.12885958166909486,   0.10988891143829414,  0.08344191096544865,
    0.05548225080960399,   0.031456060871750784, 0.014708336514842971,
    0.005744201059608389,  0.0025399938350134568};

// Reference design for a 10th-order high-pass (f_s = 500 kHz, f_c = 10 kHz,
// Hamming, unity Nyquist gain) from the same independent implementation.
inline constexpr std::array<double, 11> kHighpassReferenceDesign = {
    -0.0029846781904230373, -0.00641580094403892, -0.01549366347493769,
    -0.026919405698569737,  -0.03628192422505892, 0.9571498815043781,
    -0.03628192422505892,   -0.026919405698569737, -0.01549366347493769,
    -0.00641580094403892,   -0.0029846781904230373};

inline std::filesystem::path data_dir() {
  if (const char* env = std::getenv("MEMFIR_DATA")) return env;
  throw std::runtime_error("MEMFIR_DATA is not set; run through ctest");
}

inline std::filesystem::path cli_path() {
  if (const char* env = std::getenv("MEMFIR_BIN")) return env;
  throw std::runtime_error("MEMFIR_BIN is not set; run through ctest");
}

}  // namespace memfir::testing
