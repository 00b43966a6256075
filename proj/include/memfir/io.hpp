#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "memfir/analysis.hpp"
#include "memfir/behavioral.hpp"
#include "memfir/filter_design.hpp"
#include "memfir/synthesis.hpp"

namespace memfir {

// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

// Coefficient files: UTF-8 text, one decimal value per line, optional '#'
// comments and blank lines; or a JSON document {"coefficients": [..]}
// (autodetected). Values are kept at full double precision.
CoefficientSet parse_coefficients(std::istream& in, double tol = kDefaultSymmetryTol);
CoefficientSet load_coefficients(const std::filesystem::path& path,
                                 double tol = kDefaultSymmetryTol);
void save_coefficients(const std::filesystem::path& path,
                       std::span<const double> coeffs,
                       const std::string& header_comment = "");

std::string method_name(Method m);
std::string spacing_name(GridSpacing s);
std::string norm_name(ObjectiveNorm n);

// Wire format:
// {method, r_f_ohms, taps: [{r_plus_ohms, r_minus_ohms, target, realized,
//  error_pct}], objective, grid: {r_min, r_max, bits, spacing}}.
// Taps with a zero target additionally carry error_pct_is_absolute = true.
std::string synthesis_to_json(const SynthesisResult& result, const MemristanceGrid& grid);

struct LoadedSynthesis {
  SynthesisResult result;
  MemristanceGrid grid;
};
LoadedSynthesis synthesis_from_json(const std::string& text);
LoadedSynthesis load_synthesis(const std::filesystem::path& path);
void save_synthesis_json(const std::filesystem::path& path,
                         const SynthesisResult& result, const MemristanceGrid& grid);

// One tap per row: tap,target,realized,error_pct,r_plus_ohms,r_minus_ohms.
void save_synthesis_csv(const std::filesystem::path& path, const SynthesisResult& result);

// {"components": [{"amp_v":, "freq_hz":, "phase_rad":}]}
ToneSpec tone_spec_from_json(const std::string& text);
ToneSpec load_tone_spec(const std::filesystem::path& path);

// CSV with header t_seconds,volts (or n,volts) plus a JSON sidecar
// {f_sample_hz, t0} at the same path with a .json extension.
void save_signal_csv(const std::filesystem::path& path, const Signal& signal,
                     bool time_column = true);
Signal load_signal_csv(const std::filesystem::path& path);

// f_hz,magnitude,magnitude_db,phase_rad
void save_response_csv(const std::filesystem::path& path, const FrequencyResponse& fr);

// tap,method,bits,target,realized,error_pct
void save_error_report_csv(const std::filesystem::path& path, const ErrorReport& report);
std::string error_report_to_json(const ErrorReport& report);

// Determinism self-check hook: the pipeline never draws random numbers, and
// this counter stays zero. The CLI --seedless flag asserts on it.
unsigned long rng_use_count();

}  // namespace memfir
