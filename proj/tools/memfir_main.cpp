// memfir: maps FIR coefficients onto differential memristor pairs, simulates
// the behavioral two-stage circuit, and reports coefficient / frequency-
// response accuracy. Subcommands: design, synth, simulate, response.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "memfir/analysis.hpp"
#include "memfir/behavioral.hpp"
#include "memfir/errors.hpp"
#include "memfir/filter_design.hpp"
#include "memfir/io.hpp"
#include "memfir/memristor.hpp"
#include "memfir/synthesis.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitDeadZone = 4;

// Every option doubles as a config-file key: the long name with dashes
// replaced by underscores. Explicit flags win over the config file.
struct ConfigFile {
  json data = json::object();

  void load(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw memfir::ParseError("cannot open config " + path.string());
    try {
      in >> data;
    } catch (const json::parse_error& e) {
      throw memfir::ParseError(std::string("config JSON: ") + e.what());
    }
    if (!data.is_object()) throw memfir::ParseError("config JSON must be an object");
  }

  template <typename T>
  void apply(const CLI::Option* opt, const std::string& key, T& value) const {
    if (opt != nullptr && opt->count() > 0) return;  // flag overrides file
    if (!data.contains(key)) return;
    try {
      value = data.at(key).get<T>();
    } catch (const json::exception& e) {
      throw memfir::ParseError("config key '" + key + "': " + e.what());
    }
  }
};

struct GlobalOptions {
  std::string config_path;
  std::string out_dir = ".";
  bool seedless = false;

  CLI::Option* out_dir_opt = nullptr;
};

memfir::GridSpacing parse_spacing(const std::string& s) {
  if (s == "linres") return memfir::GridSpacing::linear_resistance;
  if (s == "lincond") return memfir::GridSpacing::linear_conductance;
  throw CLI::ValidationError("--grid-spacing", "expected 'linres' or 'lincond'");
}

memfir::ObjectiveNorm parse_norm(const std::string& s) {
  if (s == "sum_abs") return memfir::ObjectiveNorm::sum_abs;
  if (s == "sum_squared") return memfir::ObjectiveNorm::sum_squared;
  if (s == "max_abs") return memfir::ObjectiveNorm::max_abs;
  throw CLI::ValidationError("--objective", "expected sum_abs, sum_squared or max_abs");
}

std::vector<unsigned> parse_bits_list(const std::string& s) {
  std::vector<unsigned> bits;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const int v = std::stoi(item);
    if (v < 1 || v > 16) {
      throw CLI::ValidationError("--bits", "resolutions must be in [1, 16]");
    }
    bits.push_back(static_cast<unsigned>(v));
  }
  if (bits.empty()) throw CLI::ValidationError("--bits", "no resolutions given");
  return bits;
}

fs::path ensure_out_dir(const std::string& out_dir) {
  fs::path dir(out_dir);
  fs::create_directories(dir);
  return dir;
}

void note_written(const fs::path& path) {
  std::cout << "wrote " << path.string() << "\n";
}

// ---------------------------------------------------------------- design --

struct DesignArgs {
  std::string family;
  double f_s = 0.0;
  double f_c = 0.0;
  int order = 0;
  std::string window = "hamming";
  std::string output = "coefficients.txt";
};

int run_design(const DesignArgs& args, const GlobalOptions& global) {
  memfir::FilterSpec spec;
  if (args.family == "lowpass") {
    spec.family = memfir::FilterFamily::lowpass;
  } else if (args.family == "highpass") {
    spec.family = memfir::FilterFamily::highpass;
  } else {
    throw CLI::ValidationError("--family", "expected 'lowpass' or 'highpass'");
  }
  if (args.window == "rectangular") spec.window = memfir::Window::rectangular;
  else if (args.window == "hamming") spec.window = memfir::Window::hamming;
  else if (args.window == "hann") spec.window = memfir::Window::hann;
  else if (args.window == "blackman") spec.window = memfir::Window::blackman;
  else throw CLI::ValidationError("--window", "unknown window '" + args.window + "'");
  if (args.order < 1) {
    throw CLI::ValidationError("--order", "order must be at least 1");
  }
  spec.f_s_hz = args.f_s;
  spec.f_c_hz = args.f_c;
  spec.order = static_cast<std::size_t>(args.order);

  const memfir::CoefficientSet set = memfir::design_windowed(spec);

  const fs::path out = ensure_out_dir(global.out_dir) / args.output;
  std::ostringstream header;
  header << args.family << " order " << args.order << ", f_s " << args.f_s
         << " Hz, f_c " << args.f_c << " Hz, " << args.window << " window";
  memfir::save_coefficients(out, set.coefficients, header.str());
  note_written(out);

  const char* symmetry = set.symmetry == memfir::Symmetry::symmetric     ? "symmetric"
                         : set.symmetry == memfir::Symmetry::antisymmetric ? "antisymmetric"
                                                                           : "none";
  std::cout << "taps: " << set.taps() << "\n"
            << "symmetry: " << symmetry << "\n"
            << "dc_gain: " << memfir::format_double(memfir::dc_gain(set.coefficients)) << "\n"
            << "nyquist_gain: "
            << memfir::format_double(memfir::nyquist_gain(set.coefficients)) << "\n";
  return 0;
}

// ----------------------------------------------------------------- synth --

struct SynthArgs {
  std::string coeffs;
  std::string bits = "7";
  std::string method = "both";
  double grid_min = 1e3;
  double grid_max = 1e6;
  std::string spacing = "linres";
  std::optional<double> rf_ohms;
  double rf_min = 1e3;
  double rf_max = 1e6;
  double rf_step = 1e3;
  bool rf_on_grid = false;
  std::string objective = "sum_abs";
  std::string exec = "parallel";
};

int run_synth(const SynthArgs& args, const GlobalOptions& global) {
  const memfir::CoefficientSet targets = memfir::load_coefficients(args.coeffs);
  const auto bits_list = parse_bits_list(args.bits);
  const auto spacing = parse_spacing(args.spacing);
  const auto norm = parse_norm(args.objective);
  const bool run_simple = args.method == "simple" || args.method == "both";
  const bool run_advanced = args.method == "advanced" || args.method == "both";
  if (!run_simple && !run_advanced) {
    throw CLI::ValidationError("--method", "expected simple, advanced or both");
  }
  memfir::Execution exec;
  if (args.exec == "serial") exec = memfir::Execution::serial;
  else if (args.exec == "parallel") exec = memfir::Execution::parallel;
  else throw CLI::ValidationError("--exec", "expected 'serial' or 'parallel'");

  const fs::path dir = ensure_out_dir(global.out_dir);
  std::vector<memfir::SynthesisResult> results;
  std::vector<memfir::ReportLabel> labels;
  std::vector<std::string> failures;

  for (unsigned bits : bits_list) {
    const memfir::MemristanceGrid grid(args.grid_min, args.grid_max, bits, spacing);
    const auto emit = [&](const memfir::SynthesisResult& result) {
      std::ostringstream stem;
      stem << "synth_" << memfir::method_name(result.method) << "_" << bits << "bit";
      const fs::path jpath = dir / (stem.str() + ".json");
      const fs::path cpath = dir / (stem.str() + ".csv");
      memfir::save_synthesis_json(jpath, result, grid);
      memfir::save_synthesis_csv(cpath, result);
      note_written(jpath);
      note_written(cpath);
      results.push_back(result);
      labels.push_back({result.method, bits});
    };

    if (run_simple) {
      try {
        emit(memfir::synthesize_simple(targets, grid, args.rf_ohms));
      } catch (const memfir::InfeasibleError& e) {
        failures.push_back("simple @" + std::to_string(bits) + " bits: " + e.what());
      }
    }
    if (run_advanced) {
      memfir::SearchConfig config{
          .r_f_candidates = args.rf_ohms
                                ? std::vector<double>{*args.rf_ohms}
                                : memfir::r_f_sweep(args.rf_min, args.rf_max, args.rf_step),
          .norm = norm,
          .grid = grid,
          .quantize_r_f = args.rf_on_grid,
          .execution = exec};
      try {
        emit(memfir::synthesize_advanced(targets, config));
      } catch (const memfir::InfeasibleError& e) {
        failures.push_back("advanced @" + std::to_string(bits) + " bits: " + e.what());
      }
    }
  }

  if (!results.empty()) {
    const memfir::ErrorReport report = memfir::error_report(results, labels);
    const fs::path cpath = dir / "error_report.csv";
    const fs::path jpath = dir / "error_report.json";
    memfir::save_error_report_csv(cpath, report);
    std::ofstream(jpath) << memfir::error_report_to_json(report);
    note_written(cpath);
    note_written(jpath);
    for (const auto& s : report.summaries) {
      std::cout << memfir::method_name(s.method) << " " << s.bits
                << "-bit: max error " << memfir::format_double(s.max_error_pct)
                << " %, mean " << memfir::format_double(s.mean_error_pct) << " %\n";
    }
  }
  for (const auto& f : failures) std::cerr << "infeasible: " << f << "\n";
  return failures.empty() ? 0 : kExitInfeasible;
}

// -------------------------------------------------------------- simulate --

struct SimulateArgs {
  std::string synth;
  std::string tones;
  double f_s = 0.0;
  double duration = 0.01;
  int dense_factor = 8;
  std::string scale_a = "auto";
  int settle = -1;  // -1: one filter memory
  bool no_compensate = false;
  bool dump_taps = false;
  double device_threshold = 0.1;
  double device_thickness = 10e-9;
  double device_mobility = 1e-14;
};

int run_simulate(const SimulateArgs& args, const GlobalOptions& global) {
  const memfir::LoadedSynthesis loaded = memfir::load_synthesis(args.synth);
  if (!memfir::verify_result(loaded.result, loaded.grid)) {
    throw memfir::ParseError("synthesis file fails verification against its grid");
  }
  const memfir::ToneSpec tones = memfir::load_tone_spec(args.tones);
  if (!(args.f_s > 0.0)) throw CLI::ValidationError("--fs", "sampling rate required");
  if (args.dense_factor < 1) {
    throw CLI::ValidationError("--dense-factor", "must be a positive integer");
  }

  const memfir::Signal dense = memfir::generate_tones(
      tones, args.f_s * static_cast<double>(args.dense_factor), args.duration);
  const memfir::Signal input = memfir::sample_hold(dense, args.f_s);

  memfir::CircuitConfig cfg;
  cfg.compensate_output = !args.no_compensate;
  if (args.scale_a == "auto") {
    cfg.scaling_gain = memfir::required_scale(input, cfg.dead_zone_v);
  } else {
    cfg.scaling_gain = std::stod(args.scale_a);
  }

  const memfir::Signal output =
      memfir::evaluate_circuit(loaded.result, loaded.grid, input, cfg);

  memfir::DeviceParams device;
  device.r_on = loaded.grid.r_min();
  device.r_off = loaded.grid.r_max();
  device.v_threshold = args.device_threshold;
  device.thickness_m = args.device_thickness;
  device.mobility_m2_per_vs = args.device_mobility;
  const memfir::DriftReport drift =
      memfir::drift_check(loaded.result, loaded.grid, input, cfg, device);

  const fs::path dir = ensure_out_dir(global.out_dir);
  memfir::save_signal_csv(dir / "input.csv", input);
  note_written(dir / "input.csv");
  memfir::save_signal_csv(dir / "output.csv", output);
  note_written(dir / "output.csv");

  if (args.dump_taps) {
    const auto taps = memfir::delay_chain(input, loaded.result.pairs.size() - 1);
    for (std::size_t k = 0; k < taps.size(); ++k) {
      memfir::Signal tap{taps[k], input.f_sample, input.t0};
      const fs::path path = dir / ("tap_" + std::to_string(k) + ".csv");
      memfir::save_signal_csv(path, tap);
      note_written(path);
    }
  }

  // Default window: the longest span that holds a whole number of cycles of
  // every component at once, so the single-bin projections stay orthogonal.
  // Falls back to one filter memory when no common alignment exists.
  std::size_t settle = loaded.result.pairs.size() - 1;
  if (args.settle >= 0) {
    settle = static_cast<std::size_t>(args.settle);
  } else if (!tones.components.empty() && input.samples.size() > settle) {
    const std::size_t len = input.samples.size();
    for (std::size_t n = len - settle; n >= 2; --n) {
      bool aligned = true;
      for (const auto& c : tones.components) {
        if (c.frequency_hz <= 0.0) continue;
        const double cycles = c.frequency_hz * static_cast<double>(n) / input.f_sample;
        if (std::fabs(cycles - std::round(cycles)) > 1e-6) {
          aligned = false;
          break;
        }
      }
      if (aligned) {
        settle = len - n;
        break;
      }
    }
  }
  json components = json::array();
  for (const auto& c : tones.components) {
    json entry = {{"frequency_hz", c.frequency_hz}};
    try {
      const double in_amp = memfir::tone_amplitude(input, c.frequency_hz, settle);
      const double out_amp = memfir::tone_amplitude(output, c.frequency_hz, settle);
      entry["input_amplitude_v"] = in_amp;
      entry["output_amplitude_v"] = out_amp;
      if (in_amp > 0.0) entry["gain"] = out_amp / in_amp;
      entry["realized_response_magnitude"] = std::abs(memfir::response_at(
          loaded.result.realized, input.f_sample, c.frequency_hz));
    } catch (const std::invalid_argument& e) {
      entry["measurement_error"] = e.what();
    }
    components.push_back(std::move(entry));
  }
  const json measurements = {
      {"f_s_hz", args.f_s},
      {"scale_a", cfg.scaling_gain},
      {"settle_samples", settle},
      {"compensate_output", cfg.compensate_output},
      {"components", components},
      {"drift",
       {{"max_rel_change", drift.max_rel_change},
        {"worst_tap", drift.worst_tap},
        {"worst_branch", drift.worst_is_plus ? "plus" : "minus"},
        {"v_threshold", device.v_threshold},
        {"devices", drift.devices}}}};
  const fs::path mpath = dir / "measurements.json";
  std::ofstream(mpath) << measurements.dump(2) << "\n";
  note_written(mpath);

  std::cout << "scale_a: " << memfir::format_double(cfg.scaling_gain) << "\n"
            << "drift max_rel_change: " << memfir::format_double(drift.max_rel_change)
            << "\n";
  return 0;
}

// -------------------------------------------------------------- response --

struct ResponseArgs {
  std::string coeffs;
  std::vector<std::string> synth_files;
  double f_s = 0.0;
  int points = 1024;
  std::string passband;
};

int run_response(const ResponseArgs& args, const GlobalOptions& global) {
  if (args.coeffs.empty() && args.synth_files.empty()) {
    throw CLI::ValidationError("response", "need --coeffs and/or --synth inputs");
  }
  if (!(args.f_s > 0.0)) throw CLI::ValidationError("--fs", "sampling rate required");
  if (args.points < 2) throw CLI::ValidationError("--points", "need at least 2");
  const auto n_points = static_cast<std::size_t>(args.points);

  double pass_lo = 0.0;
  double pass_hi = args.f_s / 2.0;
  if (!args.passband.empty()) {
    std::stringstream ss(args.passband);
    std::string lo, hi;
    if (!std::getline(ss, lo, ',') || !std::getline(ss, hi, ',')) {
      throw CLI::ValidationError("--passband", "expected 'lo_hz,hi_hz'");
    }
    pass_lo = std::stod(lo);
    pass_hi = std::stod(hi);
  }

  const fs::path dir = ensure_out_dir(global.out_dir);
  std::optional<memfir::FrequencyResponse> ideal;
  if (!args.coeffs.empty()) {
    const memfir::CoefficientSet set = memfir::load_coefficients(args.coeffs);
    ideal = memfir::frequency_response(set.coefficients, args.f_s, n_points);
    memfir::save_response_csv(dir / "response_ideal.csv", *ideal);
    note_written(dir / "response_ideal.csv");
  }

  json entries = json::array();
  for (const auto& file : args.synth_files) {
    const memfir::LoadedSynthesis loaded = memfir::load_synthesis(file);
    const memfir::FrequencyResponse realized =
        memfir::frequency_response(loaded.result.realized, args.f_s, n_points);
    const std::string label = memfir::method_name(loaded.result.method) + "_" +
                              std::to_string(loaded.grid.bits()) + "bit";
    const fs::path path = dir / ("response_" + label + ".csv");
    memfir::save_response_csv(path, realized);
    note_written(path);
    if (ideal) {
      const memfir::ResponseDeviation dev =
          memfir::response_deviation(*ideal, realized, pass_lo, pass_hi);
      entries.push_back({{"label", label},
                         {"max_db_passband", dev.max_db_passband},
                         {"max_db_overall", dev.max_db_overall}});
      std::cout << label << ": passband deviation "
                << memfir::format_double(dev.max_db_passband) << " dB, overall "
                << memfir::format_double(dev.max_db_overall) << " dB\n";
    }
  }

  if (ideal && !entries.empty()) {
    const json summary = {{"f_s_hz", args.f_s},
                          {"points", args.points},
                          {"passband_hz", {pass_lo, pass_hi}},
                          {"entries", entries}};
    const fs::path dpath = dir / "deviation.json";
    std::ofstream(dpath) << summary.dump(2) << "\n";
    note_written(dpath);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"memristor FIR synthesis and verification toolkit"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--config", global.config_path, "JSON config file; flags override it")
      ->expected(1);
  global.out_dir_opt =
      app.add_option("--out-dir", global.out_dir, "output directory (created if missing)");
  app.add_flag("--seedless", global.seedless,
               "assert that the pipeline used no random numbers");

  DesignArgs design;
  CLI::App* cmd_design = app.add_subcommand("design", "windowed-sinc FIR design");
  cmd_design->add_option("--family", design.family, "lowpass | highpass")->required();
  auto* d_fs = cmd_design->add_option("--fs", design.f_s, "sampling frequency in Hz")->required();
  auto* d_fc = cmd_design->add_option("--fc", design.f_c, "cutoff frequency in Hz")->required();
  auto* d_order = cmd_design->add_option("--order", design.order, "filter order m")->required();
  auto* d_window = cmd_design->add_option("--window", design.window,
                                          "rectangular | hamming | hann | blackman");
  auto* d_output = cmd_design->add_option("--output", design.output,
                                          "coefficient file name inside --out-dir");

  SynthArgs synth;
  CLI::App* cmd_synth = app.add_subcommand("synth", "map coefficients onto memristor pairs");
  cmd_synth->add_option("--coeffs", synth.coeffs, "coefficient file")->required();
  auto* s_bits = cmd_synth->add_option("--bits", synth.bits, "resolutions, e.g. 6,7,8");
  auto* s_method = cmd_synth->add_option("--method", synth.method, "simple | advanced | both");
  auto* s_gmin = cmd_synth->add_option("--grid-min-ohms", synth.grid_min, "grid lower bound");
  auto* s_gmax = cmd_synth->add_option("--grid-max-ohms", synth.grid_max, "grid upper bound");
  auto* s_gsp = cmd_synth->add_option("--grid-spacing", synth.spacing, "linres | lincond");
  auto* s_rf = cmd_synth->add_option("--rf-ohms", synth.rf_ohms,
                                     "fixed feedback resistance (skips the sweep)");
  auto* s_rfmin = cmd_synth->add_option("--rf-min-ohms", synth.rf_min, "sweep lower bound");
  auto* s_rfmax = cmd_synth->add_option("--rf-max-ohms", synth.rf_max, "sweep upper bound");
  auto* s_rfstep = cmd_synth->add_option("--rf-step-ohms", synth.rf_step, "sweep step");
  auto* s_rfgrid = cmd_synth->add_flag("--rf-on-grid", synth.rf_on_grid,
                                       "quantize the feedback resistance onto the grid");
  auto* s_norm = cmd_synth->add_option("--objective", synth.objective,
                                       "sum_abs | sum_squared | max_abs");
  auto* s_exec = cmd_synth->add_option("--exec", synth.exec, "serial | parallel");

  SimulateArgs sim;
  CLI::App* cmd_sim = app.add_subcommand("simulate", "run the behavioral circuit on tones");
  cmd_sim->add_option("--synth", sim.synth, "synthesis JSON file")->required();
  cmd_sim->add_option("--tones", sim.tones, "tone-spec JSON file")->required();
  auto* m_fs = cmd_sim->add_option("--fs", sim.f_s, "circuit sampling rate in Hz")->required();
  auto* m_dur = cmd_sim->add_option("--duration", sim.duration, "signal length in seconds");
  auto* m_dense = cmd_sim->add_option("--dense-factor", sim.dense_factor,
                                      "dense-rate multiple ahead of the sampler");
  auto* m_scale = cmd_sim->add_option("--scale-a", sim.scale_a,
                                      "input scaling gain, a value or 'auto'");
  auto* m_settle = cmd_sim->add_option("--settle", sim.settle,
                                       "samples to discard before measuring (-1: taps-1)");
  auto* m_nocomp = cmd_sim->add_flag("--no-compensate", sim.no_compensate,
                                     "keep the output at the scaled level");
  cmd_sim->add_flag("--dump-taps", sim.dump_taps, "write every delayed tap sequence");
  auto* m_thr = cmd_sim->add_option("--device-threshold", sim.device_threshold,
                                    "drift-model dead-zone voltage");
  auto* m_thk = cmd_sim->add_option("--device-thickness", sim.device_thickness,
                                    "drift-model thickness in meters");
  auto* m_mob = cmd_sim->add_option("--device-mobility", sim.device_mobility,
                                    "drift-model dopant mobility");

  ResponseArgs resp;
  CLI::App* cmd_resp = app.add_subcommand("response", "frequency responses and deviations");
  auto* r_coeffs = cmd_resp->add_option("--coeffs", resp.coeffs, "ideal coefficient file");
  cmd_resp->add_option("--synth", resp.synth_files, "synthesis JSON file(s)");
  auto* r_fs = cmd_resp->add_option("--fs", resp.f_s, "sampling rate in Hz")->required();
  auto* r_points = cmd_resp->add_option("--points", resp.points, "response grid size");
  auto* r_pass = cmd_resp->add_option("--passband", resp.passband, "passband edges 'lo,hi' in Hz");

  try {
    app.parse(argc, argv);

    ConfigFile config;
    if (!global.config_path.empty()) {
      config.load(global.config_path);
      config.apply(global.out_dir_opt, "out_dir", global.out_dir);
      config.apply(d_fs, "fs", design.f_s);
      config.apply(d_fc, "fc", design.f_c);
      config.apply(d_order, "order", design.order);
      config.apply(d_window, "window", design.window);
      config.apply(d_output, "output", design.output);
      config.apply(s_bits, "bits", synth.bits);
      config.apply(s_method, "method", synth.method);
      config.apply(s_gmin, "grid_min_ohms", synth.grid_min);
      config.apply(s_gmax, "grid_max_ohms", synth.grid_max);
      config.apply(s_gsp, "grid_spacing", synth.spacing);
      if (s_rf->count() == 0 && config.data.contains("rf_ohms")) {
        synth.rf_ohms = config.data.at("rf_ohms").get<double>();
      }
      config.apply(s_rfmin, "rf_min_ohms", synth.rf_min);
      config.apply(s_rfmax, "rf_max_ohms", synth.rf_max);
      config.apply(s_rfstep, "rf_step_ohms", synth.rf_step);
      config.apply(s_rfgrid, "rf_on_grid", synth.rf_on_grid);
      config.apply(s_norm, "objective", synth.objective);
      config.apply(s_exec, "exec", synth.exec);
      config.apply(m_fs, "fs", sim.f_s);
      config.apply(m_dur, "duration", sim.duration);
      config.apply(m_dense, "dense_factor", sim.dense_factor);
      config.apply(m_scale, "scale_a", sim.scale_a);
      config.apply(m_settle, "settle", sim.settle);
      config.apply(m_nocomp, "no_compensate", sim.no_compensate);
      config.apply(m_thr, "device_threshold", sim.device_threshold);
      config.apply(m_thk, "device_thickness", sim.device_thickness);
      config.apply(m_mob, "device_mobility", sim.device_mobility);
      config.apply(r_coeffs, "coeffs", resp.coeffs);
      config.apply(r_fs, "fs", resp.f_s);
      config.apply(r_points, "points", resp.points);
      config.apply(r_pass, "passband", resp.passband);
    }

    int rc = 0;
    if (cmd_design->parsed()) rc = run_design(design, global);
    else if (cmd_synth->parsed()) rc = run_synth(synth, global);
    else if (cmd_sim->parsed()) rc = run_simulate(sim, global);
    else if (cmd_resp->parsed()) rc = run_response(resp, global);

    if (global.seedless) {
      if (memfir::rng_use_count() != 0) {
        std::cerr << "seedless self-check failed: RNG was used\n";
        return 1;
      }
      std::cout << "seedless self-check: no RNG used\n";
    }
    return rc;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  } catch (const memfir::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const memfir::DeadZoneError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDeadZone;
  } catch (const memfir::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
