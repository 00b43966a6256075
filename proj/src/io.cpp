#include "memfir/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "memfir/errors.hpp"

namespace memfir {
namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_strict_double(std::string_view s, std::size_t line) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;  // from_chars rejects a leading '+'
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw ParseError("not a finite decimal value: '" + std::string(s) + "'", line);
  }
  return v;
}

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw ParseError(std::string("missing numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

GridSpacing spacing_from_string(const std::string& s) {
  if (s == "linear_resistance" || s == "linres") return GridSpacing::linear_resistance;
  if (s == "linear_conductance" || s == "lincond") return GridSpacing::linear_conductance;
  throw ParseError("unknown grid spacing '" + s + "'");
}

Method method_from_string(const std::string& s) {
  if (s == "simple") return Method::simple;
  if (s == "advanced") return Method::advanced;
  throw ParseError("unknown method '" + s + "'");
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 32> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf.data(), ptr);
}

CoefficientSet parse_coefficients(std::istream& in, double tol) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  // A JSON document is detected by its first non-space character.
  std::size_t at = 0;
  while (at < text.size() &&
         (text[at] == ' ' || text[at] == '\t' || text[at] == '\n' || text[at] == '\r')) {
    ++at;
  }
  std::vector<double> values;
  if (at < text.size() && text[at] == '{') {
    const json j = parse_json(text, "coefficient JSON");
    if (!j.contains("coefficients") || !j.at("coefficients").is_array()) {
      throw ParseError("coefficient JSON needs a 'coefficients' array");
    }
    for (const auto& v : j.at("coefficients")) {
      if (!v.is_number()) throw ParseError("'coefficients' must contain only numbers");
      values.push_back(v.get<double>());
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
      ++line_no;
      const std::string_view body = trim(line);
      if (body.empty() || body.front() == '#') continue;
      values.push_back(parse_strict_double(body, line_no));
    }
  }

  if (values.empty()) throw ParseError("empty file: no coefficients found");
  return make_coefficient_set(std::move(values), tol);
}

CoefficientSet load_coefficients(const std::filesystem::path& path, double tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  return parse_coefficients(in, tol);
}

void save_coefficients(const std::filesystem::path& path,
                       std::span<const double> coeffs,
                       const std::string& header_comment) {
  std::ostringstream out;
  if (!header_comment.empty()) out << "# " << header_comment << "\n";
  for (double v : coeffs) out << format_double(v) << "\n";
  write_file(path, out.str());
}

std::string method_name(Method m) {
  return m == Method::simple ? "simple" : "advanced";
}

std::string spacing_name(GridSpacing s) {
  return s == GridSpacing::linear_resistance ? "linear_resistance" : "linear_conductance";
}

std::string norm_name(ObjectiveNorm n) {
  switch (n) {
    case ObjectiveNorm::sum_abs: return "sum_abs";
    case ObjectiveNorm::sum_squared: return "sum_squared";
    case ObjectiveNorm::max_abs: return "max_abs";
  }
  return "sum_abs";
}

std::string synthesis_to_json(const SynthesisResult& result, const MemristanceGrid& grid) {
  json j;
  j["method"] = method_name(result.method);
  j["r_f_ohms"] = result.r_feedback;
  j["objective"] = result.objective;
  j["grid"] = {{"r_min", grid.r_min()},
               {"r_max", grid.r_max()},
               {"bits", grid.bits()},
               {"spacing", spacing_name(grid.spacing())}};
  json taps = json::array();
  for (std::size_t i = 0; i < result.targets.size(); ++i) {
    json tap = {{"r_plus_ohms", result.pairs[i].r_plus},
                {"r_minus_ohms", result.pairs[i].r_minus},
                {"target", result.targets[i]},
                {"realized", result.realized[i]},
                {"error_pct", result.errors[i].value}};
    if (result.errors[i].is_absolute) tap["error_pct_is_absolute"] = true;
    taps.push_back(std::move(tap));
  }
  j["taps"] = std::move(taps);
  return j.dump(2) + "\n";
}

LoadedSynthesis synthesis_from_json(const std::string& text) {
  const json j = parse_json(text, "synthesis JSON");
  if (!j.contains("grid")) throw ParseError("synthesis JSON needs a 'grid' object");
  const json& g = j.at("grid");
  MemristanceGrid grid(number_field(g, "r_min"), number_field(g, "r_max"),
                       static_cast<unsigned>(number_field(g, "bits")),
                       spacing_from_string(g.value("spacing", "linear_resistance")));

  SynthesisResult result;
  if (!j.contains("method") || !j.at("method").is_string()) {
    throw ParseError("synthesis JSON needs a 'method' string");
  }
  result.method = method_from_string(j.at("method").get<std::string>());
  result.r_feedback = number_field(j, "r_f_ohms");
  result.objective = number_field(j, "objective");
  if (!j.contains("taps") || !j.at("taps").is_array() || j.at("taps").empty()) {
    throw ParseError("synthesis JSON needs a nonempty 'taps' array");
  }
  for (const auto& tap : j.at("taps")) {
    result.pairs.push_back({number_field(tap, "r_plus_ohms"), number_field(tap, "r_minus_ohms")});
    result.targets.push_back(number_field(tap, "target"));
    result.realized.push_back(number_field(tap, "realized"));
    result.errors.push_back(
        {number_field(tap, "error_pct"), tap.value("error_pct_is_absolute", false)});
  }
  return {std::move(result), std::move(grid)};
}

LoadedSynthesis load_synthesis(const std::filesystem::path& path) {
  return synthesis_from_json(read_file(path));
}

void save_synthesis_json(const std::filesystem::path& path,
                         const SynthesisResult& result, const MemristanceGrid& grid) {
  write_file(path, synthesis_to_json(result, grid));
}

void save_synthesis_csv(const std::filesystem::path& path, const SynthesisResult& result) {
  std::ostringstream out;
  out << "tap,target,realized,error_pct,r_plus_ohms,r_minus_ohms\n";
  for (std::size_t i = 0; i < result.targets.size(); ++i) {
    out << i << ',' << format_double(result.targets[i]) << ','
        << format_double(result.realized[i]) << ','
        << format_double(result.errors[i].value) << ','
        << format_double(result.pairs[i].r_plus) << ','
        << format_double(result.pairs[i].r_minus) << "\n";
  }
  write_file(path, out.str());
}

ToneSpec tone_spec_from_json(const std::string& text) {
  const json j = parse_json(text, "tone-spec JSON");
  if (!j.contains("components") || !j.at("components").is_array()) {
    throw ParseError("tone-spec JSON needs a 'components' array");
  }
  ToneSpec spec;
  for (const auto& c : j.at("components")) {
    spec.components.push_back({number_field(c, "amp_v"), number_field(c, "freq_hz"),
                               c.contains("phase_rad") ? number_field(c, "phase_rad") : 0.0});
  }
  return spec;
}

ToneSpec load_tone_spec(const std::filesystem::path& path) {
  return tone_spec_from_json(read_file(path));
}

namespace {

std::filesystem::path sidecar_path(std::filesystem::path path) {
  path.replace_extension(".json");
  return path;
}

}  // namespace

void save_signal_csv(const std::filesystem::path& path, const Signal& signal,
                     bool time_column) {
  std::ostringstream out;
  out << (time_column ? "t_seconds,volts" : "n,volts") << "\n";
  for (std::size_t n = 0; n < signal.samples.size(); ++n) {
    if (time_column) {
      out << format_double(signal.t0 + static_cast<double>(n) / signal.f_sample);
    } else {
      out << n;
    }
    out << ',' << format_double(signal.samples[n]) << "\n";
  }
  write_file(path, out.str());

  json meta = {{"f_sample_hz", signal.f_sample}, {"t0", signal.t0}};
  write_file(sidecar_path(path), meta.dump(2) + "\n");
}

Signal load_signal_csv(const std::filesystem::path& path) {
  const json meta = parse_json(read_file(sidecar_path(path)), "signal sidecar");
  Signal signal;
  signal.f_sample = number_field(meta, "f_sample_hz");
  signal.t0 = meta.contains("t0") ? number_field(meta, "t0") : 0.0;
  if (!(signal.f_sample > 0.0)) throw ParseError("signal sidecar: f_sample_hz must be positive");

  std::istringstream lines(read_file(path));
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(lines, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    if (!header_seen) {
      if (body != "t_seconds,volts" && body != "n,volts") {
        throw ParseError("expected header 't_seconds,volts' or 'n,volts'", line_no);
      }
      header_seen = true;
      continue;
    }
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected two columns", line_no);
    signal.samples.push_back(parse_strict_double(trim(body.substr(comma + 1)), line_no));
  }
  if (!header_seen) throw ParseError("empty signal file");
  return signal;
}

void save_response_csv(const std::filesystem::path& path, const FrequencyResponse& fr) {
  std::ostringstream out;
  out << "f_hz,magnitude,magnitude_db,phase_rad\n";
  for (const auto& p : fr.points) {
    out << format_double(p.f_hz) << ',' << format_double(p.magnitude) << ','
        << format_double(p.magnitude_db) << ',' << format_double(p.phase_rad) << "\n";
  }
  write_file(path, out.str());
}

void save_error_report_csv(const std::filesystem::path& path, const ErrorReport& report) {
  std::ostringstream out;
  out << "tap,method,bits,target,realized,error_pct\n";
  for (const auto& row : report.rows) {
    out << row.tap << ',' << method_name(row.method) << ',' << row.bits << ','
        << format_double(row.target) << ',' << format_double(row.realized) << ','
        << format_double(row.error.value) << "\n";
  }
  write_file(path, out.str());
}

std::string error_report_to_json(const ErrorReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r = {{"tap", row.tap},         {"method", method_name(row.method)},
              {"bits", row.bits},       {"target", row.target},
              {"realized", row.realized}, {"error_pct", row.error.value}};
    if (row.error.is_absolute) r["error_pct_is_absolute"] = true;
    rows.push_back(std::move(r));
  }
  json summaries = json::array();
  for (const auto& s : report.summaries) {
    summaries.push_back({{"method", method_name(s.method)},
                         {"bits", s.bits},
                         {"max_error_pct", s.max_error_pct},
                         {"mean_error_pct", s.mean_error_pct}});
  }
  const json j = {{"rows", std::move(rows)}, {"summaries", std::move(summaries)}};
  return j.dump(2) + "\n";
}

unsigned long rng_use_count() { return 0; }

}  // namespace memfir
