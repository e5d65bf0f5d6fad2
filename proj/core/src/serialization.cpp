#include "fbsa/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace fbsa {
namespace {

std::string join(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

const Json& field(const Json& doc, const std::string& key, const std::string& where) {
  if (!doc.is_object()) throw ConfigError("field '" + where + "' must be an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ConfigError("missing field '" + join(where, key) + "'");
  return *it;
}

double number(const Json& doc, const std::string& key, const std::string& where) {
  const Json& v = field(doc, key, where);
  if (!v.is_number()) throw ConfigError("field '" + join(where, key) + "' must be a number");
  return v.get<double>();
}

long long integer(const Json& doc, const std::string& key, const std::string& where) {
  const Json& v = field(doc, key, where);
  if (!v.is_number_integer()) {
    throw ConfigError("field '" + join(where, key) + "' must be an integer");
  }
  return v.get<long long>();
}

const Json& array(const Json& doc, const std::string& key, const std::string& where) {
  const Json& v = field(doc, key, where);
  if (!v.is_array()) throw ConfigError("field '" + join(where, key) + "' must be an array");
  return v;
}

std::uint64_t seed_value(const Json& doc, const std::string& key, const std::string& where) {
  const Json& v = field(doc, key, where);
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<long long>() < 0)) {
    throw ConfigError("field '" + join(where, key) + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::vector<double> numbers(const Json& doc, const std::string& key, const std::string& where) {
  std::vector<double> out;
  for (const Json& v : array(doc, key, where)) {
    if (!v.is_number()) throw ConfigError("field '" + join(where, key) + "' must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

template <typename Fn>
auto rethrow_as(const std::string& where, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("invalid field '" + where + "': " + e.what());
  }
}

Json grid4(const std::array<std::array<double, 4>, 4>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(Json(row));
  return out;
}

std::array<std::array<double, 4>, 4> grid4_from(const Json& doc, const std::string& key,
                                                const std::string& where) {
  std::array<std::array<double, 4>, 4> out{};
  const Json& rows = array(doc, key, where);
  if (rows.size() != 4) throw ConfigError("field '" + join(where, key) + "' must be 4x4");
  for (std::size_t r = 0; r < 4; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 4) {
      throw ConfigError("field '" + join(where, key) + "' must be 4x4");
    }
    for (std::size_t c = 0; c < 4; ++c) out[r][c] = rows[r][c].get<double>();
  }
  return out;
}

}  // namespace

std::string canonical_dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

Json to_json(const FrequencyGrid& grid) {
  return Json{{"spacing_ghz", grid.spacing_ghz},
              {"center_thz", grid.center_thz},
              {"window", Json::array({grid.window_lo, grid.window_hi})}};
}

FrequencyGrid grid_from_json(const Json& doc, const std::string& where) {
  FrequencyGrid grid;
  grid.spacing_ghz = number(doc, "spacing_ghz", where);
  grid.center_thz = number(doc, "center_thz", where);
  const Json& window = array(doc, "window", where);
  if (window.size() != 2 || !window[0].is_number_integer() || !window[1].is_number_integer()) {
    throw ConfigError("field '" + join(where, "window") + "' must be [lo, hi] integers");
  }
  grid.window_lo = window[0].get<int>();
  grid.window_hi = window[1].get<int>();
  rethrow_as(where, [&] { grid.validate(); });
  return grid;
}

Json to_json(const RfDrive& drive) {
  Json tones = Json::array();
  for (const Tone& t : drive.tones()) {
    tones.push_back(Json{{"k", t.harmonic}, {"amp_rad", t.amplitude}, {"phase_rad", t.phase}});
  }
  return Json{{"tones", tones}};
}

RfDrive drive_from_json(const Json& doc, const std::string& where) {
  std::vector<Tone> tones;
  const Json& list = array(doc, "tones", where);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = where + ".tones[" + std::to_string(i) + "]";
    tones.push_back(Tone{static_cast<int>(integer(list[i], "k", at)),
                         number(list[i], "amp_rad", at), number(list[i], "phase_rad", at)});
  }
  return rethrow_as(where, [&] { return RfDrive(std::move(tones)); });
}

Json to_json(const ShaperMask& mask) {
  Json entries = Json::array();
  for (const auto& [bin, e] : mask.entries()) {
    entries.push_back(Json{{"bin", bin}, {"phase_rad", e.phase}, {"amp", e.amplitude}});
  }
  return Json{{"entries", entries}};
}

ShaperMask shaper_from_json(const Json& doc, const std::string& where) {
  ShaperMask mask;
  const Json& list = array(doc, "entries", where);
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = where + ".entries[" + std::to_string(i) + "]";
    const int bin = static_cast<int>(integer(list[i], "bin", at));
    const double phase = number(list[i], "phase_rad", at);
    const double amp = list[i].contains("amp") ? number(list[i], "amp", at) : 1.0;
    rethrow_as(at, [&] { mask.set(bin, phase, amp); });
  }
  return mask;
}

Json to_json(const QfpConfig& config) {
  return Json{{"grid", to_json(config.grid)},
              {"eom1", to_json(config.eom1)},
              {"shaper", to_json(config.shaper)},
              {"eom2", to_json(config.eom2)},
              {"encoding", std::string(to_string(config.encoding))}};
}

QfpConfig qfp_config_from_json(const Json& doc) {
  QfpConfig config;
  config.grid = grid_from_json(field(doc, "grid", ""), "grid");
  config.eom1 = drive_from_json(field(doc, "eom1", ""), "eom1");
  config.shaper = shaper_from_json(field(doc, "shaper", ""), "shaper");
  config.eom2 = drive_from_json(field(doc, "eom2", ""), "eom2");
  const Json& enc = field(doc, "encoding", "");
  if (!enc.is_string()) throw ConfigError("field 'encoding' must be a string");
  config.encoding = rethrow_as("encoding", [&] { return parse_encoding(enc.get<std::string>()); });
  return config;
}

Json to_json(const GateMetrics& m) {
  return Json{{"fidelity", m.fidelity}, {"success_prob", m.success_prob}, {"cost", m.cost}};
}

GateMetrics metrics_from_json(const Json& doc, const std::string& where) {
  return GateMetrics{number(doc, "fidelity", where), number(doc, "success_prob", where),
                     number(doc, "cost", where)};
}

Json to_json(const PsoParams& p) {
  return Json{{"swarm_size", p.swarm_size}, {"iterations", p.iterations},
              {"inertia", p.inertia},       {"cognitive", p.cognitive},
              {"social", p.social},         {"restarts", p.restarts},
              {"seed", p.seed},             {"threads", p.threads}};
}

PsoParams pso_params_from_json(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("PSO parameters must be a JSON object");
  PsoParams p;
  const std::string w = "pso";
  if (doc.contains("swarm_size")) p.swarm_size = static_cast<int>(integer(doc, "swarm_size", w));
  if (doc.contains("iterations")) p.iterations = static_cast<int>(integer(doc, "iterations", w));
  if (doc.contains("inertia")) p.inertia = number(doc, "inertia", w);
  if (doc.contains("cognitive")) p.cognitive = number(doc, "cognitive", w);
  if (doc.contains("social")) p.social = number(doc, "social", w);
  if (doc.contains("restarts")) p.restarts = static_cast<int>(integer(doc, "restarts", w));
  if (doc.contains("seed")) p.seed = seed_value(doc, "seed", w);
  if (doc.contains("threads")) p.threads = static_cast<int>(integer(doc, "threads", w));
  rethrow_as(w, [&] { p.validate(); });
  return p;
}

Json to_json(const SynthesisProblem& problem) {
  const bool identity = problem.target.matrix == Matrix4c::Identity();
  return Json{{"encoding", std::string(to_string(problem.target.encoding))},
              {"target", identity ? "identity" : "bsa"},
              {"grid", to_json(problem.grid)},
              {"free_harmonics", problem.free_harmonics},
              {"shaper_range", Json::array({problem.shaper_lo, problem.shaper_hi})},
              {"max_amplitude", problem.max_amplitude},
              {"infidelity_floor", problem.infidelity_floor},
              {"warmup_floors", problem.warmup_floors},
              {"fft_samples", problem.fft_samples}};
}

SynthesisProblem synthesis_problem_from_json(const Json& doc) {
  if (!doc.is_object()) throw ConfigError("synthesis problem must be a JSON object");
  const std::string w = "problem";
  SynthesisProblem p;
  Encoding enc = Encoding::kAdjacent;
  if (doc.contains("encoding")) {
    const Json& e = doc.at("encoding");
    if (!e.is_string()) throw ConfigError("field 'problem.encoding' must be a string");
    enc = rethrow_as("problem.encoding", [&] { return parse_encoding(e.get<std::string>()); });
  }
  std::string target = "bsa";
  if (doc.contains("target")) {
    const Json& t = doc.at("target");
    if (!t.is_string() || (t != "bsa" && t != "identity")) {
      throw ConfigError("field 'problem.target' must be \"bsa\" or \"identity\"");
    }
    target = t.get<std::string>();
  }
  p.target = target == "identity" ? identity_target(enc) : target_unitary(enc);
  if (doc.contains("grid")) p.grid = grid_from_json(doc.at("grid"), "problem.grid");
  if (doc.contains("free_harmonics")) {
    p.free_harmonics.clear();
    for (const Json& k : array(doc, "free_harmonics", w)) {
      if (!k.is_number_integer()) throw ConfigError("field 'problem.free_harmonics' must hold integers");
      p.free_harmonics.push_back(k.get<int>());
    }
  }
  if (doc.contains("shaper_range")) {
    const Json& r = array(doc, "shaper_range", w);
    if (r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer()) {
      throw ConfigError("field 'problem.shaper_range' must be [lo, hi] integers");
    }
    p.shaper_lo = r[0].get<int>();
    p.shaper_hi = r[1].get<int>();
  }
  if (doc.contains("max_amplitude")) p.max_amplitude = number(doc, "max_amplitude", w);
  if (doc.contains("infidelity_floor")) p.infidelity_floor = number(doc, "infidelity_floor", w);
  if (doc.contains("warmup_floors")) p.warmup_floors = numbers(doc, "warmup_floors", w);
  if (doc.contains("fft_samples")) {
    p.fft_samples = static_cast<std::size_t>(integer(doc, "fft_samples", w));
  }
  rethrow_as(w, [&] { p.validate(); });
  return p;
}

Json to_json(const SynthesisResult& r) {
  return Json{{"config", to_json(r.best_config)},
              {"metrics", to_json(r.metrics)},
              {"trace", r.trace},
              {"seed", r.seed_used},
              {"restart_costs", r.restart_costs},
              {"shaper_only", r.shaper_only},
              {"infidelity_floor", r.infidelity_floor}};
}

SynthesisResult synthesis_result_from_json(const Json& doc) {
  SynthesisResult r;
  r.best_config = qfp_config_from_json(field(doc, "config", ""));
  r.metrics = metrics_from_json(field(doc, "metrics", ""));
  r.trace = numbers(doc, "trace", "");
  r.seed_used = seed_value(doc, "seed", "");
  if (doc.contains("restart_costs")) r.restart_costs = numbers(doc, "restart_costs", "");
  if (doc.contains("shaper_only")) r.shaper_only = doc.at("shaper_only").get<bool>();
  if (doc.contains("infidelity_floor")) r.infidelity_floor = number(doc, "infidelity_floor", "");
  return r;
}

Json to_json(const SolutionReport& r) {
  Json shaper = Json::array();
  for (const auto& [bin, phase] : r.shaper_phase) {
    shaper.push_back(Json{{"bin", bin}, {"phase_rad", phase}});
  }
  return Json{{"time_fraction", r.time_fraction},
              {"eom1_phase_rad", r.eom1_phase},
              {"eom2_phase_rad", r.eom2_phase},
              {"eom1_peak_rad", r.eom1_peak},
              {"eom2_peak_rad", r.eom2_peak},
              {"shaper_phase", shaper},
              {"matrix_amplitude", grid4(r.amplitude)},
              {"matrix_phase_rad", grid4(r.phase)},
              {"max_amplitude", r.max_amplitude},
              {"metrics", to_json(r.metrics)}};
}

SolutionReport solution_report_from_json(const Json& doc) {
  const std::string w = "report";
  SolutionReport r;
  r.time_fraction = numbers(doc, "time_fraction", w);
  r.eom1_phase = numbers(doc, "eom1_phase_rad", w);
  r.eom2_phase = numbers(doc, "eom2_phase_rad", w);
  r.eom1_peak = number(doc, "eom1_peak_rad", w);
  r.eom2_peak = number(doc, "eom2_peak_rad", w);
  for (const Json& e : array(doc, "shaper_phase", w)) {
    r.shaper_phase[static_cast<int>(integer(e, "bin", w + ".shaper_phase"))] =
        number(e, "phase_rad", w + ".shaper_phase");
  }
  r.amplitude = grid4_from(doc, "matrix_amplitude", w);
  r.phase = grid4_from(doc, "matrix_phase_rad", w);
  r.max_amplitude = number(doc, "max_amplitude", w);
  r.metrics = metrics_from_json(field(doc, "metrics", w), w + ".metrics");
  return r;
}

Json to_json(const CoincidencePattern& pattern) {
  Json probs = Json::object();
  for (BinPair p : kAllBinPairs) probs[std::string(to_string(p))] = pattern[p];
  return Json{{"probs", probs}, {"residual", pattern.residual}};
}

CoincidencePattern pattern_from_json(const Json& doc) {
  CoincidencePattern pattern;
  const Json& probs = field(doc, "probs", "");
  for (BinPair p : kAllBinPairs) {
    pattern.probs[static_cast<std::size_t>(p)] = number(probs, std::string(to_string(p)), "probs");
  }
  pattern.residual = number(doc, "residual", "");
  return pattern;
}

Json counts_to_json(const CoincidenceCounts& counts) {
  Json out = Json::object();
  for (BinPair p : kAllBinPairs) out[std::string(to_string(p))] = counts[static_cast<std::size_t>(p)];
  return out;
}

Json to_json(const AccuracyReport& r) {
  return Json{{"input", r.input_label},   {"n_correct", r.n_correct},
              {"n_incorrect", r.n_incorrect}, {"accuracy", r.accuracy},
              {"std_error", r.std_error}};
}

AccuracyReport accuracy_from_json(const Json& doc) {
  AccuracyReport r;
  const Json& label = field(doc, "input", "");
  if (!label.is_string()) throw ConfigError("field 'input' must be a string");
  r.input_label = label.get<std::string>();
  r.n_correct = number(doc, "n_correct", "");
  r.n_incorrect = number(doc, "n_incorrect", "");
  r.accuracy = number(doc, "accuracy", "");
  r.std_error = number(doc, "std_error", "");
  return r;
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row_re = Json::array(), row_im = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row_re.push_back(m(r, c).real());
      row_im.push_back(m(r, c).imag());
    }
    re.push_back(row_re);
    im.push_back(row_im);
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

Eigen::MatrixXcd matrix_from_json(const Json& doc) {
  const auto rows = static_cast<Eigen::Index>(integer(doc, "rows", "matrix"));
  const auto cols = static_cast<Eigen::Index>(integer(doc, "cols", "matrix"));
  const Json& re = array(doc, "re", "matrix");
  const Json& im = array(doc, "im", "matrix");
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto ur = static_cast<std::size_t>(r), uc = static_cast<std::size_t>(c);
      m(r, c) = Complex(re.at(ur).at(uc).get<double>(), im.at(ur).at(uc).get<double>());
    }
  }
  return m;
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string matrix_to_csv(const Eigen::MatrixXcd& m) {
  std::ostringstream out;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    out << (c > 0 ? "," : "") << 'c' << c << "_re,c" << c << "_im";
  }
  out << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ',';
      out << format_double(m(r, c).real()) << ',' << format_double(m(r, c).imag());
    }
    out << '\n';
  }
  return out.str();
}

std::string trace_to_csv(const std::vector<double>& trace) {
  std::ostringstream out;
  out << "iteration,cost\n";
  for (std::size_t i = 0; i < trace.size(); ++i) out << i << ',' << format_double(trace[i]) << '\n';
  return out.str();
}

std::string pattern_to_csv(const CoincidencePattern& pattern) {
  std::ostringstream out;
  out << "pair,probability\n";
  for (BinPair p : kAllBinPairs) out << to_string(p) << ',' << format_double(pattern[p]) << '\n';
  return out.str();
}

std::string counts_to_csv(const CoincidenceCounts& counts) {
  std::ostringstream out;
  out << "pair,counts\n";
  for (BinPair p : kAllBinPairs) out << to_string(p) << ',' << counts[static_cast<std::size_t>(p)] << '\n';
  return out.str();
}

std::string spectrum_to_csv(const std::map<int, double>& spectrum, const FrequencyGrid& grid) {
  std::ostringstream out;
  out << "bin,offset_ghz,power\n";
  for (const auto& [bin, power] : spectrum) {
    out << bin << ',' << format_double(grid.offset_ghz(bin)) << ',' << format_double(power) << '\n';
  }
  return out.str();
}

}  // namespace fbsa
