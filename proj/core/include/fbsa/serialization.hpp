#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fbsa/metrics.hpp"
#include "fbsa/pso.hpp"
#include "fbsa/qfp.hpp"
#include "fbsa/synthesis.hpp"
#include "fbsa/two_photon.hpp"

namespace fbsa {

using Json = nlohmann::json;

/// Malformed input document. what() names the offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical text: sorted keys, two-space indent, shortest round-trip doubles,
// trailing newline. Re-parsing and re-dumping yields identical bytes.
std::string canonical_dump(const Json& doc);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

Json to_json(const FrequencyGrid& grid);
FrequencyGrid grid_from_json(const Json& doc, const std::string& where = "grid");

Json to_json(const RfDrive& drive);
RfDrive drive_from_json(const Json& doc, const std::string& where);

Json to_json(const ShaperMask& mask);
ShaperMask shaper_from_json(const Json& doc, const std::string& where = "shaper");

/// {grid, eom1, shaper, eom2, encoding}
Json to_json(const QfpConfig& config);
QfpConfig qfp_config_from_json(const Json& doc);

Json to_json(const GateMetrics& metrics);
GateMetrics metrics_from_json(const Json& doc, const std::string& where = "metrics");

Json to_json(const PsoParams& params);
/// Missing keys keep their defaults.
PsoParams pso_params_from_json(const Json& doc);

Json to_json(const SynthesisProblem& problem);
/// Missing keys keep their defaults; "encoding" selects the target.
SynthesisProblem synthesis_problem_from_json(const Json& doc);

/// Solution file: {config, metrics, trace, seed, restart_costs, shaper_only,
/// infidelity_floor}. Wall time is left out so the file is reproducible.
Json to_json(const SynthesisResult& result);
SynthesisResult synthesis_result_from_json(const Json& doc);

Json to_json(const SolutionReport& report);
SolutionReport solution_report_from_json(const Json& doc);

Json to_json(const CoincidencePattern& pattern);
CoincidencePattern pattern_from_json(const Json& doc);
Json counts_to_json(const CoincidenceCounts& counts);
Json to_json(const AccuracyReport& report);
AccuracyReport accuracy_from_json(const Json& doc);

/// {rows, cols, re: [[...]], im: [[...]]}
Json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const Json& doc);

/// Fixed 17-significant-digit formatting used by every CSV writer.
std::string format_double(double value);

/// Row-major CSV, one "re,im" cell pair per element, under a c<j>_re,c<j>_im header.
std::string matrix_to_csv(const Eigen::MatrixXcd& m);
/// "iteration,cost" per trace entry.
std::string trace_to_csv(const std::vector<double>& trace);
/// "pair,probability" rows in channel order.
std::string pattern_to_csv(const CoincidencePattern& pattern);
std::string counts_to_csv(const CoincidenceCounts& counts);
/// "bin,offset_ghz,power" rows for a classical spectrum.
std::string spectrum_to_csv(const std::map<int, double>& spectrum, const FrequencyGrid& grid);

}  // namespace fbsa
