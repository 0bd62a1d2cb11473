#pragma once

#include "fwlab/theory.hpp"

#include <filesystem>
#include <map>

namespace fwlab {

// Flat key = value config (one entry per line, '#' comments). The grammar is
// documented in the README; all figure presets ship as checked-in files.
struct ExperimentConfig {
  std::string preset;
  std::map<std::string, std::string> kv;

  std::int64_t T = 100000;
  std::uint64_t seed = 0;
  std::int64_t reference_budget = 20000;
  std::int64_t snap_every = 0;
  std::string output_dir = "out";
  bool emit_svg = false;

  bool has(const std::string& key) const { return kv.count(key) > 0; }
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  std::string get_string(const std::string& key, const std::string& fallback = "") const;
  std::vector<double> get_list(const std::string& key) const;
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

struct InstanceMetadata {
  std::optional<Vec> x_star;
  std::optional<double> f_star;
  std::vector<int> face_support;       // polytope preset: support of C*
  std::optional<GrowthConstants> constants;
  std::optional<Theorem> matched_theorem;
  Vec x0;
  std::string description;
};

struct Instance {
  FeasibleRegion region;
  Objective objective;
  InstanceMetadata meta;
};

// Stylized constructions: random nonnegative entries normalized to the
// setting's target norm, closed-form optimum carried where it is known.
Instance make_strong_instance(double p, int n, double lambda, int ell, std::uint64_t seed);
Instance make_weak_instance(double p, int n, int ell, std::uint64_t seed);
Instance make_gaps_instance(double rho, int n, int ell, std::uint64_t seed);
Instance make_polytope_instance(double rho, double kappa, int n, int ell, std::uint64_t seed);
Instance make_regression_instance(const ExperimentConfig& cfg);
Instance make_logistic_instance(const ExperimentConfig& cfg);
Instance make_completion_instance(const ExperimentConfig& cfg);

Instance synth_instance(const ExperimentConfig& cfg);

// Exact reference when the instance metadata carries the optimum, otherwise
// the closed-form / budgeted path of reference_solution.
ReferenceSolution instance_reference(const Instance& inst, std::int64_t budget);

enum class DatasetSchema { DenseCSV, LibSVMLike, TripletCSV };

struct Dataset {
  Mat features;
  Vec targets;
  std::vector<std::tuple<int, int, double>> triplets;
  std::vector<std::string> warnings;
};

DatasetSchema parse_schema(const std::string& name);
Dataset load_dataset(const std::string& path, DatasetSchema schema,
                     const std::string& target_column = "", bool zscore = true);

// Columns: t,eta,f,gap,min_gap,primaldual,subopt_ref,subopt_certified.
// 17 significant digits, '.' decimal separator.
void write_trace_csv(const std::filesystem::path& path, const IterateTrace& trace);
IterateTrace read_trace_csv(const std::filesystem::path& path);

void write_loglog_svg(const std::filesystem::path& path,
                      const std::vector<std::pair<std::string, const std::vector<double>*>>& series,
                      const std::vector<double>& guide_exponents);

struct RunArtifacts {
  std::vector<std::filesystem::path> files;
  std::string report_json;
};

// Builds the instance, computes the reference, runs FW once per rule in the
// sweep, evaluates thresholds / bound curves / rate fits, and writes
// trace CSVs, bound CSVs, report.json and optional SVG plots.
RunArtifacts run_experiment(const ExperimentConfig& cfg);

std::filesystem::path resolve_output_dir(const ExperimentConfig& cfg);

}  // namespace fwlab
