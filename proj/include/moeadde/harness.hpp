#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moeadde/indicators.hpp"
#include "moeadde/moead.hpp"
#include "moeadde/operators.hpp"

namespace moeadde {

inline constexpr std::string_view kVersion = "0.1.0";

/// Hypervolume reference point coordinate used throughout: (1.1, ..., 1.1)
/// in normalized objective space.
inline constexpr double kHvReference = 1.1;

// ---------------------------------------------------------------------------
// Named operator configurations found in published MOEA/D-DE source code.
// ---------------------------------------------------------------------------

/// All 30 operator configurations in canonical order (repair-major, then
/// strategy, then selection).
const std::vector<MutationConfig>& all_configs();

/// Looks up one of the eight named configurations "#A".."#H".
std::optional<MutationConfig> named_config(std::string_view name);

/// The "#X" label of a configuration, if it has one.
std::optional<std::string> config_label(const MutationConfig& config);

// ---------------------------------------------------------------------------
// Experiment plan
// ---------------------------------------------------------------------------

struct ExperimentPlan {
    std::vector<std::string> problems;   // names, e.g. "DTLZ2"
    std::vector<int> objectives;         // M values
    std::vector<MutationConfig> configs;
    std::uint64_t runs = 1;
    std::uint64_t max_evaluations = 0;
    std::uint64_t base_seed = 1;
    std::filesystem::path output_dir;
    bool normalize = true;

    // Optional overrides of the standard control parameters.
    std::optional<std::size_t> T;
    std::optional<double> delta;
    std::optional<int> n_rep;
    std::optional<double> F;
    std::optional<double> CR;
    std::optional<double> eta_mut;
};

/// Parses the key = value plan format (see README). Throws ConfigError
/// with a line-numbered message on malformed input.
ExperimentPlan parse_plan_file(const std::filesystem::path& file);
ExperimentPlan parse_plan_text(std::string_view text);

/// Rejects invalid plans (unknown problems, bad M, empty configs, ...)
/// before any run starts.
void validate_plan(const ExperimentPlan& plan);

/// Deterministic per-run seed, distinct across the plan's cartesian
/// product with overwhelming probability (and checked by the tests).
std::uint64_t derive_run_seed(std::uint64_t base_seed,
                              std::string_view problem, int M,
                              std::string_view config_id,
                              std::uint64_t run_index);

// ---------------------------------------------------------------------------
// Run records
// ---------------------------------------------------------------------------

struct RunRecord {
    std::string problem;
    int M = 0;
    std::string config;  // config id string
    std::uint64_t seed = 0;
    double hv = 0.0;     // normalized hypervolume; NaN marks a failed run
    std::uint64_t evals = 0;
    std::uint64_t wall_ms = 0;
    std::uint64_t fallbacks = 0;  // resampling retry-cap fallbacks
};

inline constexpr std::string_view kRecordsCsvHeader =
    "problem,M,config,seed,hv,evals,wall_ms,fallbacks";

std::string record_to_csv(const RunRecord& record);
RunRecord record_from_csv(std::string_view line);

std::vector<RunRecord> read_records_csv(const std::filesystem::path& file);
void write_records_csv(const std::filesystem::path& file,
                       std::vector<RunRecord> records);  // canonical order

/// Canonical record order: (problem, M, config, seed).
bool record_key_less(const RunRecord& a, const RunRecord& b);

/// Executes one run and measures it; never throws (failures are recorded
/// with hv = NaN).
RunRecord execute_run(const ExperimentPlan& plan, const std::string& problem,
                      int M, const MutationConfig& config,
                      std::uint64_t run_index);

/// Runs every (problem, M, config, run) combination of the plan that is
/// not already present in output_dir/records.csv, appending records as
/// they complete and rewriting the file in canonical order at the end.
/// Also writes output_dir/manifest.json. `workers` <= 1 runs the plain
/// serial loop; larger values use an OpenMP pool of that size.
std::vector<RunRecord> run_experiment(const ExperimentPlan& plan,
                                      int workers);

// ---------------------------------------------------------------------------
// Report generation
// ---------------------------------------------------------------------------

enum class GroupBy { objectives, problem_type, problem };

std::optional<GroupBy> parse_group_by(std::string_view text);

/// Problem-type groups: a problem is unimodal unless tagged multimodal,
/// and separable unless tagged nonseparable.
bool problem_is_multimodal(std::string_view problem);
bool problem_is_nonseparable(std::string_view problem);

struct ApsReport {
    std::vector<std::string> config_ids;    // rows
    std::vector<std::string> group_labels;  // columns
    // aps[group][config]; NaN marks a gap (no scored instance).
    std::vector<std::vector<double>> aps;
    // Competition ranks per column (1 = best); 0 marks a gap.
    std::vector<std::vector<int>> ranks;
    std::vector<std::string> warnings;
};

ApsReport report_aps(const std::vector<RunRecord>& records, GroupBy group_by);
std::string format_report(const ApsReport& report);

}  // namespace moeadde
