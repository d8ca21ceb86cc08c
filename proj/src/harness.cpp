#include "moeadde/harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "moeadde/problems.hpp"

namespace moeadde {

namespace {

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string format_double(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, end);
}

double parse_double(std::string_view text) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ConfigError("bad numeric field \"" + std::string(text) + "\"");
    return value;
}

std::uint64_t parse_u64(std::string_view text) {
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ConfigError("bad integer field \"" + std::string(text) + "\"");
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                          s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> items;
    std::string current;
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!current.empty()) items.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) items.push_back(std::move(current));
    return items;
}

}  // namespace

// ---------------------------------------------------------------------------
// Configurations
// ---------------------------------------------------------------------------

const std::vector<MutationConfig>& all_configs() {
    static const std::vector<MutationConfig> configs = [] {
        std::vector<MutationConfig> v;
        for (RepairMethod repair :
             {RepairMethod::replacement, RepairMethod::reinitialization,
              RepairMethod::reflection, RepairMethod::r_reflection,
              RepairMethod::resampling})
            for (MutationStrategy strategy :
                 {MutationStrategy::current1, MutationStrategy::rand1})
                for (IndexSelection selection :
                     {IndexSelection::wor, IndexSelection::wr,
                      IndexSelection::wpr})
                    v.push_back({strategy, selection, repair});
        return v;
    }();
    return configs;
}

namespace {

const std::pair<std::string_view, MutationConfig> kNamedConfigs[] = {
    {"#A", {MutationStrategy::current1, IndexSelection::wr,
            RepairMethod::reinitialization}},
    {"#B", {MutationStrategy::current1, IndexSelection::wpr,
            RepairMethod::replacement}},
    {"#C", {MutationStrategy::rand1, IndexSelection::wor,
            RepairMethod::replacement}},
    {"#D", {MutationStrategy::rand1, IndexSelection::wpr,
            RepairMethod::replacement}},
    {"#E", {MutationStrategy::current1, IndexSelection::wor,
            RepairMethod::r_reflection}},
    {"#F", {MutationStrategy::current1, IndexSelection::wor,
            RepairMethod::replacement}},
    {"#G", {MutationStrategy::rand1, IndexSelection::wor,
            RepairMethod::r_reflection}},
    {"#H", {MutationStrategy::current1, IndexSelection::wpr,
            RepairMethod::r_reflection}},
};

}  // namespace

std::optional<MutationConfig> named_config(std::string_view name) {
    for (const auto& [label, config] : kNamedConfigs)
        if (label == name) return config;
    return std::nullopt;
}

std::optional<std::string> config_label(const MutationConfig& config) {
    for (const auto& [label, named] : kNamedConfigs)
        if (named == config) return std::string(label);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Plan parsing
// ---------------------------------------------------------------------------

ExperimentPlan parse_plan_text(std::string_view text) {
    ExperimentPlan plan;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("plan line " + std::to_string(line_no) +
                              ": expected key = value");
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));

        try {
            if (key == "problems") {
                plan.problems = split_list(value);
            } else if (key == "objectives") {
                for (const auto& item : split_list(value))
                    plan.objectives.push_back(
                        static_cast<int>(parse_u64(item)));
            } else if (key == "configs") {
                for (const auto& item : split_list(value)) {
                    if (item == "all") {
                        const auto& all = all_configs();
                        plan.configs.insert(plan.configs.end(), all.begin(),
                                            all.end());
                    } else if (auto named = named_config(item)) {
                        plan.configs.push_back(*named);
                    } else if (auto parsed = parse_config_id(item)) {
                        plan.configs.push_back(*parsed);
                    } else {
                        throw ConfigError("unknown config \"" + item + "\"");
                    }
                }
            } else if (key == "runs") {
                plan.runs = parse_u64(value);
            } else if (key == "max_evaluations") {
                plan.max_evaluations = parse_u64(value);
            } else if (key == "base_seed") {
                plan.base_seed = parse_u64(value);
            } else if (key == "output_dir") {
                plan.output_dir = std::string(value);
            } else if (key == "normalize") {
                if (value == "true") plan.normalize = true;
                else if (value == "false") plan.normalize = false;
                else throw ConfigError("normalize must be true or false");
            } else if (key == "T") {
                plan.T = static_cast<std::size_t>(parse_u64(value));
            } else if (key == "delta") {
                plan.delta = parse_double(value);
            } else if (key == "n_rep") {
                plan.n_rep = static_cast<int>(parse_u64(value));
            } else if (key == "F") {
                plan.F = parse_double(value);
            } else if (key == "CR") {
                plan.CR = parse_double(value);
            } else if (key == "eta_mut") {
                plan.eta_mut = parse_double(value);
            } else {
                throw ConfigError("unknown key \"" + key + "\"");
            }
        } catch (const ConfigError& e) {
            throw ConfigError("plan line " + std::to_string(line_no) + ": " +
                              e.what());
        }
    }
    return plan;
}

ExperimentPlan parse_plan_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw ConfigError("cannot open plan file " + file.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_plan_text(buffer.str());
}

void validate_plan(const ExperimentPlan& plan) {
    if (plan.problems.empty()) throw ConfigError("plan: no problems");
    if (plan.objectives.empty()) throw ConfigError("plan: no objectives");
    if (plan.configs.empty()) throw ConfigError("plan: no configs");
    if (plan.runs < 1) throw ConfigError("plan: runs must be >= 1");
    if (plan.output_dir.empty()) throw ConfigError("plan: no output_dir");

    std::set<std::string> seen;
    for (const auto& config : plan.configs)
        if (!seen.insert(config_id(config)).second)
            throw ConfigError("plan: duplicate config " + config_id(config));

    // Fail before any run if some combination cannot be configured.
    for (const auto& name : plan.problems) {
        for (int M : plan.objectives) {
            const Problem problem = make_problem(name, M);
            for (const auto& config : plan.configs) {
                MoeadConfig mc = default_config(problem, config,
                                                plan.max_evaluations, 1);
                if (plan.T) mc.T = *plan.T;
                if (plan.delta) mc.delta = *plan.delta;
                if (plan.n_rep) mc.n_rep = *plan.n_rep;
                if (plan.F) mc.de.F = *plan.F;
                if (plan.CR) mc.de.CR = *plan.CR;
                if (plan.eta_mut) mc.pm.eta_mut = *plan.eta_mut;
                mc.normalize = plan.normalize;
                MoeadEngine engine(mc, problem);  // throws on bad config
            }
        }
    }
}

std::uint64_t derive_run_seed(std::uint64_t base_seed,
                              std::string_view problem, int M,
                              std::string_view config_id_text,
                              std::uint64_t run_index) {
    std::uint64_t h = mix64(base_seed);
    h = mix64(h ^ fnv1a64(problem));
    h = mix64(h ^ static_cast<std::uint64_t>(M));
    h = mix64(h ^ fnv1a64(config_id_text));
    h = mix64(h ^ run_index);
    return h;
}

// ---------------------------------------------------------------------------
// Records
// ---------------------------------------------------------------------------

std::string record_to_csv(const RunRecord& r) {
    std::string line = r.problem;
    line += ',';
    line += std::to_string(r.M);
    line += ',';
    line += r.config;
    line += ',';
    line += std::to_string(r.seed);
    line += ',';
    line += format_double(r.hv);
    line += ',';
    line += std::to_string(r.evals);
    line += ',';
    line += std::to_string(r.wall_ms);
    line += ',';
    line += std::to_string(r.fallbacks);
    return line;
}

RunRecord record_from_csv(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = line.find(',', pos);
        fields.push_back(line.substr(
            pos, comma == std::string_view::npos ? line.size() - pos
                                                 : comma - pos));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (fields.size() != 8)
        throw ConfigError("records csv: expected 8 fields, got " +
                          std::to_string(fields.size()));
    RunRecord r;
    r.problem = std::string(fields[0]);
    r.M = static_cast<int>(parse_u64(fields[1]));
    r.config = std::string(fields[2]);
    r.seed = parse_u64(fields[3]);
    r.hv = fields[4] == "nan" ? std::nan("")
                              : parse_double(fields[4]);
    r.evals = parse_u64(fields[5]);
    r.wall_ms = parse_u64(fields[6]);
    r.fallbacks = parse_u64(fields[7]);
    return r;
}

bool record_key_less(const RunRecord& a, const RunRecord& b) {
    if (a.problem != b.problem) return a.problem < b.problem;
    if (a.M != b.M) return a.M < b.M;
    if (a.config != b.config) return a.config < b.config;
    return a.seed < b.seed;
}

std::vector<RunRecord> read_records_csv(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open records file " + file.string());
    std::vector<RunRecord> records;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::string_view sv = trim(line);
        if (sv.empty()) continue;
        if (first) {
            first = false;
            if (sv == kRecordsCsvHeader) continue;
        }
        records.push_back(record_from_csv(sv));
    }
    return records;
}

void write_records_csv(const std::filesystem::path& file,
                       std::vector<RunRecord> records) {
    std::sort(records.begin(), records.end(), record_key_less);
    std::ofstream out(file, std::ios::trunc);
    if (!out) throw ConfigError("cannot write records file " + file.string());
    out << kRecordsCsvHeader << '\n';
    for (const auto& r : records) out << record_to_csv(r) << '\n';
}

// ---------------------------------------------------------------------------
// Execution
// ---------------------------------------------------------------------------

RunRecord execute_run(const ExperimentPlan& plan, const std::string& problem_name,
                      int M, const MutationConfig& config,
                      std::uint64_t run_index) {
    RunRecord record;
    record.problem = problem_name;
    record.M = M;
    record.config = config_id(config);
    record.seed = derive_run_seed(plan.base_seed, problem_name, M,
                                  record.config, run_index);
    const auto start = std::chrono::steady_clock::now();
    try {
        const Problem problem = make_problem(problem_name, M);
        MoeadConfig mc = default_config(problem, config,
                                        plan.max_evaluations, record.seed);
        if (plan.T) mc.T = *plan.T;
        if (plan.delta) mc.delta = *plan.delta;
        if (plan.n_rep) mc.n_rep = *plan.n_rep;
        if (plan.F) mc.de.F = *plan.F;
        if (plan.CR) mc.de.CR = *plan.CR;
        if (plan.eta_mut) mc.pm.eta_mut = *plan.eta_mut;
        mc.normalize = plan.normalize;

        const RunResult result = run_moead(mc, problem);
        const auto normalized =
            normalize_front(result.nondominated, problem.reference_points());
        const std::vector<double> reference(static_cast<std::size_t>(M),
                                            kHvReference);
        record.hv = hypervolume(normalized, reference);
        record.evals = result.diagnostics.evaluations;
        record.fallbacks = result.diagnostics.resample_fallbacks;
    } catch (const std::exception&) {
        record.hv = std::nan("");
    }
    record.wall_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
    return record;
}

namespace {

struct PendingRun {
    std::string problem;
    int M = 0;
    MutationConfig config;
    std::uint64_t run_index = 0;
};

void write_manifest(const ExperimentPlan& plan) {
    nlohmann::json configs = nlohmann::json::array();
    for (const auto& config : plan.configs) {
        nlohmann::json c;
        c["strategy"] = std::string(to_string(config.strategy));
        c["selection"] = std::string(to_string(config.selection));
        c["repair"] = std::string(to_string(config.repair));
        if (auto label = config_label(config)) c["label"] = *label;
        configs.push_back(c);
    }
    nlohmann::json j;
    j["version"] = std::string(kVersion);
    j["problems"] = plan.problems;
    j["objectives"] = plan.objectives;
    j["configs"] = configs;
    j["runs"] = plan.runs;
    j["max_evaluations"] = plan.max_evaluations;
    j["base_seed"] = plan.base_seed;
    j["normalize"] = plan.normalize;
    if (plan.T) j["T"] = *plan.T;
    if (plan.delta) j["delta"] = *plan.delta;
    if (plan.n_rep) j["n_rep"] = *plan.n_rep;
    if (plan.F) j["F"] = *plan.F;
    if (plan.CR) j["CR"] = *plan.CR;
    if (plan.eta_mut) j["eta_mut"] = *plan.eta_mut;

    std::ofstream out(plan.output_dir / "manifest.json", std::ios::trunc);
    out << j.dump(2) << '\n';
}

}  // namespace

std::vector<RunRecord> run_experiment(const ExperimentPlan& plan,
                                      int workers) {
    validate_plan(plan);
    std::filesystem::create_directories(plan.output_dir);
    const auto csv_path = plan.output_dir / "records.csv";

    // Resume: completed records are keyed by (problem, M, config, seed);
    // failed (NaN) records are retried.
    std::vector<RunRecord> records;
    std::set<std::string> done;
    if (std::filesystem::exists(csv_path)) {
        for (auto& r : read_records_csv(csv_path)) {
            if (std::isnan(r.hv)) continue;
            done.insert(r.problem + "|" + std::to_string(r.M) + "|" +
                        r.config + "|" + std::to_string(r.seed));
            records.push_back(std::move(r));
        }
    }

    std::vector<PendingRun> pending;
    for (const auto& problem : plan.problems)
        for (int M : plan.objectives)
            for (const auto& config : plan.configs)
                for (std::uint64_t r = 0; r < plan.runs; ++r) {
                    const std::uint64_t seed = derive_run_seed(
                        plan.base_seed, problem, M, config_id(config), r);
                    const std::string key = problem + "|" +
                                            std::to_string(M) + "|" +
                                            config_id(config) + "|" +
                                            std::to_string(seed);
                    if (!done.count(key))
                        pending.push_back({problem, M, config, r});
                }

    write_manifest(plan);

    std::ofstream append(csv_path, std::ios::app);
    if (records.empty() && std::filesystem::file_size(csv_path) == 0)
        append << kRecordsCsvHeader << '\n';

    const auto complete = [&](RunRecord record) {
        append << record_to_csv(record) << '\n';
        append.flush();
        records.push_back(std::move(record));
    };

    if (workers <= 1) {
        // Serial reference path: identical results to the pooled path by
        // construction (every run owns its seed).
        for (const auto& p : pending)
            complete(execute_run(plan, p.problem, p.M, p.config, p.run_index));
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
        for (std::size_t i = 0; i < pending.size(); ++i) {
            const auto& p = pending[i];
            RunRecord record =
                execute_run(plan, p.problem, p.M, p.config, p.run_index);
#pragma omp critical
            complete(std::move(record));
        }
#else
        for (const auto& p : pending)
            complete(execute_run(plan, p.problem, p.M, p.config, p.run_index));
#endif
    }
    append.close();

    // Canonical on-disk order, independent of completion order.
    write_records_csv(csv_path, records);
    std::sort(records.begin(), records.end(), record_key_less);
    return records;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

std::optional<GroupBy> parse_group_by(std::string_view text) {
    if (text == "M") return GroupBy::objectives;
    if (text == "problem-type") return GroupBy::problem_type;
    if (text == "problem") return GroupBy::problem;
    return std::nullopt;
}

bool problem_is_multimodal(std::string_view problem) {
    return make_problem(problem, 2).spec().has(ProblemTag::multimodal);
}

bool problem_is_nonseparable(std::string_view problem) {
    return make_problem(problem, 2).spec().has(ProblemTag::nonseparable);
}

namespace {

// Canonical config-row order: the 30 standard configurations first, then
// anything else lexicographically.
std::vector<std::string> order_config_ids(const std::set<std::string>& ids) {
    std::vector<std::string> ordered;
    for (const auto& config : all_configs()) {
        const std::string id = config_id(config);
        if (ids.count(id)) ordered.push_back(id);
    }
    for (const auto& id : ids)
        if (std::find(ordered.begin(), ordered.end(), id) == ordered.end())
            ordered.push_back(id);
    return ordered;
}

std::vector<int> competition_ranks(const std::vector<double>& aps_column) {
    std::vector<int> ranks(aps_column.size(), 0);
    for (std::size_t i = 0; i < aps_column.size(); ++i) {
        if (std::isnan(aps_column[i])) continue;
        int rank = 1;
        for (std::size_t j = 0; j < aps_column.size(); ++j)
            if (!std::isnan(aps_column[j]) && aps_column[j] < aps_column[i])
                ++rank;
        ranks[i] = rank;
    }
    return ranks;
}

}  // namespace

ApsReport report_aps(const std::vector<RunRecord>& records, GroupBy group_by) {
    ApsReport report;

    std::set<std::string> id_set;
    for (const auto& r : records) id_set.insert(r.config);
    report.config_ids = order_config_ids(id_set);
    const std::size_t n_cfg = report.config_ids.size();
    std::map<std::string, std::size_t> cfg_index;
    for (std::size_t i = 0; i < n_cfg; ++i)
        cfg_index[report.config_ids[i]] = i;

    // Samples per (problem, M) instance and config.
    std::map<std::pair<std::string, int>,
             std::vector<std::vector<double>>> instances;
    for (const auto& r : records) {
        if (std::isnan(r.hv)) continue;
        auto& samples = instances[{r.problem, r.M}];
        samples.resize(n_cfg);
        samples[cfg_index[r.config]].push_back(r.hv);
    }

    // Score each complete instance once.
    std::map<std::pair<std::string, int>, std::vector<int>> instance_scores;
    for (const auto& [key, samples] : instances) {
        bool complete = true;
        for (const auto& s : samples)
            if (s.size() < 2) { complete = false; break; }
        if (!complete || samples.size() != n_cfg) {
            report.warnings.push_back(
                "instance " + key.first + "/M" + std::to_string(key.second) +
                " lacks runs for some configs; skipped");
            continue;
        }
        instance_scores[key] =
            n_cfg == 1 ? std::vector<int>{0} : performance_scores(samples);
    }

    // Group columns.
    const auto group_of = [&](const std::pair<std::string, int>& key)
        -> std::vector<std::string> {
        switch (group_by) {
            case GroupBy::objectives:
                return {"M=" + std::to_string(key.second)};
            case GroupBy::problem:
                return {key.first};
            case GroupBy::problem_type:
                return {problem_is_multimodal(key.first) ? "multimodal"
                                                         : "unimodal",
                        problem_is_nonseparable(key.first) ? "nonseparable"
                                                           : "separable"};
        }
        return {};
    };

    std::map<std::string, std::vector<std::vector<int>>> grouped;
    for (const auto& [key, scores] : instance_scores)
        for (const auto& label : group_of(key))
            grouped[label].push_back(scores);

    if (group_by == GroupBy::problem_type)
        report.group_labels = {"unimodal", "multimodal", "separable",
                               "nonseparable"};
    else
        for (const auto& [label, _] : grouped)
            report.group_labels.push_back(label);

    for (const auto& label : report.group_labels) {
        const auto it = grouped.find(label);
        if (it == grouped.end() || it->second.empty()) {
            report.aps.emplace_back(n_cfg,
                                    std::numeric_limits<double>::quiet_NaN());
            report.ranks.emplace_back(n_cfg, 0);
            report.warnings.push_back("group " + label +
                                      " has no scored instances");
            continue;
        }
        report.aps.push_back(aps(it->second));
        report.ranks.push_back(competition_ranks(report.aps.back()));
    }
    return report;
}

std::string format_report(const ApsReport& report) {
    std::ostringstream out;
    std::size_t width = 12;
    for (const auto& id : report.config_ids)
        width = std::max(width, id.size() + 2);

    out << std::string(width, ' ');
    for (const auto& label : report.group_labels) {
        out << ' ' << label;
        for (std::size_t pad = label.size(); pad < 14; ++pad) out << ' ';
    }
    out << '\n';

    for (std::size_t c = 0; c < report.config_ids.size(); ++c) {
        out << report.config_ids[c]
            << std::string(width - report.config_ids[c].size(), ' ');
        for (std::size_t g = 0; g < report.group_labels.size(); ++g) {
            char cell[32];
            if (std::isnan(report.aps[g][c])) {
                std::snprintf(cell, sizeof(cell), " %-14s", "--");
            } else {
                char body[24];
                std::snprintf(body, sizeof(body), "%.2f (%d)",
                              report.aps[g][c], report.ranks[g][c]);
                std::snprintf(cell, sizeof(cell), " %-14s", body);
            }
            out << cell;
        }
        out << '\n';
    }
    for (const auto& warning : report.warnings)
        out << "warning: " << warning << '\n';
    return out.str();
}

}  // namespace moeadde
