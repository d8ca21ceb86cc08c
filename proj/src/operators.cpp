#include "moeadde/operators.hpp"

namespace moeadde {

std::string_view to_string(MutationStrategy s) {
    return s == MutationStrategy::rand1 ? "rand1" : "current1";
}

std::string_view to_string(IndexSelection s) {
    switch (s) {
        case IndexSelection::wor: return "WOR";
        case IndexSelection::wr: return "WR";
        default: return "WPR";
    }
}

std::string_view to_string(RepairMethod r) {
    switch (r) {
        case RepairMethod::replacement: return "replacement";
        case RepairMethod::reinitialization: return "reinitialization";
        case RepairMethod::reflection: return "reflection";
        case RepairMethod::r_reflection: return "r-reflection";
        default: return "resampling";
    }
}

std::optional<MutationStrategy> parse_strategy(std::string_view text) {
    if (text == "rand1" || text == "rand/1") return MutationStrategy::rand1;
    if (text == "current1" || text == "current/1")
        return MutationStrategy::current1;
    return std::nullopt;
}

std::optional<IndexSelection> parse_selection(std::string_view text) {
    if (text == "WOR") return IndexSelection::wor;
    if (text == "WR") return IndexSelection::wr;
    if (text == "WPR") return IndexSelection::wpr;
    return std::nullopt;
}

std::optional<RepairMethod> parse_repair(std::string_view text) {
    if (text == "replacement") return RepairMethod::replacement;
    if (text == "reinitialization") return RepairMethod::reinitialization;
    if (text == "reflection") return RepairMethod::reflection;
    if (text == "r-reflection") return RepairMethod::r_reflection;
    if (text == "resampling") return RepairMethod::resampling;
    return std::nullopt;
}

std::string config_id(const MutationConfig& config) {
    std::string id{to_string(config.strategy)};
    id += '/';
    id += to_string(config.selection);
    id += '/';
    id += to_string(config.repair);
    return id;
}

std::optional<MutationConfig> parse_config_id(std::string_view id) {
    const auto first = id.find('/');
    const auto second = id.rfind('/');
    if (first == std::string_view::npos || second == first)
        return std::nullopt;
    const auto strategy = parse_strategy(id.substr(0, first));
    const auto selection = parse_selection(
        id.substr(first + 1, second - first - 1));
    const auto repair = parse_repair(id.substr(second + 1));
    if (!strategy || !selection || !repair) return std::nullopt;
    return MutationConfig{*strategy, *selection, *repair};
}

std::vector<double> de_mutant(MutationStrategy strategy, std::size_t target,
                              std::span<const std::size_t> parents,
                              const std::vector<Individual>& population,
                              double F) {
    if (parents.size() != parent_count(strategy))
        throw std::invalid_argument(
            "de_mutant: strategy needs " +
            std::to_string(parent_count(strategy)) + " parent indices, got " +
            std::to_string(parents.size()));

    const std::vector<double>& base = strategy == MutationStrategy::rand1
                                          ? population[parents[0]].x
                                          : population[target].x;
    const std::vector<double>& plus = strategy == MutationStrategy::rand1
                                          ? population[parents[1]].x
                                          : population[parents[0]].x;
    const std::vector<double>& minus = strategy == MutationStrategy::rand1
                                           ? population[parents[2]].x
                                           : population[parents[1]].x;

    std::vector<double> v(base.size());
    for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = base[j] + F * (plus[j] - minus[j]);
    return v;
}

}  // namespace moeadde
