#include "moeadde/core.hpp"

#include <algorithm>
#include <numeric>

namespace moeadde {

Bounds::Bounds(std::vector<double> lo, std::vector<double> hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.size() != upper.size())
        throw std::invalid_argument("Bounds: lower/upper length mismatch");
    for (std::size_t j = 0; j < lower.size(); ++j)
        if (!(lower[j] < upper[j]))
            throw std::invalid_argument(
                "Bounds: lower[" + std::to_string(j) + "] must be < upper");
}

bool Bounds::contains(std::span<const double> x) const noexcept {
    if (x.size() != lower.size()) return false;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] < lower[j] || x[j] > upper[j]) return false;
    return true;
}

bool dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominates: objective length mismatch");
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strictly_better = true;
    }
    return strictly_better;
}

std::vector<std::size_t> nondominated_indices(
    const std::vector<std::vector<double>>& points) {
    if (points.empty()) return {};
    const std::size_t m = points[0].size();
    for (const auto& p : points)
        if (p.size() != m)
            throw std::invalid_argument(
                "nondominated_indices: objective length mismatch");

    // Process by ascending coordinate sum with a lexicographic tiebreak:
    // a dominator has a strictly smaller sum, and if rounding collapses the
    // sums it is still lexicographically smaller, so every dominator is
    // processed before its victim and each point only needs checking
    // against the archive built so far.
    std::vector<double> sums(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        sums[i] = std::accumulate(points[i].begin(), points[i].end(), 0.0);
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                         if (sums[a] != sums[b]) return sums[a] < sums[b];
                         return points[a] < points[b];
                     });

    std::vector<std::size_t> archive;
    for (std::size_t idx : order) {
        const auto& p = points[idx];
        bool keep = true;
        for (std::size_t kept : archive) {
            if (points[kept] == p || dominates(points[kept], p)) {
                keep = false;
                break;
            }
        }
        if (keep) archive.push_back(idx);
    }
    std::sort(archive.begin(), archive.end());
    return archive;
}

std::vector<std::vector<double>> nondominated_filter(
    const std::vector<std::vector<double>>& points) {
    std::vector<std::vector<double>> result;
    for (std::size_t idx : nondominated_indices(points))
        result.push_back(points[idx]);
    return result;
}

}  // namespace moeadde
