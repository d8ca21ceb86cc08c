#include "moeadde/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace moeadde {

NormalizationBounds::NormalizationBounds(std::vector<double> ideal_point,
                                         std::vector<double> nadir_point)
    : ideal(std::move(ideal_point)), nadir(std::move(nadir_point)) {
    if (ideal.size() != nadir.size())
        throw std::invalid_argument(
            "NormalizationBounds: ideal/nadir length mismatch");
    for (std::size_t i = 0; i < ideal.size(); ++i)
        if (!(nadir[i] > ideal[i]))
            throw std::invalid_argument(
                "NormalizationBounds: nadir must exceed ideal in coordinate " +
                std::to_string(i));
}

std::vector<double> normalize_point(std::span<const double> f,
                                    const NormalizationBounds& bounds) {
    if (f.size() != bounds.ideal.size())
        throw std::invalid_argument("normalize_point: length mismatch");
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = (f[i] - bounds.ideal[i]) / (bounds.nadir[i] - bounds.ideal[i]);
    return out;
}

std::vector<std::vector<double>> normalize_front(
    const std::vector<std::vector<double>>& front,
    const NormalizationBounds& bounds) {
    std::vector<std::vector<double>> out;
    out.reserve(front.size());
    for (const auto& f : front) out.push_back(normalize_point(f, bounds));
    return out;
}

namespace {

// 2-D base case: staircase sweep over points sorted by the first
// objective (input is mutually nondominated).
double staircase_area(std::vector<std::vector<double>>& pts, double ref0,
                      double ref1) {
    std::sort(pts.begin(), pts.end());
    double area = 0.0;
    double roof = ref1;
    for (const auto& p : pts) {
        area += (ref0 - p[0]) * (roof - p[1]);
        roof = p[1];
    }
    return area;
}

double sweep(std::vector<std::vector<double>> pts,
             std::span<const double> ref, std::size_t dim) {
    if (pts.empty()) return 0.0;
    if (dim == 1) {
        double best = ref[0];
        for (const auto& p : pts) best = std::min(best, p[0]);
        return ref[0] - best;
    }
    if (dim == 2) return staircase_area(pts, ref[0], ref[1]);

    std::sort(pts.begin(), pts.end(),
              [dim](const auto& a, const auto& b) {
                  return a[dim - 1] < b[dim - 1];
              });

    double volume = 0.0;
    std::vector<std::vector<double>> slice;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double level = pts[i][dim - 1];
        const double next =
            i + 1 < pts.size() ? pts[i + 1][dim - 1] : ref[dim - 1];
        if (next <= level) continue;  // zero-thickness slab (ties)
        slice.clear();
        for (std::size_t j = 0; j <= i; ++j)
            slice.emplace_back(pts[j].begin(), pts[j].end() - 1);
        volume += (next - level) *
                  sweep(nondominated_filter(slice), ref.first(dim - 1),
                        dim - 1);
    }
    return volume;
}

}  // namespace

double hypervolume(const std::vector<std::vector<double>>& front,
                   std::span<const double> reference) {
    const std::size_t m = reference.size();
    if (m < 1) throw std::invalid_argument("hypervolume: empty reference");

    std::vector<std::vector<double>> pts;
    for (const auto& f : front) {
        if (f.size() != m)
            throw std::invalid_argument(
                "hypervolume: point/reference length mismatch");
        bool inside = true;
        for (std::size_t i = 0; i < m; ++i)
            if (f[i] >= reference[i]) { inside = false; break; }
        if (inside) pts.push_back(f);
    }
    if (pts.empty()) return 0.0;
    return sweep(nondominated_filter(pts), reference, m);
}

namespace {

// Midranks of the pooled sample plus the tie-correction term sum(t^3 - t).
struct Ranked {
    std::vector<double> ranks_a;
    double tie_term = 0.0;
};

Ranked midranks(std::span<const double> a, std::span<const double> b) {
    struct Entry { double value; bool from_a; };
    std::vector<Entry> pool;
    pool.reserve(a.size() + b.size());
    for (double v : a) pool.push_back({v, true});
    for (double v : b) pool.push_back({v, false});
    std::sort(pool.begin(), pool.end(),
              [](const Entry& x, const Entry& y) { return x.value < y.value; });

    Ranked out;
    std::size_t i = 0;
    while (i < pool.size()) {
        std::size_t j = i;
        while (j < pool.size() && pool[j].value == pool[i].value) ++j;
        const double t = static_cast<double>(j - i);
        const double rank = 0.5 * static_cast<double>(i + 1 + j);  // midrank
        for (std::size_t k = i; k < j; ++k)
            if (pool[k].from_a) out.ranks_a.push_back(rank);
        out.tie_term += t * t * t - t;
        i = j;
    }
    return out;
}

}  // namespace

double wilcoxon_rank_sum(std::span<const double> sample_a,
                         std::span<const double> sample_b) {
    if (sample_a.empty() || sample_b.empty())
        throw std::invalid_argument("wilcoxon_rank_sum: empty sample");
    const double na = static_cast<double>(sample_a.size());
    const double nb = static_cast<double>(sample_b.size());
    const double n = na + nb;

    const Ranked ranked = midranks(sample_a, sample_b);
    const double w =
        std::accumulate(ranked.ranks_a.begin(), ranked.ranks_a.end(), 0.0);
    const double mean = na * (n + 1.0) / 2.0;
    const double variance =
        na * nb / 12.0 * ((n + 1.0) - ranked.tie_term / (n * (n - 1.0)));
    if (variance <= 0.0) return 1.0;  // all pooled values identical

    double diff = w - mean;
    // continuity correction toward the mean
    if (diff > 0.5) diff -= 0.5;
    else if (diff < -0.5) diff += 0.5;
    else diff = 0.0;

    const double z = diff / std::sqrt(variance);
    const double p = std::erfc(std::abs(z) / std::sqrt(2.0));
    return std::min(1.0, p);
}

namespace {

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2]
                      : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

std::vector<int> performance_scores(
    const std::vector<std::vector<double>>& hv_samples, double alpha) {
    const std::size_t n = hv_samples.size();
    if (n < 2)
        throw std::invalid_argument(
            "performance_scores: need at least two algorithms");
    std::vector<double> medians(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (hv_samples[i].size() < 2)
            throw std::invalid_argument(
                "performance_scores: need at least two runs per algorithm");
        medians[i] = median_of(hv_samples[i]);
    }

    std::vector<int> scores(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double p = wilcoxon_rank_sum(hv_samples[i], hv_samples[j]);
            if (p < alpha && medians[j] > medians[i]) ++scores[i];
        }
    }
    return scores;
}

std::vector<double> aps(const std::vector<std::vector<int>>& scores) {
    if (scores.empty())
        throw std::invalid_argument("aps: empty score matrix");
    const std::size_t n_alg = scores[0].size();
    std::vector<double> means(n_alg, 0.0);
    for (const auto& row : scores) {
        if (row.size() != n_alg)
            throw std::invalid_argument("aps: ragged score matrix");
        for (std::size_t a = 0; a < n_alg; ++a)
            means[a] += static_cast<double>(row[a]);
    }
    for (double& m : means) m /= static_cast<double>(scores.size());
    return means;
}

}  // namespace moeadde
