#pragma once

// The predictive-dependence estimator. Both S terms are convolution
// densities at zero: for W = Y1 - Y2 with Y1, Y2 independent copies of Y,
// f_W(0) = integral of f_Y^2. The marginal term bootstraps the whole sample;
// the conditional term bins on x and accumulates per-bin estimates weighted
// by bin mass. alpha = (S_cond - S_marg) / S_cond.
//
// Every random quantity derives from config.seed through child_seed with
// fixed indices, so results are bit-reproducible and independent of
// evaluation order:
//   predep:        marginal stream 1, conditional stream 2
//   marginal:      bootstrap streams 1 and 2
//   conditional:   bin b uses child 3+b (streams 1 and 2 under it);
//                  the singleton-bin fallback uses child 1
//   predep_both:   children 1 and 2 for the two directions
//   predep_ci:     resample indices from child 3, resample r from child 10+r

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "binning.hpp"
#include "kde.hpp"
#include "sampling.hpp"
#include "stats.hpp"

namespace predep {

enum class Direction { Y_given_X, X_given_Y };

struct PredepConfig {
    // replaces both the marginal count ceil(n ln n) and the per-bin counts
    std::optional<std::size_t> bootstrap_count_override;
    std::uint64_t seed = 0;
    std::size_t ci_resamples = 200;  // used by predep_ci; predep itself never resamples
    double ci_level = 0.95;
    bool clamp = true;
};

struct PredepResult {
    double alpha_raw = 0.0;
    double alpha = 0.0;
    double s_marginal = 0.0;
    double s_conditional = 0.0;
    Direction direction = Direction::Y_given_X;
    std::size_t degenerate_bins = 0;
    std::uint64_t seed = 0;
    std::optional<std::pair<double, double>> ci;
};

struct SEstimate {
    double value = 0.0;
    bool degenerate = false;  // difference sample had no spread; floored bandwidth
};

struct ConditionalEstimate {
    double value = 0.0;
    std::size_t degenerate_bins = 0;
};

namespace detail {

inline double convolution_density_at_zero(const std::vector<double>& y, std::size_t count,
                                          std::uint64_t seed, bool* floored) {
    std::vector<double> y1 = bootstrap_sample(y, count, child_seed(seed, 1));
    std::vector<double> y2 = bootstrap_sample(y, count, child_seed(seed, 2));
    DensityEstimate est = make_density_estimate(difference_sample(y1, y2));
    if (floored) *floored = est.floored;
    return kde_pdf_at(est, 0.0);
}

inline std::size_t count_distinct(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

}  // namespace detail

inline SEstimate estimate_s_marginal_info(const std::vector<double>& y,
                                          const PredepConfig& config) {
    detail::require_nonempty(y);
    if (y.size() < 2) throw std::invalid_argument("insufficient data");
    detail::require_finite(y);
    std::size_t count = config.bootstrap_count_override
                            ? *config.bootstrap_count_override
                            : default_bootstrap_count(y.size());
    SEstimate out;
    out.value = detail::convolution_density_at_zero(y, count, config.seed, &out.degenerate);
    return out;
}

inline double estimate_s_marginal(const std::vector<double>& y, const PredepConfig& config) {
    return estimate_s_marginal_info(y, config).value;
}

// Weighted sum over bins of the within-bin convolution density at zero.
// A bin with one observation carries no information about conditional
// spread, so it contributes the marginal estimate (computed once, from
// child seed 1) and is counted as degenerate. Bins whose difference sample
// collapses to a point keep the floored-bandwidth blowup; that is real
// evidence of an atom and drives alpha toward 1.
inline ConditionalEstimate estimate_s_conditional(const std::vector<double>& x,
                                                  const std::vector<double>& y,
                                                  const PredepConfig& config) {
    if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
    if (x.size() < 4) throw std::invalid_argument("insufficient data");
    detail::require_finite(x);
    detail::require_finite(y);

    BinPartition part = compute_bin_edges(x);
    std::size_t k = part.bin_count();
    std::size_t n = x.size();

    std::vector<std::vector<double>> bins(k);
    for (std::size_t i = 0; i < n; ++i) bins[part.assignments[i]].push_back(y[i]);

    detail::NeumaierSum acc;
    std::size_t degenerate = 0;
    std::optional<double> marginal_fallback;

    for (std::size_t b = 0; b < k; ++b) {
        std::size_t m = bins[b].size();
        if (m == 0) continue;  // partitions are non-empty by construction
        double p = static_cast<double>(m) / static_cast<double>(n);
        if (m == 1) {
            if (!marginal_fallback) {
                std::size_t count = config.bootstrap_count_override
                                        ? *config.bootstrap_count_override
                                        : default_bootstrap_count(n);
                marginal_fallback = detail::convolution_density_at_zero(
                    y, count, child_seed(config.seed, 1), nullptr);
            }
            acc.add(p * *marginal_fallback);
            ++degenerate;
            continue;
        }
        std::size_t count = config.bootstrap_count_override
                                ? *config.bootstrap_count_override
                                : std::max<std::size_t>(16, default_bootstrap_count(m));
        bool floored = false;
        double v = detail::convolution_density_at_zero(bins[b], count,
                                                       child_seed(config.seed, 3 + b), &floored);
        if (floored) ++degenerate;
        acc.add(p * v);
    }
    return {acc.total(), degenerate};
}

inline PredepResult predep(const std::vector<double>& x, const std::vector<double>& y,
                           const PredepConfig& config) {
    if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
    if (x.size() < 4) throw std::invalid_argument("insufficient data");
    detail::require_finite(x);
    detail::require_finite(y);
    if (detail::count_distinct(x) < 2)
        throw std::invalid_argument("degenerate conditioning variable");
    if (detail::count_distinct(y) < 2) throw std::invalid_argument("degenerate predicted variable");

    PredepConfig mc = config;
    mc.seed = child_seed(config.seed, 1);
    double s_marg = estimate_s_marginal(y, mc);

    PredepConfig cc = config;
    cc.seed = child_seed(config.seed, 2);
    ConditionalEstimate cond = estimate_s_conditional(x, y, cc);

    PredepResult r;
    r.s_marginal = s_marg;
    r.s_conditional = cond.value;
    r.degenerate_bins = cond.degenerate_bins;
    r.alpha_raw = (cond.value - s_marg) / cond.value;
    r.alpha = config.clamp ? std::clamp(r.alpha_raw, 0.0, 1.0) : r.alpha_raw;
    r.direction = Direction::Y_given_X;
    r.seed = config.seed;
    return r;
}

inline std::pair<PredepResult, PredepResult> predep_both(const std::vector<double>& x,
                                                         const std::vector<double>& y,
                                                         const PredepConfig& config) {
    PredepConfig c1 = config;
    c1.seed = child_seed(config.seed, 1);
    PredepResult yx = predep(x, y, c1);

    PredepConfig c2 = config;
    c2.seed = child_seed(config.seed, 2);
    PredepResult xy = predep(y, x, c2);
    xy.direction = Direction::X_given_Y;
    return {yx, xy};
}

// Percentile bootstrap interval on the clamped alpha: pairs are resampled
// jointly, alpha recomputed per resample with its own child seed. Resamples
// whose x or y collapses to one distinct value are skipped; the index stream
// advances regardless so the remaining resamples are unchanged.
inline std::pair<double, double> predep_ci(const std::vector<double>& x,
                                           const std::vector<double>& y,
                                           const PredepConfig& config) {
    if (config.ci_resamples < 1) throw std::invalid_argument("ci_resamples must be positive");
    if (!(config.ci_level > 0.0 && config.ci_level < 1.0))
        throw std::invalid_argument("ci_level out of range");
    if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
    if (x.size() < 4) throw std::invalid_argument("insufficient data");

    std::size_t n = x.size();
    Rng idx(child_seed(config.seed, 3));
    std::vector<double> xr(n), yr(n), alphas;
    alphas.reserve(config.ci_resamples);
    for (std::size_t r = 0; r < config.ci_resamples; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = idx.uniform_index(n);
            xr[i] = x[j];
            yr[i] = y[j];
        }
        PredepConfig rc = config;
        rc.seed = child_seed(config.seed, 10 + r);
        try {
            alphas.push_back(predep(xr, yr, rc).alpha);
        } catch (const std::invalid_argument&) {
            // degenerate resample; skip
        }
    }
    if (alphas.empty()) throw std::invalid_argument("degenerate conditioning variable");
    std::sort(alphas.begin(), alphas.end());
    double tail = 0.5 * (1.0 - config.ci_level);
    return {quantile_type7_sorted(alphas, tail), quantile_type7_sorted(alphas, 1.0 - tail)};
}

}  // namespace predep
