#pragma once

// Gaussian kernel density estimation with Silverman's reference bandwidth.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "stats.hpp"

namespace predep {

struct BandwidthInfo {
    double value = 0.0;
    bool floored = false;  // spread collapsed; value is the degeneracy floor
};

// Silverman's rule: h = 0.9 min(sd, IQR/1.34) n^(-1/5). A zero IQR with
// positive sd falls back to sd alone (matches R's bw.nrd0), so heavy point
// masses do not zero out the bandwidth while spread remains. Only when the
// sample has no spread at all does the floor fire.
inline BandwidthInfo bandwidth_silverman(const std::vector<double>& samples) {
    detail::require_nonempty(samples);
    std::size_t n = samples.size();
    double sd = sample_sd(samples);

    std::vector<double> sorted(samples);
    std::sort(sorted.begin(), sorted.end());
    double iqr = quantile_type7_sorted(sorted, 0.75) - quantile_type7_sorted(sorted, 0.25);
    double med = quantile_type7_sorted(sorted, 0.5);

    double spread = std::min(sd, iqr / 1.34);
    if (spread <= 0.0) spread = sd;

    double floor = 1e-9 * std::max(1.0, std::abs(med));
    double h = 0.9 * spread * std::pow(static_cast<double>(n), -0.2);
    if (h > floor) return {h, false};
    return {floor, true};
}

struct DensityEstimate {
    std::vector<double> samples;
    double bandwidth = 0.0;
    bool floored = false;
};

inline DensityEstimate make_density_estimate(std::vector<double> samples) {
    detail::require_nonempty(samples);
    detail::require_finite(samples);
    BandwidthInfo bw = bandwidth_silverman(samples);
    return {std::move(samples), bw.value, bw.floored};
}

// Pointwise density: (1 / n h) sum phi((p - s_i) / h).
inline double kde_pdf_at(const DensityEstimate& est, double point) {
    if (est.samples.empty()) throw std::invalid_argument("empty sample");
    if (!std::isfinite(point) || !std::isfinite(est.bandwidth) || est.bandwidth <= 0.0)
        throw std::invalid_argument("non-finite input");
    constexpr double inv_sqrt_2pi = 0.3989422804014326779399461;
    detail::NeumaierSum s;
    double h = est.bandwidth;
    for (double x : est.samples) {
        double u = (point - x) / h;
        s.add(std::exp(-0.5 * u * u));
    }
    return inv_sqrt_2pi * s.total() / (static_cast<double>(est.samples.size()) * h);
}

}  // namespace predep
