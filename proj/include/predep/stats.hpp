#pragma once

// Small numeric helpers shared by the estimator and the comparators.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace predep {

namespace detail {

// Compensated accumulation; bin contributions can span many orders of
// magnitude, so plain summation would make results depend on bin order.
class NeumaierSum {
public:
    void add(double v) {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }

    double total() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline void require_nonempty(const std::vector<double>& v) {
    if (v.empty()) throw std::invalid_argument("empty sample");
}

inline void require_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) throw std::invalid_argument("non-finite input");
}

}  // namespace detail

inline double mean(const std::vector<double>& v) {
    detail::require_nonempty(v);
    detail::NeumaierSum s;
    for (double x : v) s.add(x);
    return s.total() / static_cast<double>(v.size());
}

// Unbiased (ddof = 1) variance; 0 for n < 2.
inline double sample_variance(const std::vector<double>& v) {
    detail::require_nonempty(v);
    std::size_t n = v.size();
    if (n < 2) return 0.0;
    double m = mean(v);
    detail::NeumaierSum s;
    for (double x : v) s.add((x - m) * (x - m));
    return s.total() / static_cast<double>(n - 1);
}

inline double sample_sd(const std::vector<double>& v) { return std::sqrt(sample_variance(v)); }

// Linear-interpolation quantile (type 7): h = (n-1)p, interpolate between
// the two bracketing order statistics. Input must already be sorted.
inline double quantile_type7_sorted(const std::vector<double>& sorted, double p) {
    detail::require_nonempty(sorted);
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("quantile probability out of range");
    std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    double h = static_cast<double>(n - 1) * p;
    std::size_t lo = static_cast<std::size_t>(h);
    if (lo >= n - 1) return sorted[n - 1];
    double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

inline double quantile_type7(std::vector<double> v, double p) {
    std::sort(v.begin(), v.end());
    return quantile_type7_sorted(v, p);
}

inline double median(const std::vector<double>& v) { return quantile_type7(v, 0.5); }

inline double interquartile_range(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return quantile_type7_sorted(v, 0.75) - quantile_type7_sorted(v, 0.25);
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
    if (x.size() < 2) throw std::invalid_argument("insufficient data");
    detail::require_finite(x);
    detail::require_finite(y);
    double mx = mean(x), my = mean(y);
    detail::NeumaierSum sxy, sxx, syy;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxy.add(dx * dy);
        sxx.add(dx * dx);
        syy.add(dy * dy);
    }
    double den = sxx.total() * syy.total();
    if (den <= 0.0) throw std::invalid_argument("zero variance");
    double r = sxy.total() / std::sqrt(den);
    return std::clamp(r, -1.0, 1.0);
}

// Ranks with ties averaged (midranks), 1-based.
inline std::vector<double> ranks_average_ties(const std::vector<double>& v) {
    detail::require_nonempty(v);
    std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        double r = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
        i = j + 1;
    }
    return ranks;
}

inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
    if (x.size() < 2) throw std::invalid_argument("insufficient data");
    detail::require_finite(x);
    detail::require_finite(y);
    return pearson(ranks_average_ties(x), ranks_average_ties(y));
}

}  // namespace predep
