#pragma once

// Conditioning-variable discretisation: an exact minimum-WCSS contiguous
// k-partition of the distinct x values, solved by layered DP with
// divide-and-conquer argmin search. O(k d log d) time, O(k d) space over
// d distinct values, which covers the sample sizes this library targets.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "stats.hpp"

namespace predep {

struct BinPartition {
    std::vector<double> edges;             // size bin_count() + 1, strictly increasing
    std::vector<std::size_t> assignments;  // per input point, in [0, bin_count())

    std::size_t bin_count() const { return edges.empty() ? 0 : edges.size() - 1; }
};

namespace detail {

// Weighted within-cluster sum of squares for each contiguous segment, via
// prefix sums of w, w*v, w*v^2. Values are mean-shifted first; the cost
// differences that drive the DP are tiny relative to raw second moments.
class SegmentCost {
public:
    SegmentCost(const std::vector<double>& vals, const std::vector<double>& wts) {
        std::size_t d = vals.size();
        double mu = 0.0, wtot = 0.0;
        for (std::size_t t = 0; t < d; ++t) {
            mu += wts[t] * vals[t];
            wtot += wts[t];
        }
        mu /= wtot;
        w_.assign(d + 1, 0.0);
        s_.assign(d + 1, 0.0);
        q_.assign(d + 1, 0.0);
        for (std::size_t t = 0; t < d; ++t) {
            double v = vals[t] - mu;
            w_[t + 1] = w_[t] + wts[t];
            s_[t + 1] = s_[t] + wts[t] * v;
            q_[t + 1] = q_[t] + wts[t] * v * v;
        }
    }

    // cost of segment [i, j), j > i
    double operator()(std::size_t i, std::size_t j) const {
        double w = w_[j] - w_[i];
        double s = s_[j] - s_[i];
        double q = q_[j] - q_[i];
        return std::max(0.0, q - s * s / w);
    }

private:
    std::vector<double> w_, s_, q_;
};

// Fills dp_cur[j] = min_i dp_prev[i] + cost(i, j) for j in [jlo, jhi],
// exploiting argmin monotonicity. Ties break to the leftmost i.
inline void wcss_layer_fill(const SegmentCost& cost, const std::vector<double>& dp_prev,
                            std::vector<double>& dp_cur, std::vector<std::size_t>& arg,
                            std::size_t imin, std::size_t jlo, std::size_t jhi, std::size_t ilo,
                            std::size_t ihi) {
    if (jlo > jhi) return;
    std::size_t jm = jlo + (jhi - jlo) / 2;
    double best = 0.0;
    std::size_t besti = 0;
    bool have = false;
    std::size_t lo = std::max(ilo, imin);
    std::size_t hi = std::min(ihi, jm - 1);
    for (std::size_t i = lo; i <= hi; ++i) {
        double c = dp_prev[i] + cost(i, jm);
        if (!have || c < best) {
            best = c;
            besti = i;
            have = true;
        }
    }
    dp_cur[jm] = best;
    arg[jm] = besti;
    if (jm > jlo) wcss_layer_fill(cost, dp_prev, dp_cur, arg, imin, jlo, jm - 1, ilo, besti);
    if (jm < jhi) wcss_layer_fill(cost, dp_prev, dp_cur, arg, imin, jm + 1, jhi, besti, ihi);
}

// Split positions (k - 1 strictly increasing indices into the distinct
// values) of the optimal k-segment partition.
inline std::vector<std::size_t> wcss_optimal_splits(const std::vector<double>& vals,
                                                    const std::vector<double>& wts,
                                                    std::size_t k) {
    std::size_t d = vals.size();
    SegmentCost cost(vals, wts);
    std::vector<double> dp_prev(d + 1, 0.0), dp_cur(d + 1, 0.0);
    for (std::size_t j = 1; j <= d; ++j) dp_prev[j] = cost(0, j);
    // args[c][j]: last split position of the best (c+1)-segment partition of [0, j)
    std::vector<std::vector<std::size_t>> args(k, std::vector<std::size_t>(d + 1, 0));
    for (std::size_t c = 1; c < k; ++c) {
        wcss_layer_fill(cost, dp_prev, dp_cur, args[c], c, c + 1, d, 1, d - 1);
        std::swap(dp_prev, dp_cur);
    }
    std::vector<std::size_t> splits(k - 1);
    std::size_t j = d;
    for (std::size_t c = k; c-- > 1;) {
        j = args[c][j];
        splits[c - 1] = j;
    }
    return splits;
}

}  // namespace detail

// Values of y whose paired x lies in [lo, hi) (or [lo, hi] when include_hi).
inline std::vector<double> filter_by_interval(const std::vector<double>& x,
                                              const std::vector<double>& y, double lo, double hi,
                                              bool include_hi = false) {
    if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
    std::vector<double> out;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] >= lo && (x[i] < hi || (include_hi && x[i] == hi))) out.push_back(y[i]);
    return out;
}

// Bins x into k = min(ceil(sqrt(n)), #distinct) contiguous intervals that
// minimise within-bin sum of squares. Edges span the data: edges[0] is the
// minimum, interior edges are midpoints between adjacent cluster boundary
// values, and the last edge sits just above the maximum so every point lands
// in a half-open bin. Every bin is non-empty by construction.
inline BinPartition compute_bin_edges(const std::vector<double>& x) {
    detail::require_nonempty(x);
    detail::require_finite(x);

    std::vector<double> vals(x);
    std::sort(vals.begin(), vals.end());
    std::vector<double> wts;
    std::vector<double> distinct;
    for (double v : vals) {
        if (distinct.empty() || v != distinct.back()) {
            distinct.push_back(v);
            wts.push_back(1.0);
        } else {
            wts.back() += 1.0;
        }
    }
    std::size_t d = distinct.size();
    if (d < 2) throw std::invalid_argument("degenerate conditioning variable");

    std::size_t n = x.size();
    std::size_t k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    k = std::min(k, d);
    if (k < 1) k = 1;

    std::vector<std::size_t> splits;
    if (k >= 2) splits = detail::wcss_optimal_splits(distinct, wts, k);

    BinPartition part;
    part.edges.reserve(k + 1);
    part.edges.push_back(distinct.front());
    for (std::size_t s : splits) {
        double lo = distinct[s - 1], hi = distinct[s];
        double mid = 0.5 * (lo + hi);
        if (mid <= lo) mid = hi;  // adjacent floats: keep the left value left
        part.edges.push_back(mid);
    }
    double top = distinct.back();
    part.edges.push_back(top + 1e-9 * std::max(1.0, std::abs(top)));

    part.assignments.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = std::upper_bound(part.edges.begin(), part.edges.end(), x[i]);
        std::size_t b = static_cast<std::size_t>(it - part.edges.begin());
        part.assignments[i] = std::min(b - 1, part.bin_count() - 1);
    }
    return part;
}

}  // namespace predep
