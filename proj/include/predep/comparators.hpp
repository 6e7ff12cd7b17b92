#pragma once

// Baseline association measures reported alongside the predictive-dependence
// estimate: Pearson, Spearman, distance correlation, and the categorical
// Goodman-Kruskal tau.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "stats.hpp"

namespace predep {

// Szekely's distance correlation, biased V-statistic form. O(N^2) time; row
// means are streamed so memory stays O(N).
inline double distance_correlation(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
    detail::require_nonempty(x);
    detail::require_finite(x);
    detail::require_finite(y);
    std::size_t n = x.size();
    double dn = static_cast<double>(n);

    std::vector<double> arow(n, 0.0), brow(n, 0.0);
    double amean = 0.0, bmean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        detail::NeumaierSum sa, sb;
        for (std::size_t j = 0; j < n; ++j) {
            sa.add(std::abs(x[i] - x[j]));
            sb.add(std::abs(y[i] - y[j]));
        }
        arow[i] = sa.total() / dn;
        brow[i] = sb.total() / dn;
        amean += arow[i];
        bmean += brow[i];
    }
    amean /= dn;
    bmean /= dn;

    detail::NeumaierSum sab, saa, sbb;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double a = std::abs(x[i] - x[j]) - arow[i] - arow[j] + amean;
            double b = std::abs(y[i] - y[j]) - brow[i] - brow[j] + bmean;
            sab.add(a * b);
            saa.add(a * a);
            sbb.add(b * b);
        }
    }
    double n2 = dn * dn;
    double dcov2 = sab.total() / n2;
    double dvarx = saa.total() / n2;
    double dvary = sbb.total() / n2;
    if (dvarx <= 0.0 || dvary <= 0.0) return 0.0;
    double r2 = dcov2 / std::sqrt(dvarx * dvary);
    if (r2 <= 0.0) return 0.0;
    return std::min(std::sqrt(r2), 1.0);
}

struct ContingencyTable {
    // counts[i][j]: row i, column j; rectangular, nonnegative
    std::vector<std::vector<double>> counts;

    std::size_t rows() const { return counts.size(); }
    std::size_t cols() const { return counts.empty() ? 0 : counts.front().size(); }
};

enum class TauDirection { rows_given_columns, columns_given_rows };

namespace detail {

inline ContingencyTable transpose(const ContingencyTable& t) {
    ContingencyTable out;
    out.counts.assign(t.cols(), std::vector<double>(t.rows(), 0.0));
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) out.counts[j][i] = t.counts[i][j];
    return out;
}

// tau_b = (A - B) / A with rows as the predicted category:
//   A = n sum_i p_{i.}(1 - p_{i.})
//   B = sum_j n_{.j} sum_i (p_{ij}/p_{.j})(1 - p_{ij}/p_{.j})
inline double tau_rows_given_columns(const ContingencyTable& t) {
    std::size_t r = t.rows(), c = t.cols();
    if (r < 2 || c < 2) throw std::invalid_argument("table must be at least 2x2");
    std::vector<double> row_tot(r, 0.0), col_tot(c, 0.0);
    double n = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
        if (t.counts[i].size() != c) throw std::invalid_argument("ragged table");
        for (std::size_t j = 0; j < c; ++j) {
            double v = t.counts[i][j];
            if (v < 0.0 || !std::isfinite(v)) throw std::invalid_argument("invalid count");
            row_tot[i] += v;
            col_tot[j] += v;
            n += v;
        }
    }
    if (n <= 0.0) throw std::invalid_argument("empty sample");

    double a = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
        double p = row_tot[i] / n;
        a += p * (1.0 - p);
    }
    a *= n;
    if (a <= 0.0) throw std::invalid_argument("no prediction error to reduce");

    double b = 0.0;
    for (std::size_t j = 0; j < c; ++j) {
        if (col_tot[j] <= 0.0) continue;
        double inner = 0.0;
        for (std::size_t i = 0; i < r; ++i) {
            double q = t.counts[i][j] / col_tot[j];
            inner += q * (1.0 - q);
        }
        b += col_tot[j] * inner;
    }
    double tau = (a - b) / a;
    return std::clamp(tau, 0.0, 1.0);
}

}  // namespace detail

inline double goodman_kruskal_tau(const ContingencyTable& table, TauDirection predict) {
    for (const auto& row : table.counts)
        if (row.size() != table.cols()) throw std::invalid_argument("ragged table");
    if (predict == TauDirection::rows_given_columns) return detail::tau_rows_given_columns(table);
    return detail::tau_rows_given_columns(detail::transpose(table));
}

}  // namespace predep
