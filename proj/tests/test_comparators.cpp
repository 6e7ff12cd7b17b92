#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

#include <predep/comparators.hpp>
#include <predep/sampling.hpp>

using namespace predep;
using Catch::Approx;
using Catch::Matchers::ContainsSubstring;

namespace {

// population dcor^2 for the bivariate normal (energy-statistics literature)
double normal_dcor(double rho) {
    double num = rho * std::asin(rho) + std::sqrt(1.0 - rho * rho) -
                 rho * std::asin(rho / 2.0) - std::sqrt(4.0 - rho * rho) + 1.0;
    double den = 1.0 + 3.1415926535897932 / 3.0 - std::sqrt(3.0);
    return std::sqrt(num / den);
}

ContingencyTable appendix_table() {
    return ContingencyTable{{{0, 0, 2, 0, 0}, {0, 2, 0, 2, 0}, {2, 0, 0, 0, 2}}};
}

// tau recomputed in exact integer arithmetic: tau = (M D - n NUM) / (M D)
// with M = n^2 - sum_i r_i^2, M_j = c_j^2 - sum_i n_ij^2, D = prod c_j,
// NUM = sum_j M_j D / c_j.
double tau_exact_rows_given_columns(const std::vector<std::vector<std::int64_t>>& counts) {
    std::size_t r = counts.size(), c = counts[0].size();
    std::vector<std::int64_t> rt(r, 0), ct(c, 0);
    std::int64_t n = 0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            rt[i] += counts[i][j];
            ct[j] += counts[i][j];
            n += counts[i][j];
        }
    std::int64_t m = n * n;
    for (std::size_t i = 0; i < r; ++i) m -= rt[i] * rt[i];
    std::int64_t d = 1;
    for (std::size_t j = 0; j < c; ++j)
        if (ct[j] > 0) d *= ct[j];
    std::int64_t num = 0;
    for (std::size_t j = 0; j < c; ++j) {
        if (ct[j] == 0) continue;
        std::int64_t mj = ct[j] * ct[j];
        for (std::size_t i = 0; i < r; ++i) mj -= counts[i][j] * counts[i][j];
        num += mj * (d / ct[j]);
    }
    return static_cast<double>(m * d - n * num) / static_cast<double>(m * d);
}

}  // namespace

TEST_CASE("dcor of identical variables is one") {
    Rng rng(3);
    std::vector<double> x(200);
    for (double& v : x) v = rng.normal();
    CHECK(distance_correlation(x, x) == Approx(1.0).margin(1e-9));
}

TEST_CASE("dcor is symmetric") {
    Rng rng(5);
    std::vector<double> x(150), y(150);
    for (std::size_t i = 0; i < 150; ++i) {
        x[i] = rng.uniform(-1.0, 1.0);
        y[i] = x[i] * x[i] + 0.1 * rng.normal();
    }
    CHECK(distance_correlation(x, y) == Approx(distance_correlation(y, x)).margin(1e-12));
}

TEST_CASE("dcor of independent samples stays small") {
    Rng rng(7);
    std::vector<double> x(1000), y(1000);
    for (std::size_t i = 0; i < 1000; ++i) {
        x[i] = rng.uniform(-1.0, 1.0);
        y[i] = rng.uniform(-1.0, 1.0);
    }
    CHECK(distance_correlation(x, y) <= 0.15);
}

TEST_CASE("dcor returns zero when a distance variance vanishes") {
    std::vector<double> x(10, 3.0), y{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    CHECK(distance_correlation(x, y) == 0.0);
}

TEST_CASE("dcor matches the bivariate normal closed form") {
    for (double rho : {0.3, 0.6, 0.9}) {
        Rng rng(100 + static_cast<std::uint64_t>(rho * 10));
        double tail = std::sqrt(1.0 - rho * rho);
        std::vector<double> x(2000), y(2000);
        for (std::size_t i = 0; i < 2000; ++i) {
            double z1 = rng.normal(), z2 = rng.normal();
            x[i] = z1;
            y[i] = rho * z1 + tail * z2;
        }
        CHECK(distance_correlation(x, y) == Approx(normal_dcor(rho)).margin(0.04));
    }
}

TEST_CASE("dcor input validation") {
    CHECK_THROWS_WITH(distance_correlation({}, {}), ContainsSubstring("empty sample"));
    CHECK_THROWS_WITH(distance_correlation({1.0}, {1.0, 2.0}),
                      ContainsSubstring("length mismatch"));
}

TEST_CASE("goodman-kruskal tau on the reference table") {
    ContingencyTable t = appendix_table();
    CHECK(goodman_kruskal_tau(t, TauDirection::rows_given_columns) == Approx(1.0).margin(1e-12));
    CHECK(goodman_kruskal_tau(t, TauDirection::columns_given_rows) == Approx(0.5).margin(1e-12));
}

TEST_CASE("tau vanishes on independent tables") {
    std::vector<double> rows{2, 4, 6};
    std::vector<double> cols{3, 9};
    double n = 12.0;
    ContingencyTable t;
    t.counts.assign(rows.size(), std::vector<double>(cols.size(), 0.0));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) t.counts[i][j] = rows[i] * cols[j] / n;
    CHECK(goodman_kruskal_tau(t, TauDirection::rows_given_columns) == Approx(0.0).margin(1e-12));
    CHECK(goodman_kruskal_tau(t, TauDirection::columns_given_rows) == Approx(0.0).margin(1e-12));
}

TEST_CASE("tau matches exact integer arithmetic on random small tables") {
    Rng rng(53);
    int checked = 0;
    while (checked < 100) {
        std::size_t r = 2 + rng.uniform_index(3);
        std::size_t c = 2 + rng.uniform_index(3);
        std::size_t n = 2 + rng.uniform_index(11);
        std::vector<std::vector<std::int64_t>> counts(r, std::vector<std::int64_t>(c, 0));
        for (std::size_t b = 0; b < n; ++b)
            ++counts[rng.uniform_index(r)][rng.uniform_index(c)];

        std::vector<std::int64_t> rt(r, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) rt[i] += counts[i][j];
        std::size_t nonzero_rows = 0;
        for (std::int64_t v : rt)
            if (v > 0) ++nonzero_rows;

        ContingencyTable t;
        t.counts.assign(r, std::vector<double>(c, 0.0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) t.counts[i][j] = static_cast<double>(counts[i][j]);

        if (nonzero_rows < 2) {
            CHECK_THROWS_WITH(goodman_kruskal_tau(t, TauDirection::rows_given_columns),
                              ContainsSubstring("no prediction error to reduce"));
            continue;
        }
        double got = goodman_kruskal_tau(t, TauDirection::rows_given_columns);
        double want = tau_exact_rows_given_columns(counts);
        INFO("r=" << r << " c=" << c << " n=" << n);
        CHECK(got == Approx(std::clamp(want, 0.0, 1.0)).margin(1e-12));
        ++checked;
    }
}

TEST_CASE("tau rejects invalid tables") {
    CHECK_THROWS_AS(goodman_kruskal_tau(ContingencyTable{{{1, 2}}},
                                        TauDirection::rows_given_columns),
                    std::invalid_argument);
    CHECK_THROWS_AS(goodman_kruskal_tau(ContingencyTable{{{1, -2}, {3, 4}}},
                                        TauDirection::rows_given_columns),
                    std::invalid_argument);
    CHECK_THROWS_WITH(goodman_kruskal_tau(ContingencyTable{{{1, 2}, {3}}},
                                          TauDirection::columns_given_rows),
                      ContainsSubstring("ragged table"));
}

TEST_CASE("noiseless quadratic has small pearson at scale") {
    Rng rng(61);
    std::vector<double> x(1000), y(1000);
    for (std::size_t i = 0; i < 1000; ++i) {
        x[i] = rng.uniform(-1.0, 1.0);
        y[i] = x[i] * x[i];
    }
    CHECK(std::abs(pearson(x, y)) <= 0.1);
    CHECK(distance_correlation(x, y) > 0.3);  // dependence the linear measure misses
}
