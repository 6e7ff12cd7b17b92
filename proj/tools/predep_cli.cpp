// Command-line front end: single-pair computation, all-pairs matrix sweep,
// synthetic data generation, and the benchmark runner.
//
// Exit codes: 0 success, 1 input error, 2 all requested pairs failed.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <predep/predep.hpp>

namespace {

struct Overlap {
    std::vector<double> x;
    std::vector<double> y;
};

Overlap overlapping_rows(const predep::ColumnTable& table, const std::string& xcol,
                         const std::string& ycol) {
    const auto& cx = table.columns[table.column_index(xcol)];
    const auto& cy = table.columns[table.column_index(ycol)];
    Overlap o;
    for (std::size_t r = 0; r < cx.size(); ++r) {
        if (cx[r] && cy[r]) {
            o.x.push_back(*cx[r]);
            o.y.push_back(*cy[r]);
        }
    }
    return o;
}

const char* direction_name(predep::Direction d) {
    return d == predep::Direction::Y_given_X ? "y_given_x" : "x_given_y";
}

void print_result_text(const predep::PredepResult& r) {
    std::printf("direction=%s alpha=%s alpha_raw=%s s_marginal=%s s_conditional=%s",
                direction_name(r.direction), predep::detail::format_g6(r.alpha).c_str(),
                predep::detail::format_g6(r.alpha_raw).c_str(),
                predep::detail::format_g6(r.s_marginal).c_str(),
                predep::detail::format_g6(r.s_conditional).c_str());
    if (r.ci)
        std::printf(" ci_lo=%s ci_hi=%s", predep::detail::format_g6(r.ci->first).c_str(),
                    predep::detail::format_g6(r.ci->second).c_str());
    std::printf(" degenerate_bins=%zu seed=%llu\n", r.degenerate_bins,
                static_cast<unsigned long long>(r.seed));
}

void print_result_json(const std::vector<predep::PredepResult>& results) {
    std::printf("[");
    for (std::size_t i = 0; i < results.size(); ++i) {
        const predep::PredepResult& r = results[i];
        std::printf("%s\n  {\"direction\": \"%s\", \"alpha\": %s, \"alpha_raw\": %s, "
                    "\"s_marginal\": %s, \"s_conditional\": %s, \"ci_lo\": %s, \"ci_hi\": %s, "
                    "\"degenerate_bins\": %zu, \"seed\": %llu}",
                    i == 0 ? "" : ",", direction_name(r.direction),
                    predep::detail::format_g6(r.alpha).c_str(),
                    predep::detail::format_g6(r.alpha_raw).c_str(),
                    predep::detail::format_g6(r.s_marginal).c_str(),
                    predep::detail::format_g6(r.s_conditional).c_str(),
                    r.ci ? predep::detail::format_g6(r.ci->first).c_str() : "null",
                    r.ci ? predep::detail::format_g6(r.ci->second).c_str() : "null",
                    r.degenerate_bins, static_cast<unsigned long long>(r.seed));
    }
    std::printf("%s]\n", results.empty() ? "" : "\n");
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = predep::detail::trim_spaces(
            s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (!tok.empty()) out.push_back(tok);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int run_compute(const std::string& input, const std::string& xcol, const std::string& ycol,
                bool both, std::uint64_t seed, std::size_t ci, bool json) {
    predep::ColumnTable table = predep::load_csv(input);
    Overlap o = overlapping_rows(table, xcol, ycol);

    predep::PredepConfig base;
    base.seed = seed;
    base.ci_resamples = ci;

    std::vector<predep::PredepResult> results;
    if (both) {
        // same seed tree as predep_both, with an interval per direction
        predep::PredepConfig c1 = base;
        c1.seed = predep::child_seed(seed, 1);
        predep::PredepResult yx = predep::predep(o.x, o.y, c1);
        if (ci > 0) yx.ci = predep::predep_ci(o.x, o.y, c1);
        results.push_back(yx);

        predep::PredepConfig c2 = base;
        c2.seed = predep::child_seed(seed, 2);
        predep::PredepResult xy = predep::predep(o.y, o.x, c2);
        xy.direction = predep::Direction::X_given_Y;
        if (ci > 0) xy.ci = predep::predep_ci(o.y, o.x, c2);
        results.push_back(xy);
    } else {
        predep::PredepResult r = predep::predep(o.x, o.y, base);
        if (ci > 0) r.ci = predep::predep_ci(o.x, o.y, base);
        results.push_back(r);
    }

    if (json) print_result_json(results);
    else
        for (const predep::PredepResult& r : results) print_result_text(r);
    return 0;
}

int run_matrix(const std::string& input, std::size_t min_overlap, const std::string& measures,
               std::uint64_t seed, std::size_t threads, const std::string& out) {
    predep::ColumnTable table = predep::load_csv(input);
    predep::SweepConfig cfg;
    cfg.min_overlap = min_overlap;
    cfg.measures = predep::parse_measures(measures);
    cfg.seed = seed;
    cfg.threads = threads;

    predep::SweepResult result = predep::pairwise_sweep(table, cfg);

    bool json = out.size() >= 5 && out.substr(out.size() - 5) == ".json";
    predep::emit_report(result.reports, json ? predep::ReportFormat::json : predep::ReportFormat::csv,
                        out);

    std::fprintf(stderr, "matrix: %zu pairs reported, %zu skipped -> %s\n", result.reports.size(),
                 result.skipped.size(), out.c_str());
    std::size_t shown = 0;
    for (const predep::SkippedPair& s : result.skipped) {
        if (shown++ >= 20) {
            std::fprintf(stderr, "  ... %zu more skipped\n", result.skipped.size() - 20);
            break;
        }
        std::fprintf(stderr, "  skipped %s,%s: %s\n", s.column_a.c_str(), s.column_b.c_str(),
                     s.reason.c_str());
    }
    if (result.reports.empty() && !result.skipped.empty()) return 2;
    return 0;
}

int run_synth(const std::string& model_name, std::size_t n, double delta,
              std::optional<double> theta, std::uint64_t seed, const std::string& out) {
    if (model_name == "clayton") {
        if (!theta) throw std::invalid_argument("clayton requires --theta");
        predep::PairedSample s = predep::clayton_sample(*theta, n, predep::child_seed(seed, 2));
        predep::write_paired_sample_csv(s.x, s.y, nullptr, out);
        std::fprintf(stderr, "synth: clayton theta=%s n=%zu -> %s\n",
                     predep::detail::format_g6(*theta).c_str(), n, out.c_str());
        return 0;
    }
    if (theta) throw std::invalid_argument("--theta only applies to the clayton model");

    predep::ModelKind kind;
    try {
        kind = predep::model_kind_from_name(model_name);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(
            "unknown model: " + model_name +
            " (valid: linear, logarithmic, cubic, quadratic, sinusoidal, piecewise, cross, "
            "circular, two_circles, checkerboard, annulus, clayton)");
    }
    predep::RelationshipModel model{kind, {}};
    if (predep::is_functional(kind)) {
        model = predep::draw_model(kind, predep::child_seed(seed, 1));
        std::string coeffs;
        for (double c : model.coefficients) {
            if (!coeffs.empty()) coeffs += ' ';
            coeffs += predep::detail::format_g6(c);
        }
        std::fprintf(stderr, "synth: %s coefficients: %s\n", model_name.c_str(), coeffs.c_str());
    }
    predep::PairedSample s = predep::generate(model, n, delta, predep::child_seed(seed, 2));
    const std::vector<double>* clean = s.y_clean ? &*s.y_clean : nullptr;
    predep::write_paired_sample_csv(s.x, s.y, clean, out);
    std::fprintf(stderr, "synth: %s n=%zu delta=%s -> %s\n", model_name.c_str(), n,
                 predep::detail::format_g6(delta).c_str(), out.c_str());
    return 0;
}

int run_bench(const std::string& models, std::size_t noise_levels, std::size_t seeds,
              std::size_t n, std::uint64_t seed, std::size_t threads,
              const std::string& theta_grid, const std::string& out) {
    predep::BenchConfig cfg;
    cfg.models = split_list(models);
    cfg.noise_levels = noise_levels;
    cfg.seeds = seeds;
    cfg.n = n;
    cfg.seed = seed;
    cfg.threads = threads;
    if (!theta_grid.empty()) {
        cfg.theta_grid.clear();
        for (const std::string& tok : split_list(theta_grid)) {
            char* end = nullptr;
            double v = std::strtod(tok.c_str(), &end);
            if (end != tok.c_str() + tok.size())
                throw std::invalid_argument("cannot parse theta value: " + tok);
            cfg.theta_grid.push_back(v);
        }
    }
    predep::bench_run(cfg, out);
    std::fprintf(stderr, "bench: %zu models -> %s\n", cfg.models.size(), out.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Predictive dependence (PREDEP) toolkit"};
    app.require_subcommand(1);

    // compute
    std::string c_input, c_x, c_y;
    bool c_both = false, c_json = false;
    std::uint64_t c_seed = 0;
    std::size_t c_ci = 0;
    CLI::App* compute = app.add_subcommand("compute", "PREDEP for one column pair");
    compute->add_option("--input", c_input, "input CSV file")->required();
    compute->add_option("--x", c_x, "conditioning column name")->required();
    compute->add_option("--y", c_y, "predicted column name")->required();
    compute->add_flag("--both", c_both, "also compute the swapped direction");
    compute->add_option("--seed", c_seed, "master seed (default 0)");
    compute->add_option("--ci", c_ci, "bootstrap interval resamples (default 0: no interval)");
    compute->add_flag("--json", c_json, "JSON output");

    // matrix
    std::string m_input, m_out, m_measures = "predep,pearson,spearman,dcor";
    std::size_t m_min_overlap = 50, m_threads = 1;
    std::uint64_t m_seed = 0;
    CLI::App* matrix = app.add_subcommand("matrix", "all-pairs sweep over a CSV table");
    matrix->add_option("--input", m_input, "input CSV file")->required();
    matrix->add_option("--min-overlap", m_min_overlap, "minimum overlapping rows (default 50)");
    matrix->add_option("--measures", m_measures,
                       "comma list of predep,pearson,spearman,dcor (default all)");
    matrix->add_option("--seed", m_seed, "master seed (default 0)");
    matrix->add_option("--threads", m_threads, "worker threads (default 1)");
    matrix->add_option("--out", m_out, "output file; .json extension selects JSON")->required();

    // synth
    std::string s_model, s_out;
    std::size_t s_n = 0;
    double s_delta = 0.0, s_theta_val = 0.0;
    std::uint64_t s_seed = 0;
    CLI::App* synth = app.add_subcommand("synth", "generate a synthetic dataset");
    synth->add_option("--model", s_model, "model name")->required();
    synth->add_option("--n", s_n, "sample size")->required();
    synth->add_option("--delta", s_delta, "noise half-width (default 0)");
    CLI::Option* theta_opt =
        synth->add_option("--theta", s_theta_val, "copula parameter (clayton only)");
    synth->add_option("--seed", s_seed, "master seed (default 0)");
    synth->add_option("--out", s_out, "output CSV file")->required();

    // bench
    std::string b_models, b_out, b_theta_grid;
    std::size_t b_noise = 20, b_seeds = 5, b_n = 1000, b_threads = 1;
    std::uint64_t b_seed = 0;
    CLI::App* bench = app.add_subcommand("bench", "benchmark curves as long-format CSV");
    bench->add_option("--models", b_models, "comma list of model names")->required();
    bench->add_option("--noise-levels", b_noise, "noise grid size over [0, 0.9] (default 20)");
    bench->add_option("--seeds", b_seeds, "replicates per cell (default 5)");
    bench->add_option("--n", b_n, "sample size per dataset (default 1000)");
    bench->add_option("--seed", b_seed, "master seed (default 0)");
    bench->add_option("--threads", b_threads, "worker threads (default 1)");
    bench->add_option("--theta-grid", b_theta_grid,
                      "comma list of clayton thetas (default -0.9,-0.5,0.5,2,8)");
    bench->add_option("--out", b_out, "output CSV file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (compute->parsed()) return run_compute(c_input, c_x, c_y, c_both, c_seed, c_ci, c_json);
        if (matrix->parsed())
            return run_matrix(m_input, m_min_overlap, m_measures, m_seed, m_threads, m_out);
        if (synth->parsed()) {
            std::optional<double> theta;
            if (theta_opt->count() > 0) theta = s_theta_val;
            return run_synth(s_model, s_n, s_delta, theta, s_seed, s_out);
        }
        if (bench->parsed())
            return run_bench(b_models, b_noise, b_seeds, b_n, b_seed, b_threads, b_theta_grid,
                             b_out);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
