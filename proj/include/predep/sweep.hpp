#pragma once

// All-pairs sweep over a column table and the benchmark runner. Both
// parallelize over independent jobs with per-job derived seeds; output
// ordering and content are fixed regardless of thread count.

#include <atomic>
#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "comparators.hpp"
#include "csv.hpp"
#include "estimator.hpp"
#include "stats.hpp"
#include "synth.hpp"

namespace predep {

struct MeasureSet {
    bool pearson = true;
    bool spearman = true;
    bool dcor = true;
};

// Accepts a comma-separated subset of {predep, pearson, spearman, dcor};
// predep is always computed and listing it is a no-op.
inline MeasureSet parse_measures(const std::string& list) {
    MeasureSet m{false, false, false};
    std::size_t pos = 0;
    while (pos <= list.size()) {
        std::size_t comma = list.find(',', pos);
        std::string tok = detail::trim_spaces(
            list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (tok == "pearson") m.pearson = true;
        else if (tok == "spearman") m.spearman = true;
        else if (tok == "dcor") m.dcor = true;
        else if (tok != "predep" && !tok.empty())
            throw std::invalid_argument(
                "unknown measure: " + tok + " (valid: predep, pearson, spearman, dcor)");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return m;
}

struct SweepConfig {
    std::size_t min_overlap = 50;
    MeasureSet measures;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    std::size_t ci_resamples = 0;  // 0 leaves the interval columns empty
    double ci_level = 0.95;
};

struct PairReport {
    std::string column_a;
    std::string column_b;
    std::size_t overlap_n = 0;
    PredepResult predep;  // direction Y_given_X: predicts b from a
    std::optional<double> pearson;
    std::optional<double> spearman;
    std::optional<double> dcor;
    std::uint64_t seed = 0;
};

struct SkippedPair {
    std::string column_a;
    std::string column_b;
    std::string reason;
};

struct SweepResult {
    std::vector<PairReport> reports;
    std::vector<SkippedPair> skipped;
};

namespace detail {

// runs fn(j) for j in [0, count) across `threads` workers
template <typename Fn>
inline void parallel_for_jobs(std::size_t count, std::size_t threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t j = 0; j < count; ++j) fn(j);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t j = next.fetch_add(1);
            if (j >= count) return;
            fn(j);
        }
    };
    std::vector<std::thread> pool;
    std::size_t spawn = std::min(threads, count);
    pool.reserve(spawn);
    for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
}

}  // namespace detail

inline SweepResult pairwise_sweep(const ColumnTable& table, const SweepConfig& config) {
    if (config.min_overlap < 4) throw std::invalid_argument("min_overlap must be at least 4");

    // ordered pairs, lexicographic by column name
    std::vector<std::size_t> order(table.column_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return table.names[a] < table.names[b];
    });
    struct Job {
        std::size_t a, b;
    };
    std::vector<Job> jobs;
    for (std::size_t a : order)
        for (std::size_t b : order)
            if (a != b) jobs.push_back({a, b});

    struct Slot {
        bool ok = false;
        PairReport report;
        SkippedPair skip;
    };
    std::vector<Slot> slots(jobs.size());

    detail::parallel_for_jobs(jobs.size(), config.threads, [&](std::size_t j) {
        const Job& job = jobs[j];
        Slot& slot = slots[j];
        const std::string& na = table.names[job.a];
        const std::string& nb = table.names[job.b];

        std::vector<double> xa, yb;
        const auto& ca = table.columns[job.a];
        const auto& cb = table.columns[job.b];
        for (std::size_t r = 0; r < ca.size(); ++r) {
            if (ca[r] && cb[r]) {
                xa.push_back(*ca[r]);
                yb.push_back(*cb[r]);
            }
        }
        if (xa.size() < config.min_overlap) {
            slot.skip = {na, nb, "insufficient overlap"};
            return;
        }

        std::uint64_t pair_seed = label_seed(config.seed, na + '\x1f' + nb);
        PredepConfig pc;
        pc.seed = pair_seed;
        pc.ci_resamples = config.ci_resamples;
        pc.ci_level = config.ci_level;
        try {
            PairReport rep;
            rep.column_a = na;
            rep.column_b = nb;
            rep.overlap_n = xa.size();
            rep.seed = pair_seed;
            rep.predep = predep(xa, yb, pc);
            if (config.ci_resamples > 0) rep.predep.ci = predep_ci(xa, yb, pc);
            if (config.measures.pearson) rep.pearson = pearson(xa, yb);
            if (config.measures.spearman) rep.spearman = spearman(xa, yb);
            if (config.measures.dcor) rep.dcor = distance_correlation(xa, yb);
            slot.report = std::move(rep);
            slot.ok = true;
        } catch (const std::invalid_argument& e) {
            slot.skip = {na, nb, e.what()};
        }
    });

    SweepResult out;
    for (Slot& s : slots) {
        if (s.ok) out.reports.push_back(std::move(s.report));
        else out.skipped.push_back(std::move(s.skip));
    }
    return out;
}

enum class ReportFormat { csv, json };

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline std::string opt_g6(const std::optional<double>& v, const char* absent) {
    return v ? format_g6(*v) : std::string(absent);
}

}  // namespace detail

// Fixed 14-column schema; floats carry 6 significant digits; absent values
// are empty fields in CSV and null in JSON.
inline void emit_report(const std::vector<PairReport>& reports, ReportFormat format,
                        const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);

    auto ci_lo = [](const PairReport& r) -> std::optional<double> {
        if (r.predep.ci) return r.predep.ci->first;
        return std::nullopt;
    };
    auto ci_hi = [](const PairReport& r) -> std::optional<double> {
        if (r.predep.ci) return r.predep.ci->second;
        return std::nullopt;
    };

    if (format == ReportFormat::csv) {
        out << "column_a,column_b,overlap_n,predep_alpha,predep_alpha_raw,s_marginal,"
               "s_conditional,ci_lo,ci_hi,pearson,spearman,dcor,degenerate_bins,seed\n";
        for (const PairReport& r : reports) {
            out << detail::csv_escape(r.column_a) << ',' << detail::csv_escape(r.column_b) << ','
                << r.overlap_n << ',' << detail::format_g6(r.predep.alpha) << ','
                << detail::format_g6(r.predep.alpha_raw) << ','
                << detail::format_g6(r.predep.s_marginal) << ','
                << detail::format_g6(r.predep.s_conditional) << ','
                << detail::opt_g6(ci_lo(r), "") << ',' << detail::opt_g6(ci_hi(r), "") << ','
                << detail::opt_g6(r.pearson, "") << ',' << detail::opt_g6(r.spearman, "") << ','
                << detail::opt_g6(r.dcor, "") << ',' << r.predep.degenerate_bins << ',' << r.seed
                << '\n';
        }
    } else {
        out << "[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const PairReport& r = reports[i];
            out << (i == 0 ? "\n" : ",\n");
            out << "  {\"column_a\": \"" << detail::json_escape(r.column_a)
                << "\", \"column_b\": \"" << detail::json_escape(r.column_b)
                << "\", \"overlap_n\": " << r.overlap_n
                << ", \"predep_alpha\": " << detail::format_g6(r.predep.alpha)
                << ", \"predep_alpha_raw\": " << detail::format_g6(r.predep.alpha_raw)
                << ", \"s_marginal\": " << detail::format_g6(r.predep.s_marginal)
                << ", \"s_conditional\": " << detail::format_g6(r.predep.s_conditional)
                << ", \"ci_lo\": " << detail::opt_g6(ci_lo(r), "null")
                << ", \"ci_hi\": " << detail::opt_g6(ci_hi(r), "null")
                << ", \"pearson\": " << detail::opt_g6(r.pearson, "null")
                << ", \"spearman\": " << detail::opt_g6(r.spearman, "null")
                << ", \"dcor\": " << detail::opt_g6(r.dcor, "null")
                << ", \"degenerate_bins\": " << r.predep.degenerate_bins
                << ", \"seed\": " << r.seed << "}";
        }
        out << (reports.empty() ? "]\n" : "\n]\n");
    }
    if (!out) throw std::runtime_error("cannot write file: " + path);
}

struct BenchConfig {
    std::vector<std::string> models;  // model kind names; "clayton" runs the copula experiment
    std::size_t noise_levels = 20;    // grid over [0, 0.9] in 1 - r^2 target units
    std::size_t seeds = 5;
    std::size_t n = 1000;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    std::vector<double> theta_grid = {-0.9, -0.5, 0.5, 2.0, 8.0};
};

// Long-format benchmark CSV: model, noise_level, measure, value, seed. Rows
// per cell: predep, pearson, spearman, dcor, and (except the copula)
// noise_realized = 1 - r^2 between clean and noisy y. The copula rows carry
// theta in the noise_level column.
inline void bench_run(const BenchConfig& config, const std::string& out_path) {
    if (config.models.empty()) throw std::invalid_argument("no models requested");
    if (config.n < 4) throw std::invalid_argument("insufficient data");
    if (config.seeds < 1) throw std::invalid_argument("seeds must be positive");
    if (config.noise_levels < 1) throw std::invalid_argument("noise grid must be nonempty");

    struct Cell {
        std::string model;
        bool clayton = false;
        ModelKind kind = ModelKind::linear;
        double level = 0.0;  // noise target eta, or theta for the copula
        std::size_t level_index = 0;
        std::size_t rep = 0;
    };
    std::vector<Cell> cells;
    for (const std::string& name : config.models) {
        Cell base;
        base.model = name;
        if (name == "clayton") {
            base.clayton = true;
            for (std::size_t li = 0; li < config.theta_grid.size(); ++li)
                for (std::size_t r = 0; r < config.seeds; ++r) {
                    Cell c = base;
                    c.level = config.theta_grid[li];
                    c.level_index = li;
                    c.rep = r;
                    cells.push_back(c);
                }
            continue;
        }
        try {
            base.kind = model_kind_from_name(name);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument(
                "unknown model: " + name +
                " (valid: linear, logarithmic, cubic, quadratic, sinusoidal, piecewise, cross, "
                "circular, two_circles, checkerboard, annulus, clayton)");
        }
        for (std::size_t li = 0; li < config.noise_levels; ++li) {
            double eta = config.noise_levels == 1
                             ? 0.0
                             : 0.9 * static_cast<double>(li) /
                                   static_cast<double>(config.noise_levels - 1);
            for (std::size_t r = 0; r < config.seeds; ++r) {
                Cell c = base;
                c.level = eta;
                c.level_index = li;
                c.rep = r;
                cells.push_back(c);
            }
        }
    }

    std::vector<std::string> chunks(cells.size());
    detail::parallel_for_jobs(cells.size(), config.threads, [&](std::size_t ci) {
        const Cell& cell = cells[ci];
        std::string label = cell.model + ';' + std::to_string(cell.level_index) + ';' +
                            std::to_string(cell.rep);
        std::uint64_t cell_seed = label_seed(config.seed, label);

        PairedSample data;
        std::optional<double> realized;
        if (cell.clayton) {
            data = clayton_sample(cell.level, config.n, child_seed(cell_seed, 2));
        } else {
            RelationshipModel model{cell.kind, {}};
            if (is_functional(cell.kind)) model = draw_model(cell.kind, child_seed(cell_seed, 1));
            data = generate(model, config.n, 0.0, child_seed(cell_seed, 2));
            if (cell.level > 0.0) {
                double var_clean = sample_variance(*data.y_clean);
                if (var_clean > 0.0) {
                    double delta = delta_for_target_noise(var_clean, cell.level);
                    data = generate(model, config.n, delta, child_seed(cell_seed, 2));
                }
            }
            try {
                realized = noise_level(*data.y_clean, data.y);
            } catch (const std::invalid_argument&) {
                // constant clean signal; no realized-noise row
            }
        }

        std::string rows;
        auto emit = [&](const char* measure, double value) {
            rows += cell.model;
            rows += ',';
            rows += detail::format_g6(cell.level);
            rows += ',';
            rows += measure;
            rows += ',';
            rows += detail::format_g6(value);
            rows += ',';
            rows += std::to_string(cell_seed);
            rows += '\n';
        };
        PredepConfig pc;
        pc.seed = child_seed(cell_seed, 3);
        pc.ci_resamples = 0;
        try {
            emit("predep", predep(data.x, data.y, pc).alpha);
        } catch (const std::invalid_argument&) {
        }
        try {
            emit("pearson", pearson(data.x, data.y));
        } catch (const std::invalid_argument&) {
        }
        try {
            emit("spearman", spearman(data.x, data.y));
        } catch (const std::invalid_argument&) {
        }
        try {
            emit("dcor", distance_correlation(data.x, data.y));
        } catch (const std::invalid_argument&) {
        }
        if (realized) emit("noise_realized", *realized);
        chunks[ci] = std::move(rows);
    });

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + out_path);
    out << "model,noise_level,measure,value,seed\n";
    for (const std::string& chunk : chunks) out << chunk;
    if (!out) throw std::runtime_error("cannot write file: " + out_path);
}

}  // namespace predep
