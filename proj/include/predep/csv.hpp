#pragma once

// CSV ingestion and small formatting helpers. Dialect: comma-separated,
// UTF-8, LF (CR tolerated on input), mandatory header row, double-quote
// escaping, no embedded newlines.

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace predep {

struct ColumnTable {
    std::vector<std::string> names;
    std::vector<std::vector<std::optional<double>>> columns;

    std::size_t column_count() const { return names.size(); }
    std::size_t row_count() const { return columns.empty() ? 0 : columns.front().size(); }

    std::size_t column_index(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return i;
        throw std::invalid_argument("no such column: " + name);
    }
};

struct CsvLoadOptions {
    // tokens (after trimming surrounding spaces) treated as missing cells
    std::vector<std::string> missing_tokens = {"", "NA", "NaN"};
};

namespace detail {

inline std::string trim_spaces(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
    return s.substr(b, e - b);
}

inline std::vector<std::string> split_csv_record(const std::string& line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    std::size_t i = 0;
    for (;;) {
        if (quoted) {
            if (i >= line.size())
                throw std::runtime_error("line " + std::to_string(line_no) +
                                         ": unterminated quoted field");
            char c = line[i++];
            if (c == '"') {
                if (i < line.size() && line[i] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else {
            if (i >= line.size()) {
                fields.push_back(cur);
                break;
            }
            char c = line[i++];
            if (c == '"' && cur.empty()) {
                quoted = true;
            } else if (c == ',') {
                fields.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
    }
    return fields;
}

inline std::string csv_escape(const std::string& s) {
    bool needs = false;
    for (char c : s)
        if (c == ',' || c == '"' || c == '\n' || c == '\r') needs = true;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

inline std::string format_double(double v, const char* fmt) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

inline std::string format_g6(double v) { return format_double(v, "%.6g"); }
inline std::string format_g17(double v) { return format_double(v, "%.17g"); }

}  // namespace detail

inline ColumnTable load_csv(const std::string& path, const CsvLoadOptions& options = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);

    auto next_line = [&](std::string& line) -> bool {
        if (!std::getline(in, line)) return false;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    };

    std::string line;
    if (!next_line(line)) throw std::runtime_error(path + ": empty file, header row required");
    if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF &&
        static_cast<unsigned char>(line[1]) == 0xBB && static_cast<unsigned char>(line[2]) == 0xBF)
        line.erase(0, 3);

    ColumnTable table;
    table.names = detail::split_csv_record(line, 1);
    for (std::string& n : table.names) n = detail::trim_spaces(n);
    for (std::size_t i = 0; i < table.names.size(); ++i)
        for (std::size_t j = i + 1; j < table.names.size(); ++j)
            if (table.names[i] == table.names[j])
                throw std::runtime_error(path + ": duplicate column name '" + table.names[i] +
                                         "'");
    table.columns.assign(table.names.size(), {});

    auto is_missing = [&](const std::string& tok) {
        for (const std::string& m : options.missing_tokens)
            if (tok == m) return true;
        return false;
    };

    std::size_t line_no = 1;
    while (next_line(line)) {
        ++line_no;
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
        std::vector<std::string> fields = detail::split_csv_record(line, line_no);
        if (fields.size() != table.names.size())
            throw std::runtime_error(path + ": line " + std::to_string(line_no) + ": expected " +
                                     std::to_string(table.names.size()) + " fields, got " +
                                     std::to_string(fields.size()));
        for (std::size_t c = 0; c < fields.size(); ++c) {
            std::string tok = detail::trim_spaces(fields[c]);
            if (is_missing(tok)) {
                table.columns[c].push_back(std::nullopt);
                continue;
            }
            const char* begin = tok.c_str();
            char* end = nullptr;
            double v = std::strtod(begin, &end);
            if (end != begin + tok.size() || !std::isfinite(v))
                throw std::runtime_error(path + ": line " + std::to_string(line_no) +
                                         ", column '" + table.names[c] +
                                         "': cannot parse numeric value '" + tok + "'");
            table.columns[c].push_back(v);
        }
    }
    return table;
}

// Two or three column data file for the synth subcommand; full precision so
// downstream runs reproduce values exactly.
inline void write_paired_sample_csv(const std::vector<double>& x, const std::vector<double>& y,
                                    const std::vector<double>* y_clean, const std::string& path) {
    if (x.size() != y.size() || (y_clean && y_clean->size() != x.size()))
        throw std::invalid_argument("length mismatch");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << (y_clean ? "x,y,y_clean\n" : "x,y\n");
    for (std::size_t i = 0; i < x.size(); ++i) {
        out << detail::format_g17(x[i]) << ',' << detail::format_g17(y[i]);
        if (y_clean) out << ',' << detail::format_g17((*y_clean)[i]);
        out << '\n';
    }
    if (!out) throw std::runtime_error("cannot write file: " + path);
}

}  // namespace predep
