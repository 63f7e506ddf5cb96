#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lfc/errors.hpp"
#include "lfc/grid.hpp"

namespace lfc {

// CSV written with fixed "%.17g" formatting so identical runs produce
// byte-identical files. Comment lines ("# key = value") carry the full
// configuration echo.
class CsvWriter {
public:
    explicit CsvWriter(std::string path) : path_(std::move(path)) {}

    void comment(const std::string& key, const std::string& value) {
        comments_.push_back("# " + key + " = " + value);
    }
    void comment(const std::string& line) { comments_.push_back("# " + line); }

    void columns(std::vector<std::string> names) { names_ = std::move(names); }

    void row(const std::vector<double>& vals) {
        std::string line;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", vals[i]);
            if (i) line += ',';
            line += buf;
        }
        rows_.push_back(std::move(line));
    }

    void write() const {
        std::ofstream out(path_);
        if (!out) throw io_error("cannot open '" + path_ + "' for writing");
        for (const auto& c : comments_) out << c << '\n';
        for (std::size_t i = 0; i < names_.size(); ++i) out << (i ? "," : "") << names_[i];
        out << '\n';
        for (const auto& r : rows_) out << r << '\n';
        if (!out) throw io_error("failed writing '" + path_ + "'");
    }

private:
    std::string path_;
    std::vector<std::string> comments_;
    std::vector<std::string> names_;
    std::vector<std::string> rows_;
};

struct CsvTable {
    std::vector<std::string> comments; // without the leading '#'
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::size_t column_index(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return i;
        throw io_error("CSV is missing required column '" + name + "'");
    }
};

inline CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "'");
    CsvTable t;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string c = line.substr(1);
            if (!c.empty() && c[0] == ' ') c.erase(0, 1);
            t.comments.push_back(c);
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        if (!header_seen) {
            while (std::getline(ss, cell, ',')) t.columns.push_back(cell);
            header_seen = true;
            continue;
        }
        std::vector<double> vals;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t pos = 0;
                vals.push_back(std::stod(cell, &pos));
                if (pos != cell.size()) throw io_error("trailing junk");
            } catch (const std::exception&) {
                throw io_error("unparsable CSV cell '" + cell + "' in " + path);
            }
        }
        if (vals.size() != t.columns.size())
            throw io_error("ragged CSV row in " + path);
        t.rows.push_back(std::move(vals));
    }
    if (!header_seen) throw io_error("CSV '" + path + "' has no header row");
    return t;
}

// Signal CSV: columns x, re, im (header required).
inline SampledSignal read_signal_csv(const std::string& path,
                                     SupportHint hint = SupportHint::interval) {
    const CsvTable t = read_csv(path);
    const std::size_t xi = t.column_index("x");
    const std::size_t ri = t.column_index("re");
    const std::size_t ii = t.column_index("im");
    if (t.rows.size() < 2) throw io_error("signal CSV '" + path + "' needs at least 2 samples");
    std::vector<double> xs;
    std::vector<complex> vs;
    for (const auto& r : t.rows) {
        xs.push_back(r[xi]);
        vs.emplace_back(r[ri], r[ii]);
    }
    return SampledSignal(Grid::from_points(std::move(xs)), std::move(vs), hint);
}

inline void write_signal_csv(const std::string& path, const SampledSignal& s,
                             const std::vector<std::pair<std::string, std::string>>& meta = {}) {
    CsvWriter w(path);
    for (const auto& [k, v] : meta) w.comment(k, v);
    w.columns({"x", "re", "im"});
    for (std::size_t i = 0; i < s.grid.size(); ++i)
        w.row({s.grid.points[i], s.values[i].real(), s.values[i].imag()});
    w.write();
}

} // namespace lfc
