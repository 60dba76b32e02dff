#include "mrenyi/dataset.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "mrenyi/discrete.hpp"

namespace mrenyi {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

std::string trimmed(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) {
        return false;
    }
    errno = 0;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size() && errno == 0;
}

Dataset load_csv_impl(const std::string& path, const std::string& label_name, int label_index,
                      bool by_name) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open CSV file: " + path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw InputError("CSV file is empty: " + path);
    }
    std::vector<std::string> header = split_line(line);
    for (auto& h : header) {
        h = trimmed(h);
    }
    const int ncols = static_cast<int>(header.size());
    if (ncols < 2) {
        throw InputError("CSV needs at least one feature column and a label column");
    }

    int label_col;
    if (by_name) {
        const auto it = std::find(header.begin(), header.end(), label_name);
        if (it == header.end()) {
            throw InputError("label column '" + label_name + "' not found in header");
        }
        label_col = static_cast<int>(it - header.begin());
    } else {
        label_col = label_index < 0 ? ncols + label_index : label_index;
        if (label_col < 0 || label_col >= ncols) {
            throw InputError("label column index " + std::to_string(label_index) +
                             " out of range for " + std::to_string(ncols) + " columns");
        }
    }

    std::vector<std::vector<double>> columns(static_cast<size_t>(ncols) - 1);
    std::vector<std::string> raw_labels;
    int row = 1; // header is line 1
    while (std::getline(in, line)) {
        ++row;
        if (trimmed(line).empty()) {
            continue;
        }
        std::vector<std::string> cells = split_line(line);
        if (static_cast<int>(cells.size()) != ncols) {
            throw InputError("row " + std::to_string(row) + " has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(ncols));
        }
        int fi = 0;
        for (int c = 0; c < ncols; ++c) {
            const std::string cell = trimmed(cells[static_cast<size_t>(c)]);
            if (c == label_col) {
                if (cell.empty()) {
                    throw InputError("missing label at row " + std::to_string(row) +
                                     ", column '" + header[static_cast<size_t>(c)] + "'");
                }
                raw_labels.push_back(cell);
                continue;
            }
            if (cell.empty()) {
                throw InputError("missing value at row " + std::to_string(row) + ", column '" +
                                 header[static_cast<size_t>(c)] + "'");
            }
            double v;
            if (!parse_double(cell, v) || !std::isfinite(v)) {
                throw InputError("non-numeric or non-finite value '" + cell + "' at row " +
                                 std::to_string(row) + ", column '" +
                                 header[static_cast<size_t>(c)] + "'");
            }
            columns[static_cast<size_t>(fi)].push_back(v);
            ++fi;
        }
    }

    const int n = static_cast<int>(raw_labels.size());
    if (n < 2) {
        throw InputError("CSV has " + std::to_string(n) + " data rows; need at least 2");
    }

    Dataset out;
    out.features.resize(n, ncols - 1);
    out.feature_names.reserve(static_cast<size_t>(ncols) - 1);
    for (int c = 0, fi = 0; c < ncols; ++c) {
        if (c == label_col) {
            continue;
        }
        out.feature_names.push_back(header[static_cast<size_t>(c)]);
        for (int i = 0; i < n; ++i) {
            out.features(i, fi) = columns[static_cast<size_t>(fi)][static_cast<size_t>(i)];
        }
        ++fi;
    }

    // Dense label codes: numeric labels sort numerically, otherwise lexically.
    bool all_numeric = true;
    std::vector<double> numeric(raw_labels.size());
    for (size_t i = 0; i < raw_labels.size(); ++i) {
        if (!parse_double(raw_labels[i], numeric[i])) {
            all_numeric = false;
            break;
        }
    }
    out.labels.resize(raw_labels.size());
    if (all_numeric) {
        std::map<double, int> codes;
        for (double v : numeric) {
            codes.emplace(v, 0);
        }
        int next = 0;
        for (auto& [value, code] : codes) {
            code = next++;
        }
        for (size_t i = 0; i < numeric.size(); ++i) {
            out.labels[i] = codes[numeric[i]];
        }
    } else {
        std::map<std::string, int> codes;
        for (const auto& s : raw_labels) {
            codes.emplace(s, 0);
        }
        int next = 0;
        for (auto& [value, code] : codes) {
            code = next++;
        }
        for (size_t i = 0; i < raw_labels.size(); ++i) {
            out.labels[i] = codes[raw_labels[i]];
        }
    }

    out.continuous_flags.resize(static_cast<size_t>(out.d()));
    for (int j = 0; j < out.d(); ++j) {
        const auto col = out.features.col(j);
        std::vector<double> values(col.data(), col.data() + col.size());
        out.continuous_flags[static_cast<size_t>(j)] = !detect_categorical(values, 5);
    }
    return out;
}

} // namespace

Dataset load_csv(const std::string& path, const std::string& label_column) {
    return load_csv_impl(path, label_column, 0, true);
}

Dataset load_csv(const std::string& path, int label_index) {
    return load_csv_impl(path, "", label_index, false);
}

void write_csv(const std::string& path, const Dataset& data, const std::string& label_name) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot open file for writing: " + path);
    }
    for (int j = 0; j < data.d(); ++j) {
        out << data.feature_names[static_cast<size_t>(j)] << ',';
    }
    out << label_name << '\n';
    char buf[64];
    for (int i = 0; i < data.n(); ++i) {
        for (int j = 0; j < data.d(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", data.features(i, j));
            out << buf << ',';
        }
        out << data.labels[static_cast<size_t>(i)] << '\n';
    }
    if (!out) {
        throw InputError("failed while writing CSV: " + path);
    }
}

} // namespace mrenyi
