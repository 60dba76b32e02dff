#include "mrenyi/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace mrenyi {

namespace {

void check_nonempty(std::span<const double> column) {
    if (column.empty()) {
        throw InputError("column is empty");
    }
    for (double v : column) {
        if (!std::isfinite(v)) {
            throw InputError("column contains a non-finite value");
        }
    }
}

void check_lengths(const BinnedColumn& a, const BinnedColumn& b) {
    if (a.codes.size() != b.codes.size()) {
        throw InputError("binned columns have mismatched lengths (" +
                         std::to_string(a.codes.size()) + " vs " +
                         std::to_string(b.codes.size()) + ")");
    }
    if (a.codes.empty()) {
        throw InputError("binned column is empty");
    }
}

double entropy_of_counts(std::span<const int> counts, int total) {
    double h = 0.0;
    for (int c : counts) {
        if (c > 0) {
            const double p = static_cast<double>(c) / total;
            h -= p * std::log2(p);
        }
    }
    return h;
}

} // namespace

BinnedColumn equal_width_bin(std::span<const double> column, int bins) {
    if (bins < 1) {
        throw ParameterError("bin count must be >= 1, got " + std::to_string(bins));
    }
    check_nonempty(column);
    const auto [lo_it, hi_it] = std::minmax_element(column.begin(), column.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    BinnedColumn out;
    out.codes.resize(column.size(), 0);
    if (lo == hi) {
        out.m = 1;
        return out;
    }
    const double width = (hi - lo) / bins;
    for (size_t i = 0; i < column.size(); ++i) {
        int code = static_cast<int>(std::floor((column[i] - lo) / width));
        out.codes[i] = std::clamp(code, 0, bins - 1);
    }
    out.m = bins;
    return out;
}

bool detect_categorical(std::span<const double> column, int bins) {
    if (bins < 1) {
        throw ParameterError("bin count must be >= 1, got " + std::to_string(bins));
    }
    check_nonempty(column);
    std::set<double> distinct;
    for (double v : column) {
        if (v != std::floor(v)) {
            return false;
        }
        distinct.insert(v);
        if (static_cast<int>(distinct.size()) > bins) {
            return false;
        }
    }
    return true;
}

BinnedColumn relabel_categorical(std::span<const double> column) {
    check_nonempty(column);
    std::set<double> distinct(column.begin(), column.end());
    std::vector<double> levels(distinct.begin(), distinct.end());
    BinnedColumn out;
    out.codes.resize(column.size());
    for (size_t i = 0; i < column.size(); ++i) {
        const auto it = std::lower_bound(levels.begin(), levels.end(), column[i]);
        out.codes[i] = static_cast<int>(it - levels.begin());
    }
    out.m = static_cast<int>(levels.size());
    out.was_categorical = true;
    return out;
}

BinnedColumn discretize(std::span<const double> column, int bins) {
    if (detect_categorical(column, bins)) {
        return relabel_categorical(column);
    }
    return equal_width_bin(column, bins);
}

double shannon_entropy(const BinnedColumn& x) {
    if (x.codes.empty()) {
        throw InputError("binned column is empty");
    }
    std::vector<int> counts(static_cast<size_t>(x.m), 0);
    for (int c : x.codes) {
        ++counts[static_cast<size_t>(c)];
    }
    return entropy_of_counts(counts, static_cast<int>(x.codes.size()));
}

double shannon_mi(const BinnedColumn& x, const BinnedColumn& y) {
    check_lengths(x, y);
    const int n = static_cast<int>(x.codes.size());
    std::vector<int> joint(static_cast<size_t>(x.m) * y.m, 0);
    std::vector<int> cx(static_cast<size_t>(x.m), 0);
    std::vector<int> cy(static_cast<size_t>(y.m), 0);
    for (int i = 0; i < n; ++i) {
        ++joint[static_cast<size_t>(x.codes[i]) * y.m + y.codes[i]];
        ++cx[static_cast<size_t>(x.codes[i])];
        ++cy[static_cast<size_t>(y.codes[i])];
    }
    return entropy_of_counts(cx, n) + entropy_of_counts(cy, n) - entropy_of_counts(joint, n);
}

double shannon_conditional_mi(const BinnedColumn& x, const BinnedColumn& y,
                              const BinnedColumn& z) {
    check_lengths(x, y);
    check_lengths(x, z);
    const int n = static_cast<int>(x.codes.size());
    double total = 0.0;
    std::vector<int> sub_joint;
    std::vector<int> sub_x;
    std::vector<int> sub_y;
    for (int zc = 0; zc < z.m; ++zc) {
        sub_joint.assign(static_cast<size_t>(x.m) * y.m, 0);
        sub_x.assign(static_cast<size_t>(x.m), 0);
        sub_y.assign(static_cast<size_t>(y.m), 0);
        int nz = 0;
        for (int i = 0; i < n; ++i) {
            if (z.codes[i] != zc) {
                continue;
            }
            ++nz;
            ++sub_joint[static_cast<size_t>(x.codes[i]) * y.m + y.codes[i]];
            ++sub_x[static_cast<size_t>(x.codes[i])];
            ++sub_y[static_cast<size_t>(y.codes[i])];
        }
        if (nz == 0) {
            continue;
        }
        const double mi_z = entropy_of_counts(sub_x, nz) + entropy_of_counts(sub_y, nz) -
                            entropy_of_counts(sub_joint, nz);
        total += (static_cast<double>(nz) / n) * mi_z;
    }
    return total;
}

double shannon_pair_mi(const BinnedColumn& x1, const BinnedColumn& x2, const BinnedColumn& y) {
    check_lengths(x1, x2);
    check_lengths(x1, y);
    BinnedColumn paired;
    paired.m = x1.m * x2.m;
    paired.codes.resize(x1.codes.size());
    for (size_t i = 0; i < x1.codes.size(); ++i) {
        paired.codes[i] = x1.codes[i] * x2.m + x2.codes[i];
    }
    return shannon_mi(paired, y);
}

} // namespace mrenyi
