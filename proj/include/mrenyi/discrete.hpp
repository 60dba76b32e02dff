#pragma once

#include <span>
#include <vector>

#include "mrenyi/errors.hpp"

namespace mrenyi {

// A discretized feature: integer codes in [0, m).
struct BinnedColumn {
    std::vector<int> codes;
    int m = 1;
    bool was_categorical = false;
};

// Equal-width bins over [min, max]; bin i covers [min + i*w, min + (i+1)*w)
// with the maximum value mapped to the last bin. A constant column collapses
// to a single bin.
BinnedColumn equal_width_bin(std::span<const double> column, int bins);

// True iff all values are integers and the number of distinct values is at
// most `bins`.
bool detect_categorical(std::span<const double> column, int bins);

// Dense codes 0..m-1 assigned by ascending value order.
BinnedColumn relabel_categorical(std::span<const double> column);

// Categorical columns are relabeled; everything else is width-binned.
BinnedColumn discretize(std::span<const double> column, int bins);

// Plug-in estimators in bits, 0 log 0 := 0.
double shannon_entropy(const BinnedColumn& x);
double shannon_mi(const BinnedColumn& x, const BinnedColumn& y);

// sum_z p(z) * MI(x|z ; y|z).
double shannon_conditional_mi(const BinnedColumn& x, const BinnedColumn& y,
                              const BinnedColumn& z);

// MI between the paired code (x1, x2) over the product alphabet and y.
double shannon_pair_mi(const BinnedColumn& x1, const BinnedColumn& x2, const BinnedColumn& y);

} // namespace mrenyi
