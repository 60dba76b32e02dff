#pragma once

#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mrenyi/errors.hpp"

namespace mrenyi {

// Sample-by-feature matrix with a dense-coded label column.
struct Dataset {
    Eigen::MatrixXd features;               // n x d
    std::vector<int> labels;                // size n, codes 0..num_classes-1
    std::vector<std::string> feature_names; // size d
    std::vector<bool> continuous_flags;     // size d; false = categorical

    int n() const { return static_cast<int>(features.rows()); }
    int d() const { return static_cast<int>(features.cols()); }
    int num_classes() const {
        return labels.empty() ? 0 : static_cast<int>(std::set<int>(labels.begin(), labels.end()).size());
    }
};

// Parses a UTF-8 CSV with a header row, comma separators and unquoted
// numerics. Feature cells must be finite numbers; errors name the offending
// row and column. Label values are relabeled to dense codes. The label
// column is chosen by name, by 0-based index, or by negative index from the
// end (-1 = last).
Dataset load_csv(const std::string& path, const std::string& label_column);
Dataset load_csv(const std::string& path, int label_index);

// Writes features plus a final label column; partner to load_csv.
void write_csv(const std::string& path, const Dataset& data,
               const std::string& label_name = "label");

} // namespace mrenyi
