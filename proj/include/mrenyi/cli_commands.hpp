#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mrenyi/synth.hpp"

namespace mrenyi {

// Wiring shared by the CLI and the tests. Commands throw on bad input and
// write JSON/TSV/CSV outputs; an empty output path means stdout.
struct RunConfig {
    std::string dataset_path;
    std::string label_column = "-1"; // name, or integer index (negative = from end)
    std::vector<std::string> methods;
    std::vector<std::string> columns; // estimate: feature names or indices; empty = all
    double alpha = 1.01;
    std::string sigma_rule = "fixed"; // fixed | silverman | range-fraction
    double sigma = 1.0;               // bandwidth for fixed, fraction for range-fraction
    double mifs_beta = 1.0;
    int bins = 5;
    int k = 5; // selection count / max benchmark features
    std::string folds = "auto";       // auto | loo | 10
    std::string classifier = "knn3";  // knn3 | linsvm
    double svm_c = 1.0;
    std::uint64_t seed = 1;
    std::string output;
    std::uint64_t mem_budget = std::uint64_t{2} << 30;
    bool standardize = true;
    bool per_fold_selection = false;
    int threads = 0;
    std::string preset; // synth: madelon-desk | madelon-paper
    MadelonConfig synth;
};

int cmd_estimate(const RunConfig& config);
int cmd_select(const RunConfig& config);
int cmd_benchmark(const RunConfig& config);
int cmd_synth(const RunConfig& config);

} // namespace mrenyi
