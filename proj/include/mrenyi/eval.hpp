#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mrenyi/classify.hpp"
#include "mrenyi/dataset.hpp"
#include "mrenyi/selection.hpp"

namespace mrenyi {

enum class FoldsPolicy { Auto, LOO, TenFold };

// Auto: 10 stratified folds when n > 100, leave-one-out otherwise. Every
// sample lands in exactly one test fold; per-class fold sizes differ by at
// most one.
std::vector<std::vector<int>> cv_split(int n, std::span<const int> labels, std::uint64_t seed,
                                       FoldsPolicy policy = FoldsPolicy::Auto);

// Per feature count, rank methods by accuracy descending with midrank ties;
// returns the per-method average across feature counts.
std::vector<double> rank_methods(const std::vector<std::vector<double>>& accuracies);

// Critical difference q * sqrt(m (m + 1) / (6 N)) at significance 0.05 with
// the studentized-range constants for 2..10 methods embedded.
double nemenyi_cd(int num_methods, int num_datasets, double significance = 0.05);

enum class ClassifierKind { Knn3, LinearSvm };

struct BenchmarkConfig {
    std::vector<Criterion> methods;
    int max_features = 5;
    ClassifierKind classifier = ClassifierKind::Knn3;
    int knn_k = 3;
    double svm_c = 1.0;
    FoldsPolicy folds = FoldsPolicy::Auto;
    std::uint64_t seed = 1;
    // Reselect features inside each training fold instead of once up front.
    bool reselect_per_fold = false;
    SelectionOptions selection;
    std::string dataset_name = "dataset";
};

struct EvalReport {
    std::string dataset;
    std::vector<std::string> methods;
    std::vector<int> feature_counts;
    std::vector<std::vector<double>> accuracies; // methods x feature_counts, pooled OA
    std::vector<double> ranks;                   // per-method average rank
    std::optional<double> cd;                    // absent for a single method
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> config; // echoed settings
    std::vector<SelectionTrace> traces;                      // per method

    std::string to_json() const;
    std::string to_tsv() const;
};

// Selects up to max_features per method, then scores each selected prefix by
// pooled cross-validated accuracy of the configured classifier.
EvalReport run_benchmark(const Dataset& data, const BenchmarkConfig& config);

} // namespace mrenyi
