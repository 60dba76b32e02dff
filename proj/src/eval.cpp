#include "mrenyi/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace mrenyi {

std::vector<std::vector<int>> cv_split(int n, std::span<const int> labels, std::uint64_t seed,
                                       FoldsPolicy policy) {
    if (n < 2 || static_cast<int>(labels.size()) != n) {
        throw InputError("cv_split: need n >= 2 with one label per sample");
    }
    const bool loo = policy == FoldsPolicy::LOO || (policy == FoldsPolicy::Auto && n <= 100);
    if (loo) {
        std::vector<std::vector<int>> folds(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            folds[static_cast<size_t>(i)] = {i};
        }
        return folds;
    }

    const int num_folds = 10;
    std::vector<std::vector<int>> folds(num_folds);
    const int num_classes = 1 + *std::max_element(labels.begin(), labels.end());
    std::mt19937_64 rng(seed);
    int slot = 0;
    for (int cls = 0; cls < num_classes; ++cls) {
        std::vector<int> members;
        for (int i = 0; i < n; ++i) {
            if (labels[static_cast<size_t>(i)] == cls) {
                members.push_back(i);
            }
        }
        std::shuffle(members.begin(), members.end(), rng);
        // Continue the round-robin across classes so fold sizes stay balanced.
        for (int idx : members) {
            folds[static_cast<size_t>(slot % num_folds)].push_back(idx);
            ++slot;
        }
    }
    for (auto& fold : folds) {
        std::sort(fold.begin(), fold.end());
    }
    return folds;
}

std::vector<double> rank_methods(const std::vector<std::vector<double>>& accuracies) {
    if (accuracies.empty() || accuracies.front().empty()) {
        throw InputError("rank_methods: empty accuracy table");
    }
    const size_t m = accuracies.size();
    const size_t counts = accuracies.front().size();
    for (const auto& row : accuracies) {
        if (row.size() != counts) {
            throw InputError("rank_methods: ragged accuracy table");
        }
    }
    std::vector<double> average(m, 0.0);
    for (size_t c = 0; c < counts; ++c) {
        // Sort method indices by accuracy descending; equal runs share the
        // midrank.
        std::vector<size_t> order(m);
        std::iota(order.begin(), order.end(), size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return accuracies[a][c] > accuracies[b][c];
        });
        size_t i = 0;
        while (i < m) {
            size_t j = i;
            while (j + 1 < m && accuracies[order[j + 1]][c] == accuracies[order[i]][c]) {
                ++j;
            }
            const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
            for (size_t t = i; t <= j; ++t) {
                average[order[t]] += midrank;
            }
            i = j + 1;
        }
    }
    for (auto& r : average) {
        r /= static_cast<double>(counts);
    }
    return average;
}

double nemenyi_cd(int num_methods, int num_datasets, double significance) {
    if (significance != 0.05) {
        throw ParameterError("nemenyi_cd: only significance 0.05 is supported");
    }
    if (num_datasets < 1) {
        throw InputError("nemenyi_cd: need at least one dataset");
    }
    // Two-tailed studentized range values divided by sqrt(2), alpha = 0.05,
    // for 2..10 compared methods.
    static constexpr double q05[] = {1.960, 2.343, 2.569, 2.728, 2.850,
                                     2.949, 3.031, 3.102, 3.164};
    if (num_methods < 2 || num_methods > 10) {
        throw ParameterError("nemenyi_cd: number of methods must be in [2, 10]");
    }
    const double q = q05[num_methods - 2];
    return q * std::sqrt(static_cast<double>(num_methods) * (num_methods + 1) /
                         (6.0 * num_datasets));
}

namespace {

std::vector<int> classify_fold(const Dataset& data, std::span<const int> subset,
                               std::span<const int> train_idx, std::span<const int> test_idx,
                               const BenchmarkConfig& cfg) {
    const int dim = static_cast<int>(subset.size());
    Eigen::MatrixXd train_x(train_idx.size(), dim);
    Eigen::MatrixXd test_x(test_idx.size(), dim);
    std::vector<int> train_y(train_idx.size());
    for (size_t i = 0; i < train_idx.size(); ++i) {
        train_y[i] = data.labels[static_cast<size_t>(train_idx[i])];
        for (int j = 0; j < dim; ++j) {
            train_x(static_cast<Eigen::Index>(i), j) = data.features(train_idx[i], subset[static_cast<size_t>(j)]);
        }
    }
    for (size_t i = 0; i < test_idx.size(); ++i) {
        for (int j = 0; j < dim; ++j) {
            test_x(static_cast<Eigen::Index>(i), j) = data.features(test_idx[i], subset[static_cast<size_t>(j)]);
        }
    }
    if (cfg.classifier == ClassifierKind::Knn3) {
        return knn_classify(train_x, train_y, test_x, cfg.knn_k);
    }
    LinearSvmOptions svm;
    svm.c = cfg.svm_c;
    svm.seed = cfg.seed;
    return linear_svm_classify(train_x, train_y, test_x, svm);
}

Dataset restrict_rows(const Dataset& data, std::span<const int> rows) {
    Dataset out;
    out.features.resize(static_cast<Eigen::Index>(rows.size()), data.d());
    out.labels.resize(rows.size());
    out.feature_names = data.feature_names;
    out.continuous_flags = data.continuous_flags;
    for (size_t i = 0; i < rows.size(); ++i) {
        out.features.row(static_cast<Eigen::Index>(i)) = data.features.row(rows[i]);
        out.labels[i] = data.labels[static_cast<size_t>(rows[i])];
    }
    return out;
}

} // namespace

EvalReport run_benchmark(const Dataset& data, const BenchmarkConfig& cfg) {
    if (cfg.methods.empty()) {
        throw InputError("run_benchmark: no methods given");
    }
    if (cfg.max_features < 1 || cfg.max_features > data.d()) {
        throw InputError("run_benchmark: max_features = " + std::to_string(cfg.max_features) +
                         " out of range [1, " + std::to_string(data.d()) + "]");
    }
    if (data.num_classes() < 2) {
        throw InputError("run_benchmark: need at least 2 classes");
    }

    const auto folds = cv_split(data.n(), data.labels, cfg.seed, cfg.folds);
    std::vector<std::vector<int>> train_sets(folds.size());
    for (size_t f = 0; f < folds.size(); ++f) {
        std::vector<char> in_test(static_cast<size_t>(data.n()), 0);
        for (int i : folds[f]) {
            in_test[static_cast<size_t>(i)] = 1;
        }
        for (int i = 0; i < data.n(); ++i) {
            if (!in_test[static_cast<size_t>(i)]) {
                train_sets[f].push_back(i);
            }
        }
    }

    EvalReport report;
    report.dataset = cfg.dataset_name;
    report.seed = cfg.seed;
    for (int c = 1; c <= cfg.max_features; ++c) {
        report.feature_counts.push_back(c);
    }

    for (const Criterion& method : cfg.methods) {
        report.methods.push_back(method.name());
        std::vector<double> row;

        if (!cfg.reselect_per_fold) {
            const SelectionTrace trace =
                select(method, data, cfg.max_features, cfg.seed, cfg.selection);
            report.traces.push_back(trace);
            for (int c = 1; c <= cfg.max_features; ++c) {
                const std::span<const int> subset(trace.selected.data(), static_cast<size_t>(c));
                std::vector<int> predicted(static_cast<size_t>(data.n()));
                for (size_t f = 0; f < folds.size(); ++f) {
                    const auto fold_pred =
                        classify_fold(data, subset, train_sets[f], folds[f], cfg);
                    for (size_t i = 0; i < folds[f].size(); ++i) {
                        predicted[static_cast<size_t>(folds[f][i])] = fold_pred[i];
                    }
                }
                row.push_back(accuracy_metrics(predicted, data.labels).overall);
            }
        } else {
            // Contamination-free variant: selection sees only the training part
            // of each fold.
            std::vector<std::vector<int>> fold_selected(folds.size());
            for (size_t f = 0; f < folds.size(); ++f) {
                const Dataset train_data = restrict_rows(data, train_sets[f]);
                fold_selected[f] =
                    select(method, train_data, cfg.max_features, cfg.seed, cfg.selection).selected;
            }
            report.traces.emplace_back();
            for (int c = 1; c <= cfg.max_features; ++c) {
                std::vector<int> predicted(static_cast<size_t>(data.n()));
                for (size_t f = 0; f < folds.size(); ++f) {
                    const std::span<const int> subset(fold_selected[f].data(),
                                                      static_cast<size_t>(c));
                    const auto fold_pred =
                        classify_fold(data, subset, train_sets[f], folds[f], cfg);
                    for (size_t i = 0; i < folds[f].size(); ++i) {
                        predicted[static_cast<size_t>(folds[f][i])] = fold_pred[i];
                    }
                }
                row.push_back(accuracy_metrics(predicted, data.labels).overall);
            }
        }
        report.accuracies.push_back(std::move(row));
    }

    report.ranks = report.methods.size() == 1 ? std::vector<double>{1.0}
                                              : rank_methods(report.accuracies);
    if (report.methods.size() >= 2) {
        report.cd = nemenyi_cd(static_cast<int>(report.methods.size()),
                               static_cast<int>(report.feature_counts.size()));
    }
    return report;
}

} // namespace mrenyi
