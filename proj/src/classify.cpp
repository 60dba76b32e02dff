#include "mrenyi/classify.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <random>
#include <set>

namespace mrenyi {

namespace {

int vote_winner(std::span<const int> counts) {
    int best = 0;
    for (int c = 1; c < static_cast<int>(counts.size()); ++c) {
        if (counts[static_cast<size_t>(c)] > counts[static_cast<size_t>(best)]) {
            best = c;
        }
    }
    return best;
}

} // namespace

std::vector<int> knn_classify(const Eigen::MatrixXd& train_x, std::span<const int> train_y,
                              const Eigen::MatrixXd& test_x, int k) {
    const int n_train = static_cast<int>(train_x.rows());
    if (n_train < 1 || static_cast<int>(train_y.size()) != n_train) {
        throw InputError("knn_classify: training set is empty or label count mismatched");
    }
    if (train_x.cols() != test_x.cols()) {
        throw InputError("knn_classify: train/test dimensionality mismatch");
    }
    if (k < 1) {
        throw ParameterError("knn_classify: k must be >= 1");
    }
    k = std::min(k, n_train);
    const int num_classes = 1 + *std::max_element(train_y.begin(), train_y.end());

    std::vector<int> predictions(static_cast<size_t>(test_x.rows()));
    std::vector<std::pair<double, int>> dist(static_cast<size_t>(n_train));
    std::vector<int> counts(static_cast<size_t>(num_classes));
    for (Eigen::Index t = 0; t < test_x.rows(); ++t) {
        for (int i = 0; i < n_train; ++i) {
            dist[static_cast<size_t>(i)] = {(train_x.row(i) - test_x.row(t)).squaredNorm(), i};
        }
        std::partial_sort(dist.begin(), dist.begin() + k, dist.end());
        std::fill(counts.begin(), counts.end(), 0);
        for (int i = 0; i < k; ++i) {
            ++counts[static_cast<size_t>(train_y[static_cast<size_t>(dist[static_cast<size_t>(i)].second)])];
        }
        predictions[static_cast<size_t>(t)] = vote_winner(counts);
    }
    return predictions;
}

std::vector<int> linear_svm_classify(const Eigen::MatrixXd& train_x, std::span<const int> train_y,
                                     const Eigen::MatrixXd& test_x, const LinearSvmOptions& opts) {
    const int n = static_cast<int>(train_x.rows());
    if (n < 1 || static_cast<int>(train_y.size()) != n) {
        throw InputError("linear_svm_classify: training set is empty or label count mismatched");
    }
    if (train_x.cols() != test_x.cols()) {
        throw InputError("linear_svm_classify: train/test dimensionality mismatch");
    }
    if (!(opts.c > 0.0)) {
        throw ParameterError("linear_svm_classify: regularization c must be > 0");
    }

    const std::set<int> classes(train_y.begin(), train_y.end());
    if (classes.size() < 2) {
        std::cerr << "warning: single-class training fold; using constant predictor\n";
        return std::vector<int>(static_cast<size_t>(test_x.rows()), *classes.begin());
    }
    const int num_classes = 1 + *classes.rbegin();
    const Eigen::Index dim = train_x.cols();

    // Pegasos with an augmented bias coordinate; lambda = 1 / (c * n).
    const double lambda = 1.0 / (opts.c * n);
    Eigen::MatrixXd weights = Eigen::MatrixXd::Zero(num_classes, dim + 1);
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        order[static_cast<size_t>(i)] = i;
    }

    for (int cls = 0; cls < num_classes; ++cls) {
        if (classes.count(cls) == 0) {
            continue;
        }
        std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(cls));
        Eigen::VectorXd w = Eigen::VectorXd::Zero(dim + 1);
        std::uint64_t t = 0;
        for (int epoch = 0; epoch < opts.epochs; ++epoch) {
            std::shuffle(order.begin(), order.end(), rng);
            for (int idx : order) {
                ++t;
                const double eta = 1.0 / (lambda * static_cast<double>(t));
                const double y = train_y[static_cast<size_t>(idx)] == cls ? 1.0 : -1.0;
                double margin = w.head(dim).dot(train_x.row(idx)) + w(dim);
                w *= 1.0 - eta * lambda;
                if (y * margin < 1.0) {
                    w.head(dim) += eta * y * train_x.row(idx).transpose();
                    w(dim) += eta * y;
                }
            }
        }
        weights.row(cls) = w;
    }

    std::vector<int> predictions(static_cast<size_t>(test_x.rows()));
    for (Eigen::Index i = 0; i < test_x.rows(); ++i) {
        int best = -1;
        double best_score = -std::numeric_limits<double>::infinity();
        for (int cls = 0; cls < num_classes; ++cls) {
            if (classes.count(cls) == 0) {
                continue;
            }
            const double score = weights.row(cls).head(dim).dot(test_x.row(i)) + weights(cls, dim);
            if (best < 0 || score > best_score) {
                best = cls;
                best_score = score;
            }
        }
        predictions[static_cast<size_t>(i)] = best;
    }
    return predictions;
}

AccuracyMetrics accuracy_metrics(std::span<const int> predicted, std::span<const int> actual) {
    if (predicted.size() != actual.size() || actual.empty()) {
        throw InputError("accuracy_metrics: prediction/label size mismatch or empty input");
    }
    const int num_classes = 1 + *std::max_element(actual.begin(), actual.end());
    std::vector<int> total(static_cast<size_t>(num_classes), 0);
    std::vector<int> correct(static_cast<size_t>(num_classes), 0);
    int hits = 0;
    for (size_t i = 0; i < actual.size(); ++i) {
        ++total[static_cast<size_t>(actual[i])];
        if (predicted[i] == actual[i]) {
            ++correct[static_cast<size_t>(actual[i])];
            ++hits;
        }
    }
    AccuracyMetrics m;
    m.overall = static_cast<double>(hits) / static_cast<double>(actual.size());
    int present = 0;
    for (int c = 0; c < num_classes; ++c) {
        if (total[static_cast<size_t>(c)] > 0) {
            m.average += static_cast<double>(correct[static_cast<size_t>(c)]) /
                         static_cast<double>(total[static_cast<size_t>(c)]);
            ++present;
        }
    }
    m.average /= present;
    return m;
}

} // namespace mrenyi
