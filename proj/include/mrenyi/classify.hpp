#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mrenyi/errors.hpp"

namespace mrenyi {

// Euclidean k-NN majority vote. Distance ties resolve by lower train index,
// vote ties by smallest class code.
std::vector<int> knn_classify(const Eigen::MatrixXd& train_x, std::span<const int> train_y,
                              const Eigen::MatrixXd& test_x, int k);

struct LinearSvmOptions {
    double c = 1.0;
    int epochs = 40;
    std::uint64_t seed = 0;
};

// One-vs-rest linear SVM trained by primal stochastic subgradient descent on
// the hinge loss with a fixed epoch count and seeded shuffling. A
// single-class training set yields a constant predictor (with a warning on
// stderr).
std::vector<int> linear_svm_classify(const Eigen::MatrixXd& train_x, std::span<const int> train_y,
                                     const Eigen::MatrixXd& test_x,
                                     const LinearSvmOptions& opts = {});

struct AccuracyMetrics {
    double overall = 0.0; // fraction of correctly classified samples
    double average = 0.0; // mean of per-class accuracies
};

AccuracyMetrics accuracy_metrics(std::span<const int> predicted, std::span<const int> actual);

} // namespace mrenyi
