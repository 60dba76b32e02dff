#include "mrenyi/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mrenyi {

namespace {

void check_sigma(const KernelSpec& spec) {
    if (!(spec.sigma > 0.0) || !std::isfinite(spec.sigma)) {
        throw ParameterError("kernel sigma must be a positive finite real, got " +
                             std::to_string(spec.sigma));
    }
}

} // namespace

NormalizedGram::NormalizedGram(Eigen::MatrixXd entries) : mat_(std::move(entries)) {
    const auto rows = mat_.rows();
    if (rows < 1 || mat_.cols() != rows) {
        throw InputError("normalized Gram matrix must be square and non-empty");
    }
    if (!mat_.allFinite()) {
        throw InputError("normalized Gram matrix contains non-finite entries");
    }
    const double inv_n = 1.0 / static_cast<double>(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (std::abs(mat_(i, i) - inv_n) > 1e-9) {
            throw InputError("normalized Gram diagonal must equal 1/n");
        }
        for (Eigen::Index j = i + 1; j < rows; ++j) {
            if (std::abs(mat_(i, j) - mat_(j, i)) > 1e-9) {
                throw InputError("normalized Gram matrix must be symmetric");
            }
        }
    }
}

double rbf_kernel(const Eigen::VectorXd& x, const Eigen::VectorXd& y, const KernelSpec& spec) {
    check_sigma(spec);
    if (x.size() != y.size()) {
        throw InputError("rbf_kernel: vectors have mismatched dimensions (" +
                         std::to_string(x.size()) + " vs " + std::to_string(y.size()) + ")");
    }
    const double d2 = (x - y).squaredNorm();
    return std::exp(-d2 / (2.0 * spec.sigma * spec.sigma));
}

NormalizedGram gram_matrix(const Eigen::MatrixXd& points, const KernelSpec& spec) {
    check_sigma(spec);
    const Eigen::Index n = points.rows();
    if (n < 2) {
        throw InputError("gram_matrix needs at least 2 samples, got " + std::to_string(n));
    }
    if (!points.allFinite()) {
        throw InputError("gram_matrix: input contains non-finite values");
    }

    const double inv_n = 1.0 / static_cast<double>(n);
    const double inv_2s2 = 1.0 / (2.0 * spec.sigma * spec.sigma);
    Eigen::MatrixXd a(n, n);
    // RBF has K_ii = 1, so A_ij = K_ij / n with an exactly 1/n diagonal.
    for (Eigen::Index i = 0; i < n; ++i) {
        a(i, i) = inv_n;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double d2 = (points.row(i) - points.row(j)).squaredNorm();
            const double v = std::exp(-d2 * inv_2s2) * inv_n;
            a(i, j) = v;
            a(j, i) = v;
        }
    }
    return NormalizedGram(std::move(a));
}

SigmaEstimate sigma_heuristic(const Eigen::MatrixXd& data, const SigmaRule& rule) {
    const Eigen::Index n = data.rows();
    if (rule.kind == SigmaRule::Kind::Fixed) {
        if (!(rule.param > 0.0) || !std::isfinite(rule.param)) {
            throw ParameterError("fixed sigma must be positive, got " + std::to_string(rule.param));
        }
        return {rule.param, false};
    }
    if (n < 2) {
        throw InputError("sigma_heuristic needs at least 2 samples");
    }

    if (rule.kind == SigmaRule::Kind::Silverman) {
        double mean_std = 0.0;
        for (Eigen::Index j = 0; j < data.cols(); ++j) {
            const double mean = data.col(j).mean();
            const double ssq = (data.col(j).array() - mean).square().sum();
            mean_std += std::sqrt(ssq / static_cast<double>(n - 1));
        }
        mean_std /= static_cast<double>(data.cols());
        if (mean_std <= 0.0) {
            return {1.0, true};
        }
        return {1.06 * mean_std * std::pow(static_cast<double>(n), -0.2), false};
    }

    // RangeFraction
    const double f = rule.param;
    if (!(f > 0.0) || !(f < 1.0)) {
        throw ParameterError("range fraction must lie in (0, 1), got " + std::to_string(f));
    }
    double max_d = 0.0;
    double min_nonzero = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double d = (data.row(i) - data.row(j)).norm();
            max_d = std::max(max_d, d);
            if (d > 0.0) {
                min_nonzero = std::min(min_nonzero, d);
            }
        }
    }
    if (max_d == 0.0) {
        return {1.0, true}; // all points identical
    }
    const double range = max_d - min_nonzero;
    return {range > 0.0 ? f * range : f * max_d, false};
}

} // namespace mrenyi
