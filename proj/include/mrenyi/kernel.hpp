#pragma once

#include <Eigen/Dense>

#include "mrenyi/errors.hpp"

namespace mrenyi {

enum class KernelFamily { RBF };

// Kernel family plus bandwidth, in the same units as the input feature.
struct KernelSpec {
    KernelFamily family = KernelFamily::RBF;
    double sigma = 1.0;
};

// Trace-1 PSD kernel matrix with every diagonal entry equal to 1/n. All
// entropy quantities operate on this object; it is immutable once built.
class NormalizedGram {
public:
    explicit NormalizedGram(Eigen::MatrixXd entries);

    int n() const { return static_cast<int>(mat_.rows()); }
    const Eigen::MatrixXd& entries() const { return mat_; }

private:
    Eigen::MatrixXd mat_;
};

// exp(-||x - y||^2 / (2 sigma^2)), in (0, 1].
double rbf_kernel(const Eigen::VectorXd& x, const Eigen::VectorXd& y, const KernelSpec& spec);

// Builds the trace-normalized Gram matrix A_ij = (1/n) K_ij / sqrt(K_ii K_jj)
// over the rows of `points` (one sample per row; a single column for a scalar
// feature). Requires n >= 2.
NormalizedGram gram_matrix(const Eigen::MatrixXd& points, const KernelSpec& spec);

// Bandwidth selection rule.
struct SigmaRule {
    enum class Kind { Fixed, Silverman, RangeFraction };

    Kind kind = Kind::Fixed;
    double param = 1.0; // Fixed: the bandwidth; RangeFraction: the fraction f

    static SigmaRule fixed(double v) { return SigmaRule{Kind::Fixed, v}; }
    static SigmaRule silverman() { return SigmaRule{Kind::Silverman, 0.0}; }
    static SigmaRule range_fraction(double f) { return SigmaRule{Kind::RangeFraction, f}; }
};

struct SigmaEstimate {
    double value = 1.0;
    bool degenerate = false; // all points identical; fell back to 1.0
};

// Fixed(v) returns v. Silverman returns 1.06 * s * n^(-1/5) with s the mean
// per-dimension sample standard deviation. RangeFraction(f) returns
// f * (max pairwise distance - min nonzero pairwise distance), or f * max
// when those coincide (fewer than three distinct points).
SigmaEstimate sigma_heuristic(const Eigen::MatrixXd& data, const SigmaRule& rule);

} // namespace mrenyi
