#include "mrenyi/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace mrenyi {

namespace {

void check_order(const EntropyOrder& order) {
    if (!(order.alpha > 0.0) || !std::isfinite(order.alpha)) {
        throw ParameterError("entropy order alpha must be a positive finite real, got " +
                             std::to_string(order.alpha));
    }
}

void check_same_size(std::span<const NormalizedGram> grams) {
    if (grams.empty()) {
        throw InputError("expected at least one Gram matrix");
    }
    const int n = grams.front().n();
    for (const auto& g : grams) {
        if (g.n() != n) {
            throw InputError("Gram matrices have mismatched sizes (" + std::to_string(n) +
                             " vs " + std::to_string(g.n()) + ")");
        }
    }
}

double entropy_bits(const Eigen::VectorXd& lambda, double alpha) {
    double h;
    if (std::abs(alpha - 1.0) <= 1e-6) {
        h = 0.0;
        for (Eigen::Index i = 0; i < lambda.size(); ++i) {
            const double v = lambda(i);
            if (v > 0.0) {
                h -= v * std::log2(v);
            }
        }
    } else {
        double s = 0.0;
        for (Eigen::Index i = 0; i < lambda.size(); ++i) {
            const double v = lambda(i);
            if (v > 0.0) {
                s += std::pow(v, alpha);
            }
        }
        h = std::log2(s) / (1.0 - alpha);
    }
    return std::max(h, 0.0);
}

// Spectrum of an unnormalized symmetric Hadamard product; the eigenvalues are
// renormalized to sum 1 directly, so trace normalization of the matrix itself
// is never needed and identities between operations hold bit for bit.
Eigen::VectorXd clamped_spectrum(const Eigen::MatrixXd& sym) {
    const double tr = sym.trace();
    if (!(tr > 0.0) || !std::isfinite(tr)) {
        throw NumericalError("matrix trace is non-positive or non-finite (underflowed product?)");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "eigensolver failed on a " << sym.rows() << "x" << sym.cols()
            << " matrix (trace " << tr << ", max |entry| " << sym.cwiseAbs().maxCoeff() << ")";
        throw NumericalError(msg.str());
    }
    Eigen::VectorXd ev = solver.eigenvalues(); // ascending
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) < -1e-9 * tr) {
            std::ostringstream msg;
            msg << "matrix is not positive semidefinite: eigenvalue " << ev(i) / tr
                << " of the trace-normalized matrix is below -1e-9 (n = " << sym.rows()
                << ", trace = " << tr << ", min diagonal = " << sym.diagonal().minCoeff()
                << ")";
            throw NumericalError(msg.str());
        }
        ev(i) = std::max(ev(i), 0.0);
    }
    const double sum = ev.sum();
    if (!(sum > 0.0) || !std::isfinite(sum)) {
        throw NumericalError("spectrum sums to a non-positive or non-finite value");
    }
    ev /= sum;
    return ev.reverse();
}

Eigen::MatrixXd hadamard_all(std::span<const NormalizedGram> grams) {
    Eigen::MatrixXd acc = grams.front().entries();
    for (size_t i = 1; i < grams.size(); ++i) {
        acc = acc.cwiseProduct(grams[i].entries());
    }
    return acc;
}

// Subset joint entropies indexed by bitmask; each of the 2^k - 1 nonempty
// subsets is eigendecomposed exactly once.
std::vector<double> subset_entropies(std::span<const NormalizedGram> grams, double alpha) {
    const int k = static_cast<int>(grams.size());
    std::vector<double> out(size_t{1} << k, 0.0);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
        Eigen::MatrixXd prod;
        bool first = true;
        for (int i = 0; i < k; ++i) {
            if (mask & (std::uint32_t{1} << i)) {
                if (first) {
                    prod = grams[static_cast<size_t>(i)].entries();
                    first = false;
                } else {
                    prod = prod.cwiseProduct(grams[static_cast<size_t>(i)].entries());
                }
            }
        }
        out[mask] = entropy_bits(clamped_spectrum(prod), alpha);
    }
    return out;
}

// CI as the signed subset sum; II is the same sum times (-1)^k, term by term.
double co_information_bits(std::span<const NormalizedGram> grams, const EntropyOrder& order) {
    check_order(order);
    check_same_size(grams);
    const int k = static_cast<int>(grams.size());
    if (k < 2) {
        throw InputError("interaction quantities need at least 2 variables, got " +
                         std::to_string(k));
    }
    if (k >= 20) {
        throw InputError("refusing subset enumeration for k = " + std::to_string(k) +
                         " (2^k joint entropies)");
    }
    const std::vector<double> ent = subset_entropies(grams, order.alpha);
    double ci = 0.0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
        const int bits = std::popcount(mask);
        ci -= (bits % 2 == 0 ? ent[mask] : -ent[mask]);
    }
    return ci;
}

} // namespace

Spectrum spectrum(const NormalizedGram& gram) {
    return Spectrum{clamped_spectrum(gram.entries())};
}

InfoQuantity entropy(const Spectrum& spec, const EntropyOrder& order) {
    check_order(order);
    return {entropy_bits(spec.values, order.alpha), InfoKind::Entropy};
}

InfoQuantity entropy(const NormalizedGram& gram, const EntropyOrder& order) {
    return entropy(spectrum(gram), order);
}

InfoQuantity product_entropy(const Eigen::MatrixXd& product, const EntropyOrder& order) {
    check_order(order);
    if (product.rows() != product.cols() || product.rows() < 1) {
        throw InputError("product matrix must be square and non-empty");
    }
    return {entropy_bits(clamped_spectrum(product), order.alpha), InfoKind::JointEntropy};
}

NormalizedGram joint_gram(std::span<const NormalizedGram> grams) {
    check_same_size(grams);
    if (grams.size() == 1) {
        return grams.front();
    }
    Eigen::MatrixXd acc = hadamard_all(grams);
    const double tr = acc.trace();
    if (!(tr > 0.0) || !std::isfinite(tr)) {
        throw NumericalError("Hadamard product trace underflowed to zero");
    }
    return NormalizedGram(acc / tr);
}

InfoQuantity joint_entropy(std::span<const NormalizedGram> grams, const EntropyOrder& order) {
    check_order(order);
    check_same_size(grams);
    return {entropy_bits(clamped_spectrum(hadamard_all(grams)), order.alpha),
            InfoKind::JointEntropy};
}

InfoQuantity conditional_entropy(const NormalizedGram& a, const NormalizedGram& b,
                                 const EntropyOrder& order) {
    const NormalizedGram pair[] = {a, b};
    const double joint = joint_entropy(pair, order).bits;
    const double hb = entropy(b, order).bits;
    return {joint - hb, InfoKind::ConditionalEntropy};
}

InfoQuantity mutual_information(const NormalizedGram& a, const NormalizedGram& b,
                                const EntropyOrder& order) {
    const NormalizedGram pair[] = {a, b};
    const double joint = joint_entropy(pair, order).bits;
    return {entropy(a, order).bits + entropy(b, order).bits - joint, InfoKind::MutualInfo};
}

InfoQuantity multivariate_mi(const NormalizedGram& target,
                             std::span<const NormalizedGram> features,
                             const EntropyOrder& order) {
    check_order(order);
    if (features.empty()) {
        throw InputError("multivariate_mi needs at least one feature Gram");
    }
    check_same_size(features);
    if (features.front().n() != target.n()) {
        throw InputError("target Gram size differs from feature Gram size");
    }
    Eigen::MatrixXd prod = hadamard_all(features);
    const double h_features = entropy_bits(clamped_spectrum(prod), order.alpha);
    prod = prod.cwiseProduct(target.entries());
    const double h_all = entropy_bits(clamped_spectrum(prod), order.alpha);
    const double h_target = entropy(target, order).bits;
    return {h_target + h_features - h_all, InfoKind::MultivariateMI};
}

InfoQuantity interaction_information(std::span<const NormalizedGram> grams,
                                     const EntropyOrder& order) {
    const double ci = co_information_bits(grams, order);
    const bool even = grams.size() % 2 == 0;
    return {even ? ci : -ci, InfoKind::InteractionInfo};
}

InfoQuantity co_information(std::span<const NormalizedGram> grams, const EntropyOrder& order) {
    return {co_information_bits(grams, order), InfoKind::CoInfo};
}

InfoQuantity total_correlation(std::span<const NormalizedGram> grams, const EntropyOrder& order) {
    check_order(order);
    check_same_size(grams);
    if (grams.size() == 1) {
        return {0.0, InfoKind::TotalCorrelation};
    }
    double marginal_sum = 0.0;
    for (const auto& g : grams) {
        marginal_sum += entropy(g, order).bits;
    }
    const double joint = joint_entropy(grams, order).bits;
    return {marginal_sum - joint, InfoKind::TotalCorrelation};
}

} // namespace mrenyi
