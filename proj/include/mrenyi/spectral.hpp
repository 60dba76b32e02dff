#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mrenyi/kernel.hpp"

namespace mrenyi {

// Entropy order alpha > 0. Orders within 1e-6 of 1 are routed to the Shannon
// limit to avoid cancellation in the 1/(1-alpha) prefactor.
struct EntropyOrder {
    double alpha = 1.01;
};

// Eigenvalues of a normalized Gram matrix: nonnegative, descending, summing
// to 1 after clamping and renormalization.
struct Spectrum {
    Eigen::VectorXd values;
};

enum class InfoKind {
    Entropy,
    JointEntropy,
    ConditionalEntropy,
    MutualInfo,
    MultivariateMI,
    InteractionInfo,
    CoInfo,
    TotalCorrelation,
};

// A measured quantity in bits (base-2 logarithms throughout).
struct InfoQuantity {
    double bits = 0.0;
    InfoKind kind = InfoKind::Entropy;
};

// Eigenvalues of the symmetric matrix, clamped to >= 0 and renormalized to
// sum 1, in descending order. Eigenvalues below -1e-9 indicate broken input
// and raise NumericalError with condition diagnostics.
Spectrum spectrum(const NormalizedGram& gram);

// S_alpha = log2(sum lambda_i^alpha) / (1 - alpha); the alpha -> 1 limit is
// -sum lambda_i log2 lambda_i with 0 log 0 := 0. Clamped to >= 0.
InfoQuantity entropy(const Spectrum& spec, const EntropyOrder& order);
InfoQuantity entropy(const NormalizedGram& gram, const EntropyOrder& order);

// Elementwise product of all k matrices divided by its trace. k = 1 returns
// the input unchanged.
NormalizedGram joint_gram(std::span<const NormalizedGram> grams);

// Entropy of the trace-normalized form of an unnormalized symmetric product;
// the spectrum renormalization makes the matrix-side division unnecessary, so
// callers can pass raw Hadamard accumulations.
InfoQuantity product_entropy(const Eigen::MatrixXd& product, const EntropyOrder& order);

InfoQuantity joint_entropy(std::span<const NormalizedGram> grams, const EntropyOrder& order);

// S(A|B) = S(A,B) - S(B).
InfoQuantity conditional_entropy(const NormalizedGram& a, const NormalizedGram& b,
                                 const EntropyOrder& order);

// I(A;B) = S(A) + S(B) - S(A,B).
InfoQuantity mutual_information(const NormalizedGram& a, const NormalizedGram& b,
                                const EntropyOrder& order);

// Information the joint of the feature matrices carries about the target:
// S(B) + S(joint features) - S(joint of features and B).
InfoQuantity multivariate_mi(const NormalizedGram& target,
                             std::span<const NormalizedGram> features,
                             const EntropyOrder& order);

// Alternating sum of subset joint entropies over all 2^k subsets, with the
// empty subset contributing zero. Requires 2 <= k < 20; every subset is
// eigendecomposed exactly once.
InfoQuantity interaction_information(std::span<const NormalizedGram> grams,
                                     const EntropyOrder& order);

// Same terms with the sign keyed to |subset| instead of k - |subset|; equals
// (-1)^k times the interaction information exactly.
InfoQuantity co_information(std::span<const NormalizedGram> grams, const EntropyOrder& order);

// sum_i S(A_i) - S(joint of all); zero for k = 1.
InfoQuantity total_correlation(std::span<const NormalizedGram> grams, const EntropyOrder& order);

} // namespace mrenyi
