#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mrenyi/dataset.hpp"
#include "mrenyi/kernel.hpp"
#include "mrenyi/spectral.hpp"

namespace mrenyi {

enum class CriterionKind { MIM, MIFS, FOU, MRMR, JMI, CMIM, MatrixMI };

// A greedy forward-selection score. The six discrete criteria work on binned
// columns; MatrixMI scores candidates by the information the joint Gram of
// the selected set plus the candidate carries about the label Gram.
struct Criterion {
    CriterionKind kind = CriterionKind::MIM;
    double mifs_beta = 1.0;
    EntropyOrder order{1.01};
    KernelSpec kernel{KernelFamily::RBF, 1.0};

    static Criterion mim() { return {CriterionKind::MIM}; }
    static Criterion mifs(double beta = 1.0);
    static Criterion fou() { return {CriterionKind::FOU}; }
    static Criterion mrmr() { return {CriterionKind::MRMR}; }
    static Criterion jmi() { return {CriterionKind::JMI}; }
    static Criterion cmim() { return {CriterionKind::CMIM}; }
    static Criterion matrix_mi(EntropyOrder order, KernelSpec kernel);

    std::string name() const;
    // Accepts "mim", "mifs", "fou", "mrmr", "jmi", "cmim", "matrix-mi".
    static Criterion parse(const std::string& name);
};

// Ordered picks plus per-step candidate scores. At every step the selected
// index attains the maximal score, ties broken by lowest index.
struct SelectionTrace {
    std::vector<int> selected;
    // Per step: (candidate index, score) sorted by candidate index.
    std::vector<std::vector<std::pair<int, double>>> step_scores;
    std::vector<double> objective_values; // winning score per step
};

struct SelectionOptions {
    int bins = 5;
    // Standardize continuous features before Gram construction (categorical
    // columns are never standardized).
    bool standardize = true;
    // Per-feature Grams are precomputed when n^2 * d doubles fit here.
    std::uint64_t memory_budget = std::uint64_t{2} << 30;
    int threads = 0; // 0 = auto
};

// Kronecker-delta kernel Gram over class codes: K_ij = [labels_i == labels_j],
// trace-normalized.
NormalizedGram label_gram(std::span<const int> labels);

// Column j as Gram-ready points: standardized to zero mean and unit variance
// when requested and the column is continuous; categorical columns pass
// through untouched.
Eigen::MatrixXd gram_points(const Dataset& data, int j, bool standardize);

// Score a single unselected candidate given the already selected set.
double score_candidate(const Criterion& criterion, int candidate, std::span<const int> selected,
                       const Dataset& data, const SelectionOptions& opts = {});

// Greedy forward selection of k features; deterministic for a fixed dataset,
// criterion and seed. Candidate scoring within one step runs in parallel.
SelectionTrace select(const Criterion& criterion, const Dataset& data, int k, std::uint64_t seed,
                      const SelectionOptions& opts = {});

} // namespace mrenyi
