#include "mrenyi/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "mrenyi/discrete.hpp"
#include "mrenyi/parallel.hpp"

namespace mrenyi {

Criterion Criterion::mifs(double beta) {
    if (beta < 0.0 || !std::isfinite(beta)) {
        throw ParameterError("MIFS beta must be >= 0, got " + std::to_string(beta));
    }
    Criterion c{CriterionKind::MIFS};
    c.mifs_beta = beta;
    return c;
}

Criterion Criterion::matrix_mi(EntropyOrder order, KernelSpec kernel) {
    Criterion c{CriterionKind::MatrixMI};
    c.order = order;
    c.kernel = kernel;
    return c;
}

std::string Criterion::name() const {
    switch (kind) {
        case CriterionKind::MIM: return "mim";
        case CriterionKind::MIFS: return "mifs";
        case CriterionKind::FOU: return "fou";
        case CriterionKind::MRMR: return "mrmr";
        case CriterionKind::JMI: return "jmi";
        case CriterionKind::CMIM: return "cmim";
        case CriterionKind::MatrixMI: return "matrix-mi";
    }
    return "?";
}

Criterion Criterion::parse(const std::string& name) {
    if (name == "mim") return mim();
    if (name == "mifs") return mifs();
    if (name == "fou") return fou();
    if (name == "mrmr") return mrmr();
    if (name == "jmi") return jmi();
    if (name == "cmim") return cmim();
    if (name == "matrix-mi") return matrix_mi(EntropyOrder{1.01}, KernelSpec{KernelFamily::RBF, 1.0});
    throw ParameterError("unknown criterion '" + name +
                         "' (expected mim|mifs|fou|mrmr|jmi|cmim|matrix-mi)");
}

NormalizedGram label_gram(std::span<const int> labels) {
    const int n = static_cast<int>(labels.size());
    if (n < 1) {
        throw InputError("label_gram needs at least one label");
    }
    const double inv_n = 1.0 / n;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = inv_n;
        for (int j = i + 1; j < n; ++j) {
            if (labels[static_cast<size_t>(i)] == labels[static_cast<size_t>(j)]) {
                a(i, j) = inv_n;
                a(j, i) = inv_n;
            }
        }
    }
    return NormalizedGram(std::move(a));
}

namespace {

void validate_dataset(const Dataset& data) {
    if (data.n() < 2 || data.d() < 1) {
        throw InputError("dataset needs at least 2 samples and 1 feature");
    }
    if (static_cast<int>(data.labels.size()) != data.n()) {
        throw InputError("label count does not match sample count");
    }
    for (int j = 0; j < data.d(); ++j) {
        if (!data.features.col(j).allFinite()) {
            const std::string name = j < static_cast<int>(data.feature_names.size())
                                         ? data.feature_names[static_cast<size_t>(j)]
                                         : std::to_string(j);
            throw InputError("feature column '" + name + "' contains non-finite values");
        }
    }
}

bool column_is_continuous(const Dataset& data, int j) {
    if (j < static_cast<int>(data.continuous_flags.size())) {
        return data.continuous_flags[static_cast<size_t>(j)];
    }
    return true;
}

} // namespace

Eigen::MatrixXd gram_points(const Dataset& data, int j, bool standardize) {
    Eigen::VectorXd col = data.features.col(j);
    if (standardize && column_is_continuous(data, j)) {
        const double mean = col.mean();
        col.array() -= mean;
        const double sd = std::sqrt(col.squaredNorm() / col.size());
        if (sd > 0.0) {
            col /= sd;
        }
    }
    return col;
}

namespace {

// Shared per-call state for scoring: binned columns, the label column,
// relevance values, and (for MatrixMI) feature Grams plus the label Gram.
class ScoringContext {
public:
    ScoringContext(const Criterion& criterion, const Dataset& data, const SelectionOptions& opts)
        : criterion_(criterion), data_(data), opts_(opts) {
        validate_dataset(data);
        const int d = data.d();
        if (criterion.kind == CriterionKind::MatrixMI) {
            label_gram_.emplace(label_gram(data.labels));
            label_entropy_ = entropy(*label_gram_, criterion.order).bits;
            const std::uint64_t bytes = std::uint64_t(data.n()) * std::uint64_t(data.n()) *
                                        std::uint64_t(d) * sizeof(double);
            cache_grams_ = bytes <= opts.memory_budget;
            if (cache_grams_) {
                feature_grams_.reserve(static_cast<size_t>(d));
                for (int j = 0; j < d; ++j) {
                    feature_grams_.push_back(
                        gram_matrix(gram_points(data, j, opts.standardize), criterion.kernel));
                }
            }
        } else {
            binned_.reserve(static_cast<size_t>(d));
            for (int j = 0; j < d; ++j) {
                const auto col = data.features.col(j);
                binned_.push_back(
                    discretize(std::span<const double>(col.data(), static_cast<size_t>(col.size())),
                               opts.bins));
            }
            label_binned_.codes = data.labels;
            label_binned_.m = 1 + *std::max_element(data.labels.begin(), data.labels.end());
            label_binned_.was_categorical = true;
            relevance_.resize(static_cast<size_t>(d));
            for (int j = 0; j < d; ++j) {
                relevance_[static_cast<size_t>(j)] = shannon_mi(binned_[static_cast<size_t>(j)],
                                                                label_binned_);
            }
        }
    }

    NormalizedGram candidate_gram(int j) const {
        if (cache_grams_) {
            return feature_grams_[static_cast<size_t>(j)];
        }
        return gram_matrix(gram_points(data_, j, opts_.standardize), criterion_.kernel);
    }

    const NormalizedGram& target_gram() const { return *label_gram_; }
    double label_entropy() const { return label_entropy_; }
    const BinnedColumn& binned(int j) const { return binned_[static_cast<size_t>(j)]; }
    const BinnedColumn& label() const { return label_binned_; }
    double relevance(int j) const { return relevance_[static_cast<size_t>(j)]; }

    // MatrixMI score against a running unnormalized Hadamard product of the
    // selected Grams (all-ones when nothing is selected yet).
    double matrix_mi_score(const Eigen::MatrixXd& running, const NormalizedGram& cand) const {
        Eigen::MatrixXd prod = running.cwiseProduct(cand.entries());
        const double h_features = product_entropy(prod, criterion_.order).bits;
        prod = prod.cwiseProduct(label_gram_->entries());
        const double h_all = product_entropy(prod, criterion_.order).bits;
        return label_entropy_ + h_features - h_all;
    }

private:
    const Criterion& criterion_;
    const Dataset& data_;
    const SelectionOptions& opts_;
    std::vector<BinnedColumn> binned_;
    BinnedColumn label_binned_;
    std::vector<double> relevance_;
    std::vector<NormalizedGram> feature_grams_;
    std::optional<NormalizedGram> label_gram_;
    double label_entropy_ = 0.0;
    bool cache_grams_ = false;
};

double discrete_score(const Criterion& c, const ScoringContext& ctx, int candidate,
                      std::span<const int> selected) {
    const BinnedColumn& x = ctx.binned(candidate);
    const double rel = ctx.relevance(candidate);
    switch (c.kind) {
        case CriterionKind::MIM:
            return rel;
        case CriterionKind::MIFS: {
            double red = 0.0;
            for (int l : selected) {
                red += shannon_mi(x, ctx.binned(l));
            }
            return rel - c.mifs_beta * red;
        }
        case CriterionKind::FOU: {
            double penalty = 0.0;
            for (int l : selected) {
                penalty += shannon_mi(x, ctx.binned(l)) -
                           shannon_conditional_mi(x, ctx.binned(l), ctx.label());
            }
            return rel - penalty;
        }
        case CriterionKind::MRMR: {
            if (selected.empty()) {
                return rel;
            }
            double red = 0.0;
            for (int l : selected) {
                red += shannon_mi(x, ctx.binned(l));
            }
            return rel - red / static_cast<double>(selected.size());
        }
        case CriterionKind::JMI: {
            if (selected.empty()) {
                return rel;
            }
            double sum = 0.0;
            for (int l : selected) {
                sum += shannon_pair_mi(x, ctx.binned(l), ctx.label());
            }
            return sum;
        }
        case CriterionKind::CMIM: {
            if (selected.empty()) {
                return rel;
            }
            double worst = std::numeric_limits<double>::infinity();
            for (int l : selected) {
                worst = std::min(worst, shannon_conditional_mi(x, ctx.label(), ctx.binned(l)));
            }
            return worst;
        }
        default:
            throw ParameterError("not a discrete criterion");
    }
}

void check_candidate(int candidate, std::span<const int> selected, int d) {
    if (candidate < 0 || candidate >= d) {
        throw InputError("candidate index " + std::to_string(candidate) + " out of range for " +
                         std::to_string(d) + " features");
    }
    if (std::find(selected.begin(), selected.end(), candidate) != selected.end()) {
        throw InputError("candidate " + std::to_string(candidate) + " is already selected");
    }
}

} // namespace

double score_candidate(const Criterion& criterion, int candidate, std::span<const int> selected,
                       const Dataset& data, const SelectionOptions& opts) {
    check_candidate(candidate, selected, data.d());
    ScoringContext ctx(criterion, data, opts);
    if (criterion.kind == CriterionKind::MatrixMI) {
        Eigen::MatrixXd running = Eigen::MatrixXd::Ones(data.n(), data.n());
        for (int l : selected) {
            running = running.cwiseProduct(ctx.candidate_gram(l).entries());
        }
        return ctx.matrix_mi_score(running, ctx.candidate_gram(candidate));
    }
    return discrete_score(criterion, ctx, candidate, selected);
}

SelectionTrace select(const Criterion& criterion, const Dataset& data, int k, std::uint64_t seed,
                      const SelectionOptions& opts) {
    (void)seed; // greedy selection is deterministic; kept for interface parity
    validate_dataset(data);
    const int d = data.d();
    if (k < 1 || k > d) {
        throw InputError("selection count k = " + std::to_string(k) +
                         " out of range [1, " + std::to_string(d) + "]");
    }

    ScoringContext ctx(criterion, data, opts);
    const bool matrix = criterion.kind == CriterionKind::MatrixMI;

    SelectionTrace trace;
    trace.selected.reserve(static_cast<size_t>(k));
    std::vector<char> taken(static_cast<size_t>(d), 0);

    // Incremental per-candidate aggregates for the discrete criteria; each
    // newly selected feature contributes one statistic per candidate.
    std::vector<double> red_sum(static_cast<size_t>(d), 0.0);
    std::vector<double> fou_sum(static_cast<size_t>(d), 0.0);
    std::vector<double> jmi_sum(static_cast<size_t>(d), 0.0);
    std::vector<double> cmim_min(static_cast<size_t>(d),
                                 std::numeric_limits<double>::infinity());

    Eigen::MatrixXd running;
    if (matrix) {
        running = Eigen::MatrixXd::Ones(data.n(), data.n());
    }

    for (int step = 0; step < k; ++step) {
        std::vector<int> candidates;
        candidates.reserve(static_cast<size_t>(d - step));
        for (int j = 0; j < d; ++j) {
            if (!taken[static_cast<size_t>(j)]) {
                candidates.push_back(j);
            }
        }

        std::vector<double> scores(candidates.size());
        if (matrix) {
            parallel_for(0, static_cast<int>(candidates.size()), opts.threads, [&](int idx) {
                const int j = candidates[static_cast<size_t>(idx)];
                scores[static_cast<size_t>(idx)] =
                    ctx.matrix_mi_score(running, ctx.candidate_gram(j));
            });
        } else {
            const int nsel = static_cast<int>(trace.selected.size());
            for (size_t idx = 0; idx < candidates.size(); ++idx) {
                const int j = candidates[idx];
                const double rel = ctx.relevance(j);
                double s;
                switch (criterion.kind) {
                    case CriterionKind::MIM: s = rel; break;
                    case CriterionKind::MIFS: s = rel - criterion.mifs_beta * red_sum[static_cast<size_t>(j)]; break;
                    case CriterionKind::FOU: s = rel - fou_sum[static_cast<size_t>(j)]; break;
                    case CriterionKind::MRMR:
                        s = nsel == 0 ? rel : rel - red_sum[static_cast<size_t>(j)] / nsel;
                        break;
                    case CriterionKind::JMI: s = nsel == 0 ? rel : jmi_sum[static_cast<size_t>(j)]; break;
                    case CriterionKind::CMIM: s = nsel == 0 ? rel : cmim_min[static_cast<size_t>(j)]; break;
                    default: throw ParameterError("not a discrete criterion");
                }
                scores[idx] = s;
            }
        }

        // Argmax; ties go to the lowest candidate index.
        size_t best = 0;
        for (size_t idx = 1; idx < candidates.size(); ++idx) {
            if (scores[idx] > scores[best]) {
                best = idx;
            }
        }
        const int chosen = candidates[best];
        taken[static_cast<size_t>(chosen)] = 1;
        trace.selected.push_back(chosen);
        trace.objective_values.push_back(scores[best]);
        std::vector<std::pair<int, double>> step_scores(candidates.size());
        for (size_t idx = 0; idx < candidates.size(); ++idx) {
            step_scores[idx] = {candidates[idx], scores[idx]};
        }
        trace.step_scores.push_back(std::move(step_scores));

        if (step + 1 == k) {
            break;
        }
        if (matrix) {
            running = running.cwiseProduct(ctx.candidate_gram(chosen).entries());
        } else {
            // Fold the newly selected feature into the per-candidate aggregates.
            const BinnedColumn& picked = ctx.binned(chosen);
            for (int j = 0; j < d; ++j) {
                if (taken[static_cast<size_t>(j)]) {
                    continue;
                }
                const BinnedColumn& x = ctx.binned(j);
                switch (criterion.kind) {
                    case CriterionKind::MIFS:
                    case CriterionKind::MRMR:
                        red_sum[static_cast<size_t>(j)] += shannon_mi(x, picked);
                        break;
                    case CriterionKind::FOU:
                        fou_sum[static_cast<size_t>(j)] +=
                            shannon_mi(x, picked) -
                            shannon_conditional_mi(x, picked, ctx.label());
                        break;
                    case CriterionKind::JMI:
                        jmi_sum[static_cast<size_t>(j)] += shannon_pair_mi(x, picked, ctx.label());
                        break;
                    case CriterionKind::CMIM:
                        cmim_min[static_cast<size_t>(j)] =
                            std::min(cmim_min[static_cast<size_t>(j)],
                                     shannon_conditional_mi(x, ctx.label(), picked));
                        break;
                    default:
                        break;
                }
            }
        }
    }
    return trace;
}

} // namespace mrenyi
