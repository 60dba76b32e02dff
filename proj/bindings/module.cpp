#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "mrenyi/discrete.hpp"
#include "mrenyi/eval.hpp"
#include "mrenyi/selection.hpp"
#include "mrenyi/spectral.hpp"
#include "mrenyi/synth.hpp"

namespace py = pybind11;
using namespace mrenyi;

namespace {

NormalizedGram as_gram(const Eigen::MatrixXd& entries) {
    return NormalizedGram(entries);
}

std::vector<NormalizedGram> as_grams(const std::vector<Eigen::MatrixXd>& entries) {
    std::vector<NormalizedGram> out;
    out.reserve(entries.size());
    for (const auto& m : entries) {
        out.emplace_back(m);
    }
    return out;
}

BinnedColumn as_binned(const std::vector<int>& codes) {
    if (codes.empty()) {
        throw InputError("codes must be non-empty");
    }
    const int lo = *std::min_element(codes.begin(), codes.end());
    if (lo < 0) {
        throw InputError("codes must be nonnegative");
    }
    const int m = 1 + *std::max_element(codes.begin(), codes.end());
    return BinnedColumn{codes, m, false};
}

SigmaRule parse_rule(const std::string& rule, double param) {
    if (rule == "fixed") {
        return SigmaRule::fixed(param);
    }
    if (rule == "silverman") {
        return SigmaRule::silverman();
    }
    if (rule == "range-fraction") {
        return SigmaRule::range_fraction(param);
    }
    throw ParameterError("unknown sigma rule '" + rule + "'");
}

Dataset make_dataset(const Eigen::MatrixXd& features, const std::vector<int>& labels) {
    Dataset d;
    d.features = features;
    d.labels = labels;
    for (int j = 0; j < d.d(); ++j) {
        d.feature_names.push_back("f" + std::to_string(j));
        const auto col = d.features.col(j);
        const std::vector<double> values(col.data(), col.data() + col.size());
        d.continuous_flags.push_back(!detect_categorical(values, 5));
    }
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Matrix-based Renyi alpha-order entropy, multivariate information "
              "measures, and information-theoretic feature selection";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    m.def(
        "rbf_kernel",
        [](const Eigen::VectorXd& x, const Eigen::VectorXd& y, double sigma) {
            return rbf_kernel(x, y, KernelSpec{KernelFamily::RBF, sigma});
        },
        py::arg("x"), py::arg("y"), py::arg("sigma") = 1.0);

    m.def(
        "gram_matrix",
        [](const Eigen::MatrixXd& points, double sigma) {
            return gram_matrix(points, KernelSpec{KernelFamily::RBF, sigma}).entries();
        },
        py::arg("points"), py::arg("sigma") = 1.0,
        "Trace-normalized RBF Gram matrix over the rows of `points`.");

    m.def(
        "label_gram",
        [](const std::vector<int>& labels) { return label_gram(labels).entries(); },
        py::arg("labels"), "Kronecker-delta Gram over class codes.");

    m.def(
        "sigma_heuristic",
        [](const Eigen::MatrixXd& data, const std::string& rule, double param) {
            const auto est = sigma_heuristic(data, parse_rule(rule, param));
            return py::make_tuple(est.value, est.degenerate);
        },
        py::arg("data"), py::arg("rule") = "silverman", py::arg("param") = 1.0,
        "Returns (sigma, degenerate_flag).");

    m.def(
        "spectrum",
        [](const Eigen::MatrixXd& gram) { return spectrum(as_gram(gram)).values; },
        py::arg("gram"), "Clamped, renormalized eigenvalues in descending order.");

    m.def(
        "entropy",
        [](const Eigen::MatrixXd& gram, double alpha) {
            return entropy(as_gram(gram), EntropyOrder{alpha}).bits;
        },
        py::arg("gram"), py::arg("alpha") = 1.01);

    m.def(
        "joint_entropy",
        [](const std::vector<Eigen::MatrixXd>& grams, double alpha) {
            return joint_entropy(as_grams(grams), EntropyOrder{alpha}).bits;
        },
        py::arg("grams"), py::arg("alpha") = 1.01);

    m.def(
        "conditional_entropy",
        [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double alpha) {
            return conditional_entropy(as_gram(a), as_gram(b), EntropyOrder{alpha}).bits;
        },
        py::arg("a"), py::arg("b"), py::arg("alpha") = 1.01);

    m.def(
        "mutual_information",
        [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double alpha) {
            return mutual_information(as_gram(a), as_gram(b), EntropyOrder{alpha}).bits;
        },
        py::arg("a"), py::arg("b"), py::arg("alpha") = 1.01);

    m.def(
        "multivariate_mi",
        [](const Eigen::MatrixXd& target, const std::vector<Eigen::MatrixXd>& features,
           double alpha) {
            return multivariate_mi(as_gram(target), as_grams(features), EntropyOrder{alpha}).bits;
        },
        py::arg("target"), py::arg("features"), py::arg("alpha") = 1.01);

    m.def(
        "interaction_information",
        [](const std::vector<Eigen::MatrixXd>& grams, double alpha) {
            return interaction_information(as_grams(grams), EntropyOrder{alpha}).bits;
        },
        py::arg("grams"), py::arg("alpha") = 1.01);

    m.def(
        "co_information",
        [](const std::vector<Eigen::MatrixXd>& grams, double alpha) {
            return co_information(as_grams(grams), EntropyOrder{alpha}).bits;
        },
        py::arg("grams"), py::arg("alpha") = 1.01);

    m.def(
        "total_correlation",
        [](const std::vector<Eigen::MatrixXd>& grams, double alpha) {
            return total_correlation(as_grams(grams), EntropyOrder{alpha}).bits;
        },
        py::arg("grams"), py::arg("alpha") = 1.01);

    m.def(
        "discretize",
        [](const std::vector<double>& column, int bins) {
            const auto b = discretize(column, bins);
            return py::make_tuple(b.codes, b.m, b.was_categorical);
        },
        py::arg("column"), py::arg("bins") = 5,
        "Returns (codes, bin_count, was_categorical).");

    m.def(
        "shannon_entropy",
        [](const std::vector<int>& x) { return shannon_entropy(as_binned(x)); }, py::arg("x"));
    m.def(
        "shannon_mi",
        [](const std::vector<int>& x, const std::vector<int>& y) {
            return shannon_mi(as_binned(x), as_binned(y));
        },
        py::arg("x"), py::arg("y"));
    m.def(
        "shannon_conditional_mi",
        [](const std::vector<int>& x, const std::vector<int>& y, const std::vector<int>& z) {
            return shannon_conditional_mi(as_binned(x), as_binned(y), as_binned(z));
        },
        py::arg("x"), py::arg("y"), py::arg("z"));
    m.def(
        "shannon_pair_mi",
        [](const std::vector<int>& x1, const std::vector<int>& x2, const std::vector<int>& y) {
            return shannon_pair_mi(as_binned(x1), as_binned(x2), as_binned(y));
        },
        py::arg("x1"), py::arg("x2"), py::arg("y"));

    m.def(
        "select",
        [](const Eigen::MatrixXd& features, const std::vector<int>& labels,
           const std::string& method, int k, double alpha, double sigma, int bins,
           double mifs_beta, bool standardize, std::uint64_t seed, int threads) {
            Criterion criterion = Criterion::parse(method);
            if (criterion.kind == CriterionKind::MIFS) {
                criterion = Criterion::mifs(mifs_beta);
            } else if (criterion.kind == CriterionKind::MatrixMI) {
                criterion = Criterion::matrix_mi(EntropyOrder{alpha},
                                                 KernelSpec{KernelFamily::RBF, sigma});
            }
            SelectionOptions opts;
            opts.bins = bins;
            opts.standardize = standardize;
            opts.threads = threads;
            const Dataset data = make_dataset(features, labels);
            const auto trace = select(criterion, data, k, seed, opts);
            py::dict out;
            out["selected"] = trace.selected;
            out["objective_values"] = trace.objective_values;
            out["step_scores"] = trace.step_scores;
            return out;
        },
        py::arg("features"), py::arg("labels"), py::arg("method") = "matrix-mi",
        py::arg("k") = 5, py::arg("alpha") = 1.01, py::arg("sigma") = 1.0, py::arg("bins") = 5,
        py::arg("mifs_beta") = 1.0, py::arg("standardize") = true, py::arg("seed") = 1,
        py::arg("threads") = 0,
        "Greedy forward feature selection; returns selected indices, the "
        "winning score per step, and all candidate scores.");

    m.def(
        "score_candidate",
        [](const Eigen::MatrixXd& features, const std::vector<int>& labels,
           const std::string& method, int candidate, const std::vector<int>& selected,
           double alpha, double sigma, int bins) {
            Criterion criterion = Criterion::parse(method);
            if (criterion.kind == CriterionKind::MatrixMI) {
                criterion = Criterion::matrix_mi(EntropyOrder{alpha},
                                                 KernelSpec{KernelFamily::RBF, sigma});
            }
            SelectionOptions opts;
            opts.bins = bins;
            return score_candidate(criterion, candidate, selected, make_dataset(features, labels),
                                   opts);
        },
        py::arg("features"), py::arg("labels"), py::arg("method"), py::arg("candidate"),
        py::arg("selected"), py::arg("alpha") = 1.01, py::arg("sigma") = 1.0,
        py::arg("bins") = 5);

    m.def(
        "generate_madelon_like",
        [](int n, int informative, int combinations, int probes, int clusters,
           double noise_scale, std::uint64_t seed) {
            MadelonConfig cfg;
            cfg.n = n;
            cfg.informative = informative;
            cfg.combinations = combinations;
            cfg.probes = probes;
            cfg.clusters_per_hypercube = clusters;
            cfg.noise_scale = noise_scale;
            cfg.seed = seed;
            const auto synth = generate_madelon_like(cfg);
            std::vector<std::string> roles;
            roles.reserve(synth.roles.size());
            for (auto role : synth.roles) {
                roles.push_back(role_name(role));
            }
            py::dict out;
            out["features"] = synth.data.features;
            out["labels"] = synth.data.labels;
            out["roles"] = roles;
            out["names"] = synth.data.feature_names;
            return out;
        },
        py::arg("n") = 200, py::arg("informative") = 5, py::arg("combinations") = 5,
        py::arg("probes") = 20, py::arg("clusters") = 0, py::arg("noise_scale") = 0.4,
        py::arg("seed") = 1,
        "Hypercube-cluster synthetic dataset with informative, combination and "
        "probe columns.");

    m.def(
        "knn_classify",
        [](const Eigen::MatrixXd& train_x, const std::vector<int>& train_y,
           const Eigen::MatrixXd& test_x, int k) {
            return knn_classify(train_x, train_y, test_x, k);
        },
        py::arg("train_x"), py::arg("train_y"), py::arg("test_x"), py::arg("k") = 3);

    m.def("nemenyi_cd", &nemenyi_cd, py::arg("num_methods"), py::arg("num_datasets"),
          py::arg("significance") = 0.05);
}
