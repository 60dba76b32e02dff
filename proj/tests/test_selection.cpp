#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "mrenyi/discrete.hpp"
#include "mrenyi/selection.hpp"
#include "mrenyi/synth.hpp"
#include "oracles.hpp"

using namespace mrenyi;

namespace {

Dataset make_dataset(const std::vector<std::vector<double>>& columns,
                     const std::vector<int>& labels,
                     const std::vector<bool>& continuous = {}) {
    Dataset d;
    const int n = static_cast<int>(labels.size());
    const int dim = static_cast<int>(columns.size());
    d.features.resize(n, dim);
    for (int j = 0; j < dim; ++j) {
        for (int i = 0; i < n; ++i) {
            d.features(i, j) = columns[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
        d.feature_names.push_back("x" + std::to_string(j));
    }
    d.labels = labels;
    d.continuous_flags = continuous.empty() ? std::vector<bool>(static_cast<size_t>(dim), false)
                                            : continuous;
    return d;
}

// Binary labels with X0 equal to the label and one empirically independent probe.
Dataset copy_label_dataset() {
    const std::vector<int> y{0, 1, 0, 1, 0, 1, 0, 1};
    return make_dataset({{0, 1, 0, 1, 0, 1, 0, 1}, {0, 0, 1, 1, 0, 0, 1, 1}}, y);
}

} // namespace

TEST_CASE("label_gram edge cases") {
    const std::vector<int> same{2, 2, 2};
    const auto g1 = label_gram(same);
    CHECK((g1.entries() - Eigen::MatrixXd::Constant(3, 3, 1.0 / 3.0)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(entropy(g1, EntropyOrder{2.0}).bits == doctest::Approx(0.0).epsilon(1e-12));

    const std::vector<int> distinct{0, 1, 2, 3};
    const auto g2 = label_gram(distinct);
    CHECK((g2.entries() - Eigen::MatrixXd::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() == 0.0);
    CHECK(entropy(g2, EntropyOrder{1.01}).bits == doctest::Approx(2.0).epsilon(1e-10));

    const std::vector<int> blocks{0, 0, 1, 1};
    const auto g3 = label_gram(blocks);
    const auto s = spectrum(g3);
    CHECK(s.values(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s.values(1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(s.values(2)) <= 1e-12);
    for (double alpha : {0.6, 1.0, 2.0, 3.0}) {
        CHECK(entropy(g3, EntropyOrder{alpha}).bits == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("MIM scores relevance and picks the label copy first") {
    const Dataset data = copy_label_dataset();
    CHECK(score_candidate(Criterion::mim(), 0, {}, data) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(score_candidate(Criterion::mim(), 1, {}, data) == doctest::Approx(0.0).epsilon(1e-12));
    const auto trace = select(Criterion::mim(), data, 1, 1);
    CHECK(trace.selected == std::vector<int>{0});
}

TEST_CASE("CMIM and JMI fall back to relevance on the first step") {
    const Dataset data = copy_label_dataset();
    for (int c = 0; c < data.d(); ++c) {
        const double mim = score_candidate(Criterion::mim(), c, {}, data);
        CHECK(score_candidate(Criterion::cmim(), c, {}, data) == doctest::Approx(mim).epsilon(1e-14));
        CHECK(score_candidate(Criterion::jmi(), c, {}, data) == doctest::Approx(mim).epsilon(1e-14));
    }
}

TEST_CASE("MatrixMI at k = 1 equals the bivariate matrix MI") {
    std::mt19937_64 rng(21);
    const int n = 20;
    std::vector<int> labels(n);
    std::vector<std::vector<double>> cols(3, std::vector<double>(n));
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        labels[static_cast<size_t>(i)] = i % 2;
        for (auto& c : cols) {
            c[static_cast<size_t>(i)] = gauss(rng);
        }
    }
    const Dataset data = make_dataset(cols, labels, {true, true, true});
    const Criterion crit = Criterion::matrix_mi(EntropyOrder{1.01}, KernelSpec{KernelFamily::RBF, 1.0});
    const auto target = label_gram(data.labels);
    for (int c = 0; c < data.d(); ++c) {
        const auto g = gram_matrix(gram_points(data, c, true), crit.kernel);
        const double expected = mutual_information(g, target, crit.order).bits;
        CHECK(score_candidate(crit, c, {}, data) == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("MRMR discounts a duplicate of an already selected feature") {
    // X0 determines the label, X1 is an exact copy, X2 is equally relevant
    // but not redundant with X0.
    const std::vector<int> y{0, 0, 0, 0, 1, 1, 1, 1};
    const std::vector<double> x0{0, 0, 1, 1, 2, 2, 3, 3};
    const std::vector<double> x2{0, 1, 0, 1, 2, 3, 2, 3};
    const Dataset data = make_dataset({x0, x0, x2}, y);

    const auto b0 = discretize(x0, 5);
    const auto by = BinnedColumn{y, 2, true};
    const double rel = shannon_mi(b0, by);
    const double h0 = shannon_entropy(b0);
    const int selected[] = {0};
    CHECK(score_candidate(Criterion::mrmr(), 1, selected, data) ==
          doctest::Approx(rel - h0).epsilon(1e-12));
    // brute-force identity: I(X1;Y) - I(X1;X0) with X1 == X0
    CHECK(score_candidate(Criterion::mrmr(), 1, selected, data) ==
          doctest::Approx(oracle::mi_bruteforce({0, 0, 1, 1, 2, 2, 3, 3}, y, 4, 2) -
                          oracle::mi_bruteforce({0, 0, 1, 1, 2, 2, 3, 3},
                                                {0, 0, 1, 1, 2, 2, 3, 3}, 4, 4))
              .epsilon(1e-12));
    CHECK(score_candidate(Criterion::mrmr(), 2, selected, data) >
          score_candidate(Criterion::mrmr(), 1, selected, data));
}

TEST_CASE("JMI step-2 scores match the brute-force pair MI") {
    std::mt19937_64 rng(23);
    const int n = 30;
    std::vector<int> y(static_cast<size_t>(n));
    std::vector<std::vector<double>> cols(4, std::vector<double>(static_cast<size_t>(n)));
    std::uniform_int_distribution<int> code(0, 2);
    for (int i = 0; i < n; ++i) {
        y[static_cast<size_t>(i)] = code(rng) % 2;
        for (auto& c : cols) {
            c[static_cast<size_t>(i)] = code(rng);
        }
    }
    const Dataset data = make_dataset(cols, y);
    const auto trace = select(Criterion::jmi(), data, 2, 1);
    const int first = trace.selected[0];
    std::vector<int> ix(static_cast<size_t>(n)), il(static_cast<size_t>(n));
    for (const auto& [cand, score] : trace.step_scores[1]) {
        for (int i = 0; i < n; ++i) {
            ix[static_cast<size_t>(i)] = static_cast<int>(data.features(i, cand));
            il[static_cast<size_t>(i)] = static_cast<int>(data.features(i, first));
        }
        CHECK(score == doctest::Approx(oracle::pair_mi_bruteforce(ix, il, y, 3, 3, 2))
                           .epsilon(1e-12));
    }
}

TEST_CASE("every criterion picks the label copy first") {
    std::mt19937_64 rng(24);
    const int n = 40;
    std::vector<int> y(static_cast<size_t>(n));
    std::vector<std::vector<double>> cols(4, std::vector<double>(static_cast<size_t>(n)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        y[static_cast<size_t>(i)] = i % 2;
        cols[0][static_cast<size_t>(i)] = y[static_cast<size_t>(i)];
        for (size_t j = 1; j < cols.size(); ++j) {
            cols[j][static_cast<size_t>(i)] = gauss(rng);
        }
    }
    const Dataset data = make_dataset(cols, y, {false, true, true, true});
    for (const char* name : {"mim", "mifs", "fou", "mrmr", "jmi", "cmim", "matrix-mi"}) {
        const auto trace = select(Criterion::parse(name), data, 2, 7);
        CHECK(trace.selected[0] == 0);
    }
}

TEST_CASE("select with k = d yields a permutation of all indices") {
    const Dataset data = copy_label_dataset();
    const auto trace = select(Criterion::mrmr(), data, data.d(), 1);
    std::vector<int> sorted = trace.selected;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1});
}

TEST_CASE("select is deterministic and rejects bad input") {
    const Dataset data = copy_label_dataset();
    const auto a = select(Criterion::jmi(), data, 2, 99);
    const auto b = select(Criterion::jmi(), data, 2, 99);
    CHECK(a.selected == b.selected);
    CHECK(a.objective_values == b.objective_values);
    CHECK(a.step_scores == b.step_scores);

    CHECK_THROWS_AS(select(Criterion::mim(), data, 3, 1), InputError);
    CHECK_THROWS_AS(score_candidate(Criterion::mim(), 0, std::vector<int>{0}, data), InputError);

    Dataset bad = data;
    bad.features(1, 1) = std::numeric_limits<double>::quiet_NaN();
    try {
        select(Criterion::mim(), bad, 1, 1);
        CHECK(false);
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("x1") != std::string::npos);
    }
}

TEST_CASE("scaling one step's scores by a positive constant keeps the argmax") {
    std::mt19937_64 rng(25);
    const int n = 24;
    std::vector<int> y(static_cast<size_t>(n));
    std::vector<std::vector<double>> cols(5, std::vector<double>(static_cast<size_t>(n)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        y[static_cast<size_t>(i)] = i % 2;
        for (auto& c : cols) {
            c[static_cast<size_t>(i)] = gauss(rng) + (&c == &cols[0] ? y[static_cast<size_t>(i)] : 0.0);
        }
    }
    const Dataset data = make_dataset(cols, y, std::vector<bool>(5, true));
    for (const char* name : {"mim", "mrmr", "matrix-mi"}) {
        const auto trace = select(Criterion::parse(name), data, 3, 1);
        for (size_t step = 0; step < trace.step_scores.size(); ++step) {
            for (double factor : {0.5, 3.7}) {
                int best = trace.step_scores[step].front().first;
                double best_score = trace.step_scores[step].front().second * factor;
                for (const auto& [cand, score] : trace.step_scores[step]) {
                    if (score * factor > best_score) {
                        best = cand;
                        best_score = score * factor;
                    }
                }
                CHECK(best == trace.selected[step]);
            }
        }
    }
}

TEST_CASE("MatrixMI objective values are nondecreasing") {
    std::mt19937_64 rng(26);
    const int n = 30;
    std::vector<int> y(static_cast<size_t>(n));
    std::vector<std::vector<double>> cols(6, std::vector<double>(static_cast<size_t>(n)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        y[static_cast<size_t>(i)] = i % 3;
        for (size_t j = 0; j < cols.size(); ++j) {
            cols[j][static_cast<size_t>(i)] =
                gauss(rng) + (j < 2 ? 0.8 * y[static_cast<size_t>(i)] : 0.0);
        }
    }
    const Dataset data = make_dataset(cols, y, std::vector<bool>(6, true));
    const auto trace = select(Criterion::matrix_mi(EntropyOrder{1.01}, KernelSpec{}), data, 6, 1);
    for (size_t s = 1; s < trace.objective_values.size(); ++s) {
        CHECK(trace.objective_values[s] >= trace.objective_values[s - 1] - 1e-8);
    }
}

TEST_CASE("select and score_candidate agree across the incremental caches") {
    std::mt19937_64 rng(27);
    const int n = 20;
    std::vector<int> y(static_cast<size_t>(n));
    std::vector<std::vector<double>> cols(4, std::vector<double>(static_cast<size_t>(n)));
    std::uniform_int_distribution<int> code(0, 3);
    for (int i = 0; i < n; ++i) {
        y[static_cast<size_t>(i)] = code(rng) % 2;
        for (auto& c : cols) {
            c[static_cast<size_t>(i)] = code(rng);
        }
    }
    const Dataset data = make_dataset(cols, y);
    for (const char* name : {"mifs", "fou", "mrmr", "jmi", "cmim"}) {
        const Criterion crit = Criterion::parse(name);
        const auto trace = select(crit, data, 3, 1);
        for (size_t step = 0; step < trace.step_scores.size(); ++step) {
            const std::span<const int> sel(trace.selected.data(), step);
            for (const auto& [cand, score] : trace.step_scores[step]) {
                CHECK(score == doctest::Approx(score_candidate(crit, cand, sel, data))
                                   .epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("MatrixMI recovers structure on a desk-scale synthetic run") {
    const auto synth = generate_madelon_like(madelon_desk_preset(3));
    const auto trace = select(Criterion::matrix_mi(EntropyOrder{1.01}, KernelSpec{}),
                              synth.data, 5, 3);
    int good = 0;
    for (int idx : trace.selected) {
        if (synth.roles[static_cast<size_t>(idx)] != ColumnRole::Probe) {
            ++good;
        }
    }
    CHECK(good >= 4);
}
