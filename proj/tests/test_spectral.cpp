#include <doctest.h>

#include <random>
#include <vector>

#include "mrenyi/selection.hpp"
#include "mrenyi/spectral.hpp"
#include "oracles.hpp"

using namespace mrenyi;

namespace {

NormalizedGram gram2x2(double off) {
    Eigen::MatrixXd m(2, 2);
    m << 0.5, off, off, 0.5;
    return NormalizedGram(m);
}

NormalizedGram identity_gram(int n) {
    return NormalizedGram(Eigen::MatrixXd::Identity(n, n) / n);
}

NormalizedGram ones_gram(int n) {
    return NormalizedGram(Eigen::MatrixXd::Constant(n, n, 1.0 / n));
}

// Frozen from the 2x2 eigenvalue oracle run before the implementation:
// A = [[0.5, 0.25], [0.25, 0.5]] has spectrum (0.75, 0.25);
// A joint A has spectrum (0.625, 0.375).
constexpr double kS2A = 0.6780719051126377;      // -log2(0.75^2 + 0.25^2)
constexpr double kS2AA = 0.9125371587496606;     // -log2(0.625^2 + 0.375^2)
constexpr double kI2AA = 2.0 * kS2A - kS2AA;     // 0.4436066514756148
constexpr double kShannonA = 0.8112781244591328; // H(0.75, 0.25)

} // namespace

TEST_CASE("frozen constants agree with the closed-form 2x2 oracle") {
    const auto ev = oracle::eig2(0.5, 0.25, 0.5);
    CHECK(ev[0] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(ev[1] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(oracle::renyi_bits(ev, 2.0) == doctest::Approx(kS2A).epsilon(1e-15));
    CHECK(oracle::renyi_bits(ev, 1.0) == doctest::Approx(kShannonA).epsilon(1e-15));
    const auto joint = oracle::eig2(0.5, 0.125, 0.5);
    CHECK(oracle::renyi_bits(joint, 2.0) == doctest::Approx(kS2AA).epsilon(1e-15));
}

TEST_CASE("spectrum of identity/n is uniform") {
    const auto s = spectrum(identity_gram(4));
    for (int i = 0; i < 4; ++i) {
        CHECK(s.values(i) == doctest::Approx(0.25).epsilon(1e-12));
    }
}

TEST_CASE("spectrum of the all-1/n matrix is rank one") {
    const auto s = spectrum(ones_gram(3));
    CHECK(s.values(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(s.values(1)) <= 1e-12);
    CHECK(std::abs(s.values(2)) <= 1e-12);
}

TEST_CASE("spectrum matches the closed-form 2x2 oracle") {
    const auto s = spectrum(gram2x2(0.25));
    CHECK(s.values(0) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(s.values(1) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(s.values.sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spectrum matches the closed-form 3x3 oracle on random grams") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 50; ++rep) {
        const auto g = oracle::random_gram(rng, 3);
        const auto s = spectrum(g);
        Eigen::Matrix3d m = g.entries();
        const auto expected = oracle::eig3(m);
        for (int i = 0; i < 3; ++i) {
            CHECK(s.values(i) == doctest::Approx(expected[static_cast<size_t>(i)]).epsilon(1e-9));
        }
    }
}

TEST_CASE("entropy of a uniform spectrum is log2 n for every order") {
    Spectrum s{Eigen::VectorXd::Constant(4, 0.25)};
    for (double alpha : {0.6, 1.0, 1.01, 2.0, 3.0}) {
        CHECK(entropy(s, EntropyOrder{alpha}).bits == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("entropy of a pure spectrum is zero") {
    Eigen::VectorXd v(3);
    v << 1.0, 0.0, 0.0;
    for (double alpha : {0.6, 1.0, 2.0}) {
        CHECK(entropy(Spectrum{v}, EntropyOrder{alpha}).bits == 0.0);
    }
}

TEST_CASE("entropy matches the hand-evaluated values on (0.75, 0.25)") {
    Eigen::VectorXd v(2);
    v << 0.75, 0.25;
    CHECK(entropy(Spectrum{v}, EntropyOrder{2.0}).bits == doctest::Approx(kS2A).epsilon(1e-12));
    CHECK(entropy(Spectrum{v}, EntropyOrder{1.0}).bits ==
          doctest::Approx(kShannonA).epsilon(1e-12));
    CHECK(entropy(Spectrum{v}, EntropyOrder{1.0 + 1e-9}).bits ==
          doctest::Approx(kShannonA).epsilon(1e-9));
}

TEST_CASE("entropy rejects non-positive alpha") {
    Eigen::VectorXd v(2);
    v << 0.5, 0.5;
    CHECK_THROWS_AS(entropy(Spectrum{v}, EntropyOrder{0.0}), ParameterError);
    CHECK_THROWS_AS(entropy(Spectrum{v}, EntropyOrder{-2.0}), ParameterError);
}

TEST_CASE("joint_gram with one input returns it unchanged") {
    const auto g = gram2x2(0.25);
    const std::vector<NormalizedGram> one{g};
    const auto j = joint_gram(one);
    CHECK((j.entries() - g.entries()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("joint_gram squares and renormalizes") {
    const auto g = gram2x2(0.25);
    const std::vector<NormalizedGram> two{g, g};
    const auto j = joint_gram(two);
    CHECK(j.entries()(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(j.entries()(0, 1) == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("joint_gram with identity/n yields identity/n") {
    std::mt19937_64 rng(5);
    const auto g = oracle::random_gram(rng, 6);
    const std::vector<NormalizedGram> pair{g, identity_gram(6)};
    const auto j = joint_gram(pair);
    CHECK((j.entries() - Eigen::MatrixXd::Identity(6, 6) / 6.0).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("joint_gram rejects size mismatches") {
    const std::vector<NormalizedGram> bad{gram2x2(0.25), identity_gram(3)};
    CHECK_THROWS_AS(joint_gram(bad), InputError);
}

TEST_CASE("joint entropy of the derived 2x2 chain") {
    const auto g = gram2x2(0.25);
    const std::vector<NormalizedGram> two{g, g};
    CHECK(joint_entropy(two, EntropyOrder{2.0}).bits == doctest::Approx(kS2AA).epsilon(1e-9));
}

TEST_CASE("joint entropy with identity/n saturates at log2 n") {
    std::mt19937_64 rng(6);
    const auto g = oracle::random_gram(rng, 8);
    const std::vector<NormalizedGram> pair{g, identity_gram(8)};
    for (double alpha : {0.6, 1.01, 2.0}) {
        CHECK(joint_entropy(pair, EntropyOrder{alpha}).bits ==
              doctest::Approx(3.0).epsilon(1e-10));
    }
}

TEST_CASE("joint entropy of rank-one matrices stays zero") {
    const std::vector<NormalizedGram> all{ones_gram(5), ones_gram(5), ones_gram(5)};
    CHECK(joint_entropy(all, EntropyOrder{1.01}).bits == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("conditional entropy identities") {
    const auto g = gram2x2(0.25);
    CHECK(conditional_entropy(g, g, EntropyOrder{2.0}).bits ==
          doctest::Approx(kS2AA - kS2A).epsilon(1e-9));
    // conditioning on a zero-entropy matrix changes nothing
    std::mt19937_64 rng(8);
    const auto a = oracle::random_gram(rng, 7);
    CHECK(conditional_entropy(a, ones_gram(7), EntropyOrder{1.01}).bits ==
          doctest::Approx(entropy(a, EntropyOrder{1.01}).bits).epsilon(1e-10));
    CHECK(conditional_entropy(ones_gram(7), a, EntropyOrder{1.01}).bits ==
          doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("mutual information identities") {
    const auto g = gram2x2(0.25);
    CHECK(mutual_information(g, g, EntropyOrder{2.0}).bits ==
          doctest::Approx(kI2AA).epsilon(1e-9));
    std::mt19937_64 rng(9);
    const auto a = oracle::random_gram(rng, 6);
    // the trace-normalized identity acts as a maximally informative partner
    CHECK(mutual_information(a, identity_gram(6), EntropyOrder{2.0}).bits ==
          doctest::Approx(entropy(a, EntropyOrder{2.0}).bits).epsilon(1e-9));
    CHECK(mutual_information(ones_gram(6), ones_gram(6), EntropyOrder{2.0}).bits ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("multivariate MI reduces to bivariate MI at k = 1") {
    std::mt19937_64 rng(10);
    const auto a = oracle::random_gram(rng, 9);
    const auto b = oracle::random_gram(rng, 9);
    const std::vector<NormalizedGram> one{a};
    for (double alpha : {0.6, 1.01, 2.0, 3.0}) {
        CHECK(multivariate_mi(b, one, EntropyOrder{alpha}).bits ==
              doctest::Approx(mutual_information(a, b, EntropyOrder{alpha}).bits)
                  .epsilon(1e-12));
    }
}

TEST_CASE("multivariate MI with a zero-entropy target is zero") {
    std::mt19937_64 rng(12);
    const std::vector<NormalizedGram> feats{oracle::random_gram(rng, 7),
                                            oracle::random_gram(rng, 7)};
    CHECK(multivariate_mi(ones_gram(7), feats, EntropyOrder{1.01}).bits ==
          doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("multivariate MI grows when adding the informative feature") {
    // X1 carries the label column itself; X2 is independent noise.
    std::mt19937_64 rng(42);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n = 50;
    Eigen::MatrixXd y_col(n, 1);
    Eigen::MatrixXd noise(n, 1);
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[static_cast<size_t>(i)] = i % 2;
        y_col(i, 0) = labels[static_cast<size_t>(i)];
        noise(i, 0) = gauss(rng);
    }
    const KernelSpec unit{KernelFamily::RBF, 1.0};
    const auto gx1 = gram_matrix(y_col, unit);
    const auto gx2 = gram_matrix(noise, unit);
    const auto target = label_gram(labels);
    const EntropyOrder order{1.01};
    const std::vector<NormalizedGram> both{gx1, gx2};
    const std::vector<NormalizedGram> just_noise{gx2};
    CHECK(multivariate_mi(target, both, order).bits >=
          multivariate_mi(target, just_noise, order).bits);
}

TEST_CASE("multivariate MI rejects an empty feature list") {
    std::mt19937_64 rng(1);
    const auto a = oracle::random_gram(rng, 4);
    CHECK_THROWS_AS(multivariate_mi(a, std::vector<NormalizedGram>{}, EntropyOrder{1.01}),
                    InputError);
}

TEST_CASE("interaction information reduces to MI at k = 2") {
    std::mt19937_64 rng(14);
    const auto a = oracle::random_gram(rng, 8);
    const auto b = oracle::random_gram(rng, 8);
    const std::vector<NormalizedGram> pair{a, b};
    for (double alpha : {0.6, 1.01, 2.0}) {
        CHECK(interaction_information(pair, EntropyOrder{alpha}).bits ==
              doctest::Approx(mutual_information(a, b, EntropyOrder{alpha}).bits)
                  .epsilon(1e-12));
    }
}

TEST_CASE("interaction information at k = 3 equals the entropy expansion") {
    std::mt19937_64 rng(15);
    const auto a = oracle::random_gram(rng, 8);
    const auto b = oracle::random_gram(rng, 8);
    const auto c = oracle::random_gram(rng, 8);
    const EntropyOrder order{1.01};
    auto joint = [&](std::vector<NormalizedGram> gs) { return joint_entropy(gs, order).bits; };
    const double expansion = -(joint({a}) + joint({b}) + joint({c})) +
                             (joint({a, b}) + joint({a, c}) + joint({b, c})) -
                             joint({a, b, c});
    const std::vector<NormalizedGram> all{a, b, c};
    CHECK(interaction_information(all, order).bits ==
          doctest::Approx(expansion).epsilon(1e-10));
}

TEST_CASE("interaction information of zero-entropy inputs is zero") {
    const std::vector<NormalizedGram> all{ones_gram(4), ones_gram(4), ones_gram(4)};
    CHECK(interaction_information(all, EntropyOrder{2.0}).bits ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("interaction quantities refuse k below 2 and k of 20 or more") {
    std::mt19937_64 rng(16);
    const std::vector<NormalizedGram> one{oracle::random_gram(rng, 4)};
    CHECK_THROWS_AS(interaction_information(one, EntropyOrder{1.01}), InputError);
    std::vector<NormalizedGram> many;
    for (int i = 0; i < 20; ++i) {
        many.push_back(ones_gram(2));
    }
    CHECK_THROWS_AS(interaction_information(many, EntropyOrder{1.01}), InputError);
    CHECK_THROWS_AS(co_information(many, EntropyOrder{1.01}), InputError);
}

TEST_CASE("co-information equals (-1)^k times interaction information exactly") {
    std::mt19937_64 rng(17);
    for (int k = 2; k <= 5; ++k) {
        std::vector<NormalizedGram> grams;
        for (int i = 0; i < k; ++i) {
            grams.push_back(oracle::random_gram(rng, 6));
        }
        const double ii = interaction_information(grams, EntropyOrder{1.01}).bits;
        const double ci = co_information(grams, EntropyOrder{1.01}).bits;
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        CHECK(ci == sign * ii); // identical terms, only the sign reordered
    }
}

TEST_CASE("total correlation identities") {
    std::mt19937_64 rng(18);
    const auto a = oracle::random_gram(rng, 7);
    const auto b = oracle::random_gram(rng, 7);
    const std::vector<NormalizedGram> one{a};
    CHECK(total_correlation(one, EntropyOrder{2.0}).bits == 0.0);
    const std::vector<NormalizedGram> pair{a, b};
    CHECK(total_correlation(pair, EntropyOrder{2.0}).bits ==
          doctest::Approx(mutual_information(a, b, EntropyOrder{2.0}).bits).epsilon(1e-12));
    const auto g = gram2x2(0.25);
    const std::vector<NormalizedGram> gg{g, g};
    CHECK(total_correlation(gg, EntropyOrder{2.0}).bits ==
          doctest::Approx(kI2AA).epsilon(1e-9));
}

// Subadditivity of the joint entropy holds for alpha <= 1 but genuinely
// fails for alpha > 1 on valid inputs (a 4x4 counterexample violates it by
// 0.02 bits at alpha = 2). The monotone lower bounds hold at every order.
TEST_CASE("subadditivity (alpha <= 1.01) and monotonicity of the joint entropy") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> nd(5, 20);
    std::uniform_int_distribution<int> kd(2, 5);
    for (int rep = 0; rep < 25; ++rep) {
        const int n = nd(rng);
        const int k = kd(rng);
        std::vector<NormalizedGram> grams;
        for (int i = 0; i < k; ++i) {
            grams.push_back(oracle::random_gram(rng, n));
        }
        std::uniform_int_distribution<int> cut(1, k - 1);
        const int split = cut(rng);
        const std::vector<NormalizedGram> left(grams.begin(), grams.begin() + split);
        const std::vector<NormalizedGram> right(grams.begin() + split, grams.end());
        const auto target = oracle::random_gram(rng, n);
        for (double alpha : {0.6, 1.01, 2.0, 3.0}) {
            const EntropyOrder order{alpha};
            const double all = joint_entropy(grams, order).bits;
            const double hl = joint_entropy(left, order).bits;
            const double hr = joint_entropy(right, order).bits;
            double marginal_sum = 0.0;
            double marginal_max = 0.0;
            for (const auto& g : grams) {
                const double h = entropy(g, order).bits;
                marginal_sum += h;
                marginal_max = std::max(marginal_max, h);
            }
            CHECK(all + 1e-8 >= std::max(hl, hr));
            CHECK(all + 1e-8 >= marginal_max);
            if (alpha <= 1.01) {
                CHECK(all <= hl + hr + 1e-8);
                CHECK(all <= marginal_sum + 1e-8);
                CHECK(multivariate_mi(target, grams, order).bits >= -1e-8);
                CHECK(total_correlation(grams, order).bits >= -1e-8);
            }
        }
    }
}

TEST_CASE("subadditivity fails above alpha = 1 on a concrete counterexample") {
    // Two 4-sample RBF grams with mismatched bandwidths; pinned so the
    // acceptance-suite finding stays visible here.
    Eigen::MatrixXd xa(4, 1);
    xa << 0.5888422596395486, 2.2708863133824324, -0.8253040317638951, 0.8084095930822921;
    Eigen::MatrixXd xb(4, 1);
    xb << -0.3181439730310917, 1.855783263371278, 1.7004401213924243, -1.9542111820067407;
    const auto a = gram_matrix(xa, KernelSpec{KernelFamily::RBF, 4.644167582184591});
    const auto b = gram_matrix(xb, KernelSpec{KernelFamily::RBF, 0.46075896985161824});
    const std::vector<NormalizedGram> pair{a, b};
    const double gap = entropy(a, EntropyOrder{2.0}).bits + entropy(b, EntropyOrder{2.0}).bits -
                       joint_entropy(pair, EntropyOrder{2.0}).bits;
    CHECK(gap < -0.01); // mutual information is negative here
    CHECK(mutual_information(a, b, EntropyOrder{2.0}).bits < -0.01);
}

TEST_CASE("entropy is nonincreasing in alpha and bounded by log2 n") {
    std::mt19937_64 rng(20);
    std::uniform_int_distribution<int> nd(2, 30);
    for (int rep = 0; rep < 40; ++rep) {
        const int n = nd(rng);
        const auto s = spectrum(oracle::random_gram(rng, n));
        double prev = std::numeric_limits<double>::infinity();
        for (double alpha : {0.5, 1.0, 1.5, 2.0, 3.0, 4.0}) {
            const double h = entropy(s, EntropyOrder{alpha}).bits;
            CHECK(h >= 0.0);
            CHECK(h <= std::log2(static_cast<double>(n)) + 1e-8);
            CHECK(h <= prev + 1e-10);
            prev = h;
        }
    }
}

TEST_CASE("spectrum rejects badly non-PSD input via NumericalError") {
    Eigen::MatrixXd m(2, 2);
    m << 0.5, 0.7, 0.7, 0.5; // eigenvalue 0.5 - 0.7 < -1e-9
    CHECK_THROWS_AS(spectrum(NormalizedGram(m)), NumericalError);
}
