#include "mrenyi/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace mrenyi {

std::string role_name(ColumnRole role) {
    switch (role) {
        case ColumnRole::Informative: return "informative";
        case ColumnRole::Combination: return "combination";
        case ColumnRole::Probe: return "probe";
    }
    return "?";
}

SyntheticDataset generate_madelon_like(const MadelonConfig& cfg) {
    if (cfg.n < 2) {
        throw InputError("generator needs n >= 2");
    }
    if (cfg.informative < 1 || cfg.informative > 25) {
        throw InputError("informative count must be in [1, 25]");
    }
    if (cfg.combinations < 0 || cfg.probes < 0) {
        throw InputError("combination and probe counts must be >= 0");
    }
    if (!(cfg.noise_scale > 0.0)) {
        throw ParameterError("noise_scale must be > 0");
    }
    const std::int64_t vertex_count = std::int64_t{1} << cfg.informative;
    int clusters = cfg.clusters_per_hypercube;
    if (clusters == 0) {
        clusters = static_cast<int>(std::min<std::int64_t>(vertex_count, 1 << 20));
    }
    if (clusters < 2 || clusters > vertex_count) {
        throw InputError("cluster count must be in [2, 2^informative]");
    }

    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    // Pick distinct vertices for the cluster centers.
    std::vector<std::int64_t> vertices(static_cast<size_t>(vertex_count));
    std::iota(vertices.begin(), vertices.end(), std::int64_t{0});
    std::shuffle(vertices.begin(), vertices.end(), rng);
    vertices.resize(static_cast<size_t>(clusters));

    // Balanced random +/- labels across clusters.
    std::vector<int> cluster_label(static_cast<size_t>(clusters));
    for (int c = 0; c < clusters; ++c) {
        cluster_label[static_cast<size_t>(c)] = c % 2;
    }
    std::shuffle(cluster_label.begin(), cluster_label.end(), rng);

    const int d = cfg.informative + cfg.combinations + cfg.probes;
    Eigen::MatrixXd informative(cfg.n, cfg.informative);
    std::vector<int> labels(static_cast<size_t>(cfg.n));
    std::uniform_int_distribution<int> pick_cluster(0, clusters - 1);
    for (int i = 0; i < cfg.n; ++i) {
        const int c = pick_cluster(rng);
        labels[static_cast<size_t>(i)] = cluster_label[static_cast<size_t>(c)];
        const std::int64_t vertex = vertices[static_cast<size_t>(c)];
        for (int j = 0; j < cfg.informative; ++j) {
            const double center = (vertex >> j) & 1 ? 1.0 : -1.0;
            informative(i, j) = center + cfg.noise_scale * gauss(rng);
        }
    }

    // Guarantee two classes even at tiny n: re-draw sample 0 from a cluster
    // of the missing class.
    if (std::count(labels.begin(), labels.end(), labels[0]) == cfg.n) {
        const int want = 1 - labels[0];
        for (int c = 0; c < clusters; ++c) {
            if (cluster_label[static_cast<size_t>(c)] == want) {
                labels[0] = want;
                const std::int64_t vertex = vertices[static_cast<size_t>(c)];
                for (int j = 0; j < cfg.informative; ++j) {
                    const double center = (vertex >> j) & 1 ? 1.0 : -1.0;
                    informative(0, j) = center + cfg.noise_scale * gauss(rng);
                }
                break;
            }
        }
    }

    Eigen::MatrixXd columns(cfg.n, d);
    columns.leftCols(cfg.informative) = informative;
    for (int j = 0; j < cfg.combinations; ++j) {
        Eigen::VectorXd coeff(cfg.informative);
        for (int t = 0; t < cfg.informative; ++t) {
            coeff(t) = gauss(rng);
        }
        coeff.normalize();
        columns.col(cfg.informative + j) = informative * coeff;
    }
    for (int j = 0; j < cfg.probes; ++j) {
        for (int i = 0; i < cfg.n; ++i) {
            columns(i, cfg.informative + cfg.combinations + j) = gauss(rng);
        }
    }

    std::vector<ColumnRole> base_roles;
    base_roles.insert(base_roles.end(), static_cast<size_t>(cfg.informative), ColumnRole::Informative);
    base_roles.insert(base_roles.end(), static_cast<size_t>(cfg.combinations), ColumnRole::Combination);
    base_roles.insert(base_roles.end(), static_cast<size_t>(cfg.probes), ColumnRole::Probe);

    std::vector<int> order(static_cast<size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    SyntheticDataset out;
    out.data.features.resize(cfg.n, d);
    out.roles.resize(static_cast<size_t>(d));
    out.data.feature_names.resize(static_cast<size_t>(d));
    out.data.continuous_flags.assign(static_cast<size_t>(d), true);
    for (int j = 0; j < d; ++j) {
        out.data.features.col(j) = columns.col(order[static_cast<size_t>(j)]);
        out.roles[static_cast<size_t>(j)] = base_roles[static_cast<size_t>(order[static_cast<size_t>(j)])];
        char name[16];
        std::snprintf(name, sizeof(name), "f%03d", j);
        out.data.feature_names[static_cast<size_t>(j)] = name;
    }
    out.data.labels = std::move(labels);
    return out;
}

MadelonConfig madelon_desk_preset(std::uint64_t seed) {
    MadelonConfig cfg;
    cfg.n = 200;
    cfg.informative = 5;
    cfg.combinations = 5;
    cfg.probes = 20;
    cfg.seed = seed;
    return cfg;
}

MadelonConfig madelon_paper_preset(std::uint64_t seed) {
    MadelonConfig cfg;
    cfg.n = 2000;
    cfg.informative = 5;
    cfg.combinations = 15;
    cfg.probes = 480;
    cfg.seed = seed;
    return cfg;
}

} // namespace mrenyi
