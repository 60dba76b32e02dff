#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mrenyi/dataset.hpp"

namespace mrenyi {

enum class ColumnRole { Informative, Combination, Probe };

std::string role_name(ColumnRole role);

struct MadelonConfig {
    int n = 200;
    int informative = 5;
    int combinations = 5;
    int probes = 20;
    // Cluster centers placed on hypercube vertices; 0 = one per vertex.
    int clusters_per_hypercube = 0;
    double noise_scale = 0.4;
    std::uint64_t seed = 1;
};

struct SyntheticDataset {
    Dataset data;
    std::vector<ColumnRole> roles; // aligned with data column order
};

// Gaussian clusters on the vertices of an `informative`-dimensional hypercube
// with balanced random +/- labels, plus random linear combinations of the
// informative columns and standard-normal probe columns. Column order is
// shuffled; roles report the ground truth.
SyntheticDataset generate_madelon_like(const MadelonConfig& config);

MadelonConfig madelon_desk_preset(std::uint64_t seed);
MadelonConfig madelon_paper_preset(std::uint64_t seed);

} // namespace mrenyi
