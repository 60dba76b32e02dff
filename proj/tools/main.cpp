#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "mrenyi/cli_commands.hpp"

namespace {

void add_common_flags(CLI::App* cmd, mrenyi::RunConfig& cfg) {
    cmd->add_option("--alpha", cfg.alpha, "Entropy order (> 0)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--sigma", cfg.sigma,
                    "Kernel bandwidth (fixed rule) or fraction (range-fraction rule)");
    cmd->add_option("--sigma-rule", cfg.sigma_rule, "Bandwidth rule")
        ->check(CLI::IsMember({"fixed", "silverman", "range-fraction"}));
    cmd->add_option("--bins", cfg.bins, "Equal-width bin count for discrete estimators")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", cfg.seed, "Random seed");
    cmd->add_option("--output", cfg.output, "Output path (default: stdout)");
    cmd->add_option("--mem-budget", cfg.mem_budget, "Gram cache budget in bytes");
    cmd->add_option("--threads", cfg.threads,
                    "Worker threads (0 = auto; MRENYI_THREADS overrides)");
    cmd->add_flag("--standardize,!--no-standardize", cfg.standardize,
                  "Standardize continuous features before Gram construction (fixed sigma only)");
}

void add_dataset_flags(CLI::App* cmd, mrenyi::RunConfig& cfg) {
    cmd->add_option("--data", cfg.dataset_path, "Input CSV path")->required();
    cmd->add_option("--label", cfg.label_column,
                    "Label column: name or index (negative counts from the end)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matrix-based Renyi entropy estimation and feature selection"};
    app.require_subcommand(1);

    mrenyi::RunConfig cfg;

    CLI::App* estimate = app.add_subcommand(
        "estimate", "Entropy, joint entropy, MI, interaction and total correlation for columns");
    add_dataset_flags(estimate, cfg);
    add_common_flags(estimate, cfg);
    estimate->add_option("--columns", cfg.columns,
                         "Feature columns (names or indices; default: all)")
        ->delimiter(',');

    CLI::App* sel = app.add_subcommand("select", "Greedy forward feature selection");
    add_dataset_flags(sel, cfg);
    add_common_flags(sel, cfg);
    sel->add_option("--method", cfg.methods, "Criterion (single)")
        ->delimiter(',')
        ->check(CLI::IsMember({"mim", "mifs", "fou", "mrmr", "jmi", "cmim", "matrix-mi"}));
    sel->add_option("--k", cfg.k, "Number of features to select")->check(CLI::PositiveNumber);
    sel->add_option("--mifs-beta", cfg.mifs_beta, "MIFS redundancy weight");

    CLI::App* bench = app.add_subcommand("benchmark", "Cross-validated method comparison");
    add_dataset_flags(bench, cfg);
    add_common_flags(bench, cfg);
    bench->add_option("--method", cfg.methods, "Criteria to compare (default: all seven)")
        ->delimiter(',')
        ->check(CLI::IsMember({"mim", "mifs", "fou", "mrmr", "jmi", "cmim", "matrix-mi"}));
    bench->add_option("--k", cfg.k, "Maximum number of features")->check(CLI::PositiveNumber);
    bench->add_option("--mifs-beta", cfg.mifs_beta, "MIFS redundancy weight");
    bench->add_option("--folds", cfg.folds, "Cross-validation policy")
        ->check(CLI::IsMember({"auto", "loo", "10"}));
    bench->add_option("--classifier", cfg.classifier, "Base classifier")
        ->check(CLI::IsMember({"knn3", "linsvm"}));
    bench->add_option("--svm-c", cfg.svm_c, "Linear SVM regularization")->check(CLI::PositiveNumber);
    bench->add_flag("--per-fold-selection", cfg.per_fold_selection,
                    "Reselect features inside every training fold");

    CLI::App* synth = app.add_subcommand("synth", "Generate a MADELON-style dataset");
    add_common_flags(synth, cfg);
    synth->add_option("--preset", cfg.preset, "madelon-desk or madelon-paper")
        ->check(CLI::IsMember({"madelon-desk", "madelon-paper"}));
    synth->add_option("--n", cfg.synth.n, "Sample count")->check(CLI::PositiveNumber);
    synth->add_option("--informative", cfg.synth.informative, "Informative feature count")
        ->check(CLI::PositiveNumber);
    synth->add_option("--combinations", cfg.synth.combinations,
                      "Linear-combination feature count");
    synth->add_option("--probes", cfg.synth.probes, "Noise probe count");
    synth->add_option("--clusters", cfg.synth.clusters_per_hypercube,
                      "Clusters on the hypercube (0 = one per vertex)");
    synth->add_option("--noise-scale", cfg.synth.noise_scale, "Cluster noise scale")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*estimate) {
            return mrenyi::cmd_estimate(cfg);
        }
        if (*sel) {
            return mrenyi::cmd_select(cfg);
        }
        if (*bench) {
            return mrenyi::cmd_benchmark(cfg);
        }
        if (*synth) {
            return mrenyi::cmd_synth(cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
