#include "mrenyi/cli_commands.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "mrenyi/discrete.hpp"
#include "mrenyi/eval.hpp"
#include "mrenyi/selection.hpp"

namespace mrenyi {

namespace {

bool parse_int(const std::string& s, int& out) {
    if (s.empty()) {
        return false;
    }
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size() || errno != 0) {
        return false;
    }
    out = static_cast<int>(v);
    return true;
}

Dataset load_dataset(const RunConfig& cfg) {
    if (cfg.dataset_path.empty()) {
        throw InputError("no dataset path given (use --data)");
    }
    int index;
    if (parse_int(cfg.label_column, index)) {
        return load_csv(cfg.dataset_path, index);
    }
    return load_csv(cfg.dataset_path, cfg.label_column);
}

SigmaRule make_sigma_rule(const RunConfig& cfg) {
    if (cfg.sigma_rule == "fixed") {
        return SigmaRule::fixed(cfg.sigma);
    }
    if (cfg.sigma_rule == "silverman") {
        return SigmaRule::silverman();
    }
    if (cfg.sigma_rule == "range-fraction") {
        return SigmaRule::range_fraction(cfg.sigma);
    }
    throw ParameterError("unknown sigma rule '" + cfg.sigma_rule +
                         "' (expected fixed|silverman|range-fraction)");
}

// Standardization presumes comparable scales, which only makes sense when the
// bandwidth is a fixed number rather than derived from the raw data.
bool effective_standardize(const RunConfig& cfg) {
    return cfg.standardize && cfg.sigma_rule == "fixed";
}

Criterion make_criterion(const RunConfig& cfg, const std::string& name, double sigma_value) {
    Criterion c = Criterion::parse(name);
    if (c.kind == CriterionKind::MIFS) {
        c = Criterion::mifs(cfg.mifs_beta);
    }
    if (c.kind == CriterionKind::MatrixMI) {
        c = Criterion::matrix_mi(EntropyOrder{cfg.alpha},
                                 KernelSpec{KernelFamily::RBF, sigma_value});
    }
    return c;
}

FoldsPolicy make_folds(const RunConfig& cfg) {
    if (cfg.folds == "auto") {
        return FoldsPolicy::Auto;
    }
    if (cfg.folds == "loo") {
        return FoldsPolicy::LOO;
    }
    if (cfg.folds == "10") {
        return FoldsPolicy::TenFold;
    }
    throw ParameterError("unknown folds policy '" + cfg.folds + "' (expected auto|loo|10)");
}

SelectionOptions make_selection_options(const RunConfig& cfg) {
    SelectionOptions opts;
    opts.bins = cfg.bins;
    opts.standardize = effective_standardize(cfg);
    opts.memory_budget = cfg.mem_budget;
    opts.threads = cfg.threads;
    return opts;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) {
        throw InputError("cannot open output file: " + cfg.output);
    }
    out << text;
    if (!out) {
        throw InputError("failed while writing: " + cfg.output);
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot open output file: " + path);
    }
    out << text;
    if (!out) {
        throw InputError("failed while writing: " + path);
    }
}

std::vector<int> resolve_columns(const Dataset& data, const std::vector<std::string>& wanted) {
    std::vector<int> out;
    if (wanted.empty()) {
        out.resize(static_cast<size_t>(data.d()));
        for (int j = 0; j < data.d(); ++j) {
            out[static_cast<size_t>(j)] = j;
        }
        return out;
    }
    for (const auto& token : wanted) {
        int index;
        if (parse_int(token, index)) {
            if (index < 0 || index >= data.d()) {
                throw InputError("column index " + token + " out of range for " +
                                 std::to_string(data.d()) + " features");
            }
            out.push_back(index);
            continue;
        }
        const auto it = std::find(data.feature_names.begin(), data.feature_names.end(), token);
        if (it == data.feature_names.end()) {
            throw InputError("column '" + token + "' not found");
        }
        out.push_back(static_cast<int>(it - data.feature_names.begin()));
    }
    return out;
}

} // namespace

int cmd_estimate(const RunConfig& cfg) {
    const Dataset data = load_dataset(cfg);
    const std::vector<int> cols = resolve_columns(data, cfg.columns);
    const SigmaRule rule = make_sigma_rule(cfg);

    Eigen::MatrixXd requested(data.n(), static_cast<Eigen::Index>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        requested.col(static_cast<Eigen::Index>(j)) = data.features.col(cols[j]);
    }
    const SigmaEstimate sigma = sigma_heuristic(requested, rule);
    if (sigma.degenerate) {
        std::cerr << "warning: degenerate data for sigma heuristic; falling back to sigma = 1\n";
    }
    const KernelSpec kernel{KernelFamily::RBF, sigma.value};
    const EntropyOrder order{cfg.alpha};
    const bool standardize = effective_standardize(cfg);

    std::vector<NormalizedGram> grams;
    grams.reserve(cols.size());
    for (int j : cols) {
        grams.push_back(gram_matrix(gram_points(data, j, standardize), kernel));
    }
    const NormalizedGram target = label_gram(data.labels);

    nlohmann::ordered_json j;
    j["dataset"] = cfg.dataset_path;
    j["alpha"] = cfg.alpha;
    j["sigma_rule"] = cfg.sigma_rule;
    j["sigma"] = sigma.value;
    j["sigma_degenerate"] = sigma.degenerate;
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    nlohmann::ordered_json per_column = nlohmann::ordered_json::object();
    for (size_t i = 0; i < cols.size(); ++i) {
        const std::string& name = data.feature_names[static_cast<size_t>(cols[i])];
        names.push_back(name);
        per_column[name] = entropy(grams[i], order).bits;
    }
    j["columns"] = names;
    j["entropy_bits"] = per_column;
    j["joint_entropy_bits"] = joint_entropy(grams, order).bits;
    j["multivariate_mi_bits"] = multivariate_mi(target, grams, order).bits;
    if (grams.size() >= 2) {
        j["interaction_information_bits"] = interaction_information(grams, order).bits;
        j["co_information_bits"] = co_information(grams, order).bits;
    } else {
        j["interaction_information_bits"] = nullptr;
        j["co_information_bits"] = nullptr;
    }
    j["total_correlation_bits"] = total_correlation(grams, order).bits;
    emit(cfg, j.dump(2) + "\n");
    return 0;
}

int cmd_select(const RunConfig& cfg) {
    const Dataset data = load_dataset(cfg);
    if (cfg.k < 1 || cfg.k > data.d()) {
        throw InputError("selection count k = " + std::to_string(cfg.k) +
                         " out of range: dataset has d = " + std::to_string(data.d()) +
                         " features");
    }
    const std::string method = cfg.methods.empty() ? "matrix-mi" : cfg.methods.front();
    const SigmaRule rule = make_sigma_rule(cfg);
    const SigmaEstimate sigma = sigma_heuristic(data.features, rule);
    const Criterion criterion = make_criterion(cfg, method, sigma.value);
    const SelectionTrace trace = select(criterion, data, cfg.k, cfg.seed,
                                        make_selection_options(cfg));

    nlohmann::ordered_json j;
    j["dataset"] = cfg.dataset_path;
    j["method"] = criterion.name();
    j["k"] = cfg.k;
    j["seed"] = cfg.seed;
    j["alpha"] = cfg.alpha;
    j["sigma"] = sigma.value;
    j["bins"] = cfg.bins;
    j["selected_indices"] = trace.selected;
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (int idx : trace.selected) {
        names.push_back(data.feature_names[static_cast<size_t>(idx)]);
    }
    j["selected_names"] = names;
    j["objective_values"] = trace.objective_values;
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto& step : trace.step_scores) {
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (const auto& [candidate, score] : step) {
            entries.push_back(nlohmann::ordered_json::array({candidate, score}));
        }
        steps.push_back(entries);
    }
    j["step_scores"] = steps;
    emit(cfg, j.dump(2) + "\n");
    return 0;
}

int cmd_benchmark(const RunConfig& cfg) {
    const Dataset data = load_dataset(cfg);
    if (cfg.k < 1 || cfg.k > data.d()) {
        throw InputError("max feature count k = " + std::to_string(cfg.k) +
                         " out of range: dataset has d = " + std::to_string(data.d()) +
                         " features");
    }
    const SigmaRule rule = make_sigma_rule(cfg);
    const SigmaEstimate sigma = sigma_heuristic(data.features, rule);

    std::vector<std::string> names = cfg.methods;
    if (names.empty()) {
        names = {"mifs", "fou", "mim", "mrmr", "jmi", "cmim", "matrix-mi"};
    }
    BenchmarkConfig bench;
    for (const auto& name : names) {
        bench.methods.push_back(make_criterion(cfg, name, sigma.value));
    }
    bench.max_features = cfg.k;
    bench.classifier = cfg.classifier == "linsvm" ? ClassifierKind::LinearSvm
                                                  : ClassifierKind::Knn3;
    if (cfg.classifier != "knn3" && cfg.classifier != "linsvm") {
        throw ParameterError("unknown classifier '" + cfg.classifier +
                             "' (expected knn3|linsvm)");
    }
    bench.svm_c = cfg.svm_c;
    bench.folds = make_folds(cfg);
    bench.seed = cfg.seed;
    bench.reselect_per_fold = cfg.per_fold_selection;
    bench.selection = make_selection_options(cfg);
    bench.dataset_name = cfg.dataset_path;

    EvalReport report = run_benchmark(data, bench);
    report.config = {
        {"alpha", std::to_string(cfg.alpha)},
        {"sigma_rule", cfg.sigma_rule},
        {"sigma", std::to_string(sigma.value)},
        {"bins", std::to_string(cfg.bins)},
        {"classifier", cfg.classifier},
        {"folds", cfg.folds},
        {"standardize", effective_standardize(cfg) ? "true" : "false"},
        {"per_fold_selection", cfg.per_fold_selection ? "true" : "false"},
    };

    if (cfg.output.empty()) {
        std::cout << report.to_json();
        return 0;
    }
    write_file(cfg.output, report.to_json());
    std::string tsv_path = cfg.output;
    if (tsv_path.size() > 5 && tsv_path.substr(tsv_path.size() - 5) == ".json") {
        tsv_path = tsv_path.substr(0, tsv_path.size() - 5);
    }
    tsv_path += ".tsv";
    write_file(tsv_path, report.to_tsv());
    return 0;
}

int cmd_synth(const RunConfig& cfg) {
    if (cfg.output.empty()) {
        throw InputError("synth needs --output PATH for the generated CSV");
    }
    MadelonConfig gen = cfg.synth;
    if (!cfg.preset.empty()) {
        if (cfg.preset == "madelon-desk") {
            gen = madelon_desk_preset(cfg.seed);
        } else if (cfg.preset == "madelon-paper") {
            gen = madelon_paper_preset(cfg.seed);
        } else {
            throw ParameterError("unknown preset '" + cfg.preset +
                                 "' (expected madelon-desk|madelon-paper)");
        }
    } else {
        gen.seed = cfg.seed;
    }
    const SyntheticDataset synth = generate_madelon_like(gen);
    write_csv(cfg.output, synth.data);

    nlohmann::ordered_json j;
    j["csv"] = cfg.output;
    j["seed"] = gen.seed;
    j["n"] = gen.n;
    j["informative"] = gen.informative;
    j["combinations"] = gen.combinations;
    j["probes"] = gen.probes;
    j["noise_scale"] = gen.noise_scale;
    j["label_column"] = "label";
    nlohmann::ordered_json roles = nlohmann::ordered_json::array();
    for (size_t i = 0; i < synth.roles.size(); ++i) {
        nlohmann::ordered_json entry;
        entry["name"] = synth.data.feature_names[i];
        entry["role"] = role_name(synth.roles[i]);
        roles.push_back(entry);
    }
    j["columns"] = roles;
    write_file(cfg.output + ".roles.json", j.dump(2) + "\n");
    return 0;
}

} // namespace mrenyi
