#include "mrenyi/eval.hpp"

#include <cstdio>

#include <json.hpp>

namespace mrenyi {

std::string EvalReport::to_json() const {
    nlohmann::ordered_json j;
    j["dataset"] = dataset;
    j["methods"] = methods;
    j["feature_counts"] = feature_counts;
    j["accuracies"] = accuracies;
    j["ranks"] = ranks;
    if (cd.has_value()) {
        j["cd"] = *cd;
    } else {
        j["cd"] = nullptr;
    }
    j["seed"] = seed;
    nlohmann::ordered_json conf = nlohmann::ordered_json::object();
    for (const auto& [key, value] : config) {
        conf[key] = value;
    }
    j["config"] = conf;
    nlohmann::ordered_json selections = nlohmann::ordered_json::array();
    for (const auto& trace : traces) {
        nlohmann::ordered_json t;
        t["selected"] = trace.selected;
        t["objective_values"] = trace.objective_values;
        selections.push_back(t);
    }
    j["selections"] = selections;
    return j.dump(2) + "\n";
}

std::string EvalReport::to_tsv() const {
    std::string out = "feature_count\tmethod\taccuracy\n";
    char buf[64];
    for (size_t m = 0; m < methods.size(); ++m) {
        for (size_t c = 0; c < feature_counts.size(); ++c) {
            std::snprintf(buf, sizeof(buf), "%d\t%s\t%.17g\n", feature_counts[c],
                          methods[m].c_str(), accuracies[m][c]);
            out += buf;
        }
    }
    return out;
}

} // namespace mrenyi
