#pragma once

#include <fstream>
#include <json.hpp>
#include <string>

#include "crysdem/cartan.hpp"
#include "crysdem/crystal.hpp"
#include "crysdem/iota.hpp"
#include "crysdem/polyhedral.hpp"

namespace crysdem {

struct Budgets {
    Int max_elements = 100000;
    Int max_depth = 1000;
    Int var_cutoff = 12;
    Int count_cutoff = 20000;
};

struct Display {
    bool paper_order = false;
};

/// One problem instance: Cartan data, index sequence, weight, word, budgets.
/// Unknown keys in the JSON document are errors; all cross-module validations
/// run at load time.
struct ProblemConfig {
    CartanMatrix cartan;
    IotaSequence iota;
    Weight lambda;
    WeylWord word;
    Budgets budgets;
    Display display;

    CrystalContext context() const { return CrystalContext{cartan, iota, lambda}; }
    CrystalContext infinity_context() const { return CrystalContext{cartan, iota, std::nullopt}; }

    static ProblemConfig from_json(const nlohmann::json& j);
    static ProblemConfig from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open config file: " + path);
        nlohmann::json j;
        in >> j;
        return from_json(j);
    }
};

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& j, const std::string& path,
                                std::initializer_list<const char*> allowed) {
    if (!j.is_object())
        throw std::invalid_argument("config: expected object at " + path);
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw std::invalid_argument("config: unknown key '" + it.key() + "' at " + path);
    }
}

}  // namespace detail

inline ProblemConfig ProblemConfig::from_json(const nlohmann::json& j) {
    detail::reject_unknown_keys(j, "$",
                                {"cartan", "iota", "lambda", "word", "budgets", "display"});
    if (!j.contains("cartan") || !j.contains("iota") || !j.contains("lambda"))
        throw std::invalid_argument("config: cartan, iota, and lambda are required");

    CartanMatrix A(j.at("cartan").get<std::vector<std::vector<Int>>>());

    const auto& ji = j.at("iota");
    detail::reject_unknown_keys(ji, "$.iota", {"prefix", "cycle"});
    std::vector<int> prefix, cycle;
    if (ji.contains("prefix")) prefix = ji.at("prefix").get<std::vector<int>>();
    cycle = ji.at("cycle").get<std::vector<int>>();
    IotaSequence iota(prefix, cycle);
    auto bad = iota.validate(A);
    if (!bad.empty()) {
        std::string msg = "config: invalid iota:";
        for (auto& b : bad) msg += " [" + b + "]";
        throw std::invalid_argument(msg);
    }

    Weight lambda{j.at("lambda").get<std::vector<Int>>()};
    if (static_cast<int>(lambda.m.size()) != A.rank())
        throw std::invalid_argument("config: lambda length does not match rank");

    WeylWord word;
    if (j.contains("word")) word.letters = j.at("word").get<std::vector<int>>();
    for (int l : word.letters)
        if (l < 1 || l > A.rank())
            throw std::invalid_argument("config: word letter out of range");

    Budgets budgets;
    if (j.contains("budgets")) {
        const auto& jb = j.at("budgets");
        detail::reject_unknown_keys(jb, "$.budgets",
                                    {"max_elements", "max_depth", "var_cutoff", "count_cutoff"});
        if (jb.contains("max_elements")) budgets.max_elements = jb.at("max_elements").get<Int>();
        if (jb.contains("max_depth")) budgets.max_depth = jb.at("max_depth").get<Int>();
        if (jb.contains("var_cutoff")) budgets.var_cutoff = jb.at("var_cutoff").get<Int>();
        if (jb.contains("count_cutoff")) budgets.count_cutoff = jb.at("count_cutoff").get<Int>();
    }

    Display display;
    if (j.contains("display")) {
        const auto& jd = j.at("display");
        detail::reject_unknown_keys(jd, "$.display", {"paper_order"});
        if (jd.contains("paper_order")) display.paper_order = jd.at("paper_order").get<bool>();
    }

    return ProblemConfig{std::move(A), std::move(iota), std::move(lambda), std::move(word),
                         budgets, display};
}

}  // namespace crysdem
