#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "crysdem/character.hpp"
#include "crysdem/config.hpp"
#include "crysdem/extremal.hpp"
#include "crysdem/graph.hpp"
#include "crysdem/polyhedral.hpp"

using namespace crysdem;
using nlohmann::json;

namespace {

// Exit codes: 0 success, 1 invalid input, 2 verification mismatch,
// 3 budget exhausted under --strict.
constexpr int EXIT_INVALID = 1;
constexpr int EXIT_MISMATCH = 2;
constexpr int EXIT_BUDGET = 3;

struct Options {
    std::string config_path;
    bool paper_order = false;
    bool verify = false;
    bool oracle = false;
    bool strict = false;
    std::string format = "text";
};

std::string render(const ZVector& x, Int width, bool paper_order) {
    Int top = std::max(width, x.max_support());
    std::ostringstream os;
    os << '(';
    for (Int t = 1; t <= top; ++t) {
        Int k = paper_order ? top - t + 1 : t;
        if (t > 1) os << ", ";
        os << x.get(k);
    }
    os << ')';
    return os.str();
}

json vector_json(const ZVector& x, Int width) {
    json a = json::array();
    Int top = std::max(width, x.max_support());
    for (Int k = 1; k <= top; ++k) a.push_back(x.get(k));
    return a;
}

std::string render_weight(const WeightOffset& mu) {
    std::ostringstream os;
    os << "λ";
    for (size_t j = 0; j < mu.alpha.size(); ++j) {
        Int c = mu.alpha[j];
        if (c != 0) os << (c > 0 ? " - " : " + ") << (c > 0 ? c : -c) << "*a" << (j + 1);
    }
    return os.str();
}

XiOptions xi_options(const ProblemConfig& cfg) {
    return XiOptions{cfg.budgets.var_cutoff, cfg.budgets.count_cutoff};
}

int cmd_validate(const ProblemConfig&, const Options&) {
    std::cout << "ok\n";
    return 0;
}

int cmd_demazure(const ProblemConfig& cfg, const Options& opt) {
    CrystalContext ctx = cfg.context();
    auto B = demazure_crystal(ctx, cfg.word);
    Int width = static_cast<Int>(cfg.word.length());
    if (opt.format == "json") {
        json out;
        out["elements"] = B.size();
        out["rows"] = json::array();
        for (const ZVector& b : B) {
            json row;
            row["x"] = vector_json(b, width);
            row["wt_alpha"] = wt(ctx, b).alpha;
            out["rows"].push_back(row);
        }
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << "elements: " << B.size() << '\n';
    for (const ZVector& b : B)
        std::cout << render(b, width, opt.paper_order) << "  wt = " << render_weight(wt(ctx, b))
                  << '\n';
    return 0;
}

int cmd_extremal(const ProblemConfig& cfg, const Options& opt) {
    ZVector x = solve_extremal(cfg.cartan, cfg.iota, cfg.lambda, cfg.word);
    Int width = static_cast<Int>(cfg.word.length());
    if (opt.format == "json") {
        json out;
        out["x"] = vector_json(x, width);
        if (opt.oracle) {
            ZVector y = extremal_oracle(cfg.cartan, cfg.iota, cfg.lambda, cfg.word);
            out["oracle"] = (x == y) ? "match" : "mismatch";
        }
        std::cout << out.dump(2) << '\n';
        if (opt.oracle && out["oracle"] != "match") return EXIT_MISMATCH;
        return 0;
    }
    std::cout << "x_w = " << render(x, width, opt.paper_order) << '\n';
    if (opt.oracle) {
        ZVector y = extremal_oracle(cfg.cartan, cfg.iota, cfg.lambda, cfg.word);
        bool ok = (x == y);
        std::cout << "oracle: " << (ok ? "match" : "mismatch") << '\n';
        if (!ok) return EXIT_MISMATCH;
    }
    return 0;
}

int cmd_polytope(const ProblemConfig& cfg, const Options& opt) {
    XiSet xi = generate_Xi_lambda(cfg.iota, cfg.cartan, cfg.lambda, xi_options(cfg));
    bool ample = check_ample(xi);
    if (opt.format == "json") {
        json out;
        out["closed"] = xi.closed;
        out["ample"] = ample;
        out["forms"] = json::array();
        for (const LinearForm& f : xi.forms) out["forms"].push_back(f.to_string());
        std::cout << out.dump(2) << '\n';
    } else {
        if (xi.closed)
            std::cout << "closed: true\n";
        else
            std::cout << "closed: false (cutoff " << cfg.budgets.count_cutoff << ")\n";
        std::cout << "ample: " << (ample ? "true" : "false") << '\n';
        for (const LinearForm& f : xi.forms) std::cout << f.to_string() << '\n';
    }
    if (opt.strict && !xi.closed) return EXIT_BUDGET;
    if (opt.verify) {
        CrystalContext ctx = cfg.context();
        auto B = demazure_crystal(ctx, cfg.word);
        Int L = static_cast<Int>(cfg.word.length());
        std::vector<Int> box(static_cast<size_t>(L), 0);
        for (const ZVector& b : B)
            for (Int k = 1; k <= L; ++k)
                box[static_cast<size_t>(k - 1)] =
                    std::max(box[static_cast<size_t>(k - 1)], b.get(k) + 1);
        auto pts = enumerate_truncated(xi.forms, L, box);
        if (pts == B) {
            std::cout << "match: " << pts.size() << " points\n";
        } else {
            std::cout << "mismatch: " << pts.size() << " lattice points vs " << B.size()
                      << " crystal elements\n";
            return EXIT_MISMATCH;
        }
    }
    return 0;
}

int cmd_character(const ProblemConfig& cfg, const Options& opt) {
    CrystalContext ctx = cfg.context();
    auto B = demazure_crystal(ctx, cfg.word);
    CharacterElement lhs = character_of(ctx, B);
    CharacterElement rhs =
        demazure_D_w(cfg.cartan, cfg.word, CharacterElement::monomial(cfg.lambda));
    bool equal = (lhs == rhs);
    if (opt.format == "json") {
        json out;
        out["ch_Bw"] = lhs.to_string();
        out["Dw"] = rhs.to_string();
        out["verdict"] = equal ? "EQUAL" : "DIFFER";
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "ch(B_w(λ)) = " << lhs.to_string() << '\n';
        std::cout << "D_w(e^λ)   = " << rhs.to_string() << '\n';
        std::cout << (equal ? "EQUAL" : "DIFFER") << '\n';
    }
    return equal ? 0 : EXIT_MISMATCH;
}

int cmd_graph(const ProblemConfig& cfg, const Options& opt) {
    CrystalContext ctx = cfg.context();
    std::set<ZVector> S;
    bool complete = true;
    if (cfg.word.length() > 0) {
        S = demazure_crystal(ctx, cfg.word);
    } else {
        EnumBudget budget{cfg.budgets.max_elements, cfg.budgets.max_depth};
        EnumResult r = enumerate_image(ctx, budget);
        S = std::move(r.elements);
        complete = r.complete;
    }
    std::cout << crystal_graph_dot(ctx, S, static_cast<Int>(cfg.word.length()));
    if (opt.strict && !complete) return EXIT_BUDGET;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact crystal-base computations: Demazure crystals, polyhedral "
                 "realizations, extremal vectors, and characters"};
    app.require_subcommand(1);

    Options opt;
    std::string cmd_name;
    for (const char* name : {"demazure", "extremal", "polytope", "character", "graph", "validate"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", opt.config_path, "problem config (JSON)")->required();
        sub->add_flag("--paper-order", opt.paper_order, "print coordinates (..., x_2, x_1)");
        sub->add_flag("--verify", opt.verify, "cross-check lattice points against BFS");
        sub->add_flag("--oracle", opt.oracle, "cross-check against the step-by-step oracle");
        sub->add_flag("--strict", opt.strict, "exit 3 when a budget is exhausted");
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json", "dot"}));
        sub->callback([&cmd_name, name] { cmd_name = name; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        ProblemConfig cfg = ProblemConfig::from_file(opt.config_path);
        if (cmd_name == "validate") return cmd_validate(cfg, opt);
        if (cmd_name == "demazure") return cmd_demazure(cfg, opt);
        if (cmd_name == "extremal") return cmd_extremal(cfg, opt);
        if (cmd_name == "polytope") return cmd_polytope(cfg, opt);
        if (cmd_name == "character") return cmd_character(cfg, opt);
        if (cmd_name == "graph") return cmd_graph(cfg, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_INVALID;
    }
    return EXIT_INVALID;
}
