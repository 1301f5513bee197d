#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "plocal/error.hpp"

using plocal::cli::JobConfig;
using plocal::cli::json;

namespace {

void apply_bound(plocal::Bounds& b, const std::string& kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) plocal::fail(plocal::ErrorCode::parse_error, "--bound expects name=value, got '" + kv + "'");
    const std::string name = kv.substr(0, eq);
    std::size_t value = 0;
    try {
        std::size_t used = 0;
        value = std::stoull(kv.substr(eq + 1), &used);
        if (used != kv.size() - eq - 1 || value == 0) throw std::invalid_argument(kv);
    } catch (const std::exception&) {
        plocal::fail(plocal::ErrorCode::parse_error, "--bound " + name + ": expected a positive integer");
    }
    std::size_t* slots[] = {&b.max_group_order,       &b.max_semidirect_order, &b.max_lattice_order,
                            &b.max_table_order,       &b.assoc_full_check_order, &b.max_iso_search_order,
                            &b.max_cochain_dim,       &b.max_cochain_rows,     &b.max_alperin_depth,
                            &b.max_nerve_simplices,   &b.max_linking_pairs};
    const char* names[] = {"max_group_order",     "max_semidirect_order", "max_lattice_order",
                           "max_table_order",     "assoc_full_check_order", "max_iso_search_order",
                           "max_cochain_dim",     "max_cochain_rows",     "max_alperin_depth",
                           "max_nerve_simplices", "max_linking_pairs"};
    for (std::size_t i = 0; i < std::size(names); ++i)
        if (name == names[i]) {
            *slots[i] = value;
            return;
        }
    plocal::fail(plocal::ErrorCode::parse_error, "--bound: unknown bound '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Saturated fusion systems, linking systems and towers of finite groups"};
    app.require_subcommand(1);
    JobConfig cfg;
    std::string format = "structured", output;
    std::vector<std::string> bound_overrides;
    bool timing = false;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "human or structured")->check(CLI::IsMember({"human", "structured"}));
        sub->add_option("--output", output, "write the report here instead of stdout");
        sub->add_option("--bound", bound_overrides, "override a bound, name=value");
        sub->add_flag("--timing", timing, "add wall-clock time to the report");
        sub->add_option("-p,--prime", cfg.p, "prime p");
    };
    auto verbs = [&](const char* area, const char* help, std::initializer_list<const char*> names) {
        CLI::App* a = app.add_subcommand(area, help);
        a->require_subcommand(1);
        std::vector<CLI::App*> out;
        for (const char* n : names) {
            CLI::App* v = a->add_subcommand(n);
            common(v);
            v->callback([&cfg, area, n] {
                cfg.area = area;
                cfg.verb = n;
            });
            out.push_back(v);
        }
        return out;
    };

    for (CLI::App* v : verbs("fusion", "fusion systems of finite groups", {"saturate-check", "classify", "alperin", "frobenius"})) {
        v->add_option("--group", cfg.group, "group file")->required();
        v->add_option("--sylow", cfg.sylow, "auto or a subgroup file");
    }
    for (CLI::App* v : verbs("linking", "linking categories", {"verify", "nerve"})) {
        v->add_option("--group", cfg.group, "group file")->required();
        v->add_option("--sylow", cfg.sylow, "auto or a subgroup file");
        v->add_option("--policy", cfg.policy, "centric or quasicentric");
        v->add_option("--max-dim", cfg.max_dim, "nerve dimension");
        v->add_option("--nerve-out", cfg.nerve_out, "nerve data file");
    }
    for (CLI::App* v : verbs("tower", "towers of finite groups",
                             {"fin-saturation", "aut-torus", "probe", "realizability", "inverse-limit", "classify-sum"})) {
        v->add_option("--tower", cfg.tower, "tower file");
        v->add_option("--depth", cfg.depth, "truncation depth");
        v->add_option("--window", cfg.window, "stabilization window");
        v->add_option("--count", cfg.count, "number of random systems");
        v->add_option("--seed", cfg.seed, "random seed");
        v->add_option("--levels", cfg.levels, "levels per random system");
        v->add_option("--max-points", cfg.max_points, "largest X_i");
        v->add_option("--max-gamma", cfg.max_gamma, "largest Gamma");
        v->add_option("--prefix", cfg.prefix, "comma separated group names");
        v->add_option("--pattern", cfg.pattern, "comma separated group names, repeated forever");
        v->add_option("-q,--q", cfg.q, "characteristic, 0 allowed");
    }
    for (CLI::App* v : verbs("cohomology", "mod-p group cohomology", {"hstar", "stable", "lim"})) {
        v->add_option("--group", cfg.group, "group file");
        v->add_option("--sub", cfg.sub, "auto or a subgroup file");
        v->add_option("--maxdeg", cfg.maxdeg, "top degree");
        v->add_option("--tower", cfg.tower, "tower file");
        v->add_option("--deg", cfg.deg, "degree");
        v->add_option("--depth", cfg.depth, "truncation depth");
        v->add_option("--window", cfg.window, "stabilization window");
    }
    for (CLI::App* v : verbs("examples", "example families", {"fqh", "lfs-ext"})) {
        v->add_option("--H", cfg.h_tower, "tower file for H");
        v->add_option("-q,--q", cfg.q, "prime q");
        v->add_option("--check", cfg.check, "part-a or quotient");
        v->add_option("--depth", cfg.depth, "truncation depth");
        v->add_option("--window", cfg.window, "stabilization window");
    }
    CLI::App* corpus = app.add_subcommand("corpus", "invariant suites over a directory of group files");
    common(corpus);
    corpus->add_option("--suite", cfg.suite, "frobenius, saturation or cartan-eilenberg")->required();
    corpus->add_option("--dir", cfg.dir, "directory of group files")->required();
    corpus->add_option("--max-order", cfg.max_order, "skip larger groups");
    corpus->add_option("--maxdeg", cfg.maxdeg, "top degree for cartan-eilenberg");
    corpus->callback([&cfg] { cfg.area = "corpus"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : plocal::exit_code_for(plocal::ErrorCode::parse_error);
    }

    try {
        cfg.bounds = plocal::Bounds::from_environment();
        for (const auto& kv : bound_overrides) apply_bound(cfg.bounds, kv);
        const auto t0 = std::chrono::steady_clock::now();
        json report;
        report["tool"] = "plocal";
        report["version"] = plocal::cli::tool_version;
        std::vector<std::string> command(argv + 1, argv + argc);
        report["command"] = command;
        report["result"] = plocal::cli::run(cfg);
        if (timing)
            report["timing_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        const std::string text = format == "human" ? plocal::cli::render_human(report) : report.dump(2) + "\n";
        if (output.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(output);
            if (!out) plocal::fail(plocal::ErrorCode::invalid_argument, "cannot write '" + output + "'");
            out << text;
        }
        return 0;
    } catch (const plocal::Error& e) {
        std::cerr << "error: " << plocal::error_code_name(e.code()) << ": " << e.what() << "\n";
        return plocal::exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 2;
    }
}
