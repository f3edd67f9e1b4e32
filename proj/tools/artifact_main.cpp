// SPDX-License-Identifier: Apache-2.0
#include "artifact/cli.hpp"

#include <iostream>

#include "CLI11.hpp"

int main(int argc, char** argv) {
    using namespace artifact;
    CLI::App app{"Exact checks for associators, GRT and chord diagrams at finite degree"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::optional<int> degree;
    std::optional<std::string> cache;
    std::string format = "text";
    auto common = [&](CLI::App* sub, bool with_degree) {
        if (with_degree) sub->add_option("--degree", degree, "truncation degree for every presentation");
        sub->add_option("--chord-degree", cfg.chord_degree, "chord degree C for slices")
            ->check(CLI::Range(1, 6));
        sub->add_option("--width", cfg.width_bound, "width bound for normalization")
            ->check(CLI::Range(1, 7));
        sub->add_option("--cache-dir", cache, "normal-form table cache (else ARTIFACT_CACHE_DIR)");
        sub->add_option("--format", format, "report format")
            ->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--seed", cfg.seed, "seed for randomized sampling");
    };

    std::string suite = "all";
    std::optional<std::string> phi;
    bool serial = false;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    common(verify, true);
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suites));
    verify->add_option("--phi", phi, "element or series file checked by the grt/associator suites");
    verify->add_flag("--serial", serial, "run suites one after another");

    std::string target, out_file;
    std::string lambda = "1";
    std::vector<std::string> kernel;
    int sdegree = 4;
    auto* solve = app.add_subcommand("solve", "solve the associator or GRT1 equations degree by degree");
    common(solve, false);
    solve->add_option("target", target, "grt1 or assoc")->required()->check(CLI::IsMember({"grt1", "assoc"}));
    solve->add_option("--lambda", lambda, "lambda as a rational, e.g. 1 or -3/2");
    solve->add_option("--degree", sdegree, "solve through this degree")->check(CLI::Range(1, 8));
    solve->add_option("--out", out_file, "element file to write");
    solve->add_option("--kernel", kernel, "kernel coefficients d:c1,c2,... added at degree d");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.degree = degree;
        cfg.cache_dir = resolve_cache_dir(cache);
        cfg.format = format == "text" ? ReportFormat::Text : ReportFormat::Structured;
        cfg.phi_file = phi;
        cfg.parallel = !serial;
        if (verify->parsed()) return cmd_verify(suite, cfg, std::cout);
        SolveCommand c;
        c.target = target == "grt1" ? SolveTarget::GRT1 : SolveTarget::Assoc;
        c.lambda = Rat(lambda);
        c.lambda.canonicalize();
        c.degree = sdegree;
        c.out_file = out_file;
        for (const auto& k : kernel) {
            auto colon = k.find(':');
            if (colon == std::string::npos) throw Error("--kernel expects d:c1,c2,...");
            const int d = std::stoi(k.substr(0, colon));
            std::string rest = k.substr(colon + 1);
            std::vector<Rat> cs;
            for (std::size_t p = 0; p <= rest.size();) {
                auto q = rest.find(',', p);
                if (q == std::string::npos) q = rest.size();
                Rat r(rest.substr(p, q - p));
                r.canonicalize();
                cs.push_back(r);
                p = q + 1;
            }
            c.kernel_choice[d] = cs;
        }
        return cmd_solve(c, cfg, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
