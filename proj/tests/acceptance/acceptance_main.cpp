// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "artifact/cli.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace artifact;

namespace {

RunConfig base_config() {
    RunConfig c;
    c.cache_dir = resolve_cache_dir(std::nullopt);
    return c;
}

std::map<std::string, SuiteResult>& suites() {
    static std::map<std::string, SuiteResult> m;
    return m;
}

const SuiteResult& suite(const std::string& name) {
    auto it = suites().find(name);
    if (it == suites().end()) it = suites().emplace(name, run_suite(name, base_config())).first;
    return it->second;
}

struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    // the suite passes and every listed id occurs, each occurrence passing
    void suite_with(const std::string& name, const std::vector<std::string>& ids,
                    const std::string& section_prefix = "") {
        const auto& s = suite(name);
        expect(s.ok(), "suite " + name + " failed");
        for (const auto& n : s.notes)
            if (n.find("error") != std::string::npos) failures.push_back(name + ": " + n);
        for (const auto& id : ids) {
            int seen = 0;
            for (const auto& sec : s.sections) {
                if (sec.title.rfind(section_prefix, 0) != 0) continue;
                for (const auto& r : sec.report.entries) {
                    if (r.id != id) continue;
                    ++seen;
                    expect(r.value.is_zero(), name + ": " + id + " nonzero in '" + sec.title + "'");
                }
            }
            expect(seen > 0, name + ": no record " + id);
        }
    }
};

Series X(int D) { return Series::gen(free_xy(), D, GeneratorId::letter(0)); }
Series Y(int D) { return Series::gen(free_xy(), D, GeneratorId::letter(1)); }

// Coefficient of xy in the degree-2 part of the hexagon product for
// phi = 1 + c[x,y]; it is affine in c and the hexagon asks for zero.
Rat hexagon_bracket_oracle(const Rat& lambda) {
    auto h = [&](const Rat& c) {
        auto phi = Series::one(free_xy(), 2) + bracket(X(2), Y(2)) * c;
        auto a = X(2), b = Y(2), z = -X(2) - Y(2);
        auto e = [&](const Series& s) { return series_exp(s * (lambda / 2)); };
        auto p = substitute(phi, a, b) * e(b) * substitute(phi, b, z) * e(z) * substitute(phi, z, a) * e(a);
        auto d2 = p.degree_part(2);
        auto it = d2.terms().find(Monomial{{0, 1}});
        return it == d2.terms().end() ? Rat(0) : it->second;
    };
    const Rat h0 = h(0), h1 = h(1);
    return -h0 / (h1 - h0);
}

std::vector<std::string> a1() {
    Check c;
    std::vector<std::string> ids;
    for (const char* p : {"ft(1)", "ft(2)", "ft(3)", "ft(4)", "ft(5)", "t(2)", "t(3)", "t(4)", "sph(2)", "sph(3)",
                          "sph(4)", "fB(3)", "fB(4)", "fB(5)"}) {
        ids.push_back(std::string("rel.") + p + ".generators");
        ids.push_back(std::string("rel.") + p + ".ideal");
    }
    c.suite_with("relations", ids);
    const auto& s = suite("relations");
    for (const auto& sec : s.sections) {
        const int want = sec.title.find("(5)") != std::string::npos ? 3 : 4;
        c.expect(sec.report.degree == want, sec.title + " checked to degree " + std::to_string(sec.report.degree));
    }
    return c.failures;
}

std::vector<std::string> a2() {
    Check c;
    std::vector<std::string> ids;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            ids.push_back("operad.insert.outer." + std::to_string(m) + "." + std::to_string(n));
            ids.push_back("operad.insert.inner." + std::to_string(m) + "." + std::to_string(n));
        }
    c.suite_with("operad", ids);
    c.suite_with("cyclic", {"cyclic.axiom.inner.S1", "cyclic.axiom.outer.S1", "cyclic.axiom.inner.S2",
                            "cyclic.axiom.outer.S2", "cyclic.order", "cyclic.strategies"});
    return c.failures;
}

std::vector<std::string> a3() {
    Check c;
    auto s = solve_degreewise(SolveTarget::Assoc, 1, 4);
    c.expect(s.ok, "associator solve failed at degree " + std::to_string(s.failed_degree));
    if (s.ok) {
        const Rat got = bracket_coefficient(s.phi), want = hexagon_bracket_oracle(1);
        c.expect(got == want, "[x,y] coefficient " + got.get_str() + ", oracle " + want.get_str());
        c.expect(verify_associator(1, s.phi, 4).ok(), "associator equations at D=4");
        c.expect(verify_associator(1, s.phi, 4, HexagonMode::Quotient).ok(), "associator equations in t(3)/c");
        c.expect(verify_5cycle(s.phi, 3).ok(), "5-cycle in fB(5) at D=3");
        c.expect(pentagon_defect_ft4(s.phi, 4).is_zero(), "pentagon in ft(4) at D=4");
    }
    auto g = solve_degreewise(SolveTarget::GRT1, 1, 3);
    c.expect(g.ok && g.degrees.size() == 3, "GRT1 solve failed");
    if (g.ok && g.degrees.size() == 3) {
        c.expect(g.degrees[0].kernel_dim == 0 && g.degrees[1].kernel_dim == 0, "GRT1 solutions below degree 3");
        c.expect(g.degrees[2].kernel_dim >= 1, "GRT1 kernel at degree 3 is zero");
    }
    c.suite_with("grt", {"solve.grt1.low", "solve.grt1.degree3", "grt1.I", "grt1.H", "grt1.P"});
    c.suite_with("associator", {"solve.assoc", "assoc.xy-coefficient", "assoc.I", "assoc.H", "assoc.P"});
    c.suite_with("fivecycle", {"fivecycle.product", "fivecycle.rearranged", "fivecycle.perturbed.detected"});
    return c.failures;
}

std::vector<std::string> a4() {
    Check c;
    c.suite_with("props", {"cyc.H.1", "cyc.chain.1", "cyc.P.lhs", "cyc.P.rhs"}, "unconditional");
    c.suite_with("props", {"cyc.I", "cyc.H'", "cyc.chain", "cyc.P.lhs", "cyc.P.rhs", "cyc.P.perm", "cyc.P"},
                 "all identities");
    const auto& s = suite("props");
    bool twenty = false;
    for (const auto& sec : s.sections) twenty |= sec.title.find("20 random") != std::string::npos;
    c.expect(twenty, "no 20-element sample section");
    return c.failures;
}

std::vector<std::string> a5() {
    Check c;
    c.suite_with("parcd", {"zstar.X12", "zstar.H12", "zstar.I1", "zstar.A123", "zstar.axiom", "assocfun.tau",
                           "assocfun.beta", "assocfun.alpha", "ribbon.twist", "ribbon.twist.unequal"});
    c.suite_with("associator", {"torsor.identity", "torsor.compatibility", "torsor.transitive"});
    return c.failures;
}

std::vector<std::string> a6() {
    Check c;
    c.suite_with("parcd", {"grtcyc.X12", "grtcyc.H12", "grtcyc.I1", "grtcyc.A123"}, "GRT commutes with z*, element 1");
    c.suite_with("parcd", {"grtcyc.X12", "grtcyc.H12", "grtcyc.I1", "grtcyc.A123"}, "GRT commutes with z*, element 2");
    c.suite_with("parcd", {"grt.action.law.X12", "grt.action.law.H12", "grt.action.law.I1", "grt.action.law.A123"});
    return c.failures;
}

std::vector<std::string> a7() {
    Check c;
    c.suite_with("chordcat", {"zigzag.left", "zigzag.right", "invariance.X", "invariance.H", "invariance.I",
                              "invariance.A", "unknot.omega", "unknot.gprime.chain", "unknot.gprime.omega",
                              "unknot.rho.chain", "unknot.rho.omega", "omega.independent"});
    return c.failures;
}

std::vector<std::string> a8() {
    Check c;
    auto run = [] {
        std::ostringstream os;
        const int st = cmd_verify("all", base_config(), os);
        return std::make_pair(st, os.str());
    };
    const auto [s1, r1] = run();
    const auto [s2, r2] = run();
    c.expect(s1 == 0 && s2 == 0, "verify all returned nonzero");
    c.expect(!r1.empty() && r1 == r2, "reports differ");
    return c.failures;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<std::vector<std::string>()>>> criteria = {
        {"A1 presentation soundness", a1}, {"A2 operad and cyclic axioms", a2},
        {"A3 solver and equations", a3},   {"A4 cyclic-invariance identities", a4},
        {"A5 functor, twist and torsor", a5}, {"A6 GRT action on PaRCD", a6},
        {"A7 chord-diagram chain", a7},    {"A8 determinism", a8},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<std::string> why;
        try {
            why = fn();
        } catch (const std::exception& e) {
            why.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %s (%.1fs)\n", why.empty() ? "PASS" : "FAIL", name.c_str(), secs);
        for (const auto& w : why) std::printf("  %s\n", w.c_str());
        if (name[1] == '3')
            std::printf("  note: the hexagon with exp(lambda t/2) factors forces -lambda^2/24; "
                        "a +1/24 target would be the opposite sign convention\n");
        failed += !why.empty();
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
