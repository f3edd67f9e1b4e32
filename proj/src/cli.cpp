// SPDX-License-Identifier: Apache-2.0
#include "artifact/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace artifact {

namespace {

Series mark(bool ok) { return ok ? Series(free_xy(), 0) : Series::one(free_xy(), 0); }

// First nonzero residual of a family, or zero.
struct FirstNonzero {
    std::optional<Series> value;
    void add(const Series& s) {
        if (!value || (value->is_zero() && !s.is_zero())) value = s;
    }
    Series get() const { return value ? *value : mark(true); }
};

std::string first_term(const Series& s) {
    if (s.is_zero()) return "-";
    std::string t = s.degree_part(s.min_degree()).str();
    auto cut = t.find(" + ");
    return cut == std::string::npos ? t : t.substr(0, cut);
}

Series random_element(int n, int D, std::mt19937_64& rng) {
    auto a = presentation(PresentationId::ft(n));
    const auto ng = a->generators().size();
    Terms t;
    for (int d = 1; d <= D; ++d)
        for (int r = 0; r < 3; ++r) {
            Monomial m;
            for (int k = 0; k < d; ++k) m.w.push_back(static_cast<std::uint8_t>(rng() % ng));
            add_term(t, m, Rat(static_cast<long>(rng() % 5) - 2));
        }
    return Series::from_terms(a, D, t);
}

std::vector<Series> generators_of(int n, int D) {
    auto a = presentation(PresentationId::ft(n));
    std::vector<Series> out;
    for (int s : a->survivors()) out.push_back(Series::gen(a, D, a->generators()[s]));
    return out;
}

Series residual(const GrtElement& a, const GrtElement& b) {
    if (a.lambda != b.lambda) return mark(false);
    const int D = std::min(a.phi.truncation(), b.phi.truncation());
    return a.phi.truncate(D) - b.phi.truncate(D);
}

Series residual(const ParcdMorphism& a, const ParcdMorphism& b) {
    if (a.source != b.source || a.target != b.target || a.value.algebra() != b.value.algebra())
        return mark(false);
    return a.value - b.value;
}

// Solver elements shared by the suites.
AssociatorCandidate solver_associator(int D, bool perturbed = false) {
    SolveOptions o;
    if (perturbed && D >= 3) o.kernel_choice[3] = {Rat(1)};
    auto s = solve_degreewise(SolveTarget::Assoc, 1, D, o);
    if (!s.ok) throw Error("associator solve failed at degree " + std::to_string(s.failed_degree));
    return {1, s.phi, D};
}

GrtElement solver_grt(int D, const Rat& c3, const Rat& c5, const Rat& lambda = 1) {
    SolveOptions o;
    if (D >= 3) o.kernel_choice[3] = {c3};
    if (D >= 5) o.kernel_choice[5] = {c5};
    auto s = solve_degreewise(SolveTarget::GRT1, 1, D, o);
    if (!s.ok) throw Error("GRT1 solve failed at degree " + std::to_string(s.failed_degree));
    GrtElement g{1, s.phi, D};
    return lambda == 1 ? g : grt_scale(g, lambda);
}

// Hilbert series oracle: U(t_n) = prod_{k<n} 1/(1-kt); framing adds (1-t)^{-n};
// sph(n) matches ft(n) and fB(n) matches ft(n-1).
std::vector<long> hilbert(const PresentationId& p, int D) {
    int n = p.n;
    bool framed = p.framed;
    if (p.kind == Kind::FB) n -= 1;
    std::vector<long> h(static_cast<std::size_t>(D) + 1, 0);
    h[0] = 1;
    auto mul_geometric = [&](long k) {
        for (int d = 1; d <= D; ++d) h[d] += k * h[d - 1];
    };
    for (int k = 1; k < n; ++k) mul_geometric(k);
    if (framed)
        for (int k = 0; k < n; ++k) mul_geometric(1);
    return h;
}

EquationReport relations_for(const PresentationId& p, int D, std::uint64_t seed) {
    EquationReport r;
    r.degree = D;
    auto P = presentation(p);
    P->require_degree(D);
    auto cover = cover_algebra(p);
    const auto desc = p.descriptor();
    std::vector<Series> rels;
    for (const auto& s : relation_set(p)) rels.push_back(Series::from_terms(cover, D, s.terms()));

    FirstNonzero gens, ideal;
    for (const auto& s : rels) gens.add(normal_form(s));
    r.add("rel." + desc + ".generators", "relation generators reduce to zero in " + desc, gens.get());

    std::vector<Series> letters;
    for (const auto& g : cover->generators()) letters.push_back(Series::gen(cover, D, g));
    std::mt19937_64 rng(seed);
    for (const auto& s : rels) {
        if (D >= 3)
            for (const auto& g : letters) {
                ideal.add(normal_form(g * s));
                ideal.add(normal_form(s * g));
            }
        if (D >= 4)
            for (int k = 0; k < 4; ++k) {
                const auto& u = letters[rng() % letters.size()];
                const auto& v = letters[rng() % letters.size()];
                ideal.add(normal_form(u * s * v));
                ideal.add(normal_form(u * v * s));
            }
    }
    r.add("rel." + desc + ".ideal", "ideal multiples of the relations reduce to zero up to degree " +
                                        std::to_string(D),
          ideal.get());

    const auto h = hilbert(p, D);
    bool same = true;
    std::string dims;
    for (int d = 0; d <= D; ++d) {
        same = same && static_cast<long>(P->dimension(d)) == h[d];
        dims += (d ? "," : "") + std::to_string(P->dimension(d));
    }
    r.add("hilbert." + desc, "graded dimensions [" + dims + "] against the product formula",
          mark(same));
    return r;
}

SuiteResult suite_relations(const RunConfig& cfg) {
    SuiteResult s{"relations", {}, {}, false};
    std::vector<PresentationId> ps;
    for (int n = 1; n <= 5; ++n) ps.push_back(PresentationId::ft(n));
    for (int n = 2; n <= 4; ++n) ps.push_back(PresentationId::t(n));
    for (int n = 2; n <= 4; ++n) ps.push_back(PresentationId::sph(n));
    for (int n = 3; n <= 5; ++n) ps.push_back(PresentationId::fB(n));
    for (const auto& p : ps)
        s.sections.push_back({p.descriptor(), relations_for(p, cfg.degree_for(p.n), cfg.seed)});
    return s;
}

SuiteResult suite_operad(const RunConfig& cfg) {
    SuiteResult s{"operad", {}, {}, false};
    const int D = std::min(3, cfg.degree_for(5));
    EquationReport r;
    r.degree = D;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
            if (n + m - 1 > 5) continue;
            FirstNonzero left, right;
            auto An = presentation(PresentationId::ft(n));
            auto Am = presentation(PresentationId::ft(m));
            for (int k = 1; k <= n; ++k) {
                auto target = presentation(PresentationId::ft(n + m - 1));
                auto one_n = Series::one(An, D), one_m = Series::one(Am, D);
                for (const auto& rel : relation_set(PresentationId::ft(n))) {
                    Series rr = Series::from_terms(rel.algebra(), D, rel.terms());
                    left.add(relabel(rr, target, [&](const GeneratorId& g) {
                        return operad_insert(Series::gen(An, D, g), k, one_m);
                    }));
                }
                for (const auto& rel : relation_set(PresentationId::ft(m))) {
                    Series rr = Series::from_terms(rel.algebra(), D, rel.terms());
                    right.add(relabel(rr, target, [&](const GeneratorId& g) {
                        return operad_insert(one_n, k, Series::gen(Am, D, g));
                    }));
                }
            }
            const auto tag = std::to_string(n) + "." + std::to_string(m);
            r.add("operad.insert.outer." + tag, "insertion into ft(" + std::to_string(n) +
                                                     ") carries its relations to zero", left.get());
            r.add("operad.insert.inner." + tag, "insertion of ft(" + std::to_string(m) +
                                                     ") carries its relations to zero", right.get());
        }
    std::mt19937_64 rng(cfg.seed);
    FirstNonzero unit, assoc;
    for (int n = 1; n <= 3; ++n) {
        Series x = random_element(n, D, rng);
        auto one1 = Series::one(presentation(PresentationId::ft(1)), D);
        for (int k = 1; k <= n; ++k) unit.add(operad_insert(x, k, one1) - x);
        unit.add(operad_insert(one1, 1, x) - x);
        for (int m = 1; m + n <= 4; ++m) {
            Series y = random_element(m, D, rng);
            Series z = random_element(2, D, rng);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= m; ++j)
                    assoc.add(operad_insert(operad_insert(x, i, y), i + j - 1, z) -
                              operad_insert(x, i, operad_insert(y, j, z)));
        }
    }
    r.add("operad.unit", "insertion of and into the unit", unit.get());
    r.add("operad.associativity", "sequential insertion is associative", assoc.get());
    s.sections.push_back({"insertion", r});
    return s;
}

SuiteResult suite_cyclic(const RunConfig& cfg) {
    SuiteResult s{"cyclic", {}, {}, false};
    const int D = std::min(3, cfg.degree_for(4));
    EquationReport r;
    r.degree = D;
    for (auto S : {CyclicStrategy::Transposition, CyclicStrategy::Spherical}) {
        const std::string sn = S == CyclicStrategy::Transposition ? "S1" : "S2";
        auto z = [&](const Series& a) { return cyclic_rotate(a, 1, S); };
        FirstNonzero inner, outer;
        for (int n = 1; n <= 3; ++n)
            for (int m = 1; m <= 3; ++m) {
                if (n + m - 1 > 4) continue;
                for (const auto& x : generators_of(n, D))
                    for (const auto& y : generators_of(m, D)) {
                        for (int i = 2; i <= n; ++i)
                            inner.add(z(operad_insert(x, i, y)) - operad_insert(z(x), i - 1, y));
                        outer.add(z(operad_insert(x, 1, y)) - operad_insert(z(y), m, z(x)));
                    }
            }
        r.add("cyclic.axiom.inner." + sn, "cyclic axiom, insertion at i >= 2, generator pairs",
              inner.get());
        r.add("cyclic.axiom.outer." + sn, "cyclic axiom, insertion at 1, generator pairs", outer.get());
    }
    std::mt19937_64 rng(cfg.seed);
    FirstNonzero order, agree;
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k < 3; ++k) {
            Series a = random_element(n, D, rng);
            order.add(cyclic_rotate(a, n + 1) - a);
        }
    for (int k = 0; k < 50; ++k) {
        const int n = 1 + static_cast<int>(rng() % 4);
        Series a = random_element(n, D, rng);
        const int j = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        agree.add(cyclic_rotate(a, j, CyclicStrategy::Transposition) -
                  cyclic_rotate(a, j, CyclicStrategy::Spherical));
    }
    r.add("cyclic.order", "z^(n+1) = id on random elements", order.get());
    r.add("cyclic.strategies", "transposition and spherical strategies agree on 50 random elements",
          agree.get());
    auto f2 = presentation(PresentationId::ft(2));
    Series t12 = Series::gen(f2, D, GeneratorId::t(1, 2));
    r.add("cyclic.transposition.t12", "(01) transposition sends t12 to -(t12 + t22)",
          transposition01(t12) + t12 + Series::gen(f2, D, GeneratorId::t(2, 2)));
    s.sections.push_back({"cyclic structure", r});
    return s;
}

EquationReport group_law(const GrtElement& g1, const GrtElement& g2, const GrtElement& g3) {
    const int D = std::min({g1.phi.truncation(), g2.phi.truncation(), g3.phi.truncation()});
    EquationReport r;
    r.degree = D;
    const auto id = grt_identity(D);
    r.add("grt.mul.unit", "identity element of the twisted product",
          residual(grt_mul(g1, id), g1) + residual(grt_mul(id, g1), g1));
    r.add("grt.mul.assoc", "twisted product is associative",
          residual(grt_mul(grt_mul(g1, g2), g3), grt_mul(g1, grt_mul(g2, g3))));
    r.add("grt.mul.inverse", "inverse for the twisted product",
          residual(grt_mul(g2, grt_inverse(g2)), id) + residual(grt_mul(grt_inverse(g2), g2), id));
    const Rat mu(3, 2);
    // Letter rescaling is an automorphism of GRT1 (the lambda = 1 part).
    auto r1 = [&](const GrtElement& g) { return GrtElement{1, grt_scale(g, mu).phi, g.certified_degree}; };
    const GrtElement h1{1, g1.phi, D}, h3{1, g3.phi, D};
    r.add("grt.scale.hom", "letter rescaling is an automorphism of GRT1",
          residual(r1(grt_mul(h1, h3)), grt_mul(r1(h1), r1(h3))));
    r.add("grt.scale.unit", "scaling the unit", residual(grt_scale(id, mu), GrtElement{mu, id.phi, D}));
    EquationReport closed = verify_grt1(grt_mul(g1, g2).phi, D);
    for (auto& e : closed.entries) e.id = "grt.mul.closed." + e.id;
    r.append(closed);
    return r;
}

SuiteResult suite_grt(const RunConfig& cfg) {
    SuiteResult s{"grt", {}, {}, false};
    const int D = cfg.degree_for(4);
    if (cfg.phi_file) {
        auto e = load_phi(*cfg.phi_file);
        const int Dp = std::min(D, e.phi.truncation());
        auto rep = verify_grt1(e.phi, Dp);
        s.sections.push_back({"equations for " + *cfg.phi_file, rep});
        s.sections.push_back({"equations for " + *cfg.phi_file + " in t(3)/c",
                              verify_grt1(e.phi, Dp, HexagonMode::Quotient)});
        return s;
    }
    auto sol = solve_degreewise(SolveTarget::GRT1, 1, D);
    EquationReport kern;
    kern.degree = D;
    bool below = true, at3 = true;
    std::string dims;
    for (const auto& d : sol.degrees) {
        dims += (dims.empty() ? "" : ",") + std::to_string(d.kernel_dim);
        if (d.degree < 3) below = below && d.kernel_dim == 0;
        if (d.degree == 3) at3 = d.kernel_dim >= 1;
    }
    kern.add("solve.grt1.low", "no GRT1 solutions below degree 3, kernel dims [" + dims + "]",
             mark(sol.ok && below));
    kern.add("solve.grt1.degree3", "GRT1 kernel at degree 3 is nonzero", mark(D < 3 || at3));
    s.sections.push_back({"GRT1 solver", kern});

    auto g1 = solver_grt(D, 1, 1);
    auto g2 = solver_grt(D, -2, 3, 2);
    auto g3 = solver_grt(D, Rat(1, 3), -1, Rat(-1, 2));
    s.sections.push_back({"equations, kernel element", verify_grt1(g1.phi, D)});
    s.sections.push_back({"equations, kernel element, t(3)/c", verify_grt1(g1.phi, D, HexagonMode::Quotient)});
    s.sections.push_back({"group law", group_law(g1, g2, g3)});
    return s;
}

SuiteResult suite_associator(const RunConfig& cfg) {
    SuiteResult s{"associator", {}, {}, false};
    const int D = cfg.degree_for(4);
    if (cfg.phi_file) {
        auto e = load_phi(*cfg.phi_file);
        const int Dp = std::min(D, e.phi.truncation());
        s.sections.push_back({"equations for " + *cfg.phi_file, verify_associator(e.lambda, e.phi, Dp)});
        return s;
    }
    auto sol = solve_degreewise(SolveTarget::Assoc, 1, D);
    EquationReport sv;
    sv.degree = D;
    sv.add("solve.assoc", "degree-wise associator solve at lambda = 1", mark(sol.ok));
    if (D >= 2)
        sv.add("assoc.xy-coefficient", "degree-2 [x,y] coefficient -lambda^2/24 forced by the hexagon",
               Series::scalar(free_xy(), 0, bracket_coefficient(sol.phi) + Rat(1, 24)));
    s.sections.push_back({"associator solver", sv});
    const AssociatorCandidate a{1, sol.phi, D};
    s.sections.push_back({"equations", verify_associator(a.lambda, a.phi, D)});
    const auto a2 = solver_associator(D, true);
    s.sections.push_back({"equations, kernel-perturbed", verify_associator(a2.lambda, a2.phi, D)});

    const int T = std::min(3, D);
    auto at = [&](const AssociatorCandidate& x) { return AssociatorCandidate{x.lambda, x.phi.truncate(T), T}; };
    auto g1 = solver_grt(T, 1, 1), g2 = solver_grt(T, -2, 3, 2);
    EquationReport tor;
    tor.degree = T;
    auto res = [&](const AssociatorCandidate& x, const AssociatorCandidate& y) {
        return residual(GrtElement{x.lambda, x.phi, 0}, GrtElement{y.lambda, y.phi, 0});
    };
    tor.add("torsor.identity", "identity of GRT acts trivially",
            res(torsor_act(at(a), grt_identity(T)), at(a)));
    tor.add("torsor.compatibility", "acting by g1 then g2 equals acting by the composite",
            res(torsor_act(torsor_act(at(a), g1), g2), torsor_act(at(a), grt_compose_action(g1, g2))));
    tor.add("torsor.transitive", "the element carrying one associator to another",
            res(torsor_act(at(a), grt_compose_action(GrtElement{1, series_inverse(at(a).phi), 0},
                                                     GrtElement{1, at(a2).phi, 0})),
                at(a2)));
    s.sections.push_back({"torsor", tor});
    return s;
}

SuiteResult suite_fivecycle(const RunConfig& cfg) {
    SuiteResult s{"fivecycle", {}, {}, false};
    const int D = cfg.degree_for(5);
    const auto a = solver_associator(std::max(D, cfg.degree_for(4)));
    const auto g = solver_grt(std::max(D, cfg.degree_for(4)), 1, 1);
    s.sections.push_back({"solver associator", verify_5cycle(a.phi, D)});
    s.sections.push_back({"GRT1 element", verify_5cycle(g.phi, D)});
    EquationReport r;
    r.degree = D;
    // A perturbation at degree 3 outside the GRT1 kernel must break both forms.
    auto F = free_xy();
    Series x = Series::gen(F, D, GeneratorId::letter(0)), y = Series::gen(F, D, GeneratorId::letter(1));
    Series bad = a.phi.truncate(D) * series_exp(bracket(x, bracket(x, y)));
    const bool pent = pentagon_defect_ft4(bad, D).is_zero();
    const bool five = verify_5cycle(bad, D).ok();
    r.add("fivecycle.perturbed.detected", "pentagon and 5-cycle both detect a degree-3 perturbation",
          mark(!pent && !five));
    r.add("fivecycle.solver.pentagon", "pentagon defect of the solver associator in ft(4)",
          pentagon_defect_ft4(a.phi, D));
    s.sections.push_back({"perturbation consistency", r});
    return s;
}

SuiteResult suite_props(const RunConfig& cfg) {
    SuiteResult s{"props", {}, {}, false};
    const int D = std::min(3, cfg.degree_for(5));
    std::map<std::string, FirstNonzero> agg;
    std::map<std::string, std::string> anchors;
    std::vector<std::string> order;
    for (int k = 0; k < 20; ++k) {
        auto rep = verify_cyclic_identities(random_grouplike(D, cfg.seed * 1000 + k), D);
        for (const auto& e : rep.entries) {
            if (e.conditional) continue;
            if (!agg.count(e.id)) order.push_back(e.id);
            agg[e.id].add(e.value);
            anchors[e.id] = e.anchor;
        }
    }
    EquationReport rnd;
    rnd.degree = D;
    for (const auto& id : order) rnd.add(id, anchors[id], agg[id].get());
    s.sections.push_back({"unconditional identities, 20 random group-like elements", rnd});
    // GRT1 degree-3 kernel element, certified to D.
    s.sections.push_back({"all identities, GRT1 solver element",
                          verify_cyclic_identities(solver_grt(D, 1, 1).phi, D)});
    return s;
}

SuiteResult suite_parcd(const RunConfig& cfg) {
    SuiteResult s{"parcd", {}, {}, false};
    const int D = std::min(3, cfg.degree_for(4));
    EquationReport ob;
    ob.degree = D;
    ob.add("magma.example.1", "(1(23)) o_3 (21) = (1(2(43)))",
           mark(magma_compose(ParenTree::parse("(1(23))"), 3, ParenTree::parse("(21)")) ==
                ParenTree::parse("(1(2(43)))")));
    ob.add("magma.example.2", "(12) o_1 (12) = ((12)3)",
           mark(magma_compose(ParenTree::parse("(12)"), 1, ParenTree::parse("(12)")) ==
                ParenTree::parse("((12)3)")));
    for (auto t : all_tags()) {
        auto m = ParcdExpr::gen(t).evaluate(D);
        ob.add("zstar." + tag_name(t), "displayed z* rule on " + tag_name(t),
               residual(cyclic_act(m), cyclic_generator_image(t).evaluate(D)));
    }
    FirstNonzero ax;
    for (auto t1 : all_tags())
        for (auto t2 : all_tags()) {
            auto x = ParcdExpr::gen(t1, Rat(1, 2)).evaluate(D);
            auto y = ParcdExpr::gen(t2, Rat(1, 3)).evaluate(D);
            const int n = x.arity(), m = y.arity();
            if (n + m - 1 > 4) continue;
            auto z = [](const ParcdMorphism& f) { return cyclic_act(f, CyclicConvention::Rotation); };
            for (int i = 2; i <= n; ++i) ax.add(residual(z(op_compose(x, i, y)), op_compose(z(x), i - 1, y)));
            ax.add(residual(z(op_compose(x, 1, y)), op_compose(z(y), m, z(x))));
        }
    ob.add("zstar.axiom", "cyclic axiom on compositions of generator pairs", ax.get());
    s.sections.push_back({"objects and cyclic action", ob});

    const auto a = solver_associator(cfg.degree_for(4));
    const AssociatorCandidate aD{a.lambda, a.phi.truncate(D), D};
    s.sections.push_back({"associator functor", associator_cyclic_check(aD, D)});
    EquationReport tw = ribbon_twist_check(1, 1, D);
    tw.add("ribbon.twist.unequal", "lambda != mu leaves a nonzero twist residual",
           mark(!ribbon_twist_check(1, 2, D).ok() && !ribbon_twist_check(Rat(1, 2), 3, D).ok()));
    s.sections.push_back({"ribbon twist", tw});

    const auto g1 = solver_grt(D, 1, 1);
    const auto g2 = solver_grt(D, -2, 3, 2);
    s.sections.push_back({"GRT commutes with z*, element 1", grt_cyclic_check(g1, D)});
    s.sections.push_back({"GRT commutes with z*, element 2", grt_cyclic_check(g2, D)});
    EquationReport law;
    law.degree = D;
    for (auto t : all_tags()) {
        auto e = ParcdExpr::gen(t);
        law.add("grt.action.law." + tag_name(t), "g1(g2(f)) is the action of the composite pair",
                residual(e.act(g2).act(g1).evaluate(D),
                         grt_automorphism(grt_compose_action(g2, g1), e, D)));
    }
    s.sections.push_back({"group-action law", law});
    return s;
}

ChordMorphism sample_slice_word(int w, int C, std::mt19937_64& rng) {
    return morphism_of(CObject::plus(w), {Layer::slice(random_element(w, C, rng))});
}

SuiteResult suite_chordcat(const RunConfig& cfg) {
    SuiteResult s{"chordcat", {}, {}, false};
    const auto cc = cfg.chord();
    const int C = cc.chord_degree;
    const int D = std::max(C, std::min(4, cfg.degree_for(4)));
    const auto a = solver_associator(D);
    const auto a2 = solver_associator(D, true);
    s.sections.push_back({"relations", relation_checks(a, cc)});
    const auto g = solver_grt(D, 1, 1, 2);
    s.sections.push_back({"unknot chain, G'", unknot_chain_verify(g, a, ActVariant::Gprime, cc)});
    s.sections.push_back({"unknot chain, rho", unknot_chain_verify(g, a, ActVariant::Rho, cc)});

    EquationReport r;
    r.degree = C;
    auto one1 = Series::one(presentation(PresentationId::ft(1)), C);
    r.add("omega.independent", "omega inverse agrees for two certified associators",
          omega_inverse(a, cc) - omega_inverse(a2, cc));
    r.add("nu.trivial", "nu of the unit series is the identity", nu_of(Series::one(free_xy(), C), cc) - one1);
    Series br = series_exp(bracket(Series::gen(free_xy(), C, GeneratorId::letter(0)),
                                   Series::gen(free_xy(), C, GeneratorId::letter(1))) * Rat(1, 7));
    r.add("nu.bracket.linear", "nu of exp(c[x,y]) has no degree-1 part",
          nu_of(br, cc).degree_part(1));
    Series nl = series_log(nu_of(a.phi, cc));
    r.add("nu.grouplike", "log nu is a multiple of the framing generator",
          nl - nl.degree_part(1));

    std::mt19937_64 rng(cfg.seed);
    std::vector<ChordMorphism> samples;
    for (int w = 1; w <= 3; ++w) samples.push_back(sample_slice_word(w, C, rng));
    FirstNonzero conf, tr, ident, comp;
    const GrtElement unit = grt_identity(D);
    for (const auto& m : samples) {
        auto t = transpose(transpose(m, cc), cc);
        tr.add(mark(t.words == normalize(m, cc).words));
        ident.add(mark(grt_act(unit, m, ActVariant::Gprime, cc).words == normalize(m, cc).words));
    }
    // Words with bends, perms and slices for schedule independence.
    for (int k = 0; k < 6; ++k) {
        Series u = embed_slice(random_element(2, C, rng), 1, 4);
        Series v = embed_slice(random_element(1, C, rng), 2, 4);
        std::vector<Layer> L{Layer::cup(1), Layer::slice(u), Layer::permutation({1, 3, 2, 4}),
                             Layer::slice(v), Layer::cap(3)};
        auto m = morphism_of(CObject::plus(2), L);
        auto n0 = normalize(m, cc);
        for (std::uint64_t sd = 1; sd <= 6; ++sd) conf.add(mark(normalize(m, cc, sd).words == n0.words));
        conf.add(mark(normalize(n0, cc).words == n0.words));
        auto f = sample_slice_word(2, C, rng);
        comp.add(mark(grt_act(g, compose(m, f), ActVariant::Gprime, cc).words ==
                      normalize(compose(grt_act(g, m, ActVariant::Gprime, cc),
                                        grt_act(g, f, ActVariant::Gprime, cc)),
                                cc)
                          .words));
    }
    r.add("normalize.schedules", "random rewrite schedules reach one normal form; idempotent", conf.get());
    r.add("transpose.involution", "transpose twice is the identity on sampled slices", tr.get());
    r.add("act.unit", "the unit pair acts as the identity", ident.get());
    r.add("act.composition", "act then compose equals compose then act", comp.get());
    s.sections.push_back({"properties", r});
    return s;
}

void emit_text(const SuiteResult& r, std::ostream& out) {
    for (const auto& sec : r.sections) {
        out << "## " << r.suite << ": " << sec.title << "\n";
        out << sec.report.str();
    }
    for (const auto& n : r.notes) out << "# " << r.suite << " note: " << n << "\n";
    out << "# suite " << r.suite << " " << (r.ok() ? "PASS" : "FAIL") << "\n";
}

void emit_structured(const SuiteResult& r, std::ostream& out) {
    using nlohmann::json;
    for (const auto& sec : r.sections)
        for (const auto& e : sec.report.entries) {
            json j{{"type", "record"},
                   {"suite", r.suite},
                   {"section", sec.title},
                   {"id", e.id},
                   {"anchor", e.anchor},
                   {"conditional", e.conditional},
                   {"status", e.value.is_zero() ? "PASS" : "FAIL"},
                   {"degree", e.value.truncation()},
                   {"support", e.value.size()},
                   {"first", first_term(e.value)}};
            out << j.dump() << "\n";
        }
    for (const auto& n : r.notes) out << json{{"type", "note"}, {"suite", r.suite}, {"text", n}}.dump() << "\n";
    out << json{{"type", "suite"}, {"suite", r.suite}, {"status", r.ok() ? "PASS" : "FAIL"}}.dump() << "\n";
}

std::string config_line(const std::string& suite, const RunConfig& cfg) {
    std::ostringstream os;
    os << "suite=" << suite << " degree="
       << (cfg.degree ? std::to_string(*cfg.degree) : std::string("default(4; 3 for n=5)"))
       << " chord-degree=" << cfg.chord_degree << " width=" << cfg.width_bound << " seed=" << cfg.seed
       << " cache=" << (cfg.cache_dir ? "on" : "off");
    if (cfg.phi_file) os << " phi=" << *cfg.phi_file;
    return os.str();
}

}  // namespace

int RunConfig::degree_for(int n) const {
    if (degree) return *degree;
    return n <= 4 ? 4 : 3;
}

bool SuiteResult::ok() const {
    if (failed) return false;
    for (const auto& s : sections)
        if (!s.report.ok()) return false;
    return true;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> v{"relations", "operad",    "cyclic", "grt",     "associator",
                                            "fivecycle", "props",     "parcd",  "chordcat"};
    return v;
}

SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
    try {
        if (name == "relations") return suite_relations(cfg);
        if (name == "operad") return suite_operad(cfg);
        if (name == "cyclic") return suite_cyclic(cfg);
        if (name == "grt") return suite_grt(cfg);
        if (name == "associator") return suite_associator(cfg);
        if (name == "fivecycle") return suite_fivecycle(cfg);
        if (name == "props") return suite_props(cfg);
        if (name == "parcd") return suite_parcd(cfg);
        if (name == "chordcat") return suite_chordcat(cfg);
    } catch (const Error& e) {
        return {name, {}, {std::string("error: ") + e.what()}, true};
    }
    throw Error("unknown suite " + name);
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& out) {
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names = {suite};
    for (const auto& n : names)
        if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
            throw Error("unknown suite " + n);
    set_table_cache_dir(cfg.cache_dir);
    std::vector<SuiteResult> results;
    if (cfg.parallel && names.size() > 1) {
        std::vector<std::future<SuiteResult>> fs;
        for (const auto& n : names) fs.push_back(std::async(std::launch::async, run_suite, n, cfg));
        for (auto& f : fs) results.push_back(f.get());
    } else {
        for (const auto& n : names) results.push_back(run_suite(n, cfg));
    }
    std::size_t records = 0, failed = 0;
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.ok();
        for (const auto& s : r.sections)
            for (const auto& e : s.report.entries) {
                ++records;
                if (!e.value.is_zero()) ++failed;
            }
    }
    if (cfg.format == ReportFormat::Text) {
        out << "# verify " << config_line(suite, cfg) << "\n";
        for (const auto& r : results) emit_text(r, out);
        out << "# summary " << (ok ? "PASS" : "FAIL") << " records=" << records << " failed=" << failed
            << "\n";
    } else {
        using nlohmann::json;
        out << json{{"type", "config"}, {"text", config_line(suite, cfg)}}.dump() << "\n";
        for (const auto& r : results) emit_structured(r, out);
        out << json{{"type", "summary"}, {"status", ok ? "PASS" : "FAIL"}, {"records", records},
                    {"failed", failed}}
                   .dump()
            << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_solve(const SolveCommand& c, const RunConfig& cfg, std::ostream& out) {
    set_table_cache_dir(cfg.cache_dir);
    SolveOptions o;
    o.kernel_choice = c.kernel_choice;
    auto s = solve_degreewise(c.target, c.lambda, c.degree, o);
    out << "# solve " << (c.target == SolveTarget::GRT1 ? "grt1" : "assoc") << " lambda="
        << c.lambda.get_str() << " degree=" << c.degree << "\n";
    out << "degree | unknowns | equations | rank | kernel | consistent\n";
    for (const auto& d : s.degrees)
        out << d.degree << " | " << d.unknowns << " | " << d.equations << " | " << d.rank << " | "
            << d.kernel_dim << " | " << (d.consistent ? "yes" : "no") << "\n";
    if (!s.ok) {
        out << "# inconsistent system at degree " << s.failed_degree << "\n";
        return 1;
    }
    const int cert = c.degree;
    EquationReport rep = c.target == SolveTarget::GRT1 ? verify_grt1(s.phi, cert)
                                                       : verify_associator(s.lambda, s.phi, cert);
    out << rep.str();
    if (!rep.ok()) return 1;
    if (c.degree >= 2) out << "# [x,y] coefficient " << bracket_coefficient(s.phi).get_str() << "\n";
    if (!c.out_file.empty()) {
        std::ofstream f(c.out_file);
        f << write_element(s.lambda, s.phi, cert);
        if (!f) throw Error("cannot write " + c.out_file);
        out << "# wrote " << c.out_file << "\n";
    }
    return 0;
}

ElementFile load_phi(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    std::istringstream is(text);
    std::string first;
    while (is >> first && first[0] == '#') {
        std::string rest;
        std::getline(is, rest);
    }
    if (first == "element") return read_element(text);
    return {1, read_series(text, resolve_algebra), 0};
}

std::optional<std::string> resolve_cache_dir(const std::optional<std::string>& flag) {
    if (flag) return flag;
    if (const char* env = std::getenv("ARTIFACT_CACHE_DIR"); env && *env) return std::string(env);
    return std::nullopt;
}

}  // namespace artifact
