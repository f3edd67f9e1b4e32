// SPDX-License-Identifier: Apache-2.0
#include "artifact/grteq.hpp"

#include <random>
#include <sstream>

namespace artifact {

namespace {

Series T(const std::shared_ptr<const Algebra>& a, int D, int i, int j) {
    return Series::gen(a, D, GeneratorId::t(i, j));
}
Series X(const std::shared_ptr<const Algebra>& a, int D, int i, int j) {
    return Series::gen(a, D, GeneratorId::X(i, j));
}

Series at(const Series& phi, int D) {
    if (phi.truncation() < D)
        throw Error("series truncated at " + std::to_string(phi.truncation()) +
                    ", need degree " + std::to_string(D));
    return phi.truncation() == D ? phi : phi.truncate(D);
}

void require_grouplike(const Series& phi, int D) {
    if (phi.algebra()->descriptor() != "free(x,y)")
        throw Error("phi must live in free(x,y), got " + phi.algebra()->descriptor());
    Witness w = is_grouplike(at(phi, D));
    if (!w.ok) throw Error("phi is not group-like: " + w.detail);
}

std::string first_term(const Series& s) {
    if (s.is_zero()) return "-";
    Series one = s.degree_part(s.min_degree());
    std::string t = one.str();
    auto cut = t.find(" + ");
    return cut == std::string::npos ? t : t.substr(0, cut);
}

}  // namespace

bool EquationReport::ok() const {
    for (const auto& e : entries)
        if (!e.value.is_zero()) return false;
    return true;
}

void EquationReport::add(std::string id, std::string anchor, Series value, bool conditional) {
    entries.push_back({std::move(id), std::move(anchor), conditional, std::move(value)});
}

void EquationReport::append(const EquationReport& o) {
    entries.insert(entries.end(), o.entries.begin(), o.entries.end());
    degree = std::max(degree, o.degree);
}

std::string EquationReport::str() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << e.id << " | " << e.anchor << " | " << (e.conditional ? "conditional" : "unconditional")
           << " | " << (e.value.is_zero() ? "PASS" : "FAIL") << " | degree<=" << e.value.truncation()
           << " | support=" << e.value.size() << " | first=" << first_term(e.value) << "\n";
    }
    return os.str();
}

Series eval2(const Series& phi, const Series& a, const Series& b) {
    return substitute(phi, a, b);
}

// ---- equations ----

namespace {

Series involution_residual(const Series& P, int D) {
    auto F = free_xy();
    Series x = Series::gen(F, D, GeneratorId::letter(0));
    Series y = Series::gen(F, D, GeneratorId::letter(1));
    return P * eval2(P, y, x) - Series::one(F, D);
}

std::shared_ptr<const Algebra> hexagon_algebra(HexagonMode mode) {
    PresentationId p = PresentationId::t(3);
    p.central_quotient = mode == HexagonMode::Quotient;
    return presentation(p);
}

// Third letter of the hexagon: -x-y by substitution, or t13 modulo the center.
Series hexagon_z(const std::shared_ptr<const Algebra>& a, int D, HexagonMode mode) {
    if (mode == HexagonMode::Quotient) return T(a, D, 1, 3);
    return -(T(a, D, 1, 2) + T(a, D, 2, 3));
}

Series hexagon_residual(const Series& P, int D, HexagonMode mode) {
    auto a = hexagon_algebra(mode);
    Series x = T(a, D, 1, 2), y = T(a, D, 2, 3), z = hexagon_z(a, D, mode);
    return eval2(P, x, y) * eval2(P, y, z) * eval2(P, z, x) - Series::one(a, D);
}

Series hexagon_lambda_residual(const Rat& lambda, const Series& P, int D, HexagonMode mode) {
    auto a = hexagon_algebra(mode);
    Series t12 = T(a, D, 1, 2), t23 = T(a, D, 2, 3), t31 = hexagon_z(a, D, mode);
    Rat h = lambda / 2;
    return eval2(P, t12, t23) * series_exp(t23 * h) * eval2(P, t23, t31) *
               series_exp(t31 * h) * eval2(P, t31, t12) * series_exp(t12 * h) -
           Series::one(a, D);
}

Series pentagon_in(const Series& P, const std::shared_ptr<const Algebra>& a, int D) {
    auto t = [&](int i, int j) { return T(a, D, i, j); };
    Series lhs = eval2(P, t(1, 2), t(2, 3)) * eval2(P, t(1, 2) + t(1, 3), t(2, 4) + t(3, 4)) *
                 eval2(P, t(2, 3), t(3, 4));
    Series rhs = eval2(P, t(1, 3) + t(2, 3), t(3, 4)) * eval2(P, t(1, 2), t(2, 3) + t(2, 4));
    return lhs - rhs;
}

Series pentagon_residual(const Series& P, int D) {
    return pentagon_in(P, presentation(PresentationId::t(4)), D);
}

}  // namespace

Series pentagon_defect_ft4(const Series& phi, int D) {
    return pentagon_in(at(phi, D), presentation(PresentationId::ft(4)), D);
}

EquationReport verify_grt1(const Series& phi, int D, HexagonMode mode) {
    require_grouplike(phi, D);
    Series P = at(phi, D);
    EquationReport r;
    r.degree = D;
    r.add("grt1.I", "involution Phi(x,y)Phi(y,x)=1 in free(x,y)", involution_residual(P, D));
    r.add("grt1.H",
          mode == HexagonMode::Quotient ? "hexagon Phi(x,y)Phi(y,z)Phi(z,x)=1 in t(3)/c"
                                        : "hexagon Phi(x,y)Phi(y,z)Phi(z,x)=1, z=-x-y, in t(3)",
          hexagon_residual(P, D, mode));
    r.add("grt1.P", "pentagon in t(4)", pentagon_residual(P, D));
    return r;
}

EquationReport verify_associator(const Rat& lambda, const Series& phi, int D, HexagonMode mode) {
    if (lambda == 0) throw Error("associator lambda must be nonzero");
    require_grouplike(phi, D);
    Series P = at(phi, D);
    EquationReport r;
    r.degree = D;
    r.add("assoc.I", "involution Phi(x,y)Phi(y,x)=1 in free(x,y)", involution_residual(P, D));
    r.add("assoc.H",
          "hexagon with exp(lambda t/2) factors, t12+t23+t13=0, in t(3)",
          hexagon_lambda_residual(lambda, P, D, mode));
    r.add("assoc.P", "pentagon in t(4)", pentagon_residual(P, D));
    return r;
}

EquationReport verify_5cycle(const Series& phi, int D) {
    require_grouplike(phi, D);
    Series P = at(phi, D);
    auto a = presentation(PresentationId::fB(5));
    auto x = [&](int i, int j) { return X(a, D, i, j); };
    EquationReport r;
    r.degree = D;
    Series cyc = eval2(P, x(1, 2), x(2, 3)) * eval2(P, x(3, 4), x(4, 5)) *
                 eval2(P, x(5, 1), x(1, 2)) * eval2(P, x(2, 3), x(3, 4)) *
                 eval2(P, x(4, 5), x(5, 1));
    r.add("fivecycle.product", "5-cycle product = 1 in fB(5)", cyc - Series::one(a, D));
    Series lhs = eval2(P, x(1, 2), x(5, 1)) * eval2(P, x(4, 5), x(3, 4));
    Series rhs = eval2(P, x(2, 3), x(3, 4)) * eval2(P, x(4, 5), x(5, 1)) *
                 eval2(P, x(1, 2), x(2, 3));
    r.add("fivecycle.rearranged", "rearranged 5-cycle in fB(5)", lhs - rhs);
    return r;
}

// ---- group law ----

namespace {

Series rescale(const Series& phi, const Rat& mu) {
    auto F = phi.algebra();
    const int D = phi.truncation();
    Series x = Series::gen(F, D, GeneratorId::letter(0)) * mu;
    Series y = Series::gen(F, D, GeneratorId::letter(1)) * mu;
    return eval2(phi, x, y);
}

int common_degree(const GrtElement& a, const GrtElement& b) {
    return std::min(a.phi.truncation(), b.phi.truncation());
}

}  // namespace

GrtElement grt_identity(int D) { return {Rat(1), Series::one(free_xy(), D), D}; }

GrtElement grt_mul(const GrtElement& g1, const GrtElement& g2) {
    const int D = common_degree(g1, g2);
    auto F = free_xy();
    Series p1 = rescale(at(g1.phi, D), g2.lambda);
    Series p2 = at(g2.phi, D);
    Series x = Series::gen(F, D, GeneratorId::letter(0));
    Series y = Series::gen(F, D, GeneratorId::letter(1));
    Series conj = series_inverse(p2) * x * p2;
    Series prod = eval2(p1, conj, y) * p2;
    return {g1.lambda * g2.lambda, prod, std::min(g1.certified_degree, g2.certified_degree)};
}

GrtElement grt_compose_action(const GrtElement& g1, const GrtElement& g2) {
    const int D = common_degree(g1, g2);
    auto F = free_xy();
    Series p2 = at(g2.phi, D);
    Series x = Series::gen(F, D, GeneratorId::letter(0)) * g2.lambda;
    Series y = Series::gen(F, D, GeneratorId::letter(1)) * g2.lambda;
    Series prod = eval2(at(g1.phi, D), x, p2 * y * series_inverse(p2)) * p2;
    return {g1.lambda * g2.lambda, prod, std::min(g1.certified_degree, g2.certified_degree)};
}

GrtElement grt_scale(const GrtElement& g, const Rat& mu) {
    if (mu == 0) throw Error("scale must be nonzero");
    return {g.lambda * mu, rescale(g.phi, Rat(1) / mu), g.certified_degree};
}

GrtElement grt_inverse(const GrtElement& g) {
    if (g.lambda == 0) throw Error("lambda must be nonzero");
    const int D = g.phi.truncation();
    auto F = free_xy();
    const Rat li = Rat(1) / g.lambda;
    Series x = Series::gen(F, D, GeneratorId::letter(0));
    Series y = Series::gen(F, D, GeneratorId::letter(1));
    Series p = rescale(g.phi, li);
    // psi = p(psi^{-1} x psi, y)^{-1}; each pass fixes one more degree.
    Series psi = Series::one(F, D);
    for (int k = 0; k <= D; ++k) {
        Series conj = series_inverse(psi) * x * psi;
        psi = series_inverse(eval2(p, conj, y));
    }
    GrtElement inv{li, psi, g.certified_degree};
    GrtElement e = grt_mul(g, inv);
    if (e.lambda != 1 || e.phi != Series::one(F, D))
        throw Error("grt_inverse did not converge; residual " + e.phi.str());
    return inv;
}

// ---- torsor ----

AssociatorCandidate torsor_act(const AssociatorCandidate& a, const GrtElement& g) {
    const int D = std::min(a.phi.truncation(), g.phi.truncation());
    GrtElement as{a.lambda, at(a.phi, D), a.certified_degree};
    GrtElement r = grt_compose_action(as, g);
    const int cert = std::min(a.certified_degree, g.certified_degree);
    AssociatorCandidate out{r.lambda, r.phi, cert};
    if (cert > 0) {
        EquationReport rep = verify_associator(out.lambda, out.phi, cert);
        if (!rep.ok()) throw Error("torsor_act: result fails verification:\n" + rep.str());
    }
    return out;
}

// ---- Lie helpers ----

Series lie_from_lyndon(const std::vector<std::vector<Rat>>& coeffs, int D) {
    auto F = free_xy();
    Terms raw;
    for (int d = 1; d < static_cast<int>(coeffs.size()) && d <= D; ++d) {
        if (coeffs[d].empty()) continue;
        auto basis = lyndon_basis(2, d);
        if (coeffs[d].size() != basis.size())
            throw Error("degree " + std::to_string(d) + " expects " +
                        std::to_string(basis.size()) + " Lyndon coefficients");
        for (std::size_t k = 0; k < basis.size(); ++k)
            for (const auto& [m, c] : basis[k].expansion) add_term(raw, m, c * coeffs[d][k]);
    }
    return Series::from_terms(F, D, raw);
}

Series random_grouplike(int D, std::uint64_t seed, int min_degree) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Rat>> c(static_cast<std::size_t>(D) + 1);
    for (int d = std::max(1, min_degree); d <= D; ++d) {
        for (std::size_t k = 0; k < lyndon_basis(2, d).size(); ++k) {
            long num = static_cast<long>(rng() % 7) - 3;
            long den = static_cast<long>(rng() % 4) + 1;
            Rat r(num, den);
            r.canonicalize();
            c[d].push_back(r);
        }
    }
    return series_exp(lie_from_lyndon(c, D));
}

Rat bracket_coefficient(const Series& phi) {
    Series l = series_log(phi);
    auto it = l.terms().find(Monomial{{0, 1}});
    return it == l.terms().end() ? Rat(0) : it->second;
}

// ---- solver ----

namespace {

std::vector<Series> residuals(SolveTarget target, const Rat& lambda, const Series& P, int D,
                              HexagonMode mode) {
    std::vector<Series> r;
    r.push_back(involution_residual(P, D));
    r.push_back(target == SolveTarget::GRT1 ? hexagon_residual(P, D, mode)
                                            : hexagon_lambda_residual(lambda, P, D, mode));
    r.push_back(pentagon_residual(P, D));
    return r;
}

}  // namespace

SolveResult solve_degreewise(SolveTarget target, const Rat& lambda, int D,
                             const SolveOptions& opts) {
    if (D < 1 || D > 8) throw Error("solver degree must be in 1..8");
    if (target == SolveTarget::Assoc && lambda == 0) throw Error("lambda must be nonzero");
    SolveResult out{true, 0, {}, Series::one(free_xy(), D), target == SolveTarget::GRT1 ? Rat(1) : lambda};
    std::vector<std::vector<Rat>> coeffs(static_cast<std::size_t>(D) + 1);
    for (int d = 1; d <= D; ++d) {
        const auto basis = lyndon_basis(2, d);
        const int nu = static_cast<int>(basis.size());
        coeffs[d].assign(nu, Rat(0));
        auto eval = [&]() {
            Series P = series_exp(lie_from_lyndon(coeffs, d));
            return residuals(target, lambda, P, d, opts.mode);
        };
        auto base = eval();
        DegreeSolution ds;
        ds.degree = d;
        ds.unknowns = nu;
        for (const auto& s : base)
            for (const auto& [m, c] : s.terms())
                if (m.degree() < d) ds.consistent = false;
        // Rows keyed by (equation, monomial).
        std::map<std::pair<std::size_t, Monomial>, Col> rowid;
        auto row_of = [&](std::size_t e, const Monomial& m) {
            auto [it, fresh] = rowid.try_emplace({e, m}, static_cast<Col>(rowid.size()));
            return it->second;
        };
        std::vector<std::vector<SparseVec::Entry>> cols(nu);
        for (int k = 0; k < nu; ++k) {
            coeffs[d][k] = 1;
            auto rk = eval();
            coeffs[d][k] = 0;
            for (std::size_t e = 0; e < rk.size(); ++e) {
                Series diff = rk[e].degree_part(d) - base[e].degree_part(d);
                for (const auto& [m, c] : diff.terms()) cols[k].emplace_back(row_of(e, m), c);
            }
        }
        std::vector<SparseVec::Entry> rhs;
        for (std::size_t e = 0; e < base.size(); ++e) {
            Series top = base[e].degree_part(d);
            for (const auto& [m, c] : top.terms()) rhs.emplace_back(row_of(e, m), -c);
        }
        std::vector<std::vector<SparseVec::Entry>> rowsE(rowid.size());
        for (int k = 0; k < nu; ++k)
            for (auto& [r, c] : cols[k]) rowsE[r].emplace_back(static_cast<Col>(k), c);
        std::vector<SparseVec> A;
        for (auto& e : rowsE) A.push_back(SparseVec::from_entries(std::move(e)));
        AffineSolution sol = solve_affine(A, SparseVec::from_entries(std::move(rhs)),
                                          static_cast<Col>(nu));
        ds.equations = static_cast<int>(A.size());
        ds.kernel_dim = static_cast<int>(sol.kernel.rank());
        ds.rank = nu - ds.kernel_dim;
        if (!sol.particular) ds.consistent = false;
        if (ds.consistent) {
            SparseVec v = *sol.particular;
            auto kc = opts.kernel_choice.find(d);
            if (kc != opts.kernel_choice.end()) {
                if (kc->second.size() != sol.kernel.rank())
                    throw Error("kernel choice at degree " + std::to_string(d) + " needs " +
                                std::to_string(sol.kernel.rank()) + " coefficients");
                for (std::size_t i = 0; i < kc->second.size(); ++i)
                    v.axpy(kc->second[i], sol.kernel.rows[i]);
            }
            for (int k = 0; k < nu; ++k) coeffs[d][k] = v.at(static_cast<Col>(k));
        }
        ds.coefficients = coeffs[d];
        out.degrees.push_back(ds);
        if (!ds.consistent) {
            out.ok = false;
            out.failed_degree = d;
            break;
        }
    }
    out.phi = series_exp(lie_from_lyndon(coeffs, D));
    return out;
}

// ---- cyclic identity battery ----

EquationReport verify_cyclic_identities(const Series& phi, int D) {
    require_grouplike(phi, D);
    Series P = at(phi, D);
    EquationReport r;
    r.degree = D;
    auto F = [&](const Series& a, const Series& b) { return eval2(P, a, b); };
    auto inv = [](const Series& s) { return series_inverse(s); };

    {
        auto a = presentation(PresentationId::ft(3));
        auto t = [&](int i, int j) { return T(a, D, i, j); };
        auto z = [](const Series& s) { return transposition01(s); };
        const Series one = Series::one(a, D);
        r.add("cyc.H.1", "z*Phi(t12,t23) = Phi(t31,t23)", z(F(t(1, 2), t(2, 3))) - F(t(1, 3), t(2, 3)));
        r.add("cyc.H.2", "z*Phi(t13,t12) = Phi(t12,t31)", z(F(t(1, 3), t(1, 2))) - F(t(1, 2), t(1, 3)));
        r.add("cyc.H.3", "z*Phi(t23,t13) = Phi(t23,t12)", z(F(t(2, 3), t(1, 3))) - F(t(2, 3), t(1, 2)));
        r.add("cyc.I", "z*Phi(t12,t23) = (z*Phi(t23,t12))^-1",
              z(F(t(1, 2), t(2, 3))) - inv(z(F(t(2, 3), t(1, 2)))), true);
        Series hprime = F(t(1, 3), t(1, 2)) * F(t(2, 3), t(1, 3)) * F(t(1, 2), t(2, 3));
        r.add("cyc.H'", "Phi(t31,t12)Phi(t23,t31)Phi(t12,t23) = 1 in ft(3)", hprime - one, true);
        Series step1 = F(t(1, 2), t(1, 3)) * F(t(2, 3), t(1, 2)) * F(t(1, 3), t(2, 3));
        r.add("cyc.chain.1", "z* of the hexagon word = Phi(t12,t13)Phi(t23,t12)Phi(t31,t23)",
              z(hprime) - step1);
        Series step2 = inv(F(t(1, 3), t(1, 2))) * inv(F(t(1, 2), t(2, 3))) * inv(F(t(2, 3), t(1, 3)));
        r.add("cyc.chain.2", "= Phi(t13,t12)^-1 Phi(t12,t23)^-1 Phi(t23,t31)^-1", step1 - step2, true);
        Series step3 = inv(F(t(1, 3), t(1, 2))) * inv(F(t(2, 3), t(1, 3)) * F(t(1, 2), t(2, 3)));
        r.add("cyc.chain.3", "= Phi(t13,t12)^-1 (Phi(t23,t31)Phi(t12,t23))^-1", step2 - step3);
        Series step4 = inv(F(t(1, 3), t(1, 2))) * F(t(1, 3), t(1, 2));
        r.add("cyc.chain.4", "= Phi(t13,t12)^-1 Phi(t31,t12)", step3 - step4, true);
        r.add("cyc.chain.5", "= 1 = z*(1)", step4 - z(one));
        r.add("cyc.chain", "z* of the hexagon word = 1", z(hprime) - one, true);
    }

    {
        auto a4 = presentation(PresentationId::ft(4));
        auto b = presentation(PresentationId::fB(5));
        auto t = [&](int i, int j) { return T(a4, D, i, j); };
        auto x = [&](int i, int j) { return X(b, D, i, j); };
        auto zs = [](const Series& s) { return to_sphere_braid(transposition01(s)); };

        Series lhs_img = zs(F(t(1, 2), t(2, 3) + t(2, 4))) * zs(F(t(1, 3) + t(2, 3), t(3, 4)));
        r.add("cyc.P.lhs.1", "z* of the pentagon left side = Phi(X52,X23+X24)Phi(X23+X53,X34)",
              lhs_img - F(x(2, 5), x(2, 3) + x(2, 4)) * F(x(2, 3) + x(3, 5), x(3, 4)));
        r.add("cyc.P.lhs.2", "Phi(X52,X23+X24) = Phi(X52,-X21-X25-X22)",
              F(x(2, 5), x(2, 3) + x(2, 4)) - F(x(2, 5), -x(1, 2) - x(2, 5) - x(2, 2)));
        r.add("cyc.P.lhs.3", "Phi(X52,-X21-X25-X22) = Phi(X52,X15)",
              F(x(2, 5), -x(1, 2) - x(2, 5) - x(2, 2)) - F(x(2, 5), x(1, 5)));
        r.add("cyc.P.lhs.4", "Phi(X23+X53,X34) = Phi(-X13-X33-X43,X34)",
              F(x(2, 3) + x(3, 5), x(3, 4)) - F(-x(1, 3) - x(3, 3) - x(3, 4), x(3, 4)));
        r.add("cyc.P.lhs.5", "Phi(-X13-X33-X43,X34) = Phi(X41,X34)",
              F(-x(1, 3) - x(3, 3) - x(3, 4), x(3, 4)) - F(x(1, 4), x(3, 4)));
        Series final_lhs = F(x(2, 5), x(1, 5)) * F(x(1, 4), x(3, 4));
        r.add("cyc.P.lhs", "z* of the pentagon left side = Phi(X52,X15)Phi(X41,X34)",
              lhs_img - final_lhs);

        Series rhs_img = zs(F(t(2, 3), t(3, 4))) * zs(F(t(1, 2) + t(1, 3), t(2, 4) + t(3, 4))) *
                         zs(F(t(1, 2), t(2, 3)));
        r.add("cyc.P.rhs.1",
              "z* of the pentagon right side = Phi(X23,X34)Phi(X52+X53,X24+X34)Phi(X52,X23)",
              rhs_img - F(x(2, 3), x(3, 4)) * F(x(2, 5) + x(3, 5), x(2, 4) + x(3, 4)) *
                            F(x(2, 5), x(2, 3)));
        Series m0 = F(x(2, 5) + x(3, 5), x(2, 4) + x(3, 4));
        Series m1 = F(-x(1, 5) - x(4, 5) - x(5, 5), -x(1, 4) - x(4, 4) - x(4, 5));
        Series m2 = F(-x(1, 5) - x(4, 5) - x(5, 5), x(1, 5));
        Series m3 = F(x(1, 4), x(1, 5));
        r.add("cyc.P.mid.1", "Phi(X52+X53,X24+X34) = Phi(-X51-X54-X55,-X14-X44-X54)", m0 - m1);
        r.add("cyc.P.mid.2", "= Phi(-X51-X54-X55,X51)", m1 - m2);
        r.add("cyc.P.mid.3", "= Phi(X41,X15)", m2 - m3);
        Series final_rhs = F(x(2, 3), x(3, 4)) * F(x(1, 4), x(1, 5)) * F(x(2, 5), x(2, 3));
        r.add("cyc.P.rhs", "z* of the pentagon right side = Phi(X23,X34)Phi(X41,X15)Phi(X52,X23)",
              rhs_img - final_rhs);
        r.add("cyc.P.perm", "(1 5)-permuted pentagon Phi(X52,X15)Phi(X41,X34) = "
                            "Phi(X23,X34)Phi(X41,X15)Phi(X52,X23)",
              final_lhs - final_rhs, true);
        r.add("cyc.P", "z* images of both pentagon sides agree", lhs_img - rhs_img, true);
    }
    return r;
}

// ---- element files ----

std::string write_element(const Rat& lambda, const Series& phi, int certified) {
    std::ostringstream os;
    os << "element\n";
    os << "lambda " << lambda.get_num().get_str() << " " << lambda.get_den().get_str() << "\n";
    os << "certified " << certified << "\n";
    os << write_series(phi);
    return os.str();
}

ElementFile read_element(const std::string& text) {
    std::istringstream is(text);
    std::string line, rest;
    bool header = false, have_lambda = false;
    Rat lambda;
    int cert = 0;
    std::streampos series_start = 0;
    while (true) {
        std::streampos here = is.tellg();
        if (!std::getline(is, line)) throw Error("element file: missing series block");
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw) || kw[0] == '#') continue;
        if (!header) {
            if (kw != "element") throw Error("element file: expected 'element'");
            header = true;
        } else if (kw == "lambda") {
            std::string n, d;
            if (!(ls >> n >> d)) throw Error("element file: bad lambda");
            lambda = Rat(mpz_class(n), mpz_class(d));
            lambda.canonicalize();
            have_lambda = true;
        } else if (kw == "certified") {
            if (!(ls >> cert)) throw Error("element file: bad certified degree");
        } else if (kw == "series") {
            series_start = here;
            break;
        } else {
            throw Error("element file: unknown keyword " + kw);
        }
    }
    if (!have_lambda) throw Error("element file: missing lambda");
    std::string body = text.substr(static_cast<std::size_t>(series_start));
    return {lambda, read_series(body, resolve_algebra), cert};
}

}  // namespace artifact
