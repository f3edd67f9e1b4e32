// SPDX-License-Identifier: Apache-2.0
// Associator and GRT equations, the degree-wise solver, group law and torsor.
#pragma once

#include "artifact/dkalg.hpp"

#include <cstdint>

namespace artifact {

struct GrtElement {
    Rat lambda;
    Series phi;  // over free(x,y)
    int certified_degree = 0;
};

struct AssociatorCandidate {
    Rat lambda;
    Series phi;  // over free(x,y)
    int certified_degree = 0;
};

struct Residual {
    std::string id;
    std::string anchor;
    bool conditional = false;
    Series value;  // normal form, zero iff the identity holds
};

struct EquationReport {
    std::vector<Residual> entries;
    int degree = 0;

    bool ok() const;
    void add(std::string id, std::string anchor, Series value, bool conditional = false);
    void append(const EquationReport& o);
    // One record per line: id, anchor, status, support size, first nonzero term.
    std::string str() const;
};

enum class HexagonMode { Substitution, Quotient };

// Φ(a, b) with a, b in a common algebra; phi's higher degrees are dropped.
Series eval2(const Series& phi, const Series& a, const Series& b);

// (I) in free(x,y), (H) in t(3) (or t(3)/c), (P) in t(4).
EquationReport verify_grt1(const Series& phi, int D, HexagonMode mode = HexagonMode::Substitution);
EquationReport verify_associator(const Rat& lambda, const Series& phi, int D,
                                 HexagonMode mode = HexagonMode::Substitution);
// 5-cycle product and its rearranged form in fB(5).
EquationReport verify_5cycle(const Series& phi, int D);
// Pentagon defect LHS - RHS in ft(4).
Series pentagon_defect_ft4(const Series& phi, int D);

GrtElement grt_identity(int D);
GrtElement grt_mul(const GrtElement& g1, const GrtElement& g2);
GrtElement grt_scale(const GrtElement& g, const Rat& mu);
GrtElement grt_inverse(const GrtElement& g);
// The pair obtained by applying the automorphism of g1 and then that of g2.
GrtElement grt_compose_action(const GrtElement& g1, const GrtElement& g2);

enum class SolveTarget { GRT1, Assoc };

struct SolveOptions {
    HexagonMode mode = HexagonMode::Substitution;
    // degree -> coefficients of the echelonized kernel basis added to the particular solution
    std::map<int, std::vector<Rat>> kernel_choice;
};

struct DegreeSolution {
    int degree = 0;
    int unknowns = 0;
    int equations = 0;
    int rank = 0;
    int kernel_dim = 0;
    bool consistent = true;
    std::vector<Rat> coefficients;  // Lyndon coefficients of log phi at this degree
};

struct SolveResult {
    bool ok = true;
    int failed_degree = 0;
    std::vector<DegreeSolution> degrees;
    Series phi;
    Rat lambda;
};

SolveResult solve_degreewise(SolveTarget target, const Rat& lambda, int D,
                             const SolveOptions& opts = {});

// Identities from the cyclic-invariance arguments for (I), (H) and the
// 5-cycle pentagon. Unconditional ones hold for any group-like phi without
// linear part; conditional ones need phi to satisfy the equations.
EquationReport verify_cyclic_identities(const Series& phi, int D);

AssociatorCandidate torsor_act(const AssociatorCandidate& a, const GrtElement& g);

// exp of a random Lie series supported in degrees 2..D with small rational
// coefficients; deterministic in seed.
Series random_grouplike(int D, std::uint64_t seed, int min_degree = 2);

// Lie series with the given Lyndon coefficients at each degree (index = degree).
Series lie_from_lyndon(const std::vector<std::vector<Rat>>& coeffs, int D);

// Coefficient of the Lyndon word xy in log phi.
Rat bracket_coefficient(const Series& phi);

// File format: "lambda <num> <den>", "certified <d>", then a series block.
std::string write_element(const Rat& lambda, const Series& phi, int certified);
struct ElementFile {
    Rat lambda;
    Series phi;
    int certified = 0;
};
ElementFile read_element(const std::string& text);

}  // namespace artifact
