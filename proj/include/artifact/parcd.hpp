// SPDX-License-Identifier: Apache-2.0
// Parenthesized ribbon chord diagrams: objects, generators, compositions,
// cyclic action and GRT automorphisms.
#pragma once

#include "artifact/grteq.hpp"

namespace artifact {

// Complete binary tree with labelled leaves; text form "((1 2) 3)".
struct ParenTree {
    int label = 0;                // leaf label, 0 for an inner node
    std::vector<ParenTree> kids;  // empty or two

    static ParenTree leaf(int k);
    static ParenTree join(ParenTree a, ParenTree b);
    // Digits may be run together: "(1(23))" and "(1 (2 3))" parse alike.
    static ParenTree parse(const std::string& s);

    bool is_leaf() const { return kids.empty(); }
    int arity() const;
    std::vector<int> leaves() const;  // left to right
    std::string str() const;

    bool operator==(const ParenTree& o) const = default;
};

// Leaf i of p replaced by q; labels shifted as in the symmetric operad.
ParenTree magma_compose(const ParenTree& p, int i, const ParenTree& q);
// sigma[k-1] is the new label of k.
ParenTree relabel_tree(const ParenTree& p, const std::vector<int>& sigma);

enum class CyclicConvention {
    // (01): the old output takes label 1; values by transposition01.
    Transposition,
    // z: labels move i -> i-1, the old output becomes label n; values by cyclic_rotate.
    Rotation,
};
// Planar re-rooting at leaf 1.
ParenTree reroot(const ParenTree& p, CyclicConvention c = CyclicConvention::Transposition);

struct ParcdMorphism {
    ParenTree source;
    ParenTree target;
    Series value;  // over ft(n); a Lie element for infinitesimal expressions

    int arity() const { return source.arity(); }
    bool operator==(const ParcdMorphism& o) const = default;
};

ParcdMorphism identity_morphism(const ParenTree& p, int D);
// f after g; requires target(g) = source(f). Values multiply in the order
// the morphisms are traversed: value = g.value * f.value.
ParcdMorphism compose(const ParcdMorphism& f, const ParcdMorphism& g);
ParcdMorphism op_compose(const ParcdMorphism& f, int i, const ParcdMorphism& g);
ParcdMorphism inverse(const ParcdMorphism& f);
ParcdMorphism relabel(const ParcdMorphism& f, const std::vector<int>& sigma);
ParcdMorphism cyclic_act(const ParcdMorphism& f,
                         CyclicConvention c = CyclicConvention::Transposition);

enum class GeneratorTag { X12, H12, I1, A123 };
std::string tag_name(GeneratorTag t);
int tag_arity(GeneratorTag t);
ParenTree tag_source(GeneratorTag t);
ParenTree tag_target(GeneratorTag t);
const std::vector<GeneratorTag>& all_tags();

// Expression over the generators. Group-like nodes evaluate to morphisms;
// Lie nodes (LieGen, Conj, Scale, and Insert against an identity) evaluate
// to infinitesimal endomorphisms, which Word feeds into a series in x, y.
class ParcdExpr {
public:
    enum class Op { Gen, LieGen, Id, Then, Insert, Inverse, Relabel, Conj, Scale, Word };

    // H^s = exp(s t12) on (1 2), I^s = exp(s t11) on 1; s is ignored for X and A.
    static ParcdExpr gen(GeneratorTag t, const Rat& s = 1);
    // s t12 (H) or s t11 (I).
    static ParcdExpr lie(GeneratorTag t, const Rat& s = 1);
    static ParcdExpr id(const ParenTree& p);
    static ParcdExpr then(const ParcdExpr& a, const ParcdExpr& b);  // a, then b
    static ParcdExpr insert(const ParcdExpr& a, int i, const ParcdExpr& b);
    static ParcdExpr inv(const ParcdExpr& a);
    static ParcdExpr relabel(const ParcdExpr& a, std::vector<int> sigma);
    static ParcdExpr conj(const ParcdExpr& m, const ParcdExpr& l);  // m l m^{-1}
    static ParcdExpr scale(const ParcdExpr& l, const Rat& c);
    static ParcdExpr word(const Series& phi, const ParcdExpr& a, const ParcdExpr& b);

    Op op() const { return n_->op; }
    ParcdMorphism evaluate(int D) const;
    // Image under the automorphism of g: H -> lambda H, I -> lambda I, X -> X,
    // A -> Phi(t12, t23) A.
    ParcdExpr act(const GrtElement& g) const;
    std::string str() const;

private:
    struct Node {
        Op op = Op::Id;
        GeneratorTag tag = GeneratorTag::X12;
        Rat s = 1;
        ParenTree obj;
        int pos = 0;
        std::vector<int> sigma;
        std::shared_ptr<const Series> phi;
        std::vector<ParcdExpr> args;
    };
    struct Evaluated;
    static std::shared_ptr<const Node> make_node(Op op, GeneratorTag t, const Rat& s);
    explicit ParcdExpr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
    Evaluated eval(int D) const;
    std::shared_ptr<const Node> n_;
};

// The displayed z* rules as expressions: I -> I, H -> -H - I_2 (on (2 1)),
// X -> X_{2,1}, A -> A^{-1}_{2,3,1}.
ParcdExpr cyclic_generator_image(GeneratorTag t, const Rat& s = 1);

// t12 and t23 at ((1 2) 3) as infinitesimal expressions.
ParcdExpr lie_t12_at_left();
ParcdExpr lie_t23_at_left();

ParcdMorphism grt_automorphism(const GrtElement& g, GeneratorTag t, int D);
ParcdMorphism grt_automorphism(const GrtElement& g, const ParcdExpr& e, int D);

enum class PrbTag { Tau, Beta, Alpha };
std::string prb_name(PrbTag t);
ParcdMorphism associator_image(const AssociatorCandidate& a, PrbTag t, int D);
// Cyclic compatibility of the associator images on tau, beta, alpha.
EquationReport associator_cyclic_check(const AssociatorCandidate& a, int D);
// exp(lambda/2 ...) on tau against exp(mu/2 t12) on beta; zero iff lambda = mu.
EquationReport ribbon_twist_check(const Rat& lambda, const Rat& mu, int D);

// Residual of z*(g(f)) - g(z*(f)) for each generator, values and objects.
EquationReport grt_cyclic_check(const GrtElement& g, int D);

// Morphism file: "morphism", "source <tree>", "target <tree>", series block.
std::string write_morphism(const ParcdMorphism& m);
ParcdMorphism read_morphism(const std::string& text);

}  // namespace artifact
