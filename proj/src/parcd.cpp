// SPDX-License-Identifier: Apache-2.0
#include "artifact/parcd.hpp"

#include <sstream>

namespace artifact {

// ---- ParenTree ----

ParenTree ParenTree::leaf(int k) {
    ParenTree t;
    t.label = k;
    return t;
}

ParenTree ParenTree::join(ParenTree a, ParenTree b) {
    ParenTree t;
    t.kids.push_back(std::move(a));
    t.kids.push_back(std::move(b));
    return t;
}

namespace {

struct TreeParser {
    const std::string& s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error("tree '" + s + "': " + what + " at offset " + std::to_string(i));
    }
    // Items up to ')' or end; one item is itself, two are joined.
    ParenTree items(bool nested) {
        std::vector<ParenTree> got;
        for (;;) {
            skip();
            if (i == s.size()) {
                if (nested) fail("missing ')'");
                break;
            }
            char c = s[i];
            if (c == ')') {
                if (!nested) fail("unbalanced ')'");
                ++i;
                break;
            }
            if (c == '(') {
                ++i;
                got.push_back(items(true));
            } else if (c >= '1' && c <= '9') {
                ++i;
                got.push_back(ParenTree::leaf(c - '0'));
            } else {
                fail(std::string("unexpected '") + c + "'");
            }
        }
        if (got.size() == 1) return got[0];
        if (got.size() == 2) return ParenTree::join(got[0], got[1]);
        fail(got.empty() ? "empty group" : "group with more than two members");
    }
};

void collect(const ParenTree& t, std::vector<int>& out) {
    if (t.is_leaf()) out.push_back(t.label);
    for (const auto& k : t.kids) collect(k, out);
}

ParenTree map_labels(const ParenTree& t, const std::function<ParenTree(int)>& f) {
    if (t.is_leaf()) return f(t.label);
    return ParenTree::join(map_labels(t.kids[0], f), map_labels(t.kids[1], f));
}

}  // namespace

ParenTree ParenTree::parse(const std::string& s) {
    TreeParser p{s};
    ParenTree t = p.items(false);
    auto l = t.leaves();
    std::vector<int> seen(l.size() + 1, 0);
    for (int k : l)
        if (k > static_cast<int>(l.size()) || seen[k]++)
            throw Error("tree '" + s + "': leaves are not a permutation of 1.." +
                        std::to_string(l.size()));
    return t;
}

int ParenTree::arity() const { return static_cast<int>(leaves().size()); }

std::vector<int> ParenTree::leaves() const {
    std::vector<int> out;
    collect(*this, out);
    return out;
}

std::string ParenTree::str() const {
    if (is_leaf()) return std::to_string(label);
    return "(" + kids[0].str() + " " + kids[1].str() + ")";
}

ParenTree magma_compose(const ParenTree& p, int i, const ParenTree& q) {
    const int n = p.arity(), m = q.arity();
    if (i < 1 || i > n)
        throw Error("magma_compose: position " + std::to_string(i) + " out of range 1.." +
                    std::to_string(n));
    return map_labels(p, [&](int l) {
        if (l < i) return ParenTree::leaf(l);
        if (l > i) return ParenTree::leaf(l + m - 1);
        return map_labels(q, [&](int r) { return ParenTree::leaf(r + i - 1); });
    });
}

ParenTree relabel_tree(const ParenTree& p, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != p.arity())
        throw Error("relabel_tree: permutation size mismatch");
    return map_labels(p, [&](int l) { return ParenTree::leaf(sigma[l - 1]); });
}

ParenTree reroot(const ParenTree& p, CyclicConvention c) {
    const int n = p.arity();
    // Planar graph; inner nodes list (parent, left, right) in cyclic order.
    std::vector<std::vector<int>> adj(1);
    std::vector<int> label(1, 0);  // node 0 is the output leaf
    std::function<int(const ParenTree&, int)> build = [&](const ParenTree& t, int parent) {
        const int id = static_cast<int>(adj.size());
        adj.push_back({parent});
        label.push_back(t.is_leaf() ? t.label : -1);
        for (const auto& k : t.kids) {
            int kid = build(k, id);
            adj[id].push_back(kid);
        }
        return id;
    };
    const int root = build(p, 0);
    adj[0].push_back(root);
    int one = -1;
    for (std::size_t v = 1; v < label.size(); ++v)
        if (label[v] == 1) one = static_cast<int>(v);
    auto rename = [&](int old) {
        if (c == CyclicConvention::Transposition) return old == 0 ? 1 : old;
        return old == 0 ? n : old - 1;
    };
    std::function<ParenTree(int, int)> emit = [&](int v, int from) {
        if (label[v] >= 0) return ParenTree::leaf(rename(label[v]));
        const auto& a = adj[v];
        int k = 0;
        while (a[k] != from) ++k;
        return ParenTree::join(emit(a[(k + 1) % 3], v), emit(a[(k + 2) % 3], v));
    };
    return emit(adj[one][0], one);
}

// ---- morphisms ----

namespace {

std::shared_ptr<const Algebra> ft_alg(int n) { return presentation(PresentationId::ft(n)); }

void require_same_tree(const ParenTree& a, const ParenTree& b, const char* what) {
    if (!(a == b)) throw Error(std::string(what) + ": object mismatch " + a.str() + " vs " + b.str());
}

}  // namespace

ParcdMorphism identity_morphism(const ParenTree& p, int D) {
    return {p, p, Series::one(ft_alg(p.arity()), D)};
}

ParcdMorphism compose(const ParcdMorphism& f, const ParcdMorphism& g) {
    require_same_tree(g.target, f.source, "compose");
    return {g.source, f.target, g.value * f.value};
}

ParcdMorphism op_compose(const ParcdMorphism& f, int i, const ParcdMorphism& g) {
    return {magma_compose(f.source, i, g.source), magma_compose(f.target, i, g.target),
            operad_insert(f.value, i, g.value)};
}

ParcdMorphism inverse(const ParcdMorphism& f) {
    return {f.target, f.source, series_inverse(f.value)};
}

ParcdMorphism relabel(const ParcdMorphism& f, const std::vector<int>& sigma) {
    return {relabel_tree(f.source, sigma), relabel_tree(f.target, sigma), permute(f.value, sigma)};
}

ParcdMorphism cyclic_act(const ParcdMorphism& f, CyclicConvention c) {
    Series v = c == CyclicConvention::Transposition ? transposition01(f.value)
                                                    : cyclic_rotate(f.value, 1);
    return {reroot(f.source, c), reroot(f.target, c), v};
}

// ---- generators ----

std::string tag_name(GeneratorTag t) {
    switch (t) {
        case GeneratorTag::X12: return "X12";
        case GeneratorTag::H12: return "H12";
        case GeneratorTag::I1: return "I1";
        case GeneratorTag::A123: return "A123";
    }
    return "?";
}

int tag_arity(GeneratorTag t) {
    switch (t) {
        case GeneratorTag::I1: return 1;
        case GeneratorTag::A123: return 3;
        default: return 2;
    }
}

ParenTree tag_source(GeneratorTag t) {
    switch (t) {
        case GeneratorTag::I1: return ParenTree::leaf(1);
        case GeneratorTag::A123: return ParenTree::parse("((1 2) 3)");
        default: return ParenTree::parse("(1 2)");
    }
}

ParenTree tag_target(GeneratorTag t) {
    switch (t) {
        case GeneratorTag::I1: return ParenTree::leaf(1);
        case GeneratorTag::A123: return ParenTree::parse("(1 (2 3))");
        case GeneratorTag::X12: return ParenTree::parse("(2 1)");
        default: return ParenTree::parse("(1 2)");
    }
}

const std::vector<GeneratorTag>& all_tags() {
    static const std::vector<GeneratorTag> v{GeneratorTag::X12, GeneratorTag::H12,
                                             GeneratorTag::I1, GeneratorTag::A123};
    return v;
}

// ---- expressions ----

namespace {

Series lie_value(GeneratorTag t, const Rat& s, int D) {
    if (t == GeneratorTag::H12) return Series::gen(ft_alg(2), D, GeneratorId::t(1, 2)) * s;
    if (t == GeneratorTag::I1) return Series::gen(ft_alg(1), D, GeneratorId::t(1, 1)) * s;
    throw Error("only H and I have infinitesimal forms");
}

bool is_unit_endo(const ParcdMorphism& m) {
    return m.source == m.target && m.value == Series::one(m.value.algebra(), m.value.truncation());
}

}  // namespace

std::shared_ptr<const ParcdExpr::Node> ParcdExpr::make_node(Op op, GeneratorTag t, const Rat& s) {
    Node n;
    n.op = op;
    n.tag = t;
    n.s = s;
    return std::make_shared<const Node>(std::move(n));
}

ParcdExpr ParcdExpr::gen(GeneratorTag t, const Rat& s) {
    return ParcdExpr(make_node(Op::Gen, t, s));
}
ParcdExpr ParcdExpr::lie(GeneratorTag t, const Rat& s) {
    if (t != GeneratorTag::H12 && t != GeneratorTag::I1)
        throw Error("only H and I have infinitesimal forms");
    return ParcdExpr(make_node(Op::LieGen, t, s));
}
ParcdExpr ParcdExpr::id(const ParenTree& p) {
    Node n;
    n.op = Op::Id;
    n.obj = p;
    return ParcdExpr(std::make_shared<Node>(std::move(n)));
}
ParcdExpr ParcdExpr::then(const ParcdExpr& a, const ParcdExpr& b) {
    Node n;
    n.op = Op::Then;
    n.args = {a, b};
    return ParcdExpr(std::make_shared<Node>(std::move(n)));
}
ParcdExpr ParcdExpr::insert(const ParcdExpr& a, int i, const ParcdExpr& b) {
    Node n;
    n.op = Op::Insert;
    n.pos = i;
    n.args = {a, b};
    return ParcdExpr(std::make_shared<Node>(std::move(n)));
}
ParcdExpr ParcdExpr::inv(const ParcdExpr& a) {
    Node n;
    n.op = Op::Inverse;
    n.args = {a};
    return ParcdExpr(std::make_shared<Node>(std::move(n)));
}
ParcdExpr ParcdExpr::relabel(const ParcdExpr& a, std::vector<int> sigma) {
    Node n;
    n.op = Op::Relabel;
    n.sigma = std::move(sigma);
    n.args = {a};
    return ParcdExpr(std::make_shared<Node>(std::move(n)));
}
ParcdExpr ParcdExpr::conj(const ParcdExpr& m, const ParcdExpr& l) {
    Node n;
    n.op = Op::Conj;
    n.args = {m, l};
    return ParcdExpr(std::make_shared<Node>(std::move(n)));
}
ParcdExpr ParcdExpr::scale(const ParcdExpr& l, const Rat& c) {
    Node n;
    n.op = Op::Scale;
    n.s = c;
    n.args = {l};
    return ParcdExpr(std::make_shared<Node>(std::move(n)));
}
ParcdExpr ParcdExpr::word(const Series& phi, const ParcdExpr& a, const ParcdExpr& b) {
    if (phi.algebra()->descriptor() != "free(x,y)") throw Error("word: phi must live in free(x,y)");
    Node n;
    n.op = Op::Word;
    n.phi = std::make_shared<const Series>(phi);
    n.args = {a, b};
    return ParcdExpr(std::make_shared<Node>(std::move(n)));
}

struct ParcdExpr::Evaluated {
    ParcdMorphism m;
    bool lie;
};

ParcdExpr::Evaluated ParcdExpr::eval(int D) const {
    const Node& n = *n_;
    auto group = [](const Evaluated& e, const char* what) {
        if (e.lie) throw Error(std::string(what) + ": infinitesimal argument");
        return e.m;
    };
    switch (n.op) {
        case Op::Gen: {
            const ParenTree s = tag_source(n.tag), t = tag_target(n.tag);
            if (n.tag == GeneratorTag::H12 || n.tag == GeneratorTag::I1)
                return {{s, t, series_exp(lie_value(n.tag, n.s, D))}, false};
            return {{s, t, Series::one(ft_alg(tag_arity(n.tag)), D)}, false};
        }
        case Op::LieGen: {
            const ParenTree s = tag_source(n.tag);
            return {{s, s, lie_value(n.tag, n.s, D)}, true};
        }
        case Op::Id: return {identity_morphism(n.obj, D), false};
        case Op::Then: {
            Evaluated a = n.args[0].eval(D), b = n.args[1].eval(D);
            return {compose(group(b, "then"), group(a, "then")), false};
        }
        case Op::Insert: {
            Evaluated a = n.args[0].eval(D), b = n.args[1].eval(D);
            if (a.lie && b.lie) throw Error("insert: both arguments infinitesimal");
            if ((a.lie && !is_unit_endo(b.m)) || (b.lie && !is_unit_endo(a.m)))
                throw Error("insert: an infinitesimal argument needs an identity partner");
            return {op_compose(a.m, n.pos, b.m), a.lie || b.lie};
        }
        case Op::Inverse: {
            Evaluated a = n.args[0].eval(D);
            if (a.lie) return {{a.m.source, a.m.target, -a.m.value}, true};
            return {inverse(a.m), false};
        }
        case Op::Relabel: {
            Evaluated a = n.args[0].eval(D);
            return {artifact::relabel(a.m, n.sigma), a.lie};
        }
        case Op::Conj: {
            ParcdMorphism m = group(n.args[0].eval(D), "conj");
            Evaluated l = n.args[1].eval(D);
            if (!l.lie) throw Error("conj: second argument must be infinitesimal");
            require_same_tree(m.target, l.m.source, "conj");
            return {{m.source, m.source, m.value * l.m.value * series_inverse(m.value)}, true};
        }
        case Op::Scale: {
            Evaluated l = n.args[0].eval(D);
            if (!l.lie) throw Error("scale: argument must be infinitesimal");
            return {{l.m.source, l.m.target, l.m.value * n.s}, true};
        }
        case Op::Word: {
            Evaluated a = n.args[0].eval(D), b = n.args[1].eval(D);
            if (!a.lie || !b.lie) throw Error("word: arguments must be infinitesimal");
            require_same_tree(a.m.source, b.m.source, "word");
            if (n.phi->truncation() < D)
                throw Error("word: phi truncated at " + std::to_string(n.phi->truncation()) +
                            ", need " + std::to_string(D));
            return {{a.m.source, a.m.source, eval2(n.phi->truncate(D), a.m.value, b.m.value)},
                    false};
        }
    }
    throw Error("unknown expression node");
}

ParcdMorphism ParcdExpr::evaluate(int D) const {
    Evaluated r = eval(D);
    if (r.lie) throw Error("expression is infinitesimal; wrap it in a word");
    return r.m;
}

ParcdExpr ParcdExpr::act(const GrtElement& g) const {
    const Node& n = *n_;
    switch (n.op) {
        case Op::Gen:
            if (n.tag == GeneratorTag::H12 || n.tag == GeneratorTag::I1)
                return gen(n.tag, n.s * g.lambda);
            if (n.tag == GeneratorTag::A123)
                return then(word(g.phi, lie_t12_at_left(), lie_t23_at_left()), *this);
            return *this;
        case Op::LieGen: return lie(n.tag, n.s * g.lambda);
        case Op::Id: return *this;
        default: break;
    }
    Node m = n;
    for (auto& a : m.args) a = a.act(g);
    return ParcdExpr(std::make_shared<Node>(std::move(m)));
}

std::string ParcdExpr::str() const {
    const Node& n = *n_;
    auto a = [&](int k) { return n.args[k].str(); };
    switch (n.op) {
        case Op::Gen:
            if (n.tag == GeneratorTag::H12 || n.tag == GeneratorTag::I1)
                return tag_name(n.tag) + "^" + n.s.get_str();
            return tag_name(n.tag);
        case Op::LieGen: return n.s.get_str() + "*" + (n.tag == GeneratorTag::H12 ? "h" : "i");
        case Op::Id: return "id" + n.obj.str();
        case Op::Then: return "(" + a(0) + " ; " + a(1) + ")";
        case Op::Insert: return "(" + a(0) + " o" + std::to_string(n.pos) + " " + a(1) + ")";
        case Op::Inverse: return a(0) + "^-1";
        case Op::Relabel: {
            std::string s = "[";
            for (std::size_t k = 0; k < n.sigma.size(); ++k)
                s += (k ? " " : "") + std::to_string(n.sigma[k]);
            return a(0) + s + "]";
        }
        case Op::Conj: return "conj(" + a(0) + ", " + a(1) + ")";
        case Op::Scale: return n.s.get_str() + "*" + a(0);
        case Op::Word: return "Phi(" + a(0) + ", " + a(1) + ")";
    }
    return "?";
}

ParcdExpr cyclic_generator_image(GeneratorTag t, const Rat& s) {
    using E = ParcdExpr;
    switch (t) {
        case GeneratorTag::I1: return E::gen(t, s);
        case GeneratorTag::H12:
            return E::then(E::relabel(E::gen(t, -s), {2, 1}),
                           E::insert(E::id(ParenTree::parse("(2 1)")), 2,
                                     E::gen(GeneratorTag::I1, -s)));
        case GeneratorTag::X12: return E::relabel(E::gen(t), {2, 1});
        case GeneratorTag::A123: return E::inv(E::relabel(E::gen(t), {2, 3, 1}));
    }
    throw Error("unknown generator");
}

ParcdExpr lie_t12_at_left() {
    return ParcdExpr::insert(ParcdExpr::id(ParenTree::parse("(1 2)")), 1,
                             ParcdExpr::lie(GeneratorTag::H12));
}

ParcdExpr lie_t23_at_left() {
    return ParcdExpr::conj(ParcdExpr::gen(GeneratorTag::A123),
                           ParcdExpr::insert(ParcdExpr::id(ParenTree::parse("(1 2)")), 2,
                                             ParcdExpr::lie(GeneratorTag::H12)));
}

ParcdMorphism grt_automorphism(const GrtElement& g, const ParcdExpr& e, int D) {
    return e.act(g).evaluate(D);
}

ParcdMorphism grt_automorphism(const GrtElement& g, GeneratorTag t, int D) {
    return grt_automorphism(g, ParcdExpr::gen(t), D);
}

// ---- associator images ----

std::string prb_name(PrbTag t) {
    switch (t) {
        case PrbTag::Tau: return "tau";
        case PrbTag::Beta: return "beta";
        case PrbTag::Alpha: return "alpha";
    }
    return "?";
}

ParcdMorphism associator_image(const AssociatorCandidate& a, PrbTag t, int D) {
    const Rat h = a.lambda / 2;
    switch (t) {
        case PrbTag::Tau: {
            auto one = ParenTree::leaf(1);
            return {one, one, series_exp(lie_value(GeneratorTag::I1, h, D))};
        }
        case PrbTag::Beta:
            return {tag_source(GeneratorTag::X12), tag_target(GeneratorTag::X12),
                    series_exp(lie_value(GeneratorTag::H12, h, D))};
        case PrbTag::Alpha: {
            if (a.phi.truncation() < D) throw Error("associator truncated below the requested degree");
            auto f3 = ft_alg(3);
            Series v = eval2(a.phi.truncate(D), Series::gen(f3, D, GeneratorId::t(1, 2)),
                             Series::gen(f3, D, GeneratorId::t(2, 3)));
            return {tag_source(GeneratorTag::A123), tag_target(GeneratorTag::A123), v};
        }
    }
    throw Error("unknown tag");
}

namespace {

// Value difference; an object mismatch is reported as the nonzero constant 1.
Series morphism_residual(const ParcdMorphism& a, const ParcdMorphism& b) {
    if (!(a.source == b.source) || !(a.target == b.target))
        return Series::one(a.value.algebra(), a.value.truncation());
    return a.value - b.value;
}

}  // namespace

EquationReport associator_cyclic_check(const AssociatorCandidate& a, int D) {
    EquationReport r;
    r.degree = D;
    ParcdMorphism tau = associator_image(a, PrbTag::Tau, D);
    ParcdMorphism beta = associator_image(a, PrbTag::Beta, D);
    ParcdMorphism alpha = associator_image(a, PrbTag::Alpha, D);
    r.add("assocfun.tau", "z* f(tau) = f(z* tau) = exp(lambda t11/2) I",
          morphism_residual(cyclic_act(tau), tau));
    ParcdMorphism tau2 = op_compose(identity_morphism(tag_source(GeneratorTag::H12), D), 2, tau);
    ParcdMorphism zbeta = compose(inverse(tau2), inverse(beta));
    r.add("assocfun.beta", "z* f(beta) = f(beta^-1 tau_2^-1) = exp(lambda(-t12-t22)/2) X",
          morphism_residual(cyclic_act(beta), zbeta));
    ParcdMorphism zalpha = inverse(relabel(alpha, {2, 3, 1}));
    r.add("assocfun.alpha", "z* f(alpha) = f(alpha_{2,3,1}^-1) = Phi(t31,t23) A^-1_{2,3,1}",
          morphism_residual(cyclic_act(alpha), zalpha), true);
    return r;
}

EquationReport ribbon_twist_check(const Rat& lambda, const Rat& mu, int D) {
    EquationReport r;
    r.degree = D;
    AssociatorCandidate la{lambda, Series::one(free_xy(), D), 0};
    AssociatorCandidate ma{mu, Series::one(free_xy(), D), 0};
    ParcdMorphism tau = associator_image(la, PrbTag::Tau, D);
    ParcdMorphism beta = associator_image(ma, PrbTag::Beta, D);
    const ParenTree p12 = tag_source(GeneratorTag::H12);
    ParcdMorphism id12 = identity_morphism(p12, D);
    ParcdMorphism lhs = op_compose(tau, 1, id12);
    ParcdMorphism rhs = beta;
    for (const ParcdMorphism& next :
         {relabel(beta, {2, 1}), op_compose(id12, 1, tau), op_compose(id12, 2, tau)})
        rhs = compose(next, rhs);
    r.add("ribbon.twist", "ribbon twist: tau o_1 id_12 = beta_12 beta_21 tau_1 tau_2",
          morphism_residual(lhs, rhs));
    return r;
}

EquationReport grt_cyclic_check(const GrtElement& g, int D) {
    EquationReport r;
    r.degree = D;
    for (GeneratorTag t : all_tags()) {
        ParcdMorphism lhs = cyclic_act(grt_automorphism(g, t, D));
        ParcdMorphism rhs = grt_automorphism(g, cyclic_generator_image(t), D);
        r.add("grtcyc." + tag_name(t), "z*(g(" + tag_name(t) + ")) = g(z*(" + tag_name(t) + "))",
              morphism_residual(lhs, rhs), t == GeneratorTag::A123);
    }
    return r;
}

// ---- files ----

std::string write_morphism(const ParcdMorphism& m) {
    std::ostringstream os;
    os << "morphism\n"
       << "source " << m.source.str() << "\n"
       << "target " << m.target.str() << "\n"
       << write_series(m.value);
    return os.str();
}

ParcdMorphism read_morphism(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::optional<ParenTree> src, tgt;
    bool header = false;
    std::size_t offset = 0;
    for (;;) {
        std::streampos here = is.tellg();
        if (!std::getline(is, line)) throw Error("morphism file: missing series block");
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw) || kw[0] == '#') continue;
        std::string rest;
        std::getline(ls, rest);
        if (!header) {
            if (kw != "morphism") throw Error("morphism file: expected 'morphism'");
            header = true;
        } else if (kw == "source") {
            src = ParenTree::parse(rest);
        } else if (kw == "target") {
            tgt = ParenTree::parse(rest);
        } else if (kw == "series") {
            offset = static_cast<std::size_t>(here);
            break;
        } else {
            throw Error("morphism file: unknown keyword " + kw);
        }
    }
    if (!src || !tgt) throw Error("morphism file: missing source or target");
    Series v = read_series(text.substr(offset), resolve_algebra);
    if (src->arity() != tgt->arity()) throw Error("morphism file: arity mismatch");
    if (v.algebra()->descriptor() != PresentationId::ft(src->arity()).descriptor())
        throw Error("morphism file: value must live in " + PresentationId::ft(src->arity()).descriptor());
    return {*src, *tgt, v};
}

}  // namespace artifact
