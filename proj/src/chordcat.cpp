// SPDX-License-Identifier: Apache-2.0
#include "artifact/chordcat.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <regex>
#include <sstream>

namespace artifact {

namespace {

std::shared_ptr<const Algebra> ft(int w) {
    if (w < 1) throw Error("chordcat: no slice algebra at width " + std::to_string(w));
    return presentation(PresentationId::ft(w));
}

Series at_degree(const Series& s, int C) {
    if (s.truncation() < C)
        throw Error("chordcat: series truncated at " + std::to_string(s.truncation()) +
                    ", chord degree " + std::to_string(C) + " requested");
    return s.truncate(C);
}

Series gen_t(int w, int C, int i, int j) { return Series::gen(ft(w), C, GeneratorId::t(i, j)); }

// u over ft(k) restricted from strands a+1..a+k of its width, if supported there.
std::optional<Series> restrict_slice(const Series& u, int a, int k) {
    const auto& gens = u.algebra()->generators();
    for (const auto& [m, c] : u.terms())
        for (auto g : m.w) {
            const auto& id = gens[g];
            if (id.i <= a || id.j <= a || id.i > a + k || id.j > a + k) return std::nullopt;
        }
    auto target = ft(k);
    const int D = u.truncation();
    return relabel(u, target, [&](const GeneratorId& g) {
        if (g.i <= a || g.j <= a || g.i > a + k || g.j > a + k) return Series(target, D);
        return Series::gen(target, D, GeneratorId::t(g.i - a, g.j - a));
    });
}

std::vector<int> reversal(int n) {
    std::vector<int> r(n);
    for (int i = 1; i <= n; ++i) r[i - 1] = n + 1 - i;
    return r;
}

// Transposition rule conjugated by label reversal: the image for a slice bent
// around a cup on its right and a cap on its left.
Series mirrored_transposition(const Series& u) {
    const auto r = reversal(arity_of(u));
    return permute(transposition01(permute(u, r)), r);
}

Series scale_chords(const Series& u, const Rat& lambda) {
    const auto& alg = u.algebra();
    const int D = u.truncation();
    return relabel(u, alg, [&](const GeneratorId& g) { return Series::gen(alg, D, g) * lambda; });
}

bool is_identity_perm(const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::vector<int> widths_of(int w0, const std::vector<Layer>& L) {
    std::vector<int> w{w0};
    for (const auto& l : L) {
        int cur = w.back();
        if (l.kind == Layer::Kind::Cup) cur += 2;
        if (l.kind == Layer::Kind::Cap) cur -= 2;
        w.push_back(cur);
    }
    return w;
}

Layer extend_right(const Layer& l, int w, int k) {
    Layer r = l;
    if (l.kind == Layer::Kind::Perm)
        for (int i = 1; i <= k; ++i) r.perm.push_back(w + i);
    if (l.kind == Layer::Kind::Slice) r.value = embed_slice(*l.value, 0, w + k);
    return r;
}

Layer shift_left(const Layer& l, int w, int k) {
    Layer r = l;
    switch (l.kind) {
        case Layer::Kind::Cup:
        case Layer::Kind::Cap:
        case Layer::Kind::Assoc:
            r.pos += k;
            break;
        case Layer::Kind::Perm:
            r.perm.clear();
            for (int i = 1; i <= k; ++i) r.perm.push_back(i);
            for (int s : l.perm) r.perm.push_back(s + k);
            break;
        case Layer::Kind::Slice:
            r.value = embed_slice(*l.value, k, w + k);
            break;
    }
    return r;
}

Series assoc_value(const Series& phi, int C) {
    return eval2(at_degree(phi, C), gen_t(3, C, 1, 2), gen_t(3, C, 2, 3));
}

struct Candidate {
    enum Rule { DropSlice, DropPerm, MergeSlices, MergePerms, PushPerm, ZigZag, Interchange, Bend, Snake };
    Rule rule;
    std::size_t at;
};

// Width-1 snakes and bends around one cup and one cap; nullopt if the middle
// layer does not fit. The result replaces layers at, at+1, at+2.
std::optional<Layer> bend_image(const Layer& cup, const Layer& mid, const Layer& cap) {
    const int p = cup.pos, q = cap.pos;
    if (q == p) return std::nullopt;
    const bool right = q > p;
    const int n = right ? q - p : p - q;
    // Strands p+1..p+n (cap on the right) or q+1..q+n (cap on the left).
    const int a = right ? p : q;
    if (mid.kind == Layer::Kind::Perm) {
        const int w = static_cast<int>(mid.perm.size());
        for (int i = 1; i <= w; ++i) {
            const bool inside = i > a && i <= a + n;
            if (!inside && mid.perm[i - 1] != i) return std::nullopt;
            if (inside && (mid.perm[i - 1] <= a || mid.perm[i - 1] > a + n)) return std::nullopt;
        }
        // only X and identities are rewritten
        if (n != 2 && n != 1) return std::nullopt;
        std::vector<int> out(w - 2);
        for (int i = 1; i <= w - 2; ++i) out[i - 1] = i;
        const int b = right ? p : q;  // first strand of the image
        if (n == 2 && mid.perm[a] != a + 1) std::swap(out[b - 1], out[b]);
        return Layer::permutation(out);
    }
    if (mid.kind != Layer::Kind::Slice) return std::nullopt;
    const int w = arity_of(*mid.value);
    auto local = restrict_slice(*mid.value, a, n);
    if (!local) return std::nullopt;
    Series img = right ? transposition01(*local) : mirrored_transposition(*local);
    return Layer::slice(embed_slice(img, right ? p - 1 : q - 1, w - 2));
}

bool is_scalar(const Series& s) { return s.terms().size() == 1 && s.min_degree() == 0; }

std::vector<Candidate> candidates(const std::vector<Layer>& L, int w0) {
    std::vector<Candidate> out;
    const auto w = widths_of(w0, L);
    for (std::size_t i = 0; i < L.size(); ++i) {
        const auto& l = L[i];
        if (l.kind == Layer::Kind::Slice && (l.value->is_zero() || is_scalar(*l.value)))
            out.push_back({Candidate::DropSlice, i});
        if (l.kind == Layer::Kind::Perm && is_identity_perm(l.perm))
            out.push_back({Candidate::DropPerm, i});
        if (i + 1 >= L.size()) continue;
        const auto& m = L[i + 1];
        if (l.kind == Layer::Kind::Slice && m.kind == Layer::Kind::Slice)
            out.push_back({Candidate::MergeSlices, i});
        if (l.kind == Layer::Kind::Perm && m.kind == Layer::Kind::Perm)
            out.push_back({Candidate::MergePerms, i});
        if (l.kind == Layer::Kind::Slice && m.kind == Layer::Kind::Perm)
            out.push_back({Candidate::PushPerm, i});
        if (l.kind == Layer::Kind::Cup && m.kind == Layer::Kind::Cap &&
            (m.pos == l.pos + 1 || m.pos == l.pos - 1))
            out.push_back({Candidate::ZigZag, i});
        if (l.kind == Layer::Kind::Cup && m.kind == Layer::Kind::Cap &&
            (m.pos + 1 < l.pos || m.pos > l.pos + 1))
            out.push_back({Candidate::Interchange, i});
        if (i + 2 >= L.size()) continue;
        const auto& r = L[i + 2];
        if (l.kind != Layer::Kind::Cup || r.kind != Layer::Kind::Cap) continue;
        if (bend_image(l, m, r)) {
            out.push_back({Candidate::Bend, i});
        } else if (w[i] == 1 && m.kind == Layer::Kind::Slice &&
                   ((l.pos == 1 && r.pos == 2) || (l.pos == 2 && r.pos == 1))) {
            out.push_back({Candidate::Snake, i});
        }
    }
    return out;
}

// Applies one rewrite; returns false if the word became zero.
bool apply(std::vector<Layer>& L, Rat& coef, const Candidate& c) {
    const auto i = c.at;
    auto erase = [&](std::size_t from, std::size_t count) {
        L.erase(L.begin() + static_cast<std::ptrdiff_t>(from),
                L.begin() + static_cast<std::ptrdiff_t>(from + count));
    };
    switch (c.rule) {
        case Candidate::DropSlice:
            if (L[i].value->is_zero()) return false;
            coef *= L[i].value->constant();
            erase(i, 1);
            break;
        case Candidate::DropPerm:
            erase(i, 1);
            break;
        case Candidate::MergeSlices:
            L[i].value = *L[i].value * *L[i + 1].value;
            erase(i + 1, 1);
            break;
        case Candidate::MergePerms: {
            std::vector<int> s(L[i].perm.size());
            for (std::size_t k = 0; k < s.size(); ++k) s[k] = L[i + 1].perm[L[i].perm[k] - 1];
            L[i].perm = s;
            erase(i + 1, 1);
            break;
        }
        case Candidate::PushPerm: {
            Layer sl = Layer::slice(permute(*L[i].value, L[i + 1].perm));
            L[i] = L[i + 1];
            L[i + 1] = std::move(sl);
            break;
        }
        case Candidate::ZigZag:
            erase(i, 2);
            break;
        case Candidate::Interchange: {
            // disjoint cup below cap: do the cap first
            const int p = L[i].pos, q = L[i + 1].pos;
            if (q + 1 < p) {
                L[i] = Layer::cap(q);
                L[i + 1] = Layer::cup(p - 2);
            } else {
                L[i] = Layer::cap(q - 2);
                L[i + 1] = Layer::cup(p);
            }
            break;
        }
        case Candidate::Bend:
            L[i] = *bend_image(L[i], L[i + 1], L[i + 2]);
            erase(i + 1, 2);
            break;
        case Candidate::Snake:
            L[i] = Layer::slice(snake_projection(*L[i + 1].value));
            erase(i + 1, 2);
            break;
    }
    return true;
}

std::string word_key(const CompositeWord& w) {
    std::string k;
    for (const auto& l : w.layers) k += l.str() + ";";
    return k;
}

Series marker(bool equal, int C) {
    return equal ? Series(ft(1), C) : Series::one(ft(1), C);
}

bool same_morphism(const ChordMorphism& a, const ChordMorphism& b) {
    return a.source.width == b.source.width && a.target.width == b.target.width &&
           a.words == b.words;
}

ChordMorphism word_morphism(int w, std::vector<Layer> layers) {
    return morphism_of(CObject::plus(w), std::move(layers));
}

Series transformed_assoc(const GrtElement& g, const Series& phi, int C) {
    auto e = ParcdExpr::then(ParcdExpr::word(phi, lie_t12_at_left(), lie_t23_at_left()),
                             ParcdExpr::gen(GeneratorTag::A123));
    return e.act(g).evaluate(C).value;
}

}  // namespace

CObject CObject::plus(int w) {
    if (w < 0) throw Error("CObject: negative width");
    std::string s = w ? "+" : "";
    for (int i = 1; i < w; ++i) s = "(" + s + " +)";
    return {w, s};
}

CObject CObject::parse(const std::string& text) {
    if (text.find_first_not_of(" \t") == std::string::npos ||
        text.substr(text.find_first_not_of(" \t"), 5) == "empty")
        return {0, ""};
    std::string s;
    int depth = 0, width = 0;
    for (char ch : text) {
        if (ch == ' ' || ch == '\t') continue;
        if (ch == '+') {
            ++width;
        } else if (ch == '(') {
            ++depth;
        } else if (ch == ')') {
            if (--depth < 0) throw Error("CObject: unbalanced parentheses in '" + text + "'");
        } else {
            throw Error("CObject: unexpected character in '" + text + "'");
        }
        s += ch;
    }
    if (depth != 0) throw Error("CObject: unbalanced parentheses in '" + text + "'");
    // canonical spacing: a blank between adjacent operands
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0 && s[i] != ')' && s[i - 1] != '(') out += ' ';
        out += s[i];
    }
    return {width, out};
}

Layer Layer::cup(int p) { Layer l; l.kind = Kind::Cup; l.pos = p; return l; }
Layer Layer::cap(int p) { Layer l; l.kind = Kind::Cap; l.pos = p; return l; }
Layer Layer::permutation(std::vector<int> sigma) {
    Layer l;
    l.kind = Kind::Perm;
    l.perm = std::move(sigma);
    return l;
}
Layer Layer::slice(Series u) {
    Layer l;
    l.kind = Kind::Slice;
    l.value = std::move(u);
    return l;
}
Layer Layer::assoc(int p, Series phi) {
    Layer l;
    l.kind = Kind::Assoc;
    l.pos = p;
    l.phi = std::move(phi);
    return l;
}

std::string Layer::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Cup: os << "CUP(" << pos << ")"; break;
        case Kind::Cap: os << "CAP(" << pos << ")"; break;
        case Kind::Perm:
            os << "PERM(";
            for (std::size_t i = 0; i < perm.size(); ++i) os << (i ? " " : "") << perm[i];
            os << ")";
            break;
        case Kind::Slice: os << "SLICE[" << value->str() << "]"; break;
        case Kind::Assoc: os << "ASSOC(" << pos << ")[" << phi->str() << "]"; break;
    }
    return os.str();
}

std::string ChordMorphism::str() const {
    std::ostringstream os;
    os << source.str() << " -> " << target.str() << ":";
    if (words.empty()) os << " 0";
    for (const auto& w : words) {
        os << "\n  " << w.coefficient.get_str() << " *";
        if (w.layers.empty()) os << " id";
        for (const auto& l : w.layers) os << " " << l.str();
    }
    if (partial) os << "\n  (partial: " << note << ")";
    return os.str();
}

int chase_width(int w, const std::vector<Layer>& layers) {
    for (const auto& l : layers) {
        auto bad = [&](const std::string& why) {
            throw Error("chordcat: layer " + l.str() + " at width " + std::to_string(w) + ": " + why);
        };
        switch (l.kind) {
            case Layer::Kind::Cup:
                if (l.pos < 1 || l.pos > w + 1) bad("position out of range");
                w += 2;
                break;
            case Layer::Kind::Cap:
                if (l.pos < 1 || l.pos >= w) bad("position out of range");
                w -= 2;
                break;
            case Layer::Kind::Perm: {
                if (static_cast<int>(l.perm.size()) != w) bad("permutation size");
                std::vector<int> seen(w + 1, 0);
                for (int s : l.perm)
                    if (s < 1 || s > w || seen[s]++) bad("not a permutation");
                break;
            }
            case Layer::Kind::Slice:
                if (w < 1 || l.value->algebra() != ft(w)) bad("slice not over ft(width)");
                break;
            case Layer::Kind::Assoc:
                if (l.pos < 1 || l.pos + 2 > w) bad("position out of range");
                if (!l.phi->algebra()->is_free() || l.phi->algebra()->generators().size() != 2)
                    bad("associator not over free(x,y)");
                break;
        }
    }
    return w;
}

ChordMorphism morphism_of(const CObject& s, std::vector<Layer> layers, const Rat& c) {
    const int t = chase_width(s.width, layers);
    ChordMorphism m{s, CObject::plus(t), {}, false, ""};
    if (c != 0) m.words.push_back({c, std::move(layers)});
    return m;
}

ChordMorphism identity(const CObject& s) { return morphism_of(s, {}); }

ChordMorphism compose(const ChordMorphism& f, const ChordMorphism& g) {
    if (g.target.width != f.source.width)
        throw Error("chordcat compose: target " + g.target.str() + " does not match source " +
                    f.source.str());
    ChordMorphism m{g.source, f.target, {}, f.partial || g.partial, f.note + g.note};
    for (const auto& wg : g.words)
        for (const auto& wf : f.words) {
            CompositeWord w{wg.coefficient * wf.coefficient, wg.layers};
            w.layers.insert(w.layers.end(), wf.layers.begin(), wf.layers.end());
            m.words.push_back(std::move(w));
        }
    return m;
}

ChordMorphism tensor(const ChordMorphism& f, const ChordMorphism& g) {
    auto join = [](const CObject& a, const CObject& b) {
        if (a.width == 0) return b;
        if (b.width == 0) return a;
        return CObject{a.width + b.width, "(" + a.shape + " " + b.shape + ")"};
    };
    ChordMorphism m{join(f.source, g.source), join(f.target, g.target), {},
                    f.partial || g.partial, f.note + g.note};
    const int k = g.source.width;
    const int b = f.target.width;
    for (const auto& wf : f.words)
        for (const auto& wg : g.words) {
            CompositeWord w{wf.coefficient * wg.coefficient, {}};
            auto wdf = widths_of(f.source.width, wf.layers);
            for (std::size_t i = 0; i < wf.layers.size(); ++i)
                w.layers.push_back(extend_right(wf.layers[i], wdf[i], k));
            auto wdg = widths_of(k, wg.layers);
            for (std::size_t i = 0; i < wg.layers.size(); ++i)
                w.layers.push_back(shift_left(wg.layers[i], wdg[i], b));
            m.words.push_back(std::move(w));
        }
    return m;
}

ChordMorphism operator+(const ChordMorphism& a, const ChordMorphism& b) {
    if (a.source.width != b.source.width || a.target.width != b.target.width)
        throw Error("chordcat: sum of morphisms with different objects");
    ChordMorphism m = a;
    m.words.insert(m.words.end(), b.words.begin(), b.words.end());
    m.partial = a.partial || b.partial;
    return m;
}

ChordMorphism operator*(const Rat& c, const ChordMorphism& a) {
    ChordMorphism m = a;
    if (c == 0) m.words.clear();
    for (auto& w : m.words) w.coefficient *= c;
    return m;
}

Series embed_slice(const Series& u, int offset, int width) {
    const int k = arity_of(u);
    if (offset < 0 || offset + k > width)
        throw Error("embed_slice: " + std::to_string(k) + " strands at offset " +
                    std::to_string(offset) + " in width " + std::to_string(width));
    auto target = ft(width);
    const int D = u.truncation();
    return relabel(u, target, [&](const GeneratorId& g) {
        return Series::gen(target, D, GeneratorId::t(g.i + offset, g.j + offset));
    });
}

Series snake_projection(const Series& u) {
    if (u.algebra() != ft(3)) throw Error("snake_projection: expected a slice over ft(3)");
    auto target = ft(1);
    const int D = u.truncation();
    static const int e[4] = {0, 1, -1, 1};
    return relabel(u, target, [&](const GeneratorId& g) {
        return Series::gen(target, D, GeneratorId::t(1, 1)) * Rat(e[g.i] * e[g.j]);
    });
}

ChordMorphism normalize(const ChordMorphism& m, const ChordConfig& cfg, std::uint64_t seed) {
    const int C = cfg.chord_degree;
    std::mt19937_64 rng(seed);
    ChordMorphism out{m.source, m.target, {}, false, ""};
    std::map<std::string, CompositeWord> merged;
    for (const auto& w0 : m.words) {
        CompositeWord w = w0;
        auto wd = widths_of(m.source.width, w.layers);
        for (std::size_t i = 0; i < w.layers.size(); ++i) {
            auto& l = w.layers[i];
            if (l.kind == Layer::Kind::Assoc)
                l = Layer::slice(embed_slice(assoc_value(*l.phi, C), l.pos - 1, wd[i]));
            else if (l.kind == Layer::Kind::Slice)
                l.value = at_degree(*l.value, C);
        }
        bool alive = w.coefficient != 0;
        while (alive) {
            auto cs = candidates(w.layers, m.source.width);
            if (cs.empty()) break;
            const auto& c = seed == 0 ? cs.front() : cs[rng() % cs.size()];
            alive = apply(w.layers, w.coefficient, c);
        }
        if (!alive) continue;
        const auto widths = widths_of(m.source.width, w.layers);
        const int peak = *std::max_element(widths.begin(), widths.end());
        const bool bent = std::any_of(w.layers.begin(), w.layers.end(), [](const Layer& l) {
            return l.kind == Layer::Kind::Cup || l.kind == Layer::Kind::Cap;
        });
        if (bent && peak > cfg.width_bound) {
            out.partial = true;
            out.note = "cup/cap residue at width " + std::to_string(peak) + " above bound " +
                       std::to_string(cfg.width_bound);
        }
        auto key = word_key(w);
        auto it = merged.find(key);
        if (it == merged.end())
            merged.emplace(key, std::move(w));
        else
            it->second.coefficient += w.coefficient;
    }
    for (auto& [k, w] : merged)
        if (w.coefficient != 0) out.words.push_back(std::move(w));
    return out;
}

ChordMorphism transpose(const ChordMorphism& f, const ChordConfig& cfg) {
    const int m = f.source.width, n = f.target.width;
    std::vector<Layer> cups, caps;
    for (int k = 1; k <= m; ++k) cups.push_back(Layer::cup(n + k));
    for (int k = n; k >= 1; --k) caps.push_back(Layer::cap(k));
    ChordMorphism b = word_morphism(n, cups);
    ChordMorphism mid = tensor(tensor(identity(CObject::plus(n)), f), identity(CObject::plus(m)));
    ChordMorphism d = morphism_of(CObject::plus(2 * n + m), caps);
    ChordMorphism full = compose(d, compose(mid, b));
    full.source = f.target;
    full.target = f.source;
    return normalize(full, cfg);
}

Series one_strand_value(const ChordMorphism& m, int C) {
    if (m.source.width != 1 || m.target.width != 1)
        throw Error("one_strand_value: expected an endomorphism of +");
    Series v(ft(1), C);
    for (const auto& w : m.words) {
        if (w.layers.empty()) {
            v += Series::one(ft(1), C) * w.coefficient;
        } else if (w.layers.size() == 1 && w.layers[0].kind == Layer::Kind::Slice) {
            v += at_degree(*w.layers[0].value, C) * w.coefficient;
        } else {
            throw Error("one_strand_value: word does not normalize to a slice: " +
                        word_key(w));
        }
    }
    return v;
}

Series nu_of(const Series& phi, const ChordConfig& cfg) {
    auto w = word_morphism(1, {Layer::cup(1), Layer::assoc(1, phi), Layer::cap(2)});
    return series_inverse(one_strand_value(normalize(w, cfg), cfg.chord_degree));
}

Series rho_of(const Series& phi, const ChordConfig& cfg) {
    const int C = cfg.chord_degree;
    auto s = Layer::slice(series_inverse(assoc_value(phi, C)));
    auto w = word_morphism(1, {Layer::cup(2), s, Layer::cap(1)});
    return series_inverse(one_strand_value(normalize(w, cfg), C));
}

ChordMorphism grt_act(const GrtElement& g, const ChordMorphism& m, ActVariant v,
                      const ChordConfig& cfg) {
    const int C = cfg.chord_degree;
    const Series corr = v == ActVariant::Gprime ? nu_of(g.phi, cfg) : rho_of(g.phi, cfg);
    ChordMorphism out{m.source, m.target, {}, m.partial, m.note};
    for (const auto& w : m.words) {
        CompositeWord nw{w.coefficient, {}};
        auto wd = widths_of(m.source.width, w.layers);
        for (std::size_t i = 0; i < w.layers.size(); ++i) {
            const auto& l = w.layers[i];
            switch (l.kind) {
                case Layer::Kind::Cup:
                case Layer::Kind::Perm:
                    nw.layers.push_back(l);
                    break;
                case Layer::Kind::Slice:
                    nw.layers.push_back(Layer::slice(scale_chords(at_degree(*l.value, C), g.lambda)));
                    break;
                case Layer::Kind::Assoc:
                    nw.layers.push_back(Layer::slice(
                        embed_slice(transformed_assoc(g, *l.phi, C), l.pos - 1, wd[i])));
                    break;
                case Layer::Kind::Cap: {
                    const int off = v == ActVariant::Gprime ? l.pos : l.pos - 1;
                    nw.layers.push_back(Layer::slice(embed_slice(corr, off, wd[i])));
                    nw.layers.push_back(l);
                    break;
                }
            }
        }
        out.words.push_back(std::move(nw));
    }
    return normalize(out, cfg);
}

Series omega_inverse(const AssociatorCandidate& a, const ChordConfig& cfg) {
    auto w = word_morphism(1, {Layer::cup(2), Layer::assoc(1, a.phi), Layer::cap(1)});
    return one_strand_value(normalize(w, cfg), cfg.chord_degree);
}

EquationReport unknot_chain_verify(const GrtElement& g, const AssociatorCandidate& a,
                                   ActVariant v, const ChordConfig& cfg) {
    const int C = cfg.chord_degree;
    EquationReport r;
    r.degree = C;
    const std::string tag = v == ActVariant::Gprime ? "gprime" : "rho";
    const Series one = Series::one(ft(1), C);

    const Series oi = omega_inverse(a, cfg);
    auto wl = word_morphism(1, {Layer::cup(1), Layer::slice(series_inverse(assoc_value(a.phi, C))),
                                Layer::cap(2)});
    const Series om = one_strand_value(normalize(wl, cfg), C);
    r.add("unknot.omega", "unknot value from the inverse associator", om * oi - one);

    auto W = word_morphism(1, {Layer::cup(2), Layer::assoc(1, a.phi), Layer::cap(1)});
    const Series lhs = one_strand_value(grt_act(g, W, v, cfg), C);

    const Series V = transformed_assoc(g, a.phi, C);
    Layer corr = v == ActVariant::Gprime ? Layer::slice(embed_slice(nu_of(g.phi, cfg), 1, 3))
                                         : Layer::slice(embed_slice(rho_of(g.phi, cfg), 0, 3));
    auto chain = word_morphism(1, {Layer::cup(2), Layer::slice(V), corr, Layer::cap(1)});
    const Series rhs = one_strand_value(normalize(chain, cfg), C);
    r.add("unknot." + tag + ".chain", "transformed unknot composite", lhs - rhs);
    r.add("unknot." + tag + ".omega", "transformed unknot against omega inverse", lhs - oi);

    auto loop = word_morphism(0, {Layer::cup(1), Layer::cap(1)});
    r.add("unknot." + tag + ".loop", "closed loop fixed by the action",
          marker(same_morphism(grt_act(g, loop, v, cfg), normalize(loop, cfg)), C));
    return r;
}

EquationReport relation_checks(const AssociatorCandidate& a, const ChordConfig& cfg) {
    const int C = cfg.chord_degree;
    EquationReport r;
    r.degree = C;
    auto nf = [&](int w, std::vector<Layer> L) { return normalize(word_morphism(w, std::move(L)), cfg); };
    auto single_slice = [&](const ChordMorphism& m, int w) -> std::optional<Series> {
        if (m.words.size() != 1) return std::nullopt;
        const auto& wd = m.words[0];
        if (wd.layers.empty()) return Series::one(ft(w), C) * wd.coefficient;
        if (wd.layers.size() != 1 || wd.layers[0].kind != Layer::Kind::Slice) return std::nullopt;
        return *wd.layers[0].value * wd.coefficient;
    };
    auto slice_residual = [&](const ChordMorphism& m, int w, const Series& expect) {
        auto s = single_slice(m, w);
        return s ? *s - expect : Series::one(expect.algebra(), C);
    };

    const auto id1 = normalize(identity(CObject::plus(1)), cfg);
    r.add("zigzag.left", "zig-zag, cup on the left",
          marker(same_morphism(nf(1, {Layer::cup(1), Layer::cap(2)}), id1), C));
    r.add("zigzag.right", "zig-zag, cup on the right",
          marker(same_morphism(nf(1, {Layer::cup(2), Layer::cap(1)}), id1), C));

    auto bent = [&](int n, Layer mid) {
        return nf(n, {Layer::cup(1), std::move(mid), Layer::cap(n + 1)});
    };
    auto swap = nf(2, {Layer::permutation({2, 1})});
    r.add("invariance.X", "invariance pattern around X",
          marker(same_morphism(bent(2, Layer::permutation({1, 3, 2, 4})), swap), C));

    auto h = ParcdExpr::gen(GeneratorTag::H12).evaluate(C);
    r.add("invariance.H", "invariance pattern around H",
          slice_residual(bent(2, Layer::slice(embed_slice(h.value, 1, 4))), 2, cyclic_act(h).value));
    const Series t12 = gen_t(2, C, 1, 2);
    r.add("invariance.H.lie", "invariance pattern around the chord t12",
          slice_residual(bent(2, Layer::slice(embed_slice(t12, 1, 4))), 2,
                         -t12 - gen_t(2, C, 2, 2)));
    auto i1 = ParcdExpr::gen(GeneratorTag::I1).evaluate(C);
    r.add("invariance.I", "invariance pattern around I",
          slice_residual(bent(1, Layer::slice(embed_slice(i1.value, 1, 3))), 1, cyclic_act(i1).value));
    auto alpha = associator_image(a, PrbTag::Alpha, C);
    r.add("invariance.A", "invariance pattern around the associativity slice",
          slice_residual(bent(3, Layer::assoc(2, a.phi)), 3, cyclic_act(alpha).value));

    const Series fourT = bracket(gen_t(3, C, 1, 2), gen_t(3, C, 1, 3) + gen_t(3, C, 2, 3));
    r.add("4T", "4T slice", marker(nf(3, {Layer::slice(fourT)}).is_zero(), C));

    auto tr = transpose(word_morphism(2, {Layer::slice(t12)}), cfg);
    const Series twice = mirrored_transposition(mirrored_transposition(t12));
    r.add("transpose.H", "transpose of the chord slice", slice_residual(tr, 2, twice));
    return r;
}

std::string write_chord_morphism(const ChordMorphism& m) {
    std::ostringstream os;
    os << "chordmorphism\n";
    os << "source " << m.source.str() << "\n";
    os << "target " << m.target.str() << "\n";
    for (const auto& w : m.words) {
        os << "word " << w.coefficient.get_str() << "\n";
        for (const auto& l : w.layers) {
            switch (l.kind) {
                case Layer::Kind::Cup: os << "CUP(" << l.pos << ")\n"; break;
                case Layer::Kind::Cap: os << "CAP(" << l.pos << ")\n"; break;
                case Layer::Kind::Perm: {
                    os << "PERM(";
                    for (std::size_t i = 0; i < l.perm.size(); ++i) os << (i ? " " : "") << l.perm[i];
                    os << ")\n";
                    break;
                }
                case Layer::Kind::Slice: os << "SLICE(\n" << write_series(*l.value) << ")\n"; break;
                case Layer::Kind::Assoc:
                    os << "ASSOC(" << l.pos << ",\n" << write_series(*l.phi) << ")\n";
                    break;
            }
        }
        os << "endword\n";
    }
    os << "end\n";
    return os.str();
}

ChordMorphism read_chord_morphism(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& why) -> void {
        throw Error("chord morphism line " + std::to_string(lineno) + ": " + why);
    };
    auto next = [&](std::string& kw, std::string& rest) {
        while (std::getline(is, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            if (!(ls >> kw)) continue;
            rest.clear();
            std::getline(ls, rest);
            return true;
        }
        return false;
    };
    auto block = [&]() {
        std::string b, kw, rest;
        while (next(kw, rest)) {
            b += kw + rest + "\n";
            if (kw == "end") {
                if (!next(kw, rest) || kw != ")") fail("expected ')' after series block");
                return read_series(b, resolve_algebra);
            }
        }
        fail("unterminated series block");
        return Series(free_xy(), 0);
    };
    std::string kw, rest;
    if (!next(kw, rest) || kw != "chordmorphism") fail("expected 'chordmorphism'");
    std::optional<CObject> src, tgt;
    std::vector<CompositeWord> words;
    std::optional<CompositeWord> cur;
    bool closed = false;
    // TAG(args) on one line; SLICE( and ASSOC(p, open a series block closed by ')'.
    static const std::regex tag_re(R"(([A-Z]+)\(([^),]*)([),]?)\s*)");
    while (next(kw, rest)) {
        std::istringstream ls(rest);
        std::string full = kw + rest;
        while (!full.empty() && std::isspace(static_cast<unsigned char>(full.back()))) full.pop_back();
        if (closed) fail("content after end");
        if (kw == "source") {
            src = CObject::parse(rest);
        } else if (kw == "target") {
            tgt = CObject::parse(rest);
        } else if (kw == "word") {
            if (cur) fail("nested word");
            std::string q;
            if (!(ls >> q)) fail("bad coefficient");
            cur = CompositeWord{};
            try {
                cur->coefficient = Rat(q);
            } catch (const std::invalid_argument&) {
                fail("bad coefficient " + q);
            }
            cur->coefficient.canonicalize();
        } else if (kw == "endword") {
            if (!cur) fail("endword without word");
            words.push_back(std::move(*cur));
            cur.reset();
        } else if (kw == "end") {
            if (cur) fail("end inside word");
            closed = true;
        } else if (!cur) {
            fail("layer outside a word: " + full);
        } else if (std::smatch mt; std::regex_match(full, mt, tag_re)) {
            const std::string tag = mt[1], arg = mt[2];
            std::istringstream as(arg);
            auto position = [&]() {
                int p = 0;
                if (!(as >> p)) fail("missing position in " + tag);
                return p;
            };
            if (tag == "CUP" && mt[3] == ")") {
                cur->layers.push_back(Layer::cup(position()));
            } else if (tag == "CAP" && mt[3] == ")") {
                cur->layers.push_back(Layer::cap(position()));
            } else if (tag == "PERM" && mt[3] == ")") {
                std::vector<int> sg;
                for (int k; as >> k;) sg.push_back(k);
                cur->layers.push_back(Layer::permutation(std::move(sg)));
            } else if (tag == "SLICE" && arg.empty() && mt[3] == "") {
                cur->layers.push_back(Layer::slice(block()));
            } else if (tag == "ASSOC" && mt[3] == ",") {
                int p = position();
                cur->layers.push_back(Layer::assoc(p, block()));
            } else {
                fail("malformed layer " + full);
            }
        } else {
            fail("unknown keyword " + kw);
        }
    }
    if (!closed) fail("missing end");
    if (!src || !tgt) fail("missing source or target");
    ChordMorphism m{*src, *tgt, {}, false, ""};
    for (auto& w : words) {
        if (chase_width(src->width, w.layers) != tgt->width) fail("word does not end at the target width");
        m.words.push_back(std::move(w));
    }
    return m;
}

}  // namespace artifact
