// SPDX-License-Identifier: Apache-2.0
#include "artifact/freealg.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace artifact {

GeneratorId GeneratorId::t(int a, int b) {
    return {Family::T, std::min(a, b), std::max(a, b)};
}
GeneratorId GeneratorId::X(int a, int b) {
    return {Family::X, std::min(a, b), std::max(a, b)};
}
GeneratorId GeneratorId::letter(int k) { return {Family::Letter, k, 0}; }

std::string GeneratorId::token() const {
    switch (family) {
    case Family::T:
        return "t(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Family::X:
        return "X(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Family::Letter:
        if (i == 0) return "x";
        if (i == 1) return "y";
        return "l" + std::to_string(i);
    }
    return "?";
}

GeneratorId GeneratorId::parse(const std::string& tok) {
    if (tok == "x") return letter(0);
    if (tok == "y") return letter(1);
    if (tok.size() > 1 && tok[0] == 'l' && std::isdigit(static_cast<unsigned char>(tok[1])))
        return letter(std::stoi(tok.substr(1)));
    if (tok.size() >= 6 && (tok[0] == 't' || tok[0] == 'X') && tok[1] == '(' &&
        tok.back() == ')') {
        auto comma = tok.find(',');
        if (comma == std::string::npos) throw Error("bad generator token: " + tok);
        int a = std::stoi(tok.substr(2, comma - 2));
        int b = std::stoi(tok.substr(comma + 1, tok.size() - comma - 2));
        return tok[0] == 't' ? t(a, b) : X(a, b);
    }
    throw Error("bad generator token: " + tok);
}

void add_term(Terms& t, const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = t.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

std::optional<int> Algebra::index_of(const GeneratorId& g) const {
    const auto& gs = generators();
    auto it = std::lower_bound(gs.begin(), gs.end(), g);
    if (it != gs.end() && *it == g) return static_cast<int>(it - gs.begin());
    return std::nullopt;
}

namespace {

class FreeAlgebra final : public Algebra {
public:
    FreeAlgebra(std::vector<GeneratorId> g, std::string d)
        : gens_(std::move(g)), desc_(std::move(d)) {
        std::sort(gens_.begin(), gens_.end());
    }
    const std::string& descriptor() const override { return desc_; }
    const std::vector<GeneratorId>& generators() const override { return gens_; }
    bool is_free() const override { return true; }
    void reduce_into(const Monomial& m, const Rat& c, Terms& out) const override {
        add_term(out, m, c);
    }
    void require_degree(int) const override {}

private:
    std::vector<GeneratorId> gens_;
    std::string desc_;
};

std::string monomial_str(const Algebra& a, const Monomial& m) {
    std::string s = "[";
    for (std::size_t k = 0; k < m.w.size(); ++k) {
        if (k) s += " ";
        s += a.generators()[m.w[k]].token();
    }
    return s + "]";
}

}  // namespace

std::shared_ptr<const Algebra> free_algebra(std::vector<GeneratorId> gens,
                                            std::string descriptor) {
    return std::make_shared<FreeAlgebra>(std::move(gens), std::move(descriptor));
}

std::shared_ptr<const Algebra> free_xy() {
    static const auto a =
        free_algebra({GeneratorId::letter(0), GeneratorId::letter(1)}, "free(x,y)");
    return a;
}

// ---- Series ----

Series::Series(std::shared_ptr<const Algebra> alg, int D) : alg_(std::move(alg)), D_(D) {
    if (!alg_) throw Error("series without algebra");
    if (D < 0) throw Error("negative truncation");
}

Series Series::scalar(std::shared_ptr<const Algebra> alg, int D, const Rat& c) {
    Series s(std::move(alg), D);
    Rat q = c;
    q.canonicalize();
    add_term(s.t_, Monomial{}, q);
    return s;
}

Series Series::gen(std::shared_ptr<const Algebra> alg, int D, const GeneratorId& g) {
    auto k = alg->index_of(g);
    if (!k) throw Error("generator " + g.token() + " not in " + alg->descriptor());
    Terms raw;
    raw[Monomial{{static_cast<std::uint8_t>(*k)}}] = 1;
    return from_terms(std::move(alg), D, raw);
}

Series Series::from_terms(std::shared_ptr<const Algebra> alg, int D, const Terms& raw) {
    Series s(alg, D);
    alg->require_degree(D);
    for (const auto& [m, c] : raw) {
        if (m.degree() > D) continue;
        Rat q = c;
        q.canonicalize();
        alg->reduce_into(m, q, s.t_);
    }
    return s;
}

void Series::check_compatible(const Series& o) const {
    if (alg_ != o.alg_ && alg_->descriptor() != o.alg_->descriptor())
        throw Error("algebra mismatch: " + alg_->descriptor() + " vs " +
                    o.alg_->descriptor());
    if (D_ != o.D_)
        throw Error("truncation mismatch: " + std::to_string(D_) + " vs " +
                    std::to_string(o.D_));
}

Rat Series::constant() const {
    auto it = t_.find(Monomial{});
    return it == t_.end() ? Rat(0) : it->second;
}

Series Series::degree_part(int d) const {
    Series s(alg_, D_);
    for (const auto& [m, c] : t_)
        if (m.degree() == d) s.t_.emplace(m, c);
    return s;
}

Series Series::truncate(int D) const {
    if (D > D_) throw Error("cannot raise truncation");
    Series s(alg_, D);
    for (const auto& [m, c] : t_)
        if (m.degree() <= D) s.t_.emplace(m, c);
    return s;
}

int Series::min_degree() const { return t_.empty() ? -1 : t_.begin()->first.degree(); }

Series Series::operator+(const Series& o) const {
    Series r = *this;
    r += o;
    return r;
}
Series Series::operator-(const Series& o) const {
    Series r = *this;
    r -= o;
    return r;
}
Series Series::operator-() const { return *this * Rat(-1); }

Series& Series::operator+=(const Series& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.t_) add_term(t_, m, c);
    return *this;
}
Series& Series::operator-=(const Series& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.t_) add_term(t_, m, -c);
    return *this;
}

Series Series::operator*(const Rat& c) const {
    Series r(alg_, D_);
    Rat q = c;
    q.canonicalize();
    if (q == 0) return r;
    for (const auto& [m, v] : t_) r.t_.emplace(m, v * q);
    return r;
}

Series Series::operator*(const Series& o) const {
    check_compatible(o);
    Series r(alg_, D_);
    alg_->require_degree(D_);
    Monomial buf;
    for (const auto& [m1, c1] : t_) {
        int room = D_ - m1.degree();
        for (const auto& [m2, c2] : o.t_) {
            if (m2.degree() > room) break;  // terms are sorted by degree
            buf.w = m1.w;
            buf.w.insert(buf.w.end(), m2.w.begin(), m2.w.end());
            Rat c = c1 * c2;
            if (m1.w.empty() || m2.w.empty())
                add_term(r.t_, buf, c);
            else
                alg_->reduce_into(buf, c, r.t_);
        }
    }
    return r;
}

bool Series::operator==(const Series& o) const {
    check_compatible(o);
    return t_ == o.t_;
}

std::string Series::str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) s += " + ";
        first = false;
        s += c.get_str() + " " + monomial_str(*alg_, m);
    }
    return s;
}

Series bracket(const Series& a, const Series& b) { return a * b - b * a; }

Series series_pow(const Series& a, int k) {
    Series r = Series::one(a.algebra(), a.truncation());
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

Series series_exp(const Series& a) {
    if (a.constant() != 0) throw Error("exp: nonzero constant term");
    const int D = a.truncation();
    Series r = Series::one(a.algebra(), D);
    if (a.is_zero()) return r;
    const int m = a.min_degree();
    Series p = r;
    Rat fact = 1;
    for (int k = 1; k * m <= D; ++k) {
        p = p * a;
        fact *= k;
        r += p * (Rat(1) / fact);
    }
    return r;
}

Series series_log(const Series& g) {
    if (g.constant() != 1) throw Error("log: constant term is not 1");
    const int D = g.truncation();
    Series u = g - Series::one(g.algebra(), D);
    Series r(g.algebra(), D);
    if (u.is_zero()) return r;
    const int m = u.min_degree();
    Series p = Series::one(g.algebra(), D);
    for (int k = 1; k * m <= D; ++k) {
        p = p * u;
        Rat c(k % 2 ? 1 : -1, k);
        c.canonicalize();
        r += p * c;
    }
    return r;
}

Series series_inverse(const Series& g) {
    if (g.constant() != 1) throw Error("inverse: constant term is not 1");
    const int D = g.truncation();
    Series u = Series::one(g.algebra(), D) - g;
    Series r = Series::one(g.algebra(), D);
    if (u.is_zero()) return r;
    const int m = u.min_degree();
    Series p = r;
    for (int k = 1; k * m <= D; ++k) {
        p = p * u;
        r += p;
    }
    return r;
}

namespace {

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = m.w.size();
        for (auto c : m.w) h = h * 131 + c;
        return h;
    }
};

// Images of words under letter images, memoized by prefix.
class WordEvaluator {
public:
    WordEvaluator(const std::vector<const Series*>& images, const Series& unit)
        : images_(images), unit_(unit) {}

    const Series& eval(const Monomial& m) {
        auto it = memo_.find(m);
        if (it != memo_.end()) return it->second;
        if (m.w.empty()) return memo_.emplace(m, unit_).first->second;
        Monomial pre{std::vector<std::uint8_t>(m.w.begin(), m.w.end() - 1)};
        Series v = eval(pre) * *images_[m.w.back()];
        return memo_.emplace(m, std::move(v)).first->second;
    }

private:
    const std::vector<const Series*>& images_;
    Series unit_;
    std::unordered_map<Monomial, Series, MonomialHash> memo_;
};

Series evaluate(const Series& a, const std::vector<const Series*>& images,
                const std::shared_ptr<const Algebra>& target, int D) {
    Series out(target, D);
    WordEvaluator ev(images, Series::one(target, D));
    for (const auto& [m, c] : a.terms()) {
        if (m.degree() > D) break;  // zero constant terms: word degree bounds image degree
        out += ev.eval(m) * c;
    }
    return out;
}

}  // namespace

static void require_same(const Series& a, const Series& b) {
    if (a.algebra()->descriptor() != b.algebra()->descriptor())
        throw Error("algebra mismatch: " + a.algebra()->descriptor() + " vs " +
                    b.algebra()->descriptor());
    if (a.truncation() != b.truncation())
        throw Error("truncation mismatch: " + std::to_string(a.truncation()) + " vs " +
                    std::to_string(b.truncation()));
}

Series substitute(const Series& phi, const Series& a, const Series& b) {
    require_same(a, b);
    const auto& src = phi.algebra();
    if (!src->is_free() || src->generators().size() != 2)
        throw Error("substitute: source must be free on two letters, got " +
                    src->descriptor());
    if (a.constant() != 0 || b.constant() != 0)
        throw Error("substitute: images need zero constant term");
    std::vector<const Series*> im{&a, &b};
    return evaluate(phi, im, a.algebra(), a.truncation());
}

Series apply_morphism(const Series& a, const std::vector<Series>& images) {
    if (images.size() != a.algebra()->generators().size())
        throw Error("apply_morphism: expected " +
                    std::to_string(a.algebra()->generators().size()) + " images, got " +
                    std::to_string(images.size()));
    if (images.empty()) throw Error("apply_morphism: no images");
    std::vector<const Series*> im;
    for (const auto& s : images) {
        require_same(images.front(), s);
        if (s.constant() != 0) throw Error("apply_morphism: images need zero constant term");
        im.push_back(&s);
    }
    return evaluate(a, im, images.front().algebra(), images.front().truncation());
}

// ---- coproduct checks ----

Witness is_primitive(const Series& p) {
    if (p.constant() != 0) return {false, "nonzero constant term " + p.constant().get_str()};
    const auto& alg = p.algebra();
    // Degree by degree: the reduced coproduct of a homogeneous part is homogeneous.
    std::map<int, std::map<std::pair<Monomial, Monomial>, Rat>> acc;
    for (const auto& [m, c] : p.terms()) {
        const int d = m.degree();
        if (d < 2) continue;
        auto& tens = acc[d];
        const std::uint32_t full = (1u << d) - 1;
        for (std::uint32_t S = 1; S < full; ++S) {
            Monomial l, r;
            for (int k = 0; k < d; ++k) ((S >> k) & 1 ? l.w : r.w).push_back(m.w[k]);
            Terms nl, nr;
            alg->reduce_into(l, 1, nl);
            alg->reduce_into(r, 1, nr);
            for (const auto& [ml, cl] : nl)
                for (const auto& [mr, cr] : nr) {
                    auto key = std::make_pair(ml, mr);
                    Rat v = c * cl * cr;
                    auto [it, fresh] = tens.try_emplace(key, v);
                    if (!fresh) {
                        it->second += v;
                        if (it->second == 0) tens.erase(it);
                    }
                }
        }
    }
    for (const auto& [d, tens] : acc) {
        if (tens.empty()) continue;
        const auto& [key, v] = *tens.begin();
        return {false, "coproduct defect in degree " + std::to_string(d) + ": " +
                           v.get_str() + " " + monomial_str(*alg, key.first) + " (x) " +
                           monomial_str(*alg, key.second)};
    }
    return {true, ""};
}

Witness is_grouplike(const Series& g) {
    if (g.constant() != 1) return {false, "constant term " + g.constant().get_str()};
    Witness w = is_primitive(series_log(g));
    if (!w.ok) w.detail = "log is not primitive: " + w.detail;
    return w;
}

// ---- Lyndon words ----

namespace {

bool is_lyndon(const std::vector<std::uint8_t>& w) {
    if (w.empty()) return false;
    for (std::size_t k = 1; k < w.size(); ++k)
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + k, w.end()))
            return false;
    return true;
}

Terms concat_bracket(const Terms& a, const Terms& b) {
    Terms r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial ab{ma.w}, ba{mb.w};
            ab.w.insert(ab.w.end(), mb.w.begin(), mb.w.end());
            ba.w.insert(ba.w.end(), ma.w.begin(), ma.w.end());
            add_term(r, ab, ca * cb);
            add_term(r, ba, -ca * cb);
        }
    return r;
}

}  // namespace

Terms lyndon_bracket(const std::vector<std::uint8_t>& w) {
    if (!is_lyndon(w)) throw Error("not a Lyndon word");
    if (w.size() == 1) return Terms{{Monomial{w}, Rat(1)}};
    // Standard factorization: longest proper Lyndon suffix.
    std::size_t split = w.size() - 1;
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::vector<std::uint8_t> v(w.begin() + k, w.end());
        if (is_lyndon(v)) {
            split = k;
            break;
        }
    }
    std::vector<std::uint8_t> u(w.begin(), w.begin() + split), v(w.begin() + split, w.end());
    return concat_bracket(lyndon_bracket(u), lyndon_bracket(v));
}

std::vector<LyndonWord> lyndon_basis(int alphabet, int d) {
    std::vector<LyndonWord> out;
    if (alphabet <= 0 || d <= 0) return out;
    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) == d) {
            LyndonWord lw;
            lw.letters.assign(w.begin(), w.end());
            lw.expansion = lyndon_bracket(lw.letters);
            out.push_back(std::move(lw));
        }
        const std::size_t m = w.size();
        while (static_cast<int>(w.size()) < d) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == alphabet - 1) w.pop_back();
    }
    return out;
}

long witt_dimension(int g, int d) {
    auto mobius = [](int n) {
        int r = 1;
        for (int p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
        return n > 1 ? -r : r;
    };
    long sum = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        long pw = 1;
        for (int k = 0; k < d / e; ++k) pw *= g;
        sum += mobius(e) * pw;
    }
    return sum / d;
}

// ---- text format ----

std::string write_series(const Series& s) {
    std::ostringstream os;
    os << "series\n";
    os << "algebra " << s.algebra()->descriptor() << "\n";
    os << "truncation " << s.truncation() << "\n";
    for (const auto& [m, c] : s.terms()) {
        os << "term " << c.get_num().get_str() << " " << c.get_den().get_str();
        for (auto g : m.w) os << " " << s.algebra()->generators()[g].token();
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

Series read_series(const std::string& text, const AlgebraResolver& resolve) {
    std::istringstream is(text);
    std::string line;
    std::shared_ptr<const Algebra> alg;
    int D = -1;
    bool opened = false, closed = false;
    std::vector<std::pair<std::vector<std::string>, Rat>> raw;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        auto fail = [&](const std::string& why) {
            throw Error("series line " + std::to_string(lineno) + ": " + why);
        };
        if (closed) fail("content after end");
        if (!opened) {
            if (kw != "series") fail("expected 'series'");
            opened = true;
        } else if (kw == "algebra") {
            std::string desc;
            ls >> desc;
            alg = resolve(desc);
            if (!alg) fail("unknown algebra " + desc);
        } else if (kw == "truncation") {
            if (!(ls >> D) || D < 0) fail("bad truncation");
        } else if (kw == "term") {
            std::string num, den;
            if (!(ls >> num >> den)) fail("term needs numerator and denominator");
            Rat c;
            try {
                c = Rat(mpz_class(num), mpz_class(den));
            } catch (const std::invalid_argument&) {
                fail("bad coefficient");
            }
            if (c.get_den() == 0) fail("zero denominator");
            c.canonicalize();
            std::vector<std::string> toks;
            std::string t;
            while (ls >> t) toks.push_back(t);
            raw.emplace_back(std::move(toks), c);
        } else if (kw == "end") {
            closed = true;
        } else {
            fail("unknown keyword " + kw);
        }
    }
    if (!closed) throw Error("series block not terminated");
    if (!alg) throw Error("series block without algebra");
    if (D < 0) throw Error("series block without truncation");
    Terms terms;
    for (const auto& [toks, c] : raw) {
        Monomial m;
        for (const auto& t : toks) {
            auto k = alg->index_of(GeneratorId::parse(t));
            if (!k) throw Error("generator " + t + " not in " + alg->descriptor());
            m.w.push_back(static_cast<std::uint8_t>(*k));
        }
        add_term(terms, m, c);
    }
    return Series::from_terms(alg, D, terms);
}

}  // namespace artifact
