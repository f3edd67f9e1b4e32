// SPDX-License-Identifier: Apache-2.0
#include "artifact/dkalg.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace artifact {

namespace {

constexpr int kMaxDegree = 16;
// Bump when the monomial order or the table layout changes.
constexpr int kOrderVersion = 1;

std::mutex cache_dir_mu;
std::optional<std::string> cache_dir_value;

std::string kind_name(const PresentationId& p) {
    switch (p.kind) {
    case Kind::Free: return "free";
    case Kind::DK: return p.framed ? "ft" : "t";
    case Kind::Spherical: return "sph";
    case Kind::FB: return "fB";
    }
    return "?";
}

}  // namespace

std::string PresentationId::descriptor() const {
    if (kind == Kind::Free) return "free(x,y)";
    std::string s = kind_name(*this) + "(" + std::to_string(n) + ")";
    if (central_quotient) s += "/c";
    return s;
}

PresentationId PresentationId::parse(const std::string& desc) {
    if (desc == "free(x,y)") return free_xy();
    static const std::regex re(R"((ft|t|sph|fB)\((\d+)\)(/c)?)");
    std::smatch m;
    if (!std::regex_match(desc, m, re)) throw Error("unknown algebra descriptor: " + desc);
    int n = std::stoi(m[2]);
    if (n < 1 || n > 9) throw Error("strand count out of range in " + desc);
    PresentationId p;
    if (m[1] == "ft") p = ft(n);
    else if (m[1] == "t") p = t(n);
    else if (m[1] == "sph") p = sph(n);
    else p = fB(n);
    if (m[3].matched) {
        if (p.kind != Kind::DK || p.framed) throw Error("/c only applies to t(n): " + desc);
        p.central_quotient = true;
    }
    return p;
}

std::vector<GeneratorId> PresentationId::cover_generators() const {
    std::vector<GeneratorId> g;
    switch (kind) {
    case Kind::Free:
        g = {GeneratorId::letter(0), GeneratorId::letter(1)};
        break;
    case Kind::DK:
        for (int i = 1; i <= n; ++i)
            for (int j = framed ? i : i + 1; j <= n; ++j) g.push_back(GeneratorId::t(i, j));
        break;
    case Kind::Spherical:
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j) g.push_back(GeneratorId::t(i, j));
        break;
    case Kind::FB:
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) g.push_back(GeneratorId::X(i, j));
        break;
    }
    std::sort(g.begin(), g.end());
    return g;
}

namespace {

// Relations over cover generator indices.
std::vector<Terms> raw_relations(const PresentationId& p) {
    const auto gens = p.cover_generators();
    auto idx = [&](const GeneratorId& g) {
        auto it = std::lower_bound(gens.begin(), gens.end(), g);
        return static_cast<std::uint8_t>(it - gens.begin());
    };
    using Lin = std::vector<std::pair<GeneratorId, int>>;
    std::vector<Terms> out;
    auto commutator = [&](const Lin& a, const Lin& b) {
        Terms t;
        for (const auto& [ga, ca] : a)
            for (const auto& [gb, cb] : b) {
                add_term(t, Monomial{{idx(ga), idx(gb)}}, Rat(ca * cb));
                add_term(t, Monomial{{idx(gb), idx(ga)}}, Rat(-ca * cb));
            }
        if (!t.empty()) out.push_back(std::move(t));
    };
    if (p.kind == Kind::Free) return out;

    const int lo = p.kind == Kind::Spherical ? 0 : 1;
    const int hi = p.n;
    auto gen = [&](int a, int b) {
        return p.kind == Kind::FB ? GeneratorId::X(a, b) : GeneratorId::t(a, b);
    };

    // Disjoint commutators. The spherical presentation includes diagonal symbols.
    const bool diag_disjoint = p.kind == Kind::Spherical;
    std::vector<std::pair<int, int>> pairs;
    for (int i = lo; i <= hi; ++i)
        for (int j = diag_disjoint ? i : i + 1; j <= hi; ++j) pairs.emplace_back(i, j);
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a + 1; b < pairs.size(); ++b) {
            auto [i, j] = pairs[a];
            auto [k, l] = pairs[b];
            if (i == k || i == l || j == k || j == l) continue;
            commutator({{gen(i, j), 1}}, {{gen(k, l), 1}});
        }

    if (p.kind == Kind::DK || p.kind == Kind::FB) {
        for (int i = lo; i <= hi; ++i)
            for (int j = i + 1; j <= hi; ++j)
                for (int k = lo; k <= hi; ++k) {
                    if (k == i || k == j) continue;
                    commutator({{gen(i, j), 1}}, {{gen(k, i), 1}, {gen(k, j), 1}});
                }
        if (p.framed) {
            for (int i = lo; i <= hi; ++i)
                for (int j = lo; j <= hi; ++j)
                    for (int k = j; k <= hi; ++k) {
                        if (j == i && k == i) continue;
                        commutator({{gen(i, i), 1}}, {{gen(j, k), 1}});
                    }
        }
    }

    // Linear residues.
    if (p.kind == Kind::Spherical || p.kind == Kind::FB) {
        for (int j = lo; j <= hi; ++j) {
            Terms t;
            for (int i = lo; i <= hi; ++i) add_term(t, Monomial{{idx(gen(i, j))}}, 1);
            out.push_back(std::move(t));
        }
    }
    if (p.central_quotient) {
        Terms t;
        for (int i = 1; i <= hi; ++i)
            for (int j = i + 1; j <= hi; ++j) add_term(t, Monomial{{idx(gen(i, j))}}, 1);
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

std::shared_ptr<const Algebra> cover_algebra(const PresentationId& p) {
    static std::mutex mu;
    static std::map<PresentationId, std::shared_ptr<const Algebra>> cache;
    std::lock_guard lk(mu);
    auto& slot = cache[p];
    if (!slot) slot = free_algebra(p.cover_generators(), "cover:" + p.descriptor());
    return slot;
}

std::vector<Series> relation_set(const PresentationId& p) {
    auto alg = cover_algebra(p);
    std::vector<Series> out;
    for (const auto& t : raw_relations(p)) out.push_back(Series::from_terms(alg, 2, t));
    return out;
}

// ---- Presentation ----

Presentation::Presentation(PresentationId id)
    : id_(id), desc_(id.descriptor()), gens_(id.cover_generators()) {
    if (id.kind == Kind::Free) throw Error("free algebras have no presentation table");
    const int G = static_cast<int>(gens_.size());
    if (G > 255) throw Error("too many generators in " + desc_);
    const auto rels = raw_relations(id);

    std::vector<SparseVec> lin;
    for (const auto& r : rels) {
        if (r.begin()->first.degree() != 1) continue;
        std::vector<SparseVec::Entry> e;
        for (const auto& [m, c] : r) e.emplace_back(m.w[0], c);
        lin.push_back(SparseVec::from_entries(std::move(e)));
    }
    EchelonBasis eb = echelonize(lin);
    surv_pos_.assign(G, -1);
    for (int g = 0; g < G; ++g)
        if (eb.find_pivot(static_cast<Col>(g)) < 0) {
            surv_pos_[g] = static_cast<int>(surv_.size());
            surv_.push_back(g);
        }
    linear_.resize(G);
    for (int g = 0; g < G; ++g) {
        if (surv_pos_[g] >= 0) {
            linear_[g] = {{static_cast<std::uint32_t>(surv_pos_[g]), Rat(1)}};
            continue;
        }
        const auto& row = eb.rows[static_cast<std::size_t>(eb.find_pivot(static_cast<Col>(g)))];
        for (auto e = std::next(row.begin()); e != row.end(); ++e)
            linear_[g].emplace_back(static_cast<std::uint32_t>(surv_pos_[e->first]), -e->second);
    }

    for (const auto& r : rels) {
        if (r.begin()->first.degree() != 2) continue;
        std::map<std::pair<int, int>, Rat> q;
        for (const auto& [m, c] : r)
            for (const auto& [a, ca] : linear_[m.w[0]])
                for (const auto& [b, cb] : linear_[m.w[1]]) {
                    auto& v = q[{static_cast<int>(a), static_cast<int>(b)}];
                    v += c * ca * cb;
                }
        std::vector<std::pair<std::pair<int, int>, Rat>> row;
        for (auto& [k, v] : q)
            if (v != 0) row.emplace_back(k, v);
        if (!row.empty()) quad_.push_back(std::move(row));
    }

    levels_.resize(kMaxDegree + 1);
    auto l0 = std::make_unique<Level>();
    l0->words.push_back(Monomial{});
    levels_[0] = std::move(l0);
    auto l1 = std::make_unique<Level>();
    for (std::size_t k = 0; k < surv_.size(); ++k) {
        l1->words.push_back(Monomial{{static_cast<std::uint8_t>(surv_[k])}});
        l1->step.push_back({{static_cast<std::uint32_t>(k), Rat(1)}});
    }
    levels_[1] = std::move(l1);
    built_.store(1, std::memory_order_release);
}

std::optional<std::string> table_cache_dir() {
    std::lock_guard lk(cache_dir_mu);
    return cache_dir_value;
}

void set_table_cache_dir(std::optional<std::string> dir) {
    std::lock_guard lk(cache_dir_mu);
    cache_dir_value = std::move(dir);
}

std::string table_cache_path(const std::string& dir, const PresentationId& p, int d) {
    std::string key = p.descriptor();
    for (char& c : key)
        if (c == '(' || c == ')' || c == '/' || c == ',') c = '_';
    return (std::filesystem::path(dir) /
            (key + "-d" + std::to_string(d) + "-o" + std::to_string(kOrderVersion) + ".tbl"))
        .string();
}

bool Presentation::load_level(int d, const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    auto fail = [&](const std::string& why) -> void {
        throw Error("table cache " + path + ": " + why);
    };
    const std::size_t ncols = levels_[d - 1]->words.size() * surv_.size();
    std::string kw, desc;
    int deg = 0, order = 0;
    std::size_t nwords = 0, nsteps = 0;
    in >> kw >> desc;
    if (kw != "nftable" || desc != desc_) fail("wrong presentation");
    in >> kw >> deg >> kw >> order;
    if (deg != d || order != kOrderVersion) fail("wrong degree or order version");
    in >> kw >> nwords;
    auto lvl = std::make_unique<Level>();
    for (std::size_t k = 0; k < nwords; ++k) {
        Monomial w;
        w.w.resize(static_cast<std::size_t>(d));
        for (auto& g : w.w) {
            int x = -1;
            if (!(in >> x) || x < 0 || x >= static_cast<int>(gens_.size())) fail("bad word");
            g = static_cast<std::uint8_t>(x);
        }
        lvl->words.push_back(std::move(w));
    }
    in >> kw >> nsteps;
    if (kw != "step" || nsteps != ncols) fail("step table size");
    lvl->step.resize(ncols);
    for (auto& v : lvl->step) {
        std::size_t len = 0;
        if (!(in >> len)) fail("truncated step table");
        for (std::size_t k = 0; k < len; ++k) {
            std::uint32_t idx = 0;
            std::string q;
            if (!(in >> idx >> q) || idx >= nwords) fail("bad step entry");
            v.emplace_back(idx, Rat(q));
        }
    }
    levels_[d] = std::move(lvl);
    return true;
}

void Presentation::store_level(int d, const std::string& path) const {
    const Level& lvl = *levels_[d];
    std::ostringstream os;
    os << "nftable " << desc_ << "\ndegree " << d << "\norder " << kOrderVersion << "\n";
    os << "words " << lvl.words.size() << "\n";
    for (const auto& w : lvl.words) {
        for (std::size_t k = 0; k < w.w.size(); ++k) os << (k ? " " : "") << int(w.w[k]);
        os << "\n";
    }
    os << "step " << lvl.step.size() << "\n";
    for (const auto& v : lvl.step) {
        os << v.size();
        for (const auto& [i, c] : v) os << " " << i << " " << c.get_str();
        os << "\n";
    }
    std::filesystem::create_directories(std::filesystem::path(path).parent_path());
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << os.str();
        if (!out) throw Error("table cache: cannot write " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

void Presentation::build_level(int d) {
    const auto dir = table_cache_dir();
    if (dir && load_level(d, table_cache_path(*dir, id_, d))) return;
    compute_level(d);
    if (dir) store_level(d, table_cache_path(*dir, id_, d));
}

void Presentation::compute_level(int d) {
    const Level& prev = *levels_[d - 1];
    const Level& prev2 = *levels_[d - 2];
    const std::size_t m = surv_.size();
    std::vector<SparseVec> rows;
    rows.reserve(prev2.words.size() * quad_.size());
    for (std::size_t u = 0; u < prev2.words.size(); ++u)
        for (const auto& rel : quad_) {
            std::vector<SparseVec::Entry> e;
            for (const auto& [gg, c] : rel) {
                const auto& nf = prev.step[u * m + static_cast<std::size_t>(gg.first)];
                for (const auto& [s, a] : nf)
                    e.emplace_back(static_cast<Col>(s * m + static_cast<std::size_t>(gg.second)),
                                   c * a);
            }
            SparseVec v = SparseVec::from_entries(std::move(e));
            if (!v.empty()) rows.push_back(std::move(v));
        }
    EchelonBasis eb = echelonize(rows);

    const std::size_t ncols = prev.words.size() * m;
    auto lvl = std::make_unique<Level>();
    std::vector<std::uint32_t> pos(ncols, UINT32_MAX);
    for (std::size_t col = 0; col < ncols; ++col) {
        if (eb.find_pivot(static_cast<Col>(col)) >= 0) continue;
        pos[col] = static_cast<std::uint32_t>(lvl->words.size());
        Monomial w = prev.words[col / m];
        w.w.push_back(static_cast<std::uint8_t>(surv_[col % m]));
        lvl->words.push_back(std::move(w));
    }
    lvl->step.resize(ncols);
    for (std::size_t col = 0; col < ncols; ++col) {
        if (pos[col] != UINT32_MAX) {
            lvl->step[col] = {{pos[col], Rat(1)}};
            continue;
        }
        const auto& row = eb.rows[static_cast<std::size_t>(eb.find_pivot(static_cast<Col>(col)))];
        for (auto e = std::next(row.begin()); e != row.end(); ++e)
            lvl->step[col].emplace_back(pos[e->first], -e->second);
    }
    levels_[d] = std::move(lvl);
}

void Presentation::require_degree(int d) const {
    if (d <= built_degree()) return;
    if (d > kMaxDegree)
        throw Error("degree " + std::to_string(d) + " exceeds table limit " +
                    std::to_string(kMaxDegree));
    std::lock_guard lk(build_mu_);
    for (int k = built_.load() + 1; k <= d; ++k) {
        const_cast<Presentation*>(this)->build_level(k);
        built_.store(k, std::memory_order_release);
    }
}

std::size_t Presentation::dimension(int d) const {
    require_degree(d);
    return levels_[d]->words.size();
}

const std::vector<Monomial>& Presentation::standard_words(int d) const {
    require_degree(d);
    return levels_[d]->words;
}

Presentation::Vec Presentation::reduce_word_uncached(const Monomial& w) const {
    if (w.w.empty()) return {{0, Rat(1)}};
    Monomial pre{std::vector<std::uint8_t>(w.w.begin(), w.w.end() - 1)};
    const Vec head = reduce_word(pre);
    const Level& lvl = *levels_[w.degree()];
    const std::size_t m = surv_.size();
    std::map<std::uint32_t, Rat> acc;
    for (const auto& [s, a] : head)
        for (const auto& [g, b] : linear_[w.w.back()])
            for (const auto& [t, c] : lvl.step[s * m + g]) acc[t] += a * b * c;
    Vec out;
    for (auto& [t, v] : acc)
        if (v != 0) out.emplace_back(t, std::move(v));
    return out;
}

Presentation::Vec Presentation::reduce_word(const Monomial& w) const {
    {
        std::shared_lock lk(memo_mu_);
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
    }
    Vec v = reduce_word_uncached(w);
    std::unique_lock lk(memo_mu_);
    memo_.emplace(w, v);
    return v;
}

void Presentation::reduce_into(const Monomial& m, const Rat& c, Terms& out) const {
    const int d = m.degree();
    if (d > built_degree())
        throw Error("normal-form table for " + desc_ + " built to degree " +
                    std::to_string(built_degree()) + ", required " + std::to_string(d));
    if (c == 0) return;
    const auto& words = levels_[d]->words;
    for (const auto& [k, a] : reduce_word(m)) add_term(out, words[k], c * a);
}

std::shared_ptr<const Presentation> presentation(const PresentationId& p) {
    static std::mutex mu;
    static std::map<PresentationId, std::shared_ptr<const Presentation>> cache;
    std::lock_guard lk(mu);
    auto& slot = cache[p];
    if (!slot) slot = std::make_shared<Presentation>(p);
    return slot;
}

std::shared_ptr<const Algebra> resolve_algebra(const std::string& desc) {
    if (desc == "free(x,y)") return free_xy();
    if (desc.rfind("cover:", 0) == 0) return cover_algebra(PresentationId::parse(desc.substr(6)));
    return presentation(PresentationId::parse(desc));
}

// ---- operations ----

Series relabel(const Series& a, const std::shared_ptr<const Algebra>& target,
               const std::function<Series(const GeneratorId&)>& image) {
    std::vector<Series> im;
    im.reserve(a.algebra()->generators().size());
    for (const auto& g : a.algebra()->generators()) {
        Series s = image(g);
        if (s.algebra() != target || s.truncation() != a.truncation())
            throw Error("relabel: image of " + g.token() + " not in " + target->descriptor());
        im.push_back(std::move(s));
    }
    return apply_morphism(a, im);
}

Series normal_form(const Series& a) {
    const auto& desc = a.algebra()->descriptor();
    if (desc.rfind("cover:", 0) == 0)
        return normal_form(a, presentation(PresentationId::parse(desc.substr(6))));
    return Series::from_terms(a.algebra(), a.truncation(), a.terms());
}

Series normal_form(const Series& a, const std::shared_ptr<const Algebra>& target) {
    const int D = a.truncation();
    return relabel(a, target,
                   [&](const GeneratorId& g) { return Series::gen(target, D, g); });
}

long degree_dimension(const PresentationId& p, int d) {
    if (p.kind == Kind::Free) {
        long r = 1;
        for (int k = 0; k < d; ++k) r *= 2;
        return r;
    }
    return static_cast<long>(presentation(p).get()->dimension(d));
}

namespace {

const PresentationId& pid_of(const Series& a) {
    auto p = dynamic_cast<const Presentation*>(a.algebra().get());
    if (!p) throw Error("expected a presented algebra, got " + a.algebra()->descriptor());
    return p->id();
}

const PresentationId& require_ft(const Series& a, const char* what) {
    const auto& p = pid_of(a);
    if (p.kind != Kind::DK || !p.framed)
        throw Error(std::string(what) + ": expected ft(n), got " + a.algebra()->descriptor());
    return p;
}

Series sum_of(const std::shared_ptr<const Algebra>& alg, int D,
              const std::vector<std::pair<GeneratorId, int>>& parts) {
    Series s(alg, D);
    for (const auto& [g, c] : parts) s += Series::gen(alg, D, g) * Rat(c);
    return s;
}

}  // namespace

int arity_of(const Series& a) {
    const auto& p = pid_of(a);
    if (p.kind != Kind::DK && p.kind != Kind::FB)
        throw Error("no arity for " + a.algebra()->descriptor());
    return p.n;
}

Series permute(const Series& a, const std::vector<int>& sigma) {
    const auto& p = pid_of(a);
    if (p.kind != Kind::DK && p.kind != Kind::FB)
        throw Error("permute: expected a DK or fB algebra, got " + a.algebra()->descriptor());
    if (static_cast<int>(sigma.size()) != p.n)
        throw Error("permute: permutation of size " + std::to_string(sigma.size()) +
                    " on " + a.algebra()->descriptor());
    std::vector<int> seen(p.n + 1, 0);
    for (int s : sigma) {
        if (s < 1 || s > p.n || seen[s]++) throw Error("permute: not a permutation");
    }
    const auto& alg = a.algebra();
    const int D = a.truncation();
    return relabel(a, alg, [&](const GeneratorId& g) {
        GeneratorId h = g.family == Family::T ? GeneratorId::t(sigma[g.i - 1], sigma[g.j - 1])
                                              : GeneratorId::X(sigma[g.i - 1], sigma[g.j - 1]);
        return Series::gen(alg, D, h);
    });
}

Series transposition01(const Series& a) {
    const int n = require_ft(a, "transposition01").n;
    const auto& alg = a.algebra();
    const int D = a.truncation();
    return relabel(a, alg, [&](const GeneratorId& g) {
        if (g.i != 1) return Series::gen(alg, D, g);
        std::vector<std::pair<GeneratorId, int>> parts;
        if (g.j != 1) {
            for (int k = 1; k <= n; ++k) parts.emplace_back(GeneratorId::t(k, g.j), -1);
        } else {
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) parts.emplace_back(GeneratorId::t(k, l), 1);
        }
        return sum_of(alg, D, parts);
    });
}

namespace {

Series rotate_once_transposition(const Series& a) {
    const int n = pid_of(a).n;
    std::vector<int> c(n);
    for (int i = 1; i <= n; ++i) c[i - 1] = i == 1 ? n : i - 1;
    return permute(transposition01(a), c);
}

Series rotate_once_spherical(const Series& a) {
    const int n = pid_of(a).n;
    const int D = a.truncation();
    auto sph = presentation(PresentationId::sph(n));
    auto z = [&](int i) { return (i + n) % (n + 1); };
    Series lifted = relabel(a, sph, [&](const GeneratorId& g) {
        return Series::gen(sph, D, GeneratorId::t(z(g.i), z(g.j)));
    });
    // Survivors of the spherical elimination are exactly the t_ij with i, j >= 1.
    const auto& target = a.algebra();
    return relabel(lifted, target, [&](const GeneratorId& g) {
        if (g.i == 0) return Series(target, D);  // eliminated, never in a normal form
        return Series::gen(target, D, g);
    });
}

}  // namespace

Series cyclic_rotate(const Series& a, int k, CyclicStrategy s) {
    const int n = require_ft(a, "cyclic_rotate").n;
    k %= n + 1;
    if (k < 0) k += n + 1;
    Series r = a;
    for (int i = 0; i < k; ++i)
        r = s == CyclicStrategy::Transposition ? rotate_once_transposition(r)
                                               : rotate_once_spherical(r);
    return r;
}

Series operad_insert(const Series& x, int k, const Series& y) {
    const auto& px = pid_of(x);
    const auto& py = pid_of(y);
    if (px.kind != Kind::DK || py.kind != Kind::DK || px.framed != py.framed ||
        px.central_quotient || py.central_quotient)
        throw Error("operad_insert: expected ft or t algebras of the same kind");
    if (x.truncation() != y.truncation()) throw Error("operad_insert: truncation mismatch");
    const int m = px.n, n = py.n;
    if (k < 1 || k > m)
        throw Error("operad_insert: position " + std::to_string(k) + " out of range 1.." +
                    std::to_string(m));
    PresentationId pr = px;
    pr.n = m + n - 1;
    auto target = presentation(pr);
    const int D = x.truncation();

    Series outer = relabel(x, target, [&](const GeneratorId& g) {
        const int i = g.i, j = g.j;
        std::vector<std::pair<GeneratorId, int>> parts;
        if (i == j) {
            if (k < i) parts.emplace_back(GeneratorId::t(i + n - 1, i + n - 1), 1);
            else if (k > i) parts.emplace_back(g, 1);
            else {
                for (int p = i; p < i + n; ++p)
                    for (int q = i; q < i + n; ++q) parts.emplace_back(GeneratorId::t(p, q), 1);
            }
        } else if (k < i) {
            parts.emplace_back(GeneratorId::t(i + n - 1, j + n - 1), 1);
        } else if (k == i) {
            for (int p = i; p < i + n; ++p) parts.emplace_back(GeneratorId::t(p, j + n - 1), 1);
        } else if (k < j) {
            parts.emplace_back(GeneratorId::t(i, j + n - 1), 1);
        } else if (k == j) {
            for (int q = j; q < j + n; ++q) parts.emplace_back(GeneratorId::t(i, q), 1);
        } else {
            parts.emplace_back(g, 1);
        }
        return sum_of(target, D, parts);
    });
    Series inner = relabel(y, target, [&](const GeneratorId& g) {
        return Series::gen(target, D, GeneratorId::t(g.i + k - 1, g.j + k - 1));
    });
    return outer * inner;
}

Series to_sphere_braid(const Series& a) {
    const auto& p = pid_of(a);
    if (p.kind != Kind::DK || p.central_quotient)
        throw Error("to_sphere_braid: expected ft(n), got " + a.algebra()->descriptor());
    auto target = presentation(PresentationId::fB(p.n + 1));
    const int D = a.truncation();
    return relabel(a, target, [&](const GeneratorId& g) {
        return Series::gen(target, D, GeneratorId::X(g.i, g.j));
    });
}

}  // namespace artifact
