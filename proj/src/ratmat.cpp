// SPDX-License-Identifier: Apache-2.0
#include "artifact/ratmat.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace artifact {

SparseVec SparseVec::unit(Col c, const Rat& v) {
    SparseVec r;
    if (v != 0) r.e_.emplace_back(c, v);
    return r;
}

SparseVec SparseVec::from_entries(std::vector<Entry> e) {
    std::sort(e.begin(), e.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVec r;
    for (auto& [c, v] : e) {
        v.canonicalize();
        if (!r.e_.empty() && r.e_.back().first == c)
            r.e_.back().second += v;
        else
            r.e_.emplace_back(c, std::move(v));
    }
    std::erase_if(r.e_, [](const Entry& x) { return x.second == 0; });
    return r;
}

Rat SparseVec::at(Col c) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), c,
                               [](const Entry& a, Col k) { return a.first < k; });
    if (it != e_.end() && it->first == c) return it->second;
    return 0;
}

void SparseVec::axpy(const Rat& s, const SparseVec& w) {
    if (s == 0 || w.e_.empty()) return;
    std::vector<Entry> out;
    out.reserve(e_.size() + w.e_.size());
    auto a = e_.begin();
    auto b = w.e_.begin();
    while (a != e_.end() || b != w.e_.end()) {
        if (b == w.e_.end() || (a != e_.end() && a->first < b->first)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == e_.end() || b->first < a->first) {
            out.emplace_back(b->first, s * b->second);
            ++b;
        } else {
            Rat v = a->second + s * b->second;
            if (v != 0) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    e_ = std::move(out);
}

void SparseVec::scale(const Rat& s) {
    if (s == 0) {
        e_.clear();
        return;
    }
    for (auto& x : e_) x.second *= s;
}

SparseVec SparseVec::operator-() const {
    SparseVec r = *this;
    r.scale(-1);
    return r;
}

std::string SparseVec::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [c, v] : e_) {
        if (!first) os << ", ";
        first = false;
        os << c << ":" << v.get_str();
    }
    os << "}";
    return os.str();
}

SparseVec operator+(const SparseVec& a, const SparseVec& b) {
    SparseVec r = a;
    r.axpy(1, b);
    return r;
}

SparseVec operator-(const SparseVec& a, const SparseVec& b) {
    SparseVec r = a;
    r.axpy(-1, b);
    return r;
}

long EchelonBasis::find_pivot(Col c) const {
    auto it = std::lower_bound(pivots.begin(), pivots.end(), c);
    if (it != pivots.end() && *it == c) return static_cast<long>(it - pivots.begin());
    return -1;
}

EchelonBasis echelonize(const std::vector<SparseVec>& input) {
    // Row echelon form by leading-entry elimination, then back substitution.
    std::unordered_map<Col, std::size_t> where;
    std::vector<SparseVec> ref;
    for (const auto& r0 : input) {
        SparseVec r = r0;
        while (!r.empty()) {
            auto it = where.find(r.lead());
            if (it == where.end()) break;
            Rat s = -r.lead_coef();
            r.axpy(s, ref[it->second]);
        }
        if (r.empty()) continue;
        Rat inv = 1 / r.lead_coef();
        r.scale(inv);
        where.emplace(r.lead(), ref.size());
        ref.push_back(std::move(r));
    }

    std::vector<std::size_t> order(ref.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return ref[a].lead() > ref[b].lead(); });

    // Decreasing pivot order: rows below the current one are already reduced,
    // so a single pass per row suffices.
    for (std::size_t k = 0; k < order.size(); ++k) {
        SparseVec& row = ref[order[k]];
        std::vector<std::pair<std::size_t, Rat>> hits;
        for (auto e = std::next(row.begin()); e != row.end(); ++e) {
            auto it = where.find(e->first);
            if (it != where.end()) hits.emplace_back(it->second, e->second);
        }
        for (auto& [j, c] : hits) row.axpy(-c, ref[j]);
    }

    EchelonBasis b;
    b.rows.reserve(ref.size());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        b.pivots.push_back(ref[*it].lead());
        b.rows.push_back(std::move(ref[*it]));
    }
    return b;
}

SparseVec reduce(const SparseVec& v, const EchelonBasis& b) {
    SparseVec r = v;
    for (const auto& [c, x] : v) {
        long i = b.find_pivot(c);
        if (i >= 0) r.axpy(-x, b.rows[static_cast<std::size_t>(i)]);
    }
    return r;
}

AffineSolution solve_affine(const std::vector<SparseVec>& A, const SparseVec& b,
                            Col nunknowns) {
    // Augmented rows; the right-hand side lives in column nunknowns so that
    // unknowns are pivoted first.
    std::map<Col, Rat> rhs;
    for (const auto& [i, v] : b) rhs[i] = v;
    std::vector<SparseVec> aug;
    aug.reserve(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
        SparseVec r = A[i];
        auto it = rhs.find(static_cast<Col>(i));
        if (it != rhs.end()) r.axpy(1, SparseVec::unit(nunknowns, it->second));
        aug.push_back(std::move(r));
    }
    // Right-hand side entries on rows beyond A are equations 0 = b_i.
    bool inconsistent = false;
    for (const auto& [i, v] : rhs)
        if (i >= A.size() && v != 0) inconsistent = true;

    EchelonBasis e = echelonize(aug);
    AffineSolution out;
    std::vector<bool> is_pivot(nunknowns, false);
    for (Col p : e.pivots) {
        if (p == nunknowns) inconsistent = true;
        if (p < nunknowns) is_pivot[p] = true;
    }
    if (!inconsistent) {
        std::vector<SparseVec::Entry> part;
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            Col p = e.pivots[i];
            if (p >= nunknowns) continue;
            Rat v = e.rows[i].at(nunknowns);
            if (v != 0) part.emplace_back(p, v);
        }
        out.particular = SparseVec::from_entries(std::move(part));
    }
    std::vector<SparseVec> ker;
    for (Col f = 0; f < nunknowns; ++f) {
        if (is_pivot[f]) continue;
        std::vector<SparseVec::Entry> k;
        k.emplace_back(f, 1);
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            Col p = e.pivots[i];
            if (p >= nunknowns) continue;
            Rat v = e.rows[i].at(f);
            if (v != 0) k.emplace_back(p, -v);
        }
        ker.push_back(SparseVec::from_entries(std::move(k)));
    }
    out.kernel = echelonize(ker);
    return out;
}

SparseVec apply_rows(const std::vector<SparseVec>& A, const SparseVec& x) {
    std::vector<SparseVec::Entry> out;
    for (std::size_t i = 0; i < A.size(); ++i) {
        Rat s = 0;
        auto a = A[i].begin();
        auto b = x.begin();
        while (a != A[i].end() && b != x.end()) {
            if (a->first < b->first)
                ++a;
            else if (b->first < a->first)
                ++b;
            else {
                s += a->second * b->second;
                ++a;
                ++b;
            }
        }
        if (s != 0) out.emplace_back(static_cast<Col>(i), s);
    }
    return SparseVec::from_entries(std::move(out));
}

}  // namespace artifact
