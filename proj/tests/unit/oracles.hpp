// Independent reference computations used by the unit tests. Nothing here
// calls into the echelon code or the presentation tables.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

// Rank of an integer matrix modulo a large prime (dense elimination).
inline long rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p = 1000000007) {
    if (a.empty()) return 0;
    const std::size_t cols = a[0].size();
    auto pw = [&](std::int64_t b, std::int64_t e) {
        std::int64_t r = 1;
        b %= p;
        if (b < 0) b += p;
        for (; e; e >>= 1, b = b * b % p)
            if (e & 1) r = r * b % p;
        return r;
    };
    for (auto& row : a)
        for (auto& v : row) v = ((v % p) + p) % p;
    long rank = 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<long>(a.size()); ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[static_cast<std::size_t>(rank)]);
        auto& r = a[static_cast<std::size_t>(rank)];
        const std::int64_t inv = pw(r[c], p - 2);
        for (auto& v : r) v = v * inv % p;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == static_cast<std::size_t>(rank) || a[i][c] == 0) continue;
            const std::int64_t f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * r[j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// Dense Gauss-Jordan over Q. Returns the rank; m is left in reduced form.
inline long rank_q(std::vector<std::vector<mpq_class>>& m) {
    long rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<long>(m.size()); ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
        auto& r = m[static_cast<std::size_t>(rank)];
        const mpq_class inv = 1 / r[c];
        for (auto& v : r) v *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == static_cast<std::size_t>(rank) || m[i][c] == 0) continue;
            const mpq_class f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * r[j];
        }
        ++rank;
    }
    return rank;
}

// Truncated power series product.
inline std::vector<long> series_mul(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> c(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}
inline std::vector<long> geometric(long k, int D) {
    std::vector<long> g(static_cast<std::size_t>(D) + 1, 0);
    long v = 1;
    for (int d = 0; d <= D; ++d, v *= k) g[static_cast<std::size_t>(d)] = v;
    return g;
}
// Hilbert series of U(t_n) = prod_{k<n} 1/(1 - k t); framed adds (1 - t)^{-n}.
inline std::vector<long> hilbert_dk(int n, bool framed, int D) {
    std::vector<long> h(static_cast<std::size_t>(D) + 1, 0);
    h[0] = 1;
    for (int k = 1; k < n; ++k) h = series_mul(h, geometric(k, D));
    if (framed)
        for (int k = 0; k < n; ++k) h = series_mul(h, geometric(1, D));
    return h;
}

// Free Lie dimension by Moebius inversion.
inline long necklace(int g, int d) {
    auto mu = [](int n) {
        int r = 1;
        for (int p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                r = -r;
            }
        return n > 1 ? -r : r;
    };
    long s = 0;
    for (int e = 1; e <= d; ++e)
        if (d % e == 0) {
            long pw = 1;
            for (int k = 0; k < e; ++k) pw *= g;
            s += mu(d / e) * pw;
        }
    return s / d;
}

}  // namespace oracle
