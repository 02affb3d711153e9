#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dnacodes/bigint.hpp"
#include "dnacodes/errors.hpp"
#include "dnacodes/vec.hpp"

namespace dnacodes {

// A linear code kept in reduced row echelon form: leftmost pivots, pivots
// scaled to one, pivot columns cleared. RREF is unique per row space, so
// `gens` doubles as a canonical form for deduplication.
template <class V>
struct LinearCode {
    int n = 0;
    std::vector<V> gens;
    std::vector<int> pivots;

    int k() const { return int(gens.size()); }
    bool operator==(const LinearCode&) const = default;
};

using F2Code = LinearCode<F2Vec>;
using F4Code = LinearCode<F4Vec>;

// In-place reduction; returns the pivot columns. Rows are truncated to the
// nonzero ones (= rank).
template <class V>
std::vector<int> rref_in_place(std::vector<V>& rows, int n) {
    std::vector<int> pivots;
    int r = 0;
    int m = int(rows.size());
    for (int c = 0; c < n && r < m; ++c) {
        int p = -1;
        for (int i = r; i < m; ++i) {
            if (rows[i].get(c)) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        if constexpr (V::q > 2) {
            std::uint8_t s = rows[r].get(c);
            if (s != 1) rows[r] = rows[r].scaled(f4_inv(s));
        }
        for (int i = 0; i < m; ++i) {
            if (i == r) continue;
            std::uint8_t f = rows[i].get(c);
            if (f) rows[i].add_scaled(rows[r], f);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

template <class V>
LinearCode<V> make_code(int n, std::vector<V> rows) {
    LinearCode<V> c;
    c.n = n;
    c.pivots = rref_in_place(rows, n);
    c.gens = std::move(rows);
    return c;
}

inline F4Code make_code_f4(int n, std::vector<F4Vec> rows) {
    return make_code<F4Vec>(n, std::move(rows));
}

template <class V>
std::pair<std::vector<V>, int> rref_rank(std::vector<V> rows, int n) {
    auto piv = rref_in_place(rows, n);
    int rank = int(piv.size());
    return {std::move(rows), rank};
}

// Dual with respect to the plain Euclidean form sum_i x_i y_i (no
// conjugation over GF(4)). With G row-reduced to [I | A] up to column
// order, the dual is spanned by [A^T | I] re-expanded to the original
// column positions; characteristic 2 removes the sign.
template <class V>
LinearCode<V> dual_code(const LinearCode<V>& c) {
    std::vector<bool> is_pivot(c.n, false);
    for (int p : c.pivots) is_pivot[p] = true;
    std::vector<V> rows;
    rows.reserve(c.n - c.k());
    for (int f = 0; f < c.n; ++f) {
        if (is_pivot[f]) continue;
        V h = V::zeros(c.n);
        h.set(f, 1);
        for (int i = 0; i < c.k(); ++i) {
            std::uint8_t val = c.gens[i].get(f);
            if (val) h.set(c.pivots[i], val);
        }
        rows.push_back(h);
    }
    return make_code<V>(c.n, std::move(rows));
}

// Reduces `word` against the generators; zero remainder <=> membership.
template <class V>
bool in_span(const LinearCode<V>& c, V word) {
    for (int i = 0; i < c.k(); ++i) {
        std::uint8_t f = word.get(c.pivots[i]);
        if (f) word.add_scaled(c.gens[i], f);
    }
    return word.is_zero();
}

template <class V>
bool contains_all_ones(const LinearCode<V>& c) {
    return in_span(c, V::ones(c.n));
}

inline double log2_words(int q, int k) { return (q == 2 ? 1.0 : 2.0) * k; }

// q^k as a 64-bit count; throws CapExceeded against `cap` first.
template <class V>
std::uint64_t codeword_count_checked(const LinearCode<V>& c, std::uint64_t cap) {
    double l2 = log2_words(V::q, c.k());
    if (l2 > 62 || (std::uint64_t(1) << std::uint64_t(l2)) > cap)
        throw CapExceeded(l2, cap);
    return std::uint64_t(1) << std::uint64_t(l2);
}

// Visits codeword indices [begin, end) of the q-ary reflected Gray walk over
// message space: consecutive words differ by one scaled generator, so each
// step costs O(1) word operations. fn(index, word) -> bool; returning false
// stops the walk. Returns false iff stopped early. Index 0 is the zero word.
template <class V, class Fn>
bool for_each_codeword(const LinearCode<V>& c, std::uint64_t begin,
                       std::uint64_t end, Fn&& fn) {
    constexpr int q = V::q;
    const int k = c.k();
    if (begin >= end) return true;
    if (k == 0) {
        if (begin == 0 && !fn(std::uint64_t(0), V::zeros(c.n))) return false;
        return true;
    }
    // Base-q odometer digits of `begin` and the induced Gray digits
    // g[i] = b[i] - b[i+1] (mod q); one odometer step changes one Gray digit.
    std::array<std::uint8_t, 64> b{}, g{};
    {
        std::uint64_t t = begin;
        for (int i = 0; i < k; ++i) {
            b[i] = std::uint8_t(t % q);
            t /= q;
        }
    }
    V w = V::zeros(c.n);
    for (int i = 0; i < k; ++i) {
        std::uint8_t next = (i + 1 < k) ? b[i + 1] : 0;
        g[i] = std::uint8_t((q + b[i] - next) % q);
        if (g[i]) w.add_scaled(c.gens[i], g[i]);
    }
    for (std::uint64_t idx = begin;; ++idx) {
        if (!fn(idx, w)) return false;
        if (idx + 1 >= end) break;
        int t = 0;
        while (b[t] == q - 1) {
            b[t] = 0;
            ++t;
        }
        ++b[t];
        std::uint8_t old = g[t];
        g[t] = std::uint8_t((old + 1) % q);
        // delta = E[old] + E[old+1] in the field; E is the identity encoding.
        w.add_scaled(c.gens[t], f4_add(old, g[t]) & (q - 1));
    }
    return true;
}

template <class V, class Fn>
bool for_each_codeword(const LinearCode<V>& c, std::uint64_t cap, Fn&& fn) {
    std::uint64_t total = codeword_count_checked(c, cap);
    return for_each_codeword(c, 0, total, std::forward<Fn>(fn));
}

template <class V>
std::vector<V> enumerate_codewords(const LinearCode<V>& c, std::uint64_t cap) {
    std::vector<V> out;
    out.reserve(codeword_count_checked(c, cap));
    for_each_codeword(c, cap, [&](std::uint64_t, const V& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

// True iff some nonzero codeword has weight strictly below `bound`.
// Early-exits on the first witness.
template <class V>
bool has_word_below(const LinearCode<V>& c, int bound, std::uint64_t cap) {
    bool found = false;
    for_each_codeword(c, cap, [&](std::uint64_t idx, const V& w) {
        if (idx != 0 && w.weight() < bound) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

// Minimum Hamming weight over nonzero codewords. Enumerates the smaller of
// C and C-dual (via the MacWilliams transform of the dual spectrum).
int min_distance(const F2Code& c, std::uint64_t cap = (1ull << 28));
int min_distance(const F4Code& c, std::uint64_t cap = (1ull << 28));

template <class V>
std::string code_to_string(const LinearCode<V>& c) {
    std::string s;
    for (const auto& g : c.gens) {
        s += g.to_string();
        s += '\n';
    }
    return s;
}

template <class V>
BigInt code_size(const LinearCode<V>& c) {
    return big_pow(V::q, unsigned(c.k()));
}

// Random code with full rank k: [I_k | random] reduced.
F4Code random_f4_code(std::mt19937_64& rng, int n, int k);
F2Code random_f2_code(std::mt19937_64& rng, int n, int k);

}  // namespace dnacodes
