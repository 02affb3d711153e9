// Independent brute-force oracles used to pin expected values. Everything
// here works on plain int vectors with table-driven GF(4) arithmetic and
// never calls into the bit-sliced implementation paths it checks.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Word = std::vector<int>;

// GF(4) with elements 0,1,2,3 standing for 0,1,w,w^2; w^2 = w + 1.
inline constexpr int ADD4[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
inline constexpr int MUL4[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
};
inline constexpr int TR4[4] = {0, 0, 1, 1};  // x + x^2

inline Word add(const Word& a, const Word& b) {
    Word r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = ADD4[a[i]][b[i]];
    return r;
}

inline Word scale(const Word& a, int s) {
    Word r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = MUL4[s][a[i]];
    return r;
}

inline int weight(const Word& a) {
    int w = 0;
    for (int x : a) w += x != 0;
    return w;
}

inline int gc_weight(const Word& a) {
    int w = 0;
    for (int x : a) w += TR4[x];
    return w;
}

// All q^k combinations of the given rows (rows need not be independent;
// duplicates then repeat, so pass independent rows when counting).
inline std::vector<Word> span_words(const std::vector<Word>& rows, int n, int q) {
    std::vector<Word> out;
    std::size_t k = rows.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= std::uint64_t(q);
    for (std::uint64_t m = 0; m < total; ++m) {
        Word w(n, 0);
        std::uint64_t t = m;
        for (std::size_t i = 0; i < k; ++i) {
            int coef = int(t % q);
            t /= q;
            if (coef) w = add(w, scale(rows[i], coef));
        }
        out.push_back(std::move(w));
    }
    return out;
}

inline int min_distance(const std::vector<Word>& words) {
    int best = 1 << 30;
    for (const auto& w : words) {
        int wt = weight(w);
        if (wt > 0 && wt < best) best = wt;
    }
    return best;
}

inline std::vector<Big> hamming_spectrum(const std::vector<Word>& words, int n) {
    std::vector<Big> a(n + 1, 0);
    for (const auto& w : words) a[weight(w)] += 1;
    return a;
}

inline std::vector<Big> gc_spectrum(const std::vector<Word>& words, int n) {
    std::vector<Big> a(n + 1, 0);
    for (const auto& w : words) a[gc_weight(w)] += 1;
    return a;
}

inline std::map<std::array<int, 4>, Big> complete_we(const std::vector<Word>& words,
                                                     int n) {
    std::map<std::array<int, 4>, Big> terms;
    for (const auto& w : words) {
        std::array<int, 4> e{n, 0, 0, 0};
        for (int x : w)
            if (x) {
                --e[0];
                ++e[x];
            }
        terms[e] += 1;
    }
    return terms;
}

inline Word reversed(const Word& a) { return Word(a.rbegin(), a.rend()); }

inline bool set_reversible(const std::vector<Word>& words) {
    std::set<Word> all(words.begin(), words.end());
    for (const auto& w : words)
        if (!all.count(reversed(w))) return false;
    return true;
}

// Defining-sum Krawtchouk with exact binomials.
inline Big binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Big r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Big krawtchouk(int s, int x, int n, int q = 2) {
    Big acc = 0;
    for (int j = 0; j <= s; ++j) {
        Big term = binom(x, j) * binom(n - x, s - j);
        Big pw = 1;
        for (int t = 0; t < s - j; ++t) pw *= (q - 1);
        term *= pw;
        if (j & 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Brute-force group isomorphism: backtracking over generator images with
// order-profile pruning. Intended for |G| <= 24.

struct SmallGroup {
    int n = 0;
    std::vector<int> table;  // row-major
    int mul(int a, int b) const { return table[a * n + b]; }
};

inline int elem_order(const SmallGroup& g, int a) {
    int x = a, ord = 1;
    while (x != 0) {
        x = g.mul(x, a);
        ++ord;
    }
    return ord;
}

// Greedy generating sequence: smallest element outside the generated
// subgroup, repeated until the whole group is covered.
inline std::vector<int> generating_set(const SmallGroup& g) {
    std::vector<int> gens;
    std::vector<bool> in_span(g.n, false);
    in_span[0] = true;
    int covered = 1;
    while (covered < g.n) {
        int pick = -1;
        for (int x = 1; x < g.n; ++x)
            if (!in_span[x]) {
                pick = x;
                break;
            }
        gens.push_back(pick);
        in_span[pick] = true;
        ++covered;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int a = 0; a < g.n; ++a) {
                if (!in_span[a]) continue;
                for (int b = 0; b < g.n; ++b) {
                    if (!in_span[b]) continue;
                    int p = g.mul(a, b);
                    if (!in_span[p]) {
                        in_span[p] = true;
                        ++covered;
                        changed = true;
                    }
                }
            }
        }
    }
    return gens;
}

inline bool extend_iso(const SmallGroup& g, const SmallGroup& h,
                       const std::vector<int>& gens, std::size_t gi,
                       std::vector<int>& img) {
    if (gi == gens.size()) {
        // img fixes generator images; derive the full map by closure and check
        std::vector<int> phi(g.n, -1);
        phi[0] = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t t = 0; t < gens.size(); ++t) {
                for (int a = 0; a < g.n; ++a) {
                    if (phi[a] < 0) continue;
                    int p = g.mul(a, gens[t]);
                    int q = h.mul(phi[a], img[t]);
                    if (phi[p] < 0) {
                        phi[p] = q;
                        changed = true;
                    } else if (phi[p] != q) {
                        return false;
                    }
                }
            }
        }
        std::vector<bool> hit(h.n, false);
        for (int a = 0; a < g.n; ++a) {
            if (phi[a] < 0 || hit[phi[a]]) return false;
            hit[phi[a]] = true;
        }
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < g.n; ++b)
                if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b])) return false;
        return true;
    }
    int want = elem_order(g, gens[gi]);
    for (int y = 1; y < h.n; ++y) {
        if (elem_order(h, y) != want) continue;
        img[gi] = y;
        if (extend_iso(g, h, gens, gi + 1, img)) return true;
    }
    return false;
}

inline bool isomorphic(const SmallGroup& g, const SmallGroup& h) {
    if (g.n != h.n) return false;
    std::multiset<int> og, oh;
    for (int a = 0; a < g.n; ++a) og.insert(elem_order(g, a));
    for (int a = 0; a < h.n; ++a) oh.insert(elem_order(h, a));
    if (og != oh) return false;
    auto gens = generating_set(g);
    std::vector<int> img(gens.size(), -1);
    return extend_iso(g, h, gens, 0, img);
}

}  // namespace oracle
