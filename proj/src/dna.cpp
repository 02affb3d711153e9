#include "dnacodes/dna.hpp"

#include <algorithm>

#include "dnacodes/enumerators.hpp"
#include "dnacodes/groupcodes.hpp"

namespace dnacodes {

namespace {

constexpr char kBase[4] = {'A', 'T', 'C', 'G'};

std::uint8_t base_to_f4(char c, std::size_t offset) {
    switch (c) {
        case 'A': return F4_0;
        case 'T': return F4_1;
        case 'C': return F4_W;
        case 'G': return F4_W2;
        default: throw BadSymbol(c, offset);
    }
}

char base_complement(char c, std::size_t offset = 0) {
    switch (c) {
        case 'A': return 'T';
        case 'T': return 'A';
        case 'C': return 'G';
        case 'G': return 'C';
        default: throw BadSymbol(c, offset);
    }
}

}  // namespace

std::string encode_dna(const F4Vec& v) {
    std::string s(v.n, 'A');
    for (int i = 0; i < v.n; ++i) s[i] = kBase[v.get(i)];
    return s;
}

F4Vec decode_dna(std::string_view s) {
    if (s.size() > std::size_t(kMaxLen)) throw Error("DNA string too long");
    F4Vec v = F4Vec::zeros(int(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) v.set(int(i), base_to_f4(s[i], i));
    return v;
}

std::string dna_reverse(std::string_view s) {
    return std::string(s.rbegin(), s.rend());
}

std::string dna_complement(std::string_view s) {
    std::string out(s);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = base_complement(out[i], i);
    return out;
}

std::string dna_reverse_complement(std::string_view s) {
    return dna_complement(dna_reverse(s));
}

int dna_gc_weight(std::string_view s) {
    return int(std::count_if(s.begin(), s.end(),
                             [](char c) { return c == 'C' || c == 'G'; }));
}

bool is_conflict_free(std::string_view s, int l) {
    int n = int(s.size());
    if (l < 1 || l > n / 2) throw BadRange("conflict-free block size must be in [1, n/2]");
    for (int j = 0; j + 2 * l <= n; ++j)
        if (s.substr(j, l) == s.substr(j + l, l)) return false;
    return true;
}

bool is_conflict_free_upto(std::string_view s, int l) {
    int n = int(s.size());
    if (l < 1 || l > n / 2) throw BadRange("conflict-free block size must be in [1, n/2]");
    for (int size = l; size >= 1; --size)
        for (int j = 0; j + 2 * size <= n; ++j)
            if (s.substr(j, size) == s.substr(j + size, size)) return false;
    return true;
}

bool is_ss_free(std::string_view s) {
    int n = int(s.size());
    if (n < 3) return true;
    for (int i = 0; i + 3 <= n; ++i) {
        char rc0 = base_complement(s[i + 2], i + 2);
        char rc1 = base_complement(s[i + 1], i + 1);
        char rc2 = base_complement(s[i], i);
        // scan from i itself: overlapping occurrences count
        for (int j = i; j + 3 <= n; ++j)
            if (s[j] == rc0 && s[j + 1] == rc1 && s[j + 2] == rc2) return false;
    }
    return true;
}

std::vector<F4Vec> extract_gc_half(const F4Code& c, std::uint64_t cap) {
    if (c.n % 2 != 0) throw Error("extract_gc_half: length must be even");
    const int k = c.k();
    F2Code tr = trace_code(c);
    const int k1 = tr.k();

    // Two-phase scan g_1..g_k, w g_1..w g_k keeping vectors whose traces
    // stay independent; their traces form a basis of Tr(C) and the kept
    // vectors section it back into C.
    std::vector<F4Vec> lift;
    std::vector<F2Vec> lift_tr;
    std::vector<F2Vec> reduced;  // running row echelon of the kept traces
    auto try_keep = [&](const F4Vec& cand) {
        if (int(lift.size()) == k1) return;
        F2Vec t = cand.trace_vec();
        F2Vec rem = t;
        for (const auto& r : reduced) {
            int pivot = -1;
            for (int i = 0; i < c.n; ++i)
                if (r.get(i)) {
                    pivot = i;
                    break;
                }
            if (pivot >= 0 && rem.get(pivot)) rem ^= r;
        }
        if (rem.is_zero()) return;
        lift.push_back(cand);
        lift_tr.push_back(t);
        reduced.push_back(rem);
    };
    for (int i = 0; i < k && int(lift.size()) < k1; ++i) try_keep(c.gens[i]);
    for (int i = 0; i < k && int(lift.size()) < k1; ++i)
        try_keep(c.gens[i].scaled(F4_W));

    F2Code kernel = subfield_subcode(c);
    std::vector<F2Vec> kernel_words = enumerate_codewords(kernel, cap);

    if (k1 >= 62 || (std::uint64_t(1) << k1) > cap)
        throw CapExceeded(double(k1), cap);

    std::vector<F4Vec> out;
    // Walk the trace span and its lift in lock-step Gray order.
    F2Vec t = F2Vec::zeros(c.n);
    F4Vec y = F4Vec::zeros(c.n);
    std::uint64_t total = std::uint64_t(1) << k1;
    const int half = c.n / 2;
    for (std::uint64_t idx = 0;; ++idx) {
        if (t.weight() == half) {
            if (out.size() + kernel_words.size() > cap)
                throw CapExceeded(double(k1), cap);
            for (const auto& kw : kernel_words) {
                F4Vec word = y;
                word ^= F4Vec::from_binary(kw);
                out.push_back(word);
            }
        }
        if (idx + 1 >= total) break;
        int bit = std::countr_zero(idx + 1);
        t ^= lift_tr[bit];
        y ^= lift[bit];
    }
    return out;
}

std::uint64_t count_ss_free(const std::vector<F4Vec>& words) {
    std::uint64_t n = 0;
    for (const auto& w : words)
        if (is_ss_free(encode_dna(w))) ++n;
    return n;
}

namespace {

int hamming(const F4Vec& a, const F4Vec& b) {
    int d = 0;
    for (int wd = 0; wd < kWords; ++wd)
        d += std::popcount((a.lo[wd] ^ b.lo[wd]) | (a.hi[wd] ^ b.hi[wd]));
    return d;
}

}  // namespace

ConstraintReport constraint_audit(const std::vector<F4Vec>& words, int d,
                                  AuditMode mode, const F4Code* code,
                                  std::uint64_t pair_cap, std::uint64_t cap) {
    ConstraintReport rep;
    rep.d = d;
    rep.mode = mode;
    rep.n = words.empty() ? (code ? code->n : 0) : words[0].n;

    for (const auto& w : words) {
        if (2 * w.gc_weight() == rep.n) ++rep.gc_balanced_count;
        if (w.reversed() == w) ++rep.r_fixed_points;
        if (w.reverse_complemented() == w) ++rep.rc_fixed_points;
    }

    if (mode == AuditMode::LinearShortcut) {
        if (!code) throw MissingCode("linear-shortcut audit needs the code");
        bool rev = is_reversible(*code);
        bool ones = contains_all_ones(*code);
        int dmin = code->k() ? min_distance(*code, cap) : code->n;
        rep.hd_min = dmin;
        rep.hd_ok = dmin >= d;
        rep.r_ok = rev && rep.hd_ok;
        rep.rc_ok = rev && ones && rep.hd_ok;
        rep.notes = rev ? (ones ? "reversible, all-one vector present"
                               : "reversible, all-one vector absent")
                        : "not reversible";
        return rep;
    }

    std::uint64_t m = words.size();
    if (m * m > pair_cap)
        throw TooManyWords("explicit audit over " + std::to_string(m) + " words");

    int hd = rep.n + 1, r_strict = rep.n + 1, rc_strict = rep.n + 1;
    int r_excl = rep.n + 1, rc_excl = rep.n + 1;
    for (std::size_t i = 0; i < words.size(); ++i) {
        F4Vec rev = words[i].reversed();
        F4Vec rc = rev.complemented();
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (i != j) hd = std::min(hd, hamming(words[i], words[j]));
            int dr = hamming(rev, words[j]);
            int drc = hamming(rc, words[j]);
            r_strict = std::min(r_strict, dr);
            rc_strict = std::min(rc_strict, drc);
            if (dr > 0) r_excl = std::min(r_excl, dr);
            if (drc > 0) rc_excl = std::min(rc_excl, drc);
        }
    }
    rep.hd_min = hd;
    rep.r_min_strict = r_strict;
    rep.rc_min_strict = rc_strict;
    rep.r_min_excl = r_excl;
    rep.rc_min_excl = rc_excl;
    rep.hd_ok = hd >= d;
    rep.r_ok = r_strict >= d;
    rep.rc_ok = rc_strict >= d;
    if (r_strict == 0 || rc_strict == 0)
        rep.notes =
            "set contains words coinciding with a reverse(-complement); "
            "distance-0 pairs counted per the strict definitions";
    return rep;
}

}  // namespace dnacodes
