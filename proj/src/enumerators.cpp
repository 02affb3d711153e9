#include "dnacodes/enumerators.hpp"

#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>

namespace dnacodes {

// ---------------------------------------------------------------------------
// Krawtchouk tables

KrawtchoukTable::KrawtchoukTable(int n, int q) : n_(n), q_(q) {
    p_.assign(std::size_t(n + 1) * (n + 1), 0);
    auto at = [&](int s, int x) -> BigInt& {
        return p_[std::size_t(s) * (n_ + 1) + x];
    };
    for (int x = 0; x <= n; ++x) at(0, x) = 1;
    if (n >= 1)
        for (int x = 0; x <= n; ++x)
            at(1, x) = BigInt(q - 1) * (n - x) - x;
    // (s+1) P_{s+1}(x) = [(q-1)(n-s) + s - qx] P_s(x) - (q-1)(n-s+1) P_{s-1}(x)
    for (int s = 1; s < n; ++s) {
        for (int x = 0; x <= n; ++x) {
            BigInt t = (BigInt(q - 1) * (n - s) + s - BigInt(q) * x) * at(s, x) -
                       BigInt(q - 1) * (n - s + 1) * at(s - 1, x);
            BigInt rem;
            divide_qr(t, BigInt(s + 1), t, rem);
            if (rem != 0) throw Error("krawtchouk recurrence not integral");
            at(s + 1, x) = t;
        }
    }
}

namespace {

std::filesystem::path cache_file(int n, int q) {
    const char* dir = std::getenv("DNACODES_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::filesystem::path(dir) /
           ("kraw_q" + std::to_string(q) + "_n" + std::to_string(n) + ".txt");
}

std::shared_ptr<const KrawtchoukTable> load_or_build(int n, int q) {
    auto path = cache_file(n, q);
    if (!path.empty()) {
        std::ifstream in(path);
        if (in) {
            // cached file: first line "n q", then (n+1)^2 decimal values
            int fn = -1, fq = -1;
            in >> fn >> fq;
            if (fn == n && fq == q) {
                std::vector<BigInt> vals;
                vals.reserve(std::size_t(n + 1) * (n + 1));
                std::string tok;
                while (in >> tok) vals.emplace_back(tok);
                if (vals.size() == std::size_t(n + 1) * (n + 1))
                    return std::make_shared<const KrawtchoukTable>(n, q,
                                                                   std::move(vals));
            }
        }
    }
    auto table = std::make_shared<KrawtchoukTable>(n, q);
    if (!path.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        std::ofstream out(path);
        if (out) {
            out << n << ' ' << q << '\n';
            for (int s = 0; s <= n; ++s) {
                for (int x = 0; x <= n; ++x) out << table->at(s, x) << ' ';
                out << '\n';
            }
        }
    }
    return table;
}

}  // namespace

std::shared_ptr<const KrawtchoukTable> KrawtchoukTable::get(int n, int q) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const KrawtchoukTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto t = load_or_build(n, q);
    cache[key] = t;
    return t;
}

BigInt krawtchouk(int s, int x, int n) { return KrawtchoukTable::get(n, 2)->at(s, x); }
BigInt krawtchouk_q(int s, int x, int n, int q) {
    return KrawtchoukTable::get(n, q)->at(s, x);
}

// ---------------------------------------------------------------------------
// Spectra

namespace {

template <class V>
WeightSpectrum spectrum_enum_impl(const LinearCode<V>& c, std::uint64_t cap,
                                  int threads) {
    std::uint64_t total = codeword_count_checked(c, cap);
    if (threads <= 0) threads = omp_get_max_threads();
    if (total < (1u << 14)) threads = 1;

    WeightSpectrum sp;
    sp.n = c.n;
    sp.a.assign(c.n + 1, 0);

    int nchunks = threads;
    std::vector<std::vector<std::uint64_t>> tallies(
        nchunks, std::vector<std::uint64_t>(c.n + 1, 0));

#pragma omp parallel for num_threads(threads) schedule(static, 1)
    for (int chunk = 0; chunk < nchunks; ++chunk) {
        std::uint64_t begin = total / nchunks * chunk;
        std::uint64_t end =
            (chunk == nchunks - 1) ? total : total / nchunks * (chunk + 1);
        auto& tally = tallies[chunk];
        for_each_codeword(c, begin, end, [&](std::uint64_t, const V& w) {
            ++tally[w.weight()];
            return true;
        });
    }
    for (const auto& tally : tallies)
        for (int i = 0; i <= c.n; ++i) sp.a[i] += tally[i];
    return sp;
}

template <class V>
WeightSpectrum spectrum_reference_impl(const LinearCode<V>& c, std::uint64_t cap) {
    std::uint64_t total = codeword_count_checked(c, cap);
    WeightSpectrum sp;
    sp.n = c.n;
    sp.a.assign(c.n + 1, 0);
    constexpr int q = V::q;
    for (std::uint64_t m = 0; m < total; ++m) {
        V w = V::zeros(c.n);
        std::uint64_t t = m;
        for (int i = 0; i < c.k(); ++i) {
            w.add_scaled(c.gens[i], std::uint8_t(t % q));
            t /= q;
        }
        sp.a[w.weight()] += 1;
    }
    return sp;
}

template <class V>
WeightSpectrum spectrum_best_route(const LinearCode<V>& c, std::uint64_t cap,
                                   int threads) {
    double direct = log2_words(V::q, c.k());
    if (direct <= 62 && (std::uint64_t(1) << std::uint64_t(direct)) <= cap)
        return spectrum_enum_impl(c, cap, threads);
    LinearCode<V> d = dual_code(c);
    double viadual = log2_words(V::q, d.k());
    if (viadual <= 62 && (std::uint64_t(1) << std::uint64_t(viadual)) <= cap)
        return macwilliams(spectrum_enum_impl(d, cap, threads), c.n, V::q);
    throw CapExceeded(std::min(direct, viadual), cap);
}

}  // namespace

WeightSpectrum weight_spectrum_enumerated(const F2Code& c, std::uint64_t cap,
                                          int threads) {
    return spectrum_enum_impl(c, cap, threads);
}
WeightSpectrum weight_spectrum_enumerated(const F4Code& c, std::uint64_t cap,
                                          int threads) {
    return spectrum_enum_impl(c, cap, threads);
}
WeightSpectrum weight_spectrum_reference(const F2Code& c, std::uint64_t cap) {
    return spectrum_reference_impl(c, cap);
}
WeightSpectrum weight_spectrum_reference(const F4Code& c, std::uint64_t cap) {
    return spectrum_reference_impl(c, cap);
}
WeightSpectrum weight_spectrum(const F2Code& c, std::uint64_t cap, int threads) {
    return spectrum_best_route(c, cap, threads);
}
WeightSpectrum weight_spectrum(const F4Code& c, std::uint64_t cap, int threads) {
    return spectrum_best_route(c, cap, threads);
}

WeightSpectrum macwilliams(const WeightSpectrum& dual_spec, int n, int q) {
    BigInt dual_size = dual_spec.total();
    if (dual_size <= 0) throw InconsistentSpectrum("empty dual spectrum");
    auto table = KrawtchoukTable::get(n, q);
    WeightSpectrum out;
    out.n = n;
    out.a.assign(n + 1, 0);
    for (int s = 0; s <= n; ++s) {
        BigInt acc = 0;
        for (int i = 0; i <= n; ++i) {
            if (dual_spec.a[i] == 0) continue;
            acc += dual_spec.a[i] * table->at(s, i);
        }
        BigInt rem;
        divide_qr(acc, dual_size, acc, rem);
        if (rem != 0 || acc < 0)
            throw InconsistentSpectrum("MacWilliams output A_" + std::to_string(s) +
                                       " is not a nonnegative integer");
        out.a[s] = acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Trace and subfield machinery

F2Code trace_code(const F4Code& c) {
    std::vector<F2Vec> rows;
    rows.reserve(2 * c.k());
    for (const auto& g : c.gens) {
        rows.push_back(g.trace_vec());              // Tr(g)
        rows.push_back(g.scaled(F4_W).trace_vec()); // Tr(w g)
    }
    return make_code<F2Vec>(c.n, std::move(rows));
}

namespace {

// Left null space of the 2k x n binary matrix R, via RREF with combination
// tracking. Widths up to 2k <= 256 bits are handled with plain word arrays.
std::vector<std::vector<std::uint64_t>> left_null_space(
    std::vector<F2Vec> rows, int n) {
    int m = int(rows.size());
    int cw = (m + 63) / 64;
    std::vector<std::vector<std::uint64_t>> combo(m,
                                                  std::vector<std::uint64_t>(cw, 0));
    for (int i = 0; i < m; ++i) combo[i][i >> 6] = std::uint64_t(1) << (i & 63);

    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int p = -1;
        for (int i = r; i < m; ++i)
            if (rows[i].get(c)) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        std::swap(combo[r], combo[p]);
        for (int i = 0; i < m; ++i) {
            if (i != r && rows[i].get(c)) {
                rows[i] ^= rows[r];
                for (int wd = 0; wd < cw; ++wd) combo[i][wd] ^= combo[r][wd];
            }
        }
        ++r;
    }
    std::vector<std::vector<std::uint64_t>> kernel;
    for (int i = r; i < m; ++i) kernel.push_back(combo[i]);
    return kernel;
}

}  // namespace

F2Code subfield_subcode(const F4Code& c) {
    const int k = c.k();
    // Basis of C over F2: g_1..g_k, w g_1..w g_k. A combination is binary
    // iff its hi plane vanishes; solve that linear condition.
    std::vector<F4Vec> basis;
    basis.reserve(2 * k);
    for (const auto& g : c.gens) basis.push_back(g);
    for (const auto& g : c.gens) basis.push_back(g.scaled(F4_W));

    std::vector<F2Vec> hi_rows;
    hi_rows.reserve(2 * k);
    for (const auto& b : basis) hi_rows.push_back(b.trace_vec());

    auto kernel = left_null_space(std::move(hi_rows), c.n);
    std::vector<F2Vec> rows;
    rows.reserve(kernel.size());
    for (const auto& combo : kernel) {
        F4Vec word = F4Vec::zeros(c.n);
        for (int i = 0; i < 2 * k; ++i)
            if ((combo[i >> 6] >> (i & 63)) & 1) word ^= basis[i];
        rows.push_back(word.lo_plane());  // hi plane is zero by construction
    }
    return make_code<F2Vec>(c.n, std::move(rows));
}

F2Code even_weight_subcode(const F2Code& c) {
    std::vector<F2Vec> evens, odds;
    for (const auto& g : c.gens)
        (g.even_weight() ? evens : odds).push_back(g);
    if (!odds.empty()) {
        for (std::size_t i = 1; i < odds.size(); ++i)
            evens.push_back(odds[i] ^ odds[0]);
    }
    return make_code<F2Vec>(c.n, std::move(evens));
}

GCSpectrum gc_weight_enumerator(const F4Code& c, std::uint64_t cap, int threads) {
    F2Code tr = trace_code(c);
    WeightSpectrum sp = weight_spectrum(tr, cap, threads);
    // |C| / |Tr(C)| = 2^(2k - k1), an integer since k1 <= 2k.
    BigInt mult = big_pow(2, unsigned(2 * c.k() - tr.k()));
    GCSpectrum out;
    out.n = c.n;
    out.a.assign(c.n + 1, 0);
    for (int i = 0; i <= c.n; ++i) out.a[i] = mult * sp.a[i];
    return out;
}

BigInt count_gc_half_fast(const F4Code& c, std::uint64_t cap) {
    if (c.n % 2 != 0) throw Error("count_gc_half_fast: length must be even");
    F2Code tr = trace_code(c);
    F2Code dual = dual_code(tr);
    F2Code even = even_weight_subcode(dual);
    WeightSpectrum sp = weight_spectrum_enumerated(even, cap);

    auto table = KrawtchoukTable::get(c.n, 2);
    BigInt acc = 0;
    for (int w = 0; w <= c.n; w += 2)
        if (sp.a[w] != 0) acc += sp.a[w] * table->at(c.n / 2, w);

    BigInt num = big_pow(4, unsigned(c.k())) * acc;
    BigInt den = big_pow(2, unsigned(c.n));
    BigInt rem;
    divide_qr(num, den, num, rem);
    if (rem != 0 || num < 0)
        throw InconsistentSpectrum("GC-half count is not a nonnegative integer");
    return num;
}

CompleteWE complete_weight_enumerator(const F4Code& c, std::uint64_t cap) {
    CompleteWE out;
    out.n = c.n;
    for_each_codeword(c, cap, [&](std::uint64_t, const F4Vec& w) {
        int n1 = 0, nw = 0, nw2 = 0;
        for (int wd = 0; wd < kWords; ++wd) {
            n1 += std::popcount(w.lo[wd] & ~w.hi[wd]);
            nw += std::popcount(~w.lo[wd] & w.hi[wd]);
            nw2 += std::popcount(w.lo[wd] & w.hi[wd]);
        }
        out.terms[{c.n - n1 - nw - nw2, n1, nw, nw2}] += 1;
        return true;
    });
    return out;
}

}  // namespace dnacodes
