#pragma once

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "dnacodes/algebra.hpp"
#include "dnacodes/bigint.hpp"

namespace dnacodes {

// Counts A_0..A_n of codewords by Hamming weight.
struct WeightSpectrum {
    int n = 0;
    std::vector<BigInt> a;

    BigInt total() const {
        BigInt t = 0;
        for (const auto& x : a) t += x;
        return t;
    }
    // Smallest positive weight with a nonzero count; 0 if none.
    int min_positive() const {
        for (int i = 1; i <= n; ++i)
            if (a[i] != 0) return i;
        return 0;
    }
    bool operator==(const WeightSpectrum&) const = default;
};

// Counts N_0..N_n of codewords by GC-weight (coordinates in {w, w^2}).
struct GCSpectrum {
    int n = 0;
    std::vector<BigInt> a;
    bool operator==(const GCSpectrum&) const = default;
};

// Sparse complete weight enumerator over GF(4): term (n0,n1,nw,nw2) -> count.
struct CompleteWE {
    int n = 0;
    std::map<std::array<int, 4>, BigInt> terms;

    // Specialization a=b, c=d collapses the symbol counts to GC-weight.
    GCSpectrum gc_specialization() const {
        GCSpectrum s;
        s.n = n;
        s.a.assign(n + 1, 0);
        for (const auto& [e, cnt] : terms) s.a[e[2] + e[3]] += cnt;
        return s;
    }
    bool operator==(const CompleteWE&) const = default;
};

// Exact Krawtchouk table for fixed (n, q): P[s][x] built by the three-term
// recurrence in big integers. When the environment variable
// DNACODES_CACHE_DIR is set, tables persist there as plain text.
class KrawtchoukTable {
  public:
    KrawtchoukTable(int n, int q);
    const BigInt& at(int s, int x) const { return p_[std::size_t(s) * (n_ + 1) + x]; }
    int n() const { return n_; }
    int q() const { return q_; }

    static std::shared_ptr<const KrawtchoukTable> get(int n, int q);

    // Adopts precomputed values (row-major by s); used by the file cache.
    KrawtchoukTable(int n, int q, std::vector<BigInt> values)
        : n_(n), q_(q), p_(std::move(values)) {}

  private:
    int n_, q_;
    std::vector<BigInt> p_;
};

// Single Krawtchouk value P_s(x; n) for q = 2 (cached table underneath).
BigInt krawtchouk(int s, int x, int n);
BigInt krawtchouk_q(int s, int x, int n, int q);

// Spectrum by straight enumeration; throws CapExceeded when q^k > cap.
// `threads` <= 1 runs serially; otherwise the message space is split into
// contiguous index ranges whose integer tallies merge associatively, so the
// result is bit-identical for every thread count.
WeightSpectrum weight_spectrum_enumerated(const F2Code& c, std::uint64_t cap,
                                          int threads = 0);
WeightSpectrum weight_spectrum_enumerated(const F4Code& c, std::uint64_t cap,
                                          int threads = 0);

// Serial reference implementation (no Gray stepping, one generator multiply
// per word); kept for cross-checking the fast path.
WeightSpectrum weight_spectrum_reference(const F2Code& c, std::uint64_t cap);
WeightSpectrum weight_spectrum_reference(const F4Code& c, std::uint64_t cap);

// Enumerates the smaller of C and its dual, transforming when needed.
WeightSpectrum weight_spectrum(const F2Code& c, std::uint64_t cap, int threads = 0);
WeightSpectrum weight_spectrum(const F4Code& c, std::uint64_t cap, int threads = 0);

// MacWilliams transform: spectrum of C from the spectrum of its dual,
// A_s = (1/|C_dual|) * sum_i A'_i P_s(i). Exact; throws InconsistentSpectrum
// if any output count is negative or fractional.
WeightSpectrum macwilliams(const WeightSpectrum& dual_spec, int n, int q);

// Binary code spanned by {Tr(g_i), Tr(w g_i)}; dim C <= dim <= 2 dim C.
F2Code trace_code(const F4Code& c);

// C intersected with GF(2)^n as a binary code; equals ker of the
// coordinate-wise trace restricted to C, so |C| = |Tr(C)| * |C|_F2|.
F2Code subfield_subcode(const F4Code& c);

// Kernel of the parity functional; dimension drops by exactly 0 or 1.
F2Code even_weight_subcode(const F2Code& c);

// GC-weight enumerator via the trace code:
// N_i = (|C| / |Tr C|) * #{words of Tr(C) with weight i}.
GCSpectrum gc_weight_enumerator(const F4Code& c, std::uint64_t cap = (1ull << 28),
                                int threads = 0);

// Count of codewords with GC-weight exactly n/2, computed from the even
// weight subcode E of Tr(C)-dual: N = (|C| / 2^n) * sum_w A_w(E) P_{n/2}(w).
// Only even weights contribute; P_{n/2}(odd; n) vanishes.
BigInt count_gc_half_fast(const F4Code& c, std::uint64_t cap = (1ull << 28));

CompleteWE complete_weight_enumerator(const F4Code& c,
                                      std::uint64_t cap = (1ull << 28));

}  // namespace dnacodes
