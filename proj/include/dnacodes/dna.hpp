#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dnacodes/algebra.hpp"
#include "dnacodes/bigint.hpp"

namespace dnacodes {

// Bijection between GF(4) and the DNA alphabet: 0 <-> A, 1 <-> T,
// w <-> C, w^2 <-> G. Complementation A<->T, C<->G is addition of the
// all-one vector on the field side.
std::string encode_dna(const F4Vec& v);
F4Vec decode_dna(std::string_view s);

std::string dna_reverse(std::string_view s);
std::string dna_complement(std::string_view s);
std::string dna_reverse_complement(std::string_view s);
int dna_gc_weight(std::string_view s);

// No position j with s[j..j+l) == s[j+l..j+2l): classifies repeats of block
// size exactly l. "ACTGACTGTGAC" is 3 conflict-free (no repeated triple) but
// not 4 conflict-free (ACTG ACTG). Requires 1 <= l <= n/2.
bool is_conflict_free(std::string_view s, int l);

// Cumulative variant sweeping every block size 1..l, the form the
// determination algorithm runs at l = n/2; monotone in l by construction.
bool is_conflict_free_upto(std::string_view s, int l);

// Free from stem-3 secondary structures: no length-3 window whose reverse
// complement occurs at the same or a later start position. Strings shorter
// than 3 are vacuously free.
bool is_ss_free(std::string_view s);

// All codewords of C with GC-weight exactly n/2, produced as lifts of the
// weight-n/2 trace words plus every subfield-subcode shift. The output size
// is #{w in Tr(C) : wt(w) = n/2} * |C restricted to F2|.
std::vector<F4Vec> extract_gc_half(const F4Code& c,
                                   std::uint64_t cap = (1ull << 28));

// Exact count of ss-free strings among the words.
std::uint64_t count_ss_free(const std::vector<F4Vec>& words);

enum class AuditMode { Explicit, LinearShortcut };

struct ConstraintReport {
    int n = 0;
    int d = 0;
    AuditMode mode = AuditMode::Explicit;

    bool hd_ok = false, r_ok = false, rc_ok = false;
    // Observed minima in explicit mode (-1 when not computed). The *_strict
    // minima range over every ordered pair including x = y; the *_excl
    // variants skip coincident pairs (y equal to the transformed x), which
    // is the reading under which reversible linear codes satisfy R/RC.
    int hd_min = -1;
    int r_min_strict = -1, rc_min_strict = -1;
    int r_min_excl = -1, rc_min_excl = -1;

    std::uint64_t gc_balanced_count = 0;
    std::uint64_t r_fixed_points = 0;   // words equal to their own reverse
    std::uint64_t rc_fixed_points = 0;  // words equal to their own reverse complement
    std::string notes;
};

// Explicit mode checks the quantified definitions pairwise over `words`
// (O(|words|^2 * n); throws TooManyWords beyond `pair_cap`). Shortcut mode
// requires `code` and reports r_ok from reversibility and rc_ok from
// reversibility plus the all-one vector, each at distance d = min distance.
ConstraintReport constraint_audit(const std::vector<F4Vec>& words, int d,
                                  AuditMode mode, const F4Code* code = nullptr,
                                  std::uint64_t pair_cap = (1ull << 26),
                                  std::uint64_t cap = (1ull << 28));

}  // namespace dnacodes
