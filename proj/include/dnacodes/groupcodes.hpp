#pragma once

#include <vector>

#include "dnacodes/algebra.hpp"
#include "dnacodes/groups.hpp"

namespace dnacodes {

// Coefficient vector over a group: v = sum_i coeffs[i] * g_{perm[i]},
// aligned to the given ordering.
template <class V>
struct GroupRingElement {
    const FiniteGroup* group = nullptr;
    Ordering ordering;
    V coeffs;
};

// Precomputed index table for building sigma matrices fast: entry (i,j) of
// sigma(v) is coeffs[pos[i*n+j]] where pos maps the group element
// perm[i]^-1 * perm[j] back to its ordering position. Cells are also
// grouped by coefficient position so a weight-d vector fills its matrix in
// O(d*n) bit writes.
struct SigmaIndex {
    int n = 0;
    std::vector<std::int16_t> pos;
    std::vector<std::vector<std::int32_t>> cells_by_coeff;  // packed i*n+j

    static SigmaIndex build(const FiniteGroup& grp, const Ordering& o);

    template <class V>
    void fill_rows(const V& coeffs, std::vector<V>& rows) const {
        rows.assign(n, V::zeros(n));
        for (int t = 0; t < n; ++t) {
            std::uint8_t val = coeffs.get(t);
            if (!val) continue;
            for (std::int32_t cell : cells_by_coeff[t])
                rows[cell / n].set(cell % n, val);
        }
    }
};

// The n x n matrix with entry (i,j) = coefficient at perm[i]^-1 * perm[j].
// Every row and column is a permutation of the coefficient vector.
template <class V>
std::vector<V> sigma_rows(const FiniteGroup& grp, const Ordering& o,
                          const V& coeffs) {
    SigmaIndex idx = SigmaIndex::build(grp, o);
    std::vector<V> rows;
    idx.fill_rows(coeffs, rows);
    return rows;
}

template <class V>
std::vector<V> sigma_rows(const GroupRingElement<V>& v) {
    return sigma_rows(*v.group, v.ordering, v.coeffs);
}

// Row space of sigma(v). Row i equals the coordinate image of perm[i]^-1 * v,
// so this is the image of the left ideal generated by v.
template <class V>
LinearCode<V> group_code(const FiniteGroup& grp, const Ordering& o,
                         const V& coeffs) {
    return make_code<V>(grp.n, sigma_rows(grp, o, coeffs));
}

template <class V>
LinearCode<V> group_code(const GroupRingElement<V>& v) {
    return group_code(*v.group, v.ordering, v.coeffs);
}

// Composite element: an outer group of order n whose coefficient at each
// element is itself a sigma matrix of an inner group element. Inner data is
// indexed by raw outer element id (not by listing position).
template <class V>
struct CompositeElement {
    const FiniteGroup* outer = nullptr;
    Ordering outer_ordering;
    std::vector<FiniteGroup> inners;       // size n, all of equal order k
    std::vector<Ordering> inner_orderings; // size n
    std::vector<V> blocks;                 // size n, coeffs over the inner groups
};

// Row space of the nk x nk block matrix whose (i,j) block is sigma of the
// block attached to perm[i]^-1 * perm[j]. Reversible whenever the outer and
// all inner orderings are reversible.
template <class V>
LinearCode<V> composite_group_code(const CompositeElement<V>& cv);

// True iff reverse(r) is a codeword for every generator row r; reversal is
// linear, so this extends to all codewords.
template <class V>
bool is_reversible(const LinearCode<V>& c) {
    for (const auto& g : c.gens)
        if (!in_span(c, g.reversed())) return false;
    return true;
}

// Exhaustive cross-validation variant.
template <class V>
bool is_reversible_exhaustive(const LinearCode<V>& c, std::uint64_t cap) {
    bool ok = true;
    for_each_codeword(c, cap, [&](std::uint64_t, const V& w) {
        if (!in_span(c, w.reversed())) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

// Coordinate layout for a quasi-cyclic closure check: coordinate i of the
// code moves to position colperm[i], after which the word splits into l
// consecutive blocks of length m.
struct QCProfile {
    int m = 0;
    int l = 0;
    std::vector<int> colperm;

    static QCProfile identity(int m, int l);
};

// True iff the permuted code is closed under the simultaneous right cyclic
// shift of each length-m block (checked on generator rows; closure is
// linear).
template <class V>
bool qc_check(const LinearCode<V>& c, const QCProfile& profile);

extern template LinearCode<F2Vec> composite_group_code(const CompositeElement<F2Vec>&);
extern template LinearCode<F4Vec> composite_group_code(const CompositeElement<F4Vec>&);
extern template bool qc_check(const LinearCode<F2Vec>&, const QCProfile&);
extern template bool qc_check(const LinearCode<F4Vec>&, const QCProfile&);

}  // namespace dnacodes
