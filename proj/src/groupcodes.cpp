#include "dnacodes/groupcodes.hpp"

#include <numeric>

namespace dnacodes {

SigmaIndex SigmaIndex::build(const FiniteGroup& grp, const Ordering& o) {
    SigmaIndex idx;
    idx.n = grp.n;
    std::vector<int> pos_of_elem(grp.n);
    for (int i = 0; i < grp.n; ++i) pos_of_elem[o.perm[i]] = i;
    idx.pos.resize(std::size_t(grp.n) * grp.n);
    idx.cells_by_coeff.assign(grp.n, {});
    for (int i = 0; i < grp.n; ++i) {
        int gi_inv = grp.inv(o.perm[i]);
        for (int j = 0; j < grp.n; ++j) {
            int t = pos_of_elem[grp.mul(gi_inv, o.perm[j])];
            idx.pos[std::size_t(i) * grp.n + j] = std::int16_t(t);
            idx.cells_by_coeff[t].push_back(i * grp.n + j);
        }
    }
    return idx;
}

QCProfile QCProfile::identity(int m, int l) {
    QCProfile p;
    p.m = m;
    p.l = l;
    p.colperm.resize(std::size_t(m) * l);
    std::iota(p.colperm.begin(), p.colperm.end(), 0);
    return p;
}

template <class V>
LinearCode<V> composite_group_code(const CompositeElement<V>& cv) {
    const FiniteGroup& outer = *cv.outer;
    const int n = outer.n;
    if (int(cv.inners.size()) != n || int(cv.blocks.size()) != n ||
        int(cv.inner_orderings.size()) != n)
        throw InnerOrderMismatch("composite element needs one block per outer element");
    const int k = cv.inners[0].n;
    for (const auto& t : cv.inners)
        if (t.n != k) throw InnerOrderMismatch("inner groups must share one order");
    for (int t = 0; t < n; ++t)
        if (cv.blocks[t].n != k)
            throw InnerOrderMismatch("block length differs from inner order");

    // sigma rows of each block, computed once per outer element
    std::vector<std::vector<V>> block_rows(n);
    for (int t = 0; t < n; ++t)
        block_rows[t] = sigma_rows(cv.inners[t], cv.inner_orderings[t], cv.blocks[t]);

    const int nk = n * k;
    std::vector<V> rows(nk, V::zeros(nk));
    for (int i = 0; i < n; ++i) {
        int gi_inv = outer.inv(cv.outer_ordering.perm[i]);
        for (int j = 0; j < n; ++j) {
            int t = outer.mul(gi_inv, cv.outer_ordering.perm[j]);
            const auto& br = block_rows[t];
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) {
                    std::uint8_t val = br[r].get(c);
                    if (val) rows[i * k + r].set(j * k + c, val);
                }
        }
    }
    return make_code<V>(nk, std::move(rows));
}

template LinearCode<F2Vec> composite_group_code(const CompositeElement<F2Vec>&);
template LinearCode<F4Vec> composite_group_code(const CompositeElement<F4Vec>&);

template <class V>
bool qc_check(const LinearCode<V>& c, const QCProfile& profile) {
    if (profile.m * profile.l != c.n || int(profile.colperm.size()) != c.n)
        throw ShapeMismatch("qc profile does not match code length");
    std::vector<V> permuted;
    permuted.reserve(c.k());
    for (const auto& g : c.gens) {
        V p = V::zeros(c.n);
        for (int i = 0; i < c.n; ++i) {
            std::uint8_t v = g.get(i);
            if (v) p.set(profile.colperm[i], v);
        }
        permuted.push_back(p);
    }
    LinearCode<V> pc = make_code<V>(c.n, permuted);
    for (const auto& row : pc.gens) {
        V shifted = V::zeros(c.n);
        for (int b = 0; b < profile.l; ++b)
            for (int p = 0; p < profile.m; ++p) {
                std::uint8_t v = row.get(b * profile.m + p);
                if (v) shifted.set(b * profile.m + (p + 1) % profile.m, v);
            }
        if (!in_span(pc, shifted)) return false;
    }
    return true;
}

template bool qc_check(const LinearCode<F2Vec>&, const QCProfile&);
template bool qc_check(const LinearCode<F4Vec>&, const QCProfile&);

}  // namespace dnacodes
