#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "dnacodes/groupcodes.hpp"
#include "oracles.hpp"

using namespace dnacodes;

namespace {

F4Vec random_coeffs(std::mt19937_64& rng, int n) {
    F4Vec v = F4Vec::zeros(n);
    for (int i = 0; i < n; ++i) v.set(i, std::uint8_t(rng() & 3));
    return v;
}

std::multiset<int> row_multiset(const F4Vec& v) {
    std::multiset<int> m;
    for (int i = 0; i < v.n; ++i) m.insert(v.get(i));
    return m;
}

F2Code f2_code_from_strings(const std::vector<std::string>& rows) {
    std::vector<F2Vec> v;
    for (const auto& r : rows) {
        F2Vec x = F2Vec::zeros(int(r.size()));
        for (std::size_t i = 0; i < r.size(); ++i) x.set(int(i), r[i] == '1');
        v.push_back(x);
    }
    return make_code<F2Vec>(int(rows[0].size()), std::move(v));
}

}  // namespace

TEST_CASE("sigma matrix") {
    SUBCASE("identity coefficient gives the identity matrix") {
        auto g = dihedral_group(8);
        F4Vec e = F4Vec::zeros(8);
        e.set(0, 1);
        auto rows = sigma_rows(g, natural_ordering(g), e);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                CHECK(rows[i].get(j) == (i == j ? 1 : 0));
    }
    SUBCASE("cyclic(3) natural ordering gives the circulant") {
        auto g = cyclic_group(3);
        F4Vec v = F4Vec::from_string("1wW");
        auto rows = sigma_rows(g, natural_ordering(g), v);
        CHECK(rows[0].to_string() == "1wW");
        CHECK(rows[1].to_string() == "W1w");
        CHECK(rows[2].to_string() == "wW1");
    }
    SUBCASE("rows and columns permute the coefficients") {
        std::mt19937_64 rng(17);
        int trials = 0;
        for (int order = 2; order <= 16 && trials < 500; order += 2)
            for (const auto& e : catalog_entries(order))
                for (int t = 0; t < 8 && trials < 500; ++t, ++trials) {
                    const FiniteGroup& g = catalog_group(e.order, e.index);
                    F4Vec v = random_coeffs(rng, g.n);
                    auto o = reversible_ordering(g, involutions(g)[0]);
                    auto rows = sigma_rows(g, o, v);
                    auto want = row_multiset(v);
                    for (const auto& r : rows) CHECK(row_multiset(r) == want);
                    for (int c = 0; c < g.n; ++c) {
                        F4Vec col = F4Vec::zeros(g.n);
                        for (int i = 0; i < g.n; ++i) col.set(i, rows[i].get(c));
                        CHECK(row_multiset(col) == want);
                    }
                }
    }
}

TEST_CASE("group codes") {
    SUBCASE("identity coefficient spans the full space") {
        auto g = cyclic_group(6);
        F4Vec e = F4Vec::zeros(6);
        e.set(0, 1);
        CHECK(group_code(g, natural_ordering(g), e).k() == 6);
    }
    SUBCASE("sum of all elements spans the all-one line") {
        auto g = dihedral_group(6);
        F4Vec v = F4Vec::ones(6);
        auto c = group_code(g, natural_ordering(g), v);
        CHECK(c.k() == 1);
        CHECK(c.gens[0] == F4Vec::ones(6));
    }
    SUBCASE("row space equals the span of left translates (oracle)") {
        std::mt19937_64 rng(41);
        for (int order = 2; order <= 8; order += 2)
            for (const auto& e : catalog_entries(order)) {
                const FiniteGroup& g = catalog_group(e.order, e.index);
                for (int t = 0; t < 10; ++t) {
                    F4Vec v = random_coeffs(rng, g.n);
                    auto o = natural_ordering(g);
                    auto code = group_code(g, o, v);
                    // translates Omega(h v): coordinate j of h*v is coeff at h^-1 g_j
                    std::vector<oracle::Word> translates;
                    for (int h = 0; h < g.n; ++h) {
                        oracle::Word w(g.n);
                        for (int j = 0; j < g.n; ++j)
                            w[j] = v.get(g.mul(g.inv(h), j));
                        translates.push_back(std::move(w));
                    }
                    auto span = oracle::span_words(translates, g.n, 4);
                    std::set<oracle::Word> span_set(span.begin(), span.end());
                    std::set<oracle::Word> code_set;
                    for (const auto& wvec :
                         enumerate_codewords(code, std::uint64_t(1) << 20)) {
                        oracle::Word w(g.n);
                        for (int j = 0; j < g.n; ++j) w[j] = wvec.get(j);
                        code_set.insert(std::move(w));
                    }
                    CHECK(code_set == span_set);
                }
            }
    }
    SUBCASE("the [6,4,2] cyclic code is the C6-code of 1 + a + a^2") {
        auto g = cyclic_group(6);
        F2Vec v = F2Vec::zeros(6);
        v.set(0, 1);
        v.set(1, 1);
        v.set(2, 1);
        auto c = group_code(g, natural_ordering(g), v);
        CHECK(c.k() == 4);
        CHECK(code_to_string(c) == "100011\n010010\n001001\n000111\n");
    }
}

TEST_CASE("reversibility") {
    SUBCASE("binary palindromic code") {
        CHECK(is_reversible(f2_code_from_strings({"11"})));
    }
    SUBCASE("span{(1,0)} is not reversible") {
        CHECK_FALSE(is_reversible(f2_code_from_strings({"10"})));
    }
    SUBCASE("group codes under reversible orderings, catalog <= 16") {
        std::mt19937_64 rng(59);
        for (int order = 2; order <= 16; order += 2)
            for (const auto& e : catalog_entries(order)) {
                const FiniteGroup& g = catalog_group(e.order, e.index);
                for (int inv : involutions(g))
                    for (int t = 0; t < 5; ++t) {
                        F4Vec v = random_coeffs(rng, g.n);
                        auto c = group_code(g, reversible_ordering(g, inv), v);
                        CHECK(is_reversible(c));
                    }
            }
    }
    SUBCASE("generator check agrees with the exhaustive one") {
        std::mt19937_64 rng(61);
        for (int t = 0; t < 50; ++t) {
            int n = 2 + int(rng() % 7);
            F4Code c = random_f4_code(rng, n, 1 + int(rng() % std::min(n, 4)));
            CHECK(is_reversible(c) ==
                  is_reversible_exhaustive(c, std::uint64_t(1) << 16));
        }
    }
}

TEST_CASE("composite group codes") {
    SUBCASE("k = 1 reduces to the plain group code") {
        std::mt19937_64 rng(67);
        auto outer = dihedral_group(6);
        auto triv = cyclic_group(1);
        for (int t = 0; t < 20; ++t) {
            F4Vec v = random_coeffs(rng, 6);
            CompositeElement<F4Vec> ce;
            ce.outer = &outer;
            ce.outer_ordering = reversible_ordering(outer, involutions(outer)[0]);
            for (int i = 0; i < 6; ++i) {
                ce.inners.push_back(triv);
                ce.inner_orderings.push_back(natural_ordering(triv));
                F4Vec block = F4Vec::zeros(1);
                block.set(0, v.get(i));
                ce.blocks.push_back(block);
            }
            // blocks indexed by raw element: align the plain code the same way
            F4Vec aligned = F4Vec::zeros(6);
            for (int i = 0; i < 6; ++i)
                aligned.set(i, v.get(ce.outer_ordering.perm[i]));
            CHECK(composite_group_code(ce) ==
                  group_code(outer, ce.outer_ordering, aligned));
        }
    }
    SUBCASE("all blocks zero give the zero code") {
        auto outer = cyclic_group(4);
        auto inner = cyclic_group(2);
        CompositeElement<F4Vec> ce;
        ce.outer = &outer;
        ce.outer_ordering = reversible_ordering(outer, 2);
        for (int i = 0; i < 4; ++i) {
            ce.inners.push_back(inner);
            ce.inner_orderings.push_back(reversible_ordering(inner, 1));
            ce.blocks.push_back(F4Vec::zeros(2));
        }
        auto c = composite_group_code(ce);
        CHECK(c.n == 8);
        CHECK(c.k() == 0);
    }
    SUBCASE("reversible for random blocks, outer <= 8, inner <= 4") {
        std::mt19937_64 rng(71);
        int trials = 0;
        for (int outer_order = 2; outer_order <= 8; outer_order += 2)
            for (const auto& oe : catalog_entries(outer_order))
                for (int inner_order = 2; inner_order <= 4; inner_order += 2)
                    for (const auto& ie : catalog_entries(inner_order)) {
                        const FiniteGroup& outer =
                            catalog_group(oe.order, oe.index);
                        const FiniteGroup& inner =
                            catalog_group(ie.order, ie.index);
                        for (int t = 0; t < 4; ++t, ++trials) {
                            CompositeElement<F4Vec> ce;
                            ce.outer = &outer;
                            ce.outer_ordering = reversible_ordering(
                                outer, involutions(outer)[0]);
                            for (int i = 0; i < outer.n; ++i) {
                                ce.inners.push_back(inner);
                                // vary the inner involution per position
                                auto invs = involutions(inner);
                                ce.inner_orderings.push_back(reversible_ordering(
                                    inner, invs[rng() % invs.size()]));
                                ce.blocks.push_back(random_coeffs(rng, inner.n));
                            }
                            auto c = composite_group_code(ce);
                            CHECK(c.n == outer.n * inner.n);
                            CHECK(is_reversible(c));
                        }
                    }
    CHECK(trials >= 100);
    }
    SUBCASE("mismatched inner order rejected") {
        auto outer = cyclic_group(2);
        CompositeElement<F4Vec> ce;
        ce.outer = &outer;
        ce.outer_ordering = reversible_ordering(outer, 1);
        ce.inners = {cyclic_group(2), cyclic_group(4)};
        ce.inner_orderings = {reversible_ordering(ce.inners[0], 1),
                              reversible_ordering(ce.inners[1], 2)};
        ce.blocks = {F4Vec::zeros(2), F4Vec::zeros(4)};
        CHECK_THROWS_AS(composite_group_code(ce), InnerOrderMismatch);
    }
}

TEST_CASE("quasi-cyclic checks") {
    SUBCASE("a cyclic code is quasi-cyclic of index 1") {
        auto g = cyclic_group(6);
        F2Vec v = F2Vec::zeros(6);
        v.set(0, 1);
        v.set(1, 1);
        v.set(2, 1);
        auto c = group_code(g, natural_ordering(g), v);
        // natural ordering of a cyclic group: shift closure with m = n
        // under the coordinate rotation induced by multiplication
        auto o = qc_ordering(g, 1);
        auto cq = group_code(g, o, v);
        CHECK(qc_check(cq, QCProfile::identity(6, 1)));
        (void)c;
    }
    SUBCASE("the [6,4,2] code under (1,3,5,2,4,6) is 2-quasi-cyclic") {
        auto c = f2_code_from_strings({"111000", "011100", "001110", "000111"});
        QCProfile p;
        p.m = 2;
        p.l = 3;
        // column i moves to position perm(i): (1..6) -> (1,3,5,2,4,6)
        p.colperm = {0, 2, 4, 1, 3, 5};
        CHECK(qc_check(c, p));
        // the permuted generators match the displayed 2-quasi-cyclic matrix
        std::vector<F2Vec> permuted;
        for (const auto& g : c.gens) {
            F2Vec row = F2Vec::zeros(6);
            for (int i = 0; i < 6; ++i)
                if (g.get(i)) row.set(p.colperm[i], 1);
            permuted.push_back(row);
        }
        auto pc = make_code<F2Vec>(6, permuted);
        auto direct = f2_code_from_strings(
            {"100101", "001100", "000011", "010101"});
        CHECK(pc == direct);
    }
    SUBCASE("group code under qc ordering is quasi-cyclic with that m") {
        std::mt19937_64 rng(73);
        for (int order = 2; order <= 16; order += 2)
            for (const auto& e : catalog_entries(order)) {
                const FiniteGroup& g = catalog_group(e.order, e.index);
                for (int t = 0; t < 3; ++t) {
                    int x = 1 + int(rng() % (g.n - 1));
                    auto o = qc_ordering(g, x);
                    F4Vec v = random_coeffs(rng, g.n);
                    auto c = group_code(g, o, v);
                    CHECK(qc_check(c, QCProfile::identity(o.m, g.n / o.m)));
                }
            }
    }
    SUBCASE("shape mismatch rejected") {
        auto c = f2_code_from_strings({"1100"});
        CHECK_THROWS_AS(qc_check(c, QCProfile::identity(3, 1)), ShapeMismatch);
    }
}
