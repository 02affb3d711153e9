#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dnacodes/errors.hpp"

namespace dnacodes {

// A finite group as a validated Cayley table. Element 0 is the identity.
struct FiniteGroup {
    int n = 0;
    std::vector<std::int16_t> table;    // row-major: table[a*n + b] = a*b
    std::vector<std::int16_t> inverses;
    std::string name;
    std::vector<std::string> labels;

    int mul(int a, int b) const { return table[std::size_t(a) * n + b]; }
    int inv(int a) const { return inverses[a]; }
    int order_of(int a) const;

    // Validates the Latin-square property, identity behaviour, two-sided
    // inverses and full associativity; throws Error on any defect.
    static FiniteGroup from_table(int n, std::vector<std::int16_t> table,
                                  std::string name,
                                  std::vector<std::string> labels = {});
};

FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int order);   // order = 2m, m >= 1
FiniteGroup dicyclic_group(int order);   // order = 4m; Q8, Q16, ... for m power of 2
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
// C_a x| C_b with the generator of C_b acting by x -> x^t; t^b = 1 (mod a).
FiniteGroup semidirect_cyclic(int a, int b, int t, const std::string& name);
FiniteGroup alternating4();
FiniteGroup symmetric4();
FiniteGroup special_linear_2_3();

// Catalog of all groups of even order <= 24, indexed to follow the
// GAP/Magma small groups library numbering.
struct CatalogEntry {
    int order;
    int index;  // 1-based, GAP numbering
    const char* name;
};

int catalog_order_max();
std::vector<CatalogEntry> catalog_entries(int order);  // OddOrderUnsupported / UnknownGroup
const FiniteGroup& catalog_group(int order, int index);

// Parses a group spec string: cyclic:N, dihedral:N, dicyclic:N,
// catalog:N:I, and 'x'-joined direct products of those.
FiniteGroup build_group(const std::string& spec);

// All x != e with x*x = e.
std::vector<int> involutions(const FiniteGroup& g);

// One representative per right coset of <g> for an involution g, chosen as
// the smallest unused element index; size is n/2.
std::vector<int> coset_reps(const FiniteGroup& grp, int g);

struct Ordering {
    enum class Kind { Natural, Reversible, QuasiCyclic };
    std::vector<int> perm;  // perm[i] = element listed at position i
    Kind kind = Kind::Natural;
    int m = 0;  // cyclic length (QuasiCyclic only)
    int g = -1; // the involution / shift element the listing is built from
};

Ordering natural_ordering(const FiniteGroup& grp);

// Listing g*g_1, ..., g*g_l, g_l, ..., g_1 for an involution g and coset
// representatives g_1..g_l. Satisfies the mirror pairing
// perm[i] = g * perm[n-1-i], which makes every code built on it reversible.
Ordering reversible_ordering(const FiniteGroup& grp, int g,
                             const std::vector<int>& reps);
Ordering reversible_ordering(const FiniteGroup& grp, int g);

// Listing g*g_1, g^2*g_1, ..., g^m*g_1, g*g_2, ... for g of order m: l = n/m
// blocks of length m, each mapped to its own cyclic shift by left
// multiplication with g.
Ordering qc_ordering(const FiniteGroup& grp, int g);

}  // namespace dnacodes
