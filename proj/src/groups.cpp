#include "dnacodes/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace dnacodes {

int FiniteGroup::order_of(int a) const {
    int x = a, ord = 1;
    while (x != 0) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

FiniteGroup FiniteGroup::from_table(int n, std::vector<std::int16_t> table,
                                    std::string name,
                                    std::vector<std::string> labels) {
    if (n <= 0 || table.size() != std::size_t(n) * n)
        throw Error("group table has wrong shape");
    FiniteGroup g;
    g.n = n;
    g.table = std::move(table);
    g.name = std::move(name);
    g.labels = std::move(labels);

    auto at = [&](int a, int b) { return g.table[std::size_t(a) * n + b]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (at(a, b) < 0 || at(a, b) >= n)
                throw Error(g.name + ": entry out of range");
    // identity at index 0
    for (int a = 0; a < n; ++a)
        if (at(0, a) != a || at(a, 0) != a)
            throw Error(g.name + ": element 0 is not an identity");
    // Latin square
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (int b = 0; b < n; ++b) {
            if (row[at(a, b)] || col[at(b, a)])
                throw Error(g.name + ": table is not a Latin square");
            row[at(a, b)] = col[at(b, a)] = true;
        }
    }
    // two-sided inverses
    g.inverses.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (at(a, b) == 0) {
                if (at(b, a) != 0) throw Error(g.name + ": one-sided inverse");
                g.inverses[a] = std::int16_t(b);
                break;
            }
        }
        if (g.inverses[a] < 0) throw Error(g.name + ": missing inverse");
    }
    // associativity
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (at(at(a, b), c) != at(a, at(b, c)))
                    throw Error(g.name + ": not associative");
    return g;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw Error("cyclic group order must be positive");
    std::vector<std::int16_t> t(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[std::size_t(a) * n + b] = std::int16_t((a + b) % n);
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) labels[a] = a == 0 ? "e" : "a^" + std::to_string(a);
    return FiniteGroup::from_table(n, std::move(t), "C" + std::to_string(n),
                                   std::move(labels));
}

// Elements 0..m-1 are rotations r^i, m..2m-1 are reflections s r^i.
FiniteGroup dihedral_group(int order) {
    if (order < 2 || order % 2) throw Error("dihedral group order must be even");
    int m = order / 2;
    auto idx = [&](int rot, int ref) { return ref ? m + rot : rot; };
    std::vector<std::int16_t> t(std::size_t(order) * order);
    for (int a = 0; a < order; ++a) {
        int ar = a % m, af = a / m;
        for (int b = 0; b < order; ++b) {
            int br = b % m, bf = b / m;
            // (s^af r^ar)(s^bf r^br) = s^(af+bf) r^(±ar+br)
            int rot = bf ? (m - ar + br) % m : (ar + br) % m;
            t[std::size_t(a) * order + b] = std::int16_t(idx(rot, af ^ bf));
        }
    }
    return FiniteGroup::from_table(order, std::move(t), "D" + std::to_string(order));
}

// <a, b | a^(2m) = e, b^2 = a^m, b a b^-1 = a^-1>; elements a^i b^j.
FiniteGroup dicyclic_group(int order) {
    if (order < 4 || order % 4) throw Error("dicyclic group order must be 4m");
    int m2 = order / 2;  // order of a
    auto idx = [&](int i, int j) { return j * m2 + i; };
    std::vector<std::int16_t> t(std::size_t(order) * order);
    for (int i = 0; i < m2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int p = 0; p < m2; ++p)
                for (int q = 0; q < 2; ++q) {
                    // (a^i b^j)(a^p b^q): b a^p = a^-p b
                    int i2 = j ? (i - p % m2 + m2) % m2 : (i + p) % m2;
                    int jq = j + q;
                    if (jq >= 2) {
                        i2 = (i2 + m2 / 2) % m2;  // b^2 = a^m
                        jq -= 2;
                    }
                    t[std::size_t(idx(i, j)) * order + idx(p, q)] =
                        std::int16_t(idx(i2, jq));
                }
    return FiniteGroup::from_table(order, std::move(t), "Dic" + std::to_string(order / 4));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.n * b.n;
    std::vector<std::int16_t> t(std::size_t(n) * n);
    auto idx = [&](int x, int y) { return x * b.n + y; };
    for (int x1 = 0; x1 < a.n; ++x1)
        for (int y1 = 0; y1 < b.n; ++y1)
            for (int x2 = 0; x2 < a.n; ++x2)
                for (int y2 = 0; y2 < b.n; ++y2)
                    t[std::size_t(idx(x1, y1)) * n + idx(x2, y2)] =
                        std::int16_t(idx(a.mul(x1, x2), b.mul(y1, y2)));
    return FiniteGroup::from_table(n, std::move(t), a.name + " x " + b.name);
}

FiniteGroup semidirect_cyclic(int a, int b, int tpow, const std::string& name) {
    // (i, j)(p, q) = (i + t^j p mod a, j + q mod b)
    std::vector<int> tj(b);
    tj[0] = 1;
    for (int j = 1; j < b; ++j) tj[j] = (tj[j - 1] * tpow) % a;
    if ((tj[b - 1] * tpow) % a != 1)
        throw Error(name + ": action order does not divide |C_b|");
    int n = a * b;
    auto idx = [&](int i, int j) { return j * a + i; };
    std::vector<std::int16_t> t(std::size_t(n) * n);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            for (int p = 0; p < a; ++p)
                for (int q = 0; q < b; ++q)
                    t[std::size_t(idx(i, j)) * n + idx(p, q)] =
                        std::int16_t(idx((i + tj[j] * p) % a, (j + q) % b));
    return FiniteGroup::from_table(n, std::move(t), name);
}

namespace {

// Cayley table from permutation generators, elements indexed in BFS
// discovery order starting at the identity.
FiniteGroup from_permutations(int degree, std::vector<std::vector<int>> gens,
                              const std::string& name, int expected_order) {
    using Perm = std::vector<int>;
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::map<Perm, int> index;
    std::vector<Perm> elems;
    index[id] = 0;
    elems.push_back(id);
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            Perm next(degree);
            for (int i = 0; i < degree; ++i) next[i] = g[elems[head][i]];
            if (index.emplace(next, int(elems.size())).second) elems.push_back(next);
        }
    }
    int n = int(elems.size());
    if (expected_order && n != expected_order)
        throw Error(name + ": generated order " + std::to_string(n));
    std::vector<std::int16_t> t(std::size_t(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Perm prod(degree);
            for (int i = 0; i < degree; ++i) prod[i] = elems[x][elems[y][i]];
            t[std::size_t(x) * n + y] = std::int16_t(index.at(prod));
        }
    return FiniteGroup::from_table(n, std::move(t), name);
}

// Elements (i, j, k) in Z4 x Z2 x Z2 under
// (i,j,k)(p,q,r) = (i+p, j+q+k*p, k+r): <a,b,c | a^4=b^2=c^2=e,
// ab=ba, cb=bc, cac = ab>. Seven involutions, centre C2 x C2.
FiniteGroup group_16_3() {
    int n = 16;
    auto idx = [](int i, int j, int k) { return i | (j << 2) | (k << 3); };
    std::vector<std::int16_t> t(std::size_t(n) * n);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int p = 0; p < 4; ++p)
                    for (int q = 0; q < 2; ++q)
                        for (int r = 0; r < 2; ++r)
                            t[std::size_t(idx(i, j, k)) * n + idx(p, q, r)] =
                                std::int16_t(idx((i + p) % 4, (j + q + k * p) % 2,
                                                 (k + r) % 2));
    return FiniteGroup::from_table(n, std::move(t), "(C4 x C2) : C2");
}

// Central product D8 o C4 (the 1-qubit Pauli group): elements i^a X^b Z^c
// with Z X = i^2 X Z, so (a,b,c)(p,q,r) = (a+p+2cq, b+q, c+r). Centre C4.
FiniteGroup group_16_13() {
    int n = 16;
    auto idx = [](int a, int b, int c) { return a | (b << 2) | (c << 3); };
    std::vector<std::int16_t> t(std::size_t(n) * n);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int p = 0; p < 4; ++p)
                    for (int q = 0; q < 2; ++q)
                        for (int r = 0; r < 2; ++r)
                            t[std::size_t(idx(a, b, c)) * n + idx(p, q, r)] =
                                std::int16_t(idx((a + p + 2 * c * q) % 4, (b + q) % 2,
                                                 (c + r) % 2));
    return FiniteGroup::from_table(n, std::move(t), "D8 o C4");
}

// C3 x| D8 with the rotation acting by inversion and the reflection acting
// trivially; the Sylow 2-subgroup is D8 and no element has order 12.
FiniteGroup group_24_8() {
    return from_permutations(
        8,
        {{0, 2, 3, 1, 4, 5, 6, 7},           // a = (1 2 3) on {1,2,3}
         {0, 1, 3, 2, 5, 6, 7, 4},           // r = (2 3)(4 5 6 7)
         {0, 1, 2, 3, 4, 7, 6, 5}},          // s = (5 7)
        "(C6 x C2) : C2", 24);
}

}  // namespace

FiniteGroup alternating4() {
    return from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4", 12);
}

FiniteGroup symmetric4() {
    return from_permutations(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, "S4", 24);
}

FiniteGroup special_linear_2_3() {
    // SL(2,3) acting on the 8 nonzero vectors of F3^2.
    auto vec_index = [](int x, int y) { return (x * 3 + y) - 1; };  // skip (0,0)
    std::vector<std::array<int, 4>> mats = {{0, 2, 1, 0}, {1, 1, 0, 1}};  // det 1
    std::vector<std::vector<int>> gens;
    for (const auto& m : mats) {
        std::vector<int> p(8);
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) {
                if (x == 0 && y == 0) continue;
                int nx = (m[0] * x + m[1] * y) % 3;
                int ny = (m[2] * x + m[3] * y) % 3;
                p[vec_index(x, y)] = vec_index(nx, ny);
            }
        gens.push_back(p);
    }
    return from_permutations(8, gens, "SL(2,3)", 24);
}

// ---------------------------------------------------------------------------
// Catalog: every group of even order <= 24, GAP small-groups numbering.

namespace {

struct CatalogSlot {
    int order;
    int index;
    const char* name;
    FiniteGroup (*build)();
};

FiniteGroup b_c2() { return cyclic_group(2); }
FiniteGroup b_c4() { return cyclic_group(4); }
FiniteGroup b_c2c2() { return direct_product(cyclic_group(2), cyclic_group(2)); }
FiniteGroup b_s3() { return dihedral_group(6); }
FiniteGroup b_c6() { return cyclic_group(6); }
FiniteGroup b_c8() { return cyclic_group(8); }
FiniteGroup b_c4c2() { return direct_product(cyclic_group(4), cyclic_group(2)); }
FiniteGroup b_d8() { return dihedral_group(8); }
FiniteGroup b_q8() { return dicyclic_group(8); }
FiniteGroup b_c2x3() {
    return direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                          cyclic_group(2));
}
FiniteGroup b_d10() { return dihedral_group(10); }
FiniteGroup b_c10() { return cyclic_group(10); }
FiniteGroup b_dic3() { return dicyclic_group(12); }
FiniteGroup b_c12() { return cyclic_group(12); }
FiniteGroup b_a4() { return alternating4(); }
FiniteGroup b_d12() { return dihedral_group(12); }
FiniteGroup b_c6c2() { return direct_product(cyclic_group(6), cyclic_group(2)); }
FiniteGroup b_d14() { return dihedral_group(14); }
FiniteGroup b_c14() { return cyclic_group(14); }
FiniteGroup b_c16() { return cyclic_group(16); }
FiniteGroup b_c4c4() { return direct_product(cyclic_group(4), cyclic_group(4)); }
FiniteGroup b_16_3() { return group_16_3(); }
FiniteGroup b_c4sc4() { return semidirect_cyclic(4, 4, 3, "C4 : C4"); }
FiniteGroup b_c8c2() { return direct_product(cyclic_group(8), cyclic_group(2)); }
FiniteGroup b_m16() { return semidirect_cyclic(8, 2, 5, "C8 : C2"); }
FiniteGroup b_d16() { return dihedral_group(16); }
FiniteGroup b_sd16() { return semidirect_cyclic(8, 2, 3, "SD16"); }
FiniteGroup b_q16() { return dicyclic_group(16); }
FiniteGroup b_c4c2c2() {
    return direct_product(direct_product(cyclic_group(4), cyclic_group(2)),
                          cyclic_group(2));
}
FiniteGroup b_d8c2() { return direct_product(dihedral_group(8), cyclic_group(2)); }
FiniteGroup b_q8c2() { return direct_product(dicyclic_group(8), cyclic_group(2)); }
FiniteGroup b_16_13() { return group_16_13(); }
FiniteGroup b_c2x4() {
    return direct_product(
        direct_product(cyclic_group(2), cyclic_group(2)),
        direct_product(cyclic_group(2), cyclic_group(2)));
}
FiniteGroup b_d18() { return dihedral_group(18); }
FiniteGroup b_c18() { return cyclic_group(18); }
FiniteGroup b_c3s3() { return direct_product(cyclic_group(3), dihedral_group(6)); }
FiniteGroup b_18_4() {
    // generalized dihedral over C3 x C3
    return from_permutations(
        6, {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}, {0, 2, 1, 3, 5, 4}},
        "(C3 x C3) : C2", 18);
}
FiniteGroup b_c6c3() { return direct_product(cyclic_group(6), cyclic_group(3)); }
FiniteGroup b_dic5() { return dicyclic_group(20); }
FiniteGroup b_c20() { return cyclic_group(20); }
FiniteGroup b_f20() { return semidirect_cyclic(5, 4, 2, "F20"); }
FiniteGroup b_d20() { return dihedral_group(20); }
FiniteGroup b_c10c2() { return direct_product(cyclic_group(10), cyclic_group(2)); }
FiniteGroup b_d22() { return dihedral_group(22); }
FiniteGroup b_c22() { return cyclic_group(22); }
FiniteGroup b_c3sc8() { return semidirect_cyclic(3, 8, 2, "C3 : C8"); }
FiniteGroup b_c24() { return cyclic_group(24); }
FiniteGroup b_sl23() { return special_linear_2_3(); }
FiniteGroup b_dic6() { return dicyclic_group(24); }
FiniteGroup b_c4s3() { return direct_product(cyclic_group(4), dihedral_group(6)); }
FiniteGroup b_d24() { return dihedral_group(24); }
FiniteGroup b_c2dic3() { return direct_product(cyclic_group(2), dicyclic_group(12)); }
FiniteGroup b_24_8() { return group_24_8(); }
FiniteGroup b_c12c2() { return direct_product(cyclic_group(12), cyclic_group(2)); }
FiniteGroup b_c3d8() { return direct_product(cyclic_group(3), dihedral_group(8)); }
FiniteGroup b_c3q8() { return direct_product(cyclic_group(3), dicyclic_group(8)); }
FiniteGroup b_s4() { return symmetric4(); }
FiniteGroup b_c2a4() { return direct_product(cyclic_group(2), alternating4()); }
FiniteGroup b_c2c2s3() {
    return direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                          dihedral_group(6));
}
FiniteGroup b_c6c2c2() {
    return direct_product(direct_product(cyclic_group(6), cyclic_group(2)),
                          cyclic_group(2));
}

// Index column follows the GAP/Magma small groups library; names are the
// conventional structure descriptions.
const CatalogSlot kCatalog[] = {
    {2, 1, "C2", b_c2},
    {4, 1, "C4", b_c4},
    {4, 2, "C2 x C2", b_c2c2},
    {6, 1, "S3", b_s3},
    {6, 2, "C6", b_c6},
    {8, 1, "C8", b_c8},
    {8, 2, "C4 x C2", b_c4c2},
    {8, 3, "D8", b_d8},
    {8, 4, "Q8", b_q8},
    {8, 5, "C2 x C2 x C2", b_c2x3},
    {10, 1, "D10", b_d10},
    {10, 2, "C10", b_c10},
    {12, 1, "Dic3", b_dic3},
    {12, 2, "C12", b_c12},
    {12, 3, "A4", b_a4},
    {12, 4, "D12", b_d12},
    {12, 5, "C6 x C2", b_c6c2},
    {14, 1, "D14", b_d14},
    {14, 2, "C14", b_c14},
    {16, 1, "C16", b_c16},
    {16, 2, "C4 x C4", b_c4c4},
    {16, 3, "(C4 x C2) : C2", b_16_3},
    {16, 4, "C4 : C4", b_c4sc4},
    {16, 5, "C8 x C2", b_c8c2},
    {16, 6, "C8 : C2", b_m16},
    {16, 7, "D16", b_d16},
    {16, 8, "SD16", b_sd16},
    {16, 9, "Q16", b_q16},
    {16, 10, "C4 x C2 x C2", b_c4c2c2},
    {16, 11, "D8 x C2", b_d8c2},
    {16, 12, "Q8 x C2", b_q8c2},
    {16, 13, "D8 o C4", b_16_13},
    {16, 14, "C2 x C2 x C2 x C2", b_c2x4},
    {18, 1, "D18", b_d18},
    {18, 2, "C18", b_c18},
    {18, 3, "C3 x S3", b_c3s3},
    {18, 4, "(C3 x C3) : C2", b_18_4},
    {18, 5, "C6 x C3", b_c6c3},
    {20, 1, "Dic5", b_dic5},
    {20, 2, "C20", b_c20},
    {20, 3, "F20", b_f20},
    {20, 4, "D20", b_d20},
    {20, 5, "C10 x C2", b_c10c2},
    {22, 1, "D22", b_d22},
    {22, 2, "C22", b_c22},
    {24, 1, "C3 : C8", b_c3sc8},
    {24, 2, "C24", b_c24},
    {24, 3, "SL(2,3)", b_sl23},
    {24, 4, "Dic6", b_dic6},
    {24, 5, "C4 x S3", b_c4s3},
    {24, 6, "D24", b_d24},
    {24, 7, "C2 x Dic3", b_c2dic3},
    {24, 8, "(C6 x C2) : C2", b_24_8},
    {24, 9, "C12 x C2", b_c12c2},
    {24, 10, "C3 x D8", b_c3d8},
    {24, 11, "C3 x Q8", b_c3q8},
    {24, 12, "S4", b_s4},
    {24, 13, "C2 x A4", b_c2a4},
    {24, 14, "C2 x C2 x S3", b_c2c2s3},
    {24, 15, "C6 x C2 x C2", b_c6c2c2},
};

}  // namespace

int catalog_order_max() { return 24; }

std::vector<CatalogEntry> catalog_entries(int order) {
    if (order % 2 != 0)
        throw OddOrderUnsupported("catalog holds even orders only, got " +
                                  std::to_string(order));
    std::vector<CatalogEntry> out;
    for (const auto& slot : kCatalog)
        if (slot.order == order) out.push_back({slot.order, slot.index, slot.name});
    if (out.empty())
        throw UnknownGroup("no catalog groups of order " + std::to_string(order));
    return out;
}

const FiniteGroup& catalog_group(int order, int index) {
    if (order % 2 != 0)
        throw OddOrderUnsupported("catalog holds even orders only, got " +
                                  std::to_string(order));
    static std::map<std::pair<int, int>, FiniteGroup> cache;
    auto key = std::make_pair(order, index);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    for (const auto& slot : kCatalog) {
        if (slot.order == order && slot.index == index) {
            auto g = slot.build();
            g.name = "catalog:" + std::to_string(order) + ":" + std::to_string(index) +
                     " (" + std::string(slot.name) + ")";
            return cache.emplace(key, std::move(g)).first->second;
        }
    }
    throw UnknownGroup("no catalog group " + std::to_string(order) + ":" +
                       std::to_string(index));
}

FiniteGroup build_group(const std::string& spec) {
    // direct products join factor specs with 'x'
    auto xpos = spec.find('x');
    if (xpos != std::string::npos) {
        FiniteGroup left = build_group(spec.substr(0, xpos));
        FiniteGroup right = build_group(spec.substr(xpos + 1));
        return direct_product(left, right);
    }
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= spec.size()) {
        auto colon = spec.find(':', start);
        if (colon == std::string::npos) {
            parts.push_back(spec.substr(start));
            break;
        }
        parts.push_back(spec.substr(start, colon - start));
        start = colon + 1;
    }
    auto arg = [&](std::size_t i) -> int {
        if (i >= parts.size()) throw UnknownGroup("group spec missing argument: " + spec);
        try {
            return std::stoi(parts[i]);
        } catch (...) {
            throw UnknownGroup("bad group spec argument: " + spec);
        }
    };
    const std::string& fam = parts[0];
    if (fam == "cyclic") return cyclic_group(arg(1));
    if (fam == "dihedral") return dihedral_group(arg(1));
    if (fam == "dicyclic") return dicyclic_group(arg(1));
    if (fam == "catalog") return catalog_group(arg(1), arg(2));
    throw UnknownGroup("unknown group family: " + fam);
}

std::vector<int> involutions(const FiniteGroup& g) {
    std::vector<int> out;
    for (int x = 1; x < g.n; ++x)
        if (g.mul(x, x) == 0) out.push_back(x);
    return out;
}

std::vector<int> coset_reps(const FiniteGroup& grp, int g) {
    if (g <= 0 || g >= grp.n || grp.mul(g, g) != 0)
        throw NotInvolution("element " + std::to_string(g) + " is not an involution");
    std::vector<bool> used(grp.n, false);
    std::vector<int> reps;
    for (int x = 0; x < grp.n; ++x) {
        if (used[x]) continue;
        reps.push_back(x);
        used[x] = true;
        used[grp.mul(g, x)] = true;
    }
    return reps;
}

Ordering natural_ordering(const FiniteGroup& grp) {
    Ordering o;
    o.perm.resize(grp.n);
    std::iota(o.perm.begin(), o.perm.end(), 0);
    o.kind = Ordering::Kind::Natural;
    return o;
}

Ordering reversible_ordering(const FiniteGroup& grp, int g,
                             const std::vector<int>& reps) {
    if (g <= 0 || g >= grp.n || grp.mul(g, g) != 0)
        throw NotInvolution("element " + std::to_string(g) + " is not an involution");
    int l = grp.n / 2;
    if (int(reps.size()) != l) throw BadReps("expected n/2 coset representatives");
    std::vector<bool> seen(grp.n, false);
    for (int r : reps) {
        if (r < 0 || r >= grp.n || seen[r] || seen[grp.mul(g, r)])
            throw BadReps("representatives do not split the cosets of <g>");
        seen[r] = true;
        seen[grp.mul(g, r)] = true;
    }
    Ordering o;
    o.kind = Ordering::Kind::Reversible;
    o.g = g;
    o.perm.reserve(grp.n);
    for (int i = 0; i < l; ++i) o.perm.push_back(grp.mul(g, reps[i]));
    for (int i = l - 1; i >= 0; --i) o.perm.push_back(reps[i]);
    return o;
}

Ordering reversible_ordering(const FiniteGroup& grp, int g) {
    return reversible_ordering(grp, g, coset_reps(grp, g));
}

Ordering qc_ordering(const FiniteGroup& grp, int g) {
    if (g == 0) throw IdentityElement("qc ordering needs a non-identity element");
    int m = grp.order_of(g);
    std::vector<bool> used(grp.n, false);
    Ordering o;
    o.kind = Ordering::Kind::QuasiCyclic;
    o.m = m;
    o.g = g;
    o.perm.reserve(grp.n);
    for (int x = 0; x < grp.n; ++x) {
        if (used[x]) continue;
        // block g*x, g^2*x, ..., g^m*x = x
        int y = grp.mul(g, x);
        for (int i = 0; i < m; ++i) {
            o.perm.push_back(y);
            used[y] = true;
            y = grp.mul(g, y);
        }
    }
    return o;
}

}  // namespace dnacodes
