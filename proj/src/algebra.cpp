#include "dnacodes/algebra.hpp"

#include <stdexcept>

#include "dnacodes/enumerators.hpp"

namespace dnacodes {

namespace {

template <class V>
int min_distance_impl(const LinearCode<V>& c, std::uint64_t cap) {
    if (c.k() < 1) throw std::invalid_argument("min_distance: zero code");
    double direct = log2_words(V::q, c.k());
    if (direct <= 62 && (std::uint64_t(1) << std::uint64_t(direct)) <= cap) {
        int best = c.n + 1;
        for_each_codeword(c, cap, [&](std::uint64_t idx, const V& w) {
            if (idx == 0) return true;
            int wt = w.weight();
            if (wt < best) best = wt;
            return best > 1;  // weight 1 cannot be beaten
        });
        return best;
    }
    // High-rate code: read the spectrum off the dual's via MacWilliams.
    WeightSpectrum sp = weight_spectrum(c, cap);
    int d = sp.min_positive();
    if (d == 0) throw Error("min_distance: inconsistent spectrum");
    return d;
}

}  // namespace

int min_distance(const F2Code& c, std::uint64_t cap) {
    return min_distance_impl(c, cap);
}
int min_distance(const F4Code& c, std::uint64_t cap) {
    return min_distance_impl(c, cap);
}

F4Code random_f4_code(std::mt19937_64& rng, int n, int k) {
    std::vector<F4Vec> rows;
    rows.reserve(k);
    for (int i = 0; i < k; ++i) {
        F4Vec r = F4Vec::zeros(n);
        r.set(i, 1);
        for (int j = k; j < n; ++j) r.set(j, std::uint8_t(rng() & 3));
        rows.push_back(r);
    }
    return make_code<F4Vec>(n, std::move(rows));
}

F2Code random_f2_code(std::mt19937_64& rng, int n, int k) {
    std::vector<F2Vec> rows;
    rows.reserve(k);
    for (int i = 0; i < k; ++i) {
        F2Vec r = F2Vec::zeros(n);
        r.set(i, 1);
        for (int j = k; j < n; ++j) r.set(j, std::uint8_t(rng() & 1));
        rows.push_back(r);
    }
    return make_code<F2Vec>(n, std::move(rows));
}

}  // namespace dnacodes
