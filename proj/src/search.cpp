#include "dnacodes/search.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

#include "dnacodes/enumerators.hpp"

namespace dnacodes {

std::uint64_t binomial64(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t f = std::uint64_t(n - k + i);
        std::uint64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
        if (num > ~std::uint64_t(0) / f) throw Error("binomial overflow");
        num *= f;
        den *= std::uint64_t(i);
        g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return num / den;
}

std::uint64_t candidate_count(int n, int d) {
    if (d == 0) return 1;  // the zero vector; evaluation rejects it
    std::uint64_t supports = binomial64(n, d);
    std::uint64_t patterns = 1;
    for (int i = 0; i < d; ++i) {
        if (patterns > ~std::uint64_t(0) / 3) throw Error("candidate space exceeds 64 bits");
        patterns *= 3;
    }
    if (supports > ~std::uint64_t(0) / patterns)
        throw Error("candidate space exceeds 64 bits");
    return supports * patterns;
}

F4Vec unrank_candidate(int n, int d, std::uint64_t idx) {
    F4Vec v = F4Vec::zeros(n);
    if (d == 0) return v;
    std::uint64_t patterns = 1;
    for (int i = 0; i < d; ++i) patterns *= 3;
    std::uint64_t support_rank = idx / patterns;
    std::uint64_t pattern_rank = idx % patterns;
    // lexicographic combination unranking
    int pos = 0;
    int remaining = d;
    std::vector<int> support;
    support.reserve(d);
    while (remaining > 0) {
        std::uint64_t block = binomial64(n - pos - 1, remaining - 1);
        if (support_rank < block) {
            support.push_back(pos);
            --remaining;
        } else {
            support_rank -= block;
        }
        ++pos;
    }
    // base-3 pattern over the nonzero scalars {1, w, w^2}
    for (int i = d - 1; i >= 0; --i) {
        v.set(support[i], std::uint8_t(1 + pattern_rank % 3));
        pattern_rank /= 3;
    }
    return v;
}

std::optional<SearchRecord> evaluate_candidate(const SearchTask& task,
                                               const SigmaIndex& idx,
                                               std::uint64_t cand_index, int wt) {
    if (wt == 0) return std::nullopt;
    const int n = task.n;
    F4Vec x = unrank_candidate(n, wt, cand_index);

    thread_local std::vector<F4Vec> rows;
    idx.fill_rows(x, rows);

    // Rows of sigma(x) are codewords of weight wt. Any pair at distance in
    // (0, d) already beats the target distance.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int dist = 0;
            for (int wd = 0; wd < kWords; ++wd)
                dist += std::popcount((rows[i].lo[wd] ^ rows[j].lo[wd]) |
                                      (rows[i].hi[wd] ^ rows[j].hi[wd]));
            if (dist > 0 && dist < task.d) return std::nullopt;
        }

    thread_local std::vector<F4Vec> work;
    work = rows;
    auto pivots = rref_in_place(work, n);
    if (pivots.empty()) return std::nullopt;

    F4Code code;
    code.n = n;
    code.gens = work;
    code.pivots = std::move(pivots);

    if (code_size(code) <= task.baseline) return std::nullopt;
    if (has_word_below(code, task.d, task.cap)) return std::nullopt;

    SearchRecord rec;
    rec.group_spec = task.group_spec;
    rec.involution = task.involution;
    rec.x = x;
    rec.candidate = cand_index;
    rec.wt = wt;
    rec.n = n;
    rec.k = code.k();
    rec.d = task.d;
    rec.size = code_size(code);
    rec.reversible = is_reversible(code);
    rec.all_ones = contains_all_ones(code);
    if (task.compute_gc && n % 2 == 0) rec.gc_half = count_gc_half_fast(code, task.cap);
    rec.canonical = code_to_string(code);
    return rec;
}

std::vector<SearchRecord> merge_results(
    std::vector<std::vector<SearchRecord>> streams) {
    std::vector<SearchRecord> all;
    for (auto& s : streams)
        for (auto& r : s) all.push_back(std::move(r));
    std::sort(all.begin(), all.end(), [](const SearchRecord& a, const SearchRecord& b) {
        if (a.size != b.size) return a.size > b.size;
        if (a.d != b.d) return a.d > b.d;
        if (a.canonical != b.canonical) return a.canonical < b.canonical;
        if (a.wt != b.wt) return a.wt < b.wt;
        return a.candidate < b.candidate;
    });
    std::vector<SearchRecord> out;
    for (auto& r : all)
        if (out.empty() || out.back().canonical != r.canonical)
            out.push_back(std::move(r));
    return out;
}

SearchResult run_search(const SearchTask& task, int worker_count,
                        const std::atomic<bool>* stop,
                        std::vector<std::pair<std::uint64_t, std::uint64_t>>*
                            completed_ranges) {
    if (worker_count < 1) worker_count = 1;
    SigmaIndex idx = SigmaIndex::build(*task.group, task.ordering);

    SearchResult result;
    for (int wt = task.d; wt <= task.d + task.wt_delta; ++wt) {
        std::uint64_t total = candidate_count(task.n, wt);
        std::uint64_t begin = std::min(task.begin, total);
        std::uint64_t end = task.end == 0 ? total : std::min(task.end, total);
        if (begin >= end) continue;

        std::uint64_t span = end - begin;
        std::uint64_t chunk = std::max<std::uint64_t>(
            1024, span / (std::uint64_t(worker_count) * 64));
        std::uint64_t nchunks = (span + chunk - 1) / chunk;

        std::vector<std::vector<SearchRecord>> found(nchunks);
        std::vector<std::vector<SkippedCandidate>> skipped(nchunks);
        std::vector<std::uint8_t> done(nchunks, 0);
        std::uint64_t evaluated = 0;

#pragma omp parallel for num_threads(worker_count) schedule(dynamic, 1) \
    reduction(+ : evaluated)
        for (std::int64_t ci = 0; ci < std::int64_t(nchunks); ++ci) {
            if (stop && stop->load(std::memory_order_relaxed)) continue;
            std::uint64_t lo = begin + std::uint64_t(ci) * chunk;
            std::uint64_t hi = std::min(end, lo + chunk);
            for (std::uint64_t cand = lo; cand < hi; ++cand) {
                try {
                    auto rec = evaluate_candidate(task, idx, cand, wt);
                    if (rec) found[ci].push_back(std::move(*rec));
                } catch (const CapExceeded& e) {
                    skipped[ci].push_back({cand, wt, e.what()});
                }
                ++evaluated;
            }
            done[ci] = 1;
        }

        result.evaluated += evaluated;
        for (std::uint64_t ci = 0; ci < nchunks; ++ci) {
            for (auto& r : found[ci]) result.records.push_back(std::move(r));
            for (auto& s : skipped[ci]) result.skipped.push_back(std::move(s));
            if (done[ci] && completed_ranges)
                completed_ranges->push_back(
                    {begin + ci * chunk, std::min(end, begin + (ci + 1) * chunk)});
        }
    }

    result.records = merge_results({std::move(result.records)});
    std::sort(result.skipped.begin(), result.skipped.end(),
              [](const SkippedCandidate& a, const SkippedCandidate& b) {
                  return std::tie(a.wt, a.candidate) < std::tie(b.wt, b.candidate);
              });
    return result;
}

std::vector<std::vector<int>> mirror_symmetric_perms(int n, std::uint64_t limit) {
    int l = n / 2;
    std::vector<std::vector<int>> out;
    std::vector<int> sigma(l);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        for (std::uint64_t flips = 0; flips < (std::uint64_t(1) << l); ++flips) {
            std::vector<int> p(n);
            for (int i = 0; i < l; ++i) {
                bool flip = (flips >> sigma[i]) & 1;
                p[i] = flip ? n - 1 - sigma[i] : sigma[i];
                p[n - 1 - i] = flip ? sigma[i] : n - 1 - sigma[i];
            }
            out.push_back(std::move(p));
            if (out.size() >= limit) return out;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

std::uint64_t max_ss_free_over_relabelings(const std::vector<F4Vec>& words,
                                           std::int64_t target,
                                           std::uint64_t perm_limit, int threads) {
    if (words.empty()) return 0;
    int n = words[0].n;
    std::vector<std::string> strs;
    strs.reserve(words.size());
    for (const auto& w : words) strs.push_back(encode_dna(w));

    auto perms = mirror_symmetric_perms(n, perm_limit);
    if (threads <= 0) threads = omp_get_max_threads();

    std::uint64_t best = 0;
    std::atomic<bool> reached{false};
#pragma omp parallel for num_threads(threads) schedule(dynamic, 16) \
    reduction(max : best)
    for (std::int64_t pi = 0; pi < std::int64_t(perms.size()); ++pi) {
        if (reached.load(std::memory_order_relaxed)) continue;
        const auto& p = perms[pi];
        std::string buf(n, 'A');
        std::uint64_t count = 0;
        for (const auto& s : strs) {
            for (int i = 0; i < n; ++i) buf[i] = s[p[i]];
            if (is_ss_free(buf)) ++count;
        }
        best = std::max(best, count);
        if (target >= 0 && count >= std::uint64_t(target))
            reached.store(true, std::memory_order_relaxed);
    }
    return best;
}

}  // namespace dnacodes
