#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dnacodes/bigint.hpp"
#include "dnacodes/dna.hpp"
#include "dnacodes/groupcodes.hpp"
#include "dnacodes/groups.hpp"

namespace dnacodes {

// Candidate space for one (group, involution): all weight-d vectors in
// F4^n, indexed as support-combination rank (combinadic) * 3^d +
// base-3 pattern rank. Ranges split in O(1) and partition without overlap.
std::uint64_t binomial64(int n, int k);
std::uint64_t candidate_count(int n, int d);
F4Vec unrank_candidate(int n, int d, std::uint64_t idx);

struct SearchTask {
    std::string group_spec;
    const FiniteGroup* group = nullptr;
    int involution = -1;
    Ordering ordering;

    int n = 0;
    int d = 0;
    BigInt baseline = 0;        // record only codes with |C| > baseline
    int wt_delta = 0;           // widen candidate weights to [d, d+wt_delta]
    std::uint64_t begin = 0, end = 0;  // candidate index range per weight
    std::uint64_t cap = 1ull << 28;
    bool compute_gc = true;
};

// A found code plus everything needed to re-verify it from scratch.
struct SearchRecord {
    std::string group_spec;
    int involution = -1;
    F4Vec x;
    std::uint64_t candidate = 0;  // discovery index (weight-local)
    int wt = 0;

    int n = 0, k = 0, d = 0;
    BigInt size = 0;
    bool reversible = false;
    bool all_ones = false;
    BigInt gc_half = -1;  // -1 = not computed
    std::int64_t ffs = -1;
    std::string canonical;  // RREF rows, the dedup/sort key
};

struct SkippedCandidate {
    std::uint64_t candidate = 0;
    int wt = 0;
    std::string reason;
};

struct SearchResult {
    std::vector<SearchRecord> records;
    std::vector<SkippedCandidate> skipped;
    std::uint64_t evaluated = 0;
};

// Builds the group code of x under the task ordering and emits a record iff
// d(C) == d (or widened weight) and |C| > baseline. Cheap rejections first:
// rows of sigma(x) all have weight wt(x), so any pair of rows at distance
// in (0, d) kills the candidate before rank and distance work.
std::optional<SearchRecord> evaluate_candidate(const SearchTask& task,
                                               const SigmaIndex& idx,
                                               std::uint64_t cand_index,
                                               int wt);

// Deterministic parallel sweep: the candidate range is split into chunks
// handled by an OpenMP worker pool; per-worker record lists are merged,
// deduplicated and sorted, so the output is identical for every
// worker_count and schedule. `stop` (optional) aborts between chunks.
SearchResult run_search(const SearchTask& task, int worker_count,
                        const std::atomic<bool>* stop = nullptr,
                        std::vector<std::pair<std::uint64_t, std::uint64_t>>*
                            completed_ranges = nullptr);

// Deduplicates by canonical RREF and sorts by (|C| desc, d desc, canonical
// asc); stable and total.
std::vector<SearchRecord> merge_results(std::vector<std::vector<SearchRecord>> streams);

// Valid re-labelings of the coordinates of a reversibly-ordered code: any
// permutation of the coset-representative positions applied to both halves,
// composed with any set of mirror-pair swaps. Every relabeling is the code
// of the same generator under a different representative choice.
std::vector<std::vector<int>> mirror_symmetric_perms(int n, std::uint64_t limit);

// Max ss-free count of {perm(word)} over the relabelings (early exit once
// `target` is reached; target < 0 scans everything).
std::uint64_t max_ss_free_over_relabelings(const std::vector<F4Vec>& words,
                                           std::int64_t target,
                                           std::uint64_t perm_limit,
                                           int threads = 0);

}  // namespace dnacodes
