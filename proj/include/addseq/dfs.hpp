#pragma once

#include <optional>
#include <vector>

#include "addseq/core.hpp"

namespace addseq {

// BruteForce disables every admissible-bound prune and keeps only the
// ascending-chain canonicalization; it exists to certify Pruned results.
enum class SearchMode { Pruned, BruteForce };

struct SearchConfig {
    CostModel cost{};
    std::optional<int> max_depth;
    SearchMode mode = SearchMode::Pruned;
    std::optional<long long> node_limit;
};

// Exact minimum-weighted-cost addition sequence covering t (respecting
// cfg.max_depth when set). Iterative deepening on an integer cost budget over
// strictly ascending chains. The reported witness is the lexicographically
// smallest optimal element list.
SequenceSolution solve_exact(const TargetSet& t, const SearchConfig& cfg = {});

// Every ascending-canonical sequence covering t with weighted cost
// <= max_cost and all elements <= max(t). Exponential; intended for small
// instances and property tests.
std::vector<SequenceSolution> enumerate_all(const TargetSet& t, long long max_cost,
                                            const SearchConfig& cfg = {});

} // namespace addseq
