#include "addseq/dfs.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "addseq/bounds.hpp"

namespace addseq {

namespace {

// Balanced halving decomposition of every target; always a valid sequence
// and depth-optimal per element, so its cost caps the deepening loop.
std::vector<int> fallback_elements(const TargetSet& t) {
    std::set<int> vals{1};
    for (int target : t.targets) {
        std::vector<int> stack{target};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v <= 1 || vals.count(v)) {
                continue;
            }
            vals.insert(v);
            stack.push_back(v / 2);
            stack.push_back(v - v / 2);
        }
    }
    return {vals.begin(), vals.end()};
}

struct Candidate {
    int value = 0;
    int a = 0; // chosen operand, a <= value - a
    int cost = 0;
    int depth = 0;
};

// Per-recursion-frame formation table, indexed by value - lo.
struct Scratch {
    std::vector<int> sq_depth;
    std::vector<int> mult_depth;
    std::vector<int> mult_a;

    void reset(size_t width) {
        if (sq_depth.size() < width) {
            sq_depth.resize(width);
            mult_depth.resize(width);
            mult_a.resize(width);
        }
        std::fill_n(sq_depth.begin(), width, -1);
        std::fill_n(mult_depth.begin(), width, -1);
        std::fill_n(mult_a.begin(), width, 0);
    }
};

class Searcher {
public:
    Searcher(const TargetSet& t, const SearchConfig& cfg, bool collect_all)
        : cfg_(cfg), collect_all_(collect_all) {
        for (int v : t.targets) {
            if (v > 1) {
                goals_.push_back(v);
            }
        }
        odd_suffix_.assign(goals_.size() + 1, 0);
        for (size_t p = goals_.size(); p-- > 0;) {
            odd_suffix_[p] = odd_suffix_[p + 1] + (goals_[p] % 2);
        }

        int n = t.max_target;
        depth_by_value_.assign(static_cast<size_t>(n) + 1, 0);
        chain_.reserve(64);
        chain_.push_back(1);
        pruned_ = cfg.mode == SearchMode::Pruned;
    }

    // One deepening iteration; true when a solution was found. With
    // collect_all the search keeps going and accumulates every leaf.
    bool run(long long budget) {
        budget_ = budget;
        return dfs(0, 0, 0);
    }

    long long root_lower_bound() const { return lower_bound(1, 0); }

    SequenceSolution take_solution() { return std::move(solution_); }
    std::vector<SequenceSolution>& collected() { return collected_; }
    long long nodes() const { return nodes_; }

private:
    bool dfs(size_t unmet, long long acc, size_t frame) {
        if (unmet == goals_.size()) {
            record_leaf(acc);
            return true;
        }
        int cmax = chain_.back();
        int next_goal = goals_[unmet];
        // Ascending chains may not skip an outstanding target, and one step
        // at most doubles the maximum.
        int lo = cmax + 1;
        int hi = std::min(2 * cmax, next_goal);
        size_t width = static_cast<size_t>(hi - lo + 1);

        if (frames_.size() <= frame) {
            frames_.resize(frame + 1);
        }
        Scratch& sc = frames_[frame];
        sc.reset(width);

        size_t len = chain_.size();
        for (size_t ai = 0; ai < len; ++ai) {
            int a = chain_[ai];
            for (size_t bi = ai; bi < len; ++bi) {
                int sum = a + chain_[bi];
                if (sum < lo) {
                    continue;
                }
                if (sum > hi) {
                    break;
                }
                int slot = sum - lo;
                int d = std::max(depth_by_value_[a], depth_by_value_[chain_[bi]]) + 1;
                if (ai == bi) {
                    sc.sq_depth[slot] = d;
                } else if (sc.mult_depth[slot] < 0 || d < sc.mult_depth[slot]) {
                    sc.mult_depth[slot] = d;
                    sc.mult_a[slot] = a;
                }
            }
        }

        bool found_any = false;
        for (int value = lo; value <= hi; ++value) {
            Candidate cands[2];
            int ncand = formation_candidates(sc, lo, value, cands);
            for (int ci = 0; ci < ncand; ++ci) {
                const Candidate cand = cands[ci];
                if (cfg_.max_depth && cand.depth > *cfg_.max_depth) {
                    continue;
                }
                long long acc_child = acc + cand.cost;
                size_t unmet_child = unmet + (value == next_goal ? 1 : 0);
                if (pruned_) {
                    if (acc_child + lower_bound(value, unmet_child) > budget_) {
                        continue;
                    }
                    if (cfg_.max_depth && unmet_child < goals_.size() &&
                        !reachable(value, cand.depth)) {
                        continue;
                    }
                } else if (acc_child > budget_) {
                    continue;
                }

                ++nodes_;
                if (cfg_.node_limit && nodes_ > *cfg_.node_limit) {
                    throw ResourceExhaustedError("search node limit exceeded");
                }

                push(cand);
                bool hit = dfs(unmet_child, acc_child, frame + 1);
                pop(cand);
                if (hit) {
                    if (!collect_all_) {
                        return true;
                    }
                    found_any = true;
                }
            }
        }
        return found_any;
    }

    int formation_candidates(const Scratch& sc, int lo, int value, Candidate out[2]) const {
        int slot = value - lo;
        bool has_sq = sc.sq_depth[slot] >= 0;
        bool has_mult = sc.mult_depth[slot] >= 0;
        if (!has_sq && !has_mult) {
            return 0;
        }
        const int cs = cfg_.cost.sqr_cost;
        const int cm = cfg_.cost.mult_cost;
        Candidate sq{value, value / 2, cs, has_sq ? sc.sq_depth[slot] : 0};
        Candidate mult{value, sc.mult_a[slot], cm, has_mult ? sc.mult_depth[slot] : 0};

        if (!cfg_.max_depth) {
            // Only the element set matters downstream; keep the cheapest
            // formation, squarer preferred on cost ties.
            if (has_sq && has_mult) {
                out[0] = (cs <= cm) ? sq : mult;
            } else {
                out[0] = has_sq ? sq : mult;
            }
            return 1;
        }

        if (!has_sq) {
            out[0] = mult;
            return 1;
        }
        if (!has_mult) {
            out[0] = sq;
            return 1;
        }
        // Pareto front over (cost, depth); within one cost class the shallower
        // formation dominates, and a dearer class survives only when shallower.
        if (cs == cm) {
            out[0] = (mult.depth < sq.depth) ? mult : sq;
            return 1;
        }
        const Candidate& cheap = (cs < cm) ? sq : mult;
        const Candidate& dear = (cs < cm) ? mult : sq;
        out[0] = cheap;
        if (dear.depth < cheap.depth) {
            out[1] = dear;
            return 2;
        }
        return 1;
    }

    // Admissible weighted cost-to-go for a state with chain maximum cmax and
    // goals_[unmet..] outstanding. Targets are met in ascending order, the
    // p-th outstanding one no earlier than the step where the doubling bound
    // first reaches it, and each later target needs its own later step.
    long long lower_bound(int cmax, size_t unmet) const {
        size_t total = goals_.size();
        if (unmet == total) {
            return 0;
        }
        long long steps = 0;
        long long growth = 0;
        long long reach = cmax;
        for (size_t p = unmet; p < total; ++p) {
            while (reach < goals_[p]) {
                reach *= 2;
                ++growth;
            }
            steps = std::max(steps, growth + static_cast<long long>(total - 1 - p));
        }
        const int cs = cfg_.cost.sqr_cost;
        const int cm = cfg_.cost.mult_cost;
        if (cm >= cs) {
            // Odd values only arise from mixed-operand steps.
            return static_cast<long long>(cs) * steps +
                   static_cast<long long>(cm - cs) * odd_suffix_[unmet];
        }
        return static_cast<long long>(cm) * steps;
    }

    // Depth-capped growth bound: an element of value v at depth d contributes
    // at most v * 2^(dmax - d) to any later element.
    bool reachable(int new_value, int new_depth) const {
        int dmax = *cfg_.max_depth;
        long long goal = goals_.back();
        auto reach = [dmax](long long v, int d) {
            int shift = std::min(dmax - d, 40);
            return v << shift;
        };
        long long best = reach(new_value, new_depth);
        for (size_t idx = 0; idx < chain_.size() && best < goal; ++idx) {
            int v = chain_[idx];
            best = std::max(best, reach(v, depth_by_value_[v]));
        }
        return best >= goal;
    }

    void push(const Candidate& c) {
        chain_.push_back(c.value);
        depth_by_value_[c.value] = c.depth;
        steps_.push_back(FormationStep{c.value, c.a, c.value - c.a});
    }

    void pop(const Candidate& c) {
        steps_.pop_back();
        depth_by_value_[c.value] = 0;
        chain_.pop_back();
    }

    void record_leaf(long long acc) {
        SequenceSolution sol;
        sol.elements = chain_;
        sol.steps = steps_;
        CostBreakdown cb = cost_of(sol.steps, cfg_.cost);
        sol.mult_count = cb.mult_count;
        sol.sqr_count = cb.sqr_count;
        sol.weighted_cost = cb.weighted;
        assert(cb.weighted == acc);
        (void)acc;
        sol.depths.resize(sol.elements.size());
        for (size_t idx = 0; idx < sol.elements.size(); ++idx) {
            sol.depths[idx] = depth_by_value_[sol.elements[idx]];
        }
        if (collect_all_) {
            collected_.push_back(std::move(sol));
        } else {
            solution_ = std::move(sol);
        }
    }

    SearchConfig cfg_;
    bool collect_all_ = false;
    bool pruned_ = true;
    long long budget_ = 0;
    long long nodes_ = 0;

    std::vector<int> goals_;
    std::vector<int> odd_suffix_;
    std::vector<int> chain_;
    std::vector<int> depth_by_value_;
    std::vector<FormationStep> steps_;
    std::vector<Scratch> frames_;

    SequenceSolution solution_;
    std::vector<SequenceSolution> collected_;
};

SequenceSolution trivial_solution() {
    SequenceSolution sol;
    sol.elements = {1};
    sol.depths = {0};
    return sol;
}

void check_depth_cap(const TargetSet& t, const SearchConfig& cfg) {
    if (cfg.max_depth && *cfg.max_depth < min_depth_for(t.max_target)) {
        throw InfeasibleDepthError(*cfg.max_depth, min_depth_for(t.max_target));
    }
}

} // namespace

SequenceSolution solve_exact(const TargetSet& t, const SearchConfig& cfg) {
    check_depth_cap(t, cfg);
    if (t.max_target == 1) {
        return trivial_solution();
    }

    auto fallback = fallback_elements(t);
    long long cap = validate_sequence(fallback, t, cfg.cost).weighted_cost;

    Searcher searcher(t, cfg, /*collect_all=*/false);
    long long start = cfg.mode == SearchMode::Pruned ? searcher.root_lower_bound() : 0;
    for (long long budget = start; budget <= cap; ++budget) {
        if (searcher.run(budget)) {
            return searcher.take_solution();
        }
    }
    throw Error("deepening passed its own upper bound; search is inconsistent");
}

std::vector<SequenceSolution> enumerate_all(const TargetSet& t, long long max_cost,
                                            const SearchConfig& cfg) {
    check_depth_cap(t, cfg);
    std::vector<SequenceSolution> result;
    if (t.max_target == 1) {
        result.push_back(trivial_solution());
        return result;
    }
    Searcher searcher(t, cfg, /*collect_all=*/true);
    searcher.run(max_cost);
    return std::move(searcher.collected());
}

} // namespace addseq
