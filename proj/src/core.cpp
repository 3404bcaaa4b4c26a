#include "addseq/core.hpp"

#include <algorithm>
#include <limits>

namespace addseq {

bool TargetSet::contains(int v) const {
    return std::binary_search(targets.begin(), targets.end(), v);
}

TargetSet normalize_targets(const std::vector<long long>& raw) {
    if (raw.empty()) {
        throw EmptyTargetsError();
    }
    std::vector<int> vals;
    vals.reserve(raw.size());
    for (long long v : raw) {
        if (v < 1 || v > kMaxTargetValue) {
            throw InvalidTargetError(v);
        }
        vals.push_back(static_cast<int>(v));
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());

    TargetSet t;
    t.targets = std::move(vals);
    t.max_target = t.targets.back();
    t.count = static_cast<int>(t.targets.size());
    return t;
}

CostBreakdown cost_of(const std::vector<FormationStep>& steps, const CostModel& cm) {
    CostBreakdown c;
    for (const FormationStep& s : steps) {
        if (s.is_squarer()) {
            ++c.sqr_count;
        } else {
            ++c.mult_count;
        }
    }
    c.weighted = static_cast<long long>(cm.mult_cost) * c.mult_count +
                 static_cast<long long>(cm.sqr_cost) * c.sqr_count;
    return c;
}

int SequenceSolution::depth_of(int element) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), element);
    if (it == elements.end() || *it != element) {
        throw InvalidArgumentError("element " + std::to_string(element) +
                                   " not in sequence");
    }
    return depths[static_cast<size_t>(it - elements.begin())];
}

int SequenceSolution::max_depth() const {
    int d = 0;
    for (int x : depths) {
        d = std::max(d, x);
    }
    return d;
}

namespace {

// Depth-greedy formation choice for one element. `depth_by_value[v]` must be
// filled for every earlier element. Returns false when no formation exists.
bool best_formation(int k, const std::vector<int>& earlier,
                    const std::vector<int>& depth_by_value, FormationStep& out,
                    int& out_depth) {
    bool found = false;
    int best_depth = std::numeric_limits<int>::max();
    FormationStep best{};
    for (int a : earlier) {
        if (a > k / 2) {
            break;
        }
        int b = k - a;
        if (!std::binary_search(earlier.begin(), earlier.end(), b)) {
            continue;
        }
        int d = std::max(depth_by_value[a], depth_by_value[b]) + 1;
        bool better = false;
        if (!found || d < best_depth) {
            better = true;
        } else if (d == best_depth) {
            if (a == b && best.a != best.b) {
                better = true;
            } else if ((a == b) == (best.a == best.b) && a < best.a) {
                better = true;
            }
        }
        if (better) {
            best = FormationStep{k, a, b};
            best_depth = d;
            found = true;
        }
    }
    if (found) {
        out = best;
        out_depth = best_depth;
    }
    return found;
}

} // namespace

SequenceSolution validate_sequence(const std::vector<int>& elements, const TargetSet& t,
                                   const CostModel& cm) {
    if (elements.empty()) {
        throw InvalidSequenceError("sequence is empty");
    }
    if (elements.front() != 1) {
        throw NotAChainError(elements.front());
    }
    for (size_t i = 1; i < elements.size(); ++i) {
        if (elements[i] <= elements[i - 1]) {
            throw InvalidSequenceError("sequence not strictly ascending at " +
                                       std::to_string(elements[i]));
        }
    }
    if (elements.back() > kMaxTargetValue) {
        throw InvalidSequenceError("element " + std::to_string(elements.back()) +
                                   " exceeds supported range");
    }

    SequenceSolution sol;
    sol.elements = elements;
    sol.depths.assign(elements.size(), 0);

    std::vector<int> depth_by_value(static_cast<size_t>(elements.back()) + 1, 0);
    std::vector<int> earlier;
    earlier.reserve(elements.size());
    earlier.push_back(1);

    for (size_t idx = 1; idx < elements.size(); ++idx) {
        int k = elements[idx];
        FormationStep step;
        int depth = 0;
        if (!best_formation(k, earlier, depth_by_value, step, depth)) {
            throw NotAChainError(k);
        }
        sol.steps.push_back(step);
        sol.depths[idx] = depth;
        depth_by_value[k] = depth;
        earlier.push_back(k);
    }

    for (int target : t.targets) {
        if (!std::binary_search(elements.begin(), elements.end(), target)) {
            throw MissingTargetError(target);
        }
    }

    CostBreakdown c = cost_of(sol.steps, cm);
    sol.mult_count = c.mult_count;
    sol.sqr_count = c.sqr_count;
    sol.weighted_cost = c.weighted;
    return sol;
}

std::map<int, int> min_depth_assignment(const SequenceSolution& s) {
    std::map<int, int> depth;
    std::vector<int> depth_by_value(static_cast<size_t>(s.elements.back()) + 1, 0);
    std::vector<int> earlier;
    earlier.reserve(s.elements.size());

    for (int k : s.elements) {
        if (k == 1) {
            depth[1] = 0;
            earlier.push_back(1);
            continue;
        }
        FormationStep step;
        int d = 0;
        if (!best_formation(k, earlier, depth_by_value, step, d)) {
            throw NotAChainError(k);
        }
        depth[k] = d;
        depth_by_value[k] = d;
        earlier.push_back(k);
    }
    return depth;
}

} // namespace addseq
