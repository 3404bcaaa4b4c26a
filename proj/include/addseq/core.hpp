#pragma once

#include <map>
#include <vector>

#include "addseq/errors.hpp"

namespace addseq {

// Largest accepted target value. Keeps the k / (i,j) index spaces of the ILP
// models explicitly enumerable.
inline constexpr int kMaxTargetValue = 1 << 20;

// Relative costs of the two operation kinds. Any nonnegative pair is legal;
// the defaults reflect a squarer costing about half a general multiplier.
struct CostModel {
    int mult_cost = 2;
    int sqr_cost = 1;

    int step_cost(bool squarer) const { return squarer ? sqr_cost : mult_cost; }
    int min_cost() const { return mult_cost < sqr_cost ? mult_cost : sqr_cost; }
};

// Sorted, deduplicated set of requested values. max_target is the largest
// entry (n_r); the index range K is implicitly 1..max_target.
struct TargetSet {
    std::vector<int> targets;
    int max_target = 0;
    int count = 0;

    bool contains(int v) const;
};

TargetSet normalize_targets(const std::vector<long long>& raw);

// One operation: formed = a + b with a <= b. A squarer when a == b.
struct FormationStep {
    int formed = 0;
    int a = 0;
    int b = 0;

    bool is_squarer() const { return a == b; }
};

struct CostBreakdown {
    int mult_count = 0;
    int sqr_count = 0;
    long long weighted = 0;
};

CostBreakdown cost_of(const std::vector<FormationStep>& steps, const CostModel& cm);

// A verified addition sequence: ascending elements starting at 1, one
// formation step per element > 1, cost totals, and a per-element depth
// assignment (depths[idx] belongs to elements[idx], depth of 1 is 0).
struct SequenceSolution {
    std::vector<int> elements;
    std::vector<FormationStep> steps;
    int mult_count = 0;
    int sqr_count = 0;
    long long weighted_cost = 0;
    std::vector<int> depths;

    int op_count() const { return mult_count + sqr_count; }
    int depth_of(int element) const;
    int max_depth() const;
};

// Checks that `elements` is a valid addition sequence covering `t` and
// reconstructs one formation step per element. Among the valid formations of
// each element the step with the smallest resulting depth is chosen, ties
// broken in favour of squarers, then by the smaller operand.
SequenceSolution validate_sequence(const std::vector<int>& elements, const TargetSet& t,
                                   const CostModel& cm = CostModel{});

// Best achievable depth for every element of the (fixed) element set,
// independent of the formation steps actually recorded in `s`.
std::map<int, int> min_depth_assignment(const SequenceSolution& s);

} // namespace addseq
