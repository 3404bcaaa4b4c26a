#pragma once

#include <optional>

#include "addseq/core.hpp"

namespace addseq {

// Closed-form bounds on the length of an addition chain for n.
struct ChainBounds {
    int n = 0;
    int ones = 0;          // g(n), number of 1-bits
    double lower_real = 0; // log2(n) + log2(g(n)) - 2.13
    int lower_int = 0;     // ceil(lower_real), clamped to >= 0
    int upper_int = 0;     // binary-method step count
};

int popcount_positive(int n);
int floor_log2(int n);
int ceil_log2(int n);

// Knuth/Schoenhage lower bound: log2(n) + log2(g(n)) - 2.13. The integer form
// is ceil'd with a small slack so exact values do not round up.
std::pair<double, int> chain_lower(int n);

// Binary-method upper bound: floor(log2(n)) + g(n) - 1.
int chain_upper_binary(int n);

ChainBounds chain_bounds(int n);

// Yao's addition-sequence bound with c = 2 + 4/sqrt(N), N the largest target.
// Undefined (nullopt) for N <= 3 where log2(log2(N)) is nonpositive.
std::optional<double> sequence_upper_yao(const TargetSet& t);

// Yao's bound when defined, otherwise the sum of per-target binary bounds.
double sequence_upper_bound(const TargetSet& t);

// Minimum feasible depth of element n: ceil(log2(n)), 0 for n = 1.
int min_depth_for(int n);

} // namespace addseq
