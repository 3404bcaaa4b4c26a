#include "addseq/bounds.hpp"

#include <bit>
#include <cmath>

namespace addseq {

namespace {
constexpr double kCeilSlack = 1e-9;
}

int popcount_positive(int n) {
    if (n < 1) {
        throw InvalidArgumentError("popcount requires n >= 1, got " + std::to_string(n));
    }
    return std::popcount(static_cast<unsigned int>(n));
}

int floor_log2(int n) {
    if (n < 1) {
        throw InvalidArgumentError("floor_log2 requires n >= 1, got " + std::to_string(n));
    }
    return std::bit_width(static_cast<unsigned int>(n)) - 1;
}

int ceil_log2(int n) {
    if (n < 1) {
        throw InvalidArgumentError("ceil_log2 requires n >= 1, got " + std::to_string(n));
    }
    if (n == 1) {
        return 0;
    }
    return std::bit_width(static_cast<unsigned int>(n - 1));
}

std::pair<double, int> chain_lower(int n) {
    int g = popcount_positive(n);
    double real = std::log2(static_cast<double>(n)) + std::log2(static_cast<double>(g)) - 2.13;
    int integral = static_cast<int>(std::ceil(real - kCeilSlack));
    if (integral < 0) {
        integral = 0;
    }
    return {real, integral};
}

int chain_upper_binary(int n) {
    return floor_log2(n) + popcount_positive(n) - 1;
}

ChainBounds chain_bounds(int n) {
    ChainBounds b;
    b.n = n;
    b.ones = popcount_positive(n);
    auto [real, integral] = chain_lower(n);
    b.lower_real = real;
    b.lower_int = integral;
    b.upper_int = chain_upper_binary(n);
    return b;
}

std::optional<double> sequence_upper_yao(const TargetSet& t) {
    double n_max = static_cast<double>(t.max_target);
    if (t.max_target <= 3) {
        return std::nullopt; // log2(log2(N)) <= 0
    }
    double c = 2.0 + 4.0 / std::sqrt(n_max);
    double l = std::log2(n_max);
    return l + c * (l / std::log2(l)) * static_cast<double>(t.count);
}

double sequence_upper_bound(const TargetSet& t) {
    if (auto yao = sequence_upper_yao(t)) {
        return *yao;
    }
    double sum = 0;
    for (int v : t.targets) {
        sum += chain_upper_binary(v);
    }
    return sum;
}

int min_depth_for(int n) {
    return ceil_log2(n);
}

} // namespace addseq
