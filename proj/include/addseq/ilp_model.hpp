#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "addseq/core.hpp"

namespace addseq {

// X(k): value k present in the sequence. Y(i,j): operands i <= j form i + j.
// D(k): integer depth of element k (depth-constrained model only).
enum class VarKind : uint8_t { X = 0, Y = 1, D = 2 };

struct VarRef {
    VarKind kind = VarKind::X;
    int k = 0; // X, D
    int i = 0; // Y
    int j = 0; // Y

    auto operator<=>(const VarRef&) const = default;
};

inline VarRef xvar(int k) { return VarRef{VarKind::X, k, 0, 0}; }
inline VarRef yvar(int i, int j) { return VarRef{VarKind::Y, 0, i, j}; }
inline VarRef dvar(int k) { return VarRef{VarKind::D, k, 0, 0}; }

// File name of a variable: x7, y3_4, d7.
std::string var_name(const VarRef& v);

enum class Relation { LessEq, Eq, GreaterEq };

struct LinearConstraint {
    std::vector<std::pair<long long, VarRef>> terms; // nonzero coefficients
    Relation relation = Relation::Eq;
    long long rhs = 0;
    std::string label;
};

struct VarDomain {
    enum class Kind { Binary, Integer, Fixed } kind = Kind::Binary;
    long long lower = 0;
    long long upper = 1;

    static VarDomain binary() { return {Kind::Binary, 0, 1}; }
    static VarDomain integer(long long lo, long long hi) { return {Kind::Integer, lo, hi}; }
    static VarDomain fixed(long long v) { return {Kind::Fixed, v, v}; }

    bool operator==(const VarDomain&) const = default;
};

// A minimization model over X/Y/D variables. Constraints keep construction
// order; the domain map iterates in (kind, k, i, j) order.
struct IlpModel {
    std::vector<std::pair<long long, VarRef>> objective;
    std::vector<LinearConstraint> constraints;
    std::map<VarRef, VarDomain> domains;

    TargetSet targets;
    CostModel cost;
    std::optional<int> max_depth;
    bool cuts_enabled = false;
};

// All operand pairs P = {(i,j) : 1 <= i <= j, i + j <= max_value} in
// lexicographic order.
std::vector<std::pair<int, int>> pair_space(int max_value);

// Minimum-length model: objective sum of y, one formation per present
// element, operand availability, targets fixed, optional halving cuts.
IlpModel build_basic(const TargetSet& t, bool with_cuts);

// Same constraint set with objective cm.mult_cost on mixed pairs and
// cm.sqr_cost on doubling pairs.
IlpModel build_weighted(const TargetSet& t, const CostModel& cm, bool with_cuts);

// Weighted model extended with integer depth variables d_k bounded by
// max_depth, big-M ordering constraints, zeroing of unused depths and
// per-element minimum-depth floors.
IlpModel build_depth(const TargetSet& t, const CostModel& cm, int max_depth, bool with_cuts);

// Turns an integral feasible assignment back into a sequence. Throws
// DecodeError naming the first violated constraint otherwise.
SequenceSolution decode(const IlpModel& model, const std::map<VarRef, double>& assignment);

// Encode a solution as the assignment that decode() inverts.
std::map<VarRef, double> encode(const IlpModel& model, const SequenceSolution& s);

// Equality of objective, constraints and domains, ignoring instance metadata
// and term order inside rows.
bool structurally_equal(const IlpModel& a, const IlpModel& b);

} // namespace addseq
