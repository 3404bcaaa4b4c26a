#include "addseq/ilp_model.hpp"

#include <algorithm>
#include <cmath>

#include "addseq/bounds.hpp"

namespace addseq {

std::string var_name(const VarRef& v) {
    switch (v.kind) {
    case VarKind::X:
        return "x" + std::to_string(v.k);
    case VarKind::Y:
        return "y" + std::to_string(v.i) + "_" + std::to_string(v.j);
    case VarKind::D:
        return "d" + std::to_string(v.k);
    }
    return "?";
}

std::vector<std::pair<int, int>> pair_space(int max_value) {
    std::vector<std::pair<int, int>> p;
    for (int i = 1; 2 * i <= max_value; ++i) {
        for (int j = i; i + j <= max_value; ++j) {
            p.emplace_back(i, j);
        }
    }
    return p;
}

namespace {

// Shared constraint block of every model variant: formation equalities,
// operand availability, fixed targets, optional halving cuts.
IlpModel build_skeleton(const TargetSet& t, bool with_cuts) {
    IlpModel m;
    m.targets = t;
    m.cuts_enabled = with_cuts;

    int n = t.max_target;

    for (int k = 1; k <= n; ++k) {
        bool fixed = (k == 1) || t.contains(k);
        m.domains[xvar(k)] = fixed ? VarDomain::fixed(1) : VarDomain::binary();
    }
    auto pairs = pair_space(n);
    for (auto [i, j] : pairs) {
        m.domains[yvar(i, j)] = VarDomain::binary();
    }

    for (int k = 2; k <= n; ++k) {
        LinearConstraint c;
        c.label = "c_form_" + std::to_string(k);
        for (int i = 1; 2 * i <= k; ++i) {
            c.terms.emplace_back(1, yvar(i, k - i));
        }
        c.terms.emplace_back(-1, xvar(k));
        c.relation = Relation::Eq;
        c.rhs = 0;
        m.constraints.push_back(std::move(c));
    }

    for (auto [i, j] : pairs) {
        LinearConstraint left;
        left.label = "c_avail_" + std::to_string(i) + "_" + std::to_string(j) + "_L";
        left.terms = {{1, yvar(i, j)}, {-1, xvar(i)}};
        left.relation = Relation::LessEq;
        left.rhs = 0;
        m.constraints.push_back(std::move(left));

        LinearConstraint right;
        right.label = "c_avail_" + std::to_string(i) + "_" + std::to_string(j) + "_R";
        right.terms = {{1, yvar(i, j)}, {-1, xvar(j)}};
        right.relation = Relation::LessEq;
        right.rhs = 0;
        m.constraints.push_back(std::move(right));
    }

    if (with_cuts) {
        // Any value k needs a predecessor of at least ceil(k/2): consecutive
        // elements at most double.
        for (int k = 2; k <= n; ++k) {
            LinearConstraint c;
            c.label = "cut_" + std::to_string(k);
            for (int v = (k + 1) / 2; v <= k - 1; ++v) {
                c.terms.emplace_back(1, xvar(v));
            }
            c.relation = Relation::GreaterEq;
            c.rhs = 1;
            m.constraints.push_back(std::move(c));
        }
    }
    return m;
}

} // namespace

IlpModel build_basic(const TargetSet& t, bool with_cuts) {
    IlpModel m = build_skeleton(t, with_cuts);
    m.cost = CostModel{1, 1};
    for (auto [i, j] : pair_space(t.max_target)) {
        m.objective.emplace_back(1, yvar(i, j));
    }
    return m;
}

IlpModel build_weighted(const TargetSet& t, const CostModel& cm, bool with_cuts) {
    IlpModel m = build_skeleton(t, with_cuts);
    m.cost = cm;
    for (auto [i, j] : pair_space(t.max_target)) {
        long long coeff = (i == j) ? cm.sqr_cost : cm.mult_cost;
        if (coeff != 0) {
            m.objective.emplace_back(coeff, yvar(i, j));
        }
    }
    return m;
}

IlpModel build_depth(const TargetSet& t, const CostModel& cm, int max_depth, bool with_cuts) {
    int dmin = min_depth_for(t.max_target);
    if (max_depth < dmin) {
        throw InfeasibleDepthError(max_depth, dmin);
    }

    IlpModel m = build_weighted(t, cm, with_cuts);
    m.max_depth = max_depth;

    int n = t.max_target;
    m.domains[dvar(1)] = VarDomain::fixed(0);
    for (int k = 2; k <= n; ++k) {
        m.domains[dvar(k)] = VarDomain::integer(0, max_depth);
    }

    // Big-M operand ordering: when y_{i,j} is chosen, both operand depths sit
    // strictly below the depth of the formed value. M = max_depth + 1.
    long long big_m = max_depth + 1;
    for (int k = 2; k <= n; ++k) {
        for (int i = 1; 2 * i <= k; ++i) {
            int j = k - i;
            std::string suffix = std::to_string(i) + "_" + std::to_string(j) + "_" +
                                 std::to_string(k);
            LinearConstraint left;
            left.label = "c_depth_" + suffix + "_L";
            left.terms = {{1, dvar(i)}, {-1, dvar(k)}, {big_m, yvar(i, j)}};
            left.relation = Relation::LessEq;
            left.rhs = max_depth;
            m.constraints.push_back(std::move(left));

            LinearConstraint right;
            right.label = "c_depth_" + suffix + "_R";
            right.terms = {{1, dvar(j)}, {-1, dvar(k)}, {big_m, yvar(i, j)}};
            right.relation = Relation::LessEq;
            right.rhs = max_depth;
            m.constraints.push_back(std::move(right));
        }
    }

    for (int k = 2; k <= n; ++k) {
        LinearConstraint c;
        c.label = "c_dzero_" + std::to_string(k);
        c.terms = {{1, dvar(k)}, {-static_cast<long long>(max_depth), xvar(k)}};
        c.relation = Relation::LessEq;
        c.rhs = 0;
        m.constraints.push_back(std::move(c));
    }

    for (int k = 1; k <= n; ++k) {
        LinearConstraint c;
        c.label = "c_dmin_" + std::to_string(k);
        c.terms.emplace_back(1, dvar(k));
        long long floor_k = min_depth_for(k);
        if (floor_k != 0) {
            c.terms.emplace_back(-floor_k, xvar(k));
        }
        c.relation = Relation::GreaterEq;
        c.rhs = 0;
        m.constraints.push_back(std::move(c));
    }
    return m;
}

namespace {

long long rounded_value(const std::map<VarRef, double>& assignment, const VarRef& v) {
    auto it = assignment.find(v);
    if (it == assignment.end()) {
        throw DecodeError("missing variable " + var_name(v));
    }
    double raw = it->second;
    double nearest = std::round(raw);
    if (std::abs(raw - nearest) > 1e-6) {
        throw DecodeError("fractional value of " + var_name(v));
    }
    return static_cast<long long>(nearest);
}

} // namespace

SequenceSolution decode(const IlpModel& model, const std::map<VarRef, double>& assignment) {
    std::map<VarRef, long long> value;
    for (const auto& [v, dom] : model.domains) {
        long long x = rounded_value(assignment, v);
        if (x < dom.lower || x > dom.upper) {
            throw DecodeError("bound of " + var_name(v));
        }
        value[v] = x;
    }

    for (const LinearConstraint& c : model.constraints) {
        long long lhs = 0;
        for (const auto& [coeff, v] : c.terms) {
            lhs += coeff * value.at(v);
        }
        bool ok = false;
        switch (c.relation) {
        case Relation::LessEq:
            ok = lhs <= c.rhs;
            break;
        case Relation::Eq:
            ok = lhs == c.rhs;
            break;
        case Relation::GreaterEq:
            ok = lhs >= c.rhs;
            break;
        }
        if (!ok) {
            throw DecodeError(c.label);
        }
    }

    SequenceSolution sol;
    for (const auto& [v, x] : value) {
        if (v.kind == VarKind::X && x == 1) {
            sol.elements.push_back(v.k);
        } else if (v.kind == VarKind::Y && x == 1) {
            sol.steps.push_back(FormationStep{v.i + v.j, v.i, v.j});
        }
    }
    std::sort(sol.steps.begin(), sol.steps.end(),
              [](const FormationStep& a, const FormationStep& b) { return a.formed < b.formed; });

    CostBreakdown c = cost_of(sol.steps, model.cost);
    sol.mult_count = c.mult_count;
    sol.sqr_count = c.sqr_count;
    sol.weighted_cost = c.weighted;

    sol.depths.assign(sol.elements.size(), 0);
    if (model.max_depth) {
        for (size_t idx = 0; idx < sol.elements.size(); ++idx) {
            sol.depths[idx] = static_cast<int>(value.at(dvar(sol.elements[idx])));
        }
    } else {
        auto depth = min_depth_assignment(sol);
        for (size_t idx = 0; idx < sol.elements.size(); ++idx) {
            sol.depths[idx] = depth.at(sol.elements[idx]);
        }
    }
    return sol;
}

std::map<VarRef, double> encode(const IlpModel& model, const SequenceSolution& s) {
    std::map<VarRef, double> assignment;
    for (const auto& [v, dom] : model.domains) {
        (void)dom;
        assignment[v] = 0.0;
    }
    for (int e : s.elements) {
        assignment.at(xvar(e)) = 1.0;
    }
    for (const FormationStep& st : s.steps) {
        assignment.at(yvar(st.a, st.b)) = 1.0;
    }
    if (model.max_depth) {
        for (size_t idx = 0; idx < s.elements.size(); ++idx) {
            assignment.at(dvar(s.elements[idx])) = s.depths[idx];
        }
    }
    return assignment;
}

namespace {

std::vector<std::pair<long long, VarRef>> sorted_terms(std::vector<std::pair<long long, VarRef>> t) {
    std::sort(t.begin(), t.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return t;
}

} // namespace

bool structurally_equal(const IlpModel& a, const IlpModel& b) {
    if (a.domains != b.domains) {
        return false;
    }
    if (sorted_terms(a.objective) != sorted_terms(b.objective)) {
        return false;
    }
    if (a.constraints.size() != b.constraints.size()) {
        return false;
    }
    for (size_t i = 0; i < a.constraints.size(); ++i) {
        const LinearConstraint& ca = a.constraints[i];
        const LinearConstraint& cb = b.constraints[i];
        if (ca.label != cb.label || ca.relation != cb.relation || ca.rhs != cb.rhs) {
            return false;
        }
        if (sorted_terms(ca.terms) != sorted_terms(cb.terms)) {
            return false;
        }
    }
    return true;
}

} // namespace addseq
