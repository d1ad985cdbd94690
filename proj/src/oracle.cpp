#include "fairdiv/oracle.hpp"

#include <algorithm>

namespace fairdiv {

namespace {

// --- plain prefix machinery, written from the definitions ------------------

std::vector<int> prefix_of_bundle(const Profile& profile, int viewer, const Assignment& assignment,
                                  int holder) {
    std::vector<int> cum(profile.class_count(viewer), 0);
    for (int o = 0; o < profile.object_count(); ++o)
        if (assignment.owner(o) == holder)
            cum[profile.class_of(viewer, o)] += 1;
    for (std::size_t c = 1; c < cum.size(); ++c)
        cum[c] += cum[c - 1];
    return cum;
}

bool ge_everywhere(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t c = 0; c < a.size(); ++c)
        if (a[c] < b[c])
            return false;
    return true;
}

bool strictly_dominates(const std::vector<int>& a, const std::vector<int>& b) {
    return ge_everywhere(a, b) && a != b;
}

// --- exact phase-1 simplex --------------------------------------------------

// Feasibility of A x >= b, x >= 0 over the rationals (dense tableau, Bland's
// rule). Small systems only: the possible-EF check has at most k variables
// and n-1 rows.
bool linear_system_feasible(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    int rows = static_cast<int>(a.size());
    if (rows == 0)
        return true;
    int vars = static_cast<int>(a[0].size());

    // A x - s = b with s >= 0; scale rows so b >= 0, then one artificial per
    // row drives a min-sum phase-1 objective.
    int cols = vars + rows + rows; // x, surplus, artificial
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1, Rational(0)));
    std::vector<int> basis(rows);
    for (int r = 0; r < rows; ++r) {
        int sign = b[r].sgn() >= 0 ? 1 : -1;
        for (int v = 0; v < vars; ++v)
            t[r][v] = Rational(sign) * a[r][v];
        t[r][vars + r] = Rational(-sign);
        t[r][vars + rows + r] = Rational(1);
        t[r][cols] = Rational(sign) * b[r];
        basis[r] = vars + rows + r;
    }

    // objective row: minimize sum of artificials == maximize -(sum)
    std::vector<Rational> obj(cols + 1, Rational(0));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c <= cols; ++c)
            obj[c] += t[r][c];

    while (true) {
        int pivot_col = -1;
        for (int c = 0; c < cols; ++c) {
            if (c >= vars + rows)
                continue; // artificials never re-enter
            if (obj[c].sgn() > 0) {
                pivot_col = c;
                break; // Bland: lowest index
            }
        }
        if (pivot_col == -1)
            break;
        int pivot_row = -1;
        Rational best_ratio(0);
        for (int r = 0; r < rows; ++r) {
            if (t[r][pivot_col].sgn() <= 0)
                continue;
            Rational ratio = t[r][cols] / t[r][pivot_col];
            if (pivot_row == -1 || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[pivot_row])) {
                pivot_row = r;
                best_ratio = ratio;
            }
        }
        if (pivot_row == -1)
            return false; // unbounded phase-1 cannot happen; defensive exit
        Rational piv = t[pivot_row][pivot_col];
        for (int c = 0; c <= cols; ++c)
            t[pivot_row][c] /= piv;
        for (int r = 0; r < rows; ++r) {
            if (r == pivot_row || t[r][pivot_col].is_zero())
                continue;
            Rational factor = t[r][pivot_col];
            for (int c = 0; c <= cols; ++c)
                t[r][c] -= factor * t[pivot_row][c];
        }
        Rational ofactor = obj[pivot_col];
        for (int c = 0; c <= cols; ++c)
            obj[c] -= ofactor * t[pivot_row][c];
        basis[pivot_row] = pivot_col;
    }
    return obj[cols].is_zero(); // all artificials driven to zero
}

// Possible envy-freeness for one agent, via utility gaps: writing the class
// utilities as suffix sums of strictly positive gaps g, the envy constraint
// against j becomes sum_t g_t * (own_prefix[t] - j_prefix[t]) >= 0, and
// strict positivity scales to g >= 1.
bool oracle_possible_ef_agent(const Profile& profile, const Assignment& assignment, int agent) {
    int k = profile.class_count(agent);
    if (k == 0)
        return true;
    auto own = prefix_of_bundle(profile, agent, assignment, agent);
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int j = 0; j < profile.agent_count(); ++j) {
        if (j == agent)
            continue;
        auto other = prefix_of_bundle(profile, agent, assignment, j);
        // a strictly dominating rival defeats every utility choice; skip the
        // simplex when that cheap test already settles it
        if (strictly_dominates(other, own))
            return false;
        std::vector<Rational> row(k);
        Rational rhs(0);
        for (int t = 0; t < k; ++t) {
            row[t] = Rational(own[t] - other[t]);
            rhs -= row[t]; // substitute g = 1 + h, h >= 0
        }
        a.push_back(std::move(row));
        b.push_back(rhs);
    }
    return linear_system_feasible(std::move(a), std::move(b));
}

} // namespace

AssignmentEnumerator::AssignmentEnumerator(const Profile& profile, long budget)
    : profile_(profile), owner_(profile.object_count(), 0) {
    total_ = assignment_count(profile, budget);
}

std::optional<Assignment> AssignmentEnumerator::next() {
    if (exhausted_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        return Assignment(profile_, owner_);
    }
    int n = profile_.agent_count();
    int pos = 0;
    while (pos < profile_.object_count() && ++owner_[pos] == n)
        owner_[pos++] = 0;
    if (pos == profile_.object_count()) {
        exhausted_ = true;
        return std::nullopt;
    }
    return Assignment(profile_, owner_);
}

long assignment_count(const Profile& profile, long budget) {
    long count = 1;
    for (int o = 0; o < profile.object_count(); ++o) {
        if (count > budget / profile.agent_count())
            fail(Errc::BudgetExceeded, "assignment enumeration over budget");
        count *= profile.agent_count();
    }
    return count;
}

bool oracle_satisfies(const Profile& profile, const Assignment& assignment,
                      const FairnessNotion& notion, int agent) {
    int n = profile.agent_count();
    switch (notion.tag()) {
    case NotionTag::SdProp:
    case NotionTag::AlphaProp: {
        Rational share = notion.shares(profile)[agent];
        auto own = prefix_of_bundle(profile, agent, assignment, agent);
        for (int c = 0; c < profile.class_count(agent); ++c)
            if (Rational(own[c]) < share * Rational(profile.prefix_size(agent, c)))
                return false;
        return true;
    }
    case NotionTag::WeakSdProp:
    case NotionTag::BetaWeakProp: {
        Rational share = notion.shares(profile)[agent];
        auto own = prefix_of_bundle(profile, agent, assignment, agent);
        bool ge_all = true;
        for (int c = 0; c < profile.class_count(agent); ++c) {
            Rational mass = share * Rational(profile.prefix_size(agent, c));
            if (Rational(own[c]) > mass)
                return true; // strictly ahead somewhere
            if (Rational(own[c]) < mass)
                ge_all = false;
        }
        return ge_all;
    }
    case NotionTag::SdEf: {
        auto own = prefix_of_bundle(profile, agent, assignment, agent);
        for (int j = 0; j < n; ++j)
            if (j != agent && !ge_everywhere(own, prefix_of_bundle(profile, agent, assignment, j)))
                return false;
        return true;
    }
    case NotionTag::WeakSdEf: {
        auto own = prefix_of_bundle(profile, agent, assignment, agent);
        for (int j = 0; j < n; ++j)
            if (j != agent && strictly_dominates(prefix_of_bundle(profile, agent, assignment, j), own))
                return false;
        return true;
    }
    case NotionTag::PossibleEf:
        return oracle_possible_ef_agent(profile, assignment, agent);
    }
    fail(Errc::UnsupportedNotion, "bad notion tag");
}

bool oracle_holds(const Profile& profile, const Assignment& assignment,
                  const FairnessNotion& notion) {
    for (int i = 0; i < profile.agent_count(); ++i)
        if (!oracle_satisfies(profile, assignment, notion, i))
            return false;
    return true;
}

bool oracle_exists(const Profile& profile, const FairnessNotion& notion, long budget) {
    AssignmentEnumerator en(profile, budget);
    while (auto a = en.next())
        if (oracle_holds(profile, *a, notion))
            return true;
    return false;
}

std::optional<Rational> assignment_alpha_threshold(const Profile& profile,
                                                   const Assignment& assignment) {
    std::optional<Rational> worst;
    for (int i = 0; i < profile.agent_count(); ++i) {
        auto own = prefix_of_bundle(profile, i, assignment, i);
        for (int c = 0; c < profile.class_count(i); ++c) {
            if (own[c] == 0)
                return std::nullopt; // a prefix with nothing: no finite alpha
            Rational ratio(profile.prefix_size(i, c), own[c]);
            if (!worst || ratio > *worst)
                worst = ratio;
        }
    }
    return worst; // nullopt when there are no objects: no finite alpha

}

BetaThreshold assignment_beta_threshold(const Profile& profile, const Assignment& assignment) {
    BetaThreshold result;
    std::optional<Rational> beta;
    bool all_closed = true;
    for (int i = 0; i < profile.agent_count(); ++i) {
        auto own = prefix_of_bundle(profile, i, assignment, i);
        std::optional<Rational> best;
        bool proportional = true;
        for (int c = 0; c < profile.class_count(i); ++c) {
            if (own[c] == 0) {
                proportional = false;
                continue;
            }
            Rational ratio(profile.prefix_size(i, c), own[c]);
            if (!best || ratio < *best)
                best = ratio;
        }
        if (!best)
            return {}; // empty bundle: infinite
        if (proportional)
            for (int c = 0; c < profile.class_count(i); ++c)
                proportional = proportional &&
                               Rational(profile.prefix_size(i, c), own[c]) == *best;
        if (!beta || *best > *beta) {
            beta = best;
            all_closed = proportional;
        } else if (*best == *beta) {
            all_closed = all_closed && proportional;
        }
    }
    result.value = beta;
    result.closed = all_closed;
    return result;
}

std::optional<Rational> oracle_optimal_alpha(const Profile& profile, long budget) {
    if (profile.object_count() == 0)
        return std::nullopt; // nobody can get a most preferred object
    std::optional<Rational> best;
    AssignmentEnumerator en(profile, budget);
    while (auto a = en.next()) {
        auto t = assignment_alpha_threshold(profile, *a);
        if (t && (!best || *t < *best))
            best = t;
    }
    return best;
}

OracleBetaResult oracle_optimal_beta(const Profile& profile, long budget) {
    OracleBetaResult result;
    std::optional<Rational> best;
    bool attained = false;
    AssignmentEnumerator en(profile, budget);
    while (auto a = en.next()) {
        BetaThreshold t = assignment_beta_threshold(profile, *a);
        if (!t.value)
            continue;
        if (!best || *t.value < *best) {
            best = t.value;
            attained = t.closed;
        } else if (*t.value == *best) {
            attained = attained || t.closed;
        }
    }
    result.beta_star = best;
    result.attained = best ? attained : true; // every assignment is fine at infinity
    return result;
}

bool oracle_is_pareto_optimal(const Profile& profile, const Assignment& assignment, long budget) {
    int n = profile.agent_count();
    std::vector<std::vector<int>> own(n);
    for (int i = 0; i < n; ++i)
        own[i] = prefix_of_bundle(profile, i, assignment, i);
    AssignmentEnumerator en(profile, budget);
    while (auto q = en.next()) {
        bool ge_all = true, strict = false;
        for (int i = 0; i < n && ge_all; ++i) {
            auto qi = prefix_of_bundle(profile, i, *q, i);
            if (!ge_everywhere(qi, own[i]))
                ge_all = false;
            else if (qi != own[i])
                strict = true;
        }
        if (ge_all && strict)
            return false;
    }
    return true;
}

} // namespace fairdiv
