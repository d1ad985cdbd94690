#include "fairdiv/verify.hpp"

#include <algorithm>
#include <set>

namespace fairdiv {

namespace {

// A row encodes sum_t coeff[t] * u_t + constant >= 0.
struct Row {
    std::vector<Rational> coeff;
    Rational constant;

    friend bool operator<(const Row& a, const Row& b) {
        if (a.coeff != b.coeff)
            return a.coeff < b.coeff;
        return a.constant < b.constant;
    }
};

// Scale to a primitive integer vector so duplicates collide.
void canonicalize(Row& row) {
    BigInt lcm(1);
    for (const auto& c : row.coeff)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), row.constant.den().get_mpz_t());
    BigInt g(0);
    auto fold = [&](const Rational& c) {
        BigInt scaled = c.num() * (lcm / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
    };
    for (const auto& c : row.coeff)
        fold(c);
    fold(row.constant);
    if (g == 0)
        g = 1;
    Rational scale = Rational(lcm) / Rational(g);
    for (auto& c : row.coeff)
        c *= scale;
    row.constant *= scale;
}

// Fourier-Motzkin elimination with duplicate pruning. Returns a satisfying
// point when the system is feasible.
class FourierMotzkin {
public:
    explicit FourierMotzkin(int var_count) : var_count_(var_count) {}

    void add(Row row) { rows_.push_back(std::move(row)); }

    std::optional<std::vector<Rational>> solve() {
        std::vector<std::vector<Row>> stages; // system right before eliminating var v
        std::vector<Row> current = rows_;
        for (int v = 0; v < var_count_; ++v) {
            stages.push_back(current);
            std::set<Row> next;
            std::vector<const Row*> lower, upper;
            for (const auto& row : current) {
                int s = row.coeff[v].sgn();
                if (s > 0)
                    lower.push_back(&row);
                else if (s < 0)
                    upper.push_back(&row);
                else {
                    Row kept = row;
                    canonicalize(kept);
                    next.insert(std::move(kept));
                }
            }
            for (const Row* lo : lower) {
                for (const Row* up : upper) {
                    // combine so the v coefficient cancels; both scales positive
                    Rational a = lo->coeff[v];
                    Rational b = -up->coeff[v];
                    Row merged;
                    merged.coeff.resize(var_count_, Rational(0));
                    for (int t = 0; t < var_count_; ++t)
                        merged.coeff[t] = lo->coeff[t] * b + up->coeff[t] * a;
                    merged.constant = lo->constant * b + up->constant * a;
                    canonicalize(merged);
                    next.insert(std::move(merged));
                }
            }
            current.clear();
            for (const auto& row : next) {
                bool all_zero = std::all_of(row.coeff.begin(), row.coeff.end(),
                                            [](const Rational& c) { return c.is_zero(); });
                if (all_zero) {
                    if (row.constant.sgn() < 0)
                        return std::nullopt;
                    continue; // trivially true
                }
                current.push_back(row);
            }
        }
        for (const auto& row : current)
            if (row.constant.sgn() < 0)
                return std::nullopt;

        // Back-substitute in reverse elimination order, taking the tightest
        // lower bound when one exists (constraints are closed, so it's legal).
        std::vector<Rational> value(var_count_, Rational(0));
        for (int v = var_count_ - 1; v >= 0; --v) {
            std::optional<Rational> lo, hi;
            for (const auto& row : stages[v]) {
                if (row.coeff[v].is_zero())
                    continue;
                Rational rest = row.constant;
                for (int t = v + 1; t < var_count_; ++t)
                    rest += row.coeff[t] * value[t];
                Rational bound = -rest / row.coeff[v];
                if (row.coeff[v].sgn() > 0) {
                    if (!lo || bound > *lo)
                        lo = bound;
                } else {
                    if (!hi || bound < *hi)
                        hi = bound;
                }
            }
            if (lo)
                value[v] = *lo;
            else if (hi)
                value[v] = *hi;
        }
        return value;
    }

private:
    int var_count_;
    std::vector<Row> rows_;
};

void require_matching(const Profile& profile, const Assignment& assignment) {
    if (static_cast<int>(assignment.owners().size()) != profile.object_count())
        fail(Errc::InvalidAssignment, "assignment does not match the profile's object set");
    for (int a : assignment.owners())
        if (a < 0 || a >= profile.agent_count())
            fail(Errc::InvalidAssignment, "assignment owner out of range");
}

AgentVerdict share_verdict(const Profile& profile, const std::vector<int>& bundle, int agent,
                           const Rational& share, bool weak) {
    AgentVerdict v;
    PrefixCounts pc = prefix_counts(profile, agent, bundle);
    if (weak) {
        // weak form: fine unless the reference strictly SD-dominates
        SdOrdering ord = sd_vs_share(profile, agent, bundle, share);
        if (ord == SdOrdering::SecondStrict) {
            v.ok = false;
            for (std::size_t l = 0; l < pc.counts.size(); ++l)
                if (Rational(pc.counts[l]) < share * Rational(pc.sizes[l])) {
                    v.violated_prefix = static_cast<int>(l) + 1;
                    break;
                }
        }
    } else {
        for (std::size_t l = 0; l < pc.counts.size(); ++l) {
            if (Rational(pc.counts[l]) < share * Rational(pc.sizes[l])) {
                v.ok = false;
                v.violated_prefix = static_cast<int>(l) + 1;
                break;
            }
        }
    }
    return v;
}

} // namespace

std::optional<std::vector<Rational>> possible_ef_witness(const Profile& profile,
                                                         const Assignment& assignment, int agent) {
    require_matching(profile, assignment);
    int n = profile.agent_count();
    int k = profile.class_count(agent);
    if (k == 0)
        return std::vector<Rational>{};

    auto bundles = assignment.bundles(n);
    std::vector<std::vector<int>> counts(n, std::vector<int>(k, 0));
    for (int j = 0; j < n; ++j)
        for (int o : bundles[j])
            counts[j][profile.class_of(agent, o)] += 1;

    FourierMotzkin fm(k);
    for (int t = 0; t + 1 < k; ++t) {
        Row chain;
        chain.coeff.assign(k, Rational(0));
        chain.coeff[t] = Rational(1);
        chain.coeff[t + 1] = Rational(-1);
        chain.constant = Rational(-1);
        fm.add(std::move(chain));
    }
    Row last;
    last.coeff.assign(k, Rational(0));
    last.coeff[k - 1] = Rational(1);
    last.constant = Rational(-1);
    fm.add(std::move(last));
    for (int j = 0; j < n; ++j) {
        if (j == agent)
            continue;
        Row envy;
        envy.coeff.assign(k, Rational(0));
        envy.constant = Rational(0);
        for (int t = 0; t < k; ++t)
            envy.coeff[t] = Rational(counts[agent][t] - counts[j][t]);
        fm.add(std::move(envy));
    }

    auto solution = fm.solve();
    if (!solution)
        return std::nullopt;

    // Substitution check before the witness leaves this function.
    for (int t = 0; t + 1 < k; ++t)
        if (!((*solution)[t] > (*solution)[t + 1]))
            fail(Errc::InvalidParams, "witness chain check failed");
    if (!((*solution)[k - 1] > Rational(0)))
        fail(Errc::InvalidParams, "witness positivity check failed");
    for (int j = 0; j < n; ++j) {
        if (j == agent)
            continue;
        Rational diff(0);
        for (int t = 0; t < k; ++t)
            diff += (*solution)[t] * Rational(counts[agent][t] - counts[j][t]);
        if (diff.sgn() < 0)
            fail(Errc::InvalidParams, "witness envy check failed");
    }
    return solution;
}

Verdict verify(const Profile& profile, const Assignment& assignment, const FairnessNotion& notion) {
    require_matching(profile, assignment);
    int n = profile.agent_count();
    auto bundles = assignment.bundles(n);

    Verdict verdict;
    verdict.agents.resize(n);

    switch (notion.tag()) {
    case NotionTag::SdProp:
    case NotionTag::AlphaProp: {
        auto shares = notion.shares(profile);
        for (int i = 0; i < n; ++i)
            verdict.agents[i] = share_verdict(profile, bundles[i], i, shares[i], false);
        break;
    }
    case NotionTag::WeakSdProp:
    case NotionTag::BetaWeakProp: {
        auto shares = notion.shares(profile);
        for (int i = 0; i < n; ++i)
            verdict.agents[i] = share_verdict(profile, bundles[i], i, shares[i], true);
        break;
    }
    case NotionTag::SdEf: {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n && verdict.agents[i].ok; ++j) {
                if (i == j)
                    continue;
                if (!weakly_dominates(sd_compare(profile, i, bundles[i], bundles[j]))) {
                    verdict.agents[i].ok = false;
                    verdict.agents[i].envied_agent = j;
                }
            }
        }
        break;
    }
    case NotionTag::WeakSdEf: {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n && verdict.agents[i].ok; ++j) {
                if (i == j)
                    continue;
                if (sd_compare(profile, i, bundles[j], bundles[i]) == SdOrdering::FirstStrict) {
                    verdict.agents[i].ok = false;
                    verdict.agents[i].envied_agent = j;
                }
            }
        }
        break;
    }
    case NotionTag::PossibleEf: {
        for (int i = 0; i < n; ++i) {
            auto witness = possible_ef_witness(profile, assignment, i);
            if (witness) {
                verdict.agents[i].witness = std::move(*witness);
            } else {
                verdict.agents[i].ok = false;
            }
        }
        break;
    }
    }

    for (const auto& a : verdict.agents)
        verdict.satisfied = verdict.satisfied && a.ok;
    return verdict;
}

} // namespace fairdiv
