#pragma once

#include <functional>

#include "axiomlab/json_io.hpp"

namespace axiomlab {

/// A named voting rule: a total, deterministic evaluator from profiles over
/// its home domain to alternatives, plus the axiom verdicts it is expected to
/// produce (used by the independence matrix).
struct Rule {
    std::string name;
    DomainKind home = DomainKind::AllSubsetOrders;
    bool tops_only = false;
    std::function<Alt(const Domain&, const Profile&)> eval;
    // axiom name -> expected verdict (true = satisfies); empty if unspecified
    std::map<std::string, bool> expected;

    Alt operator()(const Domain& d, const Profile& pn) const { return eval(d, pn); }
};

namespace rules {

/// Constant rule: always the whole set of objects.
inline Alt const_all(const Domain& d, const Profile&) { return d.full_set(); }

/// Voters whose second choice is the full set and whose top is not: if they
/// all share one top, pick it; otherwise pick the full set.
inline Alt tilde(const Domain& d, const Profile& pn) {
    const Alt full = d.full_set();
    Alt shared_top = -1;
    bool consistent = true;
    for (const auto& [id, p] : pn.voters()) {
        if (p.top() == full || p.rank(full) != 1) continue;  // not in O-tilde
        if (shared_top == -1)
            shared_top = p.top();
        else if (shared_top != p.top())
            consistent = false;
    }
    if (shared_top != -1 && consistent) return shared_top;
    return full;
}

/// Top of the voter with the least id.
inline Alt min_index(const Domain&, const Profile& pn) {
    return pn.voters().begin()->second.top();
}

/// Objects appearing in exactly one of the distinct top sets present.
/// Counting distinct tops (not voters) makes the rule immune to ballot
/// duplication: clones of an existing voter change nothing, so false-name
/// deviations are outcome-neutral.
inline Alt unique_top(const Domain& d, const Profile& pn) {
    std::set<Alt> tops;
    for (const auto& [id, p] : pn.voters()) tops.insert(p.top());
    Alt out = 0;
    for (int x = 0; x < d.objects(); ++x) {
        int count = 0;
        for (Alt t : tops)
            if (t & (1 << x)) ++count;
        if (count == 1) out |= 1 << x;
    }
    return out;
}

/// Voter-counted variant: objects in exactly one voter's top, duplicates
/// counted. Not false-name-proof: a voter whose top objects are chosen can
/// clone themselves to push those objects over the count and may strictly
/// prefer the reduced outcome under a non-separable preference.
inline Alt unique_top_voters(const Domain& d, const Profile& pn) {
    Alt out = 0;
    for (int x = 0; x < d.objects(); ++x) {
        int count = 0;
        for (const auto& [id, p] : pn.voters())
            if (p.top() & (1 << x)) ++count;
        if (count == 1) out |= 1 << x;
    }
    return out;
}

/// Default order for f_succ: larger sets first, lexicographic within a size.
inline std::vector<Alt> default_subset_order(int alt_count) {
    std::vector<Alt> order(alt_count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [](Alt a, Alt b) {
        int pa = popcount_mask(a), pb = popcount_mask(b);
        if (pa != pb) return pa > pb;
        return a < b;
    });
    return order;
}

/// The best-positioned top according to a fixed linear order (best first).
inline Alt order_max(const std::vector<Alt>& succ, const Profile& pn) {
    std::vector<int> pos(succ.size());
    for (int i = 0; i < static_cast<int>(succ.size()); ++i) pos[succ[i]] = i;
    Alt best = -1;
    for (const auto& [id, p] : pn.voters())
        if (best == -1 || pos[p.top()] < pos[best]) best = p.top();
    return best;
}

namespace detail {
inline std::set<Alt> distinct_tops(const Profile& pn) {
    std::set<Alt> tops;
    for (const auto& [id, p] : pn.voters()) tops.insert(p.top());
    return tops;
}
}  // namespace detail

/// x chosen iff it lies in strictly more than half of the distinct tops.
/// Duplicated ballots collapse: only the collection of different tops counts.
inline Alt strict_majority_tops(const Domain& d, const Profile& pn) {
    const std::set<Alt> tops = detail::distinct_tops(pn);
    const int n = static_cast<int>(tops.size());
    Alt out = 0;
    for (int x = 0; x < d.objects(); ++x) {
        int count = 0;
        for (Alt t : tops)
            if (t & (1 << x)) ++count;
        if (2 * count > n) out |= 1 << x;
    }
    return out;
}

/// Weak variant: at least half of the distinct tops.
inline Alt weak_majority_tops(const Domain& d, const Profile& pn) {
    const std::set<Alt> tops = detail::distinct_tops(pn);
    const int n = static_cast<int>(tops.size());
    Alt out = 0;
    for (int x = 0; x < d.objects(); ++x) {
        int count = 0;
        for (Alt t : tops)
            if (t & (1 << x)) ++count;
        if (2 * count >= n) out |= 1 << x;
    }
    return out;
}

enum class Quota { One, Unanimous };

/// Voting by quota: an object enters the outcome iff it has at least one vote
/// (union of tops) or a unanimous vote (intersection of tops).
inline Alt quota(const Domain& d, const Profile& pn, Quota q) {
    Alt out = 0;
    for (int x = 0; x < d.objects(); ++x) {
        int count = 0;
        for (const auto& [id, p] : pn.voters())
            if (p.top() & (1 << x)) ++count;
        const bool in = q == Quota::One ? count >= 1 : count == pn.society_size();
        if (in) out |= 1 << x;
    }
    return out;
}

/// Voter 1's top whenever voter 1 is present, otherwise a status-quo
/// alternative (alternative 0). Participation holds; anonymity does not.
inline Alt remark1_top(const Domain&, const Profile& pn) {
    if (pn.has_voter(1)) return pn.preference(1).top();
    return 0;
}

/// Voter 1's bottom whenever voter 1 is present, otherwise the status quo.
/// False-name-proof (nothing is worse than the bottom) but not anonymous.
inline Alt remark1_bottom(const Domain&, const Profile& pn) {
    if (pn.has_voter(1)) return pn.preference(1).bottom();
    return 0;
}

}  // namespace rules

/// Tops-only extension of a base rule to a larger domain: evaluate the base
/// rule on the canonical separable representative profile sharing all tops.
/// The result does not depend on the representative choice (tested, not
/// assumed).
inline Rule tops_only_extension(const Rule& base) {
    Rule ext = base;
    ext.name = "ext:" + base.name;
    ext.home = DomainKind::SeparablePlusOne;
    auto base_eval = base.eval;
    ext.eval = [base_eval](const Domain& d, const Profile& pn) {
        std::map<int, Preference> reps;
        for (const auto& [id, p] : pn.voters())
            reps.emplace(id, canonical_separable(p.top(), d.objects()));
        return base_eval(d, Profile(std::move(reps)));
    };
    return ext;
}

/// The rule registry for one domain. Expected-axiom vectors follow the
/// independence layout: each of the five matrix rules fails exactly one axiom.
inline std::map<std::string, Rule> make_rule_registry(const Domain& d) {
    std::map<std::string, Rule> reg;
    auto add = [&](Rule r) { reg.emplace(r.name, std::move(r)); };

    auto expect_all_but = [](const std::string& failing) {
        std::map<std::string, bool> e;
        for (const char* ax :
             {"ontoness", "tops_onliness", "fnp", "participation", "object_neutrality"})
            e[ax] = ax != failing;
        return e;
    };

    if (d.subsets_mode()) {
        add({"f_const", DomainKind::AllSubsetOrders, true, rules::const_all,
             expect_all_but("ontoness")});
        add({"f_tilde", DomainKind::AllSubsetOrders, false, rules::tilde,
             expect_all_but("tops_onliness")});
        add({"f_min", DomainKind::AllSubsetOrders, true, rules::min_index,
             expect_all_but("fnp")});
        add({"f_star", DomainKind::AllSubsetOrders, true, rules::unique_top,
             expect_all_but("participation")});
        add({"f_star_voters", DomainKind::AllSubsetOrders, true, rules::unique_top_voters, {}});
        const std::vector<Alt> succ = rules::default_subset_order(d.alt_count());
        add({"f_succ", DomainKind::AllSubsetOrders, true,
             [succ](const Domain&, const Profile& pn) { return rules::order_max(succ, pn); },
             expect_all_but("object_neutrality")});
        add({"f_gt", DomainKind::Separable, true, rules::strict_majority_tops, {}});
        add({"f_geq", DomainKind::Separable, true, rules::weak_majority_tops, {}});
        add({"quota1", DomainKind::Separable, true,
             [](const Domain& dd, const Profile& pn) {
                 return rules::quota(dd, pn, rules::Quota::One);
             },
             {}});
        add({"quota_unanimous", DomainKind::Separable, true,
             [](const Domain& dd, const Profile& pn) {
                 return rules::quota(dd, pn, rules::Quota::Unanimous);
             },
             {}});
        add(tops_only_extension(reg.at("f_gt")));
        add(tops_only_extension(reg.at("f_geq")));
    } else {
        add({"f_min", DomainKind::Universal, true, rules::min_index, {}});
    }
    add({"r1_top", d.kind(), true, rules::remark1_top, {}});
    add({"r1_bottom", d.kind(), false, rules::remark1_bottom, {}});
    return reg;
}

/// JSON descriptor of a rule (name, domain, parameters).
inline json rule_descriptor(const Rule& r) {
    json j;
    j["name"] = r.name;
    j["domain"] = to_string(r.home);
    j["tops_only"] = r.tops_only;
    return j;
}

}  // namespace axiomlab
