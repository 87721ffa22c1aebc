#pragma once

#include <array>

#include "axiomlab/csp.hpp"

namespace axiomlab {

/// Outcome of one theorem-level verification job. Reports are reproducible:
/// identical inputs yield identical JSON apart from the wall-time field.
struct VerdictReport {
    std::string theorem;
    std::string outcome;  // confirmed | refuted | inconclusive | precondition-not-met
    json params;
    json artifacts;
    long long wall_ms = 0;

    json to_json() const {
        return json{{"schema", "axiomlab.verdict/1"}, {"theorem", theorem},
                    {"params", params},              {"outcome", outcome},
                    {"artifacts", artifacts},        {"wall_ms", wall_ms}};
    }

    int exit_code() const {
        if (outcome == "confirmed") return 0;
        if (outcome == "refuted") return 1;
        return 2;
    }
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// Duplicate-vote invariance: adding a fresh voter who clones any existing
/// preference never changes the outcome, for rules that are false-name-proof
/// and satisfy participation within bounds.
inline VerdictReport verify_lemma1(const Rule& rule, AxiomChecker& checker) {
    detail::Stopwatch sw;
    VerdictReport rep;
    rep.theorem = "lemma1";
    rep.params = {{"rule", rule.name}, {"bounds", checker.bounds_json(false)}};
    const CheckResult fnp = checker.check_fnp(rule);
    const CheckResult part = checker.check_participation(rule);
    if (!fnp.pass || !part.pass) {
        rep.outcome = "precondition-not-met";
        rep.artifacts = {{"fnp_pass", fnp.pass}, {"participation_pass", part.pass}};
        if (!fnp.pass) rep.artifacts["fnp_witness"] = fnp.witness;
        if (!part.pass) rep.artifacts["participation_witness"] = part.witness;
        rep.wall_ms = sw.ms();
        return rep;
    }
    const bool collapse = checker.anonymous(rule);
    json violation;
    long long cases = 0;
    checker.for_each_profile(collapse, [&](const Profile& pn) {
        int fresh = 1;
        while (pn.has_voter(fresh)) ++fresh;
        const Alt before = rule(checker.domain(), pn);
        for (const auto& [i, pi] : pn.voters()) {
            ++cases;
            const Profile extended = pn.with_voter(fresh, pi);
            const Alt after = rule(checker.domain(), extended);
            if (after != before) {
                violation = json{{"profile", profile_to_json(checker.domain(), pn)},
                                 {"cloned_voter", i},
                                 {"fresh_id", fresh},
                                 {"output_before", alt_to_json(checker.domain(), before)},
                                 {"output_after", alt_to_json(checker.domain(), after)}};
                return true;
            }
        }
        return false;
    });
    rep.outcome = violation.is_null() ? "confirmed" : "refuted";
    rep.artifacts = {{"cases_checked", cases}};
    if (!violation.is_null()) rep.artifacts["violation"] = violation;
    rep.wall_ms = sw.ms();
    return rep;
}

/// Identity-swap invariance: replacing a voter by a fresh id with the same
/// preference never changes the outcome, under the same preconditions.
inline VerdictReport verify_prop1(const Rule& rule, AxiomChecker& checker) {
    detail::Stopwatch sw;
    VerdictReport rep;
    rep.theorem = "prop1";
    rep.params = {{"rule", rule.name}, {"bounds", checker.bounds_json(false)}};
    const CheckResult fnp = checker.check_fnp(rule);
    const CheckResult part = checker.check_participation(rule);
    if (!fnp.pass || !part.pass) {
        rep.outcome = "precondition-not-met";
        rep.artifacts = {{"fnp_pass", fnp.pass}, {"participation_pass", part.pass}};
        rep.wall_ms = sw.ms();
        return rep;
    }
    const bool collapse = checker.anonymous(rule);
    json violation;
    long long cases = 0;
    checker.for_each_profile(collapse, [&](const Profile& pn) {
        int fresh = 1;
        while (pn.has_voter(fresh)) ++fresh;
        const Alt before = rule(checker.domain(), pn);
        for (const auto& [i, pi] : pn.voters()) {
            ++cases;
            Profile swapped = pn.with_voter(fresh, pi);
            if (swapped.society_size() >= 2) swapped = swapped.without_voter(i);
            const Alt after = rule(checker.domain(), swapped);
            if (after != before) {
                violation = json{{"profile", profile_to_json(checker.domain(), pn)},
                                 {"replaced_voter", i},
                                 {"fresh_id", fresh},
                                 {"output_before", alt_to_json(checker.domain(), before)},
                                 {"output_after", alt_to_json(checker.domain(), after)}};
                return true;
            }
        }
        return false;
    });
    rep.outcome = violation.is_null() ? "confirmed" : "refuted";
    rep.artifacts = {{"cases_checked", cases}};
    if (!violation.is_null()) rep.artifacts["violation"] = violation;
    rep.wall_ms = sw.ms();
    return rep;
}

/// Proposition 2 at desk scale.
/// Part (a): catalog sweep — every registered rule passing FNP and
/// participation also passes anonymity at the same bounds.
/// Part (b): exhaustive scan of all 256 rule tables at |A|=2 with ids {1,2}:
/// none passes FNP and participation while failing anonymity.
inline VerdictReport verify_prop2(const Domain& domain, const CheckBounds& bounds) {
    detail::Stopwatch sw;
    VerdictReport rep;
    rep.theorem = "prop2";
    rep.params = {{"domain", to_string(domain.kind())},
                  {"alt_count", domain.alt_count()},
                  {"n_max", bounds.n_max},
                  {"np_max", bounds.np_max}};

    AxiomChecker checker(domain, bounds);
    json sweep = json::array();
    bool ok = true;
    for (const auto& [name, rule] : make_rule_registry(domain)) {
        const bool fnp = checker.check_fnp(rule).pass;
        const bool part = checker.check_participation(rule).pass;
        const bool anon = checker.check_anonymity(rule).pass;
        const bool consistent = !(fnp && part) || anon;
        sweep.push_back({{"rule", name},
                         {"fnp", fnp},
                         {"participation", part},
                         {"anonymity", anon},
                         {"consistent", consistent}});
        ok = ok && consistent;
    }

    // Part (b), first pass: the 2-alternative, two-id rule space. Profiles:
    //   0,1: society {1} with preference 0/1     (preference 0: A > B)
    //   2,3: society {2} with preference 0/1
    //   4..7: society {1,2}, index 4 + 2*p1 + p2
    // This pool is provably too weak: no bounded FNP or participation
    // instance relates a mixed pair profile to its voter swap, so the two
    // "follow the larger id on pairs" tables slip through. The scan reports
    // them; the adequate pool below is the oracle.
    auto pair_idx = [](int p1, int p2) { return 4 + 2 * p1 + p2; };
    int violators2 = 0, fnp_part_count = 0;
    for (int table = 0; table < 256; ++table) {
        auto f = [&](int profile) { return (table >> profile) & 1; };
        // prefers(p, a, b): under preference index p (whose top is alternative
        // p), is a strictly above b?
        auto prefers = [](int p, int a, int b) { return a != b && a == p; };
        bool fnp = true, part = true, anon = true;
        for (int p = 0; p < 2; ++p) {
            // voter 1 (or 2) alone, cloning themselves under the other id
            if (prefers(p, f(pair_idx(p, p)), f(p))) fnp = false;
            if (prefers(p, f(pair_idx(p, p)), f(2 + p))) fnp = false;
            if (f(p) != f(2 + p)) anon = false;
            for (int q = 0; q < 2; ++q) {
                if (f(pair_idx(p, q)) != f(pair_idx(q, p))) anon = false;
                // abstention of voter 1 (holding p) and of voter 2 (holding q)
                if (prefers(p, f(2 + q), f(pair_idx(p, q)))) part = false;
                if (prefers(q, f(p), f(pair_idx(p, q)))) part = false;
            }
        }
        if (fnp && part) {
            ++fnp_part_count;
            if (!anon) ++violators2;
        }
    }

    // Part (b), adequate pool: ids {1,2,3}, societies up to size 3. Here the
    // identity-swap chains are representable (any pair swap routes through
    // the third id), and with two preferences every three-voter profile
    // repeats a preference, tying it to a pair profile. Profile indexing:
    //   0..5:   singleton {i} with preference p   -> 2*(i-1) + p
    //   6..17:  pairs {1,2},{1,3},{2,3}           -> 6 + 4*s + 2*p_lo + p_hi
    //   18..25: triple {1,2,3}                    -> 18 + 4*p1 + 2*p2 + p3
    auto single3 = [](int i, int p) { return 2 * i + p; };  // i in 0..2
    auto pair3 = [](int s, int plo, int phi) { return 6 + 4 * s + 2 * plo + phi; };
    auto triple3 = [](int p1, int p2, int p3) { return 18 + 4 * p1 + 2 * p2 + p3; };
    const int pair_society[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    // precompute constraint instances as (pref, after_idx, before_idx)
    std::vector<std::array<int, 3>> weak_pref;  // require NOT prefers(p, after, before)
    for (int i = 0; i < 3; ++i) {
        for (int p = 0; p < 2; ++p) {
            for (int s = 0; s < 3; ++s) {
                const int a = pair_society[s][0], b = pair_society[s][1];
                if (a != i && b != i) continue;
                // FNP: {i} holding p, clone under the other id of this pair
                weak_pref.push_back({p, pair3(s, p, p), single3(i, p)});
            }
        }
    }
    for (int s = 0; s < 3; ++s) {
        const int a = pair_society[s][0], b = pair_society[s][1];
        const int c = 3 - a - b;  // the id outside the pair
        for (int pa = 0; pa < 2; ++pa) {
            for (int pb = 0; pb < 2; ++pb) {
                int tp[3];
                tp[a] = pa, tp[b] = pb;
                // FNP: either pair voter clones under the third id
                tp[c] = pa;
                weak_pref.push_back({pa, triple3(tp[0], tp[1], tp[2]), pair3(s, pa, pb)});
                tp[c] = pb;
                weak_pref.push_back({pb, triple3(tp[0], tp[1], tp[2]), pair3(s, pa, pb)});
                // participation: either pair voter abstains
                weak_pref.push_back({pa, single3(b, pb), pair3(s, pa, pb)});
                weak_pref.push_back({pb, single3(a, pa), pair3(s, pa, pb)});
            }
        }
    }
    for (int p1 = 0; p1 < 2; ++p1)
        for (int p2 = 0; p2 < 2; ++p2)
            for (int p3 = 0; p3 < 2; ++p3) {
                // participation: each triple voter abstains to a pair
                const int t = triple3(p1, p2, p3);
                weak_pref.push_back({p1, pair3(2, p2, p3), t});
                weak_pref.push_back({p2, pair3(1, p1, p3), t});
                weak_pref.push_back({p3, pair3(0, p1, p2), t});
            }
    // anonymity: output equality under each transposition of ids
    std::vector<std::array<int, 2>> equal_pairs;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            for (int p = 0; p < 2; ++p) equal_pairs.push_back({single3(a, p), single3(b, p)});
            for (int s = 0; s < 3; ++s) {
                for (int pa = 0; pa < 2; ++pa)
                    for (int pb = 0; pb < 2; ++pb) {
                        int holder[3] = {-1, -1, -1};
                        holder[pair_society[s][0]] = pa;
                        holder[pair_society[s][1]] = pb;
                        std::swap(holder[a], holder[b]);
                        int img[3] = {-1, -1, -1}, k = 0;
                        int ids[2];
                        for (int i = 0; i < 3; ++i)
                            if (holder[i] >= 0) ids[k++] = i;
                        img[0] = holder[ids[0]], img[1] = holder[ids[1]];
                        int s2 = 0;
                        while (pair_society[s2][0] != ids[0] || pair_society[s2][1] != ids[1])
                            ++s2;
                        equal_pairs.push_back({pair3(s, pa, pb), pair3(s2, img[0], img[1])});
                    }
            }
            for (int p1 = 0; p1 < 2; ++p1)
                for (int p2 = 0; p2 < 2; ++p2)
                    for (int p3 = 0; p3 < 2; ++p3) {
                        int holder[3] = {p1, p2, p3};
                        std::swap(holder[a], holder[b]);
                        equal_pairs.push_back(
                            {triple3(p1, p2, p3), triple3(holder[0], holder[1], holder[2])});
                    }
        }
    long long violators3 = 0, fnp_part_count3 = 0;
    for (long long table = 0; table < (1LL << 26); ++table) {
        bool feasible = true;
        for (const auto& [p, after, before] : weak_pref) {
            const int fa = (table >> after) & 1, fb = (table >> before) & 1;
            if (fa != fb && fa == p) {  // the mover strictly gains
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;
        ++fnp_part_count3;
        for (const auto& [u, v] : equal_pairs) {
            if (((table >> u) & 1) != ((table >> v) & 1)) {
                ++violators3;
                break;
            }
        }
    }

    rep.artifacts = {{"catalog_sweep", sweep},
                     {"two_id_scan",
                      {{"rule_space_size", 256},
                       {"rules_passing_fnp_and_participation", fnp_part_count},
                       {"anonymity_violators", violators2},
                       {"note", "two ids cannot express the identity-swap chain; "
                                "violators here are expected and resolved below"}}},
                     {"three_id_scan",
                      {{"rule_space_size", 1LL << 26},
                       {"rules_passing_fnp_and_participation", fnp_part_count3},
                       {"anonymity_violators", violators3}}}};
    rep.outcome = (ok && violators3 == 0) ? "confirmed" : "refuted";
    rep.wall_ms = sw.ms();
    return rep;
}

/// Can alt_count be written as a sum of divisors of n other than 1?
/// (The classical fixed-population compatibility criterion for anonymity plus
/// neutrality: compatibility holds iff it cannot.)
inline bool divisor_sum_representable(int alt_count, int n) {
    std::vector<int> divisors;
    for (int d = 2; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    std::vector<bool> reach(alt_count + 1, false);
    reach[0] = true;
    for (int v = 1; v <= alt_count; ++v)
        for (int d : divisors)
            if (d <= v && reach[v - d]) reach[v] = true;
    return reach[alt_count];
}

/// Fixed-society compatibility of anonymity and neutrality, decided by
/// exhaustive scan (small rule spaces) or by search over anonymous rule
/// classes with neutrality orbit constraints, then cross-checked against the
/// divisor-sum criterion.
inline VerdictReport verify_remark2(int alt_count, int n) {
    detail::Stopwatch sw;
    VerdictReport rep;
    rep.theorem = "remark2";
    rep.params = {{"alt_count", alt_count}, {"n", n}};

    const std::vector<Preference> prefs = enumerate_linear_orders(alt_count);
    const int pref_count = static_cast<int>(prefs.size());
    const auto gammas = detail::all_permutations(alt_count);

    long long profile_count = 1;
    for (int i = 0; i < n; ++i) profile_count *= pref_count;

    bool compatible = false;
    json how;
    long long rule_count = 1;  // alt_count ^ profile_count, capped
    for (long long i = 0; i < profile_count && rule_count <= 65536; ++i)
        rule_count *= alt_count;
    if (rule_count <= 65536) {
        // scan every function from profiles to alternatives
        auto profile_index = [&](const std::vector<int>& assignment) {
            long long idx = 0;
            for (int a : assignment) idx = idx * pref_count + a;
            return idx;
        };
        const auto sigmas = detail::all_permutations(n);
        long long passing = 0;
        for (long long table = 0; table < rule_count; ++table) {
            auto f = [&](long long profile) {
                long long v = table;
                for (long long k = 0; k < profile; ++k) v /= alt_count;
                return static_cast<int>(v % alt_count);
            };
            bool anon = true, neutral = true;
            detail::pref_assignments(n, pref_count, false, [&](const std::vector<int>& asg) {
                const int out = f(profile_index(asg));
                for (const auto& sigma : sigmas) {
                    std::vector<int> relabeled(n);
                    for (int i = 0; i < n; ++i) relabeled[i] = asg[sigma[i]];
                    if (f(profile_index(relabeled)) != out) anon = false;
                }
                for (const auto& gamma : gammas) {
                    std::vector<Alt> g(gamma.begin(), gamma.end());
                    std::vector<int> image(n);
                    for (int i = 0; i < n; ++i) {
                        const Preference mapped = permute_alternatives(prefs[asg[i]], g);
                        image[i] = static_cast<int>(
                            std::find(prefs.begin(), prefs.end(), mapped) - prefs.begin());
                    }
                    if (f(profile_index(image)) != g[out]) neutral = false;
                }
                return !(anon || neutral);
            });
            if (anon && neutral) ++passing;
        }
        compatible = passing > 0;
        how = {{"method", "scan"}, {"rules_scanned", rule_count}, {"rules_passing_both", passing}};
    } else {
        // anonymous classes (preference multisets) with neutrality orbit arcs
        std::vector<std::vector<int>> keys;
        std::map<std::vector<int>, int> index;
        detail::pref_assignments(n, pref_count, true, [&](const std::vector<int>& m) {
            index.emplace(m, static_cast<int>(keys.size()));
            keys.push_back(m);
            return false;
        });
        CspSolver solver(static_cast<int>(keys.size()), alt_count);
        for (int u = 0; u < static_cast<int>(keys.size()); ++u) {
            for (const auto& gamma : gammas) {
                std::vector<Alt> g(gamma.begin(), gamma.end());
                std::vector<int> image;
                for (int pi : keys[u]) {
                    const Preference mapped = permute_alternatives(prefs[pi], g);
                    image.push_back(static_cast<int>(
                        std::find(prefs.begin(), prefs.end(), mapped) - prefs.begin()));
                }
                std::sort(image.begin(), image.end());
                solver.add_map_arc(u, index.at(image), std::vector<int>(g.begin(), g.end()));
            }
        }
        const CspSolver::Result res = solver.solve();
        compatible = res.status == CspSolver::Status::Sat;
        how = {{"method", "orbit-search"},
               {"classes", keys.size()},
               {"nodes", res.nodes}};
        if (res.status == CspSolver::Status::Budget) {
            rep.outcome = "inconclusive";
            rep.artifacts = how;
            rep.wall_ms = sw.ms();
            return rep;
        }
    }

    const bool predicted_compatible = !divisor_sum_representable(alt_count, n);
    rep.artifacts = {{"compatible", compatible},
                     {"divisor_criterion_compatible", predicted_compatible},
                     {"criteria_agree", compatible == predicted_compatible},
                     {"detail", how}};
    rep.outcome = compatible == predicted_compatible ? "confirmed" : "refuted";
    rep.wall_ms = sw.ms();
    return rep;
}

namespace detail {

inline json recheck_table_rule(const RuleSpaceCsp& csp, const Rule& table_rule, int depth,
                               bool& all_pass) {
    const Domain domain = Domain::all_subset_orders(csp.objects);
    json rechecks = json::object();
    for (Family fam : {Family::Onto, Family::TopsOnly, Family::Fnp, Family::Participation,
                       Family::ObjectNeutrality}) {
        if (!csp.kept(fam)) continue;
        CheckBounds cb;
        cb.np_max = 1;
        cb.pref_mode = CheckBounds::PrefMode::Full;
        if (fam == Family::Fnp) {
            if (depth < 2) continue;  // clone additions would leave the table
            cb.n_max = depth - 1;
        } else {
            cb.n_max = depth;
        }
        AxiomChecker checker(domain, cb);
        const CheckResult res = checker.check(table_rule, to_string(fam));
        rechecks[to_string(fam)] = res.pass;
        all_pass = all_pass && res.pass;
    }
    return rechecks;
}

}  // namespace detail

/// Theorem 1 by bounded rule-space search with iterative deepening: the CSP
/// over anonymous tops-only rule tables must become UNSAT at some society
/// bound; dropping any one constraint family must stay SAT, with the found
/// table independently confirmed by the axiom checkers.
inline VerdictReport verify_theorem1(int objects = 2, int depth_start = 1, int depth_ceiling = 4,
                                     long long budget_seconds = 60) {
    detail::Stopwatch sw;
    VerdictReport rep;
    rep.theorem = "thm1";
    rep.params = {{"objects", objects},
                  {"depth_start", depth_start},
                  {"depth_ceiling", depth_ceiling},
                  {"budget_seconds", budget_seconds}};

    json deepening = json::array();
    int unsat_depth = -1;
    for (int depth = depth_start; depth <= depth_ceiling; ++depth) {
        RuleSpaceCsp csp = build_rule_space_csp(objects, depth, {});
        const CspSolver::Result res = csp.solver.solve();
        json step = {{"depth", depth}, {"variables", csp.keys.size()}, {"nodes", res.nodes}};
        if (res.status == CspSolver::Status::Budget || sw.ms() > budget_seconds * 1000) {
            step["status"] = "budget-exceeded";
            deepening.push_back(step);
            rep.outcome = "inconclusive";
            rep.artifacts = {{"deepening", deepening}};
            rep.wall_ms = sw.ms();
            return rep;
        }
        if (res.status == CspSolver::Status::Sat) {
            step["status"] = "sat";
            // materialize the witness table and confront it with the checkers
            const Rule witness = materialize_csp_rule(csp, res.assignment, "csp_witness");
            bool all_pass = true;
            step["recheck"] = detail::recheck_table_rule(csp, witness, depth, all_pass);
            step["recheck_pass"] = all_pass;
            deepening.push_back(step);
            if (!all_pass) {
                rep.outcome = "refuted";  // searcher and checker disagree
                rep.artifacts = {{"deepening", deepening}};
                rep.wall_ms = sw.ms();
                return rep;
            }
            continue;
        }
        step["status"] = "unsat";
        deepening.push_back(step);
        unsat_depth = depth;
        break;
    }

    if (unsat_depth < 0) {
        rep.outcome = "inconclusive";
        rep.artifacts = {{"deepening", deepening}};
        rep.wall_ms = sw.ms();
        return rep;
    }

    // independence at the CSP level: dropping any single family restores SAT
    const Domain domain = Domain::all_subset_orders(objects);
    const auto registry = make_rule_registry(domain);
    const std::map<Family, std::string> hint_rule = {
        {Family::Onto, "f_const"},
        {Family::TopsOnly, "f_tilde"},
        {Family::Fnp, "f_min"},
        {Family::Participation, "f_star"},
        {Family::ObjectNeutrality, "f_succ"}};
    json drops = json::array();
    bool drops_ok = true;
    for (const auto& [fam, hint_name] : hint_rule) {
        RuleSpaceCsp csp = build_rule_space_csp(objects, unsat_depth, {fam});
        csp.solver.set_hint(csp_hint_from_rule(csp, registry.at(hint_name)));
        const CspSolver::Result res = csp.solver.solve();
        json entry = {{"dropped", to_string(fam)},
                      {"variables", csp.keys.size()},
                      {"nodes", res.nodes}};
        if (res.status != CspSolver::Status::Sat) {
            entry["status"] = res.status == CspSolver::Status::Unsat ? "unsat" : "budget-exceeded";
            drops_ok = false;
        } else {
            entry["status"] = "sat";
            const Rule witness =
                materialize_csp_rule(csp, res.assignment, "csp_witness_drop_" + to_string(fam));
            bool all_pass = true;
            entry["recheck"] = detail::recheck_table_rule(csp, witness, unsat_depth, all_pass);
            entry["recheck_pass"] = all_pass;
            drops_ok = drops_ok && all_pass;
        }
        drops.push_back(entry);
    }

    rep.artifacts = {{"deepening", deepening},
                     {"unsat_depth", unsat_depth},
                     {"drop_one", drops}};
    rep.outcome = drops_ok ? "confirmed" : "refuted";
    rep.wall_ms = sw.ms();
    return rep;
}

namespace detail {

/// First (S, x) pair witnessing non-separability of the given kind.
/// kind 1: x in t(P) and S preferred to S u {x};
/// kind 2: x not in t(P) and S u {x} preferred to S.
inline std::optional<std::pair<Alt, int>> find_separability_break(const Preference& p,
                                                                 int objects, int kind) {
    const Alt top = p.top();
    for (Alt s = 0; s < (1 << objects); ++s) {
        for (int x = 0; x < objects; ++x) {
            if (s & (1 << x)) continue;
            const Alt sx = s | (1 << x);
            const bool x_in_top = top & (1 << x);
            if (kind == 1 && x_in_top && p.prefers(s, sx)) return std::make_pair(s, x);
            if (kind == 2 && !x_in_top && p.prefers(sx, s)) return std::make_pair(s, x);
        }
    }
    return std::nullopt;
}

inline int first_object_in(Alt mask, int objects) {
    for (int x = 0; x < objects; ++x)
        if (mask & (1 << x)) return x;
    throw std::logic_error("empty mask");
}

}  // namespace detail

/// Theorem 2 maximality at desk scale.
/// (a) positive part: the quota and tops-majority rules satisfy all five
///     axioms on the separable domain;
/// (b) constructive part: for each non-separable preference, the proof's
///     profiles break participation for the tops-only extension of the
///     strict or weak tops-majority rule;
/// (c) generic sweep: a construction-free participation check over each
///     enlarged domain cross-checks (b).
inline VerdictReport verify_theorem2(int objects, const CheckBounds& bounds) {
    detail::Stopwatch sw;
    VerdictReport rep;
    rep.theorem = "thm2";
    rep.params = {{"objects", objects}, {"n_max", bounds.n_max}, {"np_max", bounds.np_max}};

    const Domain sep = Domain::separable(objects);
    const auto registry = make_rule_registry(sep);

    // (a) positive part on the separable domain
    AxiomChecker sep_checker(sep, bounds);
    json positive = json::object();
    bool positive_ok = true;
    for (const std::string name : {"f_gt", "f_geq", "quota1", "quota_unanimous"}) {
        json row = json::object();
        for (const std::string ax :
             {"ontoness", "tops_onliness", "fnp", "participation", "object_neutrality"}) {
            const bool pass = sep_checker.check(registry.at(name), ax).pass;
            row[ax] = pass;
            positive_ok = positive_ok && pass;
        }
        positive[name] = row;
    }

    // (b) + (c) over every non-separable preference
    const Domain all = Domain::all_subset_orders(objects);
    const Alt full = all.full_set();
    json per_pref = json::array();
    bool constructive_ok = true, sweep_agrees = true;
    int nonseparable = 0;

    for (const Preference& p0 : all.enumerate()) {
        if (is_separable(p0, objects)) continue;
        ++nonseparable;
        const Alt top = p0.top();
        const auto sep1 = detail::find_separability_break(p0, objects, 1);
        const auto sep2 = detail::find_separability_break(p0, objects, 2);

        const Domain plus = Domain::separable_plus_one(objects, p0);
        json entry = {{"preference", preference_to_json(all, p0)},
                      {"top", alt_to_json(all, top)}};

        auto run_construction = [&](const std::string& rule_name,
                                    const std::vector<Alt>& tops, const char* label) {
            const Rule& ext = registry.at("ext:" + rule_name);
            std::map<int, Preference> by_voter;
            int id = 1;
            for (Alt t : tops) by_voter.emplace(id++, canonical_separable(t, objects));
            const Profile without(by_voter);
            const Profile with = without.with_voter(id, p0);
            const Alt out_without = ext(plus, without);
            const Alt out_with = ext(plus, with);
            const bool violated = p0.prefers(out_without, out_with);
            json tops_json = json::array();
            for (Alt t : tops) tops_json.push_back(alt_to_json(all, t));
            return json{{"rule", rule_name},
                        {"case", label},
                        {"tops", tops_json},
                        {"output_without", alt_to_json(all, out_without)},
                        {"output_with", alt_to_json(all, out_with)},
                        {"violated", violated}};
        };

        // strict-majority route, defined when the top is not the empty set
        if (top != 0) {
            json c;
            if (sep1) {
                const Alt s = sep1->first, x = 1 << sep1->second;
                c = run_construction("f_gt", {s, s | x}, "sep1");
            } else {
                const Alt s = sep2->first, x = 1 << sep2->second;
                if (top & ~s & ((1 << objects) - 1)) {
                    const int y = detail::first_object_in(top & ~s, objects);
                    c = run_construction("f_gt", {s, s | x, s | x | (1 << y)},
                                         "sep2-top-outside-S");
                } else {
                    const int y = detail::first_object_in(top, objects);
                    c = run_construction("f_gt", {s, s | x, (s & ~(1 << y)) | x},
                                         "sep2-top-inside-S");
                }
            }
            constructive_ok = constructive_ok && c["violated"].get<bool>();
            entry["f_gt_construction"] = c;
        }
        // weak-majority route, defined when the top is not the full set
        if (top != full) {
            json c;
            if (sep1) {
                const Alt s = sep1->first, x = 1 << sep1->second;
                if (s != 0) {
                    c = run_construction("f_geq", {s, s | x, 0}, "sep1-S-nonempty");
                } else {
                    int y = -1;
                    for (int o = 0; o < objects; ++o)
                        if (!(top & (1 << o))) { y = o; break; }
                    c = run_construction("f_geq", {0, x, 1 << y}, "sep1-S-empty");
                }
            } else {
                const Alt s = sep2->first, x = 1 << sep2->second;
                c = run_construction("f_geq", {s, s | x}, "sep2");
            }
            constructive_ok = constructive_ok && c["violated"].get<bool>();
            entry["f_geq_construction"] = c;
        }

        // (c) construction-free cross-check. The proof profiles use up to
        // three voters plus the joiner, so the sweep quantifies societies up
        // to size 4 regardless of the caller's bounds.
        CheckBounds sweep_bounds = bounds;
        sweep_bounds.n_max = std::max(bounds.n_max, 4);
        sweep_bounds.np_max = 1;
        AxiomChecker plus_checker(plus, sweep_bounds);
        for (const std::string rule_name : {"f_gt", "f_geq"}) {
            const CheckResult res =
                plus_checker.check_participation(registry.at("ext:" + rule_name));
            entry["sweep_" + rule_name + "_participation"] = res.pass ? "pass" : "fail";
            const std::string ckey = rule_name == "f_gt" ? "f_gt_construction"
                                                         : "f_geq_construction";
            if (entry.contains(ckey) && entry[ckey]["violated"].get<bool>() && res.pass)
                sweep_agrees = false;  // construction found a break the sweep missed
        }
        per_pref.push_back(entry);
    }

    rep.artifacts = {{"positive", positive},
                     {"nonseparable_count", nonseparable},
                     {"constructions", per_pref}};
    if (!constructive_ok)
        rep.artifacts["construction_failed"] =
            "a prescribed proof profile failed to violate participation";
    rep.outcome = (positive_ok && constructive_ok && sweep_agrees) ? "confirmed" : "refuted";
    rep.wall_ms = sw.ms();
    return rep;
}

/// The 5x5 independence matrix: each of the five example rules must fail
/// exactly its designated axiom and pass the other four, within bounds.
inline VerdictReport independence_matrix(int objects, const CheckBounds& bounds) {
    detail::Stopwatch sw;
    VerdictReport rep;
    rep.theorem = "independence";
    rep.params = {{"objects", objects}, {"n_max", bounds.n_max}, {"np_max", bounds.np_max}};

    const Domain domain = Domain::all_subset_orders(objects);
    const auto registry = make_rule_registry(domain);
    AxiomChecker checker(domain, bounds);

    json table = json::object();
    json mismatches = json::array();
    for (const std::string name : {"f_const", "f_tilde", "f_min", "f_star", "f_succ"}) {
        const Rule& rule = registry.at(name);
        json row = json::object();
        for (const std::string ax :
             {"ontoness", "tops_onliness", "fnp", "participation", "object_neutrality"}) {
            const CheckResult res = checker.check(rule, ax);
            row[ax] = res.pass;
            if (res.pass != rule.expected.at(ax))
                mismatches.push_back({{"rule", name},
                                      {"axiom", ax},
                                      {"expected", rule.expected.at(ax)},
                                      {"got", res.pass}});
        }
        table[name] = row;
    }
    rep.artifacts = {{"matrix", table}, {"mismatches", mismatches}};
    rep.outcome = mismatches.empty() ? "confirmed" : "refuted";
    rep.wall_ms = sw.ms();
    return rep;
}

}  // namespace axiomlab
