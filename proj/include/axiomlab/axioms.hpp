#pragma once

#include "axiomlab/json_io.hpp"
#include "axiomlab/rules.hpp"

namespace axiomlab {

/// Finite bounds for the axiom quantifiers. Societies range over subsets of
/// the id pool {1..n_max+np_max} of size at most n_max; false-name clone sets
/// have size at most np_max. Every report discloses the bounds used.
struct CheckBounds {
    int n_max = 3;
    int np_max = 2;
    long long enum_cap = default_enumeration_cap();

    enum class PrefMode { Auto, Full, Probe };
    PrefMode pref_mode = PrefMode::Auto;

    int pool_size() const { return n_max + np_max; }
};

/// Pass-within-bounds, or a self-contained counterexample witness.
struct CheckResult {
    bool pass = true;
    json witness;  // null on pass
    json bounds;   // the bounds actually used, for the report

    static CheckResult passed(json bounds) { return {true, json(), std::move(bounds)}; }
    static CheckResult failed(json witness, json bounds) {
        return {false, std::move(witness), std::move(bounds)};
    }
};

inline const std::vector<std::string>& axiom_names() {
    static const std::vector<std::string> names = {
        "ontoness",  "tops_onliness", "fnp",        "strong_fnp",
        "participation", "anonymity",     "neutrality", "object_neutrality"};
    return names;
}

namespace detail {

inline void subsets_of_size(const std::vector<int>& pool, int k,
                            const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > static_cast<int>(pool.size())) return;
    while (true) {
        std::vector<int> out(k);
        for (int i = 0; i < k; ++i) out[i] = pool[idx[i]];
        if (fn(out)) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// All assignments of preference indices to |society| slots; non-decreasing
/// sequences only when multiset_only (the anonymity collapse).
inline void pref_assignments(int slots, int pref_count, bool multiset_only,
                             const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> idx(slots, 0);
    while (true) {
        if (fn(idx)) return;
        int i = slots - 1;
        while (i >= 0) {
            if (idx[i] + 1 < pref_count) {
                ++idx[i];
                const int fill = multiset_only ? idx[i] : 0;
                for (int j = i + 1; j < slots; ++j) idx[j] = fill;
                break;
            }
            --i;
        }
        if (i < 0) return;
    }
}

inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace detail

/// Bounded exhaustive checker for the eight axioms against one domain.
/// All checks are pure given (rule, bounds); witnesses are first-in-canonical
/// -order, so results are fully reproducible.
class AxiomChecker {
public:
    AxiomChecker(Domain domain, CheckBounds bounds)
        : domain_(std::move(domain)), bounds_(bounds) {
        if (bounds_.n_max < 1 || bounds_.np_max < 1)
            throw std::invalid_argument("bounds must be positive");
        using PM = CheckBounds::PrefMode;
        PM mode = bounds_.pref_mode;
        if (mode == PM::Auto)
            mode = domain_.alt_count() <= 4 ? PM::Full : PM::Probe;
        probe_mode_ = mode == PM::Probe;
        prefs_ = probe_mode_ ? domain_.probe() : domain_.enumerate(bounds_.enum_cap);
        for (int i = 1; i <= bounds_.pool_size(); ++i) pool_.push_back(i);
    }

    const Domain& domain() const { return domain_; }
    const CheckBounds& bounds() const { return bounds_; }
    const std::vector<Preference>& prefs() const { return prefs_; }

    CheckResult check(const Rule& rule, const std::string& axiom) {
        if (axiom == "ontoness") return check_ontoness(rule);
        if (axiom == "tops_onliness") return check_tops_onliness(rule);
        if (axiom == "fnp") return check_fnp(rule);
        if (axiom == "strong_fnp") return check_strong_fnp(rule);
        if (axiom == "participation") return check_participation(rule);
        if (axiom == "anonymity") return check_anonymity(rule);
        if (axiom == "neutrality") return check_neutrality(rule);
        if (axiom == "object_neutrality") return check_object_neutrality(rule);
        throw std::invalid_argument("unknown axiom: " + axiom);
    }

    /// Invariance under voter relabeling. Checked against all transpositions
    /// of pool ids on every profile within bounds; these generate every
    /// permutation with support in the pool, and the profile set is closed
    /// under them, so transposition invariance is equivalent to full
    /// invariance within bounds.
    CheckResult check_anonymity(const Rule& rule) {
        json w;
        for_each_profile(false, [&](const Profile& pn) {
            const Alt before = rule(domain_, pn);
            for (size_t a = 0; a < pool_.size() && w.is_null(); ++a) {
                for (size_t b = a + 1; b < pool_.size(); ++b) {
                    const int i = pool_[a], j = pool_[b];
                    if (!pn.has_voter(i) && !pn.has_voter(j)) continue;
                    const Profile relabeled = permute_voters(pn, {{i, j}, {j, i}});
                    const Alt after = rule(domain_, relabeled);
                    if (after != before) {
                        w = witness_pair("anonymity", pn, relabeled, before, after);
                        w["permutation"] = {{"swap", {i, j}}};
                        break;
                    }
                }
            }
            return !w.is_null();
        });
        return finish(std::move(w), false);
    }

    CheckResult check_ontoness(const Rule& rule) {
        const bool collapse = anonymous(rule);
        json w;
        for_each_society(collapse, [&](const std::vector<int>& society) {
            std::vector<bool> attained(domain_.alt_count(), false);
            int remaining = domain_.alt_count();
            for_each_profile_on(society, collapse, [&](const Profile& pn) {
                const Alt out = rule(domain_, pn);
                if (!attained[out]) {
                    attained[out] = true;
                    --remaining;
                }
                return remaining == 0;
            });
            if (remaining > 0) {
                for (Alt a = 0; a < domain_.alt_count(); ++a) {
                    if (!attained[a]) {
                        w = json{{"kind", "ontoness"},
                                 {"society", society},
                                 {"unattained", alt_to_json(domain_, a)}};
                        break;
                    }
                }
            }
            return !w.is_null();
        });
        return finish(std::move(w), collapse);
    }

    CheckResult check_tops_onliness(const Rule& rule) {
        const bool collapse = anonymous(rule);
        json w;
        for_each_society(collapse, [&](const std::vector<int>& society) {
            // representative profile and output per tops vector
            std::map<std::vector<Alt>, std::pair<Profile, Alt>> seen;
            for_each_profile_on(society, collapse, [&](const Profile& pn) {
                std::vector<Alt> tops;
                for (const auto& [id, p] : pn.voters()) tops.push_back(p.top());
                if (collapse) std::sort(tops.begin(), tops.end());
                const Alt out = rule(domain_, pn);
                auto it = seen.find(tops);
                if (it == seen.end()) {
                    seen.emplace(std::move(tops), std::make_pair(pn, out));
                } else if (it->second.second != out) {
                    w = witness_pair("tops_onliness", it->second.first, pn,
                                     it->second.second, out);
                    return true;
                }
                return false;
            });
            return !w.is_null();
        });
        return finish(std::move(w), collapse);
    }

    CheckResult check_fnp(const Rule& rule) {
        const bool collapse = anonymous(rule);
        json w;
        for_each_profile(collapse, [&](const Profile& pn) {
            const Alt before = rule(domain_, pn);
            for (const auto& [i, pi] : pn.voters()) {
                for_each_clone_set(pn, collapse, [&](const std::vector<int>& clones) {
                    Profile extended = pn;
                    for (int c : clones) extended = extended.with_voter(c, pi);
                    const Alt after = rule(domain_, extended);
                    if (pi.prefers(after, before)) {
                        w = witness_pair("fnp", pn, extended, before, after);
                        w["voter"] = i;
                        w["clone_ids"] = clones;
                        return true;
                    }
                    return false;
                });
                if (!w.is_null()) break;
            }
            return !w.is_null();
        });
        return finish(std::move(w), collapse);
    }

    CheckResult check_strong_fnp(const Rule& rule) {
        const bool collapse = anonymous(rule);
        json w;
        for_each_profile(collapse, [&](const Profile& pn) {
            const Alt before = rule(domain_, pn);
            for (const auto& [i, pi] : pn.voters()) {
                for_each_clone_set(pn, collapse, [&](const std::vector<int>& clones) {
                    bool stop = false;
                    detail::pref_assignments(
                        static_cast<int>(clones.size()), static_cast<int>(prefs_.size()),
                        collapse, [&](const std::vector<int>& assignment) {
                            Profile extended = pn;
                            for (size_t k = 0; k < clones.size(); ++k)
                                extended = extended.with_voter(clones[k], prefs_[assignment[k]]);
                            const Alt after = rule(domain_, extended);
                            if (pi.prefers(after, before)) {
                                w = witness_pair("strong_fnp", pn, extended, before, after);
                                w["voter"] = i;
                                w["extra_ids"] = clones;
                                stop = true;
                            }
                            return stop;
                        });
                    return stop;
                });
                if (!w.is_null()) break;
            }
            return !w.is_null();
        });
        return finish(std::move(w), collapse);
    }

    CheckResult check_participation(const Rule& rule) {
        const bool collapse = anonymous(rule);
        json w;
        for_each_profile(collapse, [&](const Profile& pn) {
            if (pn.society_size() < 2) return false;  // the axiom requires |N| >= 2
            const Alt with_i = rule(domain_, pn);
            for (const auto& [i, pi] : pn.voters()) {
                const Profile reduced = pn.without_voter(i);
                const Alt without_i = rule(domain_, reduced);
                if (pi.prefers(without_i, with_i)) {
                    w = witness_pair("participation", pn, reduced, with_i, without_i);
                    w["voter"] = i;
                    return true;
                }
            }
            return false;
        });
        return finish(std::move(w), collapse);
    }

    CheckResult check_neutrality(const Rule& rule) {
        if (domain_.alt_count() > 6)
            throw EnumerationCapExceeded("neutrality check needs |A|! permutations");
        const bool collapse = anonymous(rule);
        const auto gammas = detail::all_permutations(domain_.alt_count());
        json w;
        for_each_profile(collapse, [&](const Profile& pn) {
            const Alt before = rule(domain_, pn);
            for (const auto& gamma : gammas) {
                std::vector<Alt> g(gamma.begin(), gamma.end());
                const Profile image = permute_alternatives(pn, g);
                const Alt mapped = g[before];
                const Alt after = rule(domain_, image);
                if (after != mapped) {
                    w = witness_pair("neutrality", pn, image, before, after);
                    w["gamma"] = gamma;
                    w["expected_after"] = alt_to_json(domain_, mapped);
                    return true;
                }
            }
            return false;
        });
        return finish(std::move(w), collapse);
    }

    CheckResult check_object_neutrality(const Rule& rule) {
        if (!domain_.subsets_mode())
            throw std::invalid_argument("object neutrality needs the subsets domain");
        const bool collapse = anonymous(rule);
        const auto mus = detail::all_permutations(domain_.objects());
        json w;
        for_each_profile(collapse, [&](const Profile& pn) {
            const Alt before = rule(domain_, pn);
            for (const auto& mu : mus) {
                const auto gamma = object_permutation_on_subsets(mu, domain_.objects());
                const Profile image = permute_alternatives(pn, gamma);
                const Alt mapped = gamma[before];
                const Alt after = rule(domain_, image);
                if (after != mapped) {
                    w = witness_pair("object_neutrality", pn, image, before, after);
                    w["mu"] = mu;
                    w["expected_after"] = alt_to_json(domain_, mapped);
                    return true;
                }
            }
            return false;
        });
        return finish(std::move(w), collapse);
    }

    /// Re-validates a stored fail witness by re-evaluating the rule on the
    /// stored profiles. Ontoness witnesses are re-validated by re-scanning
    /// the stored society.
    bool replay_witness(const Rule& rule, const json& witness) {
        const std::string kind = witness.at("kind").get<std::string>();
        if (kind == "ontoness") {
            const Alt missing = alt_from_json(domain_, witness.at("unattained"));
            std::vector<int> society = witness.at("society").get<std::vector<int>>();
            bool attained = false;
            for_each_profile_on(society, false, [&](const Profile& pn) {
                if (rule(domain_, pn) == missing) attained = true;
                return attained;
            });
            return !attained;
        }
        const Profile base = profile_from_json(domain_, witness.at("profile"));
        const Profile derived = profile_from_json(domain_, witness.at("derived_profile"));
        const Alt before = alt_from_json(domain_, witness.at("output_before"));
        const Alt after = alt_from_json(domain_, witness.at("output_after"));
        if (rule(domain_, base) != before || rule(domain_, derived) != after) return false;
        if (kind == "neutrality" || kind == "object_neutrality") {
            // equivariance witnesses violate against the mapped output, which
            // may coincide with neither stored output being distinct
            const Alt expected = alt_from_json(domain_, witness.at("expected_after"));
            return after != expected;
        }
        if (kind == "fnp" || kind == "strong_fnp" || kind == "participation") {
            // preference witnesses violate a weak-preference requirement
            const int voter = witness.at("voter").get<int>();
            return base.preference(voter).prefers(after, before);
        }
        return before != after;
    }

    /// Anonymity pre-pass, cached per rule name. On pass, society enumeration
    /// collapses to one id set per size and profiles to multisets.
    bool anonymous(const Rule& rule) {
        auto it = anon_cache_.find(rule.name);
        if (it != anon_cache_.end()) return it->second;
        const bool pass = check_anonymity(rule).pass;
        anon_cache_.emplace(rule.name, pass);
        return pass;
    }

    json bounds_json(bool collapsed) const {
        return json{{"n_max", bounds_.n_max},
                    {"np_max", bounds_.np_max},
                    {"id_pool", pool_},
                    {"preference_set", probe_mode_ ? "probe" : "full"},
                    {"preference_count", prefs_.size()},
                    {"domain", to_string(domain_.kind())},
                    {"anonymous_collapse", collapsed}};
    }

    // profile enumeration is shared with the theorem harness
    void for_each_society(bool collapse, const std::function<bool(const std::vector<int>&)>& fn) {
        for (int k = 1; k <= bounds_.n_max; ++k) {
            if (collapse) {
                std::vector<int> society(k);
                std::iota(society.begin(), society.end(), 1);
                if (fn(society)) return;
            } else {
                bool stop = false;
                detail::subsets_of_size(pool_, k, [&](const std::vector<int>& s) {
                    stop = fn(s);
                    return stop;
                });
                if (stop) return;
            }
        }
    }

    void for_each_profile_on(const std::vector<int>& society, bool collapse,
                             const std::function<bool(const Profile&)>& fn) {
        detail::pref_assignments(
            static_cast<int>(society.size()), static_cast<int>(prefs_.size()), collapse,
            [&](const std::vector<int>& assignment) {
                std::map<int, Preference> by_voter;
                for (size_t k = 0; k < society.size(); ++k)
                    by_voter.emplace(society[k], prefs_[assignment[k]]);
                return fn(Profile(std::move(by_voter)));
            });
    }

    void for_each_profile(bool collapse, const std::function<bool(const Profile&)>& fn) {
        for_each_society(collapse, [&](const std::vector<int>& society) {
            bool stop = false;
            for_each_profile_on(society, collapse, [&](const Profile& pn) {
                stop = fn(pn);
                return stop;
            });
            return stop;
        });
    }

private:
    json witness_pair(const std::string& kind, const Profile& base, const Profile& derived,
                      Alt before, Alt after) const {
        return json{{"kind", kind},
                    {"profile", profile_to_json(domain_, base)},
                    {"derived_profile", profile_to_json(domain_, derived)},
                    {"output_before", alt_to_json(domain_, before)},
                    {"output_after", alt_to_json(domain_, after)}};
    }

    CheckResult finish(json w, bool collapsed) const {
        if (!w.is_null()) return CheckResult::failed(std::move(w), bounds_json(collapsed));
        return CheckResult::passed(bounds_json(collapsed));
    }

    /// Clone-id sets disjoint from the society: all subsets of the remaining
    /// pool of size 1..np_max, or just the smallest fresh prefixes under the
    /// anonymity collapse.
    void for_each_clone_set(const Profile& pn, bool collapse,
                            const std::function<bool(const std::vector<int>&)>& fn) {
        std::vector<int> fresh;
        for (int id : pool_)
            if (!pn.has_voter(id)) fresh.push_back(id);
        for (int c = 1; c <= bounds_.np_max && c <= static_cast<int>(fresh.size()); ++c) {
            if (collapse) {
                if (fn(std::vector<int>(fresh.begin(), fresh.begin() + c))) return;
            } else {
                bool stop = false;
                detail::subsets_of_size(fresh, c, [&](const std::vector<int>& s) {
                    stop = fn(s);
                    return stop;
                });
                if (stop) return;
            }
        }
    }

    Domain domain_;
    CheckBounds bounds_;
    bool probe_mode_ = false;
    std::vector<Preference> prefs_;
    std::vector<int> pool_;
    std::map<std::string, bool> anon_cache_;
};

}  // namespace axiomlab
