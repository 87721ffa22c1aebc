#pragma once

#include <array>
#include <chrono>
#include <deque>

#include "axiomlab/axioms.hpp"

namespace axiomlab {

/// Generic finite CSP over variables with small value domains (<= 16),
/// supporting binary implication arcs, functional (mapping) arcs, and
/// at-least-one-per-group ("onto") constraints. Backtracking with AC-3
/// propagation, minimum-remaining-values variable order, deterministic value
/// order with an optional warm-start hint.
class CspSolver {
public:
    enum class Status { Sat, Unsat, Budget };

    struct Result {
        Status status = Status::Unsat;
        std::vector<int> assignment;  // value per variable when Sat
        long long nodes = 0;
    };

    explicit CspSolver(int var_count, int value_count)
        : value_count_(value_count), full_mask_((1u << value_count) - 1) {
        if (value_count < 1 || value_count > 16) throw std::invalid_argument("value count");
        domains_.assign(var_count, full_mask_);
    }

    int var_count() const { return static_cast<int>(domains_.size()); }

    /// allowed[a] is the bitmask of values of v compatible with u == a.
    void add_arc(int u, int v, const std::vector<uint32_t>& allowed) {
        if (u == v) {
            // unary: u must take a value compatible with itself
            uint32_t keep = 0;
            for (int a = 0; a < value_count_; ++a)
                if (allowed[a] & (1u << a)) keep |= 1u << a;
            domains_[u] &= keep;
            return;
        }
        Arc fwd{u, v, allowed};
        Arc rev{v, u, std::vector<uint32_t>(value_count_, 0)};
        for (int a = 0; a < value_count_; ++a)
            for (int b = 0; b < value_count_; ++b)
                if (allowed[a] & (1u << b)) rev.allowed[b] |= 1u << a;
        incident_[u].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back(std::move(fwd));
        incident_[v].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back(std::move(rev));
    }

    /// Functional arc: value(v) == map[value(u)] exactly.
    void add_map_arc(int u, int v, const std::vector<int>& map) {
        std::vector<uint32_t> allowed(value_count_, 0);
        for (int a = 0; a < value_count_; ++a) allowed[a] = 1u << map[a];
        add_arc(u, v, allowed);
    }

    /// Every value must be taken by at least one variable of the group.
    void add_onto_group(std::vector<int> vars) { onto_groups_.push_back(std::move(vars)); }

    void set_hint(std::vector<int> hint) { hint_ = std::move(hint); }
    void set_node_budget(long long nodes) { node_budget_ = nodes; }

    Result solve() {
        Result res;
        if (!propagate_all(domains_)) {
            res.status = Status::Unsat;
            return res;
        }
        std::vector<int> assignment(var_count(), -1);
        res.status = search(domains_, assignment, res.nodes);
        if (res.status == Status::Sat) res.assignment = std::move(assignment);
        return res;
    }

private:
    struct Arc {
        int u, v;
        std::vector<uint32_t> allowed;  // allowed[value of u] -> mask over v
    };

    bool revise_from(int var, std::vector<uint32_t>& dom, std::deque<int>& queue,
                     std::vector<bool>& queued) const {
        auto it = incident_.find(var);
        if (it == incident_.end()) return true;
        for (int ai : it->second) {
            const Arc& arc = arcs_[ai];
            if (arc.u != var) continue;
            uint32_t support = 0;
            uint32_t du = dom[arc.u];
            for (int a = 0; a < value_count_; ++a)
                if (du & (1u << a)) support |= arc.allowed[a];
            const uint32_t next = dom[arc.v] & support;
            if (next == 0) return false;
            if (next != dom[arc.v]) {
                dom[arc.v] = next;
                if (!queued[arc.v]) {
                    queued[arc.v] = true;
                    queue.push_back(arc.v);
                }
            }
        }
        return true;
    }

    bool propagate(std::vector<uint32_t>& dom, int start) const {
        std::deque<int> queue{start};
        std::vector<bool> queued(var_count(), false);
        queued[start] = true;
        while (!queue.empty()) {
            const int var = queue.front();
            queue.pop_front();
            queued[var] = false;
            if (!revise_from(var, dom, queue, queued)) return false;
        }
        return onto_feasible(dom);
    }

    bool propagate_all(std::vector<uint32_t>& dom) const {
        std::deque<int> queue;
        std::vector<bool> queued(var_count(), true);
        for (int v = 0; v < var_count(); ++v) queue.push_back(v);
        while (!queue.empty()) {
            const int var = queue.front();
            queue.pop_front();
            queued[var] = false;
            if (!revise_from(var, dom, queue, queued)) return false;
        }
        return onto_feasible(dom);
    }

    bool onto_feasible(const std::vector<uint32_t>& dom) const {
        for (const auto& group : onto_groups_) {
            uint32_t reachable = 0;
            for (int v : group) reachable |= dom[v];
            if (reachable != full_mask_) return false;
        }
        return true;
    }

    Status search(std::vector<uint32_t>& dom, std::vector<int>& assignment,
                  long long& nodes) const {
        if (++nodes > node_budget_) return Status::Budget;
        int var = -1, best = value_count_ + 1;
        for (int v = 0; v < var_count(); ++v) {
            const int size = popcount_mask(static_cast<int>(dom[v]));
            if (size > 1 && size < best) {
                best = size;
                var = v;
            }
        }
        if (var == -1) {
            for (int v = 0; v < var_count(); ++v)
                assignment[v] = first_value(dom[v]);
            return Status::Sat;
        }
        bool budget_hit = false;
        for (int val : value_order(var, dom[var])) {
            std::vector<uint32_t> child = dom;
            child[var] = 1u << val;
            if (propagate(child, var)) {
                const Status s = search(child, assignment, nodes);
                if (s == Status::Sat) return s;
                if (s == Status::Budget) budget_hit = true;
            }
            if (budget_hit) break;
        }
        return budget_hit ? Status::Budget : Status::Unsat;
    }

    std::vector<int> value_order(int var, uint32_t dom) const {
        std::vector<int> order;
        if (!hint_.empty() && hint_[var] >= 0 && (dom & (1u << hint_[var])))
            order.push_back(hint_[var]);
        for (int a = 0; a < value_count_; ++a)
            if ((dom & (1u << a)) && (order.empty() || a != order.front())) order.push_back(a);
        return order;
    }

    static int first_value(uint32_t mask) {
        for (int a = 0; a < 32; ++a)
            if (mask & (1u << a)) return a;
        return -1;
    }

    int value_count_;
    uint32_t full_mask_;
    std::vector<uint32_t> domains_;
    std::vector<Arc> arcs_;
    std::map<int, std::vector<int>> incident_;
    std::vector<std::vector<int>> onto_groups_;
    std::vector<int> hint_;
    long long node_budget_ = 200'000'000LL;
};

// ---- the impossibility-theorem CSP over rule tables ----

enum class Family { Onto, TopsOnly, Fnp, Participation, ObjectNeutrality };

inline std::string to_string(Family f) {
    switch (f) {
        case Family::Onto: return "ontoness";
        case Family::TopsOnly: return "tops_onliness";
        case Family::Fnp: return "fnp";
        case Family::Participation: return "participation";
        case Family::ObjectNeutrality: return "object_neutrality";
    }
    return "?";
}

/// Encoding of the bounded rule-space search. Anonymity is imposed only when
/// both false-name-proofness and participation are kept (that reduction is
/// licensed by those two axioms); tops-onliness reduces keys from preference
/// lists to top lists when kept.
struct RuleSpaceCsp {
    enum class Encoding { AnonymousTops, AnonymousPrefs, LabeledTops };

    int objects = 2;
    int depth = 2;
    std::set<Family> dropped;
    Encoding encoding = Encoding::AnonymousTops;

    // keys, in canonical order; meaning depends on the encoding:
    //  AnonymousTops: sorted multiset of top masks
    //  AnonymousPrefs: sorted multiset of preference indices into prefs
    //  LabeledTops: flattened (voter id, top mask) pairs sorted by id
    std::vector<std::vector<int>> keys;
    std::vector<Preference> prefs;  // full domain over 2^O (AnonymousPrefs only)
    CspSolver solver{1, 1};

    bool kept(Family f) const { return dropped.count(f) == 0; }
};

inline RuleSpaceCsp build_rule_space_csp(int objects, int depth,
                                         const std::set<Family>& dropped) {
    RuleSpaceCsp csp;
    csp.objects = objects;
    csp.depth = depth;
    csp.dropped = dropped;
    const int alt_count = 1 << objects;
    const bool anonymous = csp.kept(Family::Fnp) && csp.kept(Family::Participation);
    const bool tops_level = csp.kept(Family::TopsOnly);
    if (!anonymous && !tops_level)
        throw std::invalid_argument("unsupported encoding: drop one family at a time");
    using Enc = RuleSpaceCsp::Encoding;
    csp.encoding = !anonymous ? Enc::LabeledTops
                              : (tops_level ? Enc::AnonymousTops : Enc::AnonymousPrefs);

    std::map<std::vector<int>, int> index;
    auto intern_key = [&](const std::vector<int>& key) {
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        const int id = static_cast<int>(csp.keys.size());
        index.emplace(key, id);
        csp.keys.push_back(key);
        return id;
    };

    // enumerate keys
    if (csp.encoding == Enc::AnonymousTops || csp.encoding == Enc::AnonymousPrefs) {
        const int symbol_count = csp.encoding == Enc::AnonymousTops
                                     ? alt_count
                                     : [&] {
                                           csp.prefs = Domain::all_subset_orders(objects).enumerate();
                                           return static_cast<int>(csp.prefs.size());
                                       }();
        for (int k = 1; k <= depth; ++k) {
            detail::pref_assignments(k, symbol_count, /*multiset_only=*/true,
                                     [&](const std::vector<int>& m) {
                                         intern_key(m);
                                         return false;
                                     });
        }
    } else {
        std::vector<int> pool;
        for (int i = 1; i <= depth + 1; ++i) pool.push_back(i);
        for (int k = 1; k <= depth; ++k) {
            detail::subsets_of_size(pool, k, [&](const std::vector<int>& society) {
                detail::pref_assignments(k, alt_count, false, [&](const std::vector<int>& tops) {
                    std::vector<int> key;
                    for (int i = 0; i < k; ++i) {
                        key.push_back(society[i]);
                        key.push_back(tops[i]);
                    }
                    intern_key(key);
                    return false;
                });
                return false;
            });
        }
    }

    csp.solver = CspSolver(static_cast<int>(csp.keys.size()), alt_count);

    // helpers shared by the arc builders
    auto tops_arc_mask = [&](int t) {
        // f(with) == f(without) or f(with) == t, for every preference topped by t
        std::vector<uint32_t> allowed(alt_count);
        for (int a = 0; a < alt_count; ++a)
            allowed[a] = a == t ? (1u << alt_count) - 1 : (1u << a);
        return allowed;
    };
    auto pref_arc_mask = [&](const Preference& p) {
        // f(with) weakly preferred under p to f(without)
        std::vector<uint32_t> allowed(alt_count);
        for (int a = 0; a < alt_count; ++a) {
            uint32_t m = 0;
            for (int b = 0; b < alt_count; ++b)
                if (p.rank(b) >= p.rank(a)) m |= 1u << b;
            allowed[a] = m;
        }
        return allowed;
    };

    auto key_size = [&](const std::vector<int>& key) {
        return csp.encoding == Enc::LabeledTops ? static_cast<int>(key.size()) / 2
                                                : static_cast<int>(key.size());
    };

    for (int u = 0; u < static_cast<int>(csp.keys.size()); ++u) {
        const std::vector<int>& key = csp.keys[u];
        const int size = key_size(key);

        if (csp.encoding == Enc::AnonymousTops || csp.encoding == Enc::AnonymousPrefs) {
            std::set<int> distinct(key.begin(), key.end());
            for (int sym : distinct) {
                std::vector<uint32_t> allowed =
                    csp.encoding == Enc::AnonymousTops ? tops_arc_mask(sym)
                                                       : pref_arc_mask(csp.prefs[sym]);
                if (csp.kept(Family::Participation) && size >= 2) {
                    std::vector<int> reduced = key;
                    reduced.erase(std::find(reduced.begin(), reduced.end(), sym));
                    csp.solver.add_arc(u, index.at(reduced), allowed);
                }
                if (csp.kept(Family::Fnp) && size < depth) {
                    std::vector<int> extended = key;
                    extended.insert(std::upper_bound(extended.begin(), extended.end(), sym), sym);
                    csp.solver.add_arc(u, index.at(extended), allowed);
                }
            }
        } else {
            for (int slot = 0; slot < size; ++slot) {
                const int top = key[2 * slot + 1];
                if (csp.kept(Family::Participation) && size >= 2) {
                    std::vector<int> reduced = key;
                    reduced.erase(reduced.begin() + 2 * slot, reduced.begin() + 2 * slot + 2);
                    csp.solver.add_arc(u, index.at(reduced), tops_arc_mask(top));
                }
                if (csp.kept(Family::Fnp) && size < depth) {
                    for (int fresh = 1; fresh <= depth + 1; ++fresh) {
                        bool present = false;
                        for (int s = 0; s < size; ++s)
                            if (key[2 * s] == fresh) present = true;
                        if (present) continue;
                        std::vector<int> extended = key;
                        // insert (fresh, top) keeping ids sorted
                        size_t pos = 0;
                        while (pos < extended.size() && extended[pos] < fresh) pos += 2;
                        extended.insert(extended.begin() + pos, {fresh, top});
                        csp.solver.add_arc(u, index.at(extended), tops_arc_mask(top));
                    }
                }
            }
        }

        if (csp.kept(Family::ObjectNeutrality)) {
            for (const auto& mu : detail::all_permutations(objects)) {
                bool identity = true;
                for (int x = 0; x < objects; ++x)
                    if (mu[x] != x) identity = false;
                if (identity) continue;
                const std::vector<Alt> gamma = object_permutation_on_subsets(mu, objects);
                std::vector<int> image;
                if (csp.encoding == Enc::AnonymousTops) {
                    image = key;
                    for (int& t : image) t = gamma[t];
                    std::sort(image.begin(), image.end());
                } else if (csp.encoding == Enc::AnonymousPrefs) {
                    for (int pi : key) {
                        const Preference mapped = permute_objects(csp.prefs[pi], mu, objects);
                        const auto it = std::find(csp.prefs.begin(), csp.prefs.end(), mapped);
                        image.push_back(static_cast<int>(it - csp.prefs.begin()));
                    }
                    std::sort(image.begin(), image.end());
                } else {
                    image = key;
                    for (int slot = 0; slot < size; ++slot)
                        image[2 * slot + 1] = gamma[image[2 * slot + 1]];
                }
                std::vector<int> gmap(gamma.begin(), gamma.end());
                csp.solver.add_map_arc(u, index.at(image), gmap);
            }
        }
    }

    if (csp.kept(Family::Onto)) {
        if (csp.encoding == Enc::LabeledTops) {
            // one group per society
            std::map<std::vector<int>, std::vector<int>> by_society;
            for (int u = 0; u < static_cast<int>(csp.keys.size()); ++u) {
                std::vector<int> society;
                for (size_t s = 0; s < csp.keys[u].size(); s += 2) society.push_back(csp.keys[u][s]);
                by_society[society].push_back(u);
            }
            for (auto& [society, vars] : by_society) csp.solver.add_onto_group(vars);
        } else {
            std::map<int, std::vector<int>> by_size;
            for (int u = 0; u < static_cast<int>(csp.keys.size()); ++u)
                by_size[key_size(csp.keys[u])].push_back(u);
            for (auto& [k, vars] : by_size) csp.solver.add_onto_group(vars);
        }
    }

    return csp;
}

/// Evaluate a catalog rule on each key to warm-start the value ordering.
inline std::vector<int> csp_hint_from_rule(const RuleSpaceCsp& csp, const Rule& rule) {
    using Enc = RuleSpaceCsp::Encoding;
    const Domain d = Domain::all_subset_orders(csp.objects);
    std::vector<int> hint;
    hint.reserve(csp.keys.size());
    for (const auto& key : csp.keys) {
        std::map<int, Preference> by_voter;
        if (csp.encoding == Enc::AnonymousTops) {
            for (size_t i = 0; i < key.size(); ++i)
                by_voter.emplace(static_cast<int>(i) + 1,
                                 canonical_separable(key[i], csp.objects));
        } else if (csp.encoding == Enc::AnonymousPrefs) {
            for (size_t i = 0; i < key.size(); ++i)
                by_voter.emplace(static_cast<int>(i) + 1, csp.prefs[key[i]]);
        } else {
            for (size_t i = 0; i < key.size(); i += 2)
                by_voter.emplace(key[i], canonical_separable(key[i + 1], csp.objects));
        }
        hint.push_back(rule(d, Profile(std::move(by_voter))));
    }
    return hint;
}

/// Wrap a solved table as a rule so the axiom checkers can confront it.
inline Rule materialize_csp_rule(const RuleSpaceCsp& csp, const std::vector<int>& assignment,
                                 const std::string& name) {
    using Enc = RuleSpaceCsp::Encoding;
    std::map<std::vector<int>, Alt> table;
    for (size_t i = 0; i < csp.keys.size(); ++i) table.emplace(csp.keys[i], assignment[i]);
    const Enc enc = csp.encoding;
    const std::vector<Preference> prefs = csp.prefs;
    Rule r;
    r.name = name;
    r.home = DomainKind::AllSubsetOrders;
    r.tops_only = enc != Enc::AnonymousPrefs;
    r.eval = [table, enc, prefs](const Domain&, const Profile& pn) {
        std::vector<int> key;
        if (enc == Enc::AnonymousTops) {
            for (const auto& [id, p] : pn.voters()) key.push_back(p.top());
            std::sort(key.begin(), key.end());
        } else if (enc == Enc::AnonymousPrefs) {
            for (const auto& [id, p] : pn.voters()) {
                const auto it = std::find(prefs.begin(), prefs.end(), p);
                if (it == prefs.end()) throw std::out_of_range("preference outside table domain");
                key.push_back(static_cast<int>(it - prefs.begin()));
            }
            std::sort(key.begin(), key.end());
        } else {
            for (const auto& [id, p] : pn.voters()) {
                key.push_back(id);
                key.push_back(p.top());
            }
        }
        const auto it = table.find(key);
        if (it == table.end()) throw std::out_of_range("profile outside the searched bounds");
        return it->second;
    };
    return r;
}

}  // namespace axiomlab
