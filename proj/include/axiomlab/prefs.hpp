#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace axiomlab {

// An alternative is an index into the domain's universe. In subsets mode the
// index doubles as the bitmask of the chosen object set (bit k = object k).
using Alt = int;

inline int popcount_mask(Alt mask) {
    int c = 0;
    for (Alt m = mask; m != 0; m >>= 1) c += m & 1;
    return c;
}

/// A strict linear order over a fixed alternative universe {0..n-1},
/// stored best-first. rank(a) == 0 means a is the top.
class Preference {
public:
    Preference() = default;

    explicit Preference(std::vector<Alt> best_first) : order_(std::move(best_first)) {
        rebuild_ranks();
    }

    static Preference from_ranks(const std::vector<int>& rank) {
        std::vector<Alt> order(rank.size());
        for (Alt a = 0; a < static_cast<Alt>(rank.size()); ++a) {
            if (rank[a] < 0 || rank[a] >= static_cast<int>(rank.size()))
                throw std::invalid_argument("rank out of range");
            order[rank[a]] = a;
        }
        return Preference(std::move(order));
    }

    int size() const { return static_cast<int>(order_.size()); }
    const std::vector<Alt>& order() const { return order_; }

    Alt top() const { return order_.front(); }
    Alt bottom() const { return order_.back(); }

    int rank(Alt a) const {
        check_alt(a);
        return rank_[a];
    }

    /// Strict comparison: true iff a is ranked above b. prefers(a, a) is false.
    bool prefers(Alt a, Alt b) const { return rank(a) < rank(b); }

    /// Weak counterpart: true also on equality.
    bool weakly_prefers(Alt a, Alt b) const { return rank(a) <= rank(b); }

    bool operator==(const Preference& o) const { return order_ == o.order_; }
    bool operator!=(const Preference& o) const { return order_ != o.order_; }
    bool operator<(const Preference& o) const { return order_ < o.order_; }

private:
    void rebuild_ranks() {
        const int n = static_cast<int>(order_.size());
        if (n == 0) throw std::invalid_argument("empty preference");
        rank_.assign(n, -1);
        for (int pos = 0; pos < n; ++pos) {
            Alt a = order_[pos];
            if (a < 0 || a >= n || rank_[a] != -1)
                throw std::invalid_argument("order is not a permutation of the universe");
            rank_[a] = pos;
        }
    }

    void check_alt(Alt a) const {
        if (a < 0 || a >= size()) throw std::out_of_range("unknown alternative");
    }

    std::vector<Alt> order_;  // order_[0] is the top
    std::vector<int> rank_;   // rank_[alt] = position in order_
};

/// A profile: a non-empty finite society of positive-integer voter ids, each
/// holding one preference over a shared universe. Value semantics throughout.
class Profile {
public:
    Profile() = default;

    explicit Profile(std::map<int, Preference> by_voter) : by_voter_(std::move(by_voter)) {
        validate();
    }

    const std::map<int, Preference>& voters() const { return by_voter_; }
    int society_size() const { return static_cast<int>(by_voter_.size()); }

    std::set<int> society() const {
        std::set<int> s;
        for (const auto& [id, _] : by_voter_) s.insert(id);
        return s;
    }

    bool has_voter(int id) const { return by_voter_.count(id) != 0; }

    const Preference& preference(int id) const {
        auto it = by_voter_.find(id);
        if (it == by_voter_.end()) throw std::out_of_range("no such voter");
        return it->second;
    }

    Profile with_voter(int id, const Preference& p) const {
        if (has_voter(id)) throw std::invalid_argument("duplicate voter id");
        if (p.size() != alt_count()) throw std::invalid_argument("universe mismatch");
        Profile out = *this;
        out.by_voter_.emplace(id, p);
        return out;
    }

    Profile without_voter(int id) const {
        if (!has_voter(id)) throw std::invalid_argument("no such voter");
        if (society_size() < 2) throw std::invalid_argument("societies are non-empty");
        Profile out = *this;
        out.by_voter_.erase(id);
        return out;
    }

    int alt_count() const { return by_voter_.begin()->second.size(); }

    bool operator==(const Profile& o) const { return by_voter_ == o.by_voter_; }
    bool operator<(const Profile& o) const { return by_voter_ < o.by_voter_; }

private:
    void validate() const {
        if (by_voter_.empty()) throw std::invalid_argument("society must be non-empty");
        int n = -1;
        for (const auto& [id, p] : by_voter_) {
            if (id <= 0) throw std::invalid_argument("voter ids are positive integers");
            if (n == -1) n = p.size();
            if (p.size() != n) throw std::invalid_argument("preferences range over different universes");
        }
    }

    std::map<int, Preference> by_voter_;
};

// ---- permutation actions ----

/// Voter relabeling: voter sigma(i) in the result holds what i held.
/// sigma is given on the ids actually present; it must be injective there.
inline Profile permute_voters(const Profile& pn, const std::map<int, int>& sigma) {
    std::map<int, Preference> out;
    for (const auto& [id, p] : pn.voters()) {
        auto it = sigma.find(id);
        int target = it == sigma.end() ? id : it->second;
        if (target <= 0) throw std::invalid_argument("relabeled id must be positive");
        if (!out.emplace(target, p).second)
            throw std::invalid_argument("voter relabeling is not injective");
    }
    return Profile(std::move(out));
}

/// Alternative relabeling gamma (a permutation of {0..n-1}):
/// rank of gamma(a) in the image equals rank of a in the source.
inline Preference permute_alternatives(const Preference& p, const std::vector<Alt>& gamma) {
    const int n = p.size();
    if (static_cast<int>(gamma.size()) != n)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (Alt a : gamma) {
        if (a < 0 || a >= n || seen[a]) throw std::invalid_argument("gamma is not a bijection");
        seen[a] = true;
    }
    std::vector<Alt> order(n);
    for (int pos = 0; pos < n; ++pos) order[pos] = gamma[p.order()[pos]];
    return Preference(std::move(order));
}

inline Profile permute_alternatives(const Profile& pn, const std::vector<Alt>& gamma) {
    std::map<int, Preference> out;
    for (const auto& [id, p] : pn.voters()) out.emplace(id, permute_alternatives(p, gamma));
    return Profile(std::move(out));
}

/// Lift an object permutation mu over {0..objects-1} to the induced
/// permutation of subset masks: mu(S) = { mu(x) : x in S }.
inline std::vector<Alt> object_permutation_on_subsets(const std::vector<int>& mu, int objects) {
    if (static_cast<int>(mu.size()) != objects)
        throw std::invalid_argument("object permutation size mismatch");
    std::vector<bool> seen(objects, false);
    for (int x : mu) {
        if (x < 0 || x >= objects || seen[x]) throw std::invalid_argument("mu is not a bijection");
        seen[x] = true;
    }
    const int n = 1 << objects;
    std::vector<Alt> gamma(n);
    for (Alt s = 0; s < n; ++s) {
        Alt image = 0;
        for (int x = 0; x < objects; ++x)
            if (s & (1 << x)) image |= 1 << mu[x];
        gamma[s] = image;
    }
    return gamma;
}

inline Preference permute_objects(const Preference& p, const std::vector<int>& mu, int objects) {
    return permute_alternatives(p, object_permutation_on_subsets(mu, objects));
}

inline Profile permute_objects(const Profile& pn, const std::vector<int>& mu, int objects) {
    return permute_alternatives(pn, object_permutation_on_subsets(mu, objects));
}

}  // namespace axiomlab
