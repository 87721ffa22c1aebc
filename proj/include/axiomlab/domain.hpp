#pragma once

#include <cassert>
#include <cstdlib>
#include <numeric>
#include <optional>

#include "axiomlab/prefs.hpp"

namespace axiomlab {

inline long long default_enumeration_cap() {
    // 10! unless overridden through AXIOMLAB_CAP.
    if (const char* env = std::getenv("AXIOMLAB_CAP")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 3628800LL;
}

struct EnumerationCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All strict linear orders over {0..alt_count-1}, enumerated in lexicographic
/// order of their rank sequences (rank of alt 0 first). Deterministic.
inline std::vector<Preference> enumerate_linear_orders(int alt_count,
                                                       long long cap = default_enumeration_cap()) {
    if (alt_count < 1) throw std::invalid_argument("need at least one alternative");
    long long total = 1;
    for (int k = 2; k <= alt_count; ++k) {
        total *= k;
        if (total > cap)
            throw EnumerationCapExceeded("domain enumeration would exceed the configured cap");
    }
    std::vector<int> rank(alt_count);
    std::iota(rank.begin(), rank.end(), 0);
    std::vector<Preference> out;
    out.reserve(static_cast<size_t>(total));
    do {
        out.push_back(Preference::from_ranks(rank));
    } while (std::next_permutation(rank.begin(), rank.end()));
    return out;
}

// ---- separability over 2^O ----

/// Definitional check: for every S and x outside S,
/// S u {x} P S  iff  {x} P empty-set.
inline bool is_separable(const Preference& p, int objects) {
    if (p.size() != (1 << objects)) throw std::invalid_argument("preference is not over 2^O");
    for (Alt s = 0; s < p.size(); ++s) {
        for (int x = 0; x < objects; ++x) {
            if (s & (1 << x)) continue;
            const bool adding_improves = p.prefers(s | (1 << x), s);
            const bool x_good = p.prefers(1 << x, 0);
            if (adding_improves != x_good) return false;
        }
    }
    return true;
}

/// Equivalent criterion via top membership: adding x improves iff x lies in
/// the top set. Kept separate so tests can cross-check the two routes.
inline bool is_separable_tops_criterion(const Preference& p, int objects) {
    if (p.size() != (1 << objects)) throw std::invalid_argument("preference is not over 2^O");
    const Alt top = p.top();
    for (Alt s = 0; s < p.size(); ++s) {
        for (int x = 0; x < objects; ++x) {
            if (s & (1 << x)) continue;
            if (p.prefers(s | (1 << x), s) != static_cast<bool>(top & (1 << x))) return false;
        }
    }
    return true;
}

/// Canonical separable preference with a given top set: subsets ranked by
/// |S n T| - |S \ T| descending, ties by ascending mask. Additive with object
/// weights +/-1, hence separable; tests verify rather than trust this.
inline Preference canonical_separable(Alt top, int objects) {
    const int n = 1 << objects;
    if (top < 0 || top >= n) throw std::invalid_argument("top out of range");
    std::vector<Alt> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto score = [&](Alt s) { return popcount_mask(s & top) - popcount_mask(s & ~top & (n - 1)); };
    std::stable_sort(order.begin(), order.end(), [&](Alt a, Alt b) {
        int sa = score(a), sb = score(b);
        if (sa != sb) return sa > sb;
        return a < b;
    });
    return Preference(std::move(order));
}

enum class DomainKind {
    Universal,        // opaque labels, all orders
    AllSubsetOrders,  // alternatives are 2^O, all orders
    Separable,        // subset orders filtered by separability
    SeparablePlusOne  // separable plus one designated extra preference
};

inline std::string to_string(DomainKind k) {
    switch (k) {
        case DomainKind::Universal: return "universal";
        case DomainKind::AllSubsetOrders: return "all";
        case DomainKind::Separable: return "separable";
        case DomainKind::SeparablePlusOne: return "separable-plus-one";
    }
    return "?";
}

/// A preference domain: an alternative universe together with the admissible
/// set of orders over it.
class Domain {
public:
    static Domain universal(int alt_count) {
        Domain d;
        d.kind_ = DomainKind::Universal;
        d.alt_count_ = alt_count;
        d.objects_ = 0;
        return d;
    }

    static Domain all_subset_orders(int objects) {
        return subsets(DomainKind::AllSubsetOrders, objects);
    }

    static Domain separable(int objects) { return subsets(DomainKind::Separable, objects); }

    static Domain separable_plus_one(int objects, Preference extra) {
        Domain d = subsets(DomainKind::SeparablePlusOne, objects);
        if (extra.size() != d.alt_count_) throw std::invalid_argument("extra preference universe mismatch");
        d.extra_ = std::move(extra);
        return d;
    }

    DomainKind kind() const { return kind_; }
    int alt_count() const { return alt_count_; }
    int objects() const { return objects_; }
    bool subsets_mode() const { return objects_ > 0; }
    const std::optional<Preference>& extra() const { return extra_; }

    Alt full_set() const {
        if (!subsets_mode()) throw std::logic_error("full set only exists in subsets mode");
        return alt_count_ - 1;
    }

    std::string alt_name(Alt a) const {
        if (a < 0 || a >= alt_count_) throw std::out_of_range("unknown alternative");
        if (!subsets_mode()) return std::string(1, static_cast<char>('A' + a));
        std::string out = "{";
        for (int x = 0; x < objects_; ++x) {
            if (!(a & (1 << x))) continue;
            if (out.size() > 1) out += ",";
            out += object_name(x);
        }
        return out + "}";
    }

    static std::string object_name(int x) {
        static const char* names = "xyzwvu";
        if (x < 6) return std::string(1, names[x]);
        return "o" + std::to_string(x + 1);
    }

    int object_index(const std::string& name) const {
        for (int x = 0; x < objects_; ++x)
            if (object_name(x) == name) return x;
        throw std::invalid_argument("unknown object: " + name);
    }

    /// All admissible preferences, deterministically ordered.
    std::vector<Preference> enumerate(long long cap = default_enumeration_cap()) const {
        std::vector<Preference> all = enumerate_linear_orders(alt_count_, cap);
        if (kind_ == DomainKind::Universal || kind_ == DomainKind::AllSubsetOrders) return all;
        std::vector<Preference> out;
        for (const Preference& p : all)
            if (is_separable(p, objects_)) out.push_back(p);
        if (kind_ == DomainKind::SeparablePlusOne) {
            if (std::find(out.begin(), out.end(), *extra_) == out.end()) out.push_back(*extra_);
        }
        return out;
    }

    bool contains(const Preference& p) const {
        if (p.size() != alt_count_) return false;
        switch (kind_) {
            case DomainKind::Universal:
            case DomainKind::AllSubsetOrders: return true;
            case DomainKind::Separable: return is_separable(p, objects_);
            case DomainKind::SeparablePlusOne:
                return is_separable(p, objects_) || p == *extra_;
        }
        return false;
    }

    /// A small witness-rich subset of the domain used by bounded checkers when
    /// full enumeration is infeasible: per reachable top, the canonical
    /// separable representative plus variants with the full set moved to
    /// second place and to the bottom (they carry the known counterexample
    /// patterns for the catalog rules).
    std::vector<Preference> probe() const {
        if (!subsets_mode()) return enumerate();
        std::vector<Preference> out;
        auto push_unique = [&](const Preference& p) {
            if (!contains(p)) return;
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        };
        const Alt full = full_set();
        for (Alt top = 0; top < alt_count_; ++top) {
            Preference rep = canonical_separable(top, objects_);
            push_unique(rep);
            if (top != full) {
                push_unique(move_alt_to(rep, full, 1));
                push_unique(move_alt_to(rep, full, alt_count_ - 1));
            }
        }
        if (kind_ == DomainKind::SeparablePlusOne) push_unique(*extra_);
        return out;
    }

private:
    static Domain subsets(DomainKind kind, int objects) {
        if (objects < 2) throw std::invalid_argument("need at least two objects");
        Domain d;
        d.kind_ = kind;
        d.alt_count_ = 1 << objects;
        d.objects_ = objects;
        return d;
    }

    static Preference move_alt_to(const Preference& p, Alt a, int target_pos) {
        std::vector<Alt> order = p.order();
        order.erase(std::find(order.begin(), order.end(), a));
        order.insert(order.begin() + target_pos, a);
        return Preference(std::move(order));
    }

    DomainKind kind_ = DomainKind::Universal;
    int alt_count_ = 0;
    int objects_ = 0;
    std::optional<Preference> extra_;
};

inline std::vector<Preference> enumerate_separable(int objects,
                                                   long long cap = default_enumeration_cap()) {
    return Domain::separable(objects).enumerate(cap);
}

}  // namespace axiomlab
