#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "axiomlab/json_io.hpp"

using namespace axiomlab;

// Object masks for O = {x, y} / {x, y, z}: x = bit 0, y = bit 1, z = bit 2.
namespace {
constexpr Alt E = 0, X = 1, Y = 2, XY = 3, Z = 4;

Preference pref(std::vector<Alt> order) { return Preference(std::move(order)); }
}  // namespace

TEST_CASE("enumerate_linear_orders counts and distinctness") {
    CHECK(enumerate_linear_orders(1).size() == 1);
    const auto orders4 = enumerate_linear_orders(4);
    CHECK(orders4.size() == 24);
    const auto orders8 = enumerate_linear_orders(8);
    CHECK(orders8.size() == 40320);
    std::set<Preference> distinct(orders4.begin(), orders4.end());
    CHECK(distinct.size() == 24);
}

TEST_CASE("enumeration cap turns blowup into an error") {
    CHECK_THROWS_AS(Domain::all_subset_orders(4).enumerate(), EnumerationCapExceeded);
    CHECK_THROWS_AS(enumerate_linear_orders(16), EnumerationCapExceeded);
    // an explicit override lifts the cap
    CHECK(enumerate_linear_orders(7, 10'000'000).size() == 5040);
}

TEST_CASE("prefers is a strict total order on every enumerated preference") {
    for (const Preference& p : enumerate_linear_orders(4)) {
        for (Alt a = 0; a < 4; ++a) {
            CHECK_FALSE(p.prefers(a, a));
            CHECK(p.weakly_prefers(a, a));
            for (Alt b = 0; b < 4; ++b) {
                if (a == b) continue;
                CHECK(p.prefers(a, b) != p.prefers(b, a));  // completeness + antisymmetry
                for (Alt c = 0; c < 4; ++c)
                    if (p.prefers(a, b) && p.prefers(b, c)) CHECK(p.prefers(a, c));
            }
        }
    }
}

TEST_CASE("prefers examples") {
    const Preference p = pref({X, Y, E, XY});  // {x} > {y} > empty > {x,y}
    CHECK(p.prefers(X, XY));
    CHECK_FALSE(p.prefers(X, X));
    CHECK(p.top() == X);
    CHECK(p.bottom() == XY);
    const Preference top_full = pref({XY, X, Y, E});
    for (Alt s : {X, Y, E}) CHECK(top_full.prefers(XY, s));
    CHECK_THROWS_AS(p.rank(7), std::out_of_range);
}

TEST_CASE("separability: definition agrees with the top-membership criterion") {
    int separable2 = 0;
    for (const Preference& p : enumerate_linear_orders(4)) {
        CHECK(is_separable(p, 2) == is_separable_tops_criterion(p, 2));
        if (is_separable(p, 2)) ++separable2;
    }
    CHECK(separable2 == 8);

    int separable3 = 0;
    for (const Preference& p : enumerate_linear_orders(8)) {
        CHECK(is_separable(p, 3) == is_separable_tops_criterion(p, 3));
        if (is_separable(p, 3)) ++separable3;
    }
    CHECK(separable3 == 384);
}

TEST_CASE("separability examples") {
    CHECK(is_separable(pref({XY, X, Y, E}), 2));
    // {y} beats empty although y is not in the top set
    CHECK_FALSE(is_separable(pref({X, Y, E, XY}), 2));
    // top empty but {x} beats {y} only via {x,y} in between
    CHECK_FALSE(is_separable(pref({E, X, XY, Y}), 2));
    CHECK(is_separable(pref({E, X, Y, XY}), 2) ==
          is_separable_tops_criterion(pref({E, X, Y, XY}), 2));
}

TEST_CASE("enumerate_separable: counts and full-top singleton property") {
    const auto sep2 = enumerate_separable(2);
    CHECK(sep2.size() == 8);
    const auto sep3 = enumerate_separable(3);
    CHECK(sep3.size() == 384);
    for (const Preference& p : sep2) {
        if (p.top() != XY) continue;
        CHECK(p.prefers(X, E));
        CHECK(p.prefers(Y, E));
    }
}

TEST_CASE("separable set is closed under object permutations") {
    const auto sep2 = enumerate_separable(2);
    const std::set<Preference> sep_set(sep2.begin(), sep2.end());
    for (const std::vector<int>& mu : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
        for (const Preference& p : enumerate_linear_orders(4)) {
            const Preference image = permute_objects(p, mu, 2);
            CHECK(is_separable(p, 2) == is_separable(image, 2));
            if (sep_set.count(p)) CHECK(sep_set.count(image));
        }
    }
}

TEST_CASE("permute_voters is a group action on profiles") {
    const Preference a = pref({X, Y, E, XY}), b = pref({XY, X, Y, E});
    const Profile pn({{1, a}, {2, b}});

    CHECK(permute_voters(pn, {}) == pn);
    const Profile swapped = permute_voters(pn, {{1, 2}, {2, 1}});
    CHECK(swapped.preference(1) == b);
    CHECK(swapped.preference(2) == a);
    CHECK(permute_voters(swapped, {{1, 2}, {2, 1}}) == pn);

    // relabeling to a fresh id moves the society
    const Profile moved = permute_voters(pn, {{1, 9}, {9, 1}});
    CHECK(moved.has_voter(9));
    CHECK_FALSE(moved.has_voter(1));
    CHECK(moved.preference(9) == a);

    CHECK_THROWS_AS(permute_voters(pn, {{1, 2}}), std::invalid_argument);  // collides with 2
}

TEST_CASE("permute_alternatives: rank transport and equivariance of tops") {
    const Preference p2 = Preference({0, 1});
    CHECK(permute_alternatives(p2, {0, 1}) == p2);
    CHECK(permute_alternatives(p2, {1, 0}) == Preference({1, 0}));

    const auto gammas3 = std::vector<std::vector<Alt>>{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const Preference& p : enumerate_linear_orders(3)) {
        for (const auto& g : gammas3) {
            const Preference image = permute_alternatives(p, g);
            CHECK(image.top() == g[p.top()]);
            for (Alt s = 0; s < 3; ++s)
                for (Alt t = 0; t < 3; ++t)
                    CHECK(image.prefers(g[s], g[t]) == p.prefers(s, t));
        }
    }
    CHECK_THROWS_AS(permute_alternatives(p2, {0, 0}), std::invalid_argument);
}

TEST_CASE("permute_objects maps top {x} to top {z} under x->z, y->x, z->y") {
    const std::vector<int> mu = {2, 0, 1};  // x->z, y->x, z->y
    Preference p = canonical_separable(X, 3);
    CHECK(p.top() == X);
    CHECK(permute_objects(p, mu, 3).top() == Z);

    // the induced subset action: {x,y} -> {z,x}
    const auto gamma = object_permutation_on_subsets(mu, 3);
    CHECK(gamma[XY] == (Z | X));
    CHECK(gamma[0] == 0);
    CHECK(gamma[7] == 7);
}

TEST_CASE("with_voter / without_voter value semantics and errors") {
    const Preference a = pref({X, Y, E, XY});
    const Profile single({{1, a}});
    const Profile two = single.with_voter(2, pref({XY, X, Y, E}));
    CHECK(two.society_size() == 2);
    CHECK(single.society_size() == 1);  // value semantics: source unchanged
    CHECK(two.without_voter(2) == single);
    CHECK_THROWS_AS(single.without_voter(1), std::invalid_argument);  // last voter
    CHECK_THROWS_AS(two.with_voter(2, a), std::invalid_argument);     // duplicate id
    CHECK_THROWS_AS(single.without_voter(5), std::invalid_argument);  // absent id
}

TEST_CASE("canonical separable representative is separable with the right top") {
    for (int objects : {2, 3}) {
        for (Alt top = 0; top < (1 << objects); ++top) {
            const Preference rep = canonical_separable(top, objects);
            CHECK(rep.top() == top);
            CHECK(is_separable(rep, objects));
        }
    }
}

TEST_CASE("JSON round trip is lossless") {
    const Domain d = Domain::all_subset_orders(2);
    const Preference a = pref({X, Y, E, XY});
    CHECK(preference_from_json(d, preference_to_json(d, a)) == a);

    const Profile pn({{1, a}, {4, pref({XY, X, Y, E})}});
    const json doc = profile_to_json(d, pn);
    CHECK(doc["objects"] == json::array({"x", "y"}));
    const Domain back = profile_universe(doc);
    CHECK(back.alt_count() == 4);
    CHECK(profile_from_json(back, doc) == pn);

    const Domain u = Domain::universal(3);
    const Preference p3 = Preference({2, 0, 1});
    CHECK(preference_to_json(u, p3) == json::array({"C", "A", "B"}));
    CHECK(preference_from_json(u, preference_to_json(u, p3)) == p3);
}

TEST_CASE("domain membership") {
    const Domain sep = Domain::separable(2);
    CHECK(sep.contains(pref({XY, X, Y, E})));
    CHECK_FALSE(sep.contains(pref({X, Y, E, XY})));
    const Preference extra = pref({X, Y, E, XY});
    const Domain plus = Domain::separable_plus_one(2, extra);
    CHECK(plus.contains(extra));
    CHECK(plus.contains(pref({XY, X, Y, E})));
    CHECK_FALSE(plus.contains(pref({E, X, XY, Y})));
    CHECK(plus.enumerate().size() == 9);
}
