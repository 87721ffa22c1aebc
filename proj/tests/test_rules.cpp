#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "axiomlab/axioms.hpp"
#include "axiomlab/rules.hpp"

using namespace axiomlab;

namespace {
constexpr Alt E = 0, X = 1, Y = 2, XY = 3, Z = 4;

Profile profile_with_tops(int objects, const std::vector<std::pair<int, Alt>>& tops) {
    std::map<int, Preference> by_voter;
    for (const auto& [id, top] : tops) by_voter.emplace(id, canonical_separable(top, objects));
    return Profile(std::move(by_voter));
}
}  // namespace

TEST_CASE("f_const always selects the whole set") {
    const Domain d = Domain::all_subset_orders(2);
    const auto reg = make_rule_registry(d);
    const Rule& f = reg.at("f_const");
    const Profile single = profile_with_tops(2, {{1, X}});
    CHECK(f(d, single) == XY);
    CHECK(f(d, profile_with_tops(2, {{1, E}, {2, E}})) == XY);
    CHECK(f(d, single.with_voter(9, canonical_separable(E, 2))) == f(d, single));
}

TEST_CASE("f_tilde: second-ranked whole set vs whole set at the bottom") {
    const Domain d = Domain::all_subset_orders(2);
    const auto reg = make_rule_registry(d);
    const Rule& f = reg.at("f_tilde");
    // both voters: {x} > {x,y} > {y} > empty  (whole set ranked second)
    const Preference full_second({X, XY, Y, E});
    CHECK(f(d, Profile({{1, full_second}, {2, full_second}})) == X);
    // both voters: {x} > {y} > empty > {x,y}  (whole set at the bottom)
    const Preference full_bottom({X, Y, E, XY});
    CHECK(f(d, Profile({{1, full_bottom}, {2, full_bottom}})) == XY);
    // same tops, different outputs: the tops-onliness counterexample
    CHECK(full_second.top() == full_bottom.top());
    // nobody ranks the whole set second -> fallback branch
    CHECK(f(d, Profile({{1, Preference({XY, X, Y, E})}})) == XY);
    // mixed membership: a voter outside the eligible set does not block
    CHECK(f(d, Profile({{1, full_second}, {2, Preference({XY, X, Y, E})}})) == X);
}

TEST_CASE("f_min follows the least voter id") {
    const Domain d = Domain::all_subset_orders(2);
    const auto reg = make_rule_registry(d);
    const Rule& f = reg.at("f_min");
    const Profile pn = profile_with_tops(2, {{3, X}, {7, Y}});
    CHECK(f(d, pn) == X);
    CHECK(f(d, profile_with_tops(2, {{5, Y}})) == Y);
    // relabeling 3 -> 9 flips the minimum: the non-anonymity witness
    CHECK(f(d, permute_voters(pn, {{3, 9}})) == Y);
}

TEST_CASE("f_star keeps objects named in exactly one voter's top") {
    const Domain d = Domain::all_subset_orders(3);
    const auto reg = make_rule_registry(d);
    const Rule& f = reg.at("f_star");
    CHECK(f(d, profile_with_tops(3, {{1, XY}, {2, X | Y | Z}})) == Z);
    CHECK(f(d, profile_with_tops(3, {{2, X | Y | Z}})) == (X | Y | Z));
    // duplicate tops collapse: counting distinct tops, {x} appears in exactly
    // one of them, so cloning a voter cannot dilute the outcome
    CHECK(f(d, profile_with_tops(3, {{1, X}, {2, X}})) == X);
}

TEST_CASE("f_star_voters counts duplicates and loses false-name-proofness") {
    const Domain d = Domain::all_subset_orders(3);
    const auto reg = make_rule_registry(d);
    const Rule& f = reg.at("f_star_voters");
    // with duplicates counted, a repeated top cancels its own objects
    CHECK(f(d, profile_with_tops(3, {{1, X}, {2, X}})) == E);

    // the checker finds a false-name deviation and the witness replays
    const Domain d2 = Domain::all_subset_orders(2);
    const auto reg2 = make_rule_registry(d2);
    CheckBounds b;
    b.n_max = 2;
    b.np_max = 1;
    AxiomChecker checker(d2, b);
    const CheckResult res = checker.check_fnp(reg2.at("f_star_voters"));
    REQUIRE_FALSE(res.pass);
    CHECK(checker.replay_witness(reg2.at("f_star_voters"), res.witness));
}

TEST_CASE("f_succ picks the best top under the default subset order") {
    const Domain d = Domain::all_subset_orders(3);
    const auto reg = make_rule_registry(d);
    const Rule& f = reg.at("f_succ");
    // default order ranks larger sets first, then lexicographically: {x} before {z}
    CHECK(f(d, profile_with_tops(3, {{1, X}, {2, Z}})) == X);
    CHECK(f(d, profile_with_tops(3, {{1, Y}, {2, Z}})) == Y);
    CHECK(f(d, profile_with_tops(3, {{1, Z}})) == Z);
    // the object-relabeling x->z, y->x, z->y sends the witness profile
    // tops {x},{z} to {z},{y}; the rule then picks {y}, not mu({x}) = {z}
    const std::vector<int> mu = {2, 0, 1};
    const Profile image = permute_objects(profile_with_tops(3, {{1, X}, {2, Z}}), mu, 3);
    CHECK(f(d, image) == Y);
    CHECK(object_permutation_on_subsets(mu, 3)[X] == Z);
}

TEST_CASE("f_gt: strict majority over distinct tops") {
    const Domain d = Domain::all_subset_orders(3);
    const auto reg = make_rule_registry(d);
    const Rule& f = reg.at("f_gt");
    const Alt S = Z;  // S = {z}, added object x, then y
    CHECK(f(d, profile_with_tops(3, {{1, S}, {2, S | X}})) == S);
    CHECK(f(d, profile_with_tops(3, {{1, S}, {2, S | X}, {3, S | X | Y}})) == (S | X));
    // duplicated ballots collapse to one distinct top
    CHECK(f(d, profile_with_tops(3, {{1, XY}, {2, XY}})) == XY);
}

TEST_CASE("f_geq: weak majority over distinct tops") {
    const Domain d3 = Domain::all_subset_orders(3);
    const auto reg3 = make_rule_registry(d3);
    const Rule& f3 = reg3.at("f_geq");
    const Alt S = Z;
    CHECK(f3(d3, profile_with_tops(3, {{1, S}, {2, S | X}})) == (S | X));
    CHECK(f3(d3, profile_with_tops(3, {{1, E}, {2, X}, {3, Y}})) == E);
    CHECK(f3(d3, profile_with_tops(3, {{1, XY}})) == XY);
}

TEST_CASE("quota rules are union and intersection of tops") {
    const Domain d = Domain::all_subset_orders(2);
    const auto reg = make_rule_registry(d);
    const Profile pn = profile_with_tops(2, {{1, X}, {2, Y}});
    CHECK(reg.at("quota1")(d, pn) == XY);
    CHECK(reg.at("quota_unanimous")(d, pn) == E);
    const Profile single = profile_with_tops(2, {{1, XY}});
    CHECK(reg.at("quota1")(d, single) == XY);
    CHECK(reg.at("quota_unanimous")(d, single) == XY);

    // oracle identity, exhaustive over tops vectors with up to 3 voters
    for (Alt a = 0; a < 4; ++a)
        for (Alt b = 0; b < 4; ++b)
            for (Alt c = 0; c < 4; ++c) {
                const Profile p3 = profile_with_tops(2, {{1, a}, {2, b}, {3, c}});
                CHECK(reg.at("quota1")(d, p3) == (a | b | c));
                CHECK(reg.at("quota_unanimous")(d, p3) == (a & b & c));
            }
}

TEST_CASE("majority-tops rules are invariant under ballot duplication") {
    const Domain d = Domain::all_subset_orders(2);
    const auto reg = make_rule_registry(d);
    for (const std::string name : {"f_gt", "f_geq"}) {
        const Rule& f = reg.at(name);
        // all tops vectors up to 3 voters; append a duplicate of voter 1's top
        for (Alt a = 0; a < 4; ++a)
            for (Alt b = 0; b < 4; ++b)
                for (Alt c = 0; c < 4; ++c) {
                    const Profile p3 = profile_with_tops(2, {{1, a}, {2, b}, {3, c}});
                    const Profile p4 = p3.with_voter(4, canonical_separable(a, 2));
                    CHECK(f(d, p4) == f(d, p3));
                }
    }
}

TEST_CASE("tops-only rules ignore everything below the tops") {
    const Domain d = Domain::all_subset_orders(2);
    const auto reg = make_rule_registry(d);
    const auto orders = d.enumerate();
    for (const std::string name : {"f_const", "f_min", "f_star", "f_succ", "f_gt", "f_geq",
                                   "quota1", "quota_unanimous"}) {
        const Rule& f = reg.at(name);
        CHECK(f.tops_only);
        for (const Preference& p1 : orders)
            for (const Preference& q1 : orders) {
                if (p1.top() != q1.top()) continue;
                for (const Preference& p2 : orders) {
                    const Alt out_p = f(d, Profile({{1, p1}, {2, p2}}));
                    const Alt out_q = f(d, Profile({{1, q1}, {2, p2}}));
                    CHECK(out_p == out_q);
                }
            }
    }
}

TEST_CASE("tops-only extension agrees with the base rule and is representative-free") {
    const Domain sep = Domain::separable(2);
    const Domain all = Domain::all_subset_orders(2);
    const auto reg = make_rule_registry(all);
    const auto separable = sep.enumerate();
    for (const std::string base : {"f_gt", "f_geq"}) {
        const Rule& f = reg.at(base);
        const Rule& ext = reg.at("ext:" + base);
        // identity extension: same outputs on all two-voter separable profiles
        for (const Preference& p1 : separable)
            for (const Preference& p2 : separable) {
                const Profile pn({{1, p1}, {2, p2}});
                CHECK(ext(all, pn) == f(all, pn));
            }
        // representative independence: any profile with the same tops vector
        // evaluates identically, including non-separable representatives
        for (const Preference& p1 : all.enumerate())
            for (const Preference& p2 : all.enumerate()) {
                const Profile pn({{1, p1}, {2, p2}});
                const Profile canon({{1, canonical_separable(p1.top(), 2)},
                                     {2, canonical_separable(p2.top(), 2)}});
                CHECK(ext(all, pn) == ext(all, canon));
            }
    }
}

TEST_CASE("remark-1 style rules") {
    const Domain d = Domain::all_subset_orders(2);
    const auto reg = make_rule_registry(d);
    const Preference p({X, Y, E, XY});
    CHECK(reg.at("r1_top")(d, Profile({{1, p}, {2, canonical_separable(Y, 2)}})) == X);
    CHECK(reg.at("r1_top")(d, Profile({{2, p}})) == E);
    CHECK(reg.at("r1_bottom")(d, Profile({{1, p}})) == XY);
    CHECK(reg.at("r1_bottom")(d, Profile({{3, p}})) == E);
}

TEST_CASE("registry and descriptors") {
    const Domain d = Domain::all_subset_orders(2);
    const auto reg = make_rule_registry(d);
    for (const std::string name : {"f_const", "f_tilde", "f_min", "f_star", "f_succ", "f_gt",
                                   "f_geq", "quota1", "quota_unanimous", "ext:f_gt",
                                   "ext:f_geq"}) {
        REQUIRE(reg.count(name) == 1);
        const json desc = rule_descriptor(reg.at(name));
        CHECK(desc["name"] == name);
        CHECK(desc.contains("domain"));
    }
    // determinism: repeated evaluation yields identical output
    const Profile pn = profile_with_tops(2, {{1, X}, {2, XY}});
    for (const auto& [name, rule] : reg) {
        const Alt once = rule(d, pn);
        CHECK(rule(d, pn) == once);
    }
}

TEST_CASE("expected axiom vectors cover the independence layout") {
    const Domain d = Domain::all_subset_orders(2);
    const auto reg = make_rule_registry(d);
    const std::map<std::string, std::string> designated = {
        {"f_const", "ontoness"},
        {"f_tilde", "tops_onliness"},
        {"f_min", "fnp"},
        {"f_star", "participation"},
        {"f_succ", "object_neutrality"}};
    for (const auto& [name, failing] : designated) {
        const auto& expected = reg.at(name).expected;
        REQUIRE(expected.size() == 5);
        for (const auto& [axiom, verdict] : expected) CHECK(verdict == (axiom != failing));
    }
}
