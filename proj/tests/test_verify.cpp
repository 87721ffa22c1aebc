#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "axiomlab/verify.hpp"

using namespace axiomlab;

namespace {
CheckBounds bounds(int n_max, int np_max) {
    CheckBounds b;
    b.n_max = n_max;
    b.np_max = np_max;
    return b;
}

json strip_time(const VerdictReport& rep) {
    json j = rep.to_json();
    j.erase("wall_ms");
    return j;
}
}  // namespace

TEST_CASE("lemma1: duplicate-vote invariance for FNP + participation rules") {
    const Domain sep = Domain::separable(2);
    const auto reg_sep = make_rule_registry(sep);
    AxiomChecker sep_checker(sep, bounds(2, 1));

    const VerdictReport quota = verify_lemma1(reg_sep.at("quota1"), sep_checker);
    CHECK(quota.outcome == "confirmed");
    CHECK(quota.exit_code() == 0);
    CHECK(quota.artifacts["cases_checked"].get<long long>() > 0);

    const Domain all = Domain::all_subset_orders(2);
    const auto reg = make_rule_registry(all);
    AxiomChecker checker(all, bounds(2, 1));
    CHECK(verify_lemma1(reg.at("f_const"), checker).outcome == "confirmed");

    const VerdictReport min = verify_lemma1(reg.at("f_min"), checker);
    CHECK(min.outcome == "precondition-not-met");
    CHECK(min.exit_code() == 2);
    CHECK(min.artifacts["fnp_pass"] == false);
}

TEST_CASE("prop1: identity-swap invariance") {
    const Domain sep = Domain::separable(2);
    const auto reg = make_rule_registry(sep);
    AxiomChecker checker(sep, bounds(3, 2));
    CHECK(verify_prop1(reg.at("quota_unanimous"), checker).outcome == "confirmed");
    CHECK(verify_prop1(reg.at("f_gt"), checker).outcome == "confirmed");

    const Domain all = Domain::all_subset_orders(2);
    const auto reg_all = make_rule_registry(all);
    AxiomChecker checker_all(all, bounds(2, 1));
    CHECK(verify_prop1(reg_all.at("f_min"), checker_all).outcome == "precondition-not-met");
}

TEST_CASE("prop2: FNP + participation imply anonymity, catalog and full rule space") {
    const VerdictReport rep = verify_prop2(Domain::all_subset_orders(2), bounds(2, 1));
    CHECK(rep.outcome == "confirmed");

    // two ids are too few: the "follow the larger id on pairs" tables pass
    // every bounded instance but are not anonymous, and are reported as such
    CHECK(rep.artifacts["two_id_scan"]["rule_space_size"] == 256);
    CHECK(rep.artifacts["two_id_scan"]["anonymity_violators"] == 2);

    // with a third id the swap chains become expressible and nothing survives
    CHECK(rep.artifacts["three_id_scan"]["rule_space_size"] == (1LL << 26));
    CHECK(rep.artifacts["three_id_scan"]["anonymity_violators"] == 0);
    CHECK(rep.artifacts["three_id_scan"]["rules_passing_fnp_and_participation"]
              .get<long long>() > 0);

    // the two non-anonymous remark rules confirm Proposition 2's contrapositive
    bool saw_top = false, saw_bottom = false;
    for (const json& row : rep.artifacts["catalog_sweep"]) {
        if (row["rule"] == "r1_top") {
            saw_top = true;
            CHECK(row["participation"] == true);
            CHECK(row["anonymity"] == false);
            CHECK(row["fnp"] == false);  // must fail FNP, or Prop 2 would be violated
        }
        if (row["rule"] == "r1_bottom") {
            saw_bottom = true;
            CHECK(row["fnp"] == true);
            CHECK(row["anonymity"] == false);
            CHECK(row["participation"] == false);
        }
        CHECK(row["consistent"] == true);
    }
    CHECK(saw_top);
    CHECK(saw_bottom);
}

TEST_CASE("remark2: anonymity and neutrality on fixed societies") {
    // two alternatives, two voters: all 16 rules scanned, none passes both
    const VerdictReport r22 = verify_remark2(2, 2);
    CHECK(r22.outcome == "confirmed");
    CHECK(r22.artifacts["compatible"] == false);
    CHECK(r22.artifacts["detail"]["rules_scanned"] == 16);
    CHECK(r22.artifacts["detail"]["rules_passing_both"] == 0);
    CHECK(r22.artifacts["criteria_agree"] == true);

    // a single voter: the top-selecting rule is anonymous and neutral
    const VerdictReport r21 = verify_remark2(2, 1);
    CHECK(r21.outcome == "confirmed");
    CHECK(r21.artifacts["compatible"] == true);

    // three alternatives, two voters: scan/search result must agree with the
    // divisor-sum criterion (3 is not a sum of divisors of 2 other than 1)
    CHECK_FALSE(divisor_sum_representable(3, 2));
    const VerdictReport r32 = verify_remark2(3, 2);
    CHECK(r32.outcome == "confirmed");
    CHECK(r32.artifacts["compatible"] == true);

    // three alternatives, three voters: the Condorcet-cycle profile class is
    // invariant under a 3-cycle, so the orbit search must prove incompatibility
    CHECK(divisor_sum_representable(3, 3));
    const VerdictReport r33 = verify_remark2(3, 3);
    CHECK(r33.outcome == "confirmed");
    CHECK(r33.artifacts["compatible"] == false);
    CHECK(r33.artifacts["detail"]["method"] == "orbit-search");
}

TEST_CASE("divisor-sum criterion") {
    CHECK(divisor_sum_representable(2, 2));   // 2 = 2
    CHECK(divisor_sum_representable(4, 2));   // 4 = 2 + 2
    CHECK_FALSE(divisor_sum_representable(3, 2));
    CHECK(divisor_sum_representable(3, 3));   // 3 = 3
    CHECK_FALSE(divisor_sum_representable(1, 2));
    CHECK(divisor_sum_representable(5, 6));   // 5 = 2 + 3
}

TEST_CASE("theorem 1: UNSAT by deepening, SAT when any family is dropped") {
    const VerdictReport rep = verify_theorem1(2, 1, 4, 120);
    REQUIRE(rep.outcome == "confirmed");
    CHECK(rep.artifacts["unsat_depth"] == 2);

    const json& deepening = rep.artifacts["deepening"];
    REQUIRE(deepening.size() == 2);
    CHECK(deepening[0]["depth"] == 1);
    CHECK(deepening[0]["status"] == "sat");
    CHECK(deepening[0]["recheck_pass"] == true);
    CHECK(deepening[1]["depth"] == 2);
    CHECK(deepening[1]["status"] == "unsat");

    const json& drops = rep.artifacts["drop_one"];
    REQUIRE(drops.size() == 5);
    for (const json& entry : drops) {
        CHECK(entry["status"] == "sat");
        CHECK(entry["recheck_pass"] == true);
        // the dropped family is genuinely absent from the recheck table
        CHECK_FALSE(entry["recheck"].contains(entry["dropped"].get<std::string>()));
    }
}

TEST_CASE("theorem 2: separable domain maximality at two objects") {
    const VerdictReport rep = verify_theorem2(2, bounds(3, 2));
    REQUIRE(rep.outcome == "confirmed");
    CHECK(rep.artifacts["nonseparable_count"] == 16);

    for (const auto& [rule, row] : rep.artifacts["positive"].items())
        for (const auto& [axiom, pass] : row.items())
            CHECK_MESSAGE(pass == true, rule, " failed ", axiom);

    for (const json& entry : rep.artifacts["constructions"]) {
        const bool top_empty = entry["top"] == json::array();
        const bool top_full = entry["top"] == json::array({"x", "y"});
        // the empty-top preferences go through the weak rule only, the
        // full-top ones through the strict rule only, all others through both
        CHECK(entry.contains("f_gt_construction") == !top_empty);
        CHECK(entry.contains("f_geq_construction") == !top_full);
        if (entry.contains("f_gt_construction"))
            CHECK(entry["f_gt_construction"]["violated"] == true);
        if (entry.contains("f_geq_construction"))
            CHECK(entry["f_geq_construction"]["violated"] == true);
        // the construction-free sweep agrees wherever a construction fired
        if (entry.contains("f_gt_construction"))
            CHECK(entry["sweep_f_gt_participation"] == "fail");
        if (entry.contains("f_geq_construction"))
            CHECK(entry["sweep_f_geq_participation"] == "fail");
    }
}

TEST_CASE("independence matrix at two objects") {
    const VerdictReport rep = independence_matrix(2, bounds(3, 2));
    CHECK(rep.outcome == "confirmed");
    CHECK(rep.artifacts["mismatches"] == json::array());
    const json& matrix = rep.artifacts["matrix"];
    CHECK(matrix["f_const"]["ontoness"] == false);
    CHECK(matrix["f_tilde"]["tops_onliness"] == false);
    CHECK(matrix["f_min"]["fnp"] == false);
    CHECK(matrix["f_star"]["participation"] == false);
    CHECK(matrix["f_succ"]["object_neutrality"] == false);
    for (const auto& [rule, row] : matrix.items()) {
        int fails = 0;
        for (const auto& [axiom, pass] : row.items())
            if (pass == false) ++fails;
        CHECK(fails == 1);
    }
}

TEST_CASE("verdict reports are reproducible modulo wall time") {
    CHECK(strip_time(verify_prop2(Domain::all_subset_orders(2), bounds(2, 1))) ==
          strip_time(verify_prop2(Domain::all_subset_orders(2), bounds(2, 1))));
    CHECK(strip_time(verify_remark2(2, 2)) == strip_time(verify_remark2(2, 2)));
    CHECK(strip_time(verify_theorem1(2, 1, 4, 120)) ==
          strip_time(verify_theorem1(2, 1, 4, 120)));
}

TEST_CASE("verdict report schema and exit codes") {
    const VerdictReport rep = verify_remark2(2, 2);
    const json doc = rep.to_json();
    CHECK(doc["schema"] == "axiomlab.verdict/1");
    CHECK(doc["theorem"] == "remark2");
    CHECK(doc.contains("params"));
    CHECK(doc.contains("artifacts"));
    CHECK(doc.contains("wall_ms"));

    VerdictReport fake;
    fake.outcome = "refuted";
    CHECK(fake.exit_code() == 1);
    fake.outcome = "inconclusive";
    CHECK(fake.exit_code() == 2);
    fake.outcome = "precondition-not-met";
    CHECK(fake.exit_code() == 2);
}
