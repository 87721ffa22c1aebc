// axiomlab: enumeration, rule evaluation, axiom checks and theorem
// verification for voting rules over variable electorates.
//
// Exit codes: 0 = pass/confirmed, 1 = fail/refuted, 2 = inconclusive or
// input/configuration error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "axiomlab/verify.hpp"

namespace {

using namespace axiomlab;

struct Output {
    bool as_json = false;
    std::string path;

    void emit(const json& doc, const std::string& human) const {
        const std::string text = as_json ? doc.dump(2) : human;
        if (!path.empty()) {
            std::ofstream out(path);
            out << text << '\n';
        }
        std::cout << text << '\n';
    }
};

std::string render_preference(const Domain& d, const Preference& p) {
    std::string s;
    for (std::size_t i = 0; i < p.order().size(); ++i) {
        if (i) s += " > ";
        s += d.alt_name(p.order()[i]);
    }
    return s;
}

Domain domain_for(const std::string& name, int objects, int alts) {
    if (name == "all") return Domain::all_subset_orders(objects);
    if (name == "separable") return Domain::separable(objects);
    if (name == "universal") return Domain::universal(alts);
    throw CLI::ValidationError("--domain", "unknown domain: " + name);
}

int cmd_enumerate(const std::string& domain_name, int objects, int alts, bool list,
                  const Output& out) {
    const Domain d = domain_for(domain_name, objects, alts);
    const std::vector<Preference> prefs = d.enumerate();
    json doc = {{"domain", to_string(d.kind())},
                {"alt_count", d.alt_count()},
                {"count", prefs.size()}};
    std::string human = to_string(d.kind()) + " domain over " + std::to_string(d.alt_count()) +
                        " alternatives: " + std::to_string(prefs.size()) + " preferences";
    if (list) {
        json arr = json::array();
        for (const Preference& p : prefs) {
            arr.push_back(preference_to_json(d, p));
            human += "\n  " + render_preference(d, p);
        }
        doc["preferences"] = arr;
    }
    out.emit(doc, human);
    return 0;
}

int cmd_eval(const std::string& rule_name, const std::string& profile_path, const Output& out) {
    std::ifstream in(profile_path);
    if (!in) {
        std::cerr << "error: cannot open profile file: " << profile_path << '\n';
        return 2;
    }
    const json doc = json::parse(in);
    // ext:* rules accept any subset order; bare separable-domain rules insist
    // on separable ballots.
    const Rule probe_rule = [&] {
        const Domain d0 = profile_universe(doc);
        const auto reg = make_rule_registry(d0);
        if (!reg.count(rule_name)) throw std::invalid_argument("unknown rule: " + rule_name);
        return reg.at(rule_name);
    }();
    const DomainKind kind = probe_rule.home == DomainKind::Separable
                                ? DomainKind::Separable
                                : DomainKind::AllSubsetOrders;
    const Domain d = profile_universe(doc, kind);
    const Profile pn = profile_from_json(d, doc);
    for (const auto& [id, p] : pn.voters()) {
        if (!d.contains(p)) {
            std::cerr << "error: voter " << id << " holds a preference outside the "
                      << to_string(d.kind()) << " domain of rule " << rule_name << '\n';
            return 2;
        }
    }
    const Rule rule = make_rule_registry(d).at(rule_name);
    const Alt result = rule(d, pn);
    out.emit(json{{"rule", rule_descriptor(rule)},
                  {"profile", profile_to_json(d, pn)},
                  {"output", alt_to_json(d, result)}},
             rule_name + "(" + profile_path + ") = " + d.alt_name(result));
    return 0;
}

CheckBounds bounds_from(int nmax, int npmax, const std::string& prefs) {
    CheckBounds b;
    b.n_max = nmax;
    b.np_max = npmax;
    if (prefs == "full") b.pref_mode = CheckBounds::PrefMode::Full;
    if (prefs == "probe") b.pref_mode = CheckBounds::PrefMode::Probe;
    return b;
}

int cmd_check(const std::string& rule_name, const std::string& axiom, int objects, int nmax,
              int npmax, const std::string& prefs, const Output& out) {
    const Domain d = Domain::all_subset_orders(objects);
    const auto reg = make_rule_registry(d);
    if (!reg.count(rule_name)) {
        std::cerr << "error: unknown rule: " << rule_name << '\n';
        return 2;
    }
    AxiomChecker checker(d, bounds_from(nmax, npmax, prefs));
    const CheckResult res = checker.check(reg.at(rule_name), axiom);
    json doc = {{"rule", rule_name},
                {"axiom", axiom},
                {"bounds", res.bounds},
                {"verdict", res.pass ? "pass" : "fail"}};
    std::string human = rule_name + " / " + axiom + ": " + (res.pass ? "pass" : "fail") +
                        " (within bounds)";
    if (!res.pass) {
        doc["witness"] = res.witness;
        human += "\nwitness:\n" + res.witness.dump(2);
    }
    out.emit(doc, human);
    return res.pass ? 0 : 1;
}

int cmd_verify(const std::string& theorem, const std::string& rule_name, int objects, int alts,
               int n, int nmax, int npmax, long long budget, const Output& out) {
    VerdictReport rep;
    CheckBounds bounds = bounds_from(nmax, npmax, "auto");
    if (theorem == "lemma1" || theorem == "prop1") {
        const Domain d = Domain::all_subset_orders(objects);
        const auto reg = make_rule_registry(d);
        if (!reg.count(rule_name)) {
            std::cerr << "error: unknown rule: " << rule_name << '\n';
            return 2;
        }
        AxiomChecker checker(d, bounds);
        rep = theorem == "lemma1" ? verify_lemma1(reg.at(rule_name), checker)
                                  : verify_prop1(reg.at(rule_name), checker);
    } else if (theorem == "prop2") {
        rep = verify_prop2(Domain::all_subset_orders(objects), bounds);
    } else if (theorem == "remark2") {
        rep = verify_remark2(alts, n);
    } else if (theorem == "thm1") {
        rep = verify_theorem1(objects, 1, std::max(nmax, 4), budget);
    } else if (theorem == "thm2") {
        rep = verify_theorem2(objects, bounds);
    } else if (theorem == "independence") {
        rep = independence_matrix(objects, bounds);
    } else {
        std::cerr << "error: unknown theorem: " << theorem << '\n';
        return 2;
    }
    out.emit(rep.to_json(), "theorem " + rep.theorem + ": " + rep.outcome + "\n" +
                                rep.artifacts.dump(2));
    return rep.exit_code();
}

int cmd_matrix(int objects, int nmax, int npmax, const Output& out) {
    CheckBounds bounds = bounds_from(nmax, npmax, "auto");
    const VerdictReport rep = independence_matrix(objects, bounds);
    std::string human = "independence matrix (objects=" + std::to_string(objects) + "):\n";
    for (const auto& [rule, row] : rep.artifacts["matrix"].items()) {
        human += "  " + rule + ":";
        for (const auto& [ax, pass] : row.items())
            human += " " + ax + "=" + (pass.get<bool>() ? "pass" : "FAIL");
        human += "\n";
    }
    human += "verdict: " + rep.outcome;
    out.emit(rep.to_json(), human);
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"axiomlab: axiom verification for voting rules over variable electorates"};
    app.require_subcommand(1);

    Output out;
    int seed = 0;  // reserved; everything in v1 is deterministic
    app.add_flag("--json", out.as_json, "emit JSON instead of human-readable text");
    app.add_option("--out", out.path, "also write the report to this file");
    app.add_option("--seed", seed, "reserved for future randomized modes (unused)");

    std::string domain_name = "all", rule_name = "quota1", axiom = "participation",
                theorem = "independence", profile_path, prefs = "auto";
    int objects = 2, alts = 2, n = 2, nmax = 3, npmax = 2;
    long long budget = 60;
    bool list = false;

    // let --json/--out/--seed be given after the subcommand name too
    auto* enumerate = app.add_subcommand("enumerate", "enumerate a preference domain");
    enumerate->fallthrough();
    enumerate->add_option("--domain", domain_name, "all | separable | universal");
    enumerate->add_option("--objects", objects, "object count for subset domains");
    enumerate->add_option("--alts", alts, "alternative count for the universal domain");
    enumerate->add_flag("--list", list, "print every preference");

    auto* eval = app.add_subcommand("eval", "evaluate a rule on a profile JSON file");
    eval->fallthrough();
    eval->add_option("--rule", rule_name, "rule name from the registry")->required();
    eval->add_option("--profile", profile_path, "path to a profile JSON document")->required();

    auto* check = app.add_subcommand("check", "check one axiom for one rule within bounds");
    check->fallthrough();
    check->add_option("--rule", rule_name)->required();
    check->add_option("--axiom", axiom)->required();
    check->add_option("--objects", objects);
    check->add_option("--nmax", nmax);
    check->add_option("--npmax", npmax);
    check->add_option("--prefs", prefs, "auto | full | probe preference set");

    auto* verify = app.add_subcommand("verify", "run a theorem-level verification");
    verify->fallthrough();
    verify->add_option("--theorem", theorem,
                       "lemma1 | prop1 | prop2 | remark2 | thm1 | thm2 | independence")
        ->required();
    verify->add_option("--rule", rule_name, "rule under test (lemma1/prop1)");
    verify->add_option("--objects", objects);
    verify->add_option("--alts", alts, "alternative count (remark2)");
    verify->add_option("--n", n, "society size (remark2)");
    verify->add_option("--nmax", nmax);
    verify->add_option("--npmax", npmax);
    verify->add_option("--budget", budget, "search budget in seconds (thm1)");

    auto* matrix = app.add_subcommand("matrix", "render the 5x5 independence matrix");
    matrix->fallthrough();
    matrix->add_option("--objects", objects);
    matrix->add_option("--nmax", nmax);
    matrix->add_option("--npmax", npmax);

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed()) return cmd_enumerate(domain_name, objects, alts, list, out);
        if (eval->parsed()) return cmd_eval(rule_name, profile_path, out);
        if (check->parsed()) return cmd_check(rule_name, axiom, objects, nmax, npmax, prefs, out);
        if (verify->parsed())
            return cmd_verify(theorem, rule_name, objects, alts, n, nmax, npmax, budget, out);
        if (matrix->parsed()) return cmd_matrix(objects, nmax, npmax, out);
    } catch (const axiomlab::EnumerationCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
