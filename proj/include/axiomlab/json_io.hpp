#pragma once

#include <json.hpp>

#include "axiomlab/domain.hpp"

namespace axiomlab {

using json = nlohmann::ordered_json;

// Alternatives serialize as a sorted array of object names in subsets mode
// ("{x,y}" -> ["x","y"]) and as a plain label string in universal mode.

inline json alt_to_json(const Domain& d, Alt a) {
    if (!d.subsets_mode()) return json(d.alt_name(a));
    json arr = json::array();
    for (int x = 0; x < d.objects(); ++x)
        if (a & (1 << x)) arr.push_back(Domain::object_name(x));
    return arr;
}

inline Alt alt_from_json(const Domain& d, const json& j) {
    if (!d.subsets_mode()) {
        const std::string label = j.get<std::string>();
        for (Alt a = 0; a < d.alt_count(); ++a)
            if (d.alt_name(a) == label) return a;
        throw std::invalid_argument("unknown alternative label: " + label);
    }
    Alt mask = 0;
    for (const auto& name : j) mask |= 1 << d.object_index(name.get<std::string>());
    return mask;
}

/// Preference: ordered array of alternatives, best first.
inline json preference_to_json(const Domain& d, const Preference& p) {
    json arr = json::array();
    for (Alt a : p.order()) arr.push_back(alt_to_json(d, a));
    return arr;
}

inline Preference preference_from_json(const Domain& d, const json& j) {
    std::vector<Alt> order;
    for (const auto& e : j) order.push_back(alt_from_json(d, e));
    if (static_cast<int>(order.size()) != d.alt_count())
        throw std::invalid_argument("preference does not cover the universe");
    return Preference(std::move(order));
}

/// Profile: self-contained document carrying its universe, so that stored
/// witnesses replay without extra context.
inline json profile_to_json(const Domain& d, const Profile& pn) {
    json doc;
    if (d.subsets_mode()) {
        json objs = json::array();
        for (int x = 0; x < d.objects(); ++x) objs.push_back(Domain::object_name(x));
        doc["objects"] = objs;
    } else {
        json alts = json::array();
        for (Alt a = 0; a < d.alt_count(); ++a) alts.push_back(d.alt_name(a));
        doc["alternatives"] = alts;
    }
    json voters = json::object();
    for (const auto& [id, p] : pn.voters()) voters[std::to_string(id)] = preference_to_json(d, p);
    doc["voters"] = voters;
    return doc;
}

/// Recovers the universe declared in a profile document. The domain kind is
/// the caller's business (it depends on which rule the profile is fed to).
inline Domain profile_universe(const json& doc, DomainKind kind = DomainKind::AllSubsetOrders) {
    if (doc.contains("objects")) {
        const int objects = static_cast<int>(doc["objects"].size());
        switch (kind) {
            case DomainKind::Separable: return Domain::separable(objects);
            default: return Domain::all_subset_orders(objects);
        }
    }
    if (doc.contains("alternatives"))
        return Domain::universal(static_cast<int>(doc["alternatives"].size()));
    throw std::invalid_argument("profile document lacks a universe declaration");
}

inline Profile profile_from_json(const Domain& d, const json& doc) {
    std::map<int, Preference> by_voter;
    for (const auto& [key, val] : doc.at("voters").items()) {
        const int id = std::stoi(key);
        by_voter.emplace(id, preference_from_json(d, val));
    }
    return Profile(std::move(by_voter));
}

}  // namespace axiomlab
