#pragma once

// Stable structured-output records (one JSON object per report line). Key
// order is fixed so equal runs are byte-identical regardless of --jobs.

#include <json.hpp>

#include "loopkit/loopfile.hpp"
#include "loopkit/registry.hpp"

namespace loopkit {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const Witness& w) {
    ordered_json j;
    ordered_json assignment = ordered_json::object();
    for (const auto& [var, val] : w.assignment) assignment[var] = val;
    j["assignment"] = std::move(assignment);
    if (w.isotope) {
        ordered_json iso;
        switch (w.isotope->kind) {
            case IsotopeSpec::Kind::full:
                iso["kind"] = "full";
                iso["u"] = w.isotope->u;
                iso["v"] = w.isotope->v;
                break;
            case IsotopeSpec::Kind::left:
                iso["kind"] = "left";
                iso["v"] = w.isotope->v;
                break;
            case IsotopeSpec::Kind::right:
                iso["kind"] = "right";
                iso["u"] = w.isotope->u;
                break;
        }
        j["isotope"] = std::move(iso);
    } else {
        j["isotope"] = nullptr;
    }
    j["detail"] = w.detail;
    return j;
}

inline ordered_json to_json(const std::string& loop_name, const PropertyReport& rep) {
    ordered_json j;
    j["record"] = "property";
    j["loop"] = loop_name;
    j["property"] = rep.property;
    j["method"] = method_name(rep.method);
    j["holds"] = rep.holds;
    j["witness"] = rep.witness ? to_json(*rep.witness) : ordered_json(nullptr);
    return j;
}

inline ordered_json to_json(const ClaimReport& rep) {
    ordered_json j;
    j["record"] = "claim";
    j["id"] = rep.id;
    j["low_confidence"] = rep.low_confidence;
    j["tested"] = rep.tested;
    j["vacuous"] = rep.vacuous;
    j["verified"] = rep.verified;
    ordered_json vs = ordered_json::array();
    for (const auto& v : rep.violations) {
        ordered_json vj;
        vj["loop"] = v.loop;
        vj["detail"] = v.detail;
        vs.push_back(std::move(vj));
    }
    j["violations"] = std::move(vs);
    return j;
}

inline ordered_json identity_record(const std::string& loop_name, const std::string& text,
                                    const CheckResult& res) {
    ordered_json j;
    j["record"] = "identity";
    j["loop"] = loop_name;
    j["identity"] = text;
    j["holds"] = res.holds;
    if (res.counterexample) {
        ordered_json cx = ordered_json::object();
        for (const auto& [var, val] : *res.counterexample) cx[var] = val;
        j["counterexample"] = std::move(cx);
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

inline ordered_json catalog_record(const RegistryEntry& e) {
    ordered_json j;
    j["record"] = "catalog-identity";
    j["key"] = e.key;
    j["label"] = e.label;
    j["identity"] = e.identity.text();
    j["group_valid"] = e.group_valid;
    j["low_confidence"] = e.low_confidence;
    j["note"] = e.note;
    return j;
}

}  // namespace loopkit
