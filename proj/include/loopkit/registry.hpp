#pragma once

// Named catalog of every identity the kernel knows: the Osborn forms, the
// characterizations of universal / left universal / right universal Osborn
// loops, the OSI consequence families, the {4}-notation instances, the
// definitional battery, and auxiliary identities used by the claim catalog.
//
// Keys are stable strings (CLI arguments); labels carry the catalog's source
// numbering. group_valid marks identities that hold in every group (checked
// by the test suite); low_confidence marks statements that needed repair from
// a garbled source — their failures downgrade to warnings.

#include <string_view>
#include <vector>

#include "loopkit/identity.hpp"

namespace loopkit {

enum class IdentityFamily {
    osborn_core,
    characterization,
    osi_full,
    osi_left,
    osi_right,
    four_notation,
    definitional,
    auxiliary,
};

struct RegistryEntry {
    std::string key;
    std::string label;
    IdentityFamily family;
    bool group_valid;
    bool low_confidence;
    std::string note;
    Identity identity;
};

struct UnknownIdentityError final : Error {
    explicit UnknownIdentityError(std::string_view key)
        : Error("unknown identity: " + std::string(key)) {}
};

inline const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> entries = [] {
        std::vector<RegistryEntry> r;
        auto add = [&r](std::string key, std::string label, IdentityFamily fam, bool gv, bool lc,
                        std::string formula, std::string note = "") {
            r.push_back({key, std::move(label), fam, gv, lc, std::move(note),
                         Identity::parse(key, formula)});
        };
        using F = IdentityFamily;

        // Osborn loop forms.
        add("OS0", "Equation (1.1)", F::osborn_core, true, false,
            "x*((y*z)*x) = (x*((y*x^l)*x))*(z*x)");
        add("OS1", "Equation (1.2); equation (2) with y E_x = (y*x)*x^r expanded", F::osborn_core,
            true, false, "x*((y*z)*x) = (x*((y*x)*x^r))*(z*x)");
        add("GM", "Equation (1) with z E_y = y^l*(y*z) expanded (generalized Moufang / M-loop)",
            F::osborn_core, true, false, "(y*x)*((y^l*(y*z))*y) = (y*(x*z))*y");

        // Characterizations of universality.
        add("OS0'", "Theorem 1:4", F::characterization, true, false,
            "x * u\\((y*z)/v * u\\(x*v)) = "
            "(x * u\\((y * u\\(((u*v)/(u\\(x*v)))*v))/v * u\\(x*v)))/v * u\\((u*z)/v * u\\(x*v))");
        add("OS1'", "Theorem 1:4", F::characterization, true, false,
            "x * u\\((y*z)/v * u\\(x*v)) = "
            "(x * u\\((y * u\\(x*v))/v * x\\(u*v)))/v * u\\((u*z)/v * u\\(x*v))");
        add("OS0^l", "Theorem 1:4.1", F::characterization, true, false,
            "x * ((y*(z*v))/v * (x*v)) = (x * ((y*((v/(x*v))*v))/v * (x*v)))/v * (z*(x*v))");
        add("OS1^l", "Theorem 1:4.1", F::characterization, true, false,
            "x * ((y*(z*v))/v * (x*v)) = (x * ((y*(x*v))/v * x\\v))/v * (z*(x*v))");
        add("OS0^r", "Theorem 1:4.11", F::characterization, true, false,
            "(u*x) * u\\((y*z)*x) = ((u*x) * u\\((y * u\\(u/x))*x)) * u\\((u*z)*x)");
        add("OS1^r", "Theorem 1:4.11", F::characterization, true, false,
            "(u*x) * u\\((y*z)*x) = ((u*x) * u\\((y*x) * (u*x)\\u)) * u\\((u*z)*x)");

        // Consequences in universal Osborn loops (Lemma 1:9a).
        add("OSI_01", "Lemma 1:9a", F::osi_full, true, false,
            "y * u\\(((u*v)/(u\\(x*v)))*v) = ((y * u\\(x*v))/v * x\\(u*v))/(u\\(x*v)) * v");
        add("OSI_01.1", "Lemma 1:9a", F::osi_full, true, false,
            "((u*z)/v * u\\(((y*v) * u\\(((u*v)/z)*v))/v * z))/v * u\\((u/v)*z) = "
            "(u*z)/v * u\\(y*z)");
        add("OSI_01.2", "Lemma 1:9a", F::osi_full, true, false,
            "(u*z)/v * u\\(((y*v)*z)/v * ((u*z)/v)\\(u*v)) = "
            "((u*z)/v * u\\(y*z))/(u\\((u/v)*z)) * v");
        add("OSI_01.1.1", "Lemma 1:9a", F::osi_full, true, false,
            "(u\\((((u*y)*u) * u\\((u*u)*u))/u))/u * u^r = y");
        add("OSI_01.2.1", "Lemma 1:9a", F::osi_full, true, false,
            "v^l * u\\(((y*v)*u^r)/v * v^l\\(u*v)) = (v^l * u\\(y*u^r))/(u\\((u/v)*u^r)) * v");
        add("OSI_01.2.2", "Lemma 1:9a", F::osi_full, true, false,
            "v^l * (y * v^l\\v) = (v^l*y)/v^l * v");
        add("OSI_01.u1", "Lemma 1:9a (unnamed)", F::osi_full, true, false,
            "(u*u) * u\\((u*u)*u) = (u*(u*u))*u");
        add("OSI_01.u2", "Lemma 1:9a (unnamed)", F::osi_full, true, false,
            "v^l * (v * v^l\\v) = v^l^l * v");
        add("OSI_01.u3", "Lemma 1:9a (unnamed)", F::osi_full, true, false,
            "v^l^l * v = (v^l * (v*v)) * v");
        add("OSI_01.u4", "Lemma 1:9a (unnamed)", F::osi_full, true, false,
            "v * (v^r * v\\v^r) = v^l * v^r");

        // Consequences in left universal Osborn loops (Lemma 1:9.1a).
        add("OSI_01^l", "Lemma 1:9.1a", F::osi_left, true, false,
            "y * ((v/(x*v))*v) = ((y*(x*v))/v * x\\v)/(x*v) * v");
        add("OSI_01.1^l", "Lemma 1:9.1a", F::osi_left, true, false,
            "(z * (((y*v) * ((v/(z*v))*v))/v * (z*v)))/v * (v^l * (z*v)) = z * (y*(z*v))",
            "right side per the derivation; the displayed form transposes the final product");
        add("OSI_01.2^l", "Lemma 1:9.1a", F::osi_left, true, false,
            "z * (((y*v)*(z*v))/v * z\\v) = (z*(y*(z*v)))/(v^l*(z*v)) * v");
        add("OSI_01.1.1^l", "Lemma 1:9.1a", F::osi_left, true, false,
            "(v^l * (((y*v)*(v*v))/v))/v * v^l = v^l * y");
        add("OSI_01.1.2^l", "Lemma 1:9.1a", F::osi_left, true, false,
            "(z * ((v * ((v/(z*v))*v))/v * (z*v)))/v * (v^l * (z*v)) = z * (z*v)",
            "encoded as y = e in OSI_01.1^l; the displayed form drops a division");
        add("OSI_01.2.1^l", "Lemma 1:9.1a", F::osi_left, true, false,
            "v * (((y*v)*(v*v))/v) = (v * (y*(v*v)))/(v^l*(v*v)) * v");
        add("OSI_01.2.2^l", "Lemma 1:9.1a", F::osi_left, true, false,
            "v * ((v*(v*v))/v) = (v*(v*v))/(v^l*(v*v)) * v");
        add("OSI_01.2.3^l", "Lemma 1:9.1a", F::osi_left, true, false,
            "v * (((v*v)*(v*v))/v) = (v * (v*(v*v)))/(v^l*(v*v)) * v");
        add("OSI_01.2.4^l", "Lemma 1:9.1a", F::osi_left, true, false,
            "v^l * (y * v^l\\v) = (v^l*y)/v^l * v", "coincides with OSI_01.2.2");
        add("OSI_01.u1^l", "Lemma 1:9.1a (unnamed)", F::osi_left, true, false,
            "v * (v*v) = v^l\\v * v");
        add("OSI_01.u2^l", "Lemma 1:9.1a (unnamed)", F::osi_left, true, false,
            "(v*v)*(v*v) = v^l\\(v^l^l * v) * v");

        // Consequences in right universal Osborn loops (Lemma 1:9.11a).
        add("OSI_01^r", "Lemma 1:9.11a", F::osi_right, true, false,
            "y * u\\(u/x) = ((y*x) * (u*x)\\u)/x");
        add("OSI_01.1^r", "Lemma 1:9.11a", F::osi_right, true, false,
            "((u*z) * u\\((y * u\\(u/z))*z)) * z = (u*z) * u\\(y*z)");
        add("OSI_01.2^r", "Lemma 1:9.11a", F::osi_right, true, false,
            "((u*z) * u\\((y*z) * (u*z)\\u)) * z = (u*z) * u\\(y*z)");
        add("OSI_01.1.1^r", "Lemma 1:9.11a", F::osi_right, true, true,
            "((u*z) * u\\((z^l * u\\(u/z))*z)) * z = (u*z) * u^r",
            "right side restored by minimal bracket balancing");
        add("OSI_01.1.2^r", "Lemma 1:9.11a", F::osi_right, true, true,
            "((u*u) * u\\((u^l*u^r)*u)) * u = (u*u) * u^r",
            "right side restored by minimal bracket balancing");
        add("OSI_01.1.3^r", "Lemma 1:9.11a", F::osi_right, true, false,
            "((u*z) * u\\((z * u\\(u/z))*z)) * z = (u*z) * u\\(z*z)");
        add("OSI_01.1.4^r", "Lemma 1:9.11a", F::osi_right, true, false,
            "(u\\((u^r * u\\(u/u^r)) * u^r)) * u^r = u\\(u^r*u^r)",
            "encoded as z = u^r in OSI_01.1.3^r; the displayed form has a stray variable");
        add("OSI_01.1.5^r", "Lemma 1:9.11a", F::osi_right, true, false,
            "((u*z) * u\\((z^r * u\\(u/z))*z)) * z = (u*z) * u\\(z^r*z)");
        add("OSI_01.1.6^r", "Lemma 1:9.11a", F::osi_right, true, false,
            "z^l\\((z^r * z^l\\(z^l/z)) * z) * z = z^l\\(z^r*z)");
        add("OSI_01.1.7^r", "Lemma 1:9.11a", F::osi_right, true, false,
            "((z*z) * z\\((z^r*z^r)*z)) * z = (z*z) * z\\(z^r*z)");
        add("OSI_01.2.1^r", "Lemma 1:9.11a", F::osi_right, true, false,
            "((u*z) * u\\((u*z)\\u)) * z = (u*z) * u^r");
        add("OSI_01.2.2^r", "Lemma 1:9.11a", F::osi_right, true, false,
            "((u*u) * u\\((u*u)\\u)) * u = (u*u) * u^r");
        add("OSI_01.2.3^r", "Lemma 1:9.11a", F::osi_right, true, false,
            "((u*u^l) * u\\((u*u^l)\\u)) * u^l = (u*u^l) * u^r");
        add("OSI_01.2.4^r", "Lemma 1:9.11a", F::osi_right, true, false,
            "((u*z) * u\\(z * (u*z)\\u)) * z = (u*z) * u\\z");
        add("OSI_01.2.5^r", "Lemma 1:9.11a", F::osi_right, true, false,
            "((u*u^l) * u\\(u^l * (u*u^l)\\u)) * u^l = (u*u^l) * u\\u^l");
        add("OSI_01.2.6^r", "Lemma 1:9.11a", F::osi_right, true, false,
            "((u*z) * u\\((z*z) * (u*z)\\u)) * z = (u*z) * u\\(z*z)");
        add("OSI_01.2.7^r", "Lemma 1:9.11a", F::osi_right, true, false,
            "((u*z) * u\\((z^r*z) * (u*z)\\u)) * z = (u*z) * u\\(z^r*z)");
        add("OSI_01.2.8^r", "Lemma 1:9.11a", F::osi_right, true, false,
            "((u*u) * u\\((u^r*u) * (u*u)\\u)) * u = (u*u) * u\\(u^r*u)");
        add("OSI_01.2.9^r", "Lemma 1:9.11a", F::osi_right, true, false,
            "((u*u)*u^r)*u^r = u * (u\\((((u*u)*u^r)*u^r)*u) * u^r)");
        add("OSI_01.2.10^r", "Lemma 1:9.11a", F::osi_right, true, false,
            "((u*u^l) * u\\((u*u^l) * (u*u^l)\\u)) * u^l = (u*u^l) * u\\(u*u^l)");
        add("OSI_01.u1^r", "Lemma 1:9.11a (unnamed)", F::osi_right, true, false,
            "u * (u\\(u^r*u) * u^r) = u^r");

        // {4}-notation instances.
        add("4_{11.11=(1.11)1}^{1}", "{4}-notation", F::four_notation, true, false,
            "(x*x)*(x*x) = (x*(x*x))*x");
        add("4_{11.11=(11.1)1}^{1}", "{4}-notation", F::four_notation, true, false,
            "(x*x)*(x*x) = ((x*x)*x)*x");
        add("4_{12.22=(1.22)2}^{1,3}", "{4}-notation", F::four_notation, true, false,
            "(x*y)*(y*y) = (x*(y*y))*y");
        add("4_{12.22=(12.2)2}^{1,3}", "{4}-notation", F::four_notation, true, false,
            "(x*y)*(y*y) = ((x*y)*y)*y");
        add("4_{12.12=(12.1)2}^{2,2}", "{4}-notation", F::four_notation, true, false,
            "(x*y)*(x*y) = ((x*y)*x)*y");
        add("4_{12.12=(1.21)2}^{2,2}", "{4}-notation", F::four_notation, true, false,
            "(x*y)*(x*y) = (x*(y*x))*y");

        // Definitional battery.
        add("moufang", "Moufang loop", F::definitional, true, false,
            "(x*y)*(z*x) = (x*(y*z))*x");
        add("CC1", "conjugacy closed loop, left identity", F::definitional, true, false,
            "x*(y*z) = (x*y)/x * (x*z)");
        add("CC2", "conjugacy closed loop, right identity", F::definitional, true, false,
            "(z*y)*x = (z*x) * x\\(y*x)");
        add("WIP", "weak inverse property", F::definitional, true, false, "x*(y*x)^r = y^r");
        add("3-PAPL", "3 power associative property loop", F::definitional, true, false,
            "(x*x)*x = x*(x*x)");
        add("LSIPL", "left self inverse property loop", F::definitional, true, false,
            "x^l*(x*x) = x");
        add("RSIPL", "right self inverse property loop", F::definitional, true, false,
            "(x*x)*x^r = x");
        add("SFAIPL", "self automorphic inverse property loop", F::definitional, true, false,
            "(x*x)^r = x^r*x^r");
        add("SWIPL", "self weak inverse property loop", F::definitional, true, false,
            "x*(x*x)^r = x^r");
        add("L1BSIPL", "left 1-bi-self inverse property loop", F::definitional, true, false,
            "x^l*((x*x)*x) = x*x");
        add("L2BSIPL", "left 2-bi-self inverse property loop", F::definitional, true, false,
            "x^l*(x*(x*x)) = x*x");
        add("LAP", "left alternative property", F::definitional, true, false,
            "(x*x)*y = x*(x*y)");

        // Auxiliary identities referenced by the claim catalog.
        add("associative", "associativity", F::auxiliary, true, false, "(x*y)*z = x*(y*z)");
        add("commutative", "commutativity", F::auxiliary, false, false, "x*y = y*x");
        add("exponent-2", "exponent 2", F::auxiliary, false, false, "x*x = e");
        add("jlambda2-id", "|J_l| divides 2", F::auxiliary, true, false, "x^l^l = x");
        add("jrho2-id", "|J_r| divides 2", F::auxiliary, true, false, "x^r^r = x");
        add("jrho6-id", "|J_r| divides 6", F::auxiliary, true, false, "x^r^r^r^r^r^r = x");
        add("jrho-eq-jlambda", "J_r = J_l", F::auxiliary, true, false, "x^r = x^l");
        add("jlambda2-map", "Lemma 1:9.1h proof: J_l^2 in an Osborn loop", F::auxiliary, true,
            false, "x^l^l = x^l*(x*x)");
        add("jrho2-map", "Lemma 1:9.1h proof: J_r^2 in an Osborn loop", F::auxiliary, true, false,
            "x^r^r = (x*x)*x^r");
        add("L9c.4", "Lemma 1:9c item 4", F::auxiliary, true, false,
            "v*(v^l*(v * v^l\\v)) = v^l\\v * v");
        add("L9.1c.id", "Lemma 1:9.1c", F::auxiliary, true, false, "v^l*((v*v)*v) = v^l^l*v");
        add("L9.1g.id", "Lemma 1:9.1g", F::auxiliary, true, false,
            "(y*((y*y)*y^r))*y = y*(y*y)");
        add("L9.11b.id", "Lemma 1:9.11b", F::auxiliary, true, false,
            "(u^l*u^r)*u = u*(u*u)^r");
        add("L9.11c.id", "Lemma 1:9.11c", F::auxiliary, true, false,
            "u^r*u^r = u*(u\\((u^r*u)*u^r) * u^r)");
        add("L9.11d.id", "Lemma 1:9.11d", F::auxiliary, true, true,
            "z^l\\((z^r*z^l)*z) * z = z^l\\(z^r*z)",
            "displayed reading; the alternative reading is OSI_01.1.6^r");
        add("L9.11e.id1", "Lemma 1:9.11e", F::auxiliary, true, false, "(z*z)*z^l = z");
        add("L9.11e.id2", "Lemma 1:9.11e", F::auxiliary, true, false,
            "((z*z)*(z\\z^r))*z = (z*z)*(z\\(z^r*z))");
        add("L9.11f.id", "Lemma 1:9.11f", F::auxiliary, true, false,
            "u*(u*(u\\u^r * u^r)) = u^r");
        add("L9.11g.id", "Lemma 1:9.11g", F::auxiliary, true, false, "u\\u^r = (u*u)^r");
        add("L9.11i.id1", "Lemma 1:9.11i", F::auxiliary, true, false, "(u*u^l)*u^r = u^l");
        add("L9.11i.id2", "Lemma 1:9.11i", F::auxiliary, true, false,
            "u = (u*u^l)*(u*(u*u^l)^r)");
        add("L9.11j.id1", "Lemma 1:9.11j", F::auxiliary, true, false, "u^r*u = u*u^l");
        add("L9.11j.id2", "Lemma 1:9.11j", F::auxiliary, true, false, "u*(u^l*u^r) = u^r");
        add("L9.11k.id2", "Lemma 1:9.11k", F::auxiliary, true, false,
            "((u*u) * u\\((u^r*u) * (u*u)\\u)) * u = (u*u)*u^l");
        add("moufang-form", "concluding Moufang form of OSI_01^l", F::auxiliary, true, false,
            "((y*(x^l*u))*u^l)*(x*u) = ((y*(x*u))*u^l)*(x^l*u)",
            "meaningful where J_l = J_r; tests restrict to such loops");
        return r;
    }();
    return entries;
}

inline const RegistryEntry* find_identity(std::string_view key) {
    for (const auto& e : registry())
        if (e.key == key) return &e;
    return nullptr;
}

inline const RegistryEntry& lookup(std::string_view key) {
    if (const RegistryEntry* e = find_identity(key)) return *e;
    throw UnknownIdentityError(key);
}

}  // namespace loopkit
