#pragma once

// Loop-property predicates: the identity battery, the three universality
// checks (each available through the characterizing identity and through
// brute-force isotope enumeration), structural checks, and a per-loop cache.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loopkit/isotopy.hpp"
#include "loopkit/registry.hpp"

namespace loopkit {

enum class Method { identity, bruteforce, structural, both };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::identity: return "identity";
        case Method::bruteforce: return "bruteforce";
        case Method::structural: return "structural";
        default: return "both";
    }
}

struct Witness {
    std::string detail;                  // human-readable context
    Assignment assignment;               // variable binding, possibly empty
    std::optional<IsotopeSpec> isotope;  // set when a particular isotope failed

    std::string to_string() const {
        std::string s;
        if (isotope) {
            s += "isotope(";
            switch (isotope->kind) {
                case IsotopeSpec::Kind::full:
                    s += "u=" + std::to_string(isotope->u) + ",v=" + std::to_string(isotope->v);
                    break;
                case IsotopeSpec::Kind::left: s += "left v=" + std::to_string(isotope->v); break;
                case IsotopeSpec::Kind::right: s += "right u=" + std::to_string(isotope->u); break;
            }
            s += ") ";
        }
        if (!assignment.empty()) {
            s += "{";
            for (std::size_t i = 0; i < assignment.size(); ++i) {
                if (i) s += ",";
                s += assignment[i].first + "=" + std::to_string(assignment[i].second);
            }
            s += "}";
        }
        if (!detail.empty()) {
            if (!s.empty()) s += " ";
            s += detail;
        }
        return s;
    }
};

struct PropertyReport {
    std::string property;
    bool holds = false;
    Method method = Method::identity;
    std::optional<Witness> witness;  // present iff !holds
};

struct UnknownPropertyError final : Error {
    explicit UnknownPropertyError(const std::string& name)
        : Error("unknown property: " + name) {}
};

// Raised when the identity and brute-force universality methods disagree,
// which would falsify the characterization theorems; callers treat it as an
// internal invariant breach, never a normal result.
struct MethodDisagreementError final : Error {
    using Error::Error;
};

namespace detail {

inline PropertyReport from_check(std::string property, const Identity& id, const FiniteLoop& l) {
    CheckResult r = id.holds(l);
    PropertyReport rep{std::move(property), r.holds, Method::identity, std::nullopt};
    if (!r.holds) rep.witness = Witness{"", *r.counterexample, std::nullopt};
    return rep;
}

}  // namespace detail

inline PropertyReport is_osborn(const FiniteLoop& l) {
    return detail::from_check("osborn", lookup("OS1").identity, l);
}

inline PropertyReport universal_osborn(const FiniteLoop& l, Method method = Method::identity) {
    if (method == Method::identity) {
        auto rep = detail::from_check("universal-osborn", lookup("OS0'").identity, l);
        return rep;
    }
    if (method == Method::bruteforce) {
        const Identity& os1 = lookup("OS1").identity;
        for (elem u = 0; u < l.order(); ++u)
            for (elem v = 0; v < l.order(); ++v) {
                auto spec = IsotopeSpec::full(u, v);
                CheckResult r = os1.holds(principal_isotope(l, spec));
                if (!r.holds)
                    return {"universal-osborn", false, Method::bruteforce,
                            Witness{"isotope fails OS1", *r.counterexample, spec}};
            }
        return {"universal-osborn", true, Method::bruteforce, std::nullopt};
    }
    auto a = universal_osborn(l, Method::identity);
    auto b = universal_osborn(l, Method::bruteforce);
    if (a.holds != b.holds)
        throw MethodDisagreementError("universal-osborn: identity and bruteforce methods disagree");
    a.method = Method::both;
    return a;
}

inline PropertyReport left_universal_osborn(const FiniteLoop& l, Method method = Method::identity) {
    if (method == Method::identity)
        return detail::from_check("left-universal-osborn", lookup("OS0^l").identity, l);
    if (method == Method::bruteforce) {
        const Identity& os1 = lookup("OS1").identity;
        for (elem v = 0; v < l.order(); ++v) {
            auto spec = IsotopeSpec::left(v);
            CheckResult r = os1.holds(principal_isotope(l, spec));
            if (!r.holds)
                return {"left-universal-osborn", false, Method::bruteforce,
                        Witness{"left isotope fails OS1", *r.counterexample, spec}};
        }
        return {"left-universal-osborn", true, Method::bruteforce, std::nullopt};
    }
    auto a = left_universal_osborn(l, Method::identity);
    auto b = left_universal_osborn(l, Method::bruteforce);
    if (a.holds != b.holds)
        throw MethodDisagreementError("left-universal-osborn: methods disagree");
    a.method = Method::both;
    return a;
}

inline PropertyReport right_universal_osborn(const FiniteLoop& l, Method method = Method::identity) {
    if (method == Method::identity)
        return detail::from_check("right-universal-osborn", lookup("OS0^r").identity, l);
    if (method == Method::bruteforce) {
        const Identity& os1 = lookup("OS1").identity;
        for (elem u = 0; u < l.order(); ++u) {
            auto spec = IsotopeSpec::right(u);
            CheckResult r = os1.holds(principal_isotope(l, spec));
            if (!r.holds)
                return {"right-universal-osborn", false, Method::bruteforce,
                        Witness{"right isotope fails OS1", *r.counterexample, spec}};
        }
        return {"right-universal-osborn", true, Method::bruteforce, std::nullopt};
    }
    auto a = right_universal_osborn(l, Method::identity);
    auto b = right_universal_osborn(l, Method::bruteforce);
    if (a.holds != b.holds)
        throw MethodDisagreementError("right-universal-osborn: methods disagree");
    a.method = Method::both;
    return a;
}

// WIP on the loop itself (fails fast there) and on every full principal isotope.
inline PropertyReport universal_wipl(const FiniteLoop& l) {
    const Identity& wip = lookup("WIP").identity;
    CheckResult base = wip.holds(l);
    if (!base.holds)
        return {"universal-wipl", false, Method::bruteforce,
                Witness{"loop itself fails WIP", *base.counterexample, std::nullopt}};
    for (elem u = 0; u < l.order(); ++u)
        for (elem v = 0; v < l.order(); ++v) {
            auto spec = IsotopeSpec::full(u, v);
            CheckResult r = wip.holds(principal_isotope(l, spec));
            if (!r.holds)
                return {"universal-wipl", false, Method::bruteforce,
                        Witness{"isotope fails WIP", *r.counterexample, spec}};
        }
    return {"universal-wipl", true, Method::bruteforce, std::nullopt};
}

inline PropertyReport is_cc(const FiniteLoop& l) {
    auto r1 = detail::from_check("cc", lookup("CC1").identity, l);
    if (!r1.holds) {
        r1.witness->detail = "fails CC1";
        return r1;
    }
    auto r2 = detail::from_check("cc", lookup("CC2").identity, l);
    if (!r2.holds) r2.witness->detail = "fails CC2";
    return r2;
}

inline PropertyReport is_moufang(const FiniteLoop& l) {
    return detail::from_check("moufang", lookup("moufang").identity, l);
}

// Extra loops are taken as Moufang and conjugacy closed.
inline PropertyReport is_extra(const FiniteLoop& l) {
    auto m = is_moufang(l);
    if (!m.holds) {
        m.property = "extra";
        m.witness->detail = "fails moufang";
        return m;
    }
    auto c = is_cc(l);
    c.property = "extra";
    return c;
}

namespace detail {

// Closure of a generating set under multiplication.
inline std::vector<elem> closure(const FiniteLoop& l, std::initializer_list<elem> gens) {
    std::array<bool, kMaxOrder> in{};
    std::vector<elem> s;
    for (elem g : gens)
        if (!in[g]) {
            in[g] = true;
            s.push_back(g);
        }
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            for (elem p : {l.mul(s[i], s[j]), l.mul(s[j], s[i])})
                if (!in[p]) {
                    in[p] = true;
                    s.push_back(p);
                }
    return s;
}

inline std::optional<std::array<elem, 3>> nonassoc_triple(const FiniteLoop& l,
                                                          const std::vector<elem>& s) {
    for (elem a : s)
        for (elem b : s)
            for (elem c : s)
                if (l.mul(l.mul(a, b), c) != l.mul(a, l.mul(b, c)))
                    return std::array<elem, 3>{a, b, c};
    return std::nullopt;
}

}  // namespace detail

inline PropertyReport is_power_associative(const FiniteLoop& l) {
    for (elem x = 0; x < l.order(); ++x) {
        auto s = detail::closure(l, {x});
        if (auto bad = detail::nonassoc_triple(l, s))
            return {"power-associative", false, Method::structural,
                    Witness{"submagma generated by " + std::to_string(x) +
                                " is not associative at (" + std::to_string((*bad)[0]) + "," +
                                std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]) + ")",
                            {{"x", x}},
                            std::nullopt}};
    }
    return {"power-associative", true, Method::structural, std::nullopt};
}

inline PropertyReport is_diassociative(const FiniteLoop& l) {
    for (elem x = 0; x < l.order(); ++x)
        for (elem y = x; y < l.order(); ++y) {
            auto s = detail::closure(l, {x, y});
            if (auto bad = detail::nonassoc_triple(l, s))
                return {"diassociative", false, Method::structural,
                        Witness{"submagma generated by {" + std::to_string(x) + "," +
                                    std::to_string(y) + "} is not associative at (" +
                                    std::to_string((*bad)[0]) + "," + std::to_string((*bad)[1]) +
                                    "," + std::to_string((*bad)[2]) + ")",
                                {{"x", x}, {"y", y}},
                                std::nullopt}};
        }
    return {"diassociative", true, Method::structural, std::nullopt};
}

inline PropertyReport is_vd(const FiniteLoop& l) {
    auto w = vd_failure(l);
    if (!w)
        return {"vd", true, Method::structural, std::nullopt};
    return {"vd", false, Method::structural,
            Witness{"conjugation maps at x are not pseudo-automorphisms with companion x",
                    {{"x", *w}},
                    std::nullopt}};
}

// Order of J_l (x -> x^l) or J_r (x -> x^r) in the symmetric group.
enum class InverseMap { lambda, rho };
inline std::int64_t inverse_map_order(const FiniteLoop& l, InverseMap which) {
    std::vector<std::uint8_t> m(l.order());
    for (elem x = 0; x < l.order(); ++x)
        m[x] = static_cast<std::uint8_t>(which == InverseMap::lambda ? l.lin(x) : l.rin(x));
    return Perm::from_map(std::move(m)).cycle_order();
}

// Autotopism-triple sweeps; k picks the first, second, or third triple.
inline PropertyReport osborn_autotopisms(const FiniteLoop& l, int k) {
    for (elem x = 0; x < l.order(); ++x)
        for (elem u = 0; u < l.order(); ++u)
            for (elem v = 0; v < l.order(); ++v)
                if (!is_autotopism(l, osborn_triples(l, x, u, v)[k]))
                    return {"autotopism-" + std::to_string(k + 1), false, Method::structural,
                            Witness{"triple " + std::to_string(k + 1) + " is not an autotopism",
                                    {{"x", x}, {"u", u}, {"v", v}},
                                    std::nullopt}};
    return {"autotopism-" + std::to_string(k + 1), true, Method::structural, std::nullopt};
}

inline PropertyReport left_osborn_autotopisms(const FiniteLoop& l, int k) {
    for (elem x = 0; x < l.order(); ++x)
        for (elem v = 0; v < l.order(); ++v)
            if (!is_autotopism(l, left_osborn_triples(l, x, v)[k]))
                return {"left-autotopism-" + std::to_string(k + 1), false, Method::structural,
                        Witness{"left triple " + std::to_string(k + 1) + " is not an autotopism",
                                {{"x", x}, {"v", v}},
                                std::nullopt}};
    return {"left-autotopism-" + std::to_string(k + 1), true, Method::structural, std::nullopt};
}

inline PropertyReport right_osborn_autotopisms(const FiniteLoop& l, int k) {
    for (elem x = 0; x < l.order(); ++x)
        for (elem u = 0; u < l.order(); ++u)
            if (!is_autotopism(l, right_osborn_triples(l, x, u)[k]))
                return {"right-autotopism-" + std::to_string(k + 1), false, Method::structural,
                        Witness{"right triple " + std::to_string(k + 1) + " is not an autotopism",
                                {{"x", x}, {"u", u}},
                                std::nullopt}};
    return {"right-autotopism-" + std::to_string(k + 1), true, Method::structural, std::nullopt};
}

// Name-based dispatch. Identity-backed names resolve through the registry;
// method is honored by the universality checks and ignored elsewhere.
inline PropertyReport property(const FiniteLoop& l, const std::string& name,
                               Method method = Method::identity) {
    if (name == "osborn") return is_osborn(l);
    if (name == "universal-osborn") return universal_osborn(l, method);
    if (name == "left-universal-osborn") return left_universal_osborn(l, method);
    if (name == "right-universal-osborn") return right_universal_osborn(l, method);
    if (name == "universal-wipl") return universal_wipl(l);
    if (name == "cc") return is_cc(l);
    if (name == "moufang") return is_moufang(l);
    if (name == "extra") return is_extra(l);
    if (name == "power-associative") return is_power_associative(l);
    if (name == "diassociative") return is_diassociative(l);
    if (name == "vd") return is_vd(l);
    for (int k = 0; k < 3; ++k) {
        if (name == "autotopism-" + std::to_string(k + 1)) return osborn_autotopisms(l, k);
        if (name == "left-autotopism-" + std::to_string(k + 1)) return left_osborn_autotopisms(l, k);
        if (name == "right-autotopism-" + std::to_string(k + 1))
            return right_osborn_autotopisms(l, k);
    }
    if (const RegistryEntry* e = find_identity(name)) return detail::from_check(name, e->identity, l);
    throw UnknownPropertyError(name);
}

inline bool is_universality_property(const std::string& name) {
    return name == "universal-osborn" || name == "left-universal-osborn" ||
           name == "right-universal-osborn";
}

inline bool is_known_property(const std::string& name) {
    static const std::vector<std::string> named = {
        "osborn",         "universal-osborn", "left-universal-osborn", "right-universal-osborn",
        "universal-wipl", "cc",               "moufang",               "extra",
        "power-associative", "diassociative", "vd"};
    for (const auto& n : named)
        if (n == name) return true;
    for (int k = 1; k <= 3; ++k)
        for (const char* p : {"autotopism-", "left-autotopism-", "right-autotopism-"})
            if (name == p + std::to_string(k)) return true;
    return find_identity(name) != nullptr;
}

// Per-loop memoization for claim evaluation and repeated sweeps.
class PropertyCache {
  public:
    explicit PropertyCache(const FiniteLoop& l) : loop_(&l) {}

    const PropertyReport& get(const std::string& name, Method method = Method::identity) {
        std::string key = name + "@" + method_name(method);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(std::move(key), property(*loop_, name, method)).first->second;
    }

    const FiniteLoop& loop() const { return *loop_; }

  private:
    const FiniteLoop* loop_;
    std::map<std::string, PropertyReport> cache_;
};

}  // namespace loopkit
