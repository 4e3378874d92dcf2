#pragma once

// Principal isotopes and autotopisms.
//
// Permutation operator strings are read left to right throughout: in a chain
// like Rinv(v).then(R(p)).then(Linv(u)).then(L(x)) the leftmost map applies
// first, matching the way composite translation expressions are written.

#include <array>
#include <optional>
#include <vector>

#include "loopkit/core.hpp"

namespace loopkit {

struct IsotopeSpec {
    enum class Kind { full, left, right };
    Kind kind;
    elem u = 0;  // unused for kind == left
    elem v = 0;  // unused for kind == right

    static IsotopeSpec full(elem u, elem v) { return {Kind::full, u, v}; }
    static IsotopeSpec left(elem v) { return {Kind::left, 0, v}; }
    static IsotopeSpec right(elem u) { return {Kind::right, u, 0}; }

    bool operator==(const IsotopeSpec&) const = default;
};

// Materializes the principal isotope as a full table:
//   full(u,v):  x o y = (x/v)*(u\y), identity u*v
//   left(v):    x o y = (x/v)*y,     identity v
//   right(u):   x o y = x*(u\y),     identity u
inline FiniteLoop principal_isotope(const FiniteLoop& l, const IsotopeSpec& spec) {
    const int n = l.order();
    std::vector<std::uint8_t> t(n * n);
    elem claimed;
    switch (spec.kind) {
        case IsotopeSpec::Kind::full:
            for (elem x = 0; x < n; ++x)
                for (elem y = 0; y < n; ++y)
                    t[x * n + y] = static_cast<std::uint8_t>(l.mul(l.rdiv(x, spec.v), l.ldiv(spec.u, y)));
            claimed = l.mul(spec.u, spec.v);
            break;
        case IsotopeSpec::Kind::left:
            for (elem x = 0; x < n; ++x)
                for (elem y = 0; y < n; ++y)
                    t[x * n + y] = static_cast<std::uint8_t>(l.mul(l.rdiv(x, spec.v), y));
            claimed = spec.v;
            break;
        case IsotopeSpec::Kind::right:
            for (elem x = 0; x < n; ++x)
                for (elem y = 0; y < n; ++y)
                    t[x * n + y] = static_cast<std::uint8_t>(l.mul(x, l.ldiv(spec.u, y)));
            claimed = spec.u;
            break;
    }
    return FiniteLoop::validate_flat(n, std::move(t), claimed);
}

// All n^2 full principal isotopes, ordered by (u, v).
inline std::vector<std::pair<IsotopeSpec, FiniteLoop>> all_principal_isotopes(const FiniteLoop& l) {
    std::vector<std::pair<IsotopeSpec, FiniteLoop>> out;
    out.reserve(l.order() * l.order());
    for (elem u = 0; u < l.order(); ++u)
        for (elem v = 0; v < l.order(); ++v) {
            auto spec = IsotopeSpec::full(u, v);
            out.emplace_back(spec, principal_isotope(l, spec));
        }
    return out;
}

struct AutotopismTriple {
    Perm a, b, c;

    bool operator==(const AutotopismTriple&) const = default;
};

inline AutotopismTriple autotopism_compose(const AutotopismTriple& s, const AutotopismTriple& t) {
    return {s.a.then(t.a), s.b.then(t.b), s.c.then(t.c)};
}

inline bool is_autotopism(const FiniteLoop& l, const AutotopismTriple& t) {
    const int n = l.order();
    for (elem x = 0; x < n; ++x)
        for (elem y = 0; y < n; ++y)
            if (l.mul(t.a(x), t.b(y)) != t.c(l.mul(x, y))) return false;
    return true;
}

// The three autotopism triples attached to a universal Osborn loop at (x,u,v):
//   alpha = R_{u\([(uv)/(u\(xv))]v)} Rinv_v R_{u\(xv)} Linv_u L_x Rinv_v
//   beta  = L_u Rinv_v R_{u\(xv)} Linv_u
//   gamma = Rinv_v R_{u\(xv)} Linv_u L_x
// triple 2 replaces alpha by R_{u\(xv)} Rinv_v R_{x\(uv)} Rinv_{u\(xv)} R_v gamma Rinv_v,
// triple 3 by gamma Rinv_{u\((u/v)(u\(xv)))}.
inline std::array<AutotopismTriple, 3> osborn_triples(const FiniteLoop& l, elem x, elem u, elem v) {
    auto R = [&l](elem a) { return l.right_translation(a); };
    auto L = [&l](elem a) { return l.left_translation(a); };
    auto Rinv = [&l](elem a) { return l.right_translation(a).inverse(); };
    auto Linv = [&l](elem a) { return l.left_translation(a).inverse(); };

    const elem xv = l.mul(x, v);
    const elem p = l.ldiv(u, xv);
    const elem a1 = l.ldiv(u, l.mul(l.rdiv(l.mul(u, v), p), v));
    const elem a3 = l.ldiv(u, l.mul(l.rdiv(u, v), p));

    Perm gamma = Rinv(v).then(R(p)).then(Linv(u)).then(L(x));
    Perm beta = L(u).then(Rinv(v)).then(R(p)).then(Linv(u));
    Perm alpha = R(a1).then(Rinv(v)).then(R(p)).then(Linv(u)).then(L(x)).then(Rinv(v));
    Perm alpha2 =
        R(p).then(Rinv(v)).then(R(l.ldiv(x, l.mul(u, v)))).then(Rinv(p)).then(R(v)).then(gamma).then(Rinv(v));
    Perm alpha3 = gamma.then(Rinv(a3));

    return {AutotopismTriple{alpha, beta, gamma}, AutotopismTriple{alpha2, beta, gamma},
            AutotopismTriple{alpha3, beta, gamma}};
}

// Left analogue at (x,v):
//   alpha = R_{[v/(xv)]v} Rinv_v R_{xv} L_x Rinv_v,  beta = Rinv_v R_{xv},
//   gamma = Rinv_v R_{xv} L_x;
// triple 2: R_{xv} Rinv_v R_{x\v} Rinv_{xv} R_v gamma Rinv_v; triple 3: gamma Rinv_{v^l*(xv)}.
inline std::array<AutotopismTriple, 3> left_osborn_triples(const FiniteLoop& l, elem x, elem v) {
    auto R = [&l](elem a) { return l.right_translation(a); };
    auto L = [&l](elem a) { return l.left_translation(a); };
    auto Rinv = [&l](elem a) { return l.right_translation(a).inverse(); };

    const elem q = l.mul(x, v);
    Perm gamma = Rinv(v).then(R(q)).then(L(x));
    Perm beta = Rinv(v).then(R(q));
    Perm alpha = R(l.mul(l.rdiv(v, q), v)).then(Rinv(v)).then(R(q)).then(L(x)).then(Rinv(v));
    Perm alpha2 = R(q).then(Rinv(v)).then(R(l.ldiv(x, v))).then(Rinv(q)).then(R(v)).then(gamma).then(Rinv(v));
    Perm alpha3 = gamma.then(Rinv(l.mul(l.lin(v), q)));

    return {AutotopismTriple{alpha, beta, gamma}, AutotopismTriple{alpha2, beta, gamma},
            AutotopismTriple{alpha3, beta, gamma}};
}

// Right analogue at (x,u):
//   alpha = R_{u\(u/(u\x))} R_{u\x} Linv_u L_x,  beta = L_u R_{u\x} Linv_u,
//   gamma = R_{u\x} Linv_u L_x;
// triple 2: R_{u\x} R_{x\u} Rinv_{u\x} gamma; triple 3: gamma Rinv_{u\x}.
inline std::array<AutotopismTriple, 3> right_osborn_triples(const FiniteLoop& l, elem x, elem u) {
    auto R = [&l](elem a) { return l.right_translation(a); };
    auto L = [&l](elem a) { return l.left_translation(a); };
    auto Rinv = [&l](elem a) { return l.right_translation(a).inverse(); };
    auto Linv = [&l](elem a) { return l.left_translation(a).inverse(); };

    const elem p = l.ldiv(u, x);
    Perm gamma = R(p).then(Linv(u)).then(L(x));
    Perm beta = L(u).then(R(p)).then(Linv(u));
    Perm alpha = R(l.ldiv(u, l.rdiv(u, p))).then(R(p)).then(Linv(u)).then(L(x));
    Perm alpha2 = R(p).then(R(l.ldiv(x, u))).then(Rinv(p)).then(gamma);
    Perm alpha3 = gamma.then(Rinv(p));

    return {AutotopismTriple{alpha, beta, gamma}, AutotopismTriple{alpha2, beta, gamma},
            AutotopismTriple{alpha3, beta, gamma}};
}

struct NotUnitalError final : Error {
    NotUnitalError() : Error("map does not fix the identity element") {}
};

// Companion conventions for pseudo-automorphisms. standard:
//   left:  (c*xA)(yA) = c*(xy)A      right: (xA)(yA*c) = (xy)A*c
// swapped exchanges the two handednesses, for probing the opposite reading.
enum class PseudoConvention { standard, swapped };

inline bool is_left_pseudo_automorphism(const FiniteLoop& l, const Perm& a, elem c,
                                        PseudoConvention conv = PseudoConvention::standard) {
    if (a(l.identity()) != l.identity()) throw NotUnitalError();
    Perm alc = conv == PseudoConvention::standard ? a.then(l.left_translation(c))
                                                  : a.then(l.right_translation(c));
    if (conv == PseudoConvention::standard) return is_autotopism(l, {alc, a, alc});
    return is_autotopism(l, {a, alc, alc});
}

inline bool is_right_pseudo_automorphism(const FiniteLoop& l, const Perm& a, elem c,
                                         PseudoConvention conv = PseudoConvention::standard) {
    if (a(l.identity()) != l.identity()) throw NotUnitalError();
    Perm arc = conv == PseudoConvention::standard ? a.then(l.right_translation(c))
                                                  : a.then(l.left_translation(c));
    if (conv == PseudoConvention::standard) return is_autotopism(l, {a, arc, arc});
    return is_autotopism(l, {arc, a, arc});
}

// First x for which Rinv_x L_x fails to be a left pseudo-automorphism with
// companion x, or Linv_x R_x fails the right-hand side; nullopt for VD-loops.
inline std::optional<elem> vd_failure(const FiniteLoop& l,
                                      PseudoConvention conv = PseudoConvention::standard) {
    for (elem x = 0; x < l.order(); ++x) {
        Perm lmap = l.right_translation(x).inverse().then(l.left_translation(x));
        Perm rmap = l.left_translation(x).inverse().then(l.right_translation(x));
        if (lmap(l.identity()) != l.identity() || rmap(l.identity()) != l.identity()) return x;
        if (!is_left_pseudo_automorphism(l, lmap, x, conv)) return x;
        if (!is_right_pseudo_automorphism(l, rmap, x, conv)) return x;
    }
    return std::nullopt;
}

inline bool is_vd_loop(const FiniteLoop& l, PseudoConvention conv = PseudoConvention::standard) {
    return !vd_failure(l, conv).has_value();
}

}  // namespace loopkit
