#pragma once

// Executable claim catalog: each numbered lemma/corollary becomes a
// hypothesis + body over named properties, evaluated loop by loop over a
// corpus. A violated instance is a falsification witness; claims whose
// source statements needed repair are low-confidence, and their violations
// downgrade to warnings.

#include <string>
#include <vector>

#include "loopkit/parallel.hpp"
#include "loopkit/properties.hpp"

namespace loopkit {

struct PropRef {
    std::string name;
    std::optional<Method> method;  // unset: claim-runner default

    PropRef(const char* n) : name(n) {}
    PropRef(std::string n) : name(std::move(n)) {}
    PropRef(std::string n, Method m) : name(std::move(n)), method(m) {}
};

struct Claim {
    std::string id;                           // catalog label, e.g. "Lemma 1:9b"
    std::string statement;                    // readable summary of the content
    std::vector<std::string> hypothesis;      // conjunction; empty = all loops
    enum class Body { equivalence, implication } body;
    // equivalence: each group is a conjunction; all group values must agree.
    // implication: groups[0] (conjunction) implies groups[1] (conjunction).
    std::vector<std::vector<PropRef>> groups;
    bool low_confidence = false;
};

struct NamedLoop {
    std::string name;
    FiniteLoop loop;
};

using Corpus = std::vector<NamedLoop>;

struct Violation {
    std::string loop;
    std::string detail;
};

struct ClaimReport {
    std::string id;
    bool low_confidence = false;
    int tested = 0;
    int vacuous = 0;
    int verified = 0;
    std::vector<Violation> violations;
};

enum class ClaimOutcome { vacuous, verified, violated };

namespace detail {

// Universality checks run with the caller's method (identity by default,
// both in verification mode) unless the claim pins one explicitly.
inline Method effective_method(const std::string& name, std::optional<Method> pinned,
                               Method universality_method) {
    if (pinned) return *pinned;
    return is_universality_property(name) ? universality_method : Method::identity;
}

inline bool eval_group(PropertyCache& cache, const std::vector<PropRef>& group, Method uni) {
    for (const auto& ref : group)
        if (!cache.get(ref.name, effective_method(ref.name, ref.method, uni)).holds) return false;
    return true;
}

inline std::string group_text(const std::vector<PropRef>& group) {
    std::string s;
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (i) s += " & ";
        s += group[i].name;
    }
    return s;
}

}  // namespace detail

// Evaluates one claim against one loop through a shared property cache.
inline std::pair<ClaimOutcome, std::string> evaluate_claim(PropertyCache& cache, const Claim& c,
                                                           Method uni = Method::identity) {
    for (const auto& h : c.hypothesis)
        if (!cache.get(h, detail::effective_method(h, std::nullopt, uni)).holds)
            return {ClaimOutcome::vacuous, ""};

    if (c.body == Claim::Body::equivalence) {
        bool first = detail::eval_group(cache, c.groups[0], uni);
        for (std::size_t g = 1; g < c.groups.size(); ++g)
            if (detail::eval_group(cache, c.groups[g], uni) != first)
                return {ClaimOutcome::violated,
                        "[" + detail::group_text(c.groups[0]) + "] is " + (first ? "true" : "false") +
                            " but [" + detail::group_text(c.groups[g]) + "] is not"};
        return {ClaimOutcome::verified, ""};
    }
    if (!detail::eval_group(cache, c.groups[0], uni)) return {ClaimOutcome::verified, ""};
    for (const auto& ref : c.groups[1])
        if (!cache.get(ref.name, detail::effective_method(ref.name, ref.method, uni)).holds)
            return {ClaimOutcome::violated, "antecedent holds but " + ref.name + " fails"};
    return {ClaimOutcome::verified, ""};
}

inline const std::vector<Claim>& claims() {
    static const std::vector<Claim> catalog = [] {
        std::vector<Claim> cs;
        using Body = Claim::Body;
        auto equiv = [&cs](std::string id, std::string stmt, std::vector<std::string> hyp,
                           std::vector<std::vector<PropRef>> groups, bool lc = false) {
            cs.push_back({std::move(id), std::move(stmt), std::move(hyp), Body::equivalence,
                          std::move(groups), lc});
        };
        auto implies = [&cs](std::string id, std::string stmt, std::vector<std::string> hyp,
                             std::vector<PropRef> ante, std::vector<PropRef> cons, bool lc = false) {
            cs.push_back({std::move(id), std::move(stmt), std::move(hyp), Body::implication,
                          {std::move(ante), std::move(cons)}, lc});
        };
        const PropRef uo_bf{"universal-osborn", Method::bruteforce};
        const PropRef luo_bf{"left-universal-osborn", Method::bruteforce};
        const PropRef ruo_bf{"right-universal-osborn", Method::bruteforce};

        equiv("Equations (1.1)/(1.2)", "the two Osborn forms define the same loops", {},
              {{"OS0"}, {"OS1"}});
        equiv("Theorem 1:4", "universal Osborn <=> OS0' <=> OS1'", {},
              {{uo_bf}, {"OS0'"}, {"OS1'"}});
        equiv("Theorem 1:4.1", "left universal Osborn <=> OS0^l <=> OS1^l", {},
              {{luo_bf}, {"OS0^l"}, {"OS1^l"}});
        equiv("Theorem 1:4.11", "right universal Osborn <=> OS0^r <=> OS1^r", {},
              {{ruo_bf}, {"OS0^r"}, {"OS1^r"}});

        equiv("Lemma 1:8", "universal Osborn <=> the first two triples are autotopisms", {},
              {{"universal-osborn"}, {"autotopism-1"}, {"autotopism-2"}});
        implies("Theorem 1:9", "universal Osborn => third triple is an autotopism",
                {"universal-osborn"}, {}, {"autotopism-3"});
        equiv("Lemma 1:8.1", "left universal Osborn <=> the first two left triples are autotopisms",
              {}, {{"left-universal-osborn"}, {"left-autotopism-1"}, {"left-autotopism-2"}});
        implies("Theorem 1:9.1", "left universal Osborn => third left triple is an autotopism",
                {"left-universal-osborn"}, {}, {"left-autotopism-3"});
        equiv("Lemma 1:8.11",
              "right universal Osborn <=> the first two right triples are autotopisms", {},
              {{"right-universal-osborn"}, {"right-autotopism-1"}, {"right-autotopism-2"}});
        implies("Theorem 1:9.11", "right universal Osborn => third right triple is an autotopism",
                {"right-universal-osborn"}, {}, {"right-autotopism-3"});

        implies("Lemma 1:9a", "universal Osborn loops satisfy the OSI_01 family",
                {"universal-osborn"}, {},
                {"OSI_01", "OSI_01.1", "OSI_01.2", "OSI_01.1.1", "OSI_01.2.1", "OSI_01.2.2",
                 "OSI_01.u1", "OSI_01.u2", "OSI_01.u3", "OSI_01.u4"});
        implies("Lemma 1:9.1a", "left universal Osborn loops satisfy the OSI_01^l family",
                {"left-universal-osborn"}, {},
                {"OSI_01^l", "OSI_01.1^l", "OSI_01.2^l", "OSI_01.1.1^l", "OSI_01.1.2^l",
                 "OSI_01.2.1^l", "OSI_01.2.2^l", "OSI_01.2.3^l", "OSI_01.2.4^l", "OSI_01.u1^l",
                 "OSI_01.u2^l"});
        implies("Lemma 1:9.11a", "right universal Osborn loops satisfy the OSI_01^r family",
                {"right-universal-osborn"}, {},
                {"OSI_01^r", "OSI_01.1^r", "OSI_01.2^r", "OSI_01.1.1^r", "OSI_01.1.2^r",
                 "OSI_01.1.3^r", "OSI_01.1.4^r", "OSI_01.1.5^r", "OSI_01.1.6^r", "OSI_01.1.7^r",
                 "OSI_01.2.1^r", "OSI_01.2.2^r", "OSI_01.2.3^r", "OSI_01.2.4^r", "OSI_01.2.5^r",
                 "OSI_01.2.6^r", "OSI_01.2.7^r", "OSI_01.2.8^r", "OSI_01.2.9^r", "OSI_01.2.10^r",
                 "OSI_01.u1^r"});

        equiv("Lemma 1:9b", "3-PAPL <=> both order-4 power identities", {"universal-osborn"},
              {{"3-PAPL"}, {"4_{11.11=(1.11)1}^{1}", "4_{11.11=(11.1)1}^{1}"}});
        equiv("Lemma 1:9c", "six equivalent of 3-power associativity", {"universal-osborn"},
              {{"3-PAPL"},
               {"4_{11.11=(1.11)1}^{1}", "4_{11.11=(11.1)1}^{1}"},
               {"LSIPL"},
               {"L9c.4"},
               {"4_{12.22=(1.22)2}^{1,3}"},
               {"4_{11.11=(1.11)1}^{1}"}});
        // The displayed biconditional is falsified by the nonassociative
        // conjugacy closed loops of order 6, which satisfy the second power
        // identity but not the first; only first => second follows from
        // Lemma 1:9c (items 2 and 6). Both readings are kept: the displayed
        // one as a warning-level claim, the derivable direction strictly.
        equiv("Corollary 1:9ci", "the two order-4 power identities coincide", {"universal-osborn"},
              {{"4_{11.11=(1.11)1}^{1}"}, {"4_{11.11=(11.1)1}^{1}"}}, true);
        implies("Corollary 1:9ci (directional)", "the direction that follows from Lemma 1:9c",
                {"universal-osborn"}, {"4_{11.11=(1.11)1}^{1}"}, {"4_{11.11=(11.1)1}^{1}"});
        for (const char* p : {"LSIPL", "RSIPL", "3-PAPL", "4_{12.22=(1.22)2}^{1,3}",
                              "4_{11.11=(1.11)1}^{1}"})
            implies(std::string("Corollary 1:9d (") + p + ")",
                    "universal Osborn + " + std::string(p) + " => both bi-self inverse properties",
                    {"universal-osborn"}, {p}, {"L2BSIPL", "L1BSIPL"});

        equiv("Lemma 1:9.1b", "LSIPL <=> 3-PAPL", {"left-universal-osborn"},
              {{"LSIPL"}, {"3-PAPL"}});
        equiv("Lemma 1:9.1c", "second power identity <=> its inverse form",
              {"left-universal-osborn"}, {{"4_{11.11=(11.1)1}^{1}"}, {"L9.1c.id"}});
        equiv("Corollary 1:9.1ci (i)", "L1BSIPL <=> LSIPL under the second power identity",
              {"left-universal-osborn", "4_{11.11=(11.1)1}^{1}"}, {{"L1BSIPL"}, {"LSIPL"}});
        implies("Corollary 1:9.1ci (ii)", "and such loops are L2BSIPL",
                {"left-universal-osborn", "4_{11.11=(11.1)1}^{1}", "LSIPL"}, {}, {"L2BSIPL"});
        equiv("Lemma 1:9.1d", "LSIPL <=> first mixed power identity", {"left-universal-osborn"},
              {{"LSIPL"}, {"4_{12.22=(1.22)2}^{1,3}"}});
        equiv("Lemma 1:9.1e", "LSIPL <=> first order-4 power identity", {"left-universal-osborn"},
              {{"LSIPL"}, {"4_{11.11=(1.11)1}^{1}"}});
        equiv("Lemma 1:9.1f", "LSIPL + second mixed identity <=> left alternative <=> Moufang",
              {"left-universal-osborn"},
              {{"LSIPL", "4_{12.22=(12.2)2}^{1,3}"}, {"LAP"}, {"moufang"}});
        implies("Lemma 1:9.1g (i)", "square-type identity forces the cube relation",
                {"left-universal-osborn", "4_{12.12=(12.1)2}^{2,2}"}, {}, {"L9.1g.id"});
        implies("Lemma 1:9.1g (ii)", "square-type identity forces the cube relation",
                {"left-universal-osborn", "4_{12.12=(1.21)2}^{2,2}"}, {}, {"L9.1g.id"});
        equiv("Lemma 1:9.1h", "LSIP, RSIP, |J_l|=2, |J_r|=2 and J_r=J_l are equivalent",
              {"osborn"},
              {{"LSIPL"}, {"RSIPL"}, {"jlambda2-id"}, {"jrho2-id"}, {"jrho-eq-jlambda"}});
        implies("Lemma 1:9.1h (maps)", "Osborn loops: J_l^2 and J_r^2 have the stated closed forms",
                {"osborn"}, {}, {"jlambda2-map", "jrho2-map"});
        equiv("Corollary 1:9.1i", "six equivalent inverse-type properties",
              {"left-universal-osborn"},
              {{"LSIPL"},
               {"RSIPL"},
               {"3-PAPL"},
               {"jrho-eq-jlambda"},
               {"4_{12.22=(1.22)2}^{1,3}"},
               {"4_{11.11=(1.11)1}^{1}"}});
        equiv("Corollary 1:9.1j", "seven equivalent power-associativity conditions in CC-loops",
              {"cc"},
              {{"power-associative"},
               {"3-PAPL"},
               {"jrho-eq-jlambda"},
               {"LSIPL"},
               {"RSIPL"},
               {"4_{12.22=(1.22)2}^{1,3}"},
               {"4_{11.11=(1.11)1}^{1}"}});
        equiv("Corollary 1:9.1k",
              "CC-loops: diassociative <=> power associative + second mixed identity", {"cc"},
              {{"diassociative"}, {"power-associative", "4_{12.22=(12.2)2}^{1,3}"}});

        equiv("Lemma 1:9.11b", "RSIPL <=> its inverse-product form", {"right-universal-osborn"},
              {{"RSIPL"}, {"L9.11b.id"}});
        equiv("Lemma 1:9.11c", "RSIPL <=> its nested division form", {"right-universal-osborn"},
              {{"RSIPL"}, {"L9.11c.id"}});
        equiv("Lemma 1:9.11d (a)", "RSIPL <=> the displayed reading", {"right-universal-osborn"},
              {{"RSIPL"}, {"L9.11d.id"}}, true);
        equiv("Lemma 1:9.11d (b)", "RSIPL <=> the OSI_01.1.6^r reading", {"right-universal-osborn"},
              {{"RSIPL"}, {"OSI_01.1.6^r"}}, true);
        equiv("Lemma 1:9.11e", "the square-inverse identity and its expanded form agree",
              {"right-universal-osborn"}, {{"L9.11e.id1"}, {"L9.11e.id2"}});
        // States SFAIPL <=> SWIPL but its derivation leans on an identity the
        // source never defines (OSI_01.1.8^r); the nonassociative conjugacy
        // closed loops of order 6 satisfy the hypothesis with SWIPL but not
        // SFAIPL, so the claim is kept at warning level.
        equiv("Corollary 1:9.11ea", "SFAIPL <=> SWIPL under the expanded form",
              {"right-universal-osborn", "L9.11e.id2"}, {{"SFAIPL"}, {"SWIPL"}}, true);
        equiv("Lemma 1:9.11f", "with RSIP: SFAIPL <=> the nested form",
              {"right-universal-osborn", "RSIPL"}, {{"SFAIPL"}, {"L9.11f.id"}});
        implies("Lemma 1:9.11g", "with RSIP: u\\u^r = (uu)^r",
                {"right-universal-osborn", "RSIPL"}, {}, {"L9.11g.id"});
        implies("Corollary 1:9.11h", "with RSIP: SFAIPL and |J_r| divides 6",
                {"right-universal-osborn", "RSIPL"}, {}, {"SFAIPL", "jrho6-id"});
        equiv("Lemma 1:9.11i", "the two mixed-inverse identities agree",
              {"right-universal-osborn"}, {{"L9.11i.id1"}, {"L9.11i.id2"}});
        equiv("Lemma 1:9.11j", "u^r u = u u^l <=> u * u^l u^r = u^r", {"right-universal-osborn"},
              {{"L9.11j.id1"}, {"L9.11j.id2"}});
        equiv("Lemma 1:9.11k", "u^r u = u u^l <=> the expanded OSI form",
              {"right-universal-osborn"}, {{"L9.11j.id1"}, {"L9.11k.id2"}});
        implies("Corollary 1:9.11l", "with both extra hypotheses the loop is SWIPL",
                {"right-universal-osborn", "L9.11j.id1", "RSIPL"}, {}, {"SWIPL"});

        implies("Concluding Moufang form", "Moufang loops with two-sided inverses obey the form",
                {"moufang", "jrho-eq-jlambda"}, {}, {"moufang-form"});
        implies("Moufang loops are universal Osborn", "", {"moufang"}, {}, {"universal-osborn"});
        implies("CC-loops are universal Osborn", "", {"cc"}, {}, {"universal-osborn"});
        implies("Extra loops are universal Osborn", "", {"extra"}, {}, {"universal-osborn"});
        implies("VD-loops are universal Osborn", "", {"vd"}, {}, {"universal-osborn"});
        implies("Universal WIPLs are universal Osborn", "", {"universal-wipl"}, {},
                {"universal-osborn"});
        implies("Universal Osborn is one-side universal", "full universality covers both sides",
                {"universal-osborn"}, {}, {"left-universal-osborn", "right-universal-osborn"});
        implies("Osborn loops of exponent 2 are abelian groups", "cited companion result",
                {"osborn", "exponent-2"}, {}, {"associative", "commutative"});
        return cs;
    }();
    return catalog;
}

inline const Claim& claim(const std::string& id) {
    for (const auto& c : claims())
        if (c.id == id) return c;
    throw Error("unknown claim: " + id);
}

inline ClaimReport run_claim(const Claim& c, const Corpus& corpus, int jobs = 1,
                             Method uni = Method::identity) {
    std::vector<std::pair<ClaimOutcome, std::string>> results(corpus.size(),
                                                              {ClaimOutcome::vacuous, ""});
    parallel_for(corpus.size(), jobs, [&](std::size_t i) {
        PropertyCache cache(corpus[i].loop);
        results[i] = evaluate_claim(cache, c, uni);
    });
    ClaimReport rep{c.id, c.low_confidence, static_cast<int>(corpus.size()), 0, 0, {}};
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        switch (results[i].first) {
            case ClaimOutcome::vacuous: ++rep.vacuous; break;
            case ClaimOutcome::verified: ++rep.verified; break;
            case ClaimOutcome::violated: rep.violations.push_back({corpus[i].name, results[i].second});
        }
    }
    return rep;
}

// Runs the whole catalog; parallel over loops, one shared property cache per
// loop, aggregation in corpus order.
inline std::vector<ClaimReport> run_claims(const std::vector<Claim>& cs, const Corpus& corpus,
                                           int jobs = 1, Method uni = Method::identity) {
    std::vector<std::vector<std::pair<ClaimOutcome, std::string>>> per_loop(corpus.size());
    parallel_for(corpus.size(), jobs, [&](std::size_t i) {
        PropertyCache cache(corpus[i].loop);
        per_loop[i].reserve(cs.size());
        for (const auto& c : cs) per_loop[i].push_back(evaluate_claim(cache, c, uni));
    });
    std::vector<ClaimReport> reps;
    reps.reserve(cs.size());
    for (std::size_t ci = 0; ci < cs.size(); ++ci) {
        ClaimReport rep{cs[ci].id, cs[ci].low_confidence, static_cast<int>(corpus.size()), 0, 0, {}};
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            switch (per_loop[i][ci].first) {
                case ClaimOutcome::vacuous: ++rep.vacuous; break;
                case ClaimOutcome::verified: ++rep.verified; break;
                case ClaimOutcome::violated:
                    rep.violations.push_back({corpus[i].name, per_loop[i][ci].second});
            }
        }
        reps.push_back(std::move(rep));
    }
    return reps;
}

}  // namespace loopkit
