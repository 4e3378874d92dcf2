#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "loopkit/constructions.hpp"
#include "loopkit/registry.hpp"
#include "oracle.hpp"

using namespace loopkit;

namespace {

std::vector<std::pair<std::string, FiniteLoop>> group_zoo() {
    std::vector<std::pair<std::string, FiniteLoop>> g;
    for (int n = 2; n <= 8; ++n) g.emplace_back("Z" + std::to_string(n), make::cyclic(n));
    g.emplace_back("V4", make::klein4());
    g.emplace_back("Z2xZ4", make::direct_product(make::cyclic(2), make::cyclic(4)));
    g.emplace_back("Z2xZ2xZ2", make::direct_product(make::cyclic(2), make::klein4()));
    g.emplace_back("S3", make::symmetric3());
    g.emplace_back("D4", make::dihedral(4));
    g.emplace_back("Q8", make::dicyclic(2));
    return g;
}

}  // namespace

TEST_CASE("registry keys are unique and lookups work") {
    std::set<std::string> keys;
    for (const auto& e : registry()) CHECK(keys.insert(e.key).second);
    CHECK(registry().size() > 80);

    CHECK(find_identity("OS1") != nullptr);
    CHECK(find_identity("nope") == nullptr);
    CHECK_THROWS_AS(lookup("nope"), UnknownIdentityError);
}

TEST_CASE("registry terms survive print/parse round trips") {
    for (const auto& e : registry()) {
        CAPTURE(e.key);
        CHECK(equal(parse(print(e.identity.lhs())), e.identity.lhs()));
        CHECK(equal(parse(print(e.identity.rhs())), e.identity.rhs()));
    }
}

TEST_CASE("catalog entries match their stated shapes") {
    const auto& os1 = lookup("OS1").identity;
    CHECK(print(os1.lhs()) == "x*(y*z*x)");
    CHECK(print(os1.rhs()) == "x*(y*x*x^r)*(z*x)");
    CHECK(equal(os1.lhs(), parse("x*((y*z)*x)")));
    CHECK(equal(os1.rhs(), parse("(x*((y*x)*x^r))*(z*x)")));

    const auto& four = lookup("4_{11.11=(1.11)1}^{1}").identity;
    CHECK(equal(four.lhs(), parse("(x*x)*(x*x)")));
    CHECK(equal(four.rhs(), parse("(x*(x*x))*x")));

    const auto& osi = lookup("OSI_01").identity;
    CHECK(print(osi.lhs()) == "y*u\\((u*v)/(u\\(x*v))*v)");
    CHECK(print(osi.rhs()) == "((y*u\\(x*v))/v*x\\(u*v))/(u\\(x*v))*v");

    // The two-name coincidence between the full and left families.
    CHECK(lookup("OSI_01.2.4^l").identity.text() == lookup("OSI_01.2.2").identity.text());
}

TEST_CASE("group-valid identities hold on all groups in the zoo") {
    for (const auto& [name, g] : group_zoo())
        for (const auto& e : registry()) {
            if (!e.group_valid) continue;
            CAPTURE(name);
            CAPTURE(e.key);
            auto res = e.identity.holds(g);
            CHECK(res.holds);
        }
}

TEST_CASE("non-group-valid identities fail where expected") {
    auto s3 = make::symmetric3();
    CHECK_FALSE(lookup("commutative").identity.holds(s3).holds);
    CHECK(lookup("commutative").identity.holds(make::cyclic(4)).holds);

    CHECK_FALSE(lookup("exponent-2").identity.holds(make::cyclic(3)).holds);
    CHECK(lookup("exponent-2").identity.holds(make::klein4()).holds);
}

TEST_CASE("L5 falsifies 3-PAPL at x=2") {
    auto l5 = make::l5();
    auto res = lookup("3-PAPL").identity.holds(l5);
    REQUIRE_FALSE(res.holds);
    REQUIRE(res.counterexample->size() == 1);
    CHECK((*res.counterexample)[0].second == 2);
    CHECK(l5.mul(l5.mul(2, 2), 2) == 0);
    CHECK(l5.mul(2, l5.mul(2, 2)) == 1);
}

TEST_CASE("Moufang identity separates the zoo") {
    CHECK(lookup("moufang").identity.holds(make::cyclic(4)).holds);
    CHECK(lookup("moufang").identity.holds(make::moufang12()).holds);
    CHECK_FALSE(lookup("moufang").identity.holds(make::l5()).holds);
}

TEST_CASE("expanded Osborn forms agree pointwise with their E-map statements") {
    // GM spells out  yx*(zE_y * y) = (y*xz)*y  with E_y = L_y L_{y^l};
    // OS1 spells out x(yz*x) = (x*yE_x)*zx     with E_x = R_x R_{x^r}.
    const auto& gm = lookup("GM").identity;
    const auto& os1 = lookup("OS1").identity;
    for (const auto& l : {make::cyclic(4), make::symmetric3(), make::l5(), make::moufang12()}) {
        const int n = l.order();
        for (elem x = 0; x < n; ++x) {
            auto ey = l.e_map(x, EMapConvention::osborn);
            auto ex = l.e_map(x, EMapConvention::basarab);
            for (elem y = 0; y < n; ++y)
                for (elem z = 0; z < n; ++z) {
                    {
                        // GM has variable order (y, x, z): here y := x-loop var.
                        elem a[3] = {x, y, z};
                        CHECK(gm.eval_lhs(l, a) == l.mul(l.mul(x, y), l.mul(ey(z), x)));
                        CHECK(gm.eval_rhs(l, a) == l.mul(l.mul(x, l.mul(y, z)), x));
                    }
                    {
                        elem a[3] = {x, y, z};
                        CHECK(os1.eval_lhs(l, a) == l.mul(x, l.mul(l.mul(y, z), x)));
                        CHECK(os1.eval_rhs(l, a) == l.mul(l.mul(x, ex(y)), l.mul(z, x)));
                    }
                }
        }
    }
}

TEST_CASE("E_x = E_{x^l} = E_{x^r} on universal weak inverse property loops") {
    // Groups and Moufang loops are universal WIPLs; the relation is testable there.
    std::vector<FiniteLoop> loops = {make::cyclic(6), make::symmetric3(), make::dicyclic(2),
                                     make::moufang12()};
    for (const auto& l : loops)
        for (elem x = 0; x < l.order(); ++x) {
            auto ex = l.e_map(x, EMapConvention::basarab);
            CHECK(ex == l.e_map(l.lin(x), EMapConvention::basarab));
            CHECK(ex == l.e_map(l.rin(x), EMapConvention::basarab));
        }
}

TEST_CASE("compiled registry sweeps agree with the oracle on all loops of order <= 4") {
    std::vector<FiniteLoop> loops;
    for (int n = 1; n <= 4; ++n)
        oracle::reduced_squares(n, [&](const std::vector<std::vector<int>>& t) {
            loops.push_back(FiniteLoop::validate(t));
        });
    REQUIRE(loops.size() == 7);

    for (const auto& l : loops)
        for (const auto& e : registry()) {
            CAPTURE(e.key);
            auto got = e.identity.holds(l);
            CHECK(got.holds == oracle::holds(l, e.identity));
        }
}
