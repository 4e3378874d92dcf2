#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loopkit/constructions.hpp"
#include "loopkit/core.hpp"

using namespace loopkit;

namespace {

std::vector<FiniteLoop> small_zoo() {
    return {make::cyclic(4), make::klein4(),      make::l5(),         make::symmetric3(),
            make::dihedral(4), make::dicyclic(2), make::moufang12()};
}

}  // namespace

TEST_CASE("validate accepts cyclic tables and detects the identity") {
    auto z4 = make::cyclic(4);
    CHECK(z4.order() == 4);
    CHECK(z4.identity() == 0);

    auto l5 = make::l5();
    CHECK(l5.order() == 5);
    CHECK(l5.identity() == 0);
}

TEST_CASE("validate rejects non-Latin tables") {
    try {
        FiniteLoop::validate({{0, 1}, {1, 1}});
        FAIL("expected NotLatinError");
    } catch (const NotLatinError& e) {
        CHECK(e.in_row);
        CHECK(e.line == 1);
        CHECK(e.duplicate == 1);
    }
}

TEST_CASE("validate rejects Latin squares without identity") {
    // Latin square whose row 0 is natural but no column is.
    CHECK_THROWS_AS(FiniteLoop::validate({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}), NoIdentityError);
}

TEST_CASE("validate honors identity claims") {
    CHECK_THROWS_AS(FiniteLoop::validate({{0, 1}, {1, 0}}, 1), WrongIdentityError);
    CHECK_NOTHROW(FiniteLoop::validate({{0, 1}, {1, 0}}, 0));

    // Z3 with labels 0 and 1 swapped: identity sits at index 1.
    auto l = FiniteLoop::validate({{2, 0, 1}, {0, 1, 2}, {1, 2, 0}});
    CHECK(l.identity() == 1);
    auto norm = l.normalized();
    CHECK(norm.identity() == 0);
    CHECK(norm == make::cyclic(3));
}

TEST_CASE("validate rejects out-of-range and oversized input") {
    CHECK_THROWS_AS(FiniteLoop::validate({{0, 3}, {3, 0}}), TableError);
    CHECK_THROWS_AS(FiniteLoop::validate({{0, 1, 2}, {1, 2, 0}}), TableError);
    std::vector<std::vector<elem>> big(65, std::vector<elem>(65, 0));
    CHECK_THROWS_AS(FiniteLoop::validate(big), OrderError);
}

TEST_CASE("multiplication and division read the table") {
    auto z4 = make::cyclic(4);
    CHECK(z4.mul(2, 3) == 1);
    CHECK(z4.ldiv(1, 0) == 3);

    auto l5 = make::l5();
    CHECK(l5.mul(2, 2) == 4);
    CHECK(l5.ldiv(2, 0) == 3);
    CHECK(l5.rin(3) == 4);
    CHECK(l5.lin(0) == 0);

    CHECK(z4.rin(1) == 3);
}

TEST_CASE("translations are the table rows and columns") {
    auto z4 = make::cyclic(4);
    auto r1 = z4.right_translation(1);
    for (elem y = 0; y < 4; ++y) CHECK(r1(y) == (y + 1) % 4);

    auto l5 = make::l5();
    auto l3 = l5.left_translation(3);
    std::vector<elem> want = {3, 4, 1, 2, 0};
    for (elem y = 0; y < 5; ++y) CHECK(l3(y) == want[y]);

    for (const auto& l : small_zoo()) CHECK(l.left_translation(l.identity()).is_identity());
}

TEST_CASE("loop axioms hold on the zoo") {
    for (const auto& l : small_zoo()) {
        const int n = l.order();
        const elem e = l.identity();
        for (elem x = 0; x < n; ++x) {
            CHECK(l.ldiv(x, x) == e);
            CHECK(l.rdiv(x, x) == e);
            CHECK(l.mul(l.lin(x), x) == e);
            CHECK(l.mul(x, l.rin(x)) == e);
            CHECK(l.rin(l.lin(x)) == x);
            CHECK(l.lin(l.rin(x)) == x);
            for (elem y = 0; y < n; ++y) {
                CHECK(l.mul(x, l.ldiv(x, y)) == y);
                CHECK(l.mul(l.rdiv(y, x), x) == y);
                CHECK(l.ldiv(x, l.mul(x, y)) == y);
                CHECK(l.rdiv(l.mul(y, x), x) == y);
            }
        }
    }
}

TEST_CASE("inverse translations compute divisions") {
    for (const auto& l : small_zoo()) {
        const int n = l.order();
        for (elem x = 0; x < n; ++x) {
            auto li = l.left_translation(x).inverse();
            auto ri = l.right_translation(x).inverse();
            for (elem y = 0; y < n; ++y) {
                CHECK(li(y) == l.ldiv(x, y));
                CHECK(ri(y) == l.rdiv(y, x));
            }
        }
    }
}

TEST_CASE("permutation composition and inverse") {
    auto l5 = make::l5();
    for (elem x = 0; x < 5; ++x) {
        auto p = l5.left_translation(x);
        CHECK(compose(p, p.inverse()).is_identity());
        CHECK(compose(p.inverse(), p).is_identity());
    }
    auto p = Perm::from_map({1, 2, 0, 3});
    CHECK(p.cycle_order() == 3);
    CHECK(Perm::identity(5).cycle_order() == 1);
    CHECK_THROWS_AS(Perm::from_map({0, 0, 1}), TableError);
}

TEST_CASE("e_map is trivial on groups and composes translations elsewhere") {
    for (const auto& g : {make::cyclic(4), make::symmetric3(), make::dicyclic(2)})
        for (elem x = 0; x < g.order(); ++x) {
            CHECK(g.e_map(x, EMapConvention::osborn).is_identity());
            CHECK(g.e_map(x, EMapConvention::basarab).is_identity());
        }

    auto l5 = make::l5();
    auto want = compose(l5.right_translation(2), l5.right_translation(l5.rin(2)));
    CHECK(l5.e_map(2, EMapConvention::basarab) == want);
}

TEST_CASE("normalization relabels the identity to 0") {
    // x+y-3 mod 4: principal isotope shape with identity 3.
    std::vector<std::vector<elem>> t(4, std::vector<elem>(4));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) t[x][y] = ((x + y - 3) % 4 + 4) % 4;
    auto l = FiniteLoop::validate(t);
    CHECK(l.identity() == 3);
    auto n = l.normalized();
    CHECK(n.identity() == 0);
    CHECK(n.mul(0, 2) == 2);
    CHECK(n.normalized() == n);
}

TEST_CASE("constructions produce groups of the right shape") {
    CHECK(make::symmetric3().order() == 6);
    CHECK(make::dihedral(4).order() == 8);
    CHECK(make::dicyclic(2).order() == 8);
    CHECK(make::alternating4().order() == 12);
    CHECK(make::moufang12().order() == 12);

    // Q8: a^2 = b^2 = (ab)^2 has order 2 and is central.
    auto q8 = make::dicyclic(2);
    elem a = 1, b = 4;
    elem a2 = q8.mul(a, a);
    CHECK(q8.mul(b, b) == a2);
    CHECK(a2 != q8.identity());
    CHECK(q8.mul(a2, a2) == q8.identity());

    // Associativity of the group constructions.
    for (const auto& g : {make::cyclic(6), make::dihedral(4), make::dicyclic(3), make::alternating4()}) {
        bool assoc = true;
        const int n = g.order();
        for (elem x = 0; x < n && assoc; ++x)
            for (elem y = 0; y < n && assoc; ++y)
                for (elem z = 0; z < n && assoc; ++z)
                    assoc = g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z));
        CHECK(assoc);
    }

    // The Chein double of S3 is not associative.
    auto m12 = make::moufang12();
    bool assoc = true;
    for (elem x = 0; x < 12 && assoc; ++x)
        for (elem y = 0; y < 12 && assoc; ++y)
            for (elem z = 0; z < 12 && assoc; ++z)
                assoc = m12.mul(m12.mul(x, y), z) == m12.mul(x, m12.mul(y, z));
    CHECK_FALSE(assoc);
}
