#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loopkit/search.hpp"
#include "oracle.hpp"

using namespace loopkit;

namespace {

bool cc_by_translations(const FiniteLoop& l) {
    const int n = l.order();
    std::vector<Perm> ls, rs;
    for (elem x = 0; x < n; ++x) {
        ls.push_back(l.left_translation(x));
        rs.push_back(l.right_translation(x));
    }
    for (elem x = 0; x < n; ++x)
        for (elem y = 0; y < n; ++y) {
            Perm cl = ls[x].inverse().then(ls[y]).then(ls[x]);
            Perm cr = rs[x].inverse().then(rs[y]).then(rs[x]);
            bool foundl = false, foundr = false;
            for (elem w = 0; w < n; ++w) {
                foundl |= cl == ls[w];
                foundr |= cr == rs[w];
            }
            if (!foundl || !foundr) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("enumeration counts match the independent oracle for orders 1..6") {
    const std::int64_t expected[] = {0, 1, 1, 1, 4, 56, 9408};
    for (int n = 1; n <= 6; ++n) {
        std::int64_t count = 0;
        enumerate_loops(n, [&](const FiniteLoop&) {
            ++count;
            return true;
        });
        CHECK(count == expected[n]);
        CHECK(count == oracle::count_reduced_squares(n));
    }
}

TEST_CASE("enumeration yields valid reduced loops in lexicographic order") {
    std::vector<FiniteLoop> loops = all_loops(4);
    REQUIRE(loops.size() == 4);
    for (std::size_t i = 0; i + 1 < loops.size(); ++i) CHECK(loops[i].table() < loops[i + 1].table());
    for (const auto& l : loops) {
        CHECK(l.identity() == 0);
        CHECK_NOTHROW(FiniteLoop::validate(l.rows()));
    }
    // First reduced square of order 4 is the Klein four-group.
    for (elem x = 0; x < 4; ++x) CHECK(loops[0].mul(x, x) == 0);

    // Tables agree with the row-permutation oracle, in the same order.
    std::vector<std::vector<std::vector<int>>> oracle_tables;
    oracle::reduced_squares(4, [&](const std::vector<std::vector<int>>& t) { oracle_tables.push_back(t); });
    std::sort(oracle_tables.begin(), oracle_tables.end());
    for (std::size_t i = 0; i < 4; ++i) CHECK(loops[i].rows() == oracle_tables[i]);
}

TEST_CASE("enumeration order caps") {
    CHECK_THROWS_AS(enumerate_loops(0, [](const FiniteLoop&) { return true; }), OrderError);
    CHECK_THROWS_AS(enumerate_loops(9, [](const FiniteLoop&) { return true; }), OrderError);
    CHECK_THROWS_AS(run_search({9, {}, {}, std::nullopt, SearchQuery::Mode::exhaustive}), OrderError);
    CHECK_THROWS_AS(run_search({11, {}, {}, std::nullopt, SearchQuery::Mode::first}), OrderError);
}

TEST_CASE("search rejects inconsistent and unknown queries") {
    CHECK_THROWS_AS(run_search({4, {"moufang"}, {"moufang"}, std::nullopt, SearchQuery::Mode::exhaustive}),
                    UnknownPropertyError);
    CHECK_THROWS_AS(run_search({4, {"nonsense"}, {}, std::nullopt, SearchQuery::Mode::exhaustive}),
                    UnknownPropertyError);
}

TEST_CASE("unfiltered search returns the whole enumeration") {
    auto hits = run_search({4, {}, {}, std::nullopt, SearchQuery::Mode::exhaustive});
    CHECK(hits.size() == 4);
}

TEST_CASE("filtered search equals filter-after-enumerate") {
    SearchQuery q{5, {"moufang"}, {}, std::nullopt, SearchQuery::Mode::exhaustive};
    auto hits = run_search(q);

    std::vector<FiniteLoop> expected;
    enumerate_loops(5, [&](const FiniteLoop& l) {
        if (property(l, "moufang").holds) expected.push_back(l);
        return true;
    });
    // Order-5 Moufang loops are exactly the reduced tables of Z5.
    REQUIRE(hits.size() == expected.size());
    CHECK(hits.size() == 6);
    for (std::size_t i = 0; i < hits.size(); ++i) {
        CHECK(hits[i].loop == expected[i]);
        CHECK(property(hits[i].loop, "associative").holds);
    }
}

TEST_CASE("search results are invariant under worker count") {
    for (auto mode : {SearchQuery::Mode::exhaustive, SearchQuery::Mode::first}) {
        SearchQuery q{6, {"cc"}, {"associative"}, std::nullopt, mode};
        auto a = run_search(q, {1});
        auto b = run_search(q, {4});
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].loop == b[i].loop);
    }
}

TEST_CASE("nonassociative conjugacy closed loops of order 6") {
    SearchQuery q{6, {"cc"}, {"associative"}, std::nullopt, SearchQuery::Mode::exhaustive};
    auto hits = run_search(q, {2});
    CHECK(hits.size() == 40);
    for (const auto& h : hits) {
        CHECK(cc_by_translations(h.loop));
        CHECK_FALSE(property(h.loop, "associative").holds);
        CHECK_FALSE(property(h.loop, "moufang").holds);
    }

    SearchQuery limited = q;
    limited.limit = 3;
    auto few = run_search(limited, {2});
    REQUIRE(few.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(few[i].loop == hits[i].loop);

    SearchQuery first = q;
    first.mode = SearchQuery::Mode::first;
    auto one = run_search(first, {2});
    REQUIRE(one.size() == 1);
    CHECK(one[0].loop == hits[0].loop);
}

TEST_CASE("osborn-but-not-universal search re-verifies under both methods") {
    SearchQuery q{5, {"osborn"}, {"universal-osborn"}, std::nullopt, SearchQuery::Mode::exhaustive};
    auto hits = run_search(q, {2});
    for (const auto& h : hits) {
        CHECK(property(h.loop, "osborn").holds);
        CHECK_FALSE(universal_osborn(h.loop, Method::both).holds);
    }
}

TEST_CASE("first-match search above the exhaustive cap uses randomized restarts") {
    SearchQuery q{9, {}, {}, std::nullopt, SearchQuery::Mode::first};
    auto hits = run_search(q, {1, 7});
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].loop.order() == 9);
    CHECK(hits[0].loop.identity() == 0);
    CHECK_NOTHROW(FiniteLoop::validate(hits[0].loop.rows()));

    // Deterministic for a fixed seed.
    auto again = run_search(q, {1, 7});
    CHECK(hits[0].loop == again[0].loop);
}
