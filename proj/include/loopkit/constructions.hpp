#pragma once

// Stock groups and loops used by the test suites and the corpus generator.

#include <algorithm>
#include <vector>

#include "loopkit/core.hpp"

namespace loopkit::make {

inline FiniteLoop cyclic(int n) {
    std::vector<std::uint8_t> t(n * n);
    for (elem x = 0; x < n; ++x)
        for (elem y = 0; y < n; ++y) t[x * n + y] = static_cast<std::uint8_t>((x + y) % n);
    return FiniteLoop::validate_flat(n, std::move(t));
}

inline FiniteLoop direct_product(const FiniteLoop& a, const FiniteLoop& b) {
    const int na = a.order(), nb = b.order(), n = na * nb;
    std::vector<std::uint8_t> t(n * n);
    auto ix = [na](elem x, elem y) { return x + na * y; };
    for (elem x1 = 0; x1 < na; ++x1)
        for (elem y1 = 0; y1 < nb; ++y1)
            for (elem x2 = 0; x2 < na; ++x2)
                for (elem y2 = 0; y2 < nb; ++y2)
                    t[ix(x1, y1) * n + ix(x2, y2)] =
                        static_cast<std::uint8_t>(ix(a.mul(x1, x2), b.mul(y1, y2)));
    return FiniteLoop::validate_flat(n, std::move(t));
}

// Dihedral group of order 2n: element i+n*b stands for r^i s^b with s r s = r^-1.
inline FiniteLoop dihedral(int n) {
    const int m = 2 * n;
    std::vector<std::uint8_t> t(m * m);
    auto ix = [n](int i, int b) { return ((i % n) + n) % n + n * b; };
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < 2; ++b)
            for (int j = 0; j < n; ++j)
                for (int c = 0; c < 2; ++c) {
                    int k = b ? ix(i - j, 1 - c) : ix(i + j, c);
                    t[ix(i, b) * m + ix(j, c)] = static_cast<std::uint8_t>(k);
                }
    return FiniteLoop::validate_flat(m, std::move(t));
}

// Dicyclic group of order 4m: a^i b^k with a^2m = e, b^2 = a^m, b a b^-1 = a^-1.
// dicyclic(2) is the quaternion group Q8, dicyclic(4) is Q16.
inline FiniteLoop dicyclic(int m) {
    const int h = 2 * m, n = 4 * m;
    std::vector<std::uint8_t> t(n * n);
    auto ix = [h](int i, int k) { return ((i % h) + h) % h + h * k; };
    for (int i = 0; i < h; ++i)
        for (int k = 0; k < 2; ++k)
            for (int j = 0; j < h; ++j)
                for (int l = 0; l < 2; ++l) {
                    int r;
                    if (k == 0)
                        r = ix(i + j, l);
                    else if (l == 0)
                        r = ix(i - j, 1);
                    else
                        r = ix(i - j + m, 0);
                    t[ix(i, k) * n + ix(j, l)] = static_cast<std::uint8_t>(r);
                }
    return FiniteLoop::validate_flat(n, std::move(t));
}

inline FiniteLoop klein4() { return direct_product(cyclic(2), cyclic(2)); }

inline FiniteLoop symmetric3() { return dihedral(3); }

inline FiniteLoop alternating4() {
    // Closure of {(0 1 2), (0 1)(2 3)} acting on 4 points.
    using P = std::array<int, 4>;
    std::vector<P> elems = {{0, 1, 2, 3}};
    std::vector<P> gens = {{1, 2, 0, 3}, {1, 0, 3, 2}};
    auto comp = [](const P& p, const P& q) {  // apply p, then q
        P r{};
        for (int i = 0; i < 4; ++i) r[i] = q[p[i]];
        return r;
    };
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (const auto& g : gens) {
                P c = comp(elems[i], g);
                if (std::find(elems.begin(), elems.end(), c) == elems.end()) {
                    elems.push_back(c);
                    grew = true;
                }
            }
    }
    std::sort(elems.begin(), elems.end());
    const int n = static_cast<int>(elems.size());
    std::vector<std::uint8_t> t(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            P c = comp(elems[i], elems[j]);
            auto it = std::find(elems.begin(), elems.end(), c);
            t[i * n + j] = static_cast<std::uint8_t>(it - elems.begin());
        }
    return FiniteLoop::validate_flat(n, std::move(t));
}

// Chein double M(G,2) of a group G: elements (g,0) and (g,1) with
//   (g,0)(h,0) = (gh,0)      (g,0)(h,1) = (hg,1)
//   (g,1)(h,0) = (gh^-1,1)   (g,1)(h,1) = (h^-1 g,0)
// Moufang for any group G, and nonassociative iff G is nonabelian.
inline FiniteLoop chein_double(const FiniteLoop& g) {
    const int m = g.order(), n = 2 * m;
    std::vector<std::uint8_t> t(n * n);
    auto inv = [&g](elem x) { return g.rin(x); };
    for (elem a = 0; a < m; ++a)
        for (elem b = 0; b < m; ++b) {
            t[a * n + b] = static_cast<std::uint8_t>(g.mul(a, b));
            t[a * n + (b + m)] = static_cast<std::uint8_t>(g.mul(b, a) + m);
            t[(a + m) * n + b] = static_cast<std::uint8_t>(g.mul(a, inv(b)) + m);
            t[(a + m) * n + (b + m)] = static_cast<std::uint8_t>(g.mul(inv(b), a));
        }
    return FiniteLoop::validate_flat(n, std::move(t));
}

// Smallest nonassociative Moufang loop, the Chein double of S3 (order 12).
inline FiniteLoop moufang12() { return chein_double(symmetric3()); }

// A nonassociative order-5 loop; fails 3-power-associativity at element 2.
inline FiniteLoop l5() {
    return FiniteLoop::validate({{0, 1, 2, 3, 4},
                                 {1, 0, 3, 4, 2},
                                 {2, 3, 4, 0, 1},
                                 {3, 4, 1, 2, 0},
                                 {4, 2, 0, 1, 3}});
}

}  // namespace loopkit::make
