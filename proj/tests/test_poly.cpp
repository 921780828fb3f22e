#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cmath>

#include "cobham/poly.hpp"
#include "cobham/spectral.hpp"
#include "helpers.hpp"

using namespace cobham;
using namespace cobham::testing;

int main(int argc, char** argv) {
    parse_seed(argc, argv);
    return doctest::Context(argc, argv).run();
}

namespace {

CountMatrix make(std::vector<int> idx, std::vector<long> entries) {
    CountMatrix m;
    m.index = std::move(idx);
    for (long e : entries) m.a.emplace_back(e);
    return m;
}

}  // namespace

TEST_CASE("characteristic polynomials by hand-expanded determinant") {
    // det(xI - [[1,1],[1,0]]) = x^2 - x - 1
    CHECK(char_poly(make({0, 1}, {1, 1, 1, 0})) == ZPoly{-1, -1, 1});
    // det(xI - [[0,1,0],[1,0,1],[0,1,0]]) = x^3 - 2x
    CHECK(char_poly(make({0, 1, 2}, {0, 1, 0, 1, 0, 1, 0, 1, 0})) == ZPoly{0, -2, 0, 1});
    // det(xI - [[0,1],[2,0]]) = x^2 - 2
    CHECK(char_poly(make({0, 1}, {0, 1, 2, 0})) == ZPoly{-2, 0, 1});
    // diagonal
    CHECK(char_poly(make({0, 1}, {3, 0, 0, 5})) == ZPoly{15, -8, 1});
    // 1x1 zero
    CHECK(char_poly(make({0}, {0})) == ZPoly{0, 1});
}

TEST_CASE("char poly matches trace and determinant on random matrices") {
    std::mt19937_64 rng(g_seed);
    for (int it = 0; it < 50; ++it) {
        int n = 2 + static_cast<int>(rng() % 3);
        CountMatrix m;
        for (int i = 0; i < n; ++i) m.index.push_back(i);
        mpz_class trace = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m.a.emplace_back(static_cast<long>(rng() % 4));
                if (i == j) trace += m.a.back();
            }
        ZPoly p = char_poly(m);
        REQUIRE(static_cast<int>(p.size()) == n + 1);
        CHECK(p[n] == 1);
        CHECK(p[n - 1] == -trace);
        // p(A) = 0 by Cayley-Hamilton, checked on the first column
        std::vector<mpz_class> col(n, 0), acc(n, 0);
        col[0] = 1;
        for (size_t k = 0; k < p.size(); ++k) {
            for (int i = 0; i < n; ++i) acc[i] += p[k] * col[i];
            std::vector<mpz_class> nxt(n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) nxt[i] += m.at(i, j) * col[j];
            col = nxt;
        }
        for (int i = 0; i < n; ++i) CHECK(acc[i] == 0);
    }
}

TEST_CASE("sturm chain root counting") {
    // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
    SturmChain s(squarefree_part(to_qpoly(ZPoly{-6, 11, -6, 1})));
    CHECK(s.count_roots(0, 4) == 3);
    CHECK(s.count_roots(mpq_class(3, 2), mpq_class(5, 2)) == 1);
    CHECK(s.count_roots(1, 3) == 2);  // half-open (1, 3]
    CHECK(s.count_roots(3, 10) == 0);
}

TEST_CASE("largest real root enclosures") {
    auto r = largest_real_root(ZPoly{-2, 0, 1}, 3);  // sqrt 2
    CHECK(r.lo <= r.hi);
    double w = mpq_class(r.hi - r.lo).get_d() / r.mid();
    CHECK(w <= 1e-12);
    CHECK(std::abs(r.mid() - std::sqrt(2.0)) < 1e-10);

    auto phi = largest_real_root(ZPoly{-1, -1, 1}, 3);
    CHECK(std::abs(phi.mid() - (1 + std::sqrt(5.0)) / 2) < 1e-10);

    // rational root exactly at a power of two: x - 2
    auto two = largest_real_root(ZPoly{-2, 1}, 5);
    CHECK(two.lo < 2);
    CHECK(two.hi >= 2);
    CHECK(std::abs(two.mid() - 2) < 1e-10);
}

TEST_CASE("root counting outside a circle") {
    // x^2 - x - 1: roots phi = 1.618..., -0.618...
    ZPoly p{-1, -1, 1};
    CHECK(count_roots_modulus_above(p, 1) == 1);
    CHECK(count_roots_modulus_above(p, mpq_class(1, 2)) == 2);
    CHECK(count_roots_modulus_above(p, 2) == 0);
    // x^3 - 2x: roots 0, +-sqrt 2
    ZPoly q{0, -2, 0, 1};
    CHECK(count_roots_modulus_above(q, 1) == 2);
    CHECK(count_roots_modulus_above(q, mpq_class(3, 2)) == 0);
    // x^2 - 2 with c on the root circle is degenerate for rational c only if
    // c^2 = 2, impossible; c = 1 counts both
    CHECK(count_roots_modulus_above(ZPoly{-2, 0, 1}, 1) == 2);
    // degenerate: root exactly at modulus c
    CHECK(count_roots_modulus_above(ZPoly{-2, 1}, 2) == -1);
}

TEST_CASE("squarefree part strips multiplicity") {
    // (x-1)^2 (x+2) = x^3 - 3x + 2
    auto sf = to_primitive_zpoly(squarefree_part(to_qpoly(ZPoly{2, -3, 0, 1})));
    // (x-1)(x+2) = x^2 + x - 2
    CHECK(sf == ZPoly{-2, 1, 1});
}

TEST_CASE("numeric roots approximate the exact ones") {
    auto roots = numeric_roots(ZPoly{-2, 0, 1});
    REQUIRE(roots.size() == 2);
    double best = 1e9;
    for (auto z : roots) best = std::min(best, std::abs(z.real() - std::sqrt(2.0)));
    CHECK(best < 1e-6);
}
