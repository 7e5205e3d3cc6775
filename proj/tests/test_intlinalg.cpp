#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "g1cc/intlinalg.hpp"
#include "oracles.hpp"

using g1cc::AbelianGroup;
using g1cc::Integer;
using g1cc::IntMatrix;

namespace {

IntMatrix random_matrix(int n, std::mt19937& rng, int bound = 9) {
    std::uniform_int_distribution<int> coef(-bound, bound);
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = coef(rng);
    return m;
}

// Invariant factors of a 2x2 matrix straight from the theory:
// d1 = gcd of the entries, d1*d2 = |det|.
AbelianGroup snf2_closed_form(const IntMatrix& m) {
    const Integer d = abs(Integer(oracle::perm_det(m)));
    const Integer g =
        gcd(gcd(m(0, 0), m(0, 1)), gcd(m(1, 0), m(1, 1)));
    if (d == 0) {
        if (g == 0) return AbelianGroup({}, 2);
        std::vector<Integer> factors;
        if (g > 1) factors.push_back(g);
        return AbelianGroup(std::move(factors), 1);
    }
    std::vector<Integer> factors;
    if (g > 1) factors.push_back(g);
    if (d / g > 1) factors.push_back(d / g);
    return AbelianGroup(std::move(factors), 0);
}

}  // namespace

TEST_CASE("matrix basics") {
    const IntMatrix m{{1, 2}, {3, 4}};
    CHECK(m.dim() == 2);
    CHECK(m(0, 1) == 2);
    CHECK(m.transpose() == IntMatrix{{1, 3}, {2, 4}});
    CHECK((m + m.transpose()).is_symmetric());
    CHECK_FALSE(m.is_symmetric());
    CHECK_THROWS_AS(IntMatrix(2, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(m(2, 0), std::out_of_range);
}

TEST_CASE("det on pinned examples") {
    CHECK(g1cc::det(IntMatrix{{1, 1}, {0, 1}}) == 1);
    CHECK(g1cc::det(IntMatrix{{6, 3}, {3, 0}}) == -9);
    CHECK(g1cc::det(IntMatrix{{-2, 3}, {3, 0}}) == -9);
    CHECK(g1cc::det(IntMatrix{{5}}) == 5);
    CHECK(g1cc::det(IntMatrix{{0, 1, 2}, {0, 0, 3}, {0, 0, 0}}) == 0);
}

TEST_CASE("det agrees with the permutation-expansion oracle") {
    std::mt19937 rng(23);
    for (int n = 1; n <= 4; ++n)
        for (int i = 0; i < 200; ++i) {
            const IntMatrix m = random_matrix(n, rng);
            CHECK(g1cc::det(m).value() == oracle::perm_det(m));
        }
}

TEST_CASE("abelian group validation and rendering") {
    CHECK(AbelianGroup::trivial().is_trivial());
    CHECK(to_string(AbelianGroup::trivial()) == "0");
    CHECK(to_string(AbelianGroup({3, 3}, 0)) == "Z/3 ⊕ Z/3");
    CHECK(to_string(AbelianGroup({9}, 0)) == "Z/9");
    CHECK(to_string(AbelianGroup({2, 6}, 1)) == "Z ⊕ Z/2 ⊕ Z/6");
    CHECK(AbelianGroup({3, 3}, 0).order() == 9);
    CHECK(AbelianGroup::trivial().order() == 1);
    CHECK_THROWS_AS(AbelianGroup({1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(AbelianGroup({4, 6}, 0), std::invalid_argument);
    CHECK_THROWS_AS(AbelianGroup({2}, -1), std::invalid_argument);
    CHECK_THROWS_AS(AbelianGroup({2}, 1).order(), std::logic_error);
}

TEST_CASE("smith normal form on pinned examples") {
    CHECK(g1cc::smith_normal_form(IntMatrix{{6, 3}, {3, 0}}) == AbelianGroup({3, 3}, 0));
    CHECK(g1cc::smith_normal_form(IntMatrix{{-2, 3}, {3, 0}}) == AbelianGroup({9}, 0));
    CHECK(g1cc::smith_normal_form(IntMatrix{{1, 0}, {0, 1}}) == AbelianGroup::trivial());
    CHECK(g1cc::smith_normal_form(IntMatrix{{0, 0}, {0, 0}}) == AbelianGroup({}, 2));
    CHECK(g1cc::smith_normal_form(IntMatrix{{2, 0}, {0, 0}}) == AbelianGroup({2}, 1));
    CHECK(g1cc::smith_normal_form(IntMatrix{{4, 2}, {2, 4}}) == AbelianGroup({2, 6}, 0));
}

TEST_CASE("smith normal form agrees with the 2x2 closed form") {
    std::mt19937 rng(29);
    for (int i = 0; i < 500; ++i) {
        const IntMatrix m = random_matrix(2, rng);
        CHECK(g1cc::smith_normal_form(m) == snf2_closed_form(m));
    }
}

TEST_CASE("presented-group closed form for [[2x, 2y+1], [2y+1, 0]]") {
    for (long long x = -20; x <= 20; ++x)
        for (long long y = -20; y <= 20; ++y) {
            const IntMatrix m{{2 * x, 2 * y + 1}, {2 * y + 1, 0}};
            const AbelianGroup h = g1cc::smith_normal_form(m);
            if (y == 0 || y == -1) {
                CHECK(h.is_trivial());
                continue;
            }
            const Integer d = gcd(Integer(2 * x), Integer(2 * y + 1));
            std::vector<Integer> expect;
            if (d > 1) expect.push_back(d);
            expect.push_back(Integer((2 * y + 1) * (2 * y + 1)) / d);
            CHECK(h == AbelianGroup(std::move(expect), 0));
        }
}

TEST_CASE("|det| equals the product of invariant factors") {
    std::mt19937 rng(31);
    for (int n = 2; n <= 4; ++n)
        for (int i = 0; i < 100; ++i) {
            const IntMatrix m = random_matrix(n, rng, 6);
            const AbelianGroup h = g1cc::smith_normal_form(m);
            if (h.free_rank() == 0) CHECK(h.order() == abs(g1cc::det(m)));
            else CHECK(g1cc::det(m) == 0);
        }
}

TEST_CASE("signature on pinned examples") {
    CHECK(g1cc::signature(IntMatrix{{2, 1}, {1, 2}}) == 2);
    CHECK(g1cc::signature(IntMatrix{{-2, -1}, {-1, -8}}) == -2);
    CHECK(g1cc::signature(IntMatrix{{0, 1}, {1, 0}}) == 0);
    CHECK(g1cc::signature(IntMatrix{{0, 0}, {0, 0}}) == 0);
    CHECK(g1cc::signature(IntMatrix{{1}}) == 1);
    CHECK(g1cc::signature(IntMatrix{{6, 3}, {3, 0}}) == 0);
    CHECK(g1cc::signature(IntMatrix{{1, 0, 0}, {0, -2, 0}, {0, 0, 3}}) == 1);
    CHECK_THROWS_AS(g1cc::signature(IntMatrix{{0, 1}, {2, 0}}), std::invalid_argument);
}

TEST_CASE("signature is a congruence invariant") {
    std::mt19937 rng(37);
    for (int n = 2; n <= 4; ++n)
        for (int i = 0; i < 100; ++i) {
            IntMatrix m = random_matrix(n, rng, 5);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) m(b, a) = m(a, b);
            const IntMatrix p = oracle::random_unimodular(n, rng);
            IntMatrix conj(n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    Integer sum = 0;
                    for (int s = 0; s < n; ++s)
                        for (int t = 0; t < n; ++t) sum += p(s, a) * m(s, t) * p(t, b);
                    conj(a, b) = sum;
                }
            CHECK(g1cc::signature(conj) == g1cc::signature(m));
        }
}

TEST_CASE("signature counts eigenvalue signs on diagonal matrices") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int i = 0; i < 200; ++i) {
        IntMatrix m(4);
        int expected = 0;
        for (int k = 0; k < 4; ++k) {
            const int v = coef(rng);
            m(k, k) = v;
            expected += v > 0 ? 1 : (v < 0 ? -1 : 0);
        }
        CHECK(g1cc::signature(m) == expected);
    }
}
