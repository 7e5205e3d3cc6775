#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "g1cc/laurent.hpp"
#include "oracles.hpp"

using g1cc::Integer;
using g1cc::LaurentPoly;

namespace {

// Coefficients in ascending powers starting at t^offset.
LaurentPoly poly(int offset, std::vector<Integer> coeffs) {
    return LaurentPoly(offset, std::move(coeffs));
}

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> offset(-4, 4);
    std::uniform_int_distribution<int> len(0, 5);
    std::uniform_int_distribution<int> coef(-6, 6);
    std::vector<Integer> coeffs;
    for (int i = len(rng); i > 0; --i) coeffs.emplace_back(coef(rng));
    return LaurentPoly(offset(rng), std::move(coeffs));
}

}  // namespace

TEST_CASE("construction trims stored zeros") {
    const LaurentPoly f = poly(-2, {0, 1, 0, 3, 0});
    CHECK(f.low_degree() == -1);
    CHECK(f.high_degree() == 1);
    CHECK(f.coeff(-1) == 1);
    CHECK(f.coeff(0) == 0);
    CHECK(f.coeff(1) == 3);
    CHECK(poly(5, {0, 0}).is_zero());
    CHECK(LaurentPoly::term(0, 3).is_zero());
}

TEST_CASE("add") {
    // (1 - t) + t = 1
    CHECK(poly(0, {1, -1}) + poly(1, {1}) == LaurentPoly::one());
    // f + 0 = f
    const LaurentPoly f = poly(-1, {2, 0, -3});
    CHECK(f + LaurentPoly::zero() == f);
    // (t^2 - t + 1) + (t - 1) = t^2
    CHECK(poly(0, {1, -1, 1}) + poly(0, {-1, 1}) == LaurentPoly::term(1, 2));
}

TEST_CASE("mul") {
    // (1 - 2t)(1 - 2t^-1) = -2t + 5 - 2t^-1
    CHECK(poly(0, {1, -2}) * poly(-1, {-2, 1}) == poly(-1, {-2, 5, -2}));
    // f * 1 = f
    const LaurentPoly f = poly(-2, {4, 0, 1});
    CHECK(f * LaurentPoly::one() == f);
    // (b - ct)(c - tb) with b=1, c=2: (1 - 2t)(2 - t) = 2 - 5t + 2t^2
    CHECK(poly(0, {1, -2}) * poly(0, {2, -1}) == poly(0, {2, -5, 2}));
}

TEST_CASE("conj") {
    CHECK(g1cc::conj(poly(0, {1, -2})) == poly(-1, {-2, 1}));
    CHECK(g1cc::conj(poly(0, {1, -1, 1})) == poly(-2, {1, -1, 1}));
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const LaurentPoly f = random_poly(rng);
        CHECK(g1cc::conj(g1cc::conj(f)) == f);
    }
}

TEST_CASE("eval_at_sign") {
    CHECK(g1cc::eval_at_sign(poly(0, {1, -1, 1}), -1) == 3);
    CHECK(g1cc::eval_at_sign(poly(0, {2, -5, 2}), -1) == 9);
    // m(t^2 + 1) + (1 - 2m)t evaluates to 1 at t = 1 for every m
    for (long long m = -30; m <= 30; ++m) {
        const LaurentPoly f = poly(0, {m, 1 - 2 * m, m});
        CHECK(g1cc::eval_at_sign(f, 1) == 1);
    }
    CHECK(g1cc::eval_at_sign(LaurentPoly::zero(), 1) == 0);
    CHECK_THROWS_AS(g1cc::eval_at_sign(LaurentPoly::one(), 2), std::invalid_argument);
    CHECK_THROWS_AS(g1cc::eval_at_sign(LaurentPoly::one(), 0), std::invalid_argument);
}

TEST_CASE("normalize") {
    // -t (1 - 2t)(1 - 2t^-1) = 2t^2 - 5t + 2
    const LaurentPoly f = -LaurentPoly::term(1, 1) * (poly(0, {1, -2}) * poly(-1, {-2, 1}));
    CHECK(g1cc::normalize(f) == poly(0, {2, -5, 2}));
    CHECK(g1cc::normalize(poly(0, {-1, 1})) == poly(0, {-1, 1}));
    CHECK(g1cc::normalize(poly(-1, {1, -1})) == poly(0, {-1, 1}));
    CHECK_THROWS_AS(g1cc::normalize(LaurentPoly::zero()), std::invalid_argument);
}

TEST_CASE("dot_equal") {
    CHECK(g1cc::dot_equal(poly(0, {1, -1, 1}), poly(-1, {-1, 1, -1})));
    CHECK(g1cc::dot_equal(LaurentPoly::one(), LaurentPoly::term(1, 1)));
    CHECK(g1cc::dot_equal(LaurentPoly::zero(), LaurentPoly::zero()));
    CHECK_FALSE(g1cc::dot_equal(LaurentPoly::zero(), LaurentPoly::one()));
    CHECK_FALSE(g1cc::dot_equal(poly(0, {1, -1, 1}), poly(0, {2, -5, 2})));
}

TEST_CASE("unit invariance of normalize") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly f = random_poly(rng);
        if (f.is_zero()) f = LaurentPoly::one();
        for (int k = -3; k <= 3; ++k) {
            for (int s : {1, -1}) {
                const LaurentPoly unit = LaurentPoly::term(s, k);
                CHECK(g1cc::normalize(f * unit) == g1cc::normalize(f));
                CHECK(g1cc::dot_equal(f * unit, f));
            }
        }
    }
}

TEST_CASE("arithmetic agrees with the map-based oracle") {
    std::mt19937 rng(13);
    for (int i = 0; i < 300; ++i) {
        const LaurentPoly f = random_poly(rng), g = random_poly(rng);
        CHECK(f + g == oracle::poly_to(oracle::add(oracle::poly_from(f), oracle::poly_from(g))));
        CHECK(f * g == oracle::poly_to(oracle::mul(oracle::poly_from(f), oracle::poly_from(g))));
        for (int s : {1, -1}) {
            CHECK(g1cc::eval_at_sign(f, s).value() == oracle::eval(oracle::poly_from(f), s));
            CHECK(g1cc::eval_at_sign(g1cc::conj(f), s) == g1cc::eval_at_sign(f, s));
        }
    }
}

TEST_CASE("ring properties on random inputs") {
    std::mt19937 rng(17);
    for (int i = 0; i < 200; ++i) {
        const LaurentPoly f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        for (int s : {1, -1})
            CHECK(g1cc::eval_at_sign(f * g, s) ==
                  g1cc::eval_at_sign(f, s) * g1cc::eval_at_sign(g, s));
    }
}

TEST_CASE("overflowing coefficient arithmetic throws instead of wrapping") {
    const LaurentPoly big = LaurentPoly::constant(1LL << 62);
    CHECK_THROWS_AS(big * big, std::overflow_error);
    CHECK_THROWS_AS(big + big, std::overflow_error);
}
