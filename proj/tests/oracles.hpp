// Independent reference implementations used as test oracles. Everything
// here is deliberately naive (map-based polynomials, permutation-sum
// determinants) and shares no code with the library paths it checks.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "g1cc/intlinalg.hpp"
#include "g1cc/laurent.hpp"

namespace oracle {

// Sparse exponent -> coefficient representation.
using Poly = std::map<int, long long>;

inline Poly poly_from(const g1cc::LaurentPoly& f) {
    Poly p;
    if (f.is_zero()) return p;
    for (int e = f.low_degree(); e <= f.high_degree(); ++e)
        if (f.coeff(e) != 0) p[e] = f.coeff(e).value();
    return p;
}

inline g1cc::LaurentPoly poly_to(const Poly& p) {
    g1cc::LaurentPoly f;
    for (const auto& [e, c] : p) f = f + g1cc::LaurentPoly::term(c, e);
    return f;
}

inline Poly add(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b)
        if ((r[e] += c) == 0) r.erase(e);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            if ((r[ea + eb] += ca * cb) == 0) r.erase(ea + eb);
    return r;
}

inline long long eval(const Poly& a, int s) {
    long long total = 0;
    for (const auto& [e, c] : a) total += (s == 1 || e % 2 == 0) ? c : -c;
    return total;
}

// Determinant by explicit permutation expansion (Leibniz formula).
inline long long perm_det(const g1cc::IntMatrix& m) {
    const int n = m.dim();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    long long total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                    ++inversions;
        long long prod = 1;
        for (int i = 0; i < n; ++i) prod *= m(i, perm[static_cast<std::size_t>(i)]).value();
        total += inversions % 2 == 0 ? prod : -prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Random unimodular matrix: a product of elementary row additions and
// swaps applied to the identity.
inline g1cc::IntMatrix random_unimodular(int n, std::mt19937& rng) {
    g1cc::IntMatrix p(n);
    for (int i = 0; i < n; ++i) p(i, i) = 1;
    std::uniform_int_distribution<int> row(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int step = 0; step < 8; ++step) {
        const int i = row(rng);
        int j = row(rng);
        if (i == j) j = (j + 1) % n;
        const g1cc::Integer c = coef(rng);
        for (int k = 0; k < n; ++k) p(i, k) += c * p(j, k);
    }
    return p;
}

}  // namespace oracle
