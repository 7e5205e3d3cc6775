#include "g1cc/seifert.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace g1cc {

SeifertMatrix::SeifertMatrix(IntMatrix v) : v_(std::move(v)) {
    if (v_.dim() % 2 != 0)
        throw std::invalid_argument("Seifert matrix must have even dimension");
    if (det(v_ - v_.transpose()) != 1)
        throw std::invalid_argument("not a Seifert matrix: det(V - V^T) != 1");
}

PretzelParams::PretzelParams(Integer p_, Integer q_, Integer r_) : p(p_), q(q_), r(r_) {
    if (is_even(p) || is_even(q) || is_even(r))
        throw std::invalid_argument("pretzel parameters must be odd");
}

namespace {

// Laplace expansion along the first row, tracking the live columns with a
// mask. Factorial in n, which is fine for the small matrices seen here.
LaurentPoly poly_det(const std::vector<LaurentPoly>& m, int n, unsigned cols, int rows_done) {
    if (rows_done == n) return LaurentPoly::one();
    LaurentPoly acc;
    int parity = 0;
    for (int j = 0; j < n; ++j) {
        if (!(cols & (1u << j))) continue;
        const LaurentPoly& entry = m[static_cast<std::size_t>(rows_done * n + j)];
        if (!entry.is_zero()) {
            LaurentPoly minor = poly_det(m, n, cols & ~(1u << j), rows_done + 1);
            LaurentPoly term = entry * minor;
            acc = (parity % 2 == 0) ? acc + term : acc - term;
        }
        ++parity;
    }
    return acc;
}

}  // namespace

LaurentPoly alexander_raw(const SeifertMatrix& v) {
    const int n = v.dim();
    std::vector<LaurentPoly> entries;
    entries.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            entries.push_back(LaurentPoly::term(v(i, j), 0) + LaurentPoly::term(-v(j, i), 1));
    return poly_det(entries, n, (1u << n) - 1u, 0);
}

LaurentPoly alexander(const SeifertMatrix& v) { return normalize(alexander_raw(v)); }

Integer knot_det(const SeifertMatrix& v) {
    const Integer from_alexander = abs(eval_at_sign(alexander_raw(v), -1));
    const Integer from_symmetrized = abs(det(symmetrize(v)));
    if (from_alexander != from_symmetrized) {
        std::ostringstream msg;
        msg << "determinant cross-check failed: |Delta(-1)| = " << from_alexander
            << " but |det(V + V^T)| = " << from_symmetrized;
        throw std::logic_error(msg.str());
    }
    return from_alexander;
}

IntMatrix symmetrize(const SeifertMatrix& v) { return v.matrix() + v.matrix().transpose(); }

AbelianGroup double_cover_homology(const SeifertMatrix& v) {
    return smith_normal_form(symmetrize(v));
}

int knot_signature(const SeifertMatrix& v) { return signature(symmetrize(v)); }

SeifertMatrix crossing_change(const SeifertMatrix& v, int epsilon) {
    if (v.dim() != 2)
        throw std::invalid_argument("crossing_change is defined for 2x2 Seifert matrices");
    if (epsilon != 1 && epsilon != -1)
        throw std::invalid_argument("crossing sign must be +1 or -1");
    IntMatrix w = v.matrix();
    w(0, 0) -= epsilon;
    return SeifertMatrix(std::move(w));
}

SeifertMatrix pretzel_seifert(const PretzelParams& params) {
    const Integer p = params.p, q = params.q, r = params.r;
    IntMatrix v(2, {(p + q) / 2, (q + 1) / 2, (q - 1) / 2, (q + r) / 2});
    return SeifertMatrix(std::move(v));
}

SeifertMatrix whitehead_seifert(const WhiteheadParams& params) {
    if (params.clasp == Clasp::Positive)
        return SeifertMatrix(IntMatrix(2, {-1, 0, -1, params.n}));
    return SeifertMatrix(IntMatrix(2, {1, 1, 0, params.n}));
}

}  // namespace g1cc
