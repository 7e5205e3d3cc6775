// Seifert matrices, their classical invariants (Alexander polynomial,
// determinant, double branched cover homology, signature), and closed-form
// constructors for the genus-one pretzel and Whitehead-double families.
#pragma once

#include "g1cc/intlinalg.hpp"
#include "g1cc/laurent.hpp"

namespace g1cc {

// Square integer matrix of even dimension 2g with unimodular
// antisymmetrization: det(V - V^T) = 1. For 2x2 this means the
// off-diagonal entries differ by exactly 1.
class SeifertMatrix {
  public:
    explicit SeifertMatrix(IntMatrix v);

    int dim() const { return v_.dim(); }
    int genus() const { return v_.dim() / 2; }
    const IntMatrix& matrix() const { return v_; }
    Integer operator()(int i, int j) const { return v_(i, j); }

    bool operator==(const SeifertMatrix&) const = default;

  private:
    IntMatrix v_;
};

struct PretzelParams {
    PretzelParams(Integer p, Integer q, Integer r);  // all three must be odd
    Integer p, q, r;
};

enum class Clasp { Positive, Negative };

struct WhiteheadParams {
    Clasp clasp;
    Integer n;  // full twists in the doubled band
};

// det(V - t V^T) with exact polynomial entries, no unit normalization.
// Evaluates to det(V - V^T) = 1 at t = 1.
LaurentPoly alexander_raw(const SeifertMatrix& v);

// Canonical Alexander polynomial: normalize(det(V - t V^T)).
LaurentPoly alexander(const SeifertMatrix& v);

// |Delta(-1)|; cross-checked against |det(V + V^T)|.
Integer knot_det(const SeifertMatrix& v);

// V + V^T, a presentation matrix for H_1 of the double branched cover.
IntMatrix symmetrize(const SeifertMatrix& v);

// Cokernel of V + V^T in invariant-factor form.
AbelianGroup double_cover_homology(const SeifertMatrix& v);

// Signature of V + V^T.
int knot_signature(const SeifertMatrix& v);

// The 2x2 matrix with upper-left entry a replaced by a - epsilon; models a
// single crossing change of sign epsilon on the surface. Property-testing
// aid only, not part of the obstruction pipeline.
SeifertMatrix crossing_change(const SeifertMatrix& v, int epsilon);

// Genus-one Seifert matrix of the pretzel knot P(p,q,r):
// (1/2) [[p+q, q+1], [q-1, q+r]].
SeifertMatrix pretzel_seifert(const PretzelParams& params);

// Genus-one Seifert matrix of the n-twisted Whitehead double;
// [[-1,0],[-1,n]] for a positive clasp, [[1,1],[0,n]] for a negative one.
// The matrix depends only on the clasp and n, not on the companion knot.
SeifertMatrix whitehead_seifert(const WhiteheadParams& params);

}  // namespace g1cc
