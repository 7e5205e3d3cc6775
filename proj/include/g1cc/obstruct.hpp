// Cosmetic-crossing obstruction tests for genus-one knots and the combined
// per-knot verdict. Every test is one-directional: OBSTRUCTED proves the
// knot admits no cosmetic crossing, INCONCLUSIVE proves nothing. No test
// ever asserts that a cosmetic crossing exists.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "g1cc/knot_record.hpp"

namespace g1cc {

enum class TestStatus { Obstructed, Inconclusive, NotApplicable };

enum class Verdict { NoCosmeticCrossings, Unresolved };

// Factorization witness for an algebraically slice genus-one polynomial:
// Delta = f(t) f(1/t) up to units with f = b - (b+1) t, where m is the
// coefficient read off the sign-normalized form m(t^2+1) + (1-2m)t.
struct SliceWitness {
    Integer b;
    LaurentPoly f;
    Integer m;
};

using TestWitness = std::variant<std::monostate, SliceWitness, AbelianGroup, Integer>;

struct TestOutcome {
    std::string test;    // which obstruction produced this outcome
    TestStatus status;
    std::string reason;  // citation of the fact applied, with the numbers
    TestWitness witness;
};

struct ObstructionReport {
    std::string knot;
    std::optional<Integer> determinant;
    std::optional<LaurentPoly> alexander;
    std::optional<AbelianGroup> homology;
    std::optional<int> signature;
    std::vector<TestOutcome> outcomes;
    Verdict verdict = Verdict::Unresolved;
    std::vector<std::string> warnings;
};

// OBSTRUCTED iff d is not a perfect square. Rejects d <= 0 (knot
// determinants are odd positive).
TestOutcome det_square_test(Integer d);

// Algebraic sliceness of a genus-one Alexander polynomial. Writes the
// sign-normalized polynomial as m(t^2+1) + (1-2m)t; slice iff 1-4m is a
// perfect square, in which case the SliceWitness is attached. Rejects
// polynomials that are not genus-one Alexander polynomials (degree span
// > 2, |Delta(1)| != 1, or non-palindromic).
TestOutcome alg_slice_test(const LaurentPoly& delta);

// OBSTRUCTED iff the group is non-cyclic (>= 2 invariant factors).
// Rejects groups with positive free rank.
TestOutcome homology_cyclic_test(const AbelianGroup& h);

// Pattern-matches the metabolizer form [[a, b], [b+1, 0]] (either
// off-diagonal orientation); when it matches with b outside {0, -1} and
// gcd(2a, 2b+1) != 1, the double cover homology is forced non-cyclic.
TestOutcome metabolizer_gcd_test(const SeifertMatrix& v);

// The three pretzel cases for P(p,q,r), p,q,r odd, s = pq+qr+pr:
// (1) s is not -m^2 for any odd m; (2) q+r = 0 and gcd(p,q) != 1;
// (3) p+q = 0 and gcd(p,r) != 1.
TestOutcome pretzel_test(const PretzelParams& params);

// Positive clasp: OBSTRUCTED iff n < 0 or |n| odd. Negative clasp:
// OBSTRUCTED iff n > 0 or |n| odd.
TestOutcome whitehead_test(const WhiteheadParams& params);

// Runs every test applicable to the record's data source, folds in the
// external two_bridge/fibered flags, and combines: the verdict is
// NO_COSMETIC_CROSSINGS iff at least one outcome is OBSTRUCTED.
// Rejects records whose matrix is not genus one and records whose declared
// determinant contradicts the computed one.
ObstructionReport combined_verdict(const KnotRecord& record);

std::string to_string(TestStatus s);
std::string to_string(Verdict v);

}  // namespace g1cc
