// Integer-coefficient Laurent polynomials with exact arithmetic and the
// "equality up to a unit +-t^k" relation used for Alexander polynomials.
//
// Representation invariant: coeffs_ is empty exactly for the zero
// polynomial; otherwise its first and last entries are nonzero and
// coeffs_[i] is the coefficient of t^(offset_ + i).
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "g1cc/integer.hpp"

namespace g1cc {

class LaurentPoly {
  public:
    LaurentPoly() = default;  // zero polynomial

    // Coefficients of t^offset, t^(offset+1), ...; stored trimmed.
    LaurentPoly(int offset, std::vector<Integer> coeffs);

    static LaurentPoly zero() { return {}; }
    static LaurentPoly constant(Integer c);
    static LaurentPoly one() { return constant(1); }
    // c * t^exp
    static LaurentPoly term(Integer c, int exp);

    bool is_zero() const { return coeffs_.empty(); }

    // Degree bounds; only meaningful for nonzero polynomials.
    int low_degree() const;
    int high_degree() const;
    int degree_span() const { return high_degree() - low_degree(); }

    // Coefficient of t^exp (zero outside the stored range).
    Integer coeff(int exp) const;

    const std::vector<Integer>& coeffs() const { return coeffs_; }
    int offset() const { return offset_; }

    friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g);
    friend LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g);
    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
    LaurentPoly operator-() const;

    bool operator==(const LaurentPoly&) const = default;

  private:
    int offset_ = 0;
    std::vector<Integer> coeffs_;
};

// Substitution t -> 1/t.
LaurentPoly conj(const LaurentPoly& f);

// Value at t = s for s in {+1, -1}; rejects any other point.
Integer eval_at_sign(const LaurentPoly& f, int s);

// Canonical representative of the unit class of f: multiplies by +-t^k so
// the result has offset 0 and positive leading coefficient. Rejects zero.
LaurentPoly normalize(const LaurentPoly& f);

// Equality up to multiplication by a unit +-t^k; zero matches only zero.
bool dot_equal(const LaurentPoly& f, const LaurentPoly& g);

// Descending powers with explicit signs, e.g. "2t^2 - 5t + 2".
std::string to_string(const LaurentPoly& f);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

}  // namespace g1cc
