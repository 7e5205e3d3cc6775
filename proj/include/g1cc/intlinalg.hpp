// Exact integer linear algebra: determinants (Bareiss), Smith normal form,
// and signatures of symmetric matrices via rational congruence
// diagonalization. No floating point anywhere.
#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "g1cc/integer.hpp"

namespace g1cc {

class IntMatrix {
  public:
    explicit IntMatrix(int n);
    IntMatrix(int n, std::vector<Integer> entries);  // row-major, n*n entries
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    int dim() const { return n_; }

    Integer& operator()(int i, int j) { return e_[index(i, j)]; }
    Integer operator()(int i, int j) const { return e_[index(i, j)]; }

    IntMatrix transpose() const;
    bool is_symmetric() const;

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

    bool operator==(const IntMatrix&) const = default;

  private:
    std::size_t index(int i, int j) const;

    int n_;
    std::vector<Integer> e_;
};

// Finitely generated abelian group in invariant-factor form: factors are
// each >= 2 and each divides the next; factors of 1 are never stored.
class AbelianGroup {
  public:
    AbelianGroup() = default;  // trivial group
    AbelianGroup(std::vector<Integer> invariant_factors, int free_rank);

    static AbelianGroup trivial() { return {}; }

    const std::vector<Integer>& invariant_factors() const { return factors_; }
    int free_rank() const { return free_rank_; }

    bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }
    bool is_finite() const { return free_rank_ == 0; }
    // Product of the invariant factors; requires free_rank == 0.
    Integer order() const;

    bool operator==(const AbelianGroup&) const = default;

  private:
    std::vector<Integer> factors_;
    int free_rank_ = 0;
};

// Exact determinant (fraction-free Bareiss elimination).
Integer det(const IntMatrix& m);

// Cokernel of m as a relation matrix on column vectors, in invariant-factor
// form; free_rank is the corank.
AbelianGroup smith_normal_form(const IntMatrix& m);

// #positive - #negative eigenvalues of a symmetric matrix, computed exactly
// by congruence diagonalization over the rationals. Rejects non-symmetric
// input.
int signature(const IntMatrix& m);

// "0" for the trivial group, "Z" per free rank, "Z/k" per factor, joined
// by " ⊕ ", e.g. "Z/3 ⊕ Z/3".
std::string to_string(const AbelianGroup& g);
std::ostream& operator<<(std::ostream& os, const AbelianGroup& g);

}  // namespace g1cc
