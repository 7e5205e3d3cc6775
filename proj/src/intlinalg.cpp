#include "g1cc/intlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace g1cc {

IntMatrix::IntMatrix(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    e_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Integer(0));
}

IntMatrix::IntMatrix(int n, std::vector<Integer> entries) : n_(n), e_(std::move(entries)) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    if (e_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("entry count does not match matrix dimension");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : n_(static_cast<int>(rows.size())) {
    if (n_ < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    e_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument("matrix rows must all have length n");
        for (long long v : row) e_.emplace_back(v);
    }
}

std::size_t IntMatrix::index(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix dimensions differ");
    IntMatrix s(a.n_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) s.e_[k] = a.e_[k] + b.e_[k];
    return s;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix dimensions differ");
    IntMatrix s(a.n_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) s.e_[k] = a.e_[k] - b.e_[k];
    return s;
}

Integer det(const IntMatrix& m) {
    const int n = m.dim();
    IntMatrix a = m;
    int sign = 1;
    Integer prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            sign = -sign;
        }
        // Bareiss step: each new entry is a minor of m, so the division by
        // the previous pivot is exact.
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign < 0 ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

AbelianGroup::AbelianGroup(std::vector<Integer> invariant_factors, int free_rank)
    : factors_(std::move(invariant_factors)), free_rank_(free_rank) {
    if (free_rank_ < 0) throw std::invalid_argument("free rank must be nonnegative");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) throw std::invalid_argument("invariant factors must be >= 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw std::invalid_argument("invariant factors must form a divisibility chain");
    }
}

Integer AbelianGroup::order() const {
    if (free_rank_ != 0) throw std::logic_error("order of an infinite group");
    Integer o = 1;
    for (Integer f : factors_) o *= f;
    return o;
}

namespace {

struct SnfOps {
    IntMatrix& a;
    int n;

    void swap_rows(int i, int j) {
        for (int c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
    }
    void add_row(int dst, int src, Integer q) {  // row dst += q * row src
        for (int c = 0; c < n; ++c) a(dst, c) += q * a(src, c);
    }
    void add_col(int dst, int src, Integer q) {
        for (int r = 0; r < n; ++r) a(r, dst) += q * a(r, src);
    }

    // Smallest nonzero |entry| in the block with corner (k, k), or false.
    bool find_pivot(int k, int& pi, int& pj) const {
        bool found = false;
        Integer best = 0;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) {
                const Integer v = abs(a(i, j));
                if (v != 0 && (!found || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    }
};

}  // namespace

AbelianGroup smith_normal_form(const IntMatrix& m) {
    const int n = m.dim();
    IntMatrix a = m;
    SnfOps ops{a, n};
    int rank = 0;
    std::vector<Integer> diag;

    for (int k = 0; k < n; ++k) {
        int pi, pj;
        if (!ops.find_pivot(k, pi, pj)) break;
        ops.swap_rows(k, pi);
        ops.swap_cols(k, pj);

        for (bool clean = false; !clean;) {
            // Euclidean reduction of column k; a smaller remainder becomes
            // the new pivot until the column below is zero.
            for (int i = k + 1; i < n; ++i) {
                if (a(i, k) == 0) continue;
                ops.add_row(i, k, -(a(i, k) / a(k, k)));
                if (a(i, k) != 0) ops.swap_rows(i, k);
            }
            bool col_clean = true;
            for (int i = k + 1; i < n; ++i) col_clean = col_clean && a(i, k) == 0;
            if (!col_clean) continue;

            for (int j = k + 1; j < n; ++j) {
                if (a(k, j) == 0) continue;
                ops.add_col(j, k, -(a(k, j) / a(k, k)));
                if (a(k, j) != 0) ops.swap_cols(j, k);
            }
            bool row_clean = true;
            for (int j = k + 1; j < n; ++j) row_clean = row_clean && a(k, j) == 0;
            if (!row_clean) continue;
            for (int i = k + 1; i < n; ++i) row_clean = row_clean && a(i, k) == 0;
            if (!row_clean) continue;

            // The pivot must divide every entry of the remaining block.
            clean = true;
            for (int i = k + 1; i < n && clean; ++i)
                for (int j = k + 1; j < n && clean; ++j)
                    if (a(i, j) % a(k, k) != 0) {
                        ops.add_row(k, i, 1);
                        clean = false;
                    }
        }
        diag.push_back(abs(a(k, k)));
        ++rank;
    }

    std::vector<Integer> factors;
    for (Integer d : diag)
        if (d > 1) factors.push_back(d);
    return AbelianGroup(std::move(factors), n - rank);
}

namespace {

// Minimal exact rational, normalized with positive denominator.
struct Rat {
    Integer num = 0;
    Integer den = 1;

    Rat() = default;
    Rat(Integer n) : num(n) {}
    Rat(Integer n, Integer d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const Integer g = gcd(num, den);
        if (g > 1) {
            num = num / g;
            den = den / g;
        }
    }

    bool is_zero() const { return num == 0; }
    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("rational division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
};

}  // namespace

int signature(const IntMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("signature requires a symmetric matrix");
    const int n = m.dim();
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(n),
                                    std::vector<Rat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));

    std::vector<int> active;
    for (int i = 0; i < n; ++i) active.push_back(i);

    int sig = 0;
    while (!active.empty()) {
        int p = -1;
        for (int i : active)
            if (!a[i][i].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) {
            // All active diagonal entries vanish. A nonzero off-diagonal
            // pair is hyperbolic; the congruence row/col addition below
            // makes its diagonal nonzero and the pair then contributes 0.
            int hi = -1, hj = -1;
            for (std::size_t s = 0; s < active.size() && hi < 0; ++s)
                for (std::size_t t = s + 1; t < active.size(); ++t)
                    if (!a[active[s]][active[t]].is_zero()) {
                        hi = active[s];
                        hj = active[t];
                        break;
                    }
            if (hi < 0) break;  // zero block: contributes nothing
            for (int k : active) a[hi][k] = a[hi][k] + a[hj][k];
            for (int k : active) a[k][hi] = a[k][hi] + a[k][hj];
            continue;
        }

        sig += sign(a[p][p].num);
        const std::vector<Rat> prow = a[p];
        for (int i : active) {
            if (i == p) continue;
            for (int j : active) {
                if (j == p) continue;
                a[i][j] = a[i][j] - prow[static_cast<std::size_t>(i)] *
                                        prow[static_cast<std::size_t>(j)] / prow[static_cast<std::size_t>(p)];
            }
        }
        std::erase(active, p);
    }
    return sig;
}

std::string to_string(const AbelianGroup& g) {
    if (g.is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < g.free_rank(); ++i) {
        if (!first) out << " ⊕ ";
        out << "Z";
        first = false;
    }
    for (Integer f : g.invariant_factors()) {
        if (!first) out << " ⊕ ";
        out << "Z/" << f;
        first = false;
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g) { return os << to_string(g); }

}  // namespace g1cc
