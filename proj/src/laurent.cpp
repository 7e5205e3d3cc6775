#include "g1cc/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace g1cc {

namespace {

// Strips leading/trailing zero coefficients, adjusting the offset.
void trim(int& offset, std::vector<Integer>& coeffs) {
    std::size_t lo = 0;
    while (lo < coeffs.size() && coeffs[lo] == 0) ++lo;
    if (lo == coeffs.size()) {
        coeffs.clear();
        offset = 0;
        return;
    }
    std::size_t hi = coeffs.size();
    while (coeffs[hi - 1] == 0) --hi;
    coeffs.erase(coeffs.begin() + static_cast<std::ptrdiff_t>(hi), coeffs.end());
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lo));
    offset += static_cast<int>(lo);
}

}  // namespace

LaurentPoly::LaurentPoly(int offset, std::vector<Integer> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
    trim(offset_, coeffs_);
}

LaurentPoly LaurentPoly::constant(Integer c) { return term(c, 0); }

LaurentPoly LaurentPoly::term(Integer c, int exp) {
    if (c == 0) return {};
    LaurentPoly p;
    p.offset_ = exp;
    p.coeffs_ = {c};
    return p;
}

int LaurentPoly::low_degree() const {
    if (is_zero()) throw std::logic_error("zero polynomial has no degree");
    return offset_;
}

int LaurentPoly::high_degree() const {
    if (is_zero()) throw std::logic_error("zero polynomial has no degree");
    return offset_ + static_cast<int>(coeffs_.size()) - 1;
}

Integer LaurentPoly::coeff(int exp) const {
    if (exp < offset_ || exp >= offset_ + static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(exp - offset_)];
}

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    const int lo = std::min(f.offset_, g.offset_);
    const int hi = std::max(f.high_degree(), g.high_degree());
    std::vector<Integer> sum(static_cast<std::size_t>(hi - lo + 1), Integer(0));
    for (int e = lo; e <= hi; ++e)
        sum[static_cast<std::size_t>(e - lo)] = f.coeff(e) + g.coeff(e);
    return LaurentPoly(lo, std::move(sum));
}

LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) { return f + (-g); }

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Integer> prod(f.coeffs_.size() + g.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
            prod[i + j] += f.coeffs_[i] * g.coeffs_[j];
    return LaurentPoly(f.offset_ + g.offset_, std::move(prod));
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly neg = *this;
    for (Integer& c : neg.coeffs_) c = -c;
    return neg;
}

LaurentPoly conj(const LaurentPoly& f) {
    if (f.is_zero()) return f;
    std::vector<Integer> rev(f.coeffs().rbegin(), f.coeffs().rend());
    return LaurentPoly(-f.high_degree(), std::move(rev));
}

Integer eval_at_sign(const LaurentPoly& f, int s) {
    if (s != 1 && s != -1)
        throw std::invalid_argument("Laurent polynomials are only integer-valued at t = +-1");
    Integer total = 0;
    for (int e = f.offset(); const Integer& c : f.coeffs()) {
        total += (s == 1 || e % 2 == 0) ? c : -c;
        ++e;
    }
    return total;
}

LaurentPoly normalize(const LaurentPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
    LaurentPoly g = f.coeffs().back() < 0 ? -f : f;
    return LaurentPoly(0, g.coeffs());
}

bool dot_equal(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    return normalize(f) == normalize(g);
}

std::string to_string(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = f.high_degree(); e >= f.low_degree(); --e) {
        const Integer c = f.coeff(e);
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const Integer a = abs(c);
        if (a != 1 || e == 0) out << a;
        if (e != 0) {
            out << "t";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << to_string(f); }

}  // namespace g1cc
