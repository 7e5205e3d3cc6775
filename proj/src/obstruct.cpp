#include "g1cc/obstruct.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace g1cc {

namespace {

TestOutcome outcome(std::string test, TestStatus status, std::string reason,
                    TestWitness witness = std::monostate{}) {
    return TestOutcome{std::move(test), status, std::move(reason), std::move(witness)};
}

}  // namespace

TestOutcome det_square_test(Integer d) {
    if (d <= 0)
        throw std::invalid_argument("knot determinants are positive; got " + to_string(d));
    std::ostringstream reason;
    const Integer root = isqrt(d);
    if (root * root == d) {
        reason << "determinant " << d << " = " << root << "^2 is a perfect square";
        return outcome("determinant", TestStatus::Inconclusive, reason.str());
    }
    reason << "determinant " << d << " is not a perfect square";
    return outcome("determinant", TestStatus::Obstructed, reason.str());
}

TestOutcome alg_slice_test(const LaurentPoly& delta) {
    if (delta.is_zero())
        throw std::invalid_argument("not a genus-one Alexander polynomial: zero");
    LaurentPoly g = normalize(delta);
    const Integer at_one = eval_at_sign(g, 1);
    if (at_one != 1 && at_one != -1)
        throw std::invalid_argument("not a genus-one Alexander polynomial: Delta(1) = " +
                                    to_string(at_one));
    if (at_one == -1) g = -g;  // now g(1) = 1
    if (g.degree_span() > 2)
        throw std::invalid_argument("not a genus-one Alexander polynomial: degree span " +
                                    std::to_string(g.degree_span()));
    const std::vector<Integer>& c = g.coeffs();
    if (!std::equal(c.begin(), c.end(), c.rbegin()))
        throw std::invalid_argument("not a genus-one Alexander polynomial: not palindromic");

    // g = m(t^2+1) + (1-2m)t; the middle coefficient is forced by g(1) = 1.
    const Integer m = g.degree_span() == 2 ? c.front() : Integer(0);
    const Integer disc = Integer(1) - 4 * m;
    std::ostringstream reason;
    if (disc >= 0 && is_perfect_square(disc)) {
        const Integer b = (isqrt(disc) - 1) / 2;
        const LaurentPoly f = LaurentPoly::term(b, 0) + LaurentPoly::term(-(b + 1), 1);
        reason << "algebraically slice: Delta = f(t) f(1/t) up to units with f = "
               << to_string(f);
        return outcome("alg_slice", TestStatus::Inconclusive, reason.str(),
                       SliceWitness{b, f, m});
    }
    reason << "not algebraically slice: 1 - 4m = " << disc
           << " is not a perfect square (m = " << m << ")";
    return outcome("alg_slice", TestStatus::Obstructed, reason.str());
}

TestOutcome homology_cyclic_test(const AbelianGroup& h) {
    if (h.free_rank() != 0)
        throw std::invalid_argument("double cover homology of a knot must be finite");
    std::ostringstream reason;
    if (h.invariant_factors().size() >= 2) {
        reason << "H1(Y_K) = " << to_string(h) << " is not cyclic";
        return outcome("homology", TestStatus::Obstructed, reason.str(), h);
    }
    reason << "H1(Y_K) = " << to_string(h) << " is cyclic";
    return outcome("homology", TestStatus::Inconclusive, reason.str(), h);
}

TestOutcome metabolizer_gcd_test(const SeifertMatrix& v) {
    if (v.dim() != 2)
        return outcome("metabolizer_gcd", TestStatus::NotApplicable,
                       "only 2x2 Seifert matrices are pattern-matched");
    if (v(1, 1) != 0)
        return outcome("metabolizer_gcd", TestStatus::NotApplicable,
                       "not in metabolizer form: lower-right entry is nonzero");
    // Valid 2x2 Seifert matrices have off-diagonals {b, b+1}; accept either
    // orientation.
    const Integer b = std::min(v(0, 1), v(1, 0));
    if (std::max(v(0, 1), v(1, 0)) != b + 1)
        return outcome("metabolizer_gcd", TestStatus::NotApplicable,
                       "not in metabolizer form: off-diagonals are not {b, b+1}");
    std::ostringstream reason;
    if (b == 0 || b == -1) {
        reason << "metabolizer form with b = " << b << "; the test requires b outside {0, -1}";
        return outcome("metabolizer_gcd", TestStatus::Inconclusive, reason.str());
    }
    const Integer a = v(0, 0);
    const Integer d = gcd(2 * a, 2 * b + 1);
    reason << "gcd(2a, 2b+1) = gcd(" << 2 * a << ", " << 2 * b + 1 << ") = " << d;
    if (d != 1) {
        reason << " != 1 with b = " << b;
        return outcome("metabolizer_gcd", TestStatus::Obstructed, reason.str(), d);
    }
    return outcome("metabolizer_gcd", TestStatus::Inconclusive, reason.str());
}

TestOutcome pretzel_test(const PretzelParams& params) {
    const Integer p = params.p, q = params.q, r = params.r;
    const Integer s = p * q + q * r + p * r;  // odd, so never zero
    std::ostringstream reason;
    if (s > 0 || !is_perfect_square(-s)) {
        reason << "case (1): pq + qr + pr = " << s << " is not -m^2 for any odd m";
        return outcome("pretzel", TestStatus::Obstructed, reason.str());
    }
    if (q + r == 0 && gcd(p, q) != 1) {
        reason << "case (2): q + r = 0 and gcd(p, q) = " << gcd(p, q) << " != 1";
        return outcome("pretzel", TestStatus::Obstructed, reason.str(), gcd(p, q));
    }
    if (p + q == 0 && gcd(p, r) != 1) {
        reason << "case (3): p + q = 0 and gcd(p, r) = " << gcd(p, r) << " != 1";
        return outcome("pretzel", TestStatus::Obstructed, reason.str(), gcd(p, r));
    }
    reason << "no case applies: pq + qr + pr = " << s << " = -" << isqrt(-s) << "^2";
    return outcome("pretzel", TestStatus::Inconclusive, reason.str());
}

TestOutcome whitehead_test(const WhiteheadParams& params) {
    const bool positive = params.clasp == Clasp::Positive;
    const char* clasp_name = positive ? "positive" : "negative";
    const Integer n = params.n;
    std::ostringstream reason;
    if (positive ? n < 0 : n > 0) {
        reason << clasp_name << " clasp and n = " << n << (positive ? " < 0" : " > 0");
        return outcome("whitehead", TestStatus::Obstructed, reason.str());
    }
    if (is_odd(n)) {
        reason << clasp_name << " clasp and |n| = " << abs(n) << " is odd";
        return outcome("whitehead", TestStatus::Obstructed, reason.str());
    }
    reason << clasp_name << " clasp with n = " << n << ": neither condition applies";
    return outcome("whitehead", TestStatus::Inconclusive, reason.str());
}

ObstructionReport combined_verdict(const KnotRecord& record) {
    ObstructionReport report;
    report.knot = record.name;

    if (const auto* det_only = std::get_if<DeterminantOnly>(&record.source)) {
        report.determinant = det_only->det;
        report.outcomes.push_back(det_square_test(det_only->det));
    } else {
        SeifertMatrix v = std::visit(
            [](const auto& src) -> SeifertMatrix {
                using T = std::decay_t<decltype(src)>;
                if constexpr (std::is_same_v<T, SeifertMatrix>) return src;
                else if constexpr (std::is_same_v<T, PretzelParams>) return pretzel_seifert(src);
                else if constexpr (std::is_same_v<T, WhiteheadParams>)
                    return whitehead_seifert(src);
                else throw std::logic_error("unreachable");
            },
            record.source);
        if (v.dim() != 2)
            throw std::invalid_argument(
                "obstruction tests apply to genus-one knots; got a " +
                std::to_string(v.dim()) + "x" + std::to_string(v.dim()) + " Seifert matrix");

        const Integer kd = knot_det(v);
        if (record.declared_det && *record.declared_det != kd)
            throw std::invalid_argument("inconsistent record: declared determinant " +
                                        to_string(*record.declared_det) +
                                        " but computed determinant " + to_string(kd));
        report.determinant = kd;
        report.alexander = alexander(v);
        report.homology = double_cover_homology(v);
        report.signature = knot_signature(v);

        report.outcomes.push_back(det_square_test(kd));
        report.outcomes.push_back(alg_slice_test(*report.alexander));
        report.outcomes.push_back(homology_cyclic_test(*report.homology));
        report.outcomes.push_back(metabolizer_gcd_test(v));
        if (const auto* pz = std::get_if<PretzelParams>(&record.source))
            report.outcomes.push_back(pretzel_test(*pz));
        if (const auto* wh = std::get_if<WhiteheadParams>(&record.source))
            report.outcomes.push_back(whitehead_test(*wh));
    }

    if (record.two_bridge)
        report.outcomes.push_back(outcome(
            "external", TestStatus::Obstructed,
            "2-bridge knot: cosmetic crossings excluded by an external theorem (flag, not "
            "computed)"));
    if (record.fibered)
        report.outcomes.push_back(outcome(
            "external", TestStatus::Obstructed,
            "fibered knot: cosmetic crossings excluded by an external theorem (flag, not "
            "computed)"));

    if (report.determinant == Integer(1))
        report.warnings.push_back("possibly trivial knot (det = 1)");

    const bool obstructed =
        std::any_of(report.outcomes.begin(), report.outcomes.end(),
                    [](const TestOutcome& o) { return o.status == TestStatus::Obstructed; });
    report.verdict = obstructed ? Verdict::NoCosmeticCrossings : Verdict::Unresolved;
    return report;
}

std::string to_string(TestStatus s) {
    switch (s) {
        case TestStatus::Obstructed: return "OBSTRUCTED";
        case TestStatus::Inconclusive: return "INCONCLUSIVE";
        case TestStatus::NotApplicable: return "NOT_APPLICABLE";
    }
    return "?";
}

std::string to_string(Verdict v) {
    return v == Verdict::NoCosmeticCrossings ? "NO_COSMETIC_CROSSINGS" : "UNRESOLVED";
}

}  // namespace g1cc
