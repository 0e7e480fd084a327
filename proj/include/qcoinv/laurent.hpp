#pragma once

#include "qcoinv/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcoinv {

/// Exact Laurent polynomial in q over Rational: the coefficient ring Q[q,q^-1].
/// Terms are kept sorted by ascending exponent with no stored zero coefficients;
/// an empty term list is the zero element.
class Laurent {
public:
    using Term = std::pair<int, Rational>;

    Laurent() = default;
    Laurent(long long c) { if (c != 0) terms_.emplace_back(0, Rational(c)); }
    explicit Laurent(Rational c) { if (!c.is_zero()) terms_.emplace_back(0, std::move(c)); }

    static Laurent term(Rational c, int e) {
        Laurent p;
        if (!c.is_zero())
            p.terms_.emplace_back(e, std::move(c));
        return p;
    }
    static Laurent q(int e = 1) { return term(Rational(1), e); }
    static Laurent one() { return Laurent(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one();
    }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
    bool is_monomial() const { return terms_.size() == 1; }

    size_t term_count() const { return terms_.size(); }
    int min_exp() const;  // pre: nonzero
    int max_exp() const;  // pre: nonzero
    int exp_spread() const { return is_zero() ? 0 : max_exp() - min_exp(); }

    const std::vector<Term>& terms() const { return terms_; }
    Rational coeff(int e) const;

    /// Coefficient of the highest power of q (zero polynomial -> 0).
    Rational leading_coeff() const { return terms_.empty() ? Rational() : terms_.back().second; }

    Laurent operator-() const;
    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
    friend bool operator<(const Laurent& a, const Laurent& b);  // arbitrary total order

    Laurent scaled(const Rational& c) const;
    Laurent shifted(int e) const;  // multiply by q^e

    /// Exact evaluation at q = lambda; lambda must be nonzero (q is a unit).
    Rational eval_at(const Rational& lambda) const;

    /// Positive gcd of all rational coefficients (0 for the zero polynomial).
    Rational content() const;

    /// Divide out content and the lowest q-power; make the leading coefficient positive.
    /// Returns the unit-normalized primitive part (zero stays zero).
    Laurent primitive() const;

    /// Exact division; throws std::domain_error if the division leaves a remainder.
    Laurent div_exact(const Laurent& d) const;

    /// Monic-free gcd: primitive, lowest exponent 0, positive leading coefficient.
    static Laurent gcd(const Laurent& a, const Laurent& b);
    static Laurent lcm(const Laurent& a, const Laurent& b);

    /// Text form: `c*q^e` terms, exponents descending, e.g. "1*q^2 - 3*q^0".
    std::string str() const;
    static Laurent parse(std::string_view s);

private:
    std::vector<Term> terms_;
};

/// q - 1, handy in lifting checks.
inline Laurent q_minus_one() { return Laurent::q(1) - Laurent::one(); }

/// Exact evaluation at q = lambda (spec-level name).
inline Rational specialize(const Laurent& p, const Rational& lambda) { return p.eval_at(lambda); }

}  // namespace qcoinv
