#include "qcoinv/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qcoinv {

int Laurent::min_exp() const {
    if (terms_.empty())
        throw std::logic_error("Laurent: min_exp of zero");
    return terms_.front().first;
}

int Laurent::max_exp() const {
    if (terms_.empty())
        throw std::logic_error("Laurent: max_exp of zero");
    return terms_.back().first;
}

Rational Laurent::coeff(int e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == e)
        return it->second;
    return Rational();
}

Laurent Laurent::operator-() const {
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_)
        r.terms_.emplace_back(e, -c);
    return r;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() && j != b.terms_.end()) {
        if (i->first < j->first) {
            r.terms_.push_back(*i++);
        } else if (j->first < i->first) {
            r.terms_.push_back(*j++);
        } else {
            Rational c = i->second + j->second;
            if (!c.is_zero())
                r.terms_.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    r.terms_.insert(r.terms_.end(), i, a.terms_.end());
    r.terms_.insert(r.terms_.end(), j, b.terms_.end());
    return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) {
    return a + (-b);
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero())
        return Laurent();
    // Fast path for monomial factors.
    if (a.terms_.size() == 1) {
        Laurent r;
        r.terms_.reserve(b.terms_.size());
        for (const auto& [e, c] : b.terms_) {
            Rational p = c * a.terms_[0].second;
            if (!p.is_zero())
                r.terms_.emplace_back(e + a.terms_[0].first, std::move(p));
        }
        return r;
    }
    if (b.terms_.size() == 1)
        return b * a;
    Laurent acc;
    for (const auto& [e, c] : a.terms_) {
        Laurent row;
        row.terms_.reserve(b.terms_.size());
        for (const auto& [e2, c2] : b.terms_) {
            Rational p = c * c2;
            if (!p.is_zero())
                row.terms_.emplace_back(e + e2, std::move(p));
        }
        acc += row;
    }
    return acc;
}

bool operator<(const Laurent& a, const Laurent& b) {
    return a.terms_ < b.terms_;
}

Laurent Laurent::scaled(const Rational& c) const {
    if (c.is_zero())
        return Laurent();
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, k] : terms_)
        r.terms_.emplace_back(e, k * c);
    return r;
}

Laurent Laurent::shifted(int e) const {
    Laurent r = *this;
    for (auto& t : r.terms_)
        t.first += e;
    return r;
}

Rational Laurent::eval_at(const Rational& lambda) const {
    if (lambda.is_zero())
        throw std::domain_error("Laurent: q is invertible, cannot evaluate at 0");
    Rational acc;
    for (const auto& [e, c] : terms_)
        acc += c * lambda.pow(e);
    return acc;
}

Rational Laurent::content() const {
    Rational g;
    for (const auto& [e, c] : terms_) {
        g = rational_gcd(g, c);
        if (g.is_one())
            break;
    }
    return g;
}

Laurent Laurent::primitive() const {
    if (is_zero())
        return Laurent();
    Rational g = content();
    if (leading_coeff().sign() < 0)
        g = -g;
    int shift = -min_exp();
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_)
        r.terms_.emplace_back(e + shift, c / g);
    return r;
}

Laurent Laurent::div_exact(const Laurent& d) const {
    if (d.is_zero())
        throw std::domain_error("Laurent: division by zero polynomial");
    if (is_zero())
        return Laurent();
    // Long division from the top; exactness required.
    Laurent rem = *this;
    Laurent quot;
    const int dlead = d.max_exp();
    const Rational& dc = d.terms_.back().second;
    while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= d.max_exp() - d.min_exp()) {
        int e = rem.max_exp() - dlead;
        Rational c = rem.leading_coeff() / dc;
        Laurent t = Laurent::term(c, e);
        quot += t;
        rem -= t * d;
        if (!rem.is_zero() && rem.max_exp() >= e + dlead)
            throw std::domain_error("Laurent: inexact division");
    }
    if (!rem.is_zero())
        throw std::domain_error("Laurent: inexact division");
    return quot;
}

Laurent Laurent::gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero())
        return b.primitive();
    if (b.is_zero())
        return a.primitive();
    // Euclid in Q[q] after shifting both arguments to ordinary polynomials.
    Laurent x = a.primitive();
    Laurent y = b.primitive();
    while (!y.is_zero()) {
        Laurent rem = x;
        while (!rem.is_zero() && rem.max_exp() >= y.max_exp()) {
            rem -= y * Laurent::term(rem.leading_coeff() / y.leading_coeff(),
                                     rem.max_exp() - y.max_exp());
        }
        x = y;
        y = rem.primitive();
    }
    return x;
}

Laurent Laurent::lcm(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero())
        return Laurent();
    Laurent g = gcd(a, b);
    return (a.primitive() * b.primitive()).div_exact(g).primitive();
}

std::string Laurent::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->second;
        if (out.empty()) {
            out += (c.sign() < 0 ? "-" : "");
        } else {
            out += (c.sign() < 0 ? " - " : " + ");
        }
        out += c.abs().str();
        out += "*q^";
        out += std::to_string(it->first);
    }
    return out;
}

namespace {

void skip_ws(std::string_view s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
        ++i;
}

}  // namespace

Laurent Laurent::parse(std::string_view s) {
    size_t i = 0;
    skip_ws(s, i);
    if (i < s.size() && s.compare(i, 1, "0") == 0 && i + 1 == s.size())
        return Laurent();
    Laurent out;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
    }
    while (i < s.size()) {
        skip_ws(s, i);
        size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
            ++i;
        if (start == i)
            throw std::invalid_argument("Laurent::parse: coefficient expected in '" + std::string(s) + "'");
        Rational c = Rational::parse(s.substr(start, i - start));
        skip_ws(s, i);
        if (i + 3 > s.size() || s.compare(i, 3, "*q^") != 0)
            throw std::invalid_argument("Laurent::parse: expected '*q^' in '" + std::string(s) + "'");
        i += 3;
        size_t estart = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+'))
            ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        int e = std::stoi(std::string(s.substr(estart, i - estart)));
        out += Laurent::term(sign < 0 ? -c : c, e);
        skip_ws(s, i);
        if (i == s.size())
            break;
        if (s[i] == '+') {
            sign = 1;
        } else if (s[i] == '-') {
            sign = -1;
        } else {
            throw std::invalid_argument("Laurent::parse: unexpected '" + std::string(1, s[i]) + "'");
        }
        ++i;
        skip_ws(s, i);
    }
    return out;
}

}  // namespace qcoinv
