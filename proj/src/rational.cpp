#include "qcoinv/rational.hpp"

namespace qcoinv {

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(BigInt(std::string(s)));
    BigInt n(std::string(s.substr(0, slash)));
    BigInt d(std::string(s.substr(slash + 1)));
    return Rational(std::move(n), std::move(d));
}

Rational Rational::pow(int e) const {
    if (e == 0)
        return Rational(1);
    if (is_zero()) {
        if (e < 0)
            throw std::domain_error("Rational: negative power of zero");
        return Rational();
    }
    Rational base = e > 0 ? *this : inverse();
    unsigned k = static_cast<unsigned>(e > 0 ? e : -e);
    Rational acc(1);
    while (k) {
        if (k & 1)
            acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string Rational::str() const {
    std::string out = num_.str();
    if (den_ != 1) {
        out += '/';
        out += den_.str();
    }
    return out;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero())
        return b.abs();
    if (b.is_zero())
        return a.abs();
    BigInt n = boost::multiprecision::gcd(boost::multiprecision::abs(a.num()),
                                          boost::multiprecision::abs(b.num()));
    BigInt d = boost::multiprecision::lcm(a.den(), b.den());
    return Rational(std::move(n), std::move(d));
}

}  // namespace qcoinv
