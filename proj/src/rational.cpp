#include "symmul/rational.hpp"

#include <stdexcept>

namespace symmul {

std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
    auto parse_int = [&](const std::string& t) {
        if (t.empty() || t == "-") throw std::invalid_argument("malformed rational: " + s);
        for (std::size_t i = t[0] == '-' ? 1 : 0; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("malformed rational: " + s);
        return BigInt(t);
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    const BigInt den = parse_int(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("malformed rational: " + s);
    return Rational(parse_int(s.substr(0, slash)), den);
}

BigInt floor(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
    BigInt q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

BigInt ceil(const Rational& r) { return -floor(-r); }

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("square root of a negative number");
    return boost::multiprecision::sqrt(n);
}

bool is_square(const BigInt& n) {
    if (n < 0) return false;
    const BigInt s = isqrt(n);
    return s * s == n;
}

BigInt pow(const BigInt& base, unsigned e) { return boost::multiprecision::pow(base, e); }

}  // namespace symmul
