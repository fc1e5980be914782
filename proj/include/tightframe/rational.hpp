#ifndef TIGHTFRAME_RATIONAL_HPP
#define TIGHTFRAME_RATIONAL_HPP

#include <string>
#include <stdexcept>
#include <boost/multiprecision/cpp_int.hpp>

namespace tightframe {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rat_str(const Rational& r) { return r.str(); }

// Accepts "p", "p/q" and plain decimals like "0.25".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("rational with zero denominator: " + s);
        return Rational(p, q);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
        bool neg = !head.empty() && head[0] == '-';
        if (head.empty() || head == "-" || head == "+") head += '0';
        BigInt ip(head);
        BigInt num = ip;
        BigInt den = 1;
        for (char c : tail) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad rational: " + s);
            num = num * 10 + (neg ? -(c - '0') : (c - '0'));
            den *= 10;
        }
        return Rational(num, den);
    }
    return Rational(BigInt(s));
}

inline BigInt floor_rat(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline BigInt ceil_rat(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) > 0 && q * denominator(r) != numerator(r)) ++q;
    return q;
}

inline long long to_ll(const BigInt& v) { return static_cast<long long>(v); }

} // namespace tightframe

#endif
