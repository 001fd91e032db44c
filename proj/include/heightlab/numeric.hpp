#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace heightlab {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

inline BigInt num(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const BigRat& q) { return boost::multiprecision::denominator(q); }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_abs(const BigInt& a) { return boost::multiprecision::abs(a); }

// Natural log of a positive big integer, accurate to a few ulp.
inline double log_bigint(const BigInt& n) {
    if (n <= 0) throw std::domain_error("log_bigint: nonpositive argument");
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, n.backend().data());
    return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

// log max(|num|, den) of a reduced rational; log 1 = 0 for q = 0.
inline double log_rational_height(const BigRat& q) {
    BigInt n = big_abs(num(q));
    BigInt d = den(q);
    return log_bigint(n >= d ? (n > 0 ? n : d) : d);
}

inline BigInt parse_bigint(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    return BigInt(s);
}

// Accepts "p", "p/q" and decimal-free signed integers.
inline BigRat parse_bigrat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(parse_bigint(s));
    BigInt p = parse_bigint(s.substr(0, slash));
    BigInt q = parse_bigint(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator: " + s);
    return BigRat(p, q);
}

inline std::string to_string(const BigInt& n) { return n.str(); }

inline std::string to_string(const BigRat& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

}  // namespace heightlab
