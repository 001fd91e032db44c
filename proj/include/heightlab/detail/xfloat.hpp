#pragma once

#include "heightlab/numeric.hpp"

#include <cmath>
#include <cstdint>

namespace heightlab::detail {

// Floating value with an out-of-band binary exponent, for quantities whose
// logarithms exceed the double range. value = mant * 2^exp with
// |mant| in [1,2) or mant = 0.
struct XFloat {
    double mant = 0.0;
    int64_t exp = 0;

    static XFloat zero() { return XFloat{}; }

    static XFloat from_double(double v) {
        XFloat x;
        if (v == 0.0) return x;
        int e = 0;
        x.mant = std::frexp(v, &e) * 2.0;  // frexp gives [0.5,1)
        x.exp = e - 1;
        return x;
    }

    static XFloat from_bigint(const BigInt& n) {
        XFloat x;
        if (n == 0) return x;
        long e = 0;
        double m = mpz_get_d_2exp(&e, n.backend().data());  // |m| in [0.5,1)
        x.mant = m * 2.0;
        x.exp = e - 1;
        return x;
    }

    bool is_zero() const { return mant == 0.0; }

    XFloat neg() const { return XFloat{-mant, exp}; }

    // natural log of |value|; caller guarantees nonzero
    double log_abs() const {
        return std::log(std::fabs(mant)) + static_cast<double>(exp) * M_LN2;
    }

    friend XFloat operator*(const XFloat& a, const XFloat& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        XFloat r;
        double m = a.mant * b.mant;  // in (1,4)
        r.exp = a.exp + b.exp;
        if (std::fabs(m) >= 2.0) {
            m *= 0.5;
            r.exp += 1;
        }
        r.mant = m;
        return r;
    }

    friend XFloat operator+(const XFloat& a, const XFloat& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const XFloat& big = a.exp >= b.exp ? a : b;
        const XFloat& small = a.exp >= b.exp ? b : a;
        int64_t gap = big.exp - small.exp;
        if (gap > 128) return big;
        double m = big.mant + std::ldexp(small.mant, -static_cast<int>(gap));
        XFloat r = from_double(m);
        if (r.is_zero()) return zero();
        r.exp += big.exp;
        return r;
    }

    friend XFloat operator-(const XFloat& a, const XFloat& b) { return a + b.neg(); }

    // |a| < |b|
    static bool abs_less(const XFloat& a, const XFloat& b) {
        if (a.is_zero()) return !b.is_zero();
        if (b.is_zero()) return false;
        if (a.exp != b.exp) return a.exp < b.exp;
        return std::fabs(a.mant) < std::fabs(b.mant);
    }

    // |a| / |b| as a plain double; meaningful when exponents are close
    static double abs_ratio(const XFloat& a, const XFloat& b) {
        if (a.is_zero()) return 0.0;
        return std::fabs(a.mant / b.mant) *
               std::exp2(static_cast<double>(a.exp - b.exp));
    }
};

}  // namespace heightlab::detail
