#pragma once

#include "heightlab/elliptic.hpp"

#include <vector>

namespace heightlab {

// Canonical height with a certified radius: the true limit lies within
// value +- error_radius.
struct CanonicalHeightValue {
    double value = 0.0;
    double error_radius = 0.0;
    int iterations = 0;
};

struct CanonicalOptions {
    double tol = 1e-8;
    int max_iterations = 40;
    // doublings whose successive differences seed the tail constant
    int min_iterations = 4;
    double safety_factor = 4.0;
    // x-coordinate bit size beyond which the iteration switches from exact
    // integers to scaled floats with exact residue tracking
    long exact_bit_limit = 1L << 18;
};

// Limit of (1/2) 4^-m h(x([2^m]P)), certified by a geometric tail bound
// seeded from the observed successive differences times a safety factor.
CanonicalHeightValue canonical_height(const EllipticCurve& curve, const CurvePoint& p,
                                      double tol);
CanonicalHeightValue canonical_height(const EllipticCurve& curve, const CurvePoint& p,
                                      const CanonicalOptions& opts);

// <P,Q> = (hhat(P+Q) - hhat(P) - hhat(Q)) / 2, within 3 tol / 2.
double neron_tate_pairing(const EllipticCurve& curve, const CurvePoint& p,
                          const CurvePoint& q, double tol);

struct TorsionCheck {
    bool torsion = false;
    int order = 0;  // certificate: smallest n <= 16 with nP = O
};

// Sub-tolerance canonical height confirmed by an exact small-order search.
TorsionCheck is_torsion(const EllipticCurve& curve, const CurvePoint& p, double tol);

}  // namespace heightlab
