#pragma once

#include "heightlab/errors.hpp"
#include "heightlab/numeric.hpp"
#include "heightlab/projective.hpp"

#include <optional>
#include <string>
#include <vector>

namespace heightlab {

// Affine point or the origin O of a short Weierstrass curve.
class CurvePoint {
public:
    CurvePoint() : infinity_(true) {}
    CurvePoint(BigRat x, BigRat y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

    static CurvePoint origin() { return CurvePoint(); }

    bool is_origin() const { return infinity_; }
    const BigRat& x() const;
    const BigRat& y() const;

    bool operator==(const CurvePoint& o) const;

    std::string str() const;  // "O" or "x,y"

private:
    bool infinity_;
    BigRat x_, y_;
};

// y^2 = x^3 + a x + b over Q. Short form only; generators are trusted
// input assumed independent mod torsion; torsion always contains O.
class EllipticCurve {
public:
    EllipticCurve(BigRat a, BigRat b,
                  std::vector<CurvePoint> generators = {},
                  std::vector<CurvePoint> torsion = {});

    const BigRat& a() const { return a_; }
    const BigRat& b() const { return b_; }
    const std::vector<CurvePoint>& generators() const { return generators_; }
    const std::vector<CurvePoint>& torsion_points() const { return torsion_; }
    BigRat discriminant() const;

    bool contains(const CurvePoint& p) const;

    CurvePoint negate(const CurvePoint& p) const;
    CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;
    CurvePoint multiply(const BigInt& n, const CurvePoint& p) const;

    // log max(|num|, den) of x(P); zero at the origin.
    HeightValue naive_height(const CurvePoint& p) const;

    std::string str() const;

private:
    BigRat a_, b_;
    std::vector<CurvePoint> generators_;
    std::vector<CurvePoint> torsion_;
};

// All points sum(n_i G_i) + T with |n_i| <= radius and T over the listed
// torsion, deduplicated, in a fixed deterministic order.
std::vector<CurvePoint> mw_box_points(const EllipticCurve& curve, int radius);

// Key-value curve file: a, b, generators, torsion ("x,y" entries split
// by ';', "O" for the origin).
EllipticCurve load_curve_config(const std::string& path);
EllipticCurve parse_curve_config(const std::string& text);
std::string curve_config_string(const EllipticCurve& curve);

CurvePoint parse_curve_point(const std::string& text);

}  // namespace heightlab
