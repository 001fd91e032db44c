#pragma once

#include "heightlab/errors.hpp"
#include "heightlab/numeric.hpp"

#include <string>
#include <vector>

namespace heightlab {

// A height value in natural-log units. While `exact` is set the value is
// log(magnitude) for an exactly known positive rational magnitude, so
// heights can be compared and combined without rounding; the double is a
// one-ulp approximation for reporting and ratio work.
struct HeightValue {
    double value = 0.0;
    bool exact = false;
    BigRat magnitude = BigRat(1);

    static HeightValue from_magnitude(BigRat mag);
    static HeightValue approximate(double v);
};

// Point of P^n with coprime integer coordinates, first nonzero positive.
class ProjPoint {
public:
    explicit ProjPoint(std::vector<BigInt> normalized_coords);

    const std::vector<BigInt>& coords() const { return coords_; }
    int ambient_dim() const { return static_cast<int>(coords_.size()) - 1; }

    bool operator==(const ProjPoint& o) const { return coords_ == o.coords_; }

    // Colon-separated lowest-terms form, e.g. "3:2".
    std::string str() const;

private:
    std::vector<BigInt> coords_;
};

// Unique normalized representative of the input's projective class.
// Throws InvalidPoint when every entry is zero.
ProjPoint normalize_point(const std::vector<BigInt>& raw);
ProjPoint normalize_point(const std::vector<BigRat>& raw);

// Parses "a:b:...", re-normalizing; rejects the all-zero tuple.
ProjPoint parse_point(const std::string& text);

// Absolute logarithmic height on P^n: log of the max absolute coordinate.
HeightValue height_pn(const ProjPoint& p);

// log max(|num|, den) of a reduced rational, via the point (num : den).
HeightValue height_rational(const BigRat& q);

}  // namespace heightlab
