#include "heightlab/projective.hpp"

#include <sstream>

namespace heightlab {

HeightValue HeightValue::from_magnitude(BigRat mag) {
    HeightValue h;
    if (mag <= 0) throw std::domain_error("height magnitude must be positive");
    h.magnitude = std::move(mag);
    h.value = log_bigint(num(h.magnitude)) - log_bigint(den(h.magnitude));
    h.exact = true;
    return h;
}

HeightValue HeightValue::approximate(double v) {
    HeightValue h;
    h.value = v;
    h.exact = false;
    return h;
}

ProjPoint::ProjPoint(std::vector<BigInt> normalized_coords)
    : coords_(std::move(normalized_coords)) {}

std::string ProjPoint::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ':';
        os << coords_[i].str();
    }
    return os.str();
}

ProjPoint normalize_point(const std::vector<BigInt>& raw) {
    BigInt g = 0;
    for (const auto& c : raw) g = big_gcd(g, c);
    if (g == 0) throw InvalidPoint("projective point needs a nonzero coordinate");

    std::vector<BigInt> coords;
    coords.reserve(raw.size());
    for (const auto& c : raw) coords.push_back(c / g);
    for (const auto& c : coords) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& d : coords) d = -d;
        break;
    }
    return ProjPoint(std::move(coords));
}

ProjPoint normalize_point(const std::vector<BigRat>& raw) {
    BigInt lcm = 1;
    for (const auto& q : raw) lcm = lcm / big_gcd(lcm, den(q)) * den(q);
    std::vector<BigInt> ints;
    ints.reserve(raw.size());
    for (const auto& q : raw) ints.push_back(num(q) * (lcm / den(q)));
    return normalize_point(ints);
}

ProjPoint parse_point(const std::string& text) {
    std::vector<BigInt> raw;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ':')) raw.push_back(parse_bigint(item));
    if (raw.empty()) throw InvalidPoint("empty point literal");
    return normalize_point(raw);
}

HeightValue height_pn(const ProjPoint& p) {
    BigInt m = 0;
    for (const auto& c : p.coords()) {
        BigInt a = big_abs(c);
        if (a > m) m = a;
    }
    return HeightValue::from_magnitude(BigRat(m));
}

HeightValue height_rational(const BigRat& q) {
    BigInt n = big_abs(num(q));
    BigInt d = den(q);
    return HeightValue::from_magnitude(BigRat(n >= d ? (n > 0 ? n : d) : d));
}

}  // namespace heightlab
