#include "heightlab/elliptic.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace heightlab {

const BigRat& CurvePoint::x() const {
    if (infinity_) throw InvalidPoint("origin has no affine coordinates");
    return x_;
}

const BigRat& CurvePoint::y() const {
    if (infinity_) throw InvalidPoint("origin has no affine coordinates");
    return y_;
}

bool CurvePoint::operator==(const CurvePoint& o) const {
    if (infinity_ || o.infinity_) return infinity_ == o.infinity_;
    return x_ == o.x_ && y_ == o.y_;
}

std::string CurvePoint::str() const {
    if (infinity_) return "O";
    return to_string(x_) + "," + to_string(y_);
}

EllipticCurve::EllipticCurve(BigRat a, BigRat b,
                             std::vector<CurvePoint> generators,
                             std::vector<CurvePoint> torsion)
    : a_(std::move(a)), b_(std::move(b)),
      generators_(std::move(generators)), torsion_(std::move(torsion)) {
    if (discriminant() == 0)
        throw ConfigError("singular curve: discriminant vanishes");
    bool has_origin = false;
    for (const auto& t : torsion_) has_origin = has_origin || t.is_origin();
    if (!has_origin) torsion_.insert(torsion_.begin(), CurvePoint::origin());
    for (const auto& g : generators_)
        if (g.is_origin() || !contains(g))
            throw ConfigError("generator not an affine point of the curve: " + g.str());
    for (const auto& t : torsion_)
        if (!contains(t))
            throw ConfigError("torsion point not on the curve: " + t.str());
}

BigRat EllipticCurve::discriminant() const {
    return BigRat(-16) * (BigRat(4) * a_ * a_ * a_ + BigRat(27) * b_ * b_);
}

bool EllipticCurve::contains(const CurvePoint& p) const {
    if (p.is_origin()) return true;
    const BigRat& x = p.x();
    const BigRat& y = p.y();
    return y * y == x * x * x + a_ * x + b_;
}

CurvePoint EllipticCurve::negate(const CurvePoint& p) const {
    if (p.is_origin()) return p;
    return CurvePoint(p.x(), -p.y());
}

CurvePoint EllipticCurve::add(const CurvePoint& p, const CurvePoint& q) const {
    if (p.is_origin()) return q;
    if (q.is_origin()) return p;
    const BigRat &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    BigRat lambda;
    if (x1 == x2) {
        if (y1 + y2 == 0) return CurvePoint::origin();
        // tangent line at a doubling
        lambda = (BigRat(3) * x1 * x1 + a_) / (BigRat(2) * y1);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    BigRat x3 = lambda * lambda - x1 - x2;
    BigRat y3 = lambda * (x1 - x3) - y1;
    return CurvePoint(std::move(x3), std::move(y3));
}

CurvePoint EllipticCurve::multiply(const BigInt& n, const CurvePoint& p) const {
    if (n == 0 || p.is_origin()) return CurvePoint::origin();
    BigInt k = big_abs(n);
    CurvePoint base = n < 0 ? negate(p) : p;
    CurvePoint acc = CurvePoint::origin();
    // double-and-add, most significant bit first
    std::vector<int> bits;
    for (BigInt m = k; m > 0; m >>= 1) bits.push_back(static_cast<int>(m & 1));
    for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
        acc = add(acc, acc);
        if (*it) acc = add(acc, base);
    }
    return acc;
}

HeightValue EllipticCurve::naive_height(const CurvePoint& p) const {
    if (p.is_origin()) return HeightValue::from_magnitude(BigRat(1));
    return height_rational(p.x());
}

std::string EllipticCurve::str() const {
    return "y^2 = x^3 + (" + to_string(a_) + ")x + (" + to_string(b_) + ")";
}

std::vector<CurvePoint> mw_box_points(const EllipticCurve& curve, int radius) {
    if (radius < 0) throw ConfigError("box radius must be nonnegative");
    const auto& gens = curve.generators();
    const auto& tors = curve.torsion_points();

    std::vector<CurvePoint> out;
    std::set<std::string> seen;
    auto emit = [&](const CurvePoint& p) {
        if (seen.insert(p.str()).second) out.push_back(p);
    };

    // odometer over (n_1,...,n_r) in [-radius, radius]^r, last index fastest
    size_t r = gens.size();
    std::vector<int> n(r, -radius);
    bool done = false;
    while (!done) {
        CurvePoint base = CurvePoint::origin();
        for (size_t i = 0; i < r; ++i)
            base = curve.add(base, curve.multiply(BigInt(n[i]), gens[i]));
        for (const auto& t : tors) emit(curve.add(base, t));
        if (r == 0) break;
        size_t i = r;
        while (i > 0) {
            --i;
            if (n[i] < radius) {
                ++n[i];
                std::fill(n.begin() + i + 1, n.end(), -radius);
                break;
            }
            if (i == 0) done = true;
        }
    }
    return out;
}

CurvePoint parse_curve_point(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }),
            s.end());
    if (s == "O" || s == "o") return CurvePoint::origin();
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw ConfigError("curve point must be \"x,y\" or \"O\": " + text);
    return CurvePoint(parse_bigrat(s.substr(0, comma)), parse_bigrat(s.substr(comma + 1)));
}

namespace {

std::vector<CurvePoint> parse_point_list(const std::string& value) {
    std::vector<CurvePoint> pts;
    std::string item;
    std::istringstream is(value);
    while (std::getline(is, item, ';')) {
        auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        pts.push_back(parse_curve_point(item));
    }
    return pts;
}

}  // namespace

EllipticCurve parse_curve_config(const std::string& text) {
    std::optional<BigRat> a, b;
    std::vector<CurvePoint> gens, tors;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw ConfigError("curve config line is not key = value: " + line);
            continue;
        }
        auto trim = [](std::string s) {
            auto b1 = s.find_first_not_of(" \t\r");
            auto e1 = s.find_last_not_of(" \t\r");
            return b1 == std::string::npos ? std::string() : s.substr(b1, e1 - b1 + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "a") a = parse_bigrat(value);
        else if (key == "b") b = parse_bigrat(value);
        else if (key == "generators") gens = parse_point_list(value);
        else if (key == "torsion") tors = parse_point_list(value);
        else throw ConfigError("unknown curve config key: " + key);
    }
    if (!a || !b) throw ConfigError("curve config needs both a and b");
    return EllipticCurve(*a, *b, std::move(gens), std::move(tors));
}

EllipticCurve load_curve_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open curve config: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve_config(buf.str());
}

std::string curve_config_string(const EllipticCurve& curve) {
    std::ostringstream os;
    os << "a = " << to_string(curve.a()) << "\n";
    os << "b = " << to_string(curve.b()) << "\n";
    os << "generators = ";
    for (size_t i = 0; i < curve.generators().size(); ++i)
        os << (i ? "; " : "") << curve.generators()[i].str();
    os << "\n";
    os << "torsion = ";
    for (size_t i = 0; i < curve.torsion_points().size(); ++i)
        os << (i ? "; " : "") << curve.torsion_points()[i].str();
    os << "\n";
    return os.str();
}

}  // namespace heightlab
