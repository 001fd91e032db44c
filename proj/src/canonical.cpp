#include "heightlab/canonical.hpp"

#include "heightlab/detail/xfloat.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace heightlab {

namespace {

using detail::XFloat;

BigInt det_bareiss(std::vector<std::vector<BigInt>> m) {
    const int n = static_cast<int>(m.size());
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { pivot = i; break; }
            if (pivot < 0) return BigInt(0);
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// x([2]Q) = F(N,D) / G(N,D) on x = N/D for y^2 = x^3 + A x + B:
//   F = N^4 - 2A N^2 D^2 - 8B N D^3 + A^2 D^4
//   G = 4D (N^3 + A N D^2 + B D^3)
// For coprime (N,D) the common factor of F and G divides the resultant of
// the two binary quartics, so reduction never needs a full-size gcd.
BigInt duplication_resultant(const BigInt& A, const BigInt& B) {
    std::vector<BigInt> f = {1, 0, -2 * A, -8 * B, A * A};
    std::vector<BigInt> g = {0, 4, 0, 4 * A, 4 * B};
    std::vector<std::vector<BigInt>> syl(8, std::vector<BigInt>(8, BigInt(0)));
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 5; ++c) {
            syl[r][r + c] = f[c];
            syl[r + 4][r + c] = g[c];
        }
    return det_bareiss(std::move(syl));
}

BigInt mod_pos(const BigInt& x, const BigInt& m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

// Iterates x-coordinates of [2^m]P. Coordinates are exact big integers
// until they pass a size limit, then scaled floats whose reduction data
// (the value mod a shrinking power of the resultant) stays exact.
class DoublingEngine {
public:
    DoublingEngine(const EllipticCurve& curve, const CurvePoint& p,
                   const CanonicalOptions& opts) {
        // clear denominators once; the limit is model-independent
        BigInt u = den(curve.a()) / big_gcd(den(curve.a()), den(curve.b())) * den(curve.b());
        BigInt u2 = u * u;
        BigInt u4 = u2 * u2;
        A_ = num(curve.a()) * (u4 / den(curve.a()));
        B_ = num(curve.b()) * (u4 * u2 / den(curve.b()));
        R_ = big_abs(duplication_resultant(A_, B_));
        if (R_ == 0) throw ConvergenceFailure("degenerate duplication map");
        bit_limit_ = opts.exact_bit_limit;
        steps_budget_ = opts.max_iterations;

        BigRat x = p.x() * BigRat(u2);
        N_ = num(x);
        D_ = den(x);
        exact_ = true;
        maybe_demote();
    }

    bool at_infinity() const { return at_infinity_; }
    double magnitude_error() const { return err_; }

    // log max(|N|, D) of the current reduced x-coordinate
    double height() const {
        if (at_infinity_) return 0.0;
        if (exact_) {
            BigInt m = big_abs(N_);
            if (D_ > m) m = D_;
            return log_bigint(m);
        }
        if (fN_.is_zero()) return fD_.log_abs() > 0 ? fD_.log_abs() : 0.0;
        double hn = fN_.log_abs(), hd = fD_.log_abs();
        double h = hn > hd ? hn : hd;
        return h > 0 ? h : 0.0;
    }

    void step() {
        if (at_infinity_) return;
        if (exact_) step_exact();
        else step_float();
        maybe_demote();
    }

private:
    void maybe_demote() {
        if (!exact_ || at_infinity_) return;
        long bits = static_cast<long>(
            std::max(mpz_sizeinbase(N_.backend().data(), 2),
                     mpz_sizeinbase(D_.backend().data(), 2)));
        if (bits <= bit_limit_) return;
        M_ = 1;
        for (int i = 0; i <= steps_budget_; ++i) M_ *= R_;
        rN_ = mod_pos(N_, M_);
        rD_ = mod_pos(D_, M_);
        fN_ = XFloat::from_bigint(N_);
        fD_ = XFloat::from_bigint(D_);
        err_ = 3e-16;
        exact_ = false;
        N_ = D_ = 0;
    }

    void step_exact() {
        BigInt N2 = N_ * N_, D2 = D_ * D_;
        BigInt ND = N_ * D_;
        BigInt F = N2 * N2 - 2 * A_ * N2 * D2 - 8 * B_ * ND * D2 + A_ * A_ * D2 * D2;
        BigInt C3 = N_ * N2 + A_ * ND * D_ + B_ * D2 * D_;
        if (C3 == 0) {  // y([2^m]P) = 0, the next double is the origin
            at_infinity_ = true;
            return;
        }
        BigInt G = 4 * D_ * C3;
        if (F == 0) {
            N_ = 0;
            D_ = 1;
            return;
        }
        BigInt g = big_gcd(big_gcd(R_, mod_pos(F, R_)), mod_pos(G, R_));
        N_ = F / g;
        D_ = G / g;
        if (D_ < 0) { N_ = -N_; D_ = -D_; }
    }

    void step_float() {
        XFloat xA = XFloat::from_bigint(A_), xB = XFloat::from_bigint(B_);
        XFloat n2 = fN_ * fN_, d2 = fD_ * fD_;
        XFloat nd = fN_ * fD_;
        XFloat t1 = n2 * n2;
        XFloat t2 = XFloat::from_double(-2.0) * xA * n2 * d2;
        XFloat t3 = XFloat::from_double(-8.0) * xB * nd * d2;
        XFloat t4 = xA * xA * d2 * d2;
        XFloat F = ((t1 + t2) + t3) + t4;
        XFloat sumF = ((abs_x(t1) + abs_x(t2)) + abs_x(t3)) + abs_x(t4);

        XFloat c1 = fN_ * n2, c2 = xA * nd * fD_, c3 = xB * d2 * fD_;
        XFloat C3 = (c1 + c2) + c3;
        XFloat sumC = (abs_x(c1) + abs_x(c2)) + abs_x(c3);
        if (C3.is_zero())
            throw ConvergenceFailure("lost the cubic term to cancellation");
        XFloat G = XFloat::from_double(4.0) * fD_ * C3;

        // exact residues of the same polynomial step
        BigInt Am = mod_pos(A_, M_), Bm = mod_pos(B_, M_);
        BigInt rn2 = (rN_ * rN_) % M_;
        BigInt rd2 = (rD_ * rD_) % M_;
        BigInt rnd = (rN_ * rD_) % M_;
        BigInt rn4 = (rn2 * rn2) % M_;
        BigInt an2d2 = (((Am * rn2) % M_) * rd2) % M_;
        BigInt bnd3 = (((Bm * rnd) % M_) * rd2) % M_;
        BigInt a2d4 = (((((Am * Am) % M_) * rd2) % M_) * rd2) % M_;
        BigInt rF = mod_pos(rn4 - 2 * an2d2 - 8 * bnd3 + a2d4, M_);
        BigInt rc1 = (rN_ * rn2) % M_;
        BigInt rc2 = (((Am * rnd) % M_) * rD_) % M_;
        BigInt rc3 = (((Bm * rd2) % M_) * rD_) % M_;
        BigInt rG = mod_pos((4 * rD_ * ((rc1 + rc2 + rc3) % M_)) % M_, M_);

        double ampF = F.is_zero() ? 1e300 : XFloat::abs_ratio(sumF, F);
        double ampC = XFloat::abs_ratio(sumC, C3);
        if (rG == 0)
            throw ConvergenceFailure("reduction data degenerated at a doubling");
        if (rF == 0) {
            if (ampF < 1e12)
                throw ConvergenceFailure("reduction data degenerated at a doubling");
            // x of the doubled point is exactly zero
            fN_ = XFloat::zero();
            fD_ = XFloat::from_double(1.0);
            rN_ = 0;
            rD_ = 1;
            return;
        }
        if (ampF > 1e12 || ampC > 1e12)
            throw ConvergenceFailure("catastrophic cancellation in the doubling step");

        BigInt g = big_gcd(big_gcd(R_, rF % R_), rG % R_);

        constexpr double eps = 2.3e-16;
        double errF = ampF * (4.0 * err_ + 8.0 * eps) + 3.0 * eps;
        double errG = ampC * (3.0 * err_ + 8.0 * eps) + err_ + 4.0 * eps;
        err_ = std::max(errF, errG);
        if (err_ > 1e-3)
            throw ConvergenceFailure("magnitude error bound grew past its budget");

        XFloat xg = XFloat::from_bigint(g);
        fN_ = XFloat::from_double(F.mant / xg.mant);
        fN_.exp += F.exp - xg.exp;
        fD_ = XFloat::from_double(G.mant / xg.mant);
        fD_.exp += G.exp - xg.exp;
        rN_ = rF / g;
        rD_ = rG / g;
        M_ /= g;
        if (fD_.mant < 0) {
            fN_ = fN_.neg();
            fD_ = fD_.neg();
            rN_ = rN_ == 0 ? BigInt(0) : M_ - rN_;
            rD_ = rD_ == 0 ? BigInt(0) : M_ - rD_;
        }
    }

    static XFloat abs_x(const XFloat& x) { return XFloat{std::fabs(x.mant), x.exp}; }

    BigInt A_, B_, R_;
    long bit_limit_ = 0;
    int steps_budget_ = 0;
    bool exact_ = true;
    bool at_infinity_ = false;
    BigInt N_, D_;
    XFloat fN_, fD_;
    BigInt rN_, rD_, M_;
    double err_ = 0.0;
};

}  // namespace

CanonicalHeightValue canonical_height(const EllipticCurve& curve, const CurvePoint& p,
                                      double tol) {
    CanonicalOptions opts;
    opts.tol = tol;
    return canonical_height(curve, p, opts);
}

CanonicalHeightValue canonical_height(const EllipticCurve& curve, const CurvePoint& p,
                                      const CanonicalOptions& opts) {
    if (opts.tol <= 0) throw ConfigError("canonical height tolerance must be positive");
    if (p.is_origin()) return {0.0, 0.0, 0};
    if (!curve.contains(p)) throw InvalidPoint("point not on curve: " + p.str());

    DoublingEngine engine(curve, p, opts);
    double u_prev = 0.0;
    double c_hat = 0.0;
    for (int m = 0; m <= opts.max_iterations; ++m) {
        if (engine.at_infinity()) return {0.0, 0.0, m};
        double h = engine.height();
        double u = 0.5 * std::ldexp(h, -2 * m);
        if (m > 0) {
            double d = std::fabs(u - u_prev);
            c_hat = std::max(c_hat, std::ldexp(d, 2 * (m - 1)));
        }
        u_prev = u;
        // scale-aware floor so an accidentally flat start cannot certify
        // with a literally zero constant
        double c_eff = std::max(c_hat, std::ldexp(std::max(1.0, u), -44));
        double slack = 0.5 * std::ldexp(engine.magnitude_error() + h * 4e-16, -2 * m);
        double radius = opts.safety_factor * c_eff * std::ldexp(1.0, -2 * m) + slack;
        if (m >= opts.min_iterations && radius <= opts.tol)
            return {u, radius, m};
        engine.step();
    }
    throw ConvergenceFailure("no certified tail bound within the doubling budget");
}

double neron_tate_pairing(const EllipticCurve& curve, const CurvePoint& p,
                          const CurvePoint& q, double tol) {
    CanonicalHeightValue hpq = canonical_height(curve, curve.add(p, q), tol);
    CanonicalHeightValue hp = canonical_height(curve, p, tol);
    CanonicalHeightValue hq = canonical_height(curve, q, tol);
    return 0.5 * (hpq.value - hp.value - hq.value);
}

TorsionCheck is_torsion(const EllipticCurve& curve, const CurvePoint& p, double tol) {
    CanonicalHeightValue h = canonical_height(curve, p, tol);
    if (h.value > tol) return {false, 0};
    for (int n = 1; n <= 16; ++n)
        if (curve.multiply(BigInt(n), p).is_origin()) return {true, n};
    throw Inconclusive("height below tolerance but no order up to 16; tighten tol");
}

}  // namespace heightlab
