#include "modpoly/goodmodels.hpp"

#include "modpoly/errors.hpp"

namespace modpoly {

namespace {

PolyInt zd_const(long c) { return PolyInt({Integer(c)}); }
PolyInt zd_d(long c = 1) { return PolyInt({Integer(0), Integer(c)}); } // c*d
PolyInt zd_d2(long c = 1) { return PolyInt({Integer(0), Integer(0), Integer(c)}); }

} // namespace

HessDivisionData::HessDivisionData() {
    p_.resize(3);
    v_.resize(3);
    p_[1] = ZdPoly({zd_const(1)});
    p_[2] = ZdPoly({zd_const(1)});
    v_[1] = ZdPoly({PolyInt(), zd_const(1)});                      // t
    v_[2] = ZdPoly({PolyInt(), zd_const(2), zd_d(-1), PolyInt(), zd_const(1)}); // t^4 - d t^2 + 2t
}

const ZdPoly& HessDivisionData::h() {
    // -4t^3 + d^2 t^2 - 2dt + 1
    static const ZdPoly H({zd_const(1), zd_d(-2), zd_d2(1), zd_const(-4)});
    return H;
}

void HessDivisionData::extend(unsigned m) {
    if (m < p_.size()) return;
    const ZdPoly T({PolyInt(), zd_const(1)});
    const ZdPoly dt1({zd_const(-1), zd_d(1)}); // d t - 1
    const ZdPoly& H = h();
    for (unsigned n = static_cast<unsigned>(p_.size()); n <= m; ++n) {
        const ZdPoly &P1 = p_[n - 1], &V1 = v_[n - 1], &P2 = p_[n - 2], &V2 = v_[n - 2];
        ZdPoly pn, vn;
        if (n % 2 == 1) {
            pn = ZdPoly::exact_divide(-(T * H * P1 * P1) - V1, P2);
            ZdPoly p1sq = P1 * P1;
            vn = ZdPoly::exact_divide(T * H * H * p1sq * p1sq + T * T * V1 * V1 +
                                          dt1 * H * p1sq * V1,
                                      V2);
        } else {
            pn = ZdPoly::exact_divide(T * P1 * P1 - V1, -(H * P2));
            ZdPoly p1sq = P1 * P1;
            vn = ZdPoly::exact_divide(T * p1sq * p1sq + T * T * V1 * V1 - dt1 * p1sq * V1, V2);
        }
        p_.push_back(std::move(pn));
        v_.push_back(std::move(vn));
    }
}

const ZdPoly& HessDivisionData::P(unsigned m) {
    extend(m);
    return p_[m];
}
const ZdPoly& HessDivisionData::V(unsigned m) {
    extend(m);
    return v_[m];
}

std::pair<ZdPoly, ZdPoly> hess_pm_vm(unsigned m) {
    if (m < 1) throw BadOrder();
    HessDivisionData data;
    data.extend(m);
    return {data.P(m), data.V(m)};
}

HessTTables::HessTTables(const Fp2& dv, unsigned bound) : d(dv) {
    const std::uint64_t p = dv.modulus();
    const Fp2 one = Fp2::one(p), zero = Fp2::zero(p);
    h = PolyFp2({one, -2 * dv, dv * dv, Fp2::from_int(-4, p)});
    P.resize(std::max(3u, bound + 1));
    V.resize(P.size());
    P[1] = PolyFp2::constant(one);
    P[2] = PolyFp2::constant(one);
    V[1] = PolyFp2({zero, one});
    V[2] = PolyFp2({zero, Fp2::from_int(2, p), -dv, zero, one});
    const PolyFp2 T({zero, one});
    const PolyFp2 dt1({-one, dv});
    for (unsigned n = 3; n <= bound; ++n) {
        const PolyFp2 &P1 = P[n - 1], &V1 = V[n - 1], &P2 = P[n - 2], &V2 = V[n - 2];
        PolyFp2 p1sq = P1 * P1;
        if (n % 2 == 1) {
            P[n] = PolyFp2::exact_divide(-(T * h * p1sq) - V1, P2);
            V[n] = PolyFp2::exact_divide(T * h * h * p1sq * p1sq + T * T * V1 * V1 +
                                             dt1 * h * p1sq * V1,
                                         V2);
        } else {
            P[n] = PolyFp2::exact_divide(T * p1sq - V1, -(h * P2));
            V[n] = PolyFp2::exact_divide(T * p1sq * p1sq + T * T * V1 * V1 - dt1 * p1sq * V1,
                                         V2);
        }
    }
}

std::optional<Fp2> hess_t_scalar_mul(const HessTTables& tb, unsigned m, const Fp2& t0) {
    if (m == 0 || m >= tb.P.size()) throw BadOrder();
    Fp2 Pm = tb.P[m].eval(t0);
    Fp2 Vm = tb.V[m].eval(t0);
    Fp2 den = (m % 2 == 1) ? Pm * Pm : tb.h.eval(t0) * Pm * Pm;
    if (den.is_zero()) return std::nullopt;
    Fp2 val = Vm / den;
    return (m % 2 == 1) ? val : -val;
}

std::optional<Fp2> hess_t_scalar_mul(const Fp2& d, unsigned m, const Fp2& t0) {
    if (m == 0) throw BadOrder();
    if (m == 1) return t0;
    HessTTables tb(d, m);
    return hess_t_scalar_mul(tb, m, t0);
}

Fp2 hess_isogeny_coefficient(const Fp2& d, const std::vector<Fp2>& tvals, unsigned m) {
    const std::uint64_t p = d.modulus();
    if (m % 3 == 0) throw BadKernel("degree divisible by 3");
    // expected inputs: (m-1)/2 pair values for odd m; m/2-1 pair values plus
    // the 2-torsion midpoint for even m
    const std::size_t npairs = (m % 2 == 1) ? (m - 1) / 2 : m / 2 - 1;
    if (tvals.size() != npairs + (m % 2 == 0 ? 1 : 0))
        throw BadKernel("wrong number of kernel t-values");
    Fp2 sum = Fp2::zero(p), prod = Fp2::one(p);
    for (std::size_t i = 0; i < npairs; ++i) {
        if (tvals[i].is_zero()) throw BadKernel("kernel meets a 3-torsion translate");
        sum = sum + tvals[i].inv();
        prod = prod * tvals[i];
    }
    if (m % 2 == 1) {
        return (static_cast<std::int64_t>(m) * d - 6 * sum) * prod;
    }
    const Fp2 tmid = tvals.back();
    if (tmid.is_zero()) throw BadKernel("kernel meets a 3-torsion translate");
    Fp2 c1 = -2 * (tmid * tmid) + (d * d / 2) * tmid - d / 2;
    return c1 * ((static_cast<std::int64_t>(m) - 3) * d - 6 * sum + 6 * c1) * prod;
}

std::optional<Fp2> mont_xonly_ladder(const Fp2& A, std::uint64_t m, const Fp2& x0) {
    const std::uint64_t p = A.modulus();
    const Fp2 one = Fp2::one(p), zero = Fp2::zero(p);
    struct XZ {
        Fp2 X, Z;
    };
    auto xdbl = [&](const XZ& P) -> XZ {
        Fp2 t1 = (P.X + P.Z) * (P.X + P.Z);
        Fp2 t2 = (P.X - P.Z) * (P.X - P.Z);
        Fp2 X2 = t1 * t2;
        Fp2 t3 = t1 - t2; // 4XZ
        Fp2 Z2 = t3 * (t2 + (A + 2) / 4 * t3);
        return {X2, Z2};
    };
    auto xadd = [&](const XZ& P, const XZ& Q, const XZ& diff) -> XZ {
        Fp2 u = (P.X - P.Z) * (Q.X + Q.Z);
        Fp2 v = (P.X + P.Z) * (Q.X - Q.Z);
        Fp2 X3 = diff.Z * (u + v) * (u + v);
        Fp2 Z3 = diff.X * (u - v) * (u - v);
        return {X3, Z3};
    };
    if (m == 0) return std::nullopt;
    if (x0.is_zero() || (x0 * x0 + A * x0 + one).is_zero()) {
        // 2-torsion fiber: [m]P alternates between P and infinity
        if (m % 2 == 1) return x0;
        return std::nullopt;
    }
    XZ base{x0, one};
    XZ R0{one, zero}; // infinity
    XZ R1 = base;
    int top = 63;
    while (top > 0 && ((m >> top) & 1) == 0) --top;
    for (int i = top; i >= 0; --i) {
        if ((m >> i) & 1) {
            R0 = xadd(R0, R1, base);
            R1 = xdbl(R1);
        } else {
            R1 = xadd(R0, R1, base);
            R0 = xdbl(R0);
        }
    }
    if (R0.Z.is_zero()) return std::nullopt;
    return R0.X / R0.Z;
}

Fp2 mont_isogeny_coefficient(const Fp2& A, const std::vector<Fp2>& kernel_x, std::uint64_t ell) {
    const std::uint64_t p = A.modulus();
    if (ell % 2 == 0 || kernel_x.size() != ell - 1) throw BadKernel();
    Fp2 sigma = Fp2::zero(p), sigma_t = Fp2::zero(p), pi = Fp2::one(p);
    for (std::size_t i = 0; i < (ell - 1) / 2; ++i) {
        const Fp2& x = kernel_x[i];
        if (x.is_zero()) throw BadKernel("kernel through (0,0)");
        sigma = sigma + x;
        sigma_t = sigma_t + x.inv();
        pi = pi * x;
    }
    return (6 * sigma_t - 6 * sigma + A) * (pi * pi);
}

} // namespace modpoly
