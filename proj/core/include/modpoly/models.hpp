#ifndef MODPOLY_MODELS_HPP
#define MODPOLY_MODELS_HPP

#include <array>
#include <optional>

#include "modpoly/curves.hpp"

namespace modpoly {

/// E_A : y^2 = x^3 + A x^2 + x, A^2 != 4.
struct MontgomeryCurve {
    Fp2 A;
    bool valid() const { return !(A * A - 4).is_zero(); }
};

inline CurveFp2 montgomery_to_weierstrass(const MontgomeryCurve& M) {
    const std::uint64_t p = M.A.modulus();
    if (!M.valid()) throw OutOfImage();
    return CurveFp2{Fp2::zero(p), M.A, Fp2::zero(p), Fp2::one(p), Fp2::zero(p)};
}

/// E_d : X^3 + Y^3 + Z^3 = d XYZ with identity (1 : -1 : 0), d^3 != 27.
struct HessianCurve {
    Fp2 d;
    Fp2 omega; // fixed primitive cube root of unity
    bool valid() const { return !(d * d * d - 27).is_zero(); }
};

struct HessianPoint {
    Fp2 X, Y, Z;
    friend bool operator==(const HessianPoint& P, const HessianPoint& Q) {
        // projective equality via cross ratios
        return (P.X * Q.Y - P.Y * Q.X).is_zero() && (P.X * Q.Z - P.Z * Q.X).is_zero() &&
               (P.Y * Q.Z - P.Z * Q.Y).is_zero();
    }
    friend bool operator!=(const HessianPoint& P, const HessianPoint& Q) { return !(P == Q); }
};

namespace hessian {

HessianPoint identity(const HessianCurve& H);
HessianPoint canonical_P(const HessianCurve& H); // (-w : 1 : 0)
HessianPoint canonical_Q(const HessianCurve& H); // (0 : -1 : 1)
bool on_curve(const HessianCurve& H, const HessianPoint& P);
bool is_identity(const HessianCurve& H, const HessianPoint& P);
HessianPoint neg(const HessianCurve& H, const HessianPoint& P);
HessianPoint add(const HessianCurve& H, const HessianPoint& P, const HessianPoint& Q);
HessianPoint dbl(const HessianCurve& H, const HessianPoint& P);
HessianPoint mul(const HessianCurve& H, std::uint64_t n, const HessianPoint& P);
HessianPoint translate_P(const HessianCurve& H, const HessianPoint& R); // R + P_d
HessianPoint translate_Q(const HessianCurve& H, const HessianPoint& R); // R + Q_d

/// t_d(X:Y:Z) = XY/Z^2; empty for Z = 0 (infinity marker).
std::optional<Fp2> t_coord(const HessianPoint& P);

} // namespace hessian

/// Canonical Weierstrass companion of E_d: y^2 + (d/3) xy + ((d^3-27)/729) y = x^3
/// together with the 3x3 matrix isomorphism onto E_d (third row (1,0,0)) that
/// sends (0,0) to P_d and the distinguished basis point Q_w to Q_d.
struct HessianWeierstrass {
    CurveFp2 curve;
    PointFp2 P; // (0, 0)
    PointFp2 Q; // preimage of (0 : -1 : 1)
    std::array<std::array<Fp2, 3>, 3> to_hessian;
};

HessianWeierstrass hessian_to_weierstrass(const HessianCurve& H);

HessianPoint map_to_hessian(const HessianWeierstrass& HW, const PointFp2& P);
PointFp2 map_from_hessian(const HessianWeierstrass& HW, const HessianPoint& P);

} // namespace modpoly

#endif
