#include "modpoly/models.hpp"

namespace modpoly {

namespace hessian {

HessianPoint identity(const HessianCurve& H) {
    const std::uint64_t p = H.d.modulus();
    return {Fp2::one(p), -Fp2::one(p), Fp2::zero(p)};
}

HessianPoint canonical_P(const HessianCurve& H) {
    const std::uint64_t p = H.d.modulus();
    return {-H.omega, Fp2::one(p), Fp2::zero(p)};
}

HessianPoint canonical_Q(const HessianCurve& H) {
    const std::uint64_t p = H.d.modulus();
    return {Fp2::zero(p), -Fp2::one(p), Fp2::one(p)};
}

bool on_curve(const HessianCurve& H, const HessianPoint& P) {
    return (P.X * P.X * P.X + P.Y * P.Y * P.Y + P.Z * P.Z * P.Z - H.d * P.X * P.Y * P.Z)
        .is_zero();
}

bool is_identity(const HessianCurve& H, const HessianPoint& P) {
    return P == identity(H);
}

HessianPoint neg(const HessianCurve&, const HessianPoint& P) { return {P.Y, P.X, P.Z}; }

HessianPoint translate_P(const HessianCurve& H, const HessianPoint& R) {
    Fp2 w2 = H.omega * H.omega;
    return {w2 * R.X, H.omega * R.Y, R.Z};
}

HessianPoint translate_Q(const HessianCurve&, const HessianPoint& R) {
    return {R.Z, R.X, R.Y};
}

HessianPoint dbl(const HessianCurve& H, const HessianPoint& P) {
    Fp2 X3 = P.X * P.X * P.X, Y3 = P.Y * P.Y * P.Y, Z3 = P.Z * P.Z * P.Z;
    HessianPoint R{P.Y * (Z3 - X3), P.X * (Y3 - Z3), P.Z * (X3 - Y3)};
    if (R.X.is_zero() && R.Y.is_zero() && R.Z.is_zero())
        throw InternalError("hessian doubling degenerate");
    (void)H;
    return R;
}

HessianPoint add(const HessianCurve& H, const HessianPoint& P, const HessianPoint& Q) {
    if (is_identity(H, P)) return Q;
    if (is_identity(H, Q)) return P;
    if (P == Q) return dbl(H, P);
    HessianPoint R{P.Y * P.Y * Q.X * Q.Z - Q.Y * Q.Y * P.X * P.Z,
                   P.X * P.X * Q.Y * Q.Z - Q.X * Q.X * P.Y * P.Z,
                   P.Z * P.Z * Q.X * Q.Y - Q.Z * Q.Z * P.X * P.Y};
    if (!(R.X.is_zero() && R.Y.is_zero() && R.Z.is_zero())) return R;
    // Sylvester formula degenerates exactly when P - Q is 3-torsion: then
    // P = Q + T and P + Q = [2]Q + T for the translation T.
    HessianPoint C = Q;
    for (int k = 0; k < 3; ++k) {
        HessianPoint row = C;
        for (int l = 0; l < 3; ++l) {
            if (row == P) {
                HessianPoint D = dbl(H, Q);
                for (int kk = 0; kk < k; ++kk) D = translate_P(H, D);
                for (int ll = 0; ll < l; ++ll) D = translate_Q(H, D);
                return D;
            }
            row = translate_Q(H, row);
        }
        C = translate_P(H, C);
    }
    throw InternalError("hessian addition degenerate beyond 3-torsion translates");
}

HessianPoint mul(const HessianCurve& H, std::uint64_t n, const HessianPoint& P) {
    HessianPoint acc = identity(H);
    HessianPoint base = P;
    while (n) {
        if (n & 1) acc = add(H, acc, base);
        n >>= 1;
        if (n) base = add(H, base, base);
    }
    return acc;
}

std::optional<Fp2> t_coord(const HessianPoint& P) {
    if (P.Z.is_zero()) return std::nullopt;
    return P.X * P.Y / (P.Z * P.Z);
}

} // namespace hessian

HessianWeierstrass hessian_to_weierstrass(const HessianCurve& H) {
    const std::uint64_t p = H.d.modulus();
    if (!H.valid()) throw OutOfImage();
    const Fp2 w = H.omega;
    const Fp2 d = H.d;
    Fp2 a1 = d / 3;
    Fp2 a3 = (d * d * d - 27) / 729;
    CurveFp2 E{a1, Fp2::zero(p), a3, Fp2::zero(p), Fp2::zero(p)};
    std::array<std::array<Fp2, 3>, 3> M{{{w * a1, 2 * w + 1, (w - 1) * a3},
                                         {-(w + 1) * a1, -(2 * w + 1), (-w - 2) * a3},
                                         {Fp2::one(p), Fp2::zero(p), Fp2::zero(p)}}};
    HessianWeierstrass HW{E, PointFp2::affine(Fp2::zero(p), Fp2::zero(p)), PointFp2::infinity(), M};
    // Q = M^{-1} (0 : -1 : 1): solved in closed form in the prototype:
    // row3 gives xi = s, rows give a1 xi + 3 a3 = s, hence xi = solving linear system.
    // Solve M v = (0, -1, 1)^T directly by 3x3 inversion.
    // inverse via adjugate
    auto det3 = [&](const std::array<std::array<Fp2, 3>, 3>& A) {
        return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
               A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
               A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
    };
    Fp2 det = det3(M);
    if (det.is_zero()) throw InternalError("hessian matrix singular");
    std::array<Fp2, 3> target{Fp2::zero(p), -Fp2::one(p), Fp2::one(p)};
    // Cramer
    std::array<Fp2, 3> v;
    for (int col = 0; col < 3; ++col) {
        auto Mc = M;
        for (int r = 0; r < 3; ++r) Mc[r][col] = target[r];
        v[col] = det3(Mc) / det;
    }
    if (v[2].is_zero()) throw InternalError("hessian Q at infinity");
    HW.Q = PointFp2::affine(v[0] / v[2], v[1] / v[2]);
    assert(on_curve(E, HW.Q));
    return HW;
}

HessianPoint map_to_hessian(const HessianWeierstrass& HW, const PointFp2& P) {
    const std::uint64_t p = HW.curve.a1.modulus();
    std::array<Fp2, 3> v = P.is_infinity()
        ? std::array<Fp2, 3>{Fp2::zero(p), Fp2::one(p), Fp2::zero(p)}
        : std::array<Fp2, 3>{P.x, P.y, Fp2::one(p)};
    const auto& M = HW.to_hessian;
    return {M[0][0] * v[0] + M[0][1] * v[1] + M[0][2] * v[2],
            M[1][0] * v[0] + M[1][1] * v[1] + M[1][2] * v[2],
            M[2][0] * v[0] + M[2][1] * v[1] + M[2][2] * v[2]};
}

PointFp2 map_from_hessian(const HessianWeierstrass& HW, const HessianPoint& P) {
    const auto& M = HW.to_hessian;
    auto det3 = [&](const std::array<std::array<Fp2, 3>, 3>& A) {
        return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
               A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
               A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
    };
    Fp2 det = det3(M);
    std::array<Fp2, 3> t{P.X, P.Y, P.Z};
    std::array<Fp2, 3> v;
    for (int col = 0; col < 3; ++col) {
        auto Mc = M;
        for (int r = 0; r < 3; ++r) Mc[r][col] = t[r];
        v[col] = det3(Mc) / det;
    }
    if (v[2].is_zero()) {
        if (!v[0].is_zero()) throw InternalError("non-identity point at infinity");
        return PointFp2::infinity();
    }
    return PointFp2::affine(v[0] / v[2], v[1] / v[2]);
}

} // namespace modpoly
