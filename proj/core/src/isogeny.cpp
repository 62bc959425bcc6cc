#include "modpoly/isogeny.hpp"

namespace modpoly {

CurvePoint<EpsSeries> lift_kernel_generator(const WeierstrassCurve<EpsSeries>& Etil,
                                            const PointFp2& K, std::uint64_t ell) {
    if (K.is_infinity()) throw BadKernel();
    const std::size_t k = Etil.a1.precision();
    const std::uint64_t p = Etil.a1.modulus();
    if (k == 1) {
        return CurvePoint<EpsSeries>::affine(EpsSeries::constant(K.x, 1),
                                             EpsSeries::constant(K.y, 1));
    }
    UnivarPoly<EpsSeries> psi =
        division_polynomial(Etil, static_cast<unsigned>(ell), EpsSeries::one(k, p));
    EpsSeries xt = newton_lift_root(psi, K.x);
    EpsSeries rhs = xt * xt * xt + Etil.a2 * xt * xt + Etil.a4 * xt + Etil.a6;
    // general long form: y^2 + (a1 x + a3) y = rhs'; the pipeline uses a1=a3=0
    // deformations, asserted here
    assert(Etil.a1.is_zero() && Etil.a3.is_zero());
    EpsSeries yt = rhs.sqrt_with_seed(K.y);
    CurvePoint<EpsSeries> Kt = CurvePoint<EpsSeries>::affine(xt, yt);
    assert(on_curve(Etil, Kt));
    return Kt;
}

IsogenyData<EpsSeries> velu_over_R(const WeierstrassCurve<EpsSeries>& Etil,
                                   const CurvePoint<EpsSeries>& K, std::uint64_t ell) {
    return velu(Etil, K, ell);
}

} // namespace modpoly
