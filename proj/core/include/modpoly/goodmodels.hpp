#ifndef MODPOLY_GOODMODELS_HPP
#define MODPOLY_GOODMODELS_HPP

#include <optional>
#include <vector>

#include "modpoly/fp2.hpp"
#include "modpoly/poly.hpp"

namespace modpoly {

/// Polynomial in t with coefficients in Z[d].
using ZdPoly = UnivarPoly<PolyInt>;

/// Scalar-multiplication numerators V_m and denominators P_m for the Hessian
/// t-coordinate, as exact polynomials over Z[d]:
///   t([m]P) = V_m(t)/P_m(t)^2          (m odd)
///   t([m]P) = -V_m(t)/(h(t) P_m(t)^2)  (m even),  h = -4t^3 + d^2t^2 - 2dt + 1.
/// Built by the chain recursion; every division is exact in Z[d][t]
/// (NonExactDivision would indicate an implementation bug).
class HessDivisionData {
public:
    HessDivisionData();

    void extend(unsigned m);
    const ZdPoly& P(unsigned m);
    const ZdPoly& V(unsigned m);
    static const ZdPoly& h();

private:
    std::vector<ZdPoly> p_, v_;
};

/// (P_m, V_m) over Z[d] (see HessDivisionData).
std::pair<ZdPoly, ZdPoly> hess_pm_vm(unsigned m);

/// Specialized tables over F_{p^2} for a concrete d.
struct HessTTables {
    Fp2 d;
    std::vector<PolyFp2> P, V; // index m
    PolyFp2 h;

    HessTTables(const Fp2& d, unsigned bound);
};

/// t-coordinate of [m]P from t0 = t(P); empty optional encodes Infinity.
std::optional<Fp2> hess_t_scalar_mul(const Fp2& d, unsigned m, const Fp2& t0);
std::optional<Fp2> hess_t_scalar_mul(const HessTTables& tables, unsigned m, const Fp2& t0);

/// Hessian isogeny coefficient (degree m prime to 3):
///   m odd:  d' = (m d - 6 sum 1/t_i) prod t_i          over i = 1..(m-1)/2
///   m even: d' = c1 ((m-3) d - 6 sum 1/t_i + 6 c1) prod t_i  over i = 1..m/2-1,
///           c1 = -2 t_mid^2 + (d^2/2) t_mid - d/2 at the 2-torsion midpoint.
/// tvals holds t_d([i]K) for i = 1..ceil(m/2)-1; for even m the last entry is
/// the midpoint t_d([m/2]K).
Fp2 hess_isogeny_coefficient(const Fp2& d, const std::vector<Fp2>& tvals, unsigned m);

/// x-coordinate of [m]P on E_A : y^2 = x^3 + Ax^2 + x from x0 = x(P);
/// empty optional encodes Infinity. XZ Montgomery ladder.
std::optional<Fp2> mont_xonly_ladder(const Fp2& A, std::uint64_t m, const Fp2& x0);

/// Montgomery isogeny coefficient (odd ell): A' = (6 sigma~ - 6 sigma + A) pi^2
/// with sums/product over the half kernel x([i]K), i = 1..(ell-1)/2.
/// kernel_x holds x([i]K) for i = 1..ell-1.
Fp2 mont_isogeny_coefficient(const Fp2& A, const std::vector<Fp2>& kernel_x, std::uint64_t ell);

} // namespace modpoly

#endif
