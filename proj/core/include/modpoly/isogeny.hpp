#ifndef MODPOLY_ISOGENY_HPP
#define MODPOLY_ISOGENY_HPP

#include <vector>

#include "modpoly/curves.hpp"

namespace modpoly {

/// Separable isogeny with cyclic kernel <K> given by Velu's formulas
/// (normalized: the invariant differential pulls back to itself).
template <class R>
struct IsogenyData {
    WeierstrassCurve<R> domain;
    WeierstrassCurve<R> codomain;
    CurvePoint<R> kernel_generator;
    std::uint64_t degree = 1;
    std::vector<CurvePoint<R>> kernel_points; // all nonzero kernel points, [i]K at index i-1
};

/// Velu codomain from the nonzero kernel points. Kernel of any size (the
/// half-set with one of each +- pair is derived internally).
template <class R>
WeierstrassCurve<R> velu_codomain(const WeierstrassCurve<R>& E,
                                  const std::vector<CurvePoint<R>>& kernel_points) {
    auto [b2, b4, b6, b8] = E.b_invariants();
    const std::size_t n = kernel_points.size() + 1; // kernel order
    R t = E.a1 - E.a1; // zero
    R w = t;
    // points [1]K .. [take]K cover one of each +- pair for a cyclic kernel;
    // for even order this includes the 2-torsion midpoint [n/2]K exactly once
    const std::size_t take = (n % 2 == 1) ? (n - 1) / 2 : n / 2;
    for (std::size_t i = 0; i < take; ++i) {
        const auto& Q = kernel_points[i];
        R gx = 3 * (Q.x * Q.x) + 2 * (E.a2 * Q.x) + E.a4 - E.a1 * Q.y;
        R gy = -(2 * Q.y) - E.a1 * Q.x - E.a3;
        bool two_torsion = ring_is_zero(gy);
        R tq = two_torsion ? gx : 2 * gx - E.a1 * gy;
        R uq = gy * gy;
        t = t + tq;
        w = w + uq + Q.x * tq;
    }
    WeierstrassCurve<R> out = E;
    out.a4 = E.a4 - 5 * t;
    out.a6 = E.a6 - b2 * t - 7 * w;
    return out;
}

/// Velu isogeny with kernel <K> of exact order ell (odd prime, or 2).
template <class R>
IsogenyData<R> velu(const WeierstrassCurve<R>& E, const CurvePoint<R>& K, std::uint64_t ell) {
    IsogenyData<R> iso;
    iso.domain = E;
    iso.kernel_generator = K;
    iso.degree = ell;
    if (ell == 1 || K.is_infinity()) {
        if (ell != 1) throw BadKernel();
        iso.codomain = E;
        return iso;
    }
    CurvePoint<R> Q = K;
    for (std::uint64_t i = 1; i < ell; ++i) {
        if (Q.is_infinity()) throw BadKernel();
        iso.kernel_points.push_back(Q);
        Q = point_add(E, Q, K);
    }
    if (!Q.is_infinity()) throw BadKernel();
    iso.codomain = velu_codomain(E, iso.kernel_points);
    return iso;
}

/// Point map: x' = x + sum(x(P+Q) - x(Q)), y' likewise, over the nonzero
/// kernel points (kernel maps to the identity).
template <class R>
CurvePoint<R> evaluate_isogeny(const IsogenyData<R>& iso, const CurvePoint<R>& P) {
    if (P.is_infinity()) return P;
    for (const auto& Q : iso.kernel_points)
        if (P == Q) return CurvePoint<R>::infinity();
    R xs = P.x, ys = P.y;
    for (const auto& Q : iso.kernel_points) {
        CurvePoint<R> S = point_add(iso.domain, P, Q);
        if (S.is_infinity()) throw BadKernel("P+Q at infinity for kernel point Q");
        xs = xs + S.x - Q.x;
        ys = ys + S.y - Q.y;
    }
    return CurvePoint<R>::affine(xs, ys);
}

/// The ell+1 generators T2, T1 + [k]T2 (k = 0..ell-1) of the distinct cyclic
/// order-ell subgroups, given a basis of E[ell].
template <class R>
std::vector<CurvePoint<R>> enumerate_kernels(const WeierstrassCurve<R>& E,
                                             const CurvePoint<R>& T1, const CurvePoint<R>& T2,
                                             std::uint64_t ell) {
    std::vector<CurvePoint<R>> out;
    out.reserve(ell + 1);
    out.push_back(T2);
    CurvePoint<R> acc = T1;
    for (std::uint64_t k = 0; k < ell; ++k) {
        out.push_back(acc);
        if (k + 1 < ell) acc = point_add(E, acc, T2);
    }
    return out;
}

/// Lift a kernel generator of odd order ell from the special fiber to a
/// deformation Etil over R (x via Newton on the division polynomial, y via the
/// eps square root).
IsogenyData<EpsSeries> velu_over_R(const WeierstrassCurve<EpsSeries>& Etil,
                                   const CurvePoint<EpsSeries>& K, std::uint64_t ell);

CurvePoint<EpsSeries> lift_kernel_generator(const WeierstrassCurve<EpsSeries>& Etil,
                                            const PointFp2& K, std::uint64_t ell);

} // namespace modpoly

#endif
