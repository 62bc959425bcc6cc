#ifndef MODPOLY_CURVES_HPP
#define MODPOLY_CURVES_HPP

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "modpoly/epsring.hpp"
#include "modpoly/errors.hpp"
#include "modpoly/fp2.hpp"
#include "modpoly/poly.hpp"
#include "modpoly/rng.hpp"

namespace modpoly {

/// Inversion that signals a discardable degeneracy over R and a logic error
/// over a field.
inline Fp2 unit_inv(const Fp2& x) {
    if (x.is_zero()) throw NonUnitDenominator();
    return x.inv();
}
inline EpsSeries unit_inv(const EpsSeries& x) {
    if (!x.is_unit()) throw NonUnitDenominator();
    return x.inv();
}

/// Long Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over R.
template <class R>
struct WeierstrassCurve {
    R a1, a2, a3, a4, a6;

    std::array<R, 4> b_invariants() const {
        R b2 = a1 * a1 + 4 * a2;
        R b4 = 2 * a4 + a1 * a3;
        R b6 = a3 * a3 + 4 * a6;
        R b8 = a1 * a1 * a6 + 4 * (a2 * a6) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        return {b2, b4, b6, b8};
    }
    R c4() const {
        auto [b2, b4, b6, b8] = b_invariants();
        return b2 * b2 - 24 * b4;
    }
    R discriminant() const {
        auto [b2, b4, b6, b8] = b_invariants();
        return -(b2 * b2 * b8) - 8 * (b4 * b4 * b4) - 27 * (b6 * b6) + 9 * (b2 * b4 * b6);
    }
    R j_invariant() const {
        R c = c4();
        return c * c * c * unit_inv(discriminant());
    }
    friend bool operator==(const WeierstrassCurve& A, const WeierstrassCurve& B) {
        return A.a1 == B.a1 && A.a2 == B.a2 && A.a3 == B.a3 && A.a4 == B.a4 && A.a6 == B.a6;
    }
};

/// Affine point or the point at infinity.
template <class R>
struct CurvePoint {
    R x, y;
    bool inf = true;

    static CurvePoint infinity() { return CurvePoint{}; }
    static CurvePoint affine(R px, R py) { return CurvePoint{std::move(px), std::move(py), false}; }
    bool is_infinity() const { return inf; }
    friend bool operator==(const CurvePoint& P, const CurvePoint& Q) {
        if (P.inf || Q.inf) return P.inf == Q.inf;
        return P.x == Q.x && P.y == Q.y;
    }
    friend bool operator!=(const CurvePoint& P, const CurvePoint& Q) { return !(P == Q); }
};

template <class R>
bool on_curve(const WeierstrassCurve<R>& E, const CurvePoint<R>& P) {
    if (P.inf) return true;
    R lhs = P.y * P.y + E.a1 * P.x * P.y + E.a3 * P.y;
    R rhs = P.x * P.x * P.x + E.a2 * P.x * P.x + E.a4 * P.x + E.a6;
    return lhs == rhs;
}

template <class R>
CurvePoint<R> point_neg(const WeierstrassCurve<R>& E, const CurvePoint<R>& P) {
    if (P.inf) return P;
    return CurvePoint<R>::affine(P.x, -P.y - E.a1 * P.x - E.a3);
}

/// Chord-tangent group law; identity (0:1:0). Over R a vanishing-mod-eps
/// denominator throws NonUnitDenominator (discard-prime signal).
template <class R>
CurvePoint<R> point_add(const WeierstrassCurve<R>& E, const CurvePoint<R>& P,
                        const CurvePoint<R>& Q) {
    if (P.inf) return Q;
    if (Q.inf) return P;
    R lam = P.x; // placeholder, overwritten
    if (P.x == Q.x) {
        R ysum = P.y + Q.y + E.a1 * Q.x + E.a3;
        if (ring_is_zero(ysum)) return CurvePoint<R>::infinity();
        lam = (3 * (P.x * P.x) + 2 * (E.a2 * P.x) + E.a4 - E.a1 * P.y) *
              unit_inv(2 * P.y + E.a1 * P.x + E.a3);
    } else {
        lam = (Q.y - P.y) * unit_inv(Q.x - P.x);
    }
    R nu = P.y - lam * P.x;
    R x3 = lam * lam + E.a1 * lam - E.a2 - P.x - Q.x;
    R y3 = -(lam + E.a1) * x3 - nu - E.a3;
    return CurvePoint<R>::affine(x3, y3);
}

template <class R>
CurvePoint<R> scalar_mul(const WeierstrassCurve<R>& E, std::uint64_t n, CurvePoint<R> P) {
    CurvePoint<R> acc = CurvePoint<R>::infinity();
    while (n) {
        if (n & 1) acc = point_add(E, acc, P);
        n >>= 1;
        if (n) P = point_add(E, P, P);
    }
    return acc;
}

template <class R>
CurvePoint<R> scalar_mul(const WeierstrassCurve<R>& E, const Integer& n, const CurvePoint<R>& P) {
    if (n < 0) return scalar_mul(E, -n, point_neg(E, P));
    CurvePoint<R> acc = CurvePoint<R>::infinity();
    CurvePoint<R> base = P;
    Integer k = n;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = point_add(E, acc, base);
        k >>= 1;
        if (k > 0) base = point_add(E, base, base);
    }
    return acc;
}

/// Coordinate change x = u^2 x' + r, y = u^3 y' + u^2 s x' + t (Silverman's
/// (u, r, s, t)); maps this curve's coordinates to the primed model.
template <class R>
struct CoordinateChange {
    R u, r, s, t;

    static CoordinateChange identity(const R& one) {
        R zero = one - one;
        return {one, zero, zero, zero};
    }

    WeierstrassCurve<R> apply(const WeierstrassCurve<R>& E) const {
        R ui = unit_inv(u);
        R ui2 = ui * ui;
        R ui3 = ui2 * ui;
        R ui4 = ui2 * ui2;
        R ui6 = ui4 * ui2;
        WeierstrassCurve<R> out;
        out.a1 = (E.a1 + 2 * s) * ui;
        out.a2 = (E.a2 - s * E.a1 + 3 * r - s * s) * ui2;
        out.a3 = (E.a3 + r * E.a1 + 2 * t) * ui3;
        out.a4 = (E.a4 - s * E.a3 + 2 * (r * E.a2) - (t + r * s) * E.a1 + 3 * (r * r) - 2 * (s * t)) * ui4;
        out.a6 = (E.a6 + r * E.a4 + r * r * E.a2 + r * r * r - t * E.a3 - t * t - r * t * E.a1) * ui6;
        return out;
    }
    CurvePoint<R> apply(const CurvePoint<R>& P) const {
        if (P.inf) return P;
        R ui = unit_inv(u);
        R ui2 = ui * ui;
        R ui3 = ui2 * ui;
        R xp = (P.x - r) * ui2;
        R yp = (P.y - s * (P.x - r) - t) * ui3;
        return CurvePoint<R>::affine(xp, yp);
    }
    /// Composite change: apply *this first, then 'second'.
    CoordinateChange then(const CoordinateChange& second) const {
        CoordinateChange out;
        out.u = u * second.u;
        out.r = u * u * second.r + r;
        out.s = u * second.s + s;
        out.t = u * u * s * second.r + u * u * u * second.t + t;
        return out;
    }
    CoordinateChange inverse() const {
        R ui = unit_inv(u);
        R ui2 = ui * ui;
        R ui3 = ui2 * ui;
        CoordinateChange out;
        out.u = ui;
        out.r = -(r * ui2);
        out.s = -(s * ui);
        out.t = (r * s - t) * ui3;
        return out;
    }
};

/// y -> y - (a1 x + a3)/2 change killing a1 and a3 (char != 2).
template <class R>
CoordinateChange<R> b_form_change(const WeierstrassCurve<R>& E, const R& one) {
    R zero = one - one;
    R half = unit_inv(one + one);
    return CoordinateChange<R>{one, zero, -(E.a1 * half), -(E.a3 * half)};
}

/// x-polynomial whose roots over the closure are exactly the x-coordinates of
/// nonzero n-torsion points. Odd n: psi_n(x) of degree (n^2-1)/2; even n:
/// (4x^3+b2x^2+2b4x+b6) * (psi_n/psi_2)(x).
template <class R>
UnivarPoly<R> division_polynomial(const WeierstrassCurve<R>& E, unsigned n, const R& one) {
    using P = UnivarPoly<R>;
    auto [b2, b4, b6, b8] = E.b_invariants();
    P W({b6, 2 * b4, b2, 4 * one});
    std::vector<P> f(std::max(5u, n + 1));
    f[0] = P();
    f[1] = P::constant(one);
    f[2] = P::constant(one);
    f[3] = P({b8, 3 * b6, 3 * b4, b2, 3 * one});
    f[4] = P({b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, 2 * one});
    std::vector<bool> have(f.size(), false);
    have[0] = have[1] = have[2] = have[3] = have[4] = true;

    std::function<const P&(unsigned)> get = [&](unsigned m) -> const P& {
        if (m < f.size() && have[m]) return f[m];
        if (m >= f.size()) {
            f.resize(m + 1);
            have.resize(m + 1, false);
        }
        unsigned k = m / 2;
        P val;
        if (m % 2 == 1) {
            P a = get(k + 2) * get(k) * get(k) * get(k);
            P b = get(k - 1) * get(k + 1) * get(k + 1) * get(k + 1);
            val = (k % 2 == 0) ? (W * W * a - b) : (a - W * W * b);
        } else {
            val = get(k) * (get(k + 2) * (get(k - 1) * get(k - 1)) -
                            get(k - 2) * (get(k + 1) * get(k + 1)));
        }
        f[m] = std::move(val);
        have[m] = true;
        return f[m];
    };
    P fn = get(n);
    if (n % 2 == 0) fn = W * fn;
    return fn;
}

// ---- F_{p^2}-specific machinery -------------------------------------------

using CurveFp2 = WeierstrassCurve<Fp2>;
using PointFp2 = CurvePoint<Fp2>;

/// Uniform random point (works for any curve over F_{p^2}).
PointFp2 random_point(const CurveFp2& E, Rng& rng);

/// Weil pairing e_n(P, Q) for P, Q in E[n]; returns an n-th root of unity.
/// Convention pinned by e_3(P_d^hess, Q_d^hess) = omega.
Fp2 weil_pairing(const CurveFp2& E, const PointFp2& P, const PointFp2& Q, std::uint64_t n,
                 Rng& rng);

/// Basis of E[n] for E supersingular with E(F_{p^2}) = (Z/(p+1))^2, n | p+1.
/// n must be a prime power occurring in practice (prime or 4).
std::pair<PointFp2, PointFp2> torsion_basis(const CurveFp2& E, std::uint64_t n, Rng& rng);

/// Order of the pairing value as a root of unity, must divide n.
std::uint64_t root_of_unity_order(const Fp2& z, std::uint64_t n);

/// Exact order of P, given that it divides bound.
std::uint64_t point_order(const CurveFp2& E, const PointFp2& P, std::uint64_t bound);

/// Tate normal form for a point of exact order 3: returns (a1, a3, change)
/// with E' : y^2 + a1 xy + a3 y = x^3 and P -> (0, 0).
struct TateNormalForm {
    Fp2 a1, a3;
    CoordinateChange<Fp2> change;
};
TateNormalForm tate_normal_form(const CurveFp2& E, const PointFp2& P);

/// Explicit isomorphism E1 -> E2 over F_{p^2}; throws NotIsomorphic.
CoordinateChange<Fp2> curve_isomorphism(const CurveFp2& E1, const CurveFp2& E2, Rng& rng);

} // namespace modpoly

#endif
