#include "modpoly/curves.hpp"

namespace modpoly {

PointFp2 random_point(const CurveFp2& E, Rng& rng) {
    const std::uint64_t p = E.a1.modulus();
    for (int tries = 0; tries < 4096; ++tries) {
        Fp2 x(rng.below(p), rng.below(p), p);
        Fp2 rhs = x * x * x + E.a2 * x * x + E.a4 * x + E.a6;
        // y^2 + (a1 x + a3) y - rhs = 0
        Fp2 bq = E.a1 * x + E.a3;
        auto disc = fp2_sqrt_opt(bq * bq + 4 * rhs);
        if (!disc) continue;
        Fp2 y = (*disc - bq) / 2;
        PointFp2 P = PointFp2::affine(x, y);
        assert(on_curve(E, P));
        return P;
    }
    throw InternalError("random_point: no point found");
}

std::uint64_t point_order(const CurveFp2& E, const PointFp2& P, std::uint64_t bound) {
    // bound is a multiple of the order; peel prime factors
    std::uint64_t order = bound;
    std::uint64_t n = bound;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        while (n % q == 0) n /= q;
        while (order % q == 0 && scalar_mul(E, order / q, P).is_infinity()) order /= q;
    }
    if (n > 1)
        while (order % n == 0 && scalar_mul(E, order / n, P).is_infinity()) order /= n;
    return order;
}

namespace {

// Line through P1, P2 (tangent if equal) evaluated at S.
Fp2 line_at(const CurveFp2& E, const PointFp2& P1, const PointFp2& P2, const PointFp2& S) {
    if (P1.x == P2.x && (P1.y + P2.y + E.a1 * P2.x + E.a3).is_zero())
        return S.x - P1.x; // vertical
    Fp2 lam = (P1 == P2)
        ? (3 * (P1.x * P1.x) + 2 * (E.a2 * P1.x) + E.a4 - E.a1 * P1.y) /
              (2 * P1.y + E.a1 * P1.x + E.a3)
        : (P2.y - P1.y) / (P2.x - P1.x);
    return S.y - P1.y - lam * (S.x - P1.x);
}

// f_{n,P}(S) by Miller's algorithm; throws NonUnitDenominator when S hits the
// support (caller retries with a fresh auxiliary point). For P of exact order
// d | n the function is f_{d,P}^{n/d}, so the loop runs with d.
Fp2 miller(const CurveFp2& E, const PointFp2& P, std::uint64_t n_in, const PointFp2& S) {
    const std::uint64_t p = E.a1.modulus();
    const std::uint64_t d = point_order(E, P, n_in);
    const std::uint64_t n = d;
    Fp2 f = Fp2::one(p);
    PointFp2 T = P;
    int top = 63;
    while (top > 0 && ((n >> top) & 1) == 0) --top;
    for (int i = top - 1; i >= 0; --i) {
        Fp2 l = line_at(E, T, T, S);
        PointFp2 T2 = point_add(E, T, T);
        Fp2 v = T2.is_infinity() ? Fp2::one(p) : S.x - T2.x;
        f = f * f * l * unit_inv(v);
        T = T2;
        if ((n >> i) & 1) {
            l = line_at(E, T, P, S);
            T2 = point_add(E, T, P);
            v = T2.is_infinity() ? Fp2::one(p) : S.x - T2.x;
            f = f * l * unit_inv(v);
            T = T2;
        }
        if (f.is_zero()) throw NonUnitDenominator(); // S on support
    }
    if (!T.is_infinity()) throw NotTorsion();
    if (f.is_zero()) throw NonUnitDenominator();
    return f.pow(n_in / d);
}

} // namespace

Fp2 weil_pairing(const CurveFp2& E, const PointFp2& P, const PointFp2& Q, std::uint64_t n,
                 Rng& rng) {
    const std::uint64_t p = E.a1.modulus();
    if (P.is_infinity() || Q.is_infinity()) return Fp2::one(p);
    if (!scalar_mul(E, n, P).is_infinity() || !scalar_mul(E, n, Q).is_infinity())
        throw NotTorsion();
    if (P == Q || P == point_neg(E, Q)) {
        // e(P, +-P) = 1 by alternation
        if (P == Q) return Fp2::one(p);
    }
    for (int attempt = 0; attempt < 128; ++attempt) {
        PointFp2 S = random_point(E, rng);
        try {
            PointFp2 QS = point_add(E, Q, S);
            PointFp2 PmS = point_add(E, P, point_neg(E, S));
            PointFp2 nS = point_neg(E, S);
            if (QS.is_infinity() || PmS.is_infinity() || S.is_infinity()) continue;
            Fp2 num = miller(E, P, n, QS) / miller(E, P, n, S);
            Fp2 den = miller(E, Q, n, PmS) / miller(E, Q, n, nS);
            Fp2 e = num / den;
            if (e.is_zero()) continue;
            return e;
        } catch (const NonUnitDenominator&) {
            continue;
        }
    }
    throw InternalError("weil_pairing: no valid auxiliary point");
}

std::uint64_t root_of_unity_order(const Fp2& z, std::uint64_t n) {
    std::uint64_t ord = n;
    std::uint64_t m = n;
    for (std::uint64_t q = 2; q * q <= m; ++q) {
        while (m % q == 0) m /= q;
        while (ord % q == 0 && z.pow(ord / q) == Fp2::one(z.modulus())) ord /= q;
    }
    if (m > 1)
        while (ord % m == 0 && z.pow(ord / m) == Fp2::one(z.modulus())) ord /= m;
    return ord;
}

std::pair<PointFp2, PointFp2> torsion_basis(const CurveFp2& E, std::uint64_t n, Rng& rng) {
    const std::uint64_t p = E.a1.modulus();
    if ((p + 1) % n != 0) throw BadOrder();
    const std::uint64_t cof = (p + 1) / n;
    if (n == 1) return {PointFp2::infinity(), PointFp2::infinity()};

    auto sample = [&]() -> std::optional<PointFp2> {
        PointFp2 T = scalar_mul(E, cof, random_point(E, rng));
        if (T.is_infinity()) return std::nullopt;
        if (!scalar_mul(E, n, T).is_infinity()) throw TorsionSamplingFailed();
        if (point_order(E, T, n) != n) return std::nullopt;
        return T;
    };
    for (int attempt = 0; attempt < 256; ++attempt) {
        auto T1 = sample();
        if (!T1) continue;
        auto T2 = sample();
        if (!T2) continue;
        Fp2 e = weil_pairing(E, *T1, *T2, n, rng);
        if (root_of_unity_order(e, n) == n) return {*T1, *T2};
    }
    throw TorsionSamplingFailed();
}

TateNormalForm tate_normal_form(const CurveFp2& E, const PointFp2& P) {
    const std::uint64_t p = E.a1.modulus();
    if (P.is_infinity() || !scalar_mul(E, 3, P).is_infinity() || scalar_mul(E, 1, P).is_infinity())
        throw BadOrder();
    const Fp2 one = Fp2::one(p);
    const Fp2 zero = Fp2::zero(p);
    // translate P to (0,0)
    CoordinateChange<Fp2> tr{one, P.x, zero, P.y};
    CurveFp2 E1 = tr.apply(E);
    PointFp2 P1 = tr.apply(P);
    assert(P1.x.is_zero() && P1.y.is_zero());
    (void)P1;
    assert(E1.a6.is_zero());
    if (E1.a3.is_zero()) throw BadOrder(); // (0,0) would be 2-torsion
    // shear y -> y + s x with s = a4/a3 kills a4; order 3 kills a2
    CoordinateChange<Fp2> sh{one, zero, E1.a4 / E1.a3, zero};
    CurveFp2 E2 = sh.apply(E1);
    if (!E2.a2.is_zero() || !E2.a4.is_zero() || !E2.a6.is_zero()) throw BadOrder();
    return {E2.a1, E2.a3, tr.then(sh)};
}

CoordinateChange<Fp2> curve_isomorphism(const CurveFp2& E1, const CurveFp2& E2, Rng& rng) {
    const std::uint64_t p = E1.a1.modulus();
    const Fp2 one = Fp2::one(p);
    if (E1.j_invariant() != E2.j_invariant()) throw NotIsomorphic();
    // reduce both to short form y^2 = x^3 + Ax + B
    auto to_short = [&](const CurveFp2& E) {
        CoordinateChange<Fp2> cb = b_form_change(E, one);
        CurveFp2 Eb = cb.apply(E);
        // x -> x - b2'/12 kills a2 (char != 2,3)
        Fp2 r = -(Eb.a2 / 3);
        CoordinateChange<Fp2> tr{one, r, Fp2::zero(p), Fp2::zero(p)};
        return std::make_pair(cb.then(tr), tr.apply(Eb));
    };
    auto [c1, S1] = to_short(E1);
    auto [c2, S2] = to_short(E2);
    const Fp2 A1 = S1.a4, B1 = S1.a6, A2 = S2.a4, B2 = S2.a6;

    // find u with A2 = A1 / u^4, B2 = B1 / u^6 (S1 -> S2 via (u,0,0,0))
    std::vector<Fp2> candidates;
    if (!A1.is_zero() && !B1.is_zero()) {
        Fp2 u2 = (B1 * A2) / (B2 * A1);
        if (auto u = fp2_sqrt_opt(u2)) candidates = {*u, -*u};
    } else if (A1.is_zero()) {
        // j = 0: u^6 = B1/B2
        PolyFp2 f({-(B1 / B2), Fp2::zero(p), Fp2::zero(p), Fp2::zero(p), Fp2::zero(p),
                   Fp2::zero(p), one});
        candidates = poly_roots(f, rng);
    } else {
        // j = 1728: u^4 = A1/A2
        PolyFp2 f({-(A1 / A2), Fp2::zero(p), Fp2::zero(p), Fp2::zero(p), one});
        candidates = poly_roots(f, rng);
    }
    for (const Fp2& u : candidates) {
        if (u.is_zero()) continue;
        CoordinateChange<Fp2> sc{u, Fp2::zero(p), Fp2::zero(p), Fp2::zero(p)};
        if (sc.apply(S1) == S2) {
            // E1 -> S1 -> S2 -> E2
            return c1.then(sc).then(c2.inverse());
        }
    }
    throw NotIsomorphic();
}

} // namespace modpoly
