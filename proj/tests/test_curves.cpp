#include "doctest.h"

#include "modpoly/curves.hpp"
#include "modpoly/models.hpp"
#include "modpoly/primes.hpp"

using namespace modpoly;

namespace {

CurveFp2 base_curve(std::uint64_t p) {
    return CurveFp2{Fp2::zero(p), Fp2::from_int(6, p), Fp2::zero(p), Fp2::one(p), Fp2::zero(p)};
}

} // namespace

TEST_CASE("group law on the supersingular base curve") {
    const std::uint64_t p = 23;
    CurveFp2 E = base_curve(p);
    CHECK(E.j_invariant() == Fp2::from_int(287496 % 23, p));
    Rng rng(1);
    for (int t = 0; t < 30; ++t) {
        PointFp2 P = random_point(E, rng);
        PointFp2 Q = random_point(E, rng);
        PointFp2 R = random_point(E, rng);
        CHECK(point_add(E, P, PointFp2::infinity()) == P);
        CHECK(point_add(E, P, point_neg(E, P)).is_infinity());
        CHECK(point_add(E, P, Q) == point_add(E, Q, P));
        CHECK(point_add(E, point_add(E, P, Q), R) == point_add(E, P, point_add(E, Q, R)));
        // group exponent p+1 over F_{p^2}
        CHECK(scalar_mul(E, p + 1, P).is_infinity());
        CHECK(scalar_mul(E, std::uint64_t(0), P).is_infinity());
    }
}

TEST_CASE("division polynomial special case of the tate-normal curve") {
    const std::uint64_t p = 10007;
    Fp2 a1 = Fp2::from_int(3, p), a3 = Fp2::from_int(5, p);
    CurveFp2 E{a1, Fp2::zero(p), a3, Fp2::zero(p), Fp2::zero(p)};
    PolyFp2 psi3 = division_polynomial(E, 3, Fp2::one(p));
    // 3x^4 + a1^2 x^3 + 3 a1 a3 x^2 + 3 a3^2 x
    PolyFp2 expect({Fp2::zero(p), 3 * (a3 * a3), 3 * (a1 * a3), a1 * a1, Fp2::from_int(3, p)});
    CHECK(psi3 == expect);
    CHECK(division_polynomial(E, 1, Fp2::one(p)) == PolyFp2::constant(Fp2::one(p)));
}

TEST_CASE("division polynomial roots are torsion x-coordinates") {
    const std::uint64_t p = next_suitable_prime(5, 4, 200);
    CurveFp2 E = base_curve(p);
    Rng rng(2);
    const std::uint64_t ell = 5;
    auto [T1, T2] = torsion_basis(E, ell, rng);
    // collect x-coords of E[5] \ {O} up to +-
    std::vector<Fp2> xs;
    for (std::uint64_t a = 0; a < ell; ++a)
        for (std::uint64_t b = 0; b < ell; ++b) {
            if (a == 0 && b == 0) continue;
            PointFp2 T = point_add(E, scalar_mul(E, a, T1), scalar_mul(E, b, T2));
            bool seen = false;
            for (auto& x : xs) seen = seen || x == T.x;
            if (!seen) xs.push_back(T.x);
        }
    CHECK(xs.size() == (ell * ell - 1) / 2);
    PolyFp2 psi = division_polynomial(E, ell, Fp2::one(p));
    CHECK(psi.degree() == static_cast<long>((ell * ell - 1) / 2));
    for (auto& x : xs) CHECK(psi.eval(x).is_zero());
    // simple roots: gcd(psi, psi') = 1
    CHECK(poly_gcd(psi, psi.derivative()).degree() == 0);
}

TEST_CASE("weil pairing: bilinear, alternating, exact order") {
    const std::uint64_t p = next_suitable_prime(5, 4, 200);
    CurveFp2 E = base_curve(p);
    Rng rng(3);
    for (std::uint64_t n : {3ull, 5ull, 4ull}) {
        if ((p + 1) % n != 0) continue;
        auto [T1, T2] = torsion_basis(E, n, rng);
        Fp2 e = weil_pairing(E, T1, T2, n, rng);
        CHECK(root_of_unity_order(e, n) == n);
        CHECK(weil_pairing(E, T1, T1, n, rng) == Fp2::one(p));
        // bilinearity on random multiples
        for (int t = 0; t < 5; ++t) {
            std::uint64_t a = 1 + rng.below(n - 1);
            Fp2 lhs = weil_pairing(E, scalar_mul(E, a, T1), T2, n, rng);
            CHECK(lhs == e.pow(a));
        }
        // alternating: e(Q, P) = e(P, Q)^{-1}
        CHECK(weil_pairing(E, T2, T1, n, rng) * e == Fp2::one(p));
    }
}

TEST_CASE("hessian curve law and translations") {
    const std::uint64_t p = 10007;
    Rng rng(4);
    const Fp2 w = omega(p);
    for (int t = 0; t < 6; ++t) {
        Fp2 d(rng.below(p), rng.below(p), p);
        if ((d * d * d - 27).is_zero()) continue;
        HessianCurve H{d, w};
        HessianPoint Pd = hessian::canonical_P(H);
        HessianPoint Qd = hessian::canonical_Q(H);
        CHECK(hessian::on_curve(H, Pd));
        CHECK(hessian::on_curve(H, Qd));
        CHECK(hessian::is_identity(H, hessian::mul(H, 3, Pd)));
        CHECK(hessian::is_identity(H, hessian::mul(H, 3, Qd)));
        HessianWeierstrass HW = hessian_to_weierstrass(H);
        // j(E_d) = d^3 (d^3 + 216)^3 / (d^3 - 27)^3
        Fp2 d3 = d * d * d;
        CHECK(HW.curve.j_invariant() ==
              d3 * (d3 + 216) * (d3 + 216) * (d3 + 216) /
                  ((d3 - 27) * (d3 - 27) * (d3 - 27)));
        // basis maps to the canonical pair
        CHECK(map_to_hessian(HW, HW.P) == Pd);
        CHECK(map_to_hessian(HW, HW.Q) == Qd);
        // translation formulas and law agreement through the matrix map
        PointFp2 R = random_point(HW.curve, rng);
        HessianPoint Rh = map_to_hessian(HW, R);
        CHECK(hessian::on_curve(H, Rh));
        CHECK(map_to_hessian(HW, point_add(HW.curve, R, HW.P)) ==
              HessianPoint{w * w * Rh.X, w * Rh.Y, Rh.Z});
        CHECK(map_to_hessian(HW, point_add(HW.curve, R, HW.Q)) ==
              HessianPoint{Rh.Z, Rh.X, Rh.Y});
        PointFp2 S = random_point(HW.curve, rng);
        HessianPoint Sh = map_to_hessian(HW, S);
        CHECK(hessian::add(H, Rh, Sh) == map_to_hessian(HW, point_add(HW.curve, R, S)));
        for (std::uint64_t n : {2ull, 3ull, 7ull, 12ull})
            CHECK(hessian::mul(H, n, Rh) == map_to_hessian(HW, scalar_mul(HW.curve, n, R)));
        // pairing anchor: e_3(P, Q) = omega
        Rng prng(7);
        CHECK(weil_pairing(HW.curve, HW.P, HW.Q, 3, prng) == w);
    }
}

TEST_CASE("tate normal form") {
    const std::uint64_t p = next_suitable_prime(5, 3, 300);
    CurveFp2 E = base_curve(p);
    Rng rng(5);
    auto [T1, T2] = torsion_basis(E, 3, rng);
    TateNormalForm tn = tate_normal_form(E, T1);
    CurveFp2 Et = tn.change.apply(E);
    CHECK(Et.a1 == tn.a1);
    CHECK(Et.a3 == tn.a3);
    CHECK(Et.a2.is_zero());
    CHECK(Et.a4.is_zero());
    CHECK(Et.a6.is_zero());
    PointFp2 Pt = tn.change.apply(T1);
    CHECK(Pt == PointFp2::affine(Fp2::zero(p), Fp2::zero(p)));
    // j preserved
    CHECK(Et.j_invariant() == E.j_invariant());
    // 3-division polynomial of the output vanishes at x = 0
    PolyFp2 psi3 = division_polynomial(Et, 3, Fp2::one(p));
    CHECK(psi3.eval(Fp2::zero(p)).is_zero());
    // already-normal input: identity change
    TateNormalForm tn2 = tate_normal_form(Et, Pt);
    CHECK(tn2.a1 == tn.a1);
    CHECK(tn2.a3 == tn.a3);
    CHECK(tn2.change.u == Fp2::one(p));
    CHECK(tn2.change.r.is_zero());
    CHECK(tn2.change.s.is_zero());
    CHECK(tn2.change.t.is_zero());
    CHECK_THROWS_AS(tate_normal_form(E, scalar_mul(E, 3, T1)), BadOrder);
}

TEST_CASE("curve isomorphism finds (u,r,s,t)") {
    const std::uint64_t p = 10007;
    CurveFp2 E = base_curve(p);
    Rng rng(6);
    // identity
    CoordinateChange<Fp2> id = curve_isomorphism(E, E, rng);
    CHECK(id.apply(E) == E);
    // random (u,r,s,t) image is recovered (up to composing to the same curve)
    for (int t = 0; t < 10; ++t) {
        Fp2 u(1 + rng.below(p - 1), rng.below(p), p);
        CoordinateChange<Fp2> ch{u, Fp2(rng.below(p), rng.below(p), p),
                                 Fp2(rng.below(p), rng.below(p), p),
                                 Fp2(rng.below(p), rng.below(p), p)};
        CurveFp2 E2 = ch.apply(E);
        CoordinateChange<Fp2> found = curve_isomorphism(E, E2, rng);
        CHECK(found.apply(E) == E2);
        // points transport to the codomain curve
        PointFp2 P = random_point(E, rng);
        CHECK(on_curve(E2, found.apply(P)));
    }
    // non-isomorphic: different j
    CurveFp2 other{Fp2::zero(p), Fp2::from_int(1, p), Fp2::zero(p), Fp2::from_int(7, p),
                   Fp2::from_int(3, p)};
    REQUIRE(other.j_invariant() != E.j_invariant());
    CHECK_THROWS_AS(curve_isomorphism(E, other, rng), NotIsomorphic);
    // hessian scaling family: E_d -> E_{wd} via (X:Y:Z) -> (X:Y:w^2 Z) maps
    // the canonical basis per the transport rule
    const Fp2 w = omega(p);
    Fp2 d(17, 0, p);
    HessianCurve H{d, w};
    HessianWeierstrass HW = hessian_to_weierstrass(H);
    HessianCurve Hw{w * d, w};
    HessianWeierstrass HWw = hessian_to_weierstrass(Hw);
    // iota_d (X:Y:Z) -> (X:Y:w^{-1} Z) sends E_d to E_{wd}, P_d to P_{wd},
    // Q_d to P_{wd} + Q_{wd}
    HessianPoint Qim{Fp2::zero(p), -Fp2::one(p), w * w}; // (0:-1:w^-1)
    CHECK(hessian::on_curve(Hw, Qim));
    HessianPoint expected = hessian::add(Hw, hessian::canonical_P(Hw), hessian::canonical_Q(Hw));
    CHECK(Qim == expected);
}

TEST_CASE("montgomery to weierstrass") {
    const std::uint64_t p = 23;
    MontgomeryCurve M{Fp2::from_int(6, p)};
    CurveFp2 E = montgomery_to_weierstrass(M);
    CHECK(E.a2 == Fp2::from_int(6, p));
    CHECK(E.a4 == Fp2::one(p));
    CHECK(E.a1.is_zero());
    CHECK(E.a3.is_zero());
    CHECK(E.a6.is_zero());
}
