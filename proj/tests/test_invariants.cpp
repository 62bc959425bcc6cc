#include "doctest.h"

#include "modpoly/invariants.hpp"
#include "modpoly/isogeny.hpp"
#include "modpoly/primes.hpp"

using namespace modpoly;

TEST_CASE("J1/J0 shapes match the invariant interface conditions") {
    const Invariant& mont = montgomery_invariant_mode();
    CHECK(mont.J1().degree() == 6); // index [SL2(Z) : Gamma0(4)] = 6
    CHECK(mont.J0().degree() == 2);
    CHECK(mont.J1().lc() == 256); // leading coefficient only divisible by 2 | N
    CHECK(mont.J0().lc() == 1);   // primitive
    const Invariant& hess = hessian_invariant_mode();
    CHECK(hess.J1().degree() == 12); // index [SL2(Z) : Gamma(3)] = 12
    CHECK(hess.J0().degree() == 9);
    CHECK(hess.J1().lc() == 1);
    const Invariant& j = j_invariant_mode();
    CHECK(j.J1().degree() == 1);
    CHECK(j.J0().degree() == 0);
}

TEST_CASE("j_alpha values and poles") {
    const std::uint64_t p = 10007;
    const Invariant& mont = montgomery_invariant_mode();
    // montgomery z = 0 -> 2^8 (-3)^3 / (-4) = 1728
    CHECK(mont.j_alpha(Fp2::zero(p)) == Fp2::from_int(1728, p));
    CHECK_THROWS_AS(mont.j_alpha(Fp2::from_int(2, p)), OutOfImage);
    CHECK_THROWS_AS(mont.j_alpha(Fp2::from_int(-2, p)), OutOfImage);
    const Invariant& hess = hessian_invariant_mode();
    CHECK(hess.j_alpha(Fp2::zero(p)) == Fp2::zero(p));
    const Invariant& j = j_invariant_mode();
    CHECK(j.j_alpha(Fp2::from_int(287496, p)) == Fp2::from_int(287496, p));
}

TEST_CASE("montgomery invariant: canonical round trip and transports") {
    const std::uint64_t p = 10007;
    Rng rng(1);
    const Invariant& mont = montgomery_invariant_mode();

    // E_6 with the canonical subgroup gives back 6
    EnhancedCurve E6 = mont.canonical_curve(Fp2::from_int(6, p), rng);
    validate_structure(E6, rng);
    CHECK(mont.value(E6, rng) == Fp2::from_int(6, p));

    int done = 0;
    for (int t = 0; t < 60 && done < 15; ++t) {
        Fp2 A(rng.below(p), rng.below(p), p);
        if (!mont.is_in_image(A)) continue;
        EnhancedCurve EA;
        try {
            EA = mont.canonical_curve(A, rng);
        } catch (const OutOfImage&) {
            continue; // A+2 non-square: canonical structure not F_{p^2}-rational
        }
        Fp2 jv = EA.curve.j_invariant();
        if (jv.is_zero() || jv == Fp2::from_int(1728, p)) continue;
        CHECK(mont.value(EA, rng) == A);
        // invariant unchanged under random isomorphism
        Fp2 u(1 + rng.below(p - 1), rng.below(p), p);
        CoordinateChange<Fp2> ch{u, Fp2(rng.below(p), rng.below(p), p),
                                 Fp2(rng.below(p), rng.below(p), p),
                                 Fp2(rng.below(p), rng.below(p), p)};
        auto* cs = std::get_if<LevelStructure::CyclicSubgroup>(&EA.structure.data);
        REQUIRE(cs != nullptr);
        EnhancedCurve EB{ch.apply(EA.curve),
                         LevelStructure{4, LevelStructure::CyclicSubgroup{ch.apply(cs->G)}}};
        CHECK(mont.value(EB, rng) == A);
        // any generator of C gives the same value: -G generates <G>
        EnhancedCurve EC{EB.curve,
                         LevelStructure{4, LevelStructure::CyclicSubgroup{
                                               point_neg(EB.curve, ch.apply(cs->G))}}};
        CHECK(mont.value(EC, rng) == A);
        // the other 4-subgroup through (-1, sqrt(A-2)) transports to -A
        auto y2 = fp2_sqrt_opt(A - 2);
        if (y2) {
            PointFp2 G2 = PointFp2::affine(-Fp2::one(p), *y2);
            REQUIRE(on_curve(EA.curve, G2));
            EnhancedCurve ED{EA.curve, LevelStructure{4, LevelStructure::CyclicSubgroup{G2}}};
            CHECK(mont.value(ED, rng) == -A);
        }
        // J-compatibility: j(E) = j_alpha(value)
        CHECK(mont.j_alpha(A) == EA.curve.j_invariant());
        ++done;
    }
    CHECK(done >= 10);
}

TEST_CASE("hessian invariant: canonical round trip, pairing, transports") {
    const std::uint64_t p = 10007;
    Rng rng(2);
    const Invariant& hess = hessian_invariant_mode();
    const Fp2 w = omega(p);

    int done = 0;
    for (int t = 0; t < 40 && done < 10; ++t) {
        Fp2 d(rng.below(p), rng.below(p), p);
        if (!hess.is_in_image(d)) continue;
        EnhancedCurve Ed = hess.canonical_curve(d, rng);
        Fp2 jv = Ed.curve.j_invariant();
        if (jv.is_zero() || jv == Fp2::from_int(1728, p)) continue;
        validate_structure(Ed, rng);
        auto* fb = std::get_if<LevelStructure::FullBasis>(&Ed.structure.data);
        REQUIRE(fb != nullptr);
        // canonical basis pairs to omega
        CHECK(weil_pairing(Ed.curve, fb->P, fb->Q, 3, rng) == w);
        CHECK(hess.value(Ed, rng) == d);
        // J-compatibility
        CHECK(hess.j_alpha(d) == Ed.curve.j_invariant());
        // transport through iota_d: basis (P, P+Q) -> w^2 d, (P, 2P+Q) -> w d
        EnhancedCurve E2{Ed.curve,
                         LevelStructure{3, LevelStructure::FullBasis{
                                               fb->P, point_add(Ed.curve, fb->P, fb->Q)}}};
        CHECK(hess.value(E2, rng) == w * w * d);
        EnhancedCurve E3{
            Ed.curve,
            LevelStructure{3, LevelStructure::FullBasis{
                                  fb->P, point_add(Ed.curve, scalar_mul(Ed.curve, 2, fb->P),
                                                   fb->Q)}}};
        CHECK(hess.value(E3, rng) == w * d);
        // pairing mismatch is rejected: (P, 2Q) pairs to omega^2
        EnhancedCurve E4{Ed.curve,
                         LevelStructure{3, LevelStructure::FullBasis{
                                               fb->P, scalar_mul(Ed.curve, 2, fb->Q)}}};
        CHECK_THROWS_AS(hess.value(E4, rng), PairingMismatch);
        // isomorphism invariance
        Fp2 u(1 + rng.below(p - 1), rng.below(p), p);
        CoordinateChange<Fp2> ch{u, Fp2(rng.below(p), rng.below(p), p),
                                 Fp2(rng.below(p), rng.below(p), p),
                                 Fp2(rng.below(p), rng.below(p), p)};
        EnhancedCurve E5{ch.apply(Ed.curve),
                         LevelStructure{3, LevelStructure::FullBasis{ch.apply(fb->P),
                                                                     ch.apply(fb->Q)}}};
        CHECK(hess.value(E5, rng) == d);
        ++done;
    }
    CHECK(done >= 8);
}

TEST_CASE("push_level_structure") {
    const std::uint64_t ell = 5;
    const std::uint64_t p = next_suitable_prime(ell, 4, 400); // 4 and 3 both divide p+1 here?
    Rng rng(3);
    // use a prime where both 3 and 4 torsion exist: 4*5*3=60 | p+1
    const std::uint64_t q = next_suitable_prime(ell, 3, 400);
    (void)p;

    // Gamma(3) push: pairing is preserved after the [ell^{-1}] correction
    const Invariant& hess = hessian_invariant_mode();
    CurveFp2 E{Fp2::zero(q), Fp2::from_int(6, q), Fp2::zero(q), Fp2::one(q), Fp2::zero(q)};
    auto [P3, Q3] = torsion_basis(E, 3, rng);
    Fp2 e0 = weil_pairing(E, P3, Q3, 3, rng);
    auto [T1, T2] = torsion_basis(E, ell, rng);
    IsogenyData<Fp2> iso = velu(E, T1, ell);
    LevelStructure S{3, LevelStructure::FullBasis{P3, Q3}};
    LevelStructure Sp = hess.push_level_structure(iso, S);
    auto* fb = std::get_if<LevelStructure::FullBasis>(&Sp.data);
    REQUIRE(fb != nullptr);
    CHECK(point_order(iso.codomain, fb->P, 3) == 3);
    CHECK(point_order(iso.codomain, fb->Q, 3) == 3);
    // e(P', Q') = e(P, Q)^{ell * ell^{-1}} = e(P, Q)
    CHECK(weil_pairing(iso.codomain, fb->P, fb->Q, 3, rng) == e0);
    // m = 1 mod N: P' = phi(P) directly (ell = 7 = 1 mod 3)
    {
        const std::uint64_t l7 = 7;
        const std::uint64_t q7 = next_suitable_prime(l7, 3, 400);
        CurveFp2 E7{Fp2::zero(q7), Fp2::from_int(6, q7), Fp2::zero(q7), Fp2::one(q7),
                    Fp2::zero(q7)};
        auto [A3, B3] = torsion_basis(E7, 3, rng);
        auto [U1, U2] = torsion_basis(E7, l7, rng);
        IsogenyData<Fp2> iso7 = velu(E7, U1, l7);
        LevelStructure S7{3, LevelStructure::FullBasis{A3, B3}};
        LevelStructure S7p = hess.push_level_structure(iso7, S7);
        auto* fb7 = std::get_if<LevelStructure::FullBasis>(&S7p.data);
        REQUIRE(fb7 != nullptr);
        CHECK(fb7->P == evaluate_isogeny(iso7, A3));
    }
    // Gamma0(4) push: order of phi(G) is 4 when gcd(m, 4) = 1
    const Invariant& mont = montgomery_invariant_mode();
    const std::uint64_t q4 = next_suitable_prime(ell, 4, 400);
    CurveFp2 E4{Fp2::zero(q4), Fp2::from_int(6, q4), Fp2::zero(q4), Fp2::one(q4), Fp2::zero(q4)};
    PointFp2 G = PointFp2::affine(Fp2::one(q4), fp2_sqrt(Fp2::from_int(8, q4)));
    auto [V1, V2] = torsion_basis(E4, ell, rng);
    IsogenyData<Fp2> iso4 = velu(E4, V1, ell);
    LevelStructure SG{4, LevelStructure::CyclicSubgroup{G}};
    LevelStructure SGp = mont.push_level_structure(iso4, SG);
    auto* cs = std::get_if<LevelStructure::CyclicSubgroup>(&SGp.data);
    REQUIRE(cs != nullptr);
    CHECK(point_order(iso4.codomain, cs->G, 4) == 4);
}

TEST_CASE("canonical j-mode curve") {
    const std::uint64_t p = 10007;
    Rng rng(4);
    const Invariant& j = j_invariant_mode();
    EnhancedCurve E = j.canonical_curve(Fp2::from_int(287496, p), rng);
    CHECK(E.curve.j_invariant() == Fp2::from_int(287496, p));
    EnhancedCurve E0 = j.canonical_curve(Fp2::zero(p), rng);
    CHECK(E0.curve.j_invariant() == Fp2::zero(p));
    EnhancedCurve E1728 = j.canonical_curve(Fp2::from_int(1728, p), rng);
    CHECK(E1728.curve.j_invariant() == Fp2::from_int(1728, p));
}
