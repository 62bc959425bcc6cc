#include "doctest.h"

#include "modpoly/invariants.hpp"
#include "modpoly/isogeny.hpp"
#include "modpoly/primes.hpp"

using namespace modpoly;

namespace {

CurveFp2 base_curve(std::uint64_t p) {
    return CurveFp2{Fp2::zero(p), Fp2::from_int(6, p), Fp2::zero(p), Fp2::one(p), Fp2::zero(p)};
}

// classical modular polynomial Phi_3 (published table)
const std::vector<std::tuple<unsigned, unsigned, const char*>>& classical_phi3() {
    static const std::vector<std::tuple<unsigned, unsigned, const char*>> t = {
        {4, 0, "1"}, {0, 4, "1"}, {3, 3, "-1"},
        {3, 2, "2232"}, {2, 3, "2232"},
        {3, 1, "-1069956"}, {1, 3, "-1069956"},
        {3, 0, "36864000"}, {0, 3, "36864000"},
        {2, 2, "2587918086"},
        {2, 1, "8900222976000"}, {1, 2, "8900222976000"},
        {2, 0, "452984832000000"}, {0, 2, "452984832000000"},
        {1, 1, "-770845966336000000"},
        {1, 0, "1855425871872000000000"}, {0, 1, "1855425871872000000000"}};
    return t;
}

Fp2 eval_phi3(const Fp2& x, const Fp2& y) {
    const std::uint64_t p = x.modulus();
    Fp2 acc = Fp2::zero(p);
    for (const auto& [i, j, s] : classical_phi3())
        acc = acc + Fp2::from_integer(int_from_string(s), p) * x.pow(std::uint64_t(i)) *
                        y.pow(std::uint64_t(j));
    return acc;
}

} // namespace

TEST_CASE("velu: identity isogeny, kernel counts, codomain j-values") {
    const std::uint64_t p = 23;
    CurveFp2 E = base_curve(p);
    Rng rng(1);
    IsogenyData<Fp2> id = velu(E, PointFp2::infinity(), 1);
    CHECK(id.codomain == E);

    const std::uint64_t ell = 3;
    auto [T1, T2] = torsion_basis(E, ell, rng);
    auto kernels = enumerate_kernels(E, T1, T2, ell);
    CHECK(kernels.size() == dedekind_psi(ell)); // psi(3) = 4
    // pairwise distinct subgroups via nondegenerate pairing
    for (std::size_t i = 0; i < kernels.size(); ++i)
        for (std::size_t j = i + 1; j < kernels.size(); ++j)
            CHECK(weil_pairing(E, kernels[i], kernels[j], ell, rng) != Fp2::one(p));

    // every codomain j is a root of the classical Phi_3(j(E), Y), and the
    // multiset identity Phi_3(j(E), Y) = prod (Y - j_k) holds mod p
    PolyFp2 prod = PolyFp2::constant(Fp2::one(p));
    for (const auto& K : kernels) {
        IsogenyData<Fp2> iso = velu(E, K, ell);
        Fp2 jk = iso.codomain.j_invariant();
        CHECK(eval_phi3(E.j_invariant(), jk).is_zero());
        prod = prod * PolyFp2({-jk, Fp2::one(p)});
        // kernel maps to the identity
        CHECK(evaluate_isogeny(iso, K).is_infinity());
        CHECK(evaluate_isogeny(iso, PointFp2::infinity()).is_infinity());
    }
    std::vector<Fp2> phi_col(5, Fp2::zero(p));
    for (const auto& [i, j, s] : classical_phi3()) {
        phi_col[j] = phi_col[j] +
                     Fp2::from_integer(int_from_string(s), p) * E.j_invariant().pow(std::uint64_t(i));
    }
    CHECK(prod == PolyFp2(phi_col));
}

TEST_CASE("velu: psi(5) = 6 kernels, order preservation, pairing functoriality") {
    const std::uint64_t p = next_suitable_prime(5, 4, 300);
    CurveFp2 E = base_curve(p);
    Rng rng(2);
    const std::uint64_t ell = 5;
    auto [T1, T2] = torsion_basis(E, ell, rng);
    auto kernels = enumerate_kernels(E, T1, T2, ell);
    CHECK(kernels.size() == 6);

    auto [N1, N2] = torsion_basis(E, 4, rng);
    Fp2 eN = weil_pairing(E, N1, N2, 4, rng);
    for (const auto& K : kernels) {
        IsogenyData<Fp2> iso = velu(E, K, ell);
        // e_N(phi P, phi Q) = e_N(P, Q)^ell
        Fp2 lhs = weil_pairing(iso.codomain, evaluate_isogeny(iso, N1),
                               evaluate_isogeny(iso, N2), 4, rng);
        CHECK(lhs == eN.pow(ell));
        // order preserved for gcd(order, ell) = 1
        PointFp2 img = evaluate_isogeny(iso, N1);
        CHECK(point_order(iso.codomain, img, 4) == 4);
    }
    CHECK_THROWS_AS(velu(E, T1, std::uint64_t(7)), BadKernel);
}

TEST_CASE("velu dual composition acts as [ell] on j-invariants") {
    // phi: E -> E', dual kernel = phi(E[ell]); composing returns to E
    const std::uint64_t p = next_suitable_prime(3, 4, 300);
    CurveFp2 E = base_curve(p);
    Rng rng(3);
    const std::uint64_t ell = 3;
    auto [T1, T2] = torsion_basis(E, ell, rng);
    IsogenyData<Fp2> iso = velu(E, T1, ell);
    // image of T2 generates the dual kernel
    PointFp2 D = evaluate_isogeny(iso, T2);
    CHECK(point_order(iso.codomain, D, ell) == ell);
    IsogenyData<Fp2> dual = velu(iso.codomain, D, ell);
    CHECK(dual.codomain.j_invariant() == E.j_invariant());
    // x-coordinates: dual(phi(P)) = [ell] P up to sign
    PointFp2 P = random_point(E, rng);
    PointFp2 through = evaluate_isogeny(dual, evaluate_isogeny(iso, P));
    PointFp2 direct = scalar_mul(E, ell, P);
    // the composite differs from [ell] by an isomorphism fixing j; compare x
    // after mapping the curves onto each other
    CoordinateChange<Fp2> match = curve_isomorphism(dual.codomain, E, rng);
    PointFp2 back = match.apply(through);
    CHECK((back.x == direct.x));
}

TEST_CASE("lift_kernel_generator and velu over R reduce correctly") {
    const std::uint64_t ell = 3;
    const std::uint64_t p = next_suitable_prime(ell, 4, 300);
    const std::size_t k = ell + 2;
    CurveFp2 E = base_curve(p);
    Rng rng(4);

    // deformation with A~ = -11 + eps (any deformation works for this check)
    WeierstrassCurve<EpsSeries> Etil{
        EpsSeries::zero(k, p), EpsSeries::zero(k, p), EpsSeries::zero(k, p),
        EpsSeries::from_integer(-11, k, p) + EpsSeries::eps(k, p),
        EpsSeries::from_integer(14, k, p)};
    // kernel on the special fiber y^2 = x^3 - 11x + 14 (shift x by -2)
    CoordinateChange<Fp2> shift{Fp2::one(p), Fp2::from_int(-2, p), Fp2::zero(p), Fp2::zero(p)};
    CurveFp2 Es = shift.apply(E);
    auto [T1, T2] = torsion_basis(E, ell, rng);
    PointFp2 Ks = shift.apply(T1);
    REQUIRE(on_curve(Es, Ks));

    CurvePoint<EpsSeries> Kt = lift_kernel_generator(Etil, Ks, ell);
    // reduction mod eps is K
    CHECK(Kt.x.constant_term() == Ks.x);
    CHECK(Kt.y.constant_term() == Ks.y);
    // [ell] K~ = identity in E~(R)
    CHECK(scalar_mul(Etil, ell, Kt).is_infinity());
    // precision-1 lift is the embedded point
    WeierstrassCurve<EpsSeries> E1{
        EpsSeries::zero(1, p), EpsSeries::zero(1, p), EpsSeries::zero(1, p),
        EpsSeries::from_integer(-11, 1, p), EpsSeries::from_integer(14, 1, p)};
    CurvePoint<EpsSeries> K1 = lift_kernel_generator(E1, Ks, ell);
    CHECK(K1.x == EpsSeries::constant(Ks.x, 1));

    // velu over R commutes with reduction mod eps
    IsogenyData<EpsSeries> isoR = velu(Etil, Kt, ell);
    IsogenyData<Fp2> iso = velu(Es, Ks, ell);
    CHECK(isoR.codomain.a4.constant_term() == iso.codomain.a4);
    CHECK(isoR.codomain.a6.constant_term() == iso.codomain.a6);
}
