#include "doctest.h"

#include "modpoly/epsring.hpp"

using namespace modpoly;

namespace {
EpsSeries from_ints(std::initializer_list<std::int64_t> v, std::uint64_t p) {
    std::vector<Fp2> c;
    for (auto x : v) c.push_back(Fp2::from_int(x, p));
    return EpsSeries(std::move(c));
}
} // namespace

TEST_CASE("eps ring axioms and eps^k = 0") {
    const std::uint64_t p = 10007;
    Rng rng(2);
    const std::size_t k = 6;
    auto rand_eps = [&] {
        std::vector<Fp2> c;
        for (std::size_t i = 0; i < k; ++i) c.emplace_back(rng.below(p), rng.below(p), p);
        return EpsSeries(std::move(c));
    };
    for (int t = 0; t < 200; ++t) {
        EpsSeries a = rand_eps(), b = rand_eps(), c = rand_eps();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
    EpsSeries e = EpsSeries::eps(k, p);
    EpsSeries acc = EpsSeries::one(k, p);
    for (std::size_t i = 0; i < k; ++i) acc = acc * e;
    CHECK(acc.is_zero());
}

TEST_CASE("eps_invert") {
    const std::uint64_t p = 10007;
    // (1 + eps)^-1 = 1 - eps + eps^2 at k = 3
    EpsSeries x = from_ints({1, 1, 0}, p);
    CHECK(x.inv() == from_ints({1, -1, 1}, p));
    // constants invert in the field
    EpsSeries c = from_ints({7, 0, 0}, p);
    CHECK(c.inv() * c == EpsSeries::one(3, p));
    // p = 23, k = 2: (2 + 3 eps)^-1 = 12 + 5 eps (solved coefficient equations)
    EpsSeries y = from_ints({2, 3}, 23);
    CHECK(y.inv() == from_ints({12, 5}, 23));
    CHECK(y * y.inv() == EpsSeries::one(2, 23));
    CHECK_THROWS_AS(from_ints({0, 1, 2}, p).inv(), NonUnit);

    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        std::vector<Fp2> cc;
        cc.emplace_back(1 + rng.below(p - 1), rng.below(p), p);
        for (int i = 1; i < 9; ++i) cc.emplace_back(rng.below(p), rng.below(p), p);
        EpsSeries a(cc);
        CHECK(a * a.inv() == EpsSeries::one(9, p));
    }
}

TEST_CASE("eps_sqrt") {
    const std::uint64_t p = 10007;
    // sqrt(1 + eps) = 1 + eps/2 - eps^2/8 at k = 3
    EpsSeries x = from_ints({1, 1, 0}, p);
    EpsSeries r = x.sqrt_with_seed(Fp2::one(p));
    Fp2 half = Fp2::from_int(2, p).inv();
    Fp2 eighth = Fp2::from_int(8, p).inv();
    CHECK(r == EpsSeries({Fp2::one(p), half, -eighth}));
    CHECK(r * r == x);
    // sqrt(c^2, c) = c
    EpsSeries c2 = from_ints({49, 0, 0, 0}, p);
    CHECK(c2.sqrt_with_seed(Fp2::from_int(7, p)) == from_ints({7, 0, 0, 0}, p));
    // sign symmetry
    EpsSeries rm = x.sqrt_with_seed(-Fp2::one(p));
    CHECK(rm == -r);
    CHECK_THROWS_AS(x.sqrt_with_seed(Fp2::from_int(2, p)), BadSeed);
    CHECK_THROWS_AS(x.sqrt_with_seed(Fp2::zero(p)), NonUnit);
}

TEST_CASE("newton_lift_root") {
    const std::uint64_t p = 10007;
    const std::size_t k = 5;
    // f = X - eps, root eps
    UnivarPoly<EpsSeries> f({-EpsSeries::eps(k, p), EpsSeries::one(k, p)});
    CHECK(newton_lift_root(f, Fp2::zero(p)) == EpsSeries::eps(k, p));
    // f = X^2 - (1 + eps): agrees with eps_sqrt path
    EpsSeries onep = EpsSeries::one(k, p) + EpsSeries::eps(k, p);
    UnivarPoly<EpsSeries> g({-onep, EpsSeries::zero(k, p), EpsSeries::one(k, p)});
    CHECK(newton_lift_root(g, Fp2::one(p)) == onep.sqrt_with_seed(Fp2::one(p)));
    // singular root: f = X^2 with a0 = 0
    UnivarPoly<EpsSeries> h({EpsSeries::zero(k, p), EpsSeries::zero(k, p), EpsSeries::one(k, p)});
    CHECK_THROWS_AS(newton_lift_root(h, Fp2::zero(p)), SingularRoot);

    // contract on random cubics with a simple root
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        Fp2 a0(rng.below(p), rng.below(p), p);
        std::vector<EpsSeries> coeffs;
        for (int i = 0; i < 4; ++i) {
            std::vector<Fp2> cc;
            for (std::size_t u = 0; u < k; ++u) cc.emplace_back(rng.below(p), rng.below(p), p);
            coeffs.push_back(EpsSeries(cc));
        }
        coeffs[3] = EpsSeries::one(k, p);
        UnivarPoly<EpsSeries> poly(coeffs);
        // force f(a0) = 0 mod eps by adjusting the constant term's constant part
        EpsSeries at = EpsSeries::constant(a0, k);
        EpsSeries val = poly.eval(at);
        std::vector<Fp2> c0v = coeffs[0].coeffs();
        c0v[0] = c0v[0] - val.constant_term();
        coeffs[0] = EpsSeries(c0v);
        poly = UnivarPoly<EpsSeries>(coeffs);
        // derivative at a0 must be a unit for the lift; skip degenerate draws
        try {
            EpsSeries root = newton_lift_root(poly, a0);
            CHECK(poly.eval(root).is_zero());
            CHECK(root.constant_term() == a0);
        } catch (const SingularRoot&) {
        }
    }
}
