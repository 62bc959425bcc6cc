#include "doctest.h"

#include "modpoly/curves.hpp"
#include "modpoly/epsring.hpp"
#include "modpoly/fp2.hpp"
#include "modpoly/poly.hpp"
#include "modpoly/primes.hpp"
#include "modpoly/rng.hpp"

using namespace modpoly;

TEST_CASE("fp2 field axioms on random samples") {
    const std::uint64_t p = 10007;
    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        Fp2 a(rng.below(p), rng.below(p), p);
        Fp2 b(rng.below(p), rng.below(p), p);
        Fp2 c(rng.below(p), rng.below(p), p);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero()) CHECK(a * a.inv() == Fp2::one(p));
    }
}

TEST_CASE("fp2_sqrt squares back and is deterministic") {
    const std::uint64_t p = 23;
    CHECK(fp2_sqrt(Fp2::zero(p)) == Fp2::zero(p));
    Fp2 r4 = fp2_sqrt(Fp2::from_int(4, p));
    CHECK(r4 * r4 == Fp2::from_int(4, p));
    CHECK(r4 == Fp2::from_int(2, p)); // lexicographically smaller of 2, 21
    // 5 is a non-residue mod 23; its root lives on the imaginary axis
    Fp2 r5 = fp2_sqrt(Fp2::from_int(5, p));
    CHECK(r5 * r5 == Fp2::from_int(5, p));
    CHECK(r5 == Fp2(0, 8, p)); // brute-forced over all 529 elements in the oracle run

    Rng rng(7);
    for (std::uint64_t q : {23ull, 10007ull, 65539ull}) {
        for (int i = 0; i < 1000; ++i) {
            Fp2 x(rng.below(q), rng.below(q), q);
            auto r = fp2_sqrt_opt(x);
            if (r) CHECK(*r * *r == x);
            if (x.in_prime_field()) CHECK(r.has_value());
            Fp2 sq = x * x;
            auto rr = fp2_sqrt_opt(sq);
            REQUIRE(rr.has_value());
            CHECK(*rr * *rr == sq);
        }
    }
}

TEST_CASE("dedekind psi") {
    CHECK(dedekind_psi(1) == 1);
    CHECK(dedekind_psi(3) == 4);
    CHECK(dedekind_psi(12) == 24); // 12 * (1+1/2) * (1+1/3)
    CHECK(dedekind_psi(2) == 3);
    CHECK(dedekind_psi(5) == 6);
}

TEST_CASE("crt_symmetric") {
    CHECK(crt_symmetric({{2, 5}}) == 2);
    CHECK(crt_symmetric({{4, 5}}) == -1);
    CHECK(crt_symmetric({{2, 5}, {3, 7}}) == 17); // enumerated mod 35 in the oracle run
    CHECK_THROWS_AS(crt_symmetric({{2, 5}, {1, 5}}), DuplicateModulus);

    // inversion property: random |x| < prod/2 reconstructs
    Rng rng(3);
    std::vector<Integer> primes{10007, 65539, 999983};
    Integer M = 1;
    for (auto& q : primes) M *= q;
    for (int i = 0; i < 200; ++i) {
        Integer x = Integer(rng.below(1000000)) * Integer(rng.below(1000000));
        if (rng.below(2)) x = -x;
        std::vector<std::pair<Integer, Integer>> res;
        for (auto& q : primes) {
            Integer r = x % q;
            if (r < 0) r += q;
            res.push_back({r, q});
        }
        CHECK(crt_symmetric(res) == x);
    }
}

TEST_CASE("next_suitable_prime examples") {
    CHECK(next_suitable_prime(3, 4, 11) == 23);
    CHECK(next_suitable_prime(5, 4, 11) == 19);
    CHECK(next_suitable_prime(2, 3, 11) == 23);
    std::uint64_t p = next_suitable_prime(3, 4, 11, 65536);
    CHECK(p > 65536);
    CHECK(p % 4 == 3);
    CHECK((p + 1) % 12 == 0);
    CHECK(is_prime_u64(p));
}

TEST_CASE("resultant") {
    // res(X-1, X-2) = 1-2 = -1 up to the standard sign convention
    PolyInt f({Integer(-1), Integer(1)});
    PolyInt g({Integer(-2), Integer(1)});
    CHECK(resultant(f, g) == Integer(-1));
    // common root
    PolyInt h({Integer(-1), Integer(0), Integer(1)});
    CHECK(resultant(h, f) == Integer(0));
    // res(X^2+1, X^2-2) = 9, by direct Sylvester determinant
    PolyInt a({Integer(1), Integer(0), Integer(1)});
    PolyInt b({Integer(-2), Integer(0), Integer(1)});
    CHECK(resultant(a, b) == Integer(9));
    CHECK_THROWS_AS(resultant(PolyInt(), a), ZeroPolynomial);
}

TEST_CASE("resultant equals product of root differences over small field") {
    const std::uint64_t p = 23;
    Rng rng(11);
    // f, g products of known linear factors; resultant = lc(f)^deg g * lc(g)^deg f *
    // prod (alpha_i - beta_j) ... with monic inputs just the double product
    std::vector<Fp2> roots_f{Fp2::from_int(2, p), Fp2(1, 3, p), Fp2(5, 7, p)};
    std::vector<Fp2> roots_g{Fp2::from_int(9, p), Fp2(4, 22, p)};
    auto from_roots = [&](const std::vector<Fp2>& rs) {
        PolyFp2 f = PolyFp2::constant(Fp2::one(p));
        for (auto& r : rs) f = f * PolyFp2({-r, Fp2::one(p)});
        return f;
    };
    Fp2 expect = Fp2::one(p);
    for (auto& a : roots_f)
        for (auto& b : roots_g) expect = expect * (a - b);
    CHECK(resultant(from_roots(roots_f), from_roots(roots_g)) == expect);
    (void)rng;
}

TEST_CASE("interpolate") {
    const std::uint64_t p = 10007;
    PolyFp2 c = interpolate({{Fp2::zero(p), Fp2::from_int(5, p)}});
    CHECK(c.degree() == 0);
    CHECK(c[0] == Fp2::from_int(5, p));

    const std::uint64_t q = 23;
    PolyFp2 sq = interpolate({{Fp2::zero(q), Fp2::zero(q)},
                              {Fp2::one(q), Fp2::one(q)},
                              {Fp2::from_int(2, q), Fp2::from_int(4, q)}});
    CHECK(sq == PolyFp2({Fp2::zero(q), Fp2::zero(q), Fp2::one(q)}));

    CHECK_THROWS_AS(interpolate({{Fp2::zero(q), Fp2::zero(q)}, {Fp2::zero(q), Fp2::one(q)}}),
                    DuplicateNode);

    // round trip: random degree-6 polynomial from 7 nodes
    Rng rng(5);
    std::vector<Fp2> coeffs;
    for (int i = 0; i < 7; ++i) coeffs.push_back(Fp2(rng.below(p), rng.below(p), p));
    PolyFp2 f(coeffs);
    std::vector<std::pair<Fp2, Fp2>> pts;
    for (int i = 0; i < 7; ++i) {
        Fp2 x = Fp2::from_int(i, p);
        pts.push_back({x, f.eval(x)});
    }
    CHECK(interpolate(pts) == f);
}

TEST_CASE("omega is a deterministic primitive cube root") {
    for (std::uint64_t p : {23ull, 10007ull, 65539ull}) {
        Fp2 w = omega(p);
        CHECK((w * w + w + Fp2::one(p)).is_zero());
        CHECK(w == omega(p));
    }
}
