#include "modpoly/fp2.hpp"

namespace modpoly {

Fp2 Fp2::pow(const Integer& e) const {
    assert(e >= 0);
    Fp2 r = one(modulus()), b = *this;
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

std::optional<Fp> fp_sqrt(Fp n) {
    const std::uint64_t p = n.modulus();
    assert(p % 4 == 3);
    if (n.is_zero()) return Fp(0, p);
    Fp r = n.pow((p + 1) / 4);
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<Fp2> fp2_sqrt_opt(const Fp2& x) {
    const std::uint64_t p = x.modulus();
    if (x.is_zero()) return Fp2::zero(p);
    Fp2 cand = Fp2::zero(p);
    if (x.in_prime_field()) {
        if (auto r = fp_sqrt(x.re())) {
            cand = Fp2(*r, Fp(0, p));
        } else {
            // -1 is a non-residue for p = 3 (mod 4), so -re is a residue
            auto r2 = fp_sqrt(-x.re());
            assert(r2);
            cand = Fp2(Fp(0, p), *r2); // (i*r)^2 = -r^2 = re
        }
    } else {
        // solve (c + d i)^2 = a + b i:  c^2 - d^2 = a, 2cd = b
        auto s = fp_sqrt(x.norm_fp());
        if (!s) return std::nullopt;
        Fp inv2 = Fp(2, p).inv();
        Fp c2 = (x.re() + *s) * inv2;
        auto c = fp_sqrt(c2);
        if (!c) {
            c2 = (x.re() - *s) * inv2;
            c = fp_sqrt(c2);
            if (!c) return std::nullopt;
        }
        if (c->is_zero()) return std::nullopt;
        Fp d = x.im() * (Fp(2, p) * *c).inv();
        cand = Fp2(*c, d);
        if (cand * cand != x) return std::nullopt;
    }
    Fp2 other = -cand;
    return other.lex_less(cand) ? other : cand;
}

Fp2 fp2_sqrt(const Fp2& x) {
    auto r = fp2_sqrt_opt(x);
    if (!r) throw NoSquareRoot();
    return *r;
}

Fp2 omega(std::uint64_t p) {
    // roots of X^2 + X + 1 are (-1 +- sqrt(-3)) / 2
    Fp2 s = fp2_sqrt(Fp2::from_int(-3, p));
    Fp2 inv2 = Fp2::from_int(2, p).inv();
    Fp2 r1 = (Fp2::from_int(-1, p) + s) * inv2;
    Fp2 r2 = (Fp2::from_int(-1, p) - s) * inv2;
    Fp2 w = r1.lex_less(r2) ? r1 : r2;
    assert((w * w + w + Fp2::one(p)).is_zero());
    return w;
}

} // namespace modpoly
