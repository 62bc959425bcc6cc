#include "modpoly/poly.hpp"

namespace modpoly {

PolyFp2 interpolate(const std::vector<std::pair<Fp2, Fp2>>& points) {
    if (points.empty()) return PolyFp2();
    const std::uint64_t p = points[0].first.modulus();
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first) throw DuplicateNode();
    PolyFp2 acc;
    for (std::size_t i = 0; i < points.size(); ++i) {
        PolyFp2 num = PolyFp2::constant(Fp2::one(p));
        Fp2 den = Fp2::one(p);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            num = num * PolyFp2({-points[j].first, Fp2::one(p)});
            den = den * (points[i].first - points[j].first);
        }
        acc = acc + num.scaled(points[i].second / den);
    }
    return acc;
}

PolyFp2 poly_mod(const PolyFp2& f, const PolyFp2& m) {
    return PolyFp2::divrem(f, m).second;
}

PolyFp2 poly_gcd(PolyFp2 f, PolyFp2 g) {
    while (!g.is_zero()) {
        PolyFp2 r = poly_mod(f, g);
        f = g;
        g = r;
    }
    if (f.is_zero()) return f;
    return f.scaled(f.lc().inv()); // monic normalization
}

PolyFp2 poly_powmod(const PolyFp2& base, const Integer& e, const PolyFp2& m) {
    const std::uint64_t p = m.lc().modulus();
    PolyFp2 r = PolyFp2::constant(Fp2::one(p));
    PolyFp2 b = poly_mod(base, m);
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = poly_mod(r * b, m);
        b = poly_mod(b * b, m);
        k >>= 1;
    }
    return r;
}

namespace {

// product of all monic linear factors of f (f assumed squarefree)
PolyFp2 linear_part(const PolyFp2& f) {
    const std::uint64_t p = f.lc().modulus();
    Integer q2 = Integer(static_cast<unsigned long>(p)) * Integer(static_cast<unsigned long>(p));
    PolyFp2 x({Fp2::zero(p), Fp2::one(p)});
    PolyFp2 xq = poly_powmod(x, q2, f);
    return poly_gcd(xq - x, f);
}

void split_linear(const PolyFp2& f, Rng& rng, std::vector<Fp2>& out) {
    if (f.degree() <= 0) return;
    const std::uint64_t p = f.lc().modulus();
    if (f.degree() == 1) {
        out.push_back(-(f[0] / f[1]));
        return;
    }
    Integer q2 = Integer(static_cast<unsigned long>(p)) * Integer(static_cast<unsigned long>(p));
    Integer e = (q2 - 1) / 2;
    for (int attempt = 0; attempt < 200; ++attempt) {
        Fp2 delta(rng.below(p), rng.below(p), p);
        PolyFp2 shifted({delta, Fp2::one(p)});
        PolyFp2 t = poly_powmod(shifted, e, f) - PolyFp2::constant(Fp2::one(p));
        PolyFp2 h = poly_gcd(t, f);
        if (h.degree() > 0 && h.degree() < f.degree()) {
            split_linear(h, rng, out);
            split_linear(PolyFp2::divrem(f, h).first, rng, out);
            return;
        }
    }
    throw InternalError("equal-degree splitting failed");
}

} // namespace

std::vector<Fp2> poly_roots(const PolyFp2& f, Rng& rng) {
    std::vector<Fp2> out;
    if (f.degree() <= 0) return out;
    PolyFp2 sf = PolyFp2::divrem(f, poly_gcd(f, f.derivative())).first; // squarefree part
    PolyFp2 lin = linear_part(sf);
    split_linear(lin, rng, out);
    return out;
}

std::vector<std::pair<long, long>> distinct_degree_shape(const PolyFp2& f, Rng&) {
    std::vector<std::pair<long, long>> shape;
    if (f.degree() <= 0) return shape;
    const std::uint64_t p = f.lc().modulus();
    Integer q2 = Integer(static_cast<unsigned long>(p)) * Integer(static_cast<unsigned long>(p));
    PolyFp2 work = PolyFp2::divrem(f, poly_gcd(f, f.derivative())).first;
    work = work.scaled(work.lc().inv());
    PolyFp2 x({Fp2::zero(p), Fp2::one(p)});
    PolyFp2 xq = x;
    long d = 0;
    while (work.degree() > 0) {
        ++d;
        if (2 * d > work.degree()) {
            shape.emplace_back(work.degree(), work.degree());
            break;
        }
        xq = poly_powmod(xq, q2, work);
        PolyFp2 g = poly_gcd(xq - x, work);
        if (g.degree() > 0) {
            shape.emplace_back(d, g.degree());
            work = PolyFp2::divrem(work, g).first;
        }
    }
    return shape;
}

} // namespace modpoly
