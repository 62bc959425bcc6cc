#include "modpoly/bivar.hpp"

#include <algorithm>

namespace modpoly {

unsigned BivarIntPoly::degree_x() const {
    unsigned d = 0;
    for (const auto& [k, c] : coeffs_) d = std::max(d, k.first);
    return d;
}

unsigned BivarIntPoly::degree_y() const {
    unsigned d = 0;
    for (const auto& [k, c] : coeffs_) d = std::max(d, k.second);
    return d;
}

BivarIntPoly operator+(const BivarIntPoly& a, const BivarIntPoly& b) {
    BivarIntPoly r = a;
    for (const auto& [k, c] : b.coeffs_) r.set(k.first, k.second, r.get(k.first, k.second) + c);
    return r;
}

BivarIntPoly operator-(const BivarIntPoly& a, const BivarIntPoly& b) {
    BivarIntPoly r = a;
    for (const auto& [k, c] : b.coeffs_) r.set(k.first, k.second, r.get(k.first, k.second) - c);
    return r;
}

BivarIntPoly operator*(const BivarIntPoly& a, const BivarIntPoly& b) {
    BivarIntPoly r;
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_) {
            unsigned i = ka.first + kb.first, j = ka.second + kb.second;
            r.set(i, j, r.get(i, j) + ca * cb);
        }
    return r;
}

BivarIntPoly BivarIntPoly::transpose() const {
    BivarIntPoly r;
    for (const auto& [k, c] : coeffs_) r.set(k.second, k.first, c);
    return r;
}

BivarIntPoly BivarIntPoly::pow(unsigned e) const {
    BivarIntPoly r;
    r.set(0, 0, 1);
    BivarIntPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

double BivarIntPoly::log_height() const {
    double h = 0.0;
    for (const auto& [k, c] : coeffs_) h = std::max(h, log_abs(c));
    return h;
}

std::vector<Integer> BivarIntPoly::eval_x_int(const Integer& x) const {
    std::vector<Integer> out(degree_y() + 1, Integer(0));
    for (const auto& [k, c] : coeffs_) {
        Integer xp;
        mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), k.first);
        out[k.second] += c * xp;
    }
    return out;
}

std::vector<ZOmega> BivarIntPoly::eval_x_zomega(const ZOmega& x) const {
    std::vector<ZOmega> out(degree_y() + 1);
    for (const auto& [k, c] : coeffs_) {
        ZOmega xp = ZOmega::from_int(1);
        for (unsigned t = 0; t < k.first; ++t) xp = xp * x;
        out[k.second] = out[k.second] + ZOmega::from_int(c) * xp;
    }
    return out;
}

Fp BivarIntPoly::eval_mod(const Integer& x, const Integer& y, std::uint64_t p) const {
    Fp acc(0, p);
    Fp xm(mod_u64(x, p), p), ym(mod_u64(y, p), p);
    for (const auto& [k, c] : coeffs_) {
        Fp term(mod_u64(c, p), p);
        for (unsigned t = 0; t < k.first; ++t) term = term * xm;
        for (unsigned t = 0; t < k.second; ++t) term = term * ym;
        acc = acc + term;
    }
    return acc;
}

PolyFp2 BivarIntPoly::eval_x_fp2(const Fp2& x) const {
    const std::uint64_t p = x.modulus();
    std::vector<Fp2> out(degree_y() + 1, Fp2::zero(p));
    for (const auto& [k, c] : coeffs_) {
        Fp2 term = Fp2::from_integer(c, p);
        for (unsigned t = 0; t < k.first; ++t) term = term * x;
        out[k.second] = out[k.second] + term;
    }
    return PolyFp2(std::move(out));
}

PolyInt BivarIntPoly::eval_x_as_int_poly_in_y(const Integer& x) const {
    return PolyInt(eval_x_int(x));
}

} // namespace modpoly
