#ifndef MODPOLY_POLY_HPP
#define MODPOLY_POLY_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "modpoly/errors.hpp"
#include "modpoly/fp2.hpp"
#include "modpoly/integer.hpp"
#include "modpoly/rng.hpp"

namespace modpoly {

// Ring protocol shims. Class types provide is_zero(); GMP integers compare to 0.
template <class R> inline bool ring_is_zero(const R& x) { return x.is_zero(); }
inline bool ring_is_zero(const Integer& x) { return x == 0; }

/// Exact division in the coefficient ring; throws NonExactDivision when the
/// quotient does not exist in the ring.
template <class R> inline R ring_exact_div(const R& a, const R& b) { return a / b; }
inline Integer ring_exact_div(const Integer& a, const Integer& b) { return exact_div(a, b); }

/// Dense univariate polynomial over R, lowest degree first, canonical form
/// (no trailing zero coefficient). The zero polynomial has empty storage and
/// degree() == -1.
template <class R>
class UnivarPoly {
public:
    UnivarPoly() = default;
    explicit UnivarPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UnivarPoly zero() { return UnivarPoly(); }
    static UnivarPoly constant(const R& v) { return UnivarPoly(std::vector<R>{v}); }

    const std::vector<R>& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const R& lc() const { return c_.back(); }
    const R& operator[](std::size_t i) const { return c_[i]; }
    R coeff_or(std::size_t i, const R& zero) const { return i < c_.size() ? c_[i] : zero; }

    friend UnivarPoly operator+(const UnivarPoly& f, const UnivarPoly& g) {
        std::vector<R> r(std::max(f.c_.size(), g.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < f.c_.size() && i < g.c_.size()) r[i] = f.c_[i] + g.c_[i];
            else if (i < f.c_.size()) r[i] = f.c_[i];
            else r[i] = g.c_[i];
        }
        return UnivarPoly(std::move(r));
    }
    friend UnivarPoly operator-(const UnivarPoly& f, const UnivarPoly& g) {
        std::vector<R> r(std::max(f.c_.size(), g.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < f.c_.size() && i < g.c_.size()) r[i] = f.c_[i] - g.c_[i];
            else if (i < f.c_.size()) r[i] = f.c_[i];
            else r[i] = -g.c_[i];
        }
        return UnivarPoly(std::move(r));
    }
    UnivarPoly operator-() const {
        std::vector<R> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(-x);
        return UnivarPoly(std::move(r));
    }
    friend UnivarPoly operator*(const UnivarPoly& f, const UnivarPoly& g) {
        if (f.is_zero() || g.is_zero()) return UnivarPoly();
        std::vector<R> r(f.c_.size() + g.c_.size() - 1, zero_like(f.c_[0]));
        for (std::size_t i = 0; i < f.c_.size(); ++i) {
            if (ring_is_zero(f.c_[i])) continue;
            for (std::size_t j = 0; j < g.c_.size(); ++j) {
                r[i + j] = r[i + j] + f.c_[i] * g.c_[j];
            }
        }
        return UnivarPoly(std::move(r));
    }
    UnivarPoly scaled(const R& s) const {
        std::vector<R> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(x * s);
        return UnivarPoly(std::move(r));
    }
    friend bool operator==(const UnivarPoly& f, const UnivarPoly& g) {
        if (f.c_.size() != g.c_.size()) return false;
        for (std::size_t i = 0; i < f.c_.size(); ++i)
            if (!(f.c_[i] == g.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UnivarPoly& f, const UnivarPoly& g) { return !(f == g); }

    template <class S, class Embed>
    S eval_map(const S& at, Embed embed) const {
        S acc = at - at; // zero of S with the right context
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + embed(*it);
        return acc;
    }
    R eval(const R& at) const {
        return eval_map(at, [](const R& c) { return c; });
    }

    UnivarPoly derivative() const {
        if (c_.size() <= 1) return UnivarPoly();
        std::vector<R> r;
        r.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            R m = c_[i];
            for (std::size_t k = 1; k < i; ++k) m = m + c_[i];
            r.push_back(m);
        }
        return UnivarPoly(std::move(r));
    }

    /// Quotient/remainder; requires invertible leading coefficient of g.
    static std::pair<UnivarPoly, UnivarPoly> divrem(const UnivarPoly& f, const UnivarPoly& g) {
        if (g.is_zero()) throw ZeroPolynomial();
        if (f.degree() < g.degree()) return {UnivarPoly(), f};
        R lginv = g.lc().inv();
        std::vector<R> rem = f.c_;
        std::vector<R> q(f.c_.size() - g.c_.size() + 1, zero_like(f.c_[0]));
        for (long i = static_cast<long>(rem.size()) - static_cast<long>(g.c_.size()); i >= 0; --i) {
            R t = rem[i + g.c_.size() - 1] * lginv;
            q[i] = t;
            if (ring_is_zero(t)) continue;
            for (std::size_t j = 0; j < g.c_.size(); ++j)
                rem[i + j] = rem[i + j] - t * g.c_[j];
        }
        return {UnivarPoly(std::move(q)), UnivarPoly(std::move(rem))};
    }

    /// Exact division in R[x] via ring_exact_div on leading coefficients;
    /// throws NonExactDivision if f is not a multiple of g.
    static UnivarPoly exact_divide(const UnivarPoly& f, const UnivarPoly& g) {
        if (g.is_zero()) throw NonExactDivision();
        if (f.is_zero()) return UnivarPoly();
        if (f.degree() < g.degree()) throw NonExactDivision();
        std::vector<R> rem = f.c_;
        std::vector<R> q(f.c_.size() - g.c_.size() + 1, zero_like(f.c_[0]));
        for (long i = static_cast<long>(rem.size()) - static_cast<long>(g.c_.size()); i >= 0; --i) {
            const R& top = rem[i + g.c_.size() - 1];
            if (ring_is_zero(top)) continue;
            R t = ring_exact_div(top, g.lc());
            q[i] = t;
            for (std::size_t j = 0; j < g.c_.size(); ++j)
                rem[i + j] = rem[i + j] - t * g.c_[j];
        }
        for (const auto& x : rem)
            if (!ring_is_zero(x)) throw NonExactDivision();
        return UnivarPoly(std::move(q));
    }

    template <class T> static R zero_like(const T& exemplar) { return exemplar - exemplar; }

private:
    void trim() {
        while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

using PolyFp2 = UnivarPoly<Fp2>;
using PolyInt = UnivarPoly<Integer>;

inline bool ring_is_zero(const PolyInt& x) { return x.is_zero(); }
inline PolyInt ring_exact_div(const PolyInt& a, const PolyInt& b) {
    return PolyInt::exact_divide(a, b);
}

/// Lagrange interpolation over F_{p^2}; the unique polynomial of degree
/// < #points through all (x, y) pairs.
PolyFp2 interpolate(const std::vector<std::pair<Fp2, Fp2>>& points);

PolyFp2 poly_gcd(PolyFp2 f, PolyFp2 g);
PolyFp2 poly_mod(const PolyFp2& f, const PolyFp2& m);
PolyFp2 poly_powmod(const PolyFp2& base, const Integer& e, const PolyFp2& m);

/// All roots of f in F_{p^2} (without multiplicity), deterministic given rng.
std::vector<Fp2> poly_roots(const PolyFp2& f, Rng& rng);

/// Distinct-degree factorization shape of the squarefree part of f over
/// F_{p^2}: returns pairs (d, total degree of factors of degree d).
std::vector<std::pair<long, long>> distinct_degree_shape(const PolyFp2& f, Rng& rng);

template <class R> R one_like(const R& exemplar);
inline Integer one_like(const Integer&) { return Integer(1); }
inline Fp2 one_like(const Fp2& x) { return Fp2::one(x.modulus()); }

/// Resultant via Sylvester-matrix determinant (fraction-free Bareiss over any
/// integral domain with exact division).
template <class R>
R resultant(const UnivarPoly<R>& f, const UnivarPoly<R>& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial();
    const long m = f.degree(), n = g.degree();
    const R zero = UnivarPoly<R>::zero_like(f.lc());
    if (m == 0) {
        R acc = one_like(f.lc());
        for (long i = 0; i < n; ++i) acc = acc * f.lc();
        return acc;
    }
    if (n == 0) {
        R acc = one_like(g.lc());
        for (long i = 0; i < m; ++i) acc = acc * g.lc();
        return acc;
    }
    const long N = m + n;
    std::vector<std::vector<R>> a(N, std::vector<R>(N, zero));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j) a[i][i + j] = f.coeffs()[m - j];
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j) a[n + i][i + j] = g.coeffs()[n - j];
    // Bareiss fraction-free elimination
    bool negate = false;
    R prev = one_like(f.lc());
    for (long k = 0; k < N - 1; ++k) {
        if (ring_is_zero(a[k][k])) {
            long piv = -1;
            for (long r = k + 1; r < N; ++r)
                if (!ring_is_zero(a[r][k])) { piv = r; break; }
            if (piv < 0) return zero;
            std::swap(a[k], a[piv]);
            negate = !negate;
        }
        for (long i = k + 1; i < N; ++i) {
            for (long j = k + 1; j < N; ++j) {
                R num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = ring_exact_div(num, prev);
            }
            a[i][k] = zero;
        }
        prev = a[k][k];
    }
    R det = a[N - 1][N - 1];
    return negate ? -det : det;
}

} // namespace modpoly

#endif
