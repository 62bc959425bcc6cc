#ifndef MODPOLY_EPSRING_HPP
#define MODPOLY_EPSRING_HPP

#include <vector>

#include "modpoly/fp2.hpp"
#include "modpoly/poly.hpp"

namespace modpoly {

/// Element of R = F_{p^2}[eps]/(eps^k). Precision k is fixed at construction;
/// binary operations between different precisions are programming errors and
/// asserted. Precision changes go through truncate()/extend() explicitly.
class EpsSeries {
public:
    EpsSeries() = default;
    explicit EpsSeries(std::vector<Fp2> coeffs) : c_(std::move(coeffs)) {
        assert(!c_.empty());
    }
    static EpsSeries constant(const Fp2& x, std::size_t k) {
        std::vector<Fp2> c(k, Fp2::zero(x.modulus()));
        c[0] = x;
        return EpsSeries(std::move(c));
    }
    static EpsSeries zero(std::size_t k, std::uint64_t p) {
        return EpsSeries(std::vector<Fp2>(k, Fp2::zero(p)));
    }
    static EpsSeries one(std::size_t k, std::uint64_t p) {
        return constant(Fp2::one(p), k);
    }
    static EpsSeries eps(std::size_t k, std::uint64_t p) {
        std::vector<Fp2> c(k, Fp2::zero(p));
        if (k > 1) c[1] = Fp2::one(p);
        return EpsSeries(std::move(c));
    }
    static EpsSeries from_integer(const Integer& z, std::size_t k, std::uint64_t p) {
        return constant(Fp2::from_integer(z, p), k);
    }

    std::size_t precision() const { return c_.size(); }
    std::uint64_t modulus() const { return c_[0].modulus(); }
    const std::vector<Fp2>& coeffs() const { return c_; }
    const Fp2& operator[](std::size_t i) const { return c_[i]; }
    Fp2 constant_term() const { return c_[0]; }
    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_unit() const { return !c_[0].is_zero(); }

    EpsSeries truncate(std::size_t k) const {
        assert(k >= 1 && k <= c_.size());
        return EpsSeries(std::vector<Fp2>(c_.begin(), c_.begin() + k));
    }
    EpsSeries extend(std::size_t k) const {
        assert(k >= c_.size());
        std::vector<Fp2> c = c_;
        c.resize(k, Fp2::zero(modulus()));
        return EpsSeries(std::move(c));
    }

    friend EpsSeries operator+(const EpsSeries& x, const EpsSeries& y) {
        assert(x.precision() == y.precision());
        std::vector<Fp2> r(x.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = x.c_[i] + y.c_[i];
        return EpsSeries(std::move(r));
    }
    friend EpsSeries operator-(const EpsSeries& x, const EpsSeries& y) {
        assert(x.precision() == y.precision());
        std::vector<Fp2> r(x.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = x.c_[i] - y.c_[i];
        return EpsSeries(std::move(r));
    }
    EpsSeries operator-() const {
        std::vector<Fp2> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = -c_[i];
        return EpsSeries(std::move(r));
    }
    friend EpsSeries operator*(const EpsSeries& x, const EpsSeries& y) {
        assert(x.precision() == y.precision());
        const std::size_t k = x.c_.size();
        std::vector<Fp2> r(k, Fp2::zero(x.modulus()));
        for (std::size_t i = 0; i < k; ++i) {
            if (x.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j + i < k; ++j)
                r[i + j] = r[i + j] + x.c_[i] * y.c_[j];
        }
        return EpsSeries(std::move(r));
    }
    friend bool operator==(const EpsSeries& x, const EpsSeries& y) {
        assert(x.precision() == y.precision());
        for (std::size_t i = 0; i < x.c_.size(); ++i)
            if (x.c_[i] != y.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const EpsSeries& x, const EpsSeries& y) { return !(x == y); }

    /// Unit inversion by Newton doubling of precision; throws NonUnit when the
    /// constant term vanishes (callers treat it as a discard-prime signal).
    EpsSeries inv() const;
    friend EpsSeries operator/(const EpsSeries& x, const EpsSeries& y) { return x * y.inv(); }

    /// Square root with prescribed seed: r^2 = *this, r = root0 (mod eps).
    EpsSeries sqrt_with_seed(const Fp2& root0) const;

private:
    std::vector<Fp2> c_;
};

inline EpsSeries operator*(std::int64_t n, const EpsSeries& x) {
    return EpsSeries::constant(Fp2::from_int(n, x.modulus()), x.precision()) * x;
}

/// Root of f in R lifted from a simple root a0 of f mod eps (Newton, precision
/// doubling 1, 2, 4, ..., k). Throws SingularRoot if f'(a0) = 0 mod eps.
EpsSeries newton_lift_root(const UnivarPoly<EpsSeries>& f, const Fp2& a0);

} // namespace modpoly

#endif
