#ifndef MODPOLY_FP2_HPP
#define MODPOLY_FP2_HPP

#include <optional>
#include <ostream>

#include "modpoly/fp.hpp"
#include "modpoly/integer.hpp"

namespace modpoly {

/// Element a + b*i of F_{p^2} = F_p[i]/(i^2+1). Requires p = 3 (mod 4).
class Fp2 {
public:
    Fp2() = default;
    Fp2(Fp a, Fp b) : a_(a), b_(b) {}
    Fp2(std::uint64_t a, std::uint64_t b, std::uint64_t p) : a_(a, p), b_(b, p) {}

    static Fp2 from_int(std::int64_t v, std::uint64_t p) {
        return Fp2(Fp::from_int(v, p), Fp(0, p));
    }
    static Fp2 from_integer(const Integer& z, std::uint64_t p) {
        return Fp2(Fp(mod_u64(z, p), p), Fp(0, p));
    }
    static Fp2 zero(std::uint64_t p) { return Fp2(Fp(0, p), Fp(0, p)); }
    static Fp2 one(std::uint64_t p) { return Fp2(Fp(1, p), Fp(0, p)); }

    Fp re() const { return a_; }
    Fp im() const { return b_; }
    std::uint64_t modulus() const { return a_.modulus(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool in_prime_field() const { return b_.is_zero(); }
    bool is_unit() const { return !is_zero(); }

    friend Fp2 operator+(const Fp2& x, const Fp2& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
    friend Fp2 operator-(const Fp2& x, const Fp2& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
    Fp2 operator-() const { return {-a_, -b_}; }
    friend Fp2 operator*(const Fp2& x, const Fp2& y) {
        return {x.a_ * y.a_ - x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }

    Fp norm_fp() const { return a_ * a_ + b_ * b_; }
    Fp2 conj() const { return {a_, -b_}; }

    Fp2 inv() const {
        assert(!is_zero());
        Fp n = norm_fp().inv();
        return {a_ * n, -(b_ * n)};
    }
    friend Fp2 operator/(const Fp2& x, const Fp2& y) { return x * y.inv(); }

    Fp2 pow(const Integer& e) const;
    Fp2 pow(std::uint64_t e) const {
        Fp2 r = one(modulus()), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Fp2& x, const Fp2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const Fp2& x, const Fp2& y) { return !(x == y); }

    /// Lexicographic order on (re, im) as integers in [0, p); used only for
    /// deterministic tie-breaking of square roots and omega.
    bool lex_less(const Fp2& o) const {
        if (a_.value() != o.a_.value()) return a_.value() < o.a_.value();
        return b_.value() < o.b_.value();
    }

    friend std::ostream& operator<<(std::ostream& os, const Fp2& x) {
        return os << "(" << x.a_ << "+" << x.b_ << "i)";
    }

private:
    Fp a_, b_;
};

inline Fp2 operator*(std::int64_t c, const Fp2& x) {
    return Fp2::from_int(c, x.modulus()) * x;
}
inline Fp2 operator+(std::int64_t c, const Fp2& x) {
    return Fp2::from_int(c, x.modulus()) + x;
}
inline Fp2 operator-(std::int64_t c, const Fp2& x) {
    return Fp2::from_int(c, x.modulus()) - x;
}
inline Fp2 operator-(const Fp2& x, std::int64_t c) {
    return x - Fp2::from_int(c, x.modulus());
}
inline Fp2 operator+(const Fp2& x, std::int64_t c) {
    return x + Fp2::from_int(c, x.modulus());
}
inline Fp2 operator/(const Fp2& x, std::int64_t c) {
    return x / Fp2::from_int(c, x.modulus());
}

/// Square root in F_p for p = 3 (mod 4); empty if n is a non-residue.
std::optional<Fp> fp_sqrt(Fp n);

/// Deterministic square root in F_{p^2}: the lexicographically smaller of the
/// two roots. Empty result means x is a non-square (possible only for x
/// outside F_p, since every prime-field element is a square in F_{p^2}).
std::optional<Fp2> fp2_sqrt_opt(const Fp2& x);

/// Throwing variant per the arith contract.
Fp2 fp2_sqrt(const Fp2& x);

/// Deterministic primitive cube root of unity in F_{p^2}: the
/// lexicographically smaller root of X^2 + X + 1.
Fp2 omega(std::uint64_t p);

} // namespace modpoly

#endif
