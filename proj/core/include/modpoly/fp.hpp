#ifndef MODPOLY_FP_HPP
#define MODPOLY_FP_HPP

#include <cassert>
#include <cstdint>
#include <ostream>

namespace modpoly {

/// Element of the prime field F_p. The modulus is carried by value; mixing
/// moduli is a programming error and asserted.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

    static Fp from_int(std::int64_t v, std::uint64_t p) {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(Fp a, Fp b) {
        assert(a.p_ == b.p_);
        std::uint64_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return Fp::raw(s, a.p_);
    }
    friend Fp operator-(Fp a, Fp b) {
        assert(a.p_ == b.p_);
        return Fp::raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
    }
    friend Fp operator*(Fp a, Fp b) {
        assert(a.p_ == b.p_);
        return Fp::raw(static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(a.v_) * b.v_) % a.p_), a.p_);
    }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp pow(std::uint64_t e) const {
        Fp r = raw(1 % p_, p_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    Fp inv() const {
        assert(v_ != 0);
        return pow(p_ - 2);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

private:
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }
    std::uint64_t v_;
    std::uint64_t p_;
};

} // namespace modpoly

#endif
