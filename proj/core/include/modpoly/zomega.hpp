#ifndef MODPOLY_ZOMEGA_HPP
#define MODPOLY_ZOMEGA_HPP

#include <ostream>
#include <string>

#include "modpoly/integer.hpp"

namespace modpoly {

/// Eisenstein integer a + b*w with w^2 + w + 1 = 0. Used for evaluating
/// modular polynomials at the Hessian cusp values 3*w^i.
class ZOmega {
public:
    ZOmega() : a_(0), b_(0) {}
    ZOmega(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}
    static ZOmega from_int(const Integer& a) { return ZOmega(a, 0); }
    static ZOmega omega_power(int i); // w^i for i mod 3

    const Integer& re() const { return a_; }
    const Integer& wc() const { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend ZOmega operator+(const ZOmega& x, const ZOmega& y) {
        return ZOmega(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend ZOmega operator-(const ZOmega& x, const ZOmega& y) {
        return ZOmega(x.a_ - y.a_, x.b_ - y.b_);
    }
    ZOmega operator-() const { return ZOmega(-a_, -b_); }
    friend ZOmega operator*(const ZOmega& x, const ZOmega& y) {
        // (a1 + b1 w)(a2 + b2 w) = a1a2 - b1b2 + (a1b2 + a2b1 - b1b2) w
        return ZOmega(x.a_ * y.a_ - x.b_ * y.b_,
                      x.a_ * y.b_ + x.b_ * y.a_ - x.b_ * y.b_);
    }
    friend bool operator==(const ZOmega& x, const ZOmega& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const ZOmega& x, const ZOmega& y) { return !(x == y); }

    /// "a+b*w" notation; pure integers print without the w part.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const ZOmega& z) { return os << z.str(); }

private:
    Integer a_, b_;
};

} // namespace modpoly

#endif
