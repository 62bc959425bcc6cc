#ifndef MODPOLY_INTEGER_HPP
#define MODPOLY_INTEGER_HPP

#include <gmpxx.h>
#include <cstdint>
#include <cmath>
#include <string>

#include "modpoly/errors.hpp"

namespace modpoly {

/// Arbitrary-precision signed integer. Backed by GMP; exact arithmetic,
/// canonical zero, no silent overflow anywhere in the pipeline.
using Integer = mpz_class;

inline Integer int_from_string(const std::string& s) {
    Integer z;
    if (z.set_str(s, 10) != 0) throw ParseError("bad integer literal: " + s);
    return z;
}

inline std::uint64_t mod_u64(const Integer& z, std::uint64_t p) {
    Integer r = z % Integer(static_cast<unsigned long>(p));
    if (r < 0) r += Integer(static_cast<unsigned long>(p));
    return r.get_ui();
}

/// Natural log of |z|, with log 0 := 0 (Definition of logarithmic height).
inline double log_abs(const Integer& z) {
    if (z == 0) return 0.0;
    signed long exp2;
    double m = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(exp2) * std::log(2.0);
}

inline Integer exact_div(const Integer& a, const Integer& b) {
    if (b == 0 || a % b != 0) throw NonExactDivision();
    return a / b;
}

} // namespace modpoly

#endif
