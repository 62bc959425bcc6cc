#ifndef MODPOLY_BIVAR_HPP
#define MODPOLY_BIVAR_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "modpoly/fp.hpp"
#include "modpoly/fp2.hpp"
#include "modpoly/integer.hpp"
#include "modpoly/poly.hpp"
#include "modpoly/zomega.hpp"

namespace modpoly {

/// Sparse bivariate polynomial over Z, keyed by exponent pair (i, j) in
/// deterministic (i, j) order; zero coefficients never stored.
class BivarIntPoly {
public:
    using Key = std::pair<unsigned, unsigned>;

    BivarIntPoly() = default;

    void set(unsigned i, unsigned j, Integer c) {
        if (c == 0) coeffs_.erase({i, j});
        else coeffs_[{i, j}] = std::move(c);
    }
    Integer get(unsigned i, unsigned j) const {
        auto it = coeffs_.find({i, j});
        return it == coeffs_.end() ? Integer(0) : it->second;
    }
    const std::map<Key, Integer>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t term_count() const { return coeffs_.size(); }

    unsigned degree_x() const;
    unsigned degree_y() const;

    friend bool operator==(const BivarIntPoly& a, const BivarIntPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BivarIntPoly& a, const BivarIntPoly& b) { return !(a == b); }

    friend BivarIntPoly operator+(const BivarIntPoly& a, const BivarIntPoly& b);
    friend BivarIntPoly operator-(const BivarIntPoly& a, const BivarIntPoly& b);
    friend BivarIntPoly operator*(const BivarIntPoly& a, const BivarIntPoly& b);

    BivarIntPoly transpose() const; // swap X and Y
    BivarIntPoly pow(unsigned e) const;

    /// Coefficient-wise maximum of log|c| with log 0 := 0.
    double log_height() const;

    /// Phi(x, Y) over Z as a univariate in Y.
    std::vector<Integer> eval_x_int(const Integer& x) const;
    /// Phi(x, Y) over Z[w] for x = c * w^i.
    std::vector<ZOmega> eval_x_zomega(const ZOmega& x) const;
    /// Phi(x, y) mod p.
    Fp eval_mod(const Integer& x, const Integer& y, std::uint64_t p) const;
    /// Phi(x, Y) with x in F_{q^2}, coefficients reduced mod q.
    PolyFp2 eval_x_fp2(const Fp2& x) const;
    /// Full reduction mod p as a univariate-in-W polynomial of univariates:
    /// returns coefficients of W^i as polynomials in Z (for resultants).
    PolyInt eval_x_as_int_poly_in_y(const Integer& x) const;

private:
    std::map<Key, Integer> coeffs_;
};

/// Phi_ell^alpha mod p: dense (ell+2) x (ell+2) grid of F_p coefficients,
/// tagged with the prime and the backend that produced it.
struct ModpResult {
    std::uint64_t prime = 0;
    std::string invariant;
    std::uint64_t ell = 0;
    std::string backend;
    std::vector<std::vector<std::uint64_t>> grid; // grid[i][j] = coeff of X^i Y^j

    std::uint64_t get(unsigned i, unsigned j) const {
        if (i >= grid.size() || j >= grid[i].size()) return 0;
        return grid[i][j];
    }
    bool same_shape(const ModpResult& o) const {
        return ell == o.ell && invariant == o.invariant;
    }
    friend bool operator==(const ModpResult& a, const ModpResult& b) {
        return a.prime == b.prime && a.ell == b.ell && a.grid == b.grid;
    }
};

} // namespace modpoly

#endif
