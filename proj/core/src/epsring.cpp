#include "modpoly/epsring.hpp"

namespace modpoly {

EpsSeries EpsSeries::inv() const {
    if (!is_unit()) throw NonUnit();
    const std::size_t k = precision();
    EpsSeries y = EpsSeries::constant(c_[0].inv(), 1);
    std::size_t prec = 1;
    while (prec < k) {
        prec = std::min(2 * prec, k);
        y = y.extend(prec);
        EpsSeries xt = truncate(prec);
        EpsSeries two = EpsSeries::constant(Fp2::from_int(2, modulus()), prec);
        y = y * (two - xt * y);
    }
    return y;
}

EpsSeries EpsSeries::sqrt_with_seed(const Fp2& root0) const {
    if (root0.is_zero()) throw NonUnit("square-root seed is zero");
    if (root0 * root0 != c_[0]) throw BadSeed();
    const std::size_t k = precision();
    const Fp2 half = Fp2::from_int(2, modulus()).inv();
    EpsSeries y = EpsSeries::constant(root0, 1);
    std::size_t prec = 1;
    while (prec < k) {
        prec = std::min(2 * prec, k);
        y = y.extend(prec);
        EpsSeries xt = truncate(prec);
        y = (y + xt * y.inv()) * EpsSeries::constant(half, prec);
    }
    assert(y * y == *this);
    return y;
}

EpsSeries newton_lift_root(const UnivarPoly<EpsSeries>& f, const Fp2& a0) {
    assert(!f.is_zero());
    const std::size_t k = f.lc().precision();
    UnivarPoly<EpsSeries> df = f.derivative();

    auto truncated = [](const UnivarPoly<EpsSeries>& g, std::size_t prec) {
        std::vector<EpsSeries> c;
        c.reserve(g.coeffs().size());
        for (const auto& x : g.coeffs()) c.push_back(x.truncate(prec));
        return UnivarPoly<EpsSeries>(std::move(c));
    };

    // simplicity check mod eps
    {
        EpsSeries d0 = truncated(df, 1).eval(EpsSeries::constant(a0, 1));
        if (!d0.is_unit()) throw SingularRoot();
    }
    EpsSeries a = EpsSeries::constant(a0, 1);
    std::size_t prec = 1;
    while (prec < k) {
        prec = std::min(2 * prec, k);
        a = a.extend(prec);
        EpsSeries fa = truncated(f, prec).eval(a);
        EpsSeries dfa = truncated(df, prec).eval(a);
        a = a - fa * dfa.inv();
    }
    assert(f.eval(a).is_zero());
    assert(a.constant_term() == a0);
    return a;
}

} // namespace modpoly
