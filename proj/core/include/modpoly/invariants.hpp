#ifndef MODPOLY_INVARIANTS_HPP
#define MODPOLY_INVARIANTS_HPP

#include <memory>
#include <string>
#include <variant>

#include "modpoly/curves.hpp"
#include "modpoly/isogeny.hpp"
#include "modpoly/models.hpp"

namespace modpoly {

enum class GroupType { Gamma, Gamma1, Gamma0 };

std::string group_type_name(GroupType g);

/// Level structure on a curve over F_{p^2}: full N-torsion basis (Gamma(N)),
/// point of order N (Gamma1(N)), or cyclic subgroup generator (Gamma0(N)).
struct LevelStructure {
    struct FullBasis {
        PointFp2 P, Q;
    };
    struct SinglePoint {
        PointFp2 P;
    };
    struct CyclicSubgroup {
        PointFp2 G;
    };
    struct Trivial {};

    std::uint64_t level = 1;
    std::variant<Trivial, FullBasis, SinglePoint, CyclicSubgroup> data;
};

struct EnhancedCurve {
    CurveFp2 curve;
    LevelStructure structure;
};

/// Check the level-structure invariants (orders, pairing order, on-curve).
void validate_structure(const EnhancedCurve& E, Rng& rng);

/// The invariant abstraction: level, group type, the reduced pair J1/J0 with
/// j_alpha = J1/J0, value extraction, canonical representatives, and
/// level-structure transport under isogenies.
class Invariant {
public:
    virtual ~Invariant() = default;

    virtual std::string name() const = 0;
    virtual std::uint64_t level() const = 0;
    virtual GroupType group_type() const = 0;
    virtual const PolyInt& J1() const = 0;
    virtual const PolyInt& J0() const = 0;

    /// alpha(E, *) for an enhanced curve over F_{p^2}.
    virtual Fp2 value(const EnhancedCurve& E, Rng& rng) const = 0;

    /// Canonical representative (E_z^alpha, *) for z in the image.
    virtual EnhancedCurve canonical_curve(const Fp2& z, Rng& rng) const = 0;

    /// z in image alpha over F_{p^2} (J0(z) != 0 and model constraints).
    virtual bool is_in_image(const Fp2& z) const = 0;

    /// Transport of the level structure through a degree-m isogeny
    /// (Gamma0: G -> f(G); Gamma1: P -> f(P); Gamma: P -> [m^-1 mod N] f(P), Q -> f(Q)).
    LevelStructure push_level_structure(const IsogenyData<Fp2>& iso,
                                        const LevelStructure& S) const;

    /// j_alpha(z) = J1(z)/J0(z); Pole (OutOfImage) when J0(z) = 0.
    template <class R>
    R j_alpha(const R& z) const {
        R num = eval_int_poly(J1(), z);
        R den = eval_int_poly(J0(), z);
        if (!is_unit_of(den)) throw OutOfImage();
        return num * den.inv();
    }

    static const Invariant& by_name(const std::string& name);

protected:
    template <class R>
    static R eval_int_poly(const PolyInt& f, const R& z);
    static bool is_unit_of(const Fp2& x) { return !x.is_zero(); }
    static bool is_unit_of(const EpsSeries& x) { return x.is_unit(); }
};

template <>
inline Fp2 Invariant::eval_int_poly<Fp2>(const PolyInt& f, const Fp2& z) {
    return f.eval_map(z, [&](const Integer& c) { return Fp2::from_integer(c, z.modulus()); });
}
template <>
inline EpsSeries Invariant::eval_int_poly<EpsSeries>(const PolyInt& f, const EpsSeries& z) {
    return f.eval_map(z, [&](const Integer& c) {
        return EpsSeries::from_integer(c, z.precision(), z.modulus());
    });
}

/// j-invariant (level 1), Montgomery coefficient (Gamma0(4)), Hessian
/// coefficient (Gamma(3)).
const Invariant& j_invariant_mode();
const Invariant& montgomery_invariant_mode();
const Invariant& hessian_invariant_mode();

/// A = a2/x1 extraction from (E, <G>) with G of order 4; j(E) not in {0,1728}.
Fp2 mont_invariant(const CurveFp2& E, const PointFp2& G);

/// d extraction from (E, (P, Q)) with e_3(P, Q) = omega; j(E) not in {0,1728}.
Fp2 hess_invariant(const CurveFp2& E, const PointFp2& P, const PointFp2& Q, Rng& rng);

} // namespace modpoly

#endif
