#include "modpoly/invariants.hpp"

#include <numeric>

namespace modpoly {

std::string group_type_name(GroupType g) {
    switch (g) {
        case GroupType::Gamma: return "Gamma";
        case GroupType::Gamma1: return "Gamma1";
        default: return "Gamma0";
    }
}

namespace {

bool degenerate_j(const CurveFp2& E) {
    const std::uint64_t p = E.a1.modulus();
    Fp2 j = E.j_invariant();
    return j.is_zero() || j == Fp2::from_int(1728, p);
}

} // namespace

void validate_structure(const EnhancedCurve& E, Rng& rng) {
    const std::uint64_t N = E.structure.level;
    if (std::holds_alternative<LevelStructure::Trivial>(E.structure.data)) return;
    if (auto* fb = std::get_if<LevelStructure::FullBasis>(&E.structure.data)) {
        if (!on_curve(E.curve, fb->P) || !on_curve(E.curve, fb->Q)) throw BadStructure();
        if (point_order(E.curve, fb->P, N) != N || point_order(E.curve, fb->Q, N) != N)
            throw BadStructure();
        Fp2 e = weil_pairing(E.curve, fb->P, fb->Q, N, rng);
        if (root_of_unity_order(e, N) != N) throw BadStructure();
    } else if (auto* sp = std::get_if<LevelStructure::SinglePoint>(&E.structure.data)) {
        if (!on_curve(E.curve, sp->P) || point_order(E.curve, sp->P, N) != N)
            throw BadStructure();
    } else if (auto* cs = std::get_if<LevelStructure::CyclicSubgroup>(&E.structure.data)) {
        if (!on_curve(E.curve, cs->G) || point_order(E.curve, cs->G, N) != N)
            throw BadStructure();
    }
}

LevelStructure Invariant::push_level_structure(const IsogenyData<Fp2>& iso,
                                               const LevelStructure& S) const {
    const std::uint64_t N = S.level;
    const std::uint64_t m = iso.degree;
    if (N > 1 && std::gcd(m, N) != 1) throw UnsupportedOrder();
    LevelStructure out;
    out.level = N;
    if (std::holds_alternative<LevelStructure::Trivial>(S.data)) {
        out.data = LevelStructure::Trivial{};
    } else if (auto* fb = std::get_if<LevelStructure::FullBasis>(&S.data)) {
        // phi(P) = [m] P'  =>  P' = [m^{-1} mod N] phi(P); Q' = phi(Q)
        std::uint64_t minv = 1;
        for (std::uint64_t t = 1; t < N; ++t)
            if ((t * (m % N)) % N == 1) { minv = t; break; }
        PointFp2 P2 = scalar_mul(iso.codomain, minv, evaluate_isogeny(iso, fb->P));
        PointFp2 Q2 = evaluate_isogeny(iso, fb->Q);
        out.data = LevelStructure::FullBasis{P2, Q2};
    } else if (auto* sp = std::get_if<LevelStructure::SinglePoint>(&S.data)) {
        out.data = LevelStructure::SinglePoint{evaluate_isogeny(iso, sp->P)};
    } else if (auto* cs = std::get_if<LevelStructure::CyclicSubgroup>(&S.data)) {
        out.data = LevelStructure::CyclicSubgroup{evaluate_isogeny(iso, cs->G)};
    }
    return out;
}

Fp2 mont_invariant(const CurveFp2& E, const PointFp2& G) {
    const std::uint64_t p = E.a1.modulus();
    if (degenerate_j(E)) throw DegenerateCurve();
    if (G.is_infinity()) throw BadStructure();
    const Fp2 one = Fp2::one(p);
    // kill a1, a3, then shift the order-2 point [2]G to (0, 0)
    CoordinateChange<Fp2> cb = b_form_change(E, one);
    CurveFp2 Eb = cb.apply(E);
    PointFp2 Gb = cb.apply(G);
    PointFp2 T = scalar_mul(Eb, 2, Gb);
    if (T.is_infinity() || !scalar_mul(Eb, 2, T).is_infinity())
        throw BadStructure("[2]G is not a point of order 2");
    CoordinateChange<Fp2> tr{one, T.x, Fp2::zero(p), Fp2::zero(p)};
    CurveFp2 Es = tr.apply(Eb);
    PointFp2 Gs = tr.apply(Gb);
    if (!Es.a6.is_zero()) throw BadStructure("order-2 shift left a6 != 0");
    Fp2 x1 = Gs.x;
    if (x1.is_zero()) throw BadStructure();
    if (x1 * x1 != Es.a4) throw BadStructure("x1^2 != a4");
    Fp2 A = Es.a2 / x1;
    if ((A * A - 4).is_zero()) throw DegenerateCurve();
    return A;
}

Fp2 hess_invariant(const CurveFp2& E, const PointFp2& P, const PointFp2& Q, Rng& rng) {
    const std::uint64_t p = E.a1.modulus();
    if (degenerate_j(E)) throw DegenerateCurve();
    const Fp2 w = omega(p);
    Fp2 e = weil_pairing(E, P, Q, 3, rng);
    if (e != w) throw PairingMismatch();
    TateNormalForm tn = tate_normal_form(E, P);
    PointFp2 Qt = tn.change.apply(Q);
    if (Qt.is_infinity()) throw BadStructure();
    const Fp2 a1 = tn.a1, a3 = tn.a3;
    const Fp2 xi = Qt.x, eta = Qt.y;
    if (xi.is_zero()) throw BadStructure();
    // tangent-line form of e_3(P, Q) = omega
    if (!(w * a1 * xi + (2 * w + 1) * eta + (w - 1) * a3).is_zero())
        throw InternalError("tangent-line condition violated");
    Fp2 den = a1 * xi + 3 * a3;
    if (den.is_zero()) throw BadStructure();
    Fp2 d = 3 * (a1 * xi) / den;
    Fp2 cube = a1 + 3 * (a3 / xi);
    if (cube * cube * cube != a1 * a1 * a1 - 27 * a3)
        throw InternalError("(a1 + 3 a3/xi)^3 != a1^3 - 27 a3");
    if ((d * d * d - 27).is_zero()) throw DegenerateCurve();
    return d;
}

namespace {

class JInvariant final : public Invariant {
public:
    JInvariant() : j1_({Integer(0), Integer(1)}), j0_({Integer(1)}) {}
    std::string name() const override { return "j"; }
    std::uint64_t level() const override { return 1; }
    GroupType group_type() const override { return GroupType::Gamma0; }
    const PolyInt& J1() const override { return j1_; }
    const PolyInt& J0() const override { return j0_; }

    Fp2 value(const EnhancedCurve& E, Rng&) const override { return E.curve.j_invariant(); }

    EnhancedCurve canonical_curve(const Fp2& z, Rng&) const override {
        const std::uint64_t p = z.modulus();
        CurveFp2 E;
        if (z.is_zero()) {
            E = CurveFp2{Fp2::zero(p), Fp2::zero(p), Fp2::zero(p), Fp2::zero(p), Fp2::one(p)};
        } else if (z == Fp2::from_int(1728, p)) {
            E = CurveFp2{Fp2::zero(p), Fp2::zero(p), Fp2::zero(p), Fp2::one(p), Fp2::zero(p)};
        } else {
            // E_j : y^2 = x^3 - 27 j/(j-1728) x - 54 j/(j-1728)
            Fp2 c = z / (z - Fp2::from_int(1728, p));
            E = CurveFp2{Fp2::zero(p), Fp2::zero(p), Fp2::zero(p), -27 * c, -54 * c};
        }
        return EnhancedCurve{E, LevelStructure{1, LevelStructure::Trivial{}}};
    }
    bool is_in_image(const Fp2&) const override { return true; }

private:
    PolyInt j1_, j0_;
};

class MontgomeryInvariant final : public Invariant {
public:
    MontgomeryInvariant()
        : j1_({Integer(-6912), Integer(0), Integer(6912), Integer(0), Integer(-2304),
               Integer(0), Integer(256)}),
          j0_({Integer(-4), Integer(0), Integer(1)}) {}
    std::string name() const override { return "montgomery"; }
    std::uint64_t level() const override { return 4; }
    GroupType group_type() const override { return GroupType::Gamma0; }
    const PolyInt& J1() const override { return j1_; }
    const PolyInt& J0() const override { return j0_; }

    Fp2 value(const EnhancedCurve& E, Rng&) const override {
        auto* cs = std::get_if<LevelStructure::CyclicSubgroup>(&E.structure.data);
        if (!cs || E.structure.level != 4) throw BadStructure();
        return mont_invariant(E.curve, cs->G);
    }

    EnhancedCurve canonical_curve(const Fp2& z, Rng&) const override {
        const std::uint64_t p = z.modulus();
        if (!is_in_image(z)) throw OutOfImage();
        MontgomeryCurve M{z};
        CurveFp2 E = montgomery_to_weierstrass(M);
        auto y = fp2_sqrt_opt(z + 2);
        if (!y) throw OutOfImage(); // canonical structure not rational over F_{p^2}
        PointFp2 G = PointFp2::affine(Fp2::one(p), *y);
        return EnhancedCurve{E, LevelStructure{4, LevelStructure::CyclicSubgroup{G}}};
    }

    bool is_in_image(const Fp2& z) const override { return !(z * z - 4).is_zero(); }

private:
    PolyInt j1_, j0_;
};

class HessianInvariant final : public Invariant {
public:
    HessianInvariant() {
        // J1 = X^3 (X^3 + 216)^3, J0 = (X^3 - 27)^3
        std::vector<Integer> j1(13, Integer(0));
        j1[3] = Integer(216) * 216 * 216;
        j1[6] = Integer(3) * 216 * 216;
        j1[9] = Integer(3) * 216;
        j1[12] = 1;
        j1_ = PolyInt(j1);
        std::vector<Integer> j0(10, Integer(0));
        j0[0] = Integer(-19683);
        j0[3] = Integer(2187);
        j0[6] = Integer(-81);
        j0[9] = 1;
        j0_ = PolyInt(j0);
    }
    std::string name() const override { return "hessian"; }
    std::uint64_t level() const override { return 3; }
    GroupType group_type() const override { return GroupType::Gamma; }
    const PolyInt& J1() const override { return j1_; }
    const PolyInt& J0() const override { return j0_; }

    Fp2 value(const EnhancedCurve& E, Rng& rng) const override {
        auto* fb = std::get_if<LevelStructure::FullBasis>(&E.structure.data);
        if (!fb || E.structure.level != 3) throw BadStructure();
        return hess_invariant(E.curve, fb->P, fb->Q, rng);
    }

    EnhancedCurve canonical_curve(const Fp2& z, Rng&) const override {
        if (!is_in_image(z)) throw OutOfImage();
        HessianCurve H{z, omega(z.modulus())};
        HessianWeierstrass HW = hessian_to_weierstrass(H);
        return EnhancedCurve{HW.curve,
                             LevelStructure{3, LevelStructure::FullBasis{HW.P, HW.Q}}};
    }

    bool is_in_image(const Fp2& z) const override { return !(z * z * z - 27).is_zero(); }

private:
    PolyInt j1_, j0_;
};

} // namespace

const Invariant& j_invariant_mode() {
    static const JInvariant inst;
    return inst;
}
const Invariant& montgomery_invariant_mode() {
    static const MontgomeryInvariant inst;
    return inst;
}
const Invariant& hessian_invariant_mode() {
    static const HessianInvariant inst;
    return inst;
}

const Invariant& Invariant::by_name(const std::string& name) {
    if (name == "j") return j_invariant_mode();
    if (name == "montgomery") return montgomery_invariant_mode();
    if (name == "hessian") return hessian_invariant_mode();
    throw ParseError("unknown invariant: " + name);
}

} // namespace modpoly
