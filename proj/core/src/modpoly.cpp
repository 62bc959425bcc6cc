#include "modpoly/modpoly.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <thread>

#include "modpoly/primes.hpp"

namespace modpoly {

HeightBound height_bound(std::uint64_t ell, unsigned divisor) {
    const double l = static_cast<double>(ell);
    double b = 6.0 * l * std::log(l) + 16.0 * l +
               std::min(2.0 * l, 14.0 * std::sqrt(l) * std::log(l));
    return HeightBound{ell, b, divisor};
}

EnhancedCurve base_enhanced_curve(const Invariant& inv, std::uint64_t p, Rng& rng) {
    CurveFp2 E{Fp2::zero(p), Fp2::from_int(6, p), Fp2::zero(p), Fp2::one(p), Fp2::zero(p)};
    Fp2 j = E.j_invariant();
    if (j.is_zero() || j == Fp2::from_int(1728, p)) throw DegenerateBase();
    EnhancedCurve out;
    out.curve = E;
    const std::string name = inv.name();
    if (name == "j") {
        out.structure = LevelStructure{1, LevelStructure::Trivial{}};
    } else if (name == "montgomery") {
        Fp2 y = fp2_sqrt(Fp2::from_int(8, p)); // (1, sqrt(6+2))
        out.structure =
            LevelStructure{4, LevelStructure::CyclicSubgroup{PointFp2::affine(Fp2::one(p), y)}};
    } else if (name == "hessian") {
        auto [T1, T2] = torsion_basis(E, 3, rng);
        Fp2 w = omega(p);
        Fp2 e = weil_pairing(E, T1, T2, 3, rng);
        if (e != w) {
            T2 = scalar_mul(E, 2, T2); // e -> e^2; for order 3, omega^2 -> omega
            e = weil_pairing(E, T1, T2, 3, rng);
        }
        if (e != w) throw DegenerateBase();
        out.structure = LevelStructure{3, LevelStructure::FullBasis{T1, T2}};
    } else {
        throw ParseError("unknown invariant: " + name);
    }
    // invariant must be extractable (also asserts value in image)
    Rng probe = rng.fork(0x62617365);
    (void)inv.value(out, probe);
    return out;
}

std::vector<Fp2> isogeny_neighbor_invariants(const Invariant& inv, const EnhancedCurve& E,
                                             std::uint64_t ell, Rng& rng) {
    auto [T1, T2] = torsion_basis(E.curve, ell, rng);
    std::vector<PointFp2> kernels = enumerate_kernels(E.curve, T1, T2, ell);
    std::vector<Fp2> out;
    out.reserve(kernels.size());
    for (const auto& K : kernels) {
        IsogenyData<Fp2> iso = velu(E.curve, K, ell);
        EnhancedCurve cod{iso.codomain, inv.push_level_structure(iso, E.structure)};
        out.push_back(inv.value(cod, rng));
    }
    return out;
}

namespace {

struct WalkNode {
    EnhancedCurve E;
    Fp2 value;
};

ModpResult finalize_grid(const Invariant& inv, std::uint64_t ell, std::uint64_t p,
                         const std::string& backend,
                         const std::vector<std::vector<Fp2>>& xpoly_per_ydeg) {
    // xpoly_per_ydeg[ydeg] = coefficients in X (length <= ell+2)
    ModpResult r;
    r.prime = p;
    r.invariant = inv.name();
    r.ell = ell;
    r.backend = backend;
    r.grid.assign(ell + 2, std::vector<std::uint64_t>(ell + 2, 0));
    unsigned degx = 0, degy = 0;
    for (unsigned ydeg = 0; ydeg < xpoly_per_ydeg.size(); ++ydeg) {
        for (unsigned xdeg = 0; xdeg < xpoly_per_ydeg[ydeg].size(); ++xdeg) {
            const Fp2& c = xpoly_per_ydeg[ydeg][xdeg];
            if (c.is_zero()) continue;
            if (!c.in_prime_field())
                throw DiscardPrime("coefficient not in the prime subfield");
            if (xdeg > ell + 1 || ydeg > ell + 1)
                throw InternalError("degree overflow in backend result");
            r.grid[xdeg][ydeg] = c.re().value();
            degx = std::max(degx, xdeg);
            degy = std::max(degy, ydeg);
        }
    }
    if (degx != ell + 1 || degy != ell + 1)
        throw DiscardPrime("degenerate degrees in mod-p result");
    if (r.grid[0][ell + 1] != 1)
        throw InternalError("result not monic in Y");
    for (unsigned i = 1; i <= ell + 1; ++i)
        if (r.grid[i][ell + 1] != 0) throw InternalError("Y^(ell+1) coefficient not constant 1");
    return r;
}

bool lex_less_eps(const EpsSeries& a, const EpsSeries& b) {
    for (std::size_t i = 0; i < a.precision(); ++i) {
        const Fp2 &x = a[i], &y = b[i];
        if (x == y) continue;
        return x.lex_less(y);
    }
    return false;
}

} // namespace

ModpResult deformation_backend(const Invariant& inv, std::uint64_t ell, std::uint64_t p,
                               Rng rng) {
    if (ell < 3 || !is_prime_u64(ell)) throw UnsupportedOrder("deformation requires an odd prime");
    if (inv.level() > 1 && std::gcd(ell, inv.level()) != 1)
        throw UnsupportedOrder("ell divides the level");
    const std::size_t k = ell + 2;
    EnhancedCurve base = base_enhanced_curve(inv, p, rng);
    const CurveFp2& E = base.curve;
    Fp2 a_val = inv.value(base, rng);

    // short Weierstrass model y^2 = x^3 - 11x + 14 of the base curve (x -> x - 2)
    const Fp2 one = Fp2::one(p), zero = Fp2::zero(p);
    CoordinateChange<Fp2> shift{one, Fp2::from_int(-2, p), zero, zero};
    CurveFp2 Es = shift.apply(E);
    assert(Es.a4 == Fp2::from_int(-11, p) && Es.a6 == Fp2::from_int(14, p));

    // a~ = a + eps, j~ = J1(a~)/J0(a~)
    EpsSeries at = EpsSeries::constant(a_val, k) + EpsSeries::eps(k, p);
    EpsSeries jt = inv.j_alpha(at);

    // deformation curve y^2 = x^3 + A~ x + 14 with j(E~) = j~, Newton from A0 = -11:
    // F(A) = 4 (j~ - 1728) A^3 + 27 * 14^2 * j~
    const EpsSeries c1728 = EpsSeries::from_integer(1728, k, p);
    UnivarPoly<EpsSeries> FA({EpsSeries::from_integer(27 * 14 * 14, k, p) * jt,
                              EpsSeries::zero(k, p), EpsSeries::zero(k, p),
                              EpsSeries::from_integer(4, k, p) * (jt - c1728)});
    EpsSeries At = newton_lift_root(FA, Fp2::from_int(-11, p));
    WeierstrassCurve<EpsSeries> Etil{EpsSeries::zero(k, p), EpsSeries::zero(k, p),
                                     EpsSeries::zero(k, p), At,
                                     EpsSeries::from_integer(14, k, p)};

    auto [T1, T2] = torsion_basis(E, ell, rng);
    std::vector<PointFp2> kernels = enumerate_kernels(E, T1, T2, ell);

    std::vector<EpsSeries> lifted;
    lifted.reserve(kernels.size());
    for (const auto& K : kernels) {
        IsogenyData<Fp2> iso = velu(E, K, ell);
        EnhancedCurve cod{iso.codomain, inv.push_level_structure(iso, base.structure)};
        Fp2 ak = inv.value(cod, rng);
        PointFp2 Ks = shift.apply(K);
        CurvePoint<EpsSeries> Kt = lift_kernel_generator(Etil, Ks, ell);
        IsogenyData<EpsSeries> isoR = velu(Etil, Kt, ell);
        EpsSeries jk = isoR.codomain.j_invariant();
        // lift invariant: root of J1(X) - j_k J0(X) near a_k
        const PolyInt &J1 = inv.J1(), &J0 = inv.J0();
        std::size_t n = std::max(J1.coeffs().size(), J0.coeffs().size());
        std::vector<EpsSeries> F;
        F.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            EpsSeries c1 = i < J1.coeffs().size() ? EpsSeries::from_integer(J1[i], k, p)
                                                  : EpsSeries::zero(k, p);
            EpsSeries c0 = i < J0.coeffs().size() ? EpsSeries::from_integer(J0[i], k, p)
                                                  : EpsSeries::zero(k, p);
            F.push_back(c1 - jk * c0);
        }
        lifted.push_back(newton_lift_root(UnivarPoly<EpsSeries>(std::move(F)), ak));
    }
    // deterministic product order
    std::sort(lifted.begin(), lifted.end(), lex_less_eps);

    // phi(Y) = prod (Y - a~_k) in R[Y]
    std::vector<EpsSeries> phi{EpsSeries::one(k, p)};
    for (const auto& atk : lifted) {
        std::vector<EpsSeries> next(phi.size() + 1, EpsSeries::zero(k, p));
        for (std::size_t i = 0; i < phi.size(); ++i) {
            next[i + 1] = next[i + 1] + phi[i];
            next[i] = next[i] - atk * phi[i];
        }
        phi = std::move(next);
    }

    // substitute eps = X - a
    std::vector<std::vector<Fp2>> xpolys(phi.size());
    for (std::size_t ydeg = 0; ydeg < phi.size(); ++ydeg) {
        std::vector<Fp2> xpoly(k + 1, zero);
        std::vector<Fp2> base_pow{one}; // (X - a)^i
        for (std::size_t i = 0; i < k; ++i) {
            const Fp2& ci = phi[ydeg][i];
            if (!ci.is_zero())
                for (std::size_t t = 0; t < base_pow.size(); ++t)
                    xpoly[t] = xpoly[t] + ci * base_pow[t];
            std::vector<Fp2> nb(base_pow.size() + 1, zero);
            for (std::size_t t = 0; t < base_pow.size(); ++t) {
                nb[t + 1] = nb[t + 1] + base_pow[t];
                nb[t] = nb[t] - a_val * base_pow[t];
            }
            base_pow = std::move(nb);
        }
        xpolys[ydeg] = std::move(xpoly);
    }
    return finalize_grid(inv, ell, p, "deformation", xpolys);
}

ModpResult interpolation_backend(const Invariant& inv, std::uint64_t ell, std::uint64_t p,
                                 Rng rng) {
    if (!is_prime_u64(ell)) throw UnsupportedOrder("order must be prime");
    if (inv.level() > 1 && std::gcd(ell, inv.level()) != 1)
        throw UnsupportedOrder("ell divides the level");
    if (p <= 24 * (ell + 2)) throw DiscardPrime("prime too small for sampling headroom");

    const std::size_t need = ell + 2;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<Fp2>> samples; // key: (re, im)
    auto key_of = [](const Fp2& v) { return std::make_pair(v.re().value(), v.im().value()); };

    Rng walk_rng = rng.fork(0x77616c6b);
    EnhancedCurve base = base_enhanced_curve(inv, p, walk_rng);
    Fp2 base_val = inv.value(base, walk_rng);
    WalkNode cur{base, base_val};

    std::size_t guard = 0;
    const std::size_t budget = 80 * need;
    while (samples.size() < need) {
        if (++guard > budget) throw InsufficientSamples();
        std::vector<PointFp2> kernels;
        try {
            auto [T1, T2] = torsion_basis(cur.E.curve, ell, walk_rng);
            if (ell == 2) {
                kernels = {T1, T2, point_add(cur.E.curve, T1, T2)};
            } else {
                kernels = enumerate_kernels(cur.E.curve, T1, T2, ell);
            }
        } catch (const Error&) {
            cur = WalkNode{base, base_val};
            continue;
        }
        std::vector<Fp2> neigh;
        std::vector<WalkNode> steps;
        bool all_good = true;
        for (const auto& K : kernels) {
            try {
                IsogenyData<Fp2> iso = velu(cur.E.curve, K, ell);
                EnhancedCurve cod{iso.codomain, inv.push_level_structure(iso, cur.E.structure)};
                Fp2 ak = inv.value(cod, walk_rng);
                neigh.push_back(ak);
                steps.push_back(WalkNode{cod, ak});
            } catch (const DiscardPrime&) {
                all_good = false; // degenerate neighbor: unusable as a sample
            }
        }
        if (all_good && !samples.count(key_of(cur.value))) {
            samples.emplace(key_of(cur.value), neigh);
        }
        if (steps.empty()) {
            cur = WalkNode{base, base_val};
            continue;
        }
        // prefer an unsampled neighbor, at a random offset for coverage
        std::size_t off = walk_rng.below(steps.size());
        WalkNode* next = &steps[off];
        for (std::size_t i = 0; i < steps.size(); ++i) {
            WalkNode& cand = steps[(off + i) % steps.size()];
            if (!samples.count(key_of(cand.value))) {
                next = &cand;
                break;
            }
        }
        cur = *next;
    }

    // For each sample, the Y-polynomial prod_k (Y - alpha_k); then interpolate
    // each Y-coefficient as a polynomial in X of degree <= ell+1.
    std::vector<std::pair<Fp2, std::vector<Fp2>>> rows; // (alpha_0, ypoly coeffs)
    for (const auto& [kv, neigh] : samples) {
        if (rows.size() == need) break;
        Fp2 a0(kv.first, kv.second, p);
        std::vector<Fp2> poly{Fp2::one(p)};
        for (const auto& ak : neigh) {
            std::vector<Fp2> next(poly.size() + 1, Fp2::zero(p));
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] = next[i + 1] + poly[i];
                next[i] = next[i] - ak * poly[i];
            }
            poly = std::move(next);
        }
        rows.push_back({a0, std::move(poly)});
    }

    std::vector<std::vector<Fp2>> xpolys(ell + 2);
    for (std::size_t ydeg = 0; ydeg < ell + 2; ++ydeg) {
        std::vector<std::pair<Fp2, Fp2>> pts;
        pts.reserve(rows.size());
        for (const auto& [a0, ypoly] : rows)
            pts.push_back({a0, ydeg < ypoly.size() ? ypoly[ydeg] : Fp2::zero(p)});
        PolyFp2 f = interpolate(pts);
        if (f.degree() + 1 > static_cast<long>(ell + 2))
            throw InternalError("interpolated degree exceeds ell+1");
        xpolys[ydeg].assign(f.coeffs().begin(), f.coeffs().end());
    }
    return finalize_grid(inv, ell, p, "interpolation", xpolys);
}

BivarIntPoly assemble_crt(const std::vector<ModpResult>& results) {
    if (results.empty()) throw InternalError("assemble_crt: no results");
    const std::uint64_t ell = results[0].ell;
    for (const auto& r : results) {
        if (!r.same_shape(results[0]) || r.grid.size() != ell + 2)
            throw InternalError("inconsistent mod-p results");
    }
    BivarIntPoly out;
    for (unsigned i = 0; i < ell + 2; ++i) {
        for (unsigned j = 0; j < ell + 2; ++j) {
            std::vector<std::pair<Integer, Integer>> residues;
            residues.reserve(results.size());
            for (const auto& r : results)
                residues.push_back({Integer(static_cast<unsigned long>(r.get(i, j))),
                                    Integer(static_cast<unsigned long>(r.prime))});
            out.set(i, j, crt_symmetric(residues));
        }
    }
    return out;
}

namespace {

std::filesystem::path modp_cache_path(const std::filesystem::path& dir, const std::string& inv,
                                      std::uint64_t ell, std::uint64_t p,
                                      const std::string& backend, std::uint64_t seed) {
    return dir / "primes" /
           (inv + "_" + std::to_string(ell) + "_" + std::to_string(p) + "_" + backend + "_" +
            std::to_string(seed) + ".json");
}

std::optional<ModpResult> load_cached_modp(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) return std::nullopt;
    std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    try {
        return modp_from_json(text);
    } catch (const ParseError&) {
        return std::nullopt;
    }
}

void store_cached_modp(const std::filesystem::path& path, const ModpResult& r) {
    namespace fs = std::filesystem;
    fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        os << modp_to_json(r);
    }
    fs::rename(tmp, path);
}

} // namespace

PolynomialFile compute_modular_polynomial(const Invariant& inv, std::uint64_t ell,
                                          const ComputeConfig& cfg, ComputeStats* stats) {
    const auto t0 = std::chrono::steady_clock::now();
    if (!is_prime_u64(ell)) throw UnsupportedOrder("order must be a prime");
    if (inv.level() > 1 && std::gcd(ell, inv.level()) != 1)
        throw UnsupportedOrder("order must be coprime to the level");
    BackendKind bk = cfg.backend;
    if (bk == BackendKind::Auto) bk = (ell == 2) ? BackendKind::Interpolation : BackendKind::Deformation;
    if (ell == 2 && (bk == BackendKind::Deformation || bk == BackendKind::Both))
        throw UnsupportedOrder("deformation backend requires an odd prime");

    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());

    auto run_backends = [&](std::uint64_t p) -> ModpResult {
        Rng prime_rng(cfg.seed ^ (0x9e3779b97f4a7c15ULL * p));
        auto run_one = [&](BackendKind b) {
            if (!cfg.cache_dir.empty()) {
                std::string bname = b == BackendKind::Deformation ? "deformation" : "interpolation";
                auto path = modp_cache_path(cfg.cache_dir, inv.name(), ell, p, bname, cfg.seed);
                if (auto cached = load_cached_modp(path)) return *cached;
                ModpResult r = b == BackendKind::Deformation
                                   ? deformation_backend(inv, ell, p, prime_rng)
                                   : interpolation_backend(inv, ell, p, prime_rng);
                store_cached_modp(path, r);
                return r;
            }
            return b == BackendKind::Deformation ? deformation_backend(inv, ell, p, prime_rng)
                                                 : interpolation_backend(inv, ell, p, prime_rng);
        };
        if (bk == BackendKind::Both) {
            ModpResult a = run_one(BackendKind::Deformation);
            ModpResult b = run_one(BackendKind::Interpolation);
            if (a.grid != b.grid)
                throw InternalError("backend disagreement at p=" + std::to_string(p));
            a.backend = "deformation+interpolation";
            return a;
        }
        return run_one(bk);
    };

    const double bound_target =
        std::log(2.0) + height_bound(ell).value; // ln(2 e^{B_ell}); stopping rule (ii)

    std::vector<ModpResult> results;
    std::vector<std::uint64_t> primes;
    unsigned discarded = 0;
    std::uint64_t after = 0;
    BivarIntPoly current, previous;
    unsigned stable = 0;
    double log_prod = 0.0;
    std::string rule;
    bool have_prev = false;

    unsigned attempts = 0;
    while (rule.empty()) {
        // next batch of candidate primes
        std::vector<std::uint64_t> batch;
        for (unsigned i = 0; i < threads; ++i) {
            after = next_suitable_prime(ell, inv.level(), after, cfg.primes_min);
            batch.push_back(after);
        }
        attempts += static_cast<unsigned>(batch.size());
        if (attempts > cfg.max_prime_attempts) throw PrimePoolExhausted();

        std::vector<std::optional<ModpResult>> slot(batch.size());
        std::vector<std::exception_ptr> errors(batch.size());
        {
            std::vector<std::thread> pool;
            for (std::size_t i = 0; i < batch.size(); ++i) {
                pool.emplace_back([&, i] {
                    try {
                        slot[i] = run_backends(batch[i]);
                    } catch (const DiscardPrime&) {
                        slot[i] = std::nullopt;
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                });
            }
            for (auto& th : pool) th.join();
        }
        for (std::size_t i = 0; i < batch.size() && rule.empty(); ++i) {
            if (errors[i]) std::rethrow_exception(errors[i]);
            if (!slot[i]) {
                ++discarded;
                continue;
            }
            results.push_back(std::move(*slot[i]));
            primes.push_back(batch[i]);
            log_prod += std::log(static_cast<double>(batch[i]));
            current = assemble_crt(results);
            if (cfg.stopping == StoppingRule::Stabilization) {
                if (have_prev && current == previous) {
                    if (++stable >= 2) rule = "stabilization";
                } else {
                    stable = 0;
                }
                previous = current;
                have_prev = true;
            } else {
                if (log_prod > bound_target) rule = "bound";
            }
        }
    }

    PolynomialFile out;
    out.invariant = inv.name();
    out.level = inv.level();
    out.group = group_type_name(inv.group_type());
    out.order = ell;
    out.coeffs = current;
    out.primes = primes;
    out.backends = {bk == BackendKind::Both
                        ? "deformation+interpolation"
                        : (bk == BackendKind::Deformation ? "deformation" : "interpolation")};
    out.seed = cfg.seed;

    if (stats) {
        stats->primes_used = primes;
        stats->primes_discarded = discarded;
        stats->rule_fired = rule;
        stats->height = current.log_height();
        stats->wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    return out;
}

EnhancedCurve random_enhanced_curve(const Invariant& inv, std::uint64_t q, std::uint64_t ell,
                                    unsigned steps, Rng& rng) {
    EnhancedCurve cur = base_enhanced_curve(inv, q, rng);
    for (unsigned s = 0; s < steps; ++s) {
        auto [T1, T2] = torsion_basis(cur.curve, ell, rng);
        std::vector<PointFp2> kernels = ell == 2
            ? std::vector<PointFp2>{T1, T2, point_add(cur.curve, T1, T2)}
            : enumerate_kernels(cur.curve, T1, T2, ell);
        std::size_t off = rng.below(kernels.size());
        bool moved = false;
        for (std::size_t i = 0; i < kernels.size() && !moved; ++i) {
            const auto& K = kernels[(off + i) % kernels.size()];
            try {
                IsogenyData<Fp2> iso = velu(cur.curve, K, ell);
                EnhancedCurve cod{iso.codomain, inv.push_level_structure(iso, cur.structure)};
                (void)inv.value(cod, rng); // representative must be nondegenerate
                cur = cod;
                moved = true;
            } catch (const DiscardPrime&) {
                continue;
            }
        }
        if (!moved) return cur; // isolated node; stay
    }
    return cur;
}

} // namespace modpoly
