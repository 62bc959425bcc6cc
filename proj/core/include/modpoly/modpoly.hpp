#ifndef MODPOLY_MODPOLY_HPP
#define MODPOLY_MODPOLY_HPP

#include <filesystem>
#include <optional>

#include "modpoly/invariants.hpp"
#include "modpoly/serialize.hpp"

namespace modpoly {

/// B_ell = 6 ell ln ell + 16 ell + min(2 ell, 14 sqrt(ell) ln ell); the height
/// conjecture compares h(Phi_ell^alpha) against B_ell / deg(J1).
struct HeightBound {
    std::uint64_t ell = 0;
    double value = 0.0;
    unsigned divisor = 1; // deg J1
};

HeightBound height_bound(std::uint64_t ell, unsigned divisor = 1);

enum class BackendKind { Deformation, Interpolation, Auto, Both };
enum class StoppingRule { Stabilization, Bound };

struct ComputeConfig {
    std::uint64_t seed = 1;
    std::uint64_t primes_min = 65536;
    BackendKind backend = BackendKind::Auto;
    StoppingRule stopping = StoppingRule::Stabilization;
    std::filesystem::path cache_dir; // empty disables caching
    unsigned threads = 0;            // 0 = hardware concurrency
    unsigned max_prime_attempts = 256;
};

struct ComputeStats {
    std::vector<std::uint64_t> primes_used;
    unsigned primes_discarded = 0;
    std::string rule_fired;
    double wall_seconds = 0.0;
    double height = 0.0;
};

/// Supersingular base curve y^2 = x^3 + 6x^2 + x (j = 287496, CM by Z[2i])
/// equipped with the canonical level structure of the invariant.
EnhancedCurve base_enhanced_curve(const Invariant& inv, std::uint64_t p, Rng& rng);

/// Phi_ell^alpha mod p via the deformation over F_{p^2}[eps]/(eps^{ell+2});
/// ell odd. Throws DiscardPrime subtypes on the paper's degenerate cases.
ModpResult deformation_backend(const Invariant& inv, std::uint64_t ell, std::uint64_t p,
                               Rng rng);

/// Phi_ell^alpha mod p by sampling >= ell+2 enhanced curves along ell-isogeny
/// walks and interpolating each Y-coefficient in X. Supports ell = 2.
ModpResult interpolation_backend(const Invariant& inv, std::uint64_t ell, std::uint64_t p,
                                 Rng rng);

/// Per-coefficient symmetric CRT of per-prime results (shape-checked).
BivarIntPoly assemble_crt(const std::vector<ModpResult>& results);

/// Full driver: prime selection, per-prime backends (parallel), CRT with the
/// configured stopping rule, cache lookups, and canonical PolynomialFile output.
PolynomialFile compute_modular_polynomial(const Invariant& inv, std::uint64_t ell,
                                          const ComputeConfig& cfg, ComputeStats* stats = nullptr);

/// Enumerate the invariants of all ell+1 cyclic ell-isogeny codomains of E
/// (with transported structures). Used by the fresh-prime verification and
/// the interpolation backend.
std::vector<Fp2> isogeny_neighbor_invariants(const Invariant& inv, const EnhancedCurve& E,
                                             std::uint64_t ell, Rng& rng);

/// Random enhanced curve over F_{q^2} reached by an isogeny walk from the base
/// curve (walk degree coprime to N and != ell).
EnhancedCurve random_enhanced_curve(const Invariant& inv, std::uint64_t q, std::uint64_t ell,
                                    unsigned steps, Rng& rng);

} // namespace modpoly

#endif
