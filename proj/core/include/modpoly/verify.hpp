#ifndef MODPOLY_VERIFY_HPP
#define MODPOLY_VERIFY_HPP

#include <map>
#include <string>

#include "modpoly/bivar.hpp"
#include "modpoly/invariants.hpp"

namespace modpoly {

/// Result of one verification check; failures always carry a finite witness.
struct CheckReport {
    std::string check;
    bool pass = false;
    std::string witness;
    std::map<std::string, double> metrics;

    std::string to_json() const;
};

/// Phi(X,Y) = Phi(Y,X) coefficient-wise.
CheckReport check_symmetry(const BivarIntPoly& phi);

/// deg_X = deg_Y = psi(ell) = ell+1 and the Y^{ell+1} coefficient is the
/// constant polynomial 1.
CheckReport check_degrees_and_monic(const BivarIntPoly& phi, std::uint64_t ell);

/// Zero-coefficient congruences: montgomery i+j = 0 (mod 2); hessian
/// i+j = psi(m) (mod 3) for m = 1 (mod 3), i-j = 0 (mod 3) for m = 2 (mod 3).
CheckReport check_sparsity(const BivarIntPoly& phi, const Invariant& inv, std::uint64_t ell);

/// Fresh-prime isogeny verification: for `trials` random enhanced curves over
/// F_{q^2}, Phi(alpha_0, Y) mod q must equal prod_k (Y - alpha_k) over all
/// ell+1 isogeny codomains.
CheckReport check_isogeny_roots(const BivarIntPoly& phi, const Invariant& inv,
                                std::uint64_t ell, std::uint64_t q, unsigned trials,
                                std::uint64_t seed);

/// Double-resultant identity of the integrality proof:
/// res_Z(res_W(F(W,X), Phi^alpha(W,Z)), F(Z,Y)) = gamma * Phi_classical^{deg J1}.
CheckReport check_resultant_identity(const BivarIntPoly& phi_alpha,
                                     const BivarIntPoly& phi_classical, const Invariant& inv);

/// Measured logarithmic height vs B_ell / deg(J1).
CheckReport check_height_conjecture(const BivarIntPoly& phi, std::uint64_t ell,
                                    const Invariant& inv);

/// Cusp evaluations: montgomery Phi(+-2, Y) = (Y -+ 2)^{ell+1} over Z;
/// hessian Phi(3 w^i, Y) = (Y - 3 w^{ell i})^{ell+1} over Z[w], i = 0,1,2.
CheckReport check_cusp_conjecture(const BivarIntPoly& phi, const Invariant& inv,
                                  std::uint64_t ell);

/// Factorization-shape scan of specializations Phi(x0, Y) over F_{q^2};
/// heuristic evidence for irreducibility over Q(X), explicitly labeled so.
CheckReport check_irreducibility_heuristic(const BivarIntPoly& phi, const Invariant& inv,
                                           std::uint64_t ell, unsigned trials,
                                           std::uint64_t seed);

} // namespace modpoly

#endif
