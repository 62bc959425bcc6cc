#ifndef MODPOLY_PRIMES_HPP
#define MODPOLY_PRIMES_HPP

#include <cstdint>
#include <vector>

#include "modpoly/integer.hpp"

namespace modpoly {

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Dedekind psi: m * prod_{p | m} (1 + 1/p).
std::uint64_t dedekind_psi(std::uint64_t m);

/// Smallest prime p > max(after, min_size, 11) with p = 3 (mod 4) and
/// 4 * ell * oddpart(N) | p + 1. Guarantees the supersingular base curve has
/// rational ell- and N-torsion over F_{p^2} and that F_p[i] is a field.
std::uint64_t next_suitable_prime(std::uint64_t ell, std::uint64_t N,
                                  std::uint64_t after, std::uint64_t min_size = 0);

/// Symmetric CRT: the unique x with |x| <= prod(p_i)/2 and x = r_i (mod p_i).
Integer crt_symmetric(const std::vector<std::pair<Integer, Integer>>& residues);

} // namespace modpoly

#endif
