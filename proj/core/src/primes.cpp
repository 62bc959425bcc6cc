#include "modpoly/primes.hpp"

#include <set>

#include "modpoly/errors.hpp"

namespace modpoly {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t dedekind_psi(std::uint64_t m) {
    std::uint64_t result = m;
    std::uint64_t n = m;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            result += result / q;
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) result += result / n;
    return result;
}

std::uint64_t next_suitable_prime(std::uint64_t ell, std::uint64_t N,
                                  std::uint64_t after, std::uint64_t min_size) {
    std::uint64_t n_odd = N;
    while (n_odd % 2 == 0) n_odd /= 2;
    const std::uint64_t step = 4 * ell * n_odd;
    std::uint64_t lo = after;
    if (min_size > lo) lo = min_size;
    if (lo < 11) lo = 11;
    // p + 1 = 0 (mod step); step is a multiple of 4, so p = 3 (mod 4) follows
    std::uint64_t m = ((lo + 1) / step + 1) * step;
    for (;; m += step) {
        std::uint64_t p = m - 1;
        if (p <= lo) continue;
        if (p % 4 != 3) continue;
        if (is_prime_u64(p)) return p;
    }
}

Integer crt_symmetric(const std::vector<std::pair<Integer, Integer>>& residues) {
    std::set<Integer> seen;
    Integer M = 1;
    for (const auto& [r, p] : residues) {
        if (!seen.insert(p).second) throw DuplicateModulus();
        M *= p;
    }
    Integer x = 0;
    for (const auto& [r, p] : residues) {
        Integer Mi = M / p;
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), Mi.get_mpz_t(), p.get_mpz_t()) == 0)
            throw DuplicateModulus();
        x += r * Mi * inv;
    }
    x %= M;
    if (x < 0) x += M;
    if (2 * x > M) x -= M;
    return x;
}

} // namespace modpoly
