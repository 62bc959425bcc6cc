#ifndef MODPOLY_SERIALIZE_HPP
#define MODPOLY_SERIALIZE_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "modpoly/bivar.hpp"

namespace modpoly {

inline constexpr const char* kToolVersion = "0.2.0";

/// On-disk representation of a computed modular polynomial. Canonical
/// serialization: coeffs sorted by (i, j), decimal-string coefficients, fixed
/// key order; write -> read -> write is byte-identical.
struct PolynomialFile {
    std::string invariant;
    std::uint64_t level = 1;
    std::string group; // "Gamma" | "Gamma1" | "Gamma0"
    std::uint64_t order = 0;
    BivarIntPoly coeffs;
    std::vector<std::uint64_t> primes;
    std::vector<std::string> backends;
    std::uint64_t seed = 0;
    std::string tool_version = kToolVersion;

    std::string to_json() const;
    static PolynomialFile from_json(const std::string& text);

    void write(const std::filesystem::path& path) const; // atomic (tmp + rename)
    static PolynomialFile read(const std::filesystem::path& path);
};

std::string modp_to_json(const ModpResult& r);
ModpResult modp_from_json(const std::string& text);

} // namespace modpoly

#endif
