#ifndef MODPOLY_ERRORS_HPP
#define MODPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modpoly {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Recoverable per-prime failures: the driver discards the prime and moves on.
struct DiscardPrime : Error {
    using Error::Error;
};

struct NonUnit : DiscardPrime {
    NonUnit() : DiscardPrime("non-unit in eps-ring") {}
    explicit NonUnit(const std::string& m) : DiscardPrime(m) {}
};
struct NonUnitDenominator : DiscardPrime {
    NonUnitDenominator() : DiscardPrime("non-unit denominator over R") {}
};
struct SingularRoot : DiscardPrime {
    SingularRoot() : DiscardPrime("Newton seed is not a simple root") {}
};
struct DegenerateCurve : DiscardPrime {
    DegenerateCurve() : DiscardPrime("j-invariant 0 or 1728") {}
};
struct DegenerateBase : DiscardPrime {
    DegenerateBase() : DiscardPrime("base enhanced curve not extractable") {}
};
struct InsufficientSamples : DiscardPrime {
    InsufficientSamples() : DiscardPrime("interpolation sampling budget exhausted") {}
};

struct NoSquareRoot : Error {
    NoSquareRoot() : Error("element has no square root") {}
};
struct BadSeed : Error {
    BadSeed() : Error("seed does not square to the constant term") {}
};
struct DuplicateModulus : Error {
    DuplicateModulus() : Error("duplicate prime in CRT input") {}
};
struct DuplicateNode : Error {
    DuplicateNode() : Error("repeated x-value in interpolation nodes") {}
};
struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("resultant of zero polynomial") {}
};
struct BadKernel : Error {
    using Error::Error;
    BadKernel() : Error("kernel point of wrong order") {}
};
struct BadOrder : Error {
    BadOrder() : Error("point does not have the required order") {}
};
struct BadStructure : Error {
    using Error::Error;
    BadStructure() : Error("level structure violates its invariants") {}
};
struct NotIsomorphic : Error {
    NotIsomorphic() : Error("curves are not isomorphic over the base field") {}
};
struct NotTorsion : Error {
    NotTorsion() : Error("point is not n-torsion") {}
};
struct PairingMismatch : Error {
    PairingMismatch() : Error("basis pairing is not the canonical omega") {}
};
struct TorsionSamplingFailed : Error {
    TorsionSamplingFailed() : Error("torsion basis sampling retries exhausted") {}
};
struct OutOfImage : Error {
    OutOfImage() : Error("value outside the invariant image") {}
};
struct NonExactDivision : Error {
    NonExactDivision() : Error("polynomial division expected to be exact was not") {}
};
struct UnsupportedOrder : Error {
    using Error::Error;
    UnsupportedOrder() : Error("unsupported isogeny order for this invariant/backend") {}
};
struct PrimePoolExhausted : Error {
    PrimePoolExhausted() : Error("all candidate primes were discarded") {}
};
struct InternalError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

} // namespace modpoly

#endif
