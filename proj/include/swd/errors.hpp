#ifndef SWD_ERRORS_HPP
#define SWD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace swd {

// Base class for everything this library throws on a violated precondition.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& msg) : Error(msg) {}
};
struct CharDividesR : Error {
    explicit CharDividesR(const std::string& msg) : Error(msg) {}
};
struct NoRootOfUnity : Error {
    explicit NoRootOfUnity(const std::string& msg) : Error(msg) {}
};
struct DivideByZero : Error {
    explicit DivideByZero(const std::string& msg) : Error(msg) {}
};
struct CtxMismatch : Error {
    explicit CtxMismatch(const std::string& msg) : Error(msg) {}
};
struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& msg) : Error(msg) {}
};
struct NotAComposition : Error {
    explicit NotAComposition(const std::string& msg) : Error(msg) {}
};
struct NotAnRCycle : Error {
    explicit NotAnRCycle(const std::string& msg) : Error(msg) {}
};
struct NotIdempotent : Error {
    explicit NotIdempotent(const std::string& msg) : Error(msg) {}
};
struct EmptyWeight : Error {
    explicit EmptyWeight(const std::string& msg) : Error(msg) {}
};
struct AmbientMismatch : Error {
    explicit AmbientMismatch(const std::string& msg) : Error(msg) {}
};
struct RequiresNAtLeastR : Error {
    explicit RequiresNAtLeastR(const std::string& msg) : Error(msg) {}
};
struct HypothesisFailure : Error {
    explicit HypothesisFailure(const std::string& msg) : Error(msg) {}
};
struct InfeasibleField : Error {
    explicit InfeasibleField(const std::string& msg) : Error(msg) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};
struct EmptyModule : Error {
    explicit EmptyModule(const std::string& msg) : Error(msg) {}
};
// An internal consistency check failed: a vector that must lie in a computed
// subspace (by an algebraic identity) did not.  Indicates a bug, never bad
// user input.
struct InternalCheck : Error {
    explicit InternalCheck(const std::string& msg) : Error(msg) {}
};

}  // namespace swd

#endif
