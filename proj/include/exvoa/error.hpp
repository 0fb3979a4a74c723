/**
 * @file error.hpp
 * @brief Exception hierarchy shared by every exvoa module.
 *
 * Every error carries a short machine-readable code (e.g. "PoleError") next
 * to the human message, so the command-line front end can report both.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace exvoa {

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define EXVOA_DEFINE_ERROR(Name)                                          \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& message) : Error(#Name, message) {} \
    }

EXVOA_DEFINE_ERROR(DivisionByZero);
EXVOA_DEFINE_ERROR(PoleError);
EXVOA_DEFINE_ERROR(ParseError);
EXVOA_DEFINE_ERROR(OddWeight);
EXVOA_DEFINE_ERROR(TruncationError);
EXVOA_DEFINE_ERROR(SeriesMismatch);
EXVOA_DEFINE_ERROR(SingularAtC);
EXVOA_DEFINE_ERROR(ImpurePower);
EXVOA_DEFINE_ERROR(NotIndicialRoot);
EXVOA_DEFINE_ERROR(NotInList);
EXVOA_DEFINE_ERROR(WindowTooSmall);
EXVOA_DEFINE_ERROR(RankUnsupported);
EXVOA_DEFINE_ERROR(NonIntegralCharacter);
EXVOA_DEFINE_ERROR(PrescribedMismatch);
EXVOA_DEFINE_ERROR(InvalidArgument);
EXVOA_DEFINE_ERROR(IOError);
// a computed result disagrees with an expected reference
EXVOA_DEFINE_ERROR(VerificationFailure);
// a self-check on a result the library just produced did not hold
EXVOA_DEFINE_ERROR(InternalInconsistency);

#undef EXVOA_DEFINE_ERROR

/// Resonance errors also remember the offending recursion step.
class UnprescribedResonance : public Error {
public:
    explicit UnprescribedResonance(int step)
        : Error("UnprescribedResonance",
                "indicial polynomial vanishes at step " + std::to_string(step) +
                    " and no value was prescribed"),
          step_(step) {}
    int step() const noexcept { return step_; }

private:
    int step_;
};

class InconsistentResonance : public Error {
public:
    explicit InconsistentResonance(int step)
        : Error("InconsistentResonance",
                "resonant step " + std::to_string(step) +
                    " has a nonzero right-hand side; no solution with this leading form"),
          step_(step) {}
    int step() const noexcept { return step_; }

private:
    int step_;
};

}  // namespace exvoa
