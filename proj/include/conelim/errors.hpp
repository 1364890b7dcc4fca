#pragma once

#include <stdexcept>
#include <string>

namespace conelim {

// Malformed input (bad JSON, wrong cell lengths, unparsable rationals).
// CLI maps this to exit code 1.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated operation contract. CLI maps these to exit code 2 and prints
// the code name on the diagnostic stream.
class ContractError : public std::runtime_error {
public:
    ContractError(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define CONELIM_DEFINE_ERROR(Name)                                        \
    class Name : public ContractError {                                   \
    public:                                                               \
        explicit Name(const std::string& msg) : ContractError(#Name, msg) {} \
    }

CONELIM_DEFINE_ERROR(DegreeMismatch);
CONELIM_DEFINE_ERROR(InexactDivision);
CONELIM_DEFINE_ERROR(HolomorphyViolation);
CONELIM_DEFINE_ERROR(NotNilpotent);
CONELIM_DEFINE_ERROR(RankDeficient);
CONELIM_DEFINE_ERROR(NotSaturated);
CONELIM_DEFINE_ERROR(NotFactorable);
CONELIM_DEFINE_ERROR(WrongShape);
CONELIM_DEFINE_ERROR(Unsupported);
CONELIM_DEFINE_ERROR(UnsupportedType);
CONELIM_DEFINE_ERROR(BoundaryCase);
CONELIM_DEFINE_ERROR(Divergent);
CONELIM_DEFINE_ERROR(ZeroRank);
CONELIM_DEFINE_ERROR(ZeroScalar);
CONELIM_DEFINE_ERROR(ExhaustedAttempts);

#undef CONELIM_DEFINE_ERROR

}  // namespace conelim
