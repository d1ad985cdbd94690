#ifndef FAIRDIV_ERRORS_HPP
#define FAIRDIV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fairdiv {

enum class Errc {
    DuplicateObject,
    DuplicateAgent,
    ClassesNotPartition,
    UnknownObject,
    UnknownAgent,
    InvalidAssignment,
    InvalidRational,
    InvalidParams,
    UnsupportedNotion,
    WrongAgentCount,
    NotStrict,
    NotIdentical,
    NotSquareOrNotStrict,
    BudgetExceeded,
    ParseError,
};

/// Single exception type for all domain errors; `code()` tells them apart.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace fairdiv

#endif
