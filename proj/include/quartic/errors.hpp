#pragma once

#include <stdexcept>
#include <string>

namespace quartic {

// Rejection of an input that violates a documented precondition.
// Recoverable from the caller's point of view; the CLI maps it to exit 2.
class ValidationError : public std::runtime_error {
public:
    enum class Code {
        NotSquarefreeA,
        SquareAB,
        ParityViolation,
        AEqualsOneRequiresC2,
        UnsupportedForm,
        PerfectSquareInput,
        EvenIndex,
        EvenR,
        NotAdmissible,
    };

    ValidationError(Code code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Code code() const noexcept { return code_; }

private:
    Code code_;
};

inline const char* to_string(ValidationError::Code code) {
    using Code = ValidationError::Code;
    switch (code) {
        case Code::NotSquarefreeA: return "NotSquarefreeA";
        case Code::SquareAB: return "SquareAB";
        case Code::ParityViolation: return "ParityViolation";
        case Code::AEqualsOneRequiresC2: return "AEqualsOneRequiresC2";
        case Code::UnsupportedForm: return "UnsupportedForm";
        case Code::PerfectSquareInput: return "PerfectSquareInput";
        case Code::EvenIndex: return "EvenIndex";
        case Code::EvenR: return "EvenR";
        case Code::NotAdmissible: return "NotAdmissible";
    }
    return "UnknownError";
}

// A broken internal invariant. Indicates a bug, never a bad input;
// the CLI maps it to exit 1.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw InternalError(what);
}

} // namespace quartic
