#pragma once

#include <stdexcept>
#include <string>

#include "bcheck/span.hpp"

namespace bcheck {

// Every error belongs to one class; the cli module maps classes to exit codes
// (input -> 2, evaluation -> 3). Verdict outcomes map to 0/1 separately.
enum class ErrorClass {
    Input,      // lexing, parsing, typing, malformed files
    Evaluation, // well-definedness, enumeration, budget, runtime lookup
};

class BError : public std::runtime_error {
public:
    BError(ErrorClass cls, std::string code, const std::string& message)
        : std::runtime_error(message), cls_(cls), code_(std::move(code)) {}

    BError(ErrorClass cls, std::string code, const SourceSpan& span, const std::string& message)
        : std::runtime_error(span.to_string() + ": " + message),
          cls_(cls), code_(std::move(code)), span_(span), has_span_(true) {}

    ErrorClass error_class() const { return cls_; }
    const std::string& code() const { return code_; }
    bool has_span() const { return has_span_; }
    const SourceSpan& span() const { return span_; }

private:
    ErrorClass cls_;
    std::string code_;
    SourceSpan span_{};
    bool has_span_ = false;
};

struct LexError : BError {
    LexError(const SourceSpan& s, const std::string& m)
        : BError(ErrorClass::Input, "LexError", s, m) {}
};

struct ParseError : BError {
    ParseError(const SourceSpan& s, const std::string& m)
        : BError(ErrorClass::Input, "ParseError", s, m) {}
};

struct ArityError : BError {
    ArityError(const SourceSpan& s, const std::string& m)
        : BError(ErrorClass::Input, "ArityError", s, m) {}
};

struct CyclicDefinitionError : BError {
    explicit CyclicDefinitionError(const std::string& m)
        : BError(ErrorClass::Input, "CyclicDefinitionError", m) {}
};

struct TypeCheckError : BError {
    TypeCheckError(const SourceSpan& s, const std::string& expected, const std::string& found)
        : BError(ErrorClass::Input, "TypeError", s,
                 "expected " + expected + ", found " + found),
          expected_(expected), found_(found) {}

    const std::string& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    std::string expected_, found_;
};

struct OccursCheckFailure : BError {
    OccursCheckFailure(const SourceSpan& s, const std::string& m)
        : BError(ErrorClass::Input, "OccursCheckFailure", s, m) {}
};

struct UnresolvedTypeError : BError {
    UnresolvedTypeError(const SourceSpan& s, const std::string& m)
        : BError(ErrorClass::Input, "UnresolvedTypeError", s, m) {}
};

struct UnknownIdentifierError : BError {
    UnknownIdentifierError(ErrorClass cls, const SourceSpan& s, const std::string& id)
        : BError(cls, "UnknownIdentifier", s, "unknown identifier '" + id + "'"), id_(id) {}
    explicit UnknownIdentifierError(const std::string& id)
        : BError(ErrorClass::Evaluation, "UnknownIdentifier", "unknown identifier '" + id + "'"),
          id_(id) {}
    const std::string& identifier() const { return id_; }

private:
    std::string id_;
};

// Division by zero, application outside domain, not-a-function, empty
// sequence heads, min/max of empty sets, negative exponents.
struct WellDefinednessError : BError {
    WellDefinednessError(std::string kind, const std::string& m)
        : BError(ErrorClass::Evaluation, "WellDefinednessError", m), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct EnumerationError : BError {
    explicit EnumerationError(const std::string& m)
        : BError(ErrorClass::Evaluation, "EnumerationError", m) {}
};

struct BudgetExceededError : EnumerationError {
    explicit BudgetExceededError(const std::string& m) : EnumerationError(m) {}
};

struct SizeCapExceededError : BError {
    explicit SizeCapExceededError(const std::string& m)
        : BError(ErrorClass::Evaluation, "SizeCapExceeded", m) {}
};

struct DoubleWriteError : BError {
    explicit DoubleWriteError(const std::string& id)
        : BError(ErrorClass::Evaluation, "DoubleWriteError",
                 "variable '" + id + "' written twice in one parallel step") {}
};

struct MissingBindingError : BError {
    explicit MissingBindingError(const std::string& id)
        : BError(ErrorClass::Evaluation, "MissingBinding",
                 "declared identifier '" + id + "' is unbound"), id_(id) {}
    const std::string& identifier() const { return id_; }

private:
    std::string id_;
};

struct AtRootStateError : BError {
    AtRootStateError()
        : BError(ErrorClass::Evaluation, "AtRootState",
                 "cannot backtrack from the initial state") {}
};

struct NoConstantsFoundError : BError {
    explicit NoConstantsFoundError(const std::string& m)
        : BError(ErrorClass::Evaluation, "NoConstantsFound", m) {}
};

struct UninitialisedVariableError : BError {
    explicit UninitialisedVariableError(const std::string& id)
        : BError(ErrorClass::Evaluation, "UninitialisedVariable",
                 "INITIALISATION leaves variable '" + id + "' unbound"), id_(id) {}
    const std::string& identifier() const { return id_; }

private:
    std::string id_;
};

struct MissingIdentifierError : BError {
    explicit MissingIdentifierError(const std::string& id)
        : BError(ErrorClass::Input, "MissingIdentifier",
                 "state file does not bind '" + id + "'") {}
};

struct OperationNotEnabledError : BError {
    OperationNotEnabledError(std::size_t step, const std::string& m)
        : BError(ErrorClass::Evaluation, "OperationNotEnabled",
                 "step " + std::to_string(step) + ": " + m) {}
};

struct NoMatchingSuccessorError : BError {
    NoMatchingSuccessorError(std::size_t step, const std::string& m)
        : BError(ErrorClass::Evaluation, "NoMatchingSuccessor",
                 "step " + std::to_string(step) + ": " + m) {}
};

} // namespace bcheck
