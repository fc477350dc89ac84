#ifndef PENCILS_ERRORS_HPP
#define PENCILS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pencils {

/// Bad user input: malformed expressions, invalid fields, degenerate pencils.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Positioned syntax error from the expression parser.
class SyntaxError : public InputError {
public:
    SyntaxError(int line, int column, const std::string& msg)
        : InputError("syntax error at " + std::to_string(line) + ":" +
                     std::to_string(column) + ": " + msg),
          line(line), column(column) {}
    int line;
    int column;
};

/// The two generators share a positive-degree factor.
class FixedComponentError : public InputError {
public:
    explicit FixedComponentError(const std::string& msg) : InputError(msg) {}
};

/// A base point is not rational over the declared field. `witness` is a
/// printable polynomial a root of which must be adjoined.
class ExtensionRequiredError : public std::runtime_error {
public:
    explicit ExtensionRequiredError(const std::string& witness)
        : std::runtime_error("base point not rational over the declared field; "
                             "adjoin a root of: " + witness),
          witness(witness) {}
    std::string witness;
};

/// An internal invariant failed; indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

/// Resolution exceeded the depth guard (should be unreachable).
class NonTerminationError : public InternalError {
public:
    explicit NonTerminationError(const std::string& msg) : InternalError(msg) {}
};

}  // namespace pencils

#endif
