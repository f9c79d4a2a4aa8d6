#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cgame {

enum class ErrorKind : std::uint8_t {
    // malformed input
    SyntaxError,
    UnknownState,
    DuplicateState,
    DuplicateEdge,
    EmptyGame,
    MissingOutgoingEdge,
    OmegaOnDiamond,
    DimensionMismatch,
    PositiveFiniteDelta,
    InvalidVector,
    UnboundVariable,
    TautologicalClause,
    VariableOverlap,
    AmbiguousStreettEdge,
    MixedExtVector,
    // resource limits
    ArenaTooLarge,
    TooManyPairs,
    TooManyVariables,
    ResamplingExhausted,
    // precondition mismatches
    NotOnePlayer,
    NotDecreasing,
    OmegaInDistanceLabel,
    AllStatesUnsafe,
};

enum class ErrorCategory : std::uint8_t { Input, Resource, Precondition };

const char* to_string(ErrorKind kind);
ErrorCategory category(ErrorKind kind);

/// Every failure raised by the library. `line` and `column` are 1-based and
/// zero when the error is not tied to a text position.
class GameError : public std::runtime_error {
public:
    GameError(ErrorKind kind, const std::string& message, int line = 0, int column = 0);

    ErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    ErrorKind kind_;
    int line_;
    int column_;
};

}  // namespace cgame
