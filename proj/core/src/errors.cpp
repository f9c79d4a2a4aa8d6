#include "cgame/errors.hpp"

namespace cgame {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownState: return "UnknownState";
    case ErrorKind::DuplicateState: return "DuplicateState";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::EmptyGame: return "EmptyGame";
    case ErrorKind::MissingOutgoingEdge: return "MissingOutgoingEdge";
    case ErrorKind::OmegaOnDiamond: return "OmegaOnDiamond";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PositiveFiniteDelta: return "PositiveFiniteDelta";
    case ErrorKind::InvalidVector: return "InvalidVector";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::TautologicalClause: return "TautologicalClause";
    case ErrorKind::VariableOverlap: return "VariableOverlap";
    case ErrorKind::AmbiguousStreettEdge: return "AmbiguousStreettEdge";
    case ErrorKind::MixedExtVector: return "MixedExtVector";
    case ErrorKind::ArenaTooLarge: return "ArenaTooLarge";
    case ErrorKind::TooManyPairs: return "TooManyPairs";
    case ErrorKind::TooManyVariables: return "TooManyVariables";
    case ErrorKind::ResamplingExhausted: return "ResamplingExhausted";
    case ErrorKind::NotOnePlayer: return "NotOnePlayer";
    case ErrorKind::NotDecreasing: return "NotDecreasing";
    case ErrorKind::OmegaInDistanceLabel: return "OmegaInDistanceLabel";
    case ErrorKind::AllStatesUnsafe: return "AllStatesUnsafe";
    }
    return "Unknown";
}

ErrorCategory category(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ArenaTooLarge:
    case ErrorKind::TooManyPairs:
    case ErrorKind::TooManyVariables:
    case ErrorKind::ResamplingExhausted:
        return ErrorCategory::Resource;
    case ErrorKind::NotOnePlayer:
    case ErrorKind::NotDecreasing:
    case ErrorKind::OmegaInDistanceLabel:
    case ErrorKind::AllStatesUnsafe:
        return ErrorCategory::Precondition;
    default:
        return ErrorCategory::Input;
    }
}

static std::string decorate(ErrorKind kind, const std::string& message, int line, int column)
{
    std::string out = to_string(kind);
    if (line > 0) {
        out += " at line " + std::to_string(line);
        if (column > 0) out += ", column " + std::to_string(column);
    }
    out += ": " + message;
    return out;
}

GameError::GameError(ErrorKind kind, const std::string& message, int line, int column)
    : std::runtime_error(decorate(kind, message, line, column)), kind_(kind), line_(line), column_(column)
{
}

}  // namespace cgame
