#include "mextremal/error.hpp"

namespace mextremal {

auto to_string(ErrorKind kind) -> std::string_view
{
    switch (kind) {
        case ErrorKind::Loop: return "Loop";
        case ErrorKind::ColorOutOfRange: return "ColorOutOfRange";
        case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::ColorCountMismatch: return "ColorCountMismatch";
        case ErrorKind::EmptyVertexSet: return "EmptyVertexSet";
        case ErrorKind::ImproperPartition: return "ImproperPartition";
        case ErrorKind::PatternHasNoEdge: return "PatternHasNoEdge";
        case ErrorKind::OddR: return "OddR";
        case ErrorKind::NotCompleteBipartite: return "NotCompleteBipartite";
        case ErrorKind::ExactTooLarge: return "ExactTooLarge";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::ChiTooSmall: return "ChiTooSmall";
        case ErrorKind::MOutOfRange: return "MOutOfRange";
        case ErrorKind::RegimeViolation: return "RegimeViolation";
        case ErrorKind::MatchingTooLarge: return "MatchingTooLarge";
        case ErrorKind::PartitionNotProperForCore: return "PartitionNotProperForCore";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string & detail) :
    std::runtime_error(std::string{ to_string(kind) } + ": " + detail),
    _kind(kind),
    _detail(detail)
{
}

void fail(ErrorKind kind, const std::string & detail)
{
    throw Error{ kind, detail };
}

}
