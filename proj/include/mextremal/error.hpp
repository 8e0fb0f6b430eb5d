#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mextremal {

enum class ErrorKind {
    Loop,
    ColorOutOfRange,
    VertexOutOfRange,
    DuplicateEdge,
    SyntaxError,
    ColorCountMismatch,
    EmptyVertexSet,
    ImproperPartition,
    PatternHasNoEdge,
    OddR,
    NotCompleteBipartite,
    ExactTooLarge,
    LengthMismatch,
    ChiTooSmall,
    MOutOfRange,
    RegimeViolation,
    MatchingTooLarge,
    PartitionNotProperForCore,
    InvalidArgument,
    IoError,
};

auto to_string(ErrorKind kind) -> std::string_view;

/// Domain error carrying a machine-readable kind; what() holds the detail.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string & detail);

    auto kind() const noexcept -> ErrorKind { return _kind; }
    auto name() const -> std::string_view { return to_string(_kind); }
    auto detail() const -> const std::string & { return _detail; }

private:
    ErrorKind _kind;
    std::string _detail;
};

[[noreturn]] void fail(ErrorKind kind, const std::string & detail);

}
