#pragma once

#include <string>
#include <string_view>

#include "msm/core.hpp"

namespace msm {

/// Malformed instance or map text. what() is "line L, column C: message".
class ParseError : public InputError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

/// Instance file:
///
///   msspace v1
///   points <n>
///   point <id>          (n lines, declaration order = point order)
///   sym on|off
///   val <x> <y> <z> <value>
///
/// '#' starts a comment; blank lines are ignored. Values are non-negative
/// decimals or fractions ("7", "3.5", "7/2"). With sym on every multiset
/// appears exactly once (any argument order); with sym off every ordered
/// triple does.
MsSpace parse_instance(std::string_view text);

/// Canonical text: points in order, then val lines for multisets x<=y<=z
/// (sym on) or all ordered triples (sym off), lexicographic.
std::string serialize_instance(const MsSpace& space);

/// Map file:
///
///   msmap v1
///   map <from> <to>     (exactly one line per point of the space)
SelfMap parse_map(std::string_view text, const MsSpace& space);
std::string serialize_map(const SelfMap& map, const MsSpace& space);

/// Reads a whole file; throws InputError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace msm
