#pragma once

#include <string>
#include <string_view>

#include "gainrank/error.hpp"
#include "gainrank/graph.hpp"

namespace gainrank {

/// Text format:
///
///   # gaingraph v1
///   n <count>
///   e <u> <v> <gain>
///
/// where <gain> is t:<turns> (exp(2 pi i turns)) or c:<re>,<im> with
/// ||z| - 1| <= 1e-9. Blank lines and further '#' lines are ignored.

enum class ParseErrorKind { Malformed, NonUnitGain, DuplicateEdge, VertexOutOfRange };

std::string_view to_string(ParseErrorKind kind) noexcept;

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& message);

  ParseErrorKind kind() const noexcept { return kind_; }
  /// 1-based line number; 0 when not tied to a line.
  int line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

inline constexpr double kFileGainTol = 1e-9;

/// Parses one gain token (t:... or c:...). `line` only labels errors.
UnitGain parse_gain_token(std::string_view token, int line = 0);
/// Shortest t: form that reproduces the gain bit for bit, else c: form.
std::string format_gain(UnitGain gain);

GainGraph parse_graph(std::string_view text);
std::string emit_graph(const GainGraph& g);

}  // namespace gainrank
