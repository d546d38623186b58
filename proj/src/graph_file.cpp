#include "gainrank/graph_file.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace gainrank {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

std::string shortest(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

std::string_view to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::Malformed: return "Malformed";
    case ParseErrorKind::NonUnitGain: return "NonUnitGain";
    case ParseErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ParseErrorKind::VertexOutOfRange: return "VertexOutOfRange";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& message)
    : Error(ErrorCode::ParseError,
            (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      line_(line) {}

UnitGain parse_gain_token(std::string_view token, int line) {
  if (token.starts_with("t:")) {
    double t = 0;
    if (!parse_number(token.substr(2), t) || !std::isfinite(t)) {
      throw ParseError(ParseErrorKind::Malformed, line, "bad angle '" + std::string(token) + "'");
    }
    return make_gain(t);
  }
  if (token.starts_with("c:")) {
    const auto body = token.substr(2);
    const auto comma = body.find(',');
    double re = 0, im = 0;
    if (comma == std::string_view::npos || !parse_number(body.substr(0, comma), re) ||
        !parse_number(body.substr(comma + 1), im) || !std::isfinite(re) || !std::isfinite(im)) {
      throw ParseError(ParseErrorKind::Malformed, line, "bad complex gain '" + std::string(token) + "'");
    }
    try {
      return UnitGain::from_complex({re, im}, kFileGainTol);
    } catch (const Error&) {
      throw ParseError(ParseErrorKind::NonUnitGain, line,
                       "gain '" + std::string(token) + "' is not of unit modulus");
    }
  }
  throw ParseError(ParseErrorKind::Malformed, line, "gain must start with t: or c:");
}

std::string format_gain(UnitGain gain) {
  double t = std::atan2(gain.im(), gain.re()) / (2.0 * std::numbers::pi);
  if (t < 0) t += 1.0;
  if (t >= 1.0) t = 0.0;
  const auto try_turns = [&](double candidate) -> std::optional<std::string> {
    const std::string text = shortest(candidate);
    double back = 0;
    if (parse_number(std::string_view(text), back) && make_gain(back) == gain) return "t:" + text;
    return std::nullopt;
  };
  // Gains built from fractions of a turn are found by their small
  // denominators; anything else falls back to the nearest angle.
  for (int d = 1; d <= 360; ++d) {
    const double k = std::round(t * d);
    if (std::abs(t * d - k) > 1e-9) continue;
    if (auto text = try_turns(k / d == 1.0 ? 0.0 : k / d)) return *text;
  }
  if (auto text = try_turns(t)) return *text;
  return "c:" + shortest(gain.re()) + "," + shortest(gain.im());
}

GainGraph parse_graph(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }

  if (lines.empty() || trim(lines[0]) != "# gaingraph v1") {
    throw ParseError(ParseErrorKind::Malformed, 1, "expected header '# gaingraph v1'");
  }

  int n = -1;
  std::vector<GainEdge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    const auto line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const auto tok = split_ws(line);
    if (n < 0) {
      if (tok.size() != 2 || tok[0] != "n" || !parse_number(tok[1], n) || n < 0) {
        throw ParseError(ParseErrorKind::Malformed, lineno, "expected 'n <count>'");
      }
      continue;
    }
    if (tok.size() != 4 || tok[0] != "e") {
      throw ParseError(ParseErrorKind::Malformed, lineno, "expected 'e <u> <v> <gain>'");
    }
    Vertex u = 0, v = 0;
    if (!parse_number(tok[1], u) || !parse_number(tok[2], v)) {
      throw ParseError(ParseErrorKind::Malformed, lineno, "vertices must be integers");
    }
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(ParseErrorKind::VertexOutOfRange, lineno,
                       "vertex outside 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError(ParseErrorKind::Malformed, lineno, "self-loop");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw ParseError(ParseErrorKind::DuplicateEdge, lineno,
                       "edge " + std::to_string(u) + "-" + std::to_string(v) + " repeated");
    }
    edges.push_back({u, v, parse_gain_token(tok[3], lineno)});
  }
  if (n < 0) throw ParseError(ParseErrorKind::Malformed, static_cast<int>(lines.size()), "missing 'n' line");
  return GainGraph(n, edges);
}

std::string emit_graph(const GainGraph& g) {
  std::ostringstream out;
  out << "# gaingraph v1\n" << "n " << g.order() << "\n";
  for (const GainEdge& e : g.edges()) out << "e " << e.u << " " << e.v << " " << format_gain(e.gain) << "\n";
  return out.str();
}

}  // namespace gainrank
