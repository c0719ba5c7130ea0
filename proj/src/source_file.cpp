#include "alfvac/source_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace alfvac {

namespace {

double parse_number(const std::string& token, std::size_t line) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value))
    throw parse_error(line, "not a finite number: '" + token + "'");
  return value;
}

}  // namespace

parse_error::parse_error(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

SourceDescription parse_sources(std::string_view text) {
  SourceDescription out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    const std::string& kind = tokens.front();
    if (kind == "charge") {
      if (tokens.size() != 5) throw parse_error(line, "expected 'charge q x y z'");
      electrostatics::PointCharge c;
      c.charge = parse_number(tokens[1], line);
      c.position = {parse_number(tokens[2], line), parse_number(tokens[3], line), parse_number(tokens[4], line)};
      out.charges.push_back(c);
    } else if (kind == "loop") {
      if (tokens.size() != 3) throw parse_error(line, "expected 'loop a I'");
      double a = parse_number(tokens[1], line);
      double current = parse_number(tokens[2], line);
      if (!(a > 0.0)) throw parse_error(line, "loop radius must be positive");
      out.loops.emplace_back(a, current);
    } else {
      throw parse_error(line, "unknown record '" + kind + "'");
    }
  }
  if (out.charges.empty() && out.loops.empty()) throw parse_error(0, "source description has no records");
  return out;
}

SourceDescription read_sources(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open source file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_sources(buffer.str());
}

}  // namespace alfvac
