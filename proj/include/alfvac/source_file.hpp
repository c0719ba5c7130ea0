#ifndef ALFVAC_SOURCE_FILE_HPP
#define ALFVAC_SOURCE_FILE_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alfvac/electrostatics.hpp"

namespace alfvac {

/// Source-description parse failure; `line()` is 1-based (0 when the
/// problem is not tied to one line).
class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Records of a source-description document:
///
///   # comment
///   charge q x y z     (coulombs, metres)
///   loop a I           (metres, amperes; loop in z = 0 about the origin)
struct SourceDescription {
  std::vector<electrostatics::PointCharge> charges;
  std::vector<electrostatics::CurrentLoop> loops;
};

SourceDescription parse_sources(std::string_view text);
SourceDescription read_sources(const std::filesystem::path& path);

}  // namespace alfvac

#endif
