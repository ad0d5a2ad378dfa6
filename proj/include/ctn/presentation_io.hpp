#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>

#include "ctn/tnorm.hpp"

namespace ctn {

/// Malformed presentation text; `line` is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Line-oriented format:
///
///   tnorm v1
///   piece 1/4 1/2 P
///   piece 1/2 3/4 L
///
/// or a single "family limit-left | limit-right | theta <order> | cantor <system>"
/// line instead of the pieces. Blank lines and '#' comments are ignored.
/// Invalid piece geometry is reported as a ParseError too.
TNorm parse_presentation(std::istream& in);
TNorm parse_presentation_string(const std::string& text);
TNorm load_presentation(const std::filesystem::path& path);

/// Inverse of parse_presentation for finite presentations.
std::string format_presentation(const FinitePresentation& p);

}  // namespace ctn
