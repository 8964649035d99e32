#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sphsys/system.hpp"

namespace sphsys {

/// Syntax or semantic error in a system block, with 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses every `system ... end` block in the text.
std::vector<SphericalSystem> parse_systems(const std::string& text);
/// Parses exactly one block.
SphericalSystem parse_system(const std::string& text);

/// Canonical block for the system, ending in a newline.
std::string print_system(const SphericalSystem& sys);

/// "a1+2*a2" style combination over `rank` simple roots; throws std::invalid_argument.
LatticeVector parse_combination(const std::string& text, int rank);

}  // namespace sphsys
