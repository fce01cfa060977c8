#pragma once

// DIMACS CNF reader/writer. Variable names travel in comment lines of the
// form `c name <index> <name>`; unnamed variables read back as "x<index>".

#include <filesystem>
#include <iosfwd>
#include <string>

#include "rtl/cnf.hpp"

namespace rtl {

/// Throws ParseError (with the offending line number) on malformed input.
Formula read_dimacs(std::istream& in);
Formula read_dimacs_file(const std::filesystem::path& path);
Formula read_dimacs_string(const std::string& text);

/// Writes a name line for every variable, the header, then one clause per
/// line in formula order. Output is a pure function of the formula.
void write_dimacs(std::ostream& out, const Formula& f);
void write_dimacs_file(const std::filesystem::path& path, const Formula& f);
std::string to_dimacs(const Formula& f);

}  // namespace rtl
