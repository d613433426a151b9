#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "bitmetric/balls.hpp"
#include "bitmetric/bar.hpp"
#include "bitmetric/interval.hpp"

namespace bitmetric {

// Line-oriented readers for the tool-facing file formats. In every format a
// '#' starts a comment and blank lines are skipped; parse failures raise
// ParseError with the source name, line number and offending token.

/// One prefix per line, "e" for the empty prefix.
PrefixSet load_prefix_set(std::istream& in, const std::string& source_name);
PrefixSet load_prefix_set_file(const std::filesystem::path& path);

/// One ball per line, "CENTER@RADIUS".
std::vector<Ball> load_balls(std::istream& in, const std::string& source_name);
std::vector<Ball> load_balls_file(const std::filesystem::path& path);

/// One interval per line, "LO HI" as rationals, e.g. "-1/8 5/8".
std::vector<OpenInterval> load_intervals(std::istream& in, const std::string& source_name);
std::vector<OpenInterval> load_intervals_file(const std::filesystem::path& path);

/// Whole-file read; throws ParseError when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// DIMACS files open with 'c' comments or the 'p cnf' header; prefix-set
/// files hold only 0/1/"e" tokens and '#' comments.
bool looks_like_dimacs(const std::string& content);

}  // namespace bitmetric
