#include "bitmetric/io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "bitmetric/error.hpp"

namespace bitmetric {

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

void for_each_payload_line(std::istream& in, const std::string& source_name,
                           const std::function<void(const std::string&, std::size_t)>& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string payload = strip(line);
    if (payload.empty()) continue;
    try {
      fn(payload, line_no);
    } catch (const ParseError& e) {
      throw ParseError(source_name + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

}  // namespace

PrefixSet load_prefix_set(std::istream& in, const std::string& source_name) {
  PrefixSet set;
  for_each_payload_line(in, source_name, [&set](const std::string& payload, std::size_t) {
    if (payload.find_first_of(" \t") != std::string::npos)
      throw ParseError("bad prefix '" + payload + "': expected a single token");
    set.insert(Prefix::parse(payload));
  });
  return set;
}

std::vector<Ball> load_balls(std::istream& in, const std::string& source_name) {
  std::vector<Ball> balls;
  for_each_payload_line(in, source_name, [&balls](const std::string& payload, std::size_t) {
    balls.push_back(Ball::parse(payload));
  });
  return balls;
}

std::vector<OpenInterval> load_intervals(std::istream& in, const std::string& source_name) {
  std::vector<OpenInterval> intervals;
  for_each_payload_line(in, source_name, [&intervals](const std::string& payload, std::size_t) {
    std::istringstream toks(payload);
    std::string lo_tok, hi_tok, extra;
    if (!(toks >> lo_tok >> hi_tok) || (toks >> extra))
      throw ParseError("bad interval '" + payload + "': expected 'LO HI'");
    const Rational lo = Rational::parse(lo_tok);
    const Rational hi = Rational::parse(hi_tok);
    if (!(lo < hi))
      throw ParseError("bad interval '" + payload + "': LO must be below HI");
    intervals.emplace_back(lo, hi);
  });
  return intervals;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

template <typename Fn>
auto load_from_file(const std::filesystem::path& path, Fn loader) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path.string() + "'");
  return loader(in, path.string());
}

}  // namespace

PrefixSet load_prefix_set_file(const std::filesystem::path& path) {
  return load_from_file(path, [](std::istream& in, const std::string& n) {
    return load_prefix_set(in, n);
  });
}

std::vector<Ball> load_balls_file(const std::filesystem::path& path) {
  return load_from_file(path, [](std::istream& in, const std::string& n) {
    return load_balls(in, n);
  });
}

std::vector<OpenInterval> load_intervals_file(const std::filesystem::path& path) {
  return load_from_file(path, [](std::istream& in, const std::string& n) {
    return load_intervals(in, n);
  });
}

bool looks_like_dimacs(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    const char c = line[first];
    if (c == 'c' || c == 'p') return true;
    return false;  // '#', 0/1 or "e": a prefix-set file
  }
  return false;
}

}  // namespace bitmetric
