#include <cctype>
#include <charconv>
#include <sstream>
#include <string>

#include "dnaprover/error.hpp"
#include "dnaprover/logic.hpp"

namespace dnaprover {
namespace {

bool valid_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string_view strip_comment(std::string_view line, char marker) {
  auto hash = line.find(marker);
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace

ClauseSet parse_clause_text(std::string_view text) {
  ClauseSet out;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip_comment(text.substr(offset, end - offset), '#');

    Clause clause;
    bool any = false;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      std::string_view token = line.substr(i, j - i);
      const bool negated = token.front() == '~';
      std::string_view name = negated ? token.substr(1) : token;
      if (!valid_name(name))
        throw ParseError("invalid literal '" + std::string(token) + "'", offset + i);
      clause.insert({std::string(name), negated});
      any = true;
      i = j;
    }
    if (any) out.insert(clause);
    offset = end + 1;
  }
  return out;
}

std::string format_clause_text(const ClauseSet& s) {
  std::string out;
  for (const auto& c : s) {
    bool first = true;
    for (const auto& l : c.literals()) {
      if (!first) out += ' ';
      first = false;
      out += to_string(l);
    }
    out += '\n';
  }
  return out;
}

ClauseSet parse_dimacs(std::string_view text) {
  ClauseSet out;
  Clause current;
  bool header = false;
  long declared_vars = -1;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(offset, end - offset));
    std::istringstream in(line);
    std::string first;
    if (!(in >> first) || first == "c" || first.front() == '%') {
      offset = end + 1;
      continue;
    }
    if (first == "p") {
      std::string fmt;
      long clauses = 0;
      if (header || !(in >> fmt >> declared_vars >> clauses) || fmt != "cnf")
        throw ParseError("malformed DIMACS header", offset);
      header = true;
      offset = end + 1;
      continue;
    }
    if (!header) throw ParseError("DIMACS clause before 'p cnf' header", offset);
    std::istringstream body(line);
    std::string tok;
    while (body >> tok) {
      long v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("invalid DIMACS literal '" + tok + "'", offset);
      if (v == 0) {
        out.insert(current);
        current = Clause{};
        continue;
      }
      const long var = v < 0 ? -v : v;
      if (declared_vars >= 0 && var > declared_vars)
        throw ParseError("DIMACS variable " + std::to_string(var) + " exceeds header", offset);
      current.insert({"x" + std::to_string(var), v < 0});
    }
    offset = end + 1;
  }
  if (!header) throw ParseError("missing DIMACS 'p cnf' header");
  if (!current.empty()) out.insert(current);
  return out;
}

}  // namespace dnaprover
