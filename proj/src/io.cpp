#include "strictpat/io.hpp"

#include <fstream>
#include <sstream>

#include "strictpat/text.hpp"

namespace strictpat {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) { return line.substr(0, line.find('%')); }

std::set<std::string> names_of(const FlatContext& psi) {
  std::set<std::string> s;
  for (const auto& b : psi) s.insert(b.name);
  return s;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SimpleLinearPattern parse_pattern(const Signature& sig, const FlatContext& psi, const Type& a,
                                  const std::string& text) {
  auto known = names_of(psi);
  ParseOptions opts;
  opts.known_free = &known;
  return fully_apply(sig, psi, parse_term(text, sig, opts), a);
}

PatternSet parse_set_file(const Signature& sig, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<FlatContext> psi;
  std::optional<Type> type;
  std::vector<Term> members;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    try {
      if (line.rfind("ctx:", 0) == 0) {
        psi = parse_context(line.substr(4), sig);
      } else if (line.rfind("type:", 0) == 0) {
        type = parse_type(line.substr(5), sig);
      } else {
        if (!type) throw Error("pattern before the 'type:' header");
        if (!psi) psi = FlatContext{};
        members.push_back(parse_pattern(sig, *psi, *type, line).term);
      }
    } catch (const Error& e) {
      throw Error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!type) throw Error("set file has no 'type:' header");
  if (!psi) psi = FlatContext{};
  return normalize(PatternSet{*psi, *type, members});
}

std::vector<Clause> parse_program(const Signature& sig, const FlatContext& psi,
                                  const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Clause> out;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw Error("line " + std::to_string(lineno) + ": " + msg);
    };
    if (line.back() != '.') fail("clause must end with '.'");
    line = trim(line.substr(0, line.size() - 1));
    auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected 'name : pred PATTERN'");
    std::string name = trim(line.substr(0, colon));
    std::string rest = trim(line.substr(colon + 1));
    auto space = rest.find_first_of(" \t(");
    if (name.empty() || space == std::string::npos) fail("expected 'name : pred PATTERN'");
    auto known = names_of(psi);
    ParseOptions opts;
    opts.known_free = &known;
    std::optional<Term> head;
    try {
      head = parse_term(rest.substr(space), sig, opts);
    } catch (const Error& e) {
      fail(e.what());
    }
    out.push_back({name, rest.substr(0, space), *head});
  }
  return out;
}

std::string print_clause(const Clause& c) {
  return c.name + " : " + c.predicate + " (" + print_term(c.head) + ").";
}

}  // namespace strictpat
