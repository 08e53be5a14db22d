#include <charconv>
#include <fstream>
#include <sstream>

#include "clausesearch/cnf.hpp"
#include "clausesearch/error.hpp"

namespace clausesearch {
namespace {

constexpr int kMaxVariables = 63;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view token, long long& value) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& what) {
  fail(ErrorKind::InvalidInstance,
       "dimacs line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  std::vector<std::string> comments;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;
  long long n = -1;
  long long m = -1;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == 'c') {
      std::string_view body = line.substr(1);
      if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
      comments.emplace_back(body);
      continue;
    }
    if (line.front() == '%') break;  // SATLIB end marker
    if (line.front() == 'p') {
      if (n >= 0) malformed(line_no, "duplicate header");
      const auto tokens = split_ws(line);
      if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "cnf" ||
          !to_int(tokens[2], n) || !to_int(tokens[3], m)) {
        malformed(line_no, "malformed header, expected 'p cnf <n> <m>'");
      }
      if (n < 1 || m < 1) malformed(line_no, "header needs n >= 1 and m >= 1");
      if (n > kMaxVariables) {
        fail(ErrorKind::Guard, "n = " + std::to_string(n) +
                                   " exceeds the supported maximum of " +
                                   std::to_string(kMaxVariables));
      }
      continue;
    }
    if (n < 0) malformed(line_no, "clause data before 'p cnf' header");

    for (std::string_view token : split_ws(line)) {
      long long value = 0;
      if (!to_int(token, value)) {
        malformed(line_no, "bad literal '" + std::string(token) + "'");
      }
      if (value == 0) {
        if (pending.empty()) malformed(line_no, "empty clause");
        if (static_cast<long long>(clauses.size()) >= m) {
          malformed(line_no, "clause count mismatch: more than " +
                                 std::to_string(m) + " clauses");
        }
        try {
          clauses.emplace_back(std::move(pending));
        } catch (const Error& e) {
          malformed(line_no, e.what());
        }
        pending.clear();
        continue;
      }
      const long long var = value < 0 ? -value : value;
      if (var > n) {
        malformed(line_no, "variable index " + std::to_string(var) +
                               " out of range (n = " + std::to_string(n) + ")");
      }
      pending.push_back(Literal{static_cast<int>(var), value < 0});
    }
  }

  if (n < 0) fail(ErrorKind::InvalidInstance, "missing 'p cnf' header");
  if (!pending.empty()) {
    fail(ErrorKind::InvalidInstance, "last clause is not terminated by 0");
  }
  if (static_cast<long long>(clauses.size()) != m) {
    fail(ErrorKind::InvalidInstance,
         "clause count mismatch: header declares " + std::to_string(m) +
             ", found " + std::to_string(clauses.size()));
  }
  CnfFormula f(static_cast<int>(n), std::move(clauses));
  f.comments() = std::move(comments);
  return f;
}

CnfFormula read_dimacs_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Usage, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dimacs(buffer.str());
}

std::string serialize_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  for (const std::string& c : f.comments()) {
    out << 'c';
    if (!c.empty()) out << ' ' << c;
    out << '\n';
  }
  out << "p cnf " << f.num_variables() << ' ' << f.num_clauses() << '\n';
  for (const Clause& clause : f.clauses()) {
    for (const Literal& lit : clause.literals()) out << lit.dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

void write_dimacs_file(const CnfFormula& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Usage, "cannot write '" + path + "'");
  out << serialize_dimacs(f);
}

}  // namespace clausesearch
