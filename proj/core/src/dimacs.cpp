#include "rtl/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "rtl/error.hpp"

namespace rtl {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Formula read_dimacs(std::istream& in) {
  std::optional<std::size_t> declared_vars;
  std::size_t declared_clauses = 0;
  struct Named {
    std::size_t index;
    std::string name;
    std::size_t line;
  };
  std::vector<Named> named;
  std::vector<std::vector<long long>> clauses;
  std::vector<long long> pending;
  std::size_t pending_line = 0;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = trim(line);
    if (view.empty()) continue;
    if (view.front() == 'c') {
      auto t = tokens(view);
      if (t.size() >= 2 && t[0] == "c" && t[1] == "name") {
        if (t.size() < 4) throw ParseError(lineno, "name comment needs an index and a name");
        auto idx = to_int(t[2]);
        if (!idx || *idx <= 0) throw ParseError(lineno, "bad variable index in name comment");
        // The name is the rest of the line after the index token.
        auto start = static_cast<std::size_t>(t[3].data() - view.data());
        named.push_back({static_cast<std::size_t>(*idx), std::string(trim(view.substr(start))), lineno});
      }
      continue;
    }
    if (view.front() == '%') break;  // SATLIB trailer
    if (view.front() == 'p') {
      if (declared_vars) throw ParseError(lineno, "duplicate problem line");
      auto t = tokens(view);
      if (t.size() != 4 || t[0] != "p" || t[1] != "cnf") {
        throw ParseError(lineno, "expected 'p cnf <vars> <clauses>'");
      }
      auto v = to_int(t[2]);
      auto c = to_int(t[3]);
      if (!v || !c || *v < 0 || *c < 0) throw ParseError(lineno, "bad counts in problem line");
      declared_vars = static_cast<std::size_t>(*v);
      declared_clauses = static_cast<std::size_t>(*c);
      continue;
    }
    if (!declared_vars) throw ParseError(lineno, "clause before problem line");
    for (auto tok : tokens(view)) {
      auto lit = to_int(tok);
      if (!lit) throw ParseError(lineno, "bad literal '" + std::string(tok) + "'");
      if (*lit == 0) {
        clauses.push_back(std::move(pending));
        pending.clear();
        continue;
      }
      const auto var = static_cast<std::size_t>(*lit < 0 ? -*lit : *lit);
      if (var > *declared_vars) {
        throw ParseError(lineno, "literal " + std::string(tok) + " exceeds declared variable count");
      }
      if (pending.empty()) pending_line = lineno;
      pending.push_back(*lit);
    }
  }
  if (!declared_vars) throw ParseError(lineno, "missing problem line");
  if (!pending.empty()) throw ParseError(pending_line, "clause not terminated by 0");
  if (clauses.size() != declared_clauses) {
    throw ParseError(lineno, "header declares " + std::to_string(declared_clauses) +
                                 " clauses, found " + std::to_string(clauses.size()));
  }

  std::vector<std::string> names(*declared_vars);
  std::unordered_set<std::string> used;
  for (const auto& n : named) {
    if (n.index > names.size()) {
      throw ParseError(n.line, "name comment for undeclared variable " + std::to_string(n.index));
    }
    if (!names[n.index - 1].empty()) throw ParseError(n.line, "variable named twice");
    if (!used.insert(n.name).second) throw ParseError(n.line, "duplicate variable name '" + n.name + "'");
    names[n.index - 1] = n.name;
  }
  Formula f;
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::string n = names[i];
    if (n.empty()) {
      n = "x" + std::to_string(i + 1);
      if (used.contains(n)) throw ParseError(lineno, "synthetic name '" + n + "' collides with a given name");
    }
    f.add_var(n);
  }
  for (const auto& c : clauses) {
    std::vector<Literal> lits;
    lits.reserve(c.size());
    for (auto l : c) {
      lits.emplace_back(static_cast<Var>((l < 0 ? -l : l) - 1), l < 0);
    }
    f.add_clause(Clause(std::move(lits)));
  }
  return f;
}

Formula read_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  return read_dimacs(in);
}

Formula read_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const Formula& f) {
  for (std::size_t i = 0; i < f.num_vars(); ++i) {
    out << "c name " << (i + 1) << ' ' << f.names()[i] << '\n';
  }
  out << "p cnf " << f.num_vars() << ' ' << f.size() << '\n';
  for (const auto& c : f.clauses()) {
    for (Literal l : c) {
      out << (l.negative() ? "-" : "") << (l.var() + 1) << ' ';
    }
    out << "0\n";
  }
}

void write_dimacs_file(const std::filesystem::path& path, const Formula& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  write_dimacs(out, f);
}

std::string to_dimacs(const Formula& f) {
  std::ostringstream out;
  write_dimacs(out, f);
  return out.str();
}

}  // namespace rtl
