#include "hyperspec/uhg_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace hyperspec {

namespace {

[[noreturn]] void bad_line(int lineno, const std::string& what) {
  fail(errc::parse_error, "line " + std::to_string(lineno) + ": " + what);
}

// Reads the next line that is not blank; returns false at EOF.
bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

std::vector<long long> parse_ints(const std::string& line, int lineno, size_t expect) {
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      bad_line(lineno, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size()) bad_line(lineno, "expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  if (out.size() != expect)
    bad_line(lineno, "expected " + std::to_string(expect) + " integers, got " +
                         std::to_string(out.size()));
  return out;
}

int narrow(long long v, int lineno, const std::string& what) {
  if (v < -1000000000LL || v > 1000000000LL) bad_line(lineno, what + " out of range");
  return static_cast<int>(v);
}

}  // namespace

Hypergraph read_uhg(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) fail(errc::parse_error, "empty input, expected `k n m` header");
  const auto header = parse_ints(line, lineno, 3);
  const int k = narrow(header[0], lineno, "k");
  const int n = narrow(header[1], lineno, "n");
  const int m = narrow(header[2], lineno, "m");
  if (m < 0) bad_line(lineno, "edge count m must be nonnegative");

  std::vector<std::vector<int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) {
    if (!next_content_line(in, line, lineno))
      fail(errc::parse_error, "unexpected end of input: expected " + std::to_string(m) +
                                  " edge lines, got " + std::to_string(j));
    const auto ids = parse_ints(line, lineno, static_cast<size_t>(k > 0 ? k : 0));
    std::vector<int> e;
    e.reserve(ids.size());
    for (long long v : ids) e.push_back(narrow(v, lineno, "vertex id"));
    edges.push_back(std::move(e));
  }
  if (next_content_line(in, line, lineno)) bad_line(lineno, "trailing content after last edge");
  return make_hypergraph(k, n, edges);
}

Hypergraph load_uhg(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  return read_uhg(in);
}

void write_uhg(std::ostream& out, const Hypergraph& g) {
  out << g.k() << ' ' << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) {
    for (size_t t = 0; t < e.size(); ++t) out << (t ? " " : "") << e[t];
    out << '\n';
  }
}

void save_uhg(const std::string& path, const Hypergraph& g) {
  std::ofstream out(path);
  if (!out) fail(errc::parse_error, "cannot open '" + path + "' for writing");
  write_uhg(out, g);
  out.flush();
  if (!out) fail(errc::parse_error, "write to '" + path + "' failed");
}

}  // namespace hyperspec
