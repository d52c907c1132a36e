#include "reldp/instance/dimacs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "reldp/error.hpp"

namespace reldp {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Non-empty, non-comment lines up to an optional `%` terminator.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split_ws(text.substr(pos, end - pos));
    pos = end + 1;
    if (tokens.empty()) continue;
    if (tokens[0][0] == 'c') continue;
    if (tokens[0][0] == '%') break;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

std::int64_t to_int(std::string_view tok, std::size_t line) {
  std::int64_t v = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ParseError("expected an integer, got '" + std::string(tok) + "'", line);
  return v;
}

int to_count(std::string_view tok, std::size_t line, const char* what) {
  const auto v = to_int(tok, line);
  if (v < 0 || v > std::numeric_limits<int>::max())
    throw ParseError(std::string(what) + " out of range: " + std::string(tok), line);
  return static_cast<int>(v);
}

void warn(Warnings* w, std::string msg) {
  if (w) w->push_back(std::move(msg));
}

struct Header {
  std::size_t line = 0;
  std::vector<std::string_view> fields;
};

// Collects clause lines after a `p <format>` header. When `weighted`, each
// clause starts with a weight token that is returned alongside it.
struct RawClause {
  std::int64_t weight;
  Clause lits;
  std::size_t line;
};

std::vector<RawClause> read_clauses(const std::vector<Line>& lines, std::string_view format, std::size_t header_fields,
                                    bool weighted, Header& header, Warnings* warnings) {
  std::vector<RawClause> out;
  bool open = false;
  RawClause current{0, {}, 0};
  std::int64_t num_vars = 0;
  for (const auto& line : lines) {
    if (line.tokens[0] == "p") {
      if (header.line != 0) throw ParseError("duplicate problem line", line.number);
      if (line.tokens.size() != header_fields + 2 || line.tokens[1] != format)
        throw ParseError("expected 'p " + std::string(format) + "' header with " + std::to_string(header_fields) +
                             " fields",
                         line.number);
      header.line = line.number;
      header.fields.assign(line.tokens.begin() + 2, line.tokens.end());
      num_vars = to_count(header.fields[0], line.number, "variable count");
      to_count(header.fields[1], line.number, "clause count");
      continue;
    }
    if (header.line == 0) throw ParseError("clause data before problem line", line.number);
    for (auto tok : line.tokens) {
      const auto v = to_int(tok, line.number);
      if (!open) {
        current = RawClause{1, {}, line.number};
        open = true;
        if (weighted) {
          if (v <= 0) throw ParseError("clause weight must be positive", line.number);
          current.weight = v;
          continue;
        }
      }
      if (v == 0) {
        out.push_back(std::move(current));
        open = false;
        continue;
      }
      if (v < -num_vars || v > num_vars)
        throw ParseError("literal " + std::string(tok) + " outside 1.." + std::to_string(num_vars), line.number);
      current.lits.push_back(static_cast<int>(v));
    }
  }
  if (header.line == 0) throw ParseError("missing problem line");
  if (open) {
    warn(warnings, "line " + std::to_string(current.line) + ": final clause is not terminated by 0");
    if (weighted && current.lits.empty())
      throw ParseError("weight without clause", current.line);
    out.push_back(std::move(current));
  }
  const auto declared = to_count(header.fields[1], header.line, "clause count");
  if (static_cast<std::size_t>(declared) != out.size())
    warn(warnings, "header declares " + std::to_string(declared) + " clauses, found " + std::to_string(out.size()));
  return out;
}

}  // namespace

CnfFormula parse_dimacs_cnf(std::string_view text, Warnings* warnings) {
  Header header;
  auto raw = read_clauses(content_lines(text), "cnf", 2, false, header, warnings);
  CnfFormula f;
  f.num_vars = to_count(header.fields[0], header.line, "variable count");
  f.clauses.reserve(raw.size());
  for (auto& c : raw) {
    normalize_clause(c.lits);
    f.clauses.push_back(std::move(c.lits));
  }
  return f;
}

PartialMaxSatInstance parse_wdimacs(std::string_view text, Warnings* warnings) {
  Header header;
  auto raw = read_clauses(content_lines(text), "wcnf", 3, true, header, warnings);
  const auto top = to_int(header.fields[2], header.line);
  if (top <= 1) throw ParseError("top weight must exceed 1", header.line);
  PartialMaxSatInstance inst;
  inst.hard.num_vars = to_count(header.fields[0], header.line, "variable count");
  for (auto& c : raw) {
    normalize_clause(c.lits);
    if (c.weight == top)
      inst.hard.clauses.push_back(std::move(c.lits));
    else if (c.weight == 1)
      inst.soft.push_back(std::move(c.lits));
    else
      throw ParseError("weight " + std::to_string(c.weight) + " is neither 1 nor top (" + std::to_string(top) +
                           "); only unweighted partial MaxSAT is supported",
                       c.line);
  }
  return inst;
}

Graph parse_dimacs_graph(std::string_view text, Warnings* warnings) {
  const auto lines = content_lines(text);
  std::size_t header_line = 0;
  Graph g;
  int declared_edges = 0;
  std::size_t seen = 0;
  for (const auto& line : lines) {
    const auto& t = line.tokens;
    if (t[0] == "p") {
      if (header_line != 0) throw ParseError("duplicate problem line", line.number);
      if (t.size() != 4 || (t[1] != "edge" && t[1] != "tw" && t[1] != "col"))
        throw ParseError("expected 'p edge|tw|col <vertices> <edges>'", line.number);
      header_line = line.number;
      g = Graph(to_count(t[2], line.number, "vertex count"));
      declared_edges = to_count(t[3], line.number, "edge count");
      continue;
    }
    if (header_line == 0) throw ParseError("edge data before problem line", line.number);
    std::size_t first = (t[0] == "e") ? 1 : 0;
    if (t.size() != first + 2) throw ParseError("expected an edge 'e u v'", line.number);
    const auto u = to_int(t[first], line.number);
    const auto v = to_int(t[first + 1], line.number);
    if (u < 1 || v < 1 || u > g.num_vertices() || v > g.num_vertices())
      throw ParseError("edge endpoint outside 1.." + std::to_string(g.num_vertices()), line.number);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line.number);
    if (!g.add_edge(static_cast<int>(u), static_cast<int>(v)))
      warn(warnings, "line " + std::to_string(line.number) + ": duplicate edge");
    ++seen;
  }
  if (header_line == 0) throw ParseError("missing problem line");
  if (static_cast<std::size_t>(declared_edges) != seen)
    warn(warnings, "header declares " + std::to_string(declared_edges) + " edges, found " + std::to_string(seen));
  return g;
}

namespace {

void write_clause(std::ostringstream& os, const Clause& c) {
  for (int lit : c) os << lit << ' ';
  os << "0\n";
}

}  // namespace

std::string write_dimacs_cnf(const CnfFormula& f) {
  std::ostringstream os;
  os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) write_clause(os, c);
  return os.str();
}

std::string write_wdimacs(const PartialMaxSatInstance& inst) {
  const std::size_t top = std::max<std::size_t>(inst.soft.size() + 1, 2);
  std::ostringstream os;
  os << "p wcnf " << inst.num_vars() << ' ' << inst.hard.clauses.size() + inst.soft.size() << ' ' << top << '\n';
  for (const auto& c : inst.hard.clauses) {
    os << top << ' ';
    write_clause(os, c);
  }
  for (const auto& c : inst.soft) {
    os << "1 ";
    write_clause(os, c);
  }
  return os.str();
}

std::string write_dimacs_graph(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace reldp
