#include "pmsp/graph_io.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "pmsp/errors.hpp"

namespace pmsp {

namespace {

constexpr const char* kHeader = ">>graph6<<";

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

int graph6_byte(const std::string& s, size_t i) {
  if (i >= s.size())
    throw ParseError("graph6: input truncated at byte " + std::to_string(i));
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126)
    throw ParseError("graph6: invalid character at byte " + std::to_string(i));
  return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
  std::string s = strip(text);
  if (s.rfind(kHeader, 0) == 0) s = s.substr(std::string(kHeader).size());
  if (s.empty()) throw ParseError("graph6: empty input");

  size_t pos = 0;
  long long n;
  if (graph6_byte(s, 0) == 63) {
    if (s.size() >= 2 && graph6_byte(s, 1) == 63)
      throw ParseError("graph6: vertex counts above 258047 are not supported");
    n = 0;
    for (size_t i = 1; i <= 3; ++i) n = (n << 6) | graph6_byte(s, i);
    pos = 4;
  } else {
    n = graph6_byte(s, 0);
    pos = 1;
  }

  long long nbits = n * (n - 1) / 2;
  size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
  if (s.size() != pos + nbytes)
    throw ParseError("graph6: expected " + std::to_string(pos + nbytes) +
                     " bytes for n=" + std::to_string(n) + ", got " +
                     std::to_string(s.size()));

  Graph g(static_cast<int>(n));
  long long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int byte = graph6_byte(s, pos + static_cast<size_t>(bit / 6));
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  }
  // Trailing pad bits must be zero in a well-formed encoding.
  for (long long b = bit; b < static_cast<long long>(nbytes) * 6; ++b) {
    int byte = graph6_byte(s, pos + static_cast<size_t>(b / 6));
    if ((byte >> (5 - b % 6)) & 1)
      throw ParseError("graph6: nonzero padding bit in byte " +
                       std::to_string(pos + static_cast<size_t>(b / 6)));
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw SizeError("graph6: vertex counts above 258047 are not supported");
  }
  int acc = 0, nb = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nb = 0;
      }
    }
  }
  if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_n = false;
  long long n = 0;
  std::vector<std::pair<int, int>> edges;
  long long maxlabel = -1;
  bool saw_content = false;

  while (std::getline(in, line)) {
    ++lineno;
    std::string t = strip(line);
    if (t.empty()) continue;
    std::istringstream ls(t);
    std::string a, b, extra;
    ls >> a >> b;
    if (ls >> extra)
      throw ParseError("edge list line " + std::to_string(lineno) +
                       ": expected two fields, got more");
    if (!saw_content && a == "n") {
      saw_content = true;
      try {
        size_t used = 0;
        n = std::stoll(b, &used);
        if (used != b.size()) throw std::invalid_argument(b);
      } catch (const std::exception&) {
        throw ParseError("edge list line " + std::to_string(lineno) +
                         ": bad vertex count '" + b + "'");
      }
      if (n < 0)
        throw ParseError("edge list line " + std::to_string(lineno) +
                         ": negative vertex count");
      have_n = true;
      continue;
    }
    saw_content = true;
    long long u, v;
    try {
      size_t ua = 0, ub = 0;
      u = std::stoll(a, &ua);
      v = std::stoll(b, &ub);
      if (ua != a.size() || b.empty() || ub != b.size())
        throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("edge list line " + std::to_string(lineno) +
                       ": expected two integers, got '" + t + "'");
    }
    if (u < 0 || v < 0)
      throw ParseError("edge list line " + std::to_string(lineno) +
                       ": negative vertex label");
    if (u == v)
      throw ParseError("edge list line " + std::to_string(lineno) +
                       ": self-loop at vertex " + std::to_string(u));
    if (have_n && (u >= n || v >= n))
      throw ParseError("edge list line " + std::to_string(lineno) +
                       ": vertex label out of range [0, " + std::to_string(n) +
                       ")");
    for (const auto& e : edges)
      if ((e.first == u && e.second == v) || (e.first == v && e.second == u))
        throw ParseError("edge list line " + std::to_string(lineno) +
                         ": duplicate edge " + std::to_string(u) + " " +
                         std::to_string(v));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    maxlabel = std::max({maxlabel, u, v});
  }
  if (!have_n) n = maxlabel + 1;
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph parse_graph(const std::string& text, GraphFormat format) {
  return format == GraphFormat::kGraph6 ? parse_graph6(text)
                                        : parse_edge_list(text);
}

}  // namespace pmsp
