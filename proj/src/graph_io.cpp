#include "spectral_kit/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace spectral_kit {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kGraph6MaxOrder = 258047;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long parse_int(std::string_view tok, int line) {
  long v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + std::string(tok) + "'");
  }
  return v;
}

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

}  // namespace

GraphFormat parse_format(const std::string& s) {
  if (s == "edgelist") return GraphFormat::EdgeList;
  if (s == "graph6") return GraphFormat::Graph6;
  throw std::invalid_argument("unknown format '" + s + "' (expected edgelist or graph6)");
}

std::string to_edgelist(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph parse_edgelist(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = tokens(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected two tokens");
    if (n < 0) {
      if (toks[0] != "n") throw ParseError("line " + std::to_string(line_no) + ": expected header 'n <count>'");
      const long count = parse_int(toks[1], line_no);
      if (count < 0 || count > 1'000'000) throw ParseError("invalid vertex count");
      n = static_cast<int>(count);
      continue;
    }
    const long u = parse_int(toks[0], line_no);
    const long v = parse_int(toks[1], line_no);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("line " + std::to_string(line_no) + ": vertex out of range");
    }
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ParseError("missing header 'n <count>'");
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw std::invalid_argument("graph too large for graph6");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6: character outside the printable range");
  }
  auto six = [&](std::size_t i) { return static_cast<int>(text[i]) - 63; };
  int n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = six(0);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw ParseError("graph6: unsupported size header");
    n = (six(1) << 12) | (six(2) << 6) | six(3);
    pos = 4;
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos != need) {
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                     std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = six(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0 && (six(text.size() - 1) & ((1 << (6 - bits % 6)) - 1)) != 0) {
    throw ParseError("graph6: non-zero padding bits");
  }
  return Graph(n, edges);
}

Graph parse_graph_text(std::string_view text) {
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto eol = rest.find('\n');
    std::string_view line = trim(rest.substr(0, eol));
    rest = eol == std::string_view::npos ? std::string_view{} : rest.substr(eol + 1);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == 'n' && (line.size() == 1 || std::isspace(static_cast<unsigned char>(line[1])))) {
      return parse_edgelist(text);
    }
    if (!trim(rest).empty()) throw ParseError("graph6 input must be a single line");
    return parse_graph6(line);
  }
  throw ParseError("no graph in input");
}

std::string format_graph(const Graph& g, GraphFormat f) {
  return f == GraphFormat::EdgeList ? to_edgelist(g) : to_graph6(g) + "\n";
}

}  // namespace spectral_kit
