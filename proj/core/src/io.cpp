#include "toughwalks/io.hpp"

#include <charconv>
#include <vector>

#include "toughwalks/error.hpp"

namespace toughwalks {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::size_t parse_count(std::string_view word, std::size_t line) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || end != word.data() + word.size()) {
    throw ParseError(ErrorCode::ParseError, line,
                     "expected a non-negative integer, got '" + std::string(word) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto cut = text.find('\n');
    const std::string_view line = text.substr(0, cut);
    text = cut == std::string_view::npos ? std::string_view{} : text.substr(cut + 1);
    auto words = split_words(line);
    if (!words.empty()) lines.emplace_back(number, std::move(words));
  }
  if (lines.empty()) throw ParseError(ErrorCode::ParseError, 1, "missing 'n m' header");

  const auto& [header_line, header] = lines.front();
  if (header.size() != 2) {
    throw ParseError(ErrorCode::ParseError, header_line, "header must be 'n m'");
  }
  const std::size_t n = parse_count(header[0], header_line);
  const std::size_t m = parse_count(header[1], header_line);
  if (lines.size() - 1 != m) {
    throw ParseError(ErrorCode::ParseError, lines.back().first,
                     "header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1));
  }

  std::vector<std::vector<bool>> seen(n);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [line, words] = lines[i];
    if (words.size() != 2) throw ParseError(ErrorCode::ParseError, line, "expected 'u v'");
    const std::size_t u = parse_count(words[0], line);
    const std::size_t v = parse_count(words[1], line);
    if (u >= n || v >= n) {
      throw ParseError(ErrorCode::VertexOutOfRange, line,
                       "vertex out of range for n = " + std::to_string(n));
    }
    if (u == v) throw ParseError(ErrorCode::SelfLoop, line, "self-loop at " + std::to_string(u));
    const Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (seen[e.u].empty()) seen[e.u].assign(n, false);
    if (seen[e.u][e.v]) {
      throw ParseError(ErrorCode::DuplicateEdge, line,
                       "duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    seen[e.u][e.v] = true;
    edges.push_back(e);
  }
  return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
  const auto byte = static_cast<unsigned char>(c);
  if (byte < 63 || byte > 126) {
    throw ParseError(ErrorCode::ParseError, 1,
                     "illegal graph6 byte " + std::to_string(static_cast<int>(byte)));
  }
  return byte - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError(ErrorCode::ParseError, 1, "empty graph6 string");

  std::size_t pos = 0;
  const auto take = [&]() {
    if (pos >= text.size()) throw ParseError(ErrorCode::ParseError, 1, "truncated graph6 string");
    return sextet(text[pos++]);
  };
  std::size_t n = 0;
  const int first = take();
  if (first < 63) {
    n = static_cast<std::size_t>(first);
  } else {
    const int width = pos < text.size() && text[pos] == '~' ? (++pos, 6) : 3;
    for (int i = 0; i < width; ++i) n = (n << 6) | static_cast<std::size_t>(take());
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = pos + (bits + 5) / 6;
  if (text.size() != expected) {
    throw ParseError(ErrorCode::ParseError, 1,
                     "graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(expected - pos));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  int chunk = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      if (bit % 6 == 0) chunk = take();
      if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.n();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n < 258048) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int chunk = 0;
  std::size_t bit = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      if (g.adjacent(u, v)) chunk |= 1 << (5 - bit % 6);
      if (bit % 6 == 5) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
      }
    }
  }
  if (bit % 6 != 0) out.push_back(static_cast<char>(chunk + kBias));
  return out;
}

}  // namespace toughwalks
