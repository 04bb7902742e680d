#include "toricmg/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

#include "toricmg/errors.hpp"

namespace toricmg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view token, long long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

constexpr int kMaxGraph6 = 62;

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  long long max_vertex = -1;
  long long declared = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto tokens = split_ws(trim(line.substr(1)));
      long long n = 0;
      if (tokens.size() == 2 && tokens[0] == "vertices" && parse_int(tokens[1], n) && n >= 0) declared = n;
      continue;
    }
    auto tokens = split_ws(line);
    long long u = 0, v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
      throw ParseError(line_no, "expected two vertex numbers");
    }
    if (u < 0 || v < 0 || u > INT32_MAX / 2 || v > INT32_MAX / 2) throw ParseError(line_no, "vertex out of range");
    if (u == v) throw Error(ErrorCode::LoopEdge, "line " + std::to_string(line_no) + ": loop at " + std::to_string(u));
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    max_vertex = std::max({max_vertex, u, v});
  }
  return Graph(static_cast<int>(std::max(max_vertex + 1, declared)), std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# vertices " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph6_line(std::string_view line) {
  line = trim(line);
  if (line.size() >= 2 && line.substr(0, 2) == ">>") throw Error(ErrorCode::MalformedGraph6, "header lines are not supported");
  if (line.empty()) throw Error(ErrorCode::MalformedGraph6, "empty line");
  for (char c : line) {
    auto byte = static_cast<unsigned char>(c);
    if (byte < 63 || byte > 126) throw Error(ErrorCode::MalformedGraph6, "byte outside 63..126");
  }
  const int n = static_cast<unsigned char>(line[0]) - 63;
  if (n > kMaxGraph6) throw Error(ErrorCode::MalformedGraph6, "only n <= 62 is supported");
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() != 1 + bytes) throw Error(ErrorCode::MalformedGraph6, "wrong length for n = " + std::to_string(n));
  auto bit = [&line](std::size_t k) {
    int value = static_cast<unsigned char>(line[1 + k / 6]) - 63;
    return (value >> (5 - k % 6)) & 1;
  };
  for (std::size_t k = bits; k < bytes * 6; ++k) {
    if (bit(k)) throw Error(ErrorCode::MalformedGraph6, "nonzero padding");
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<char>(bit(k++));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxGraph6) throw Error(ErrorCode::MalformedGraph6, "only n <= 62 is supported");
  std::string out(1, static_cast<char>(63 + n));
  int value = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + value));
        value = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (value << (6 - filled))));
  return out;
}

Graph sorted_edges(const Graph& g) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  return Graph(g.vertex_count(), std::move(edges));
}

std::vector<Graph> connected_bipartite_graphs(int n) {
  if (n < 1 || n > 10) throw Error(ErrorCode::BadParameters, "connected_bipartite_graphs supports 1 <= n <= 10");
  if (n == 1) return {Graph(1, {})};
  std::vector<Graph> out;
  for (int a = 1; a <= n / 2; ++a) {
    const int b = n - a;
    const std::uint32_t full = (1u << b) - 1;
    std::set<std::vector<std::uint32_t>> seen;
    // Key: sorted column bitmasks, minimized over row permutations (and
    // over transposition when both sides have equal size).
    auto key_of = [&](const std::vector<std::uint32_t>& rows, int nr, int nc) {
      std::vector<int> p(static_cast<std::size_t>(nr));
      std::iota(p.begin(), p.end(), 0);
      std::vector<std::uint32_t> best;
      do {
        std::vector<std::uint32_t> cols(static_cast<std::size_t>(nc), 0);
        for (int c = 0; c < nc; ++c) {
          for (int r = 0; r < nr; ++r) {
            if (rows[static_cast<std::size_t>(p[static_cast<std::size_t>(r)])] >> c & 1u) {
              cols[static_cast<std::size_t>(c)] |= 1u << r;
            }
          }
        }
        std::sort(cols.begin(), cols.end());
        if (best.empty() || cols < best) best = std::move(cols);
      } while (std::next_permutation(p.begin(), p.end()));
      return best;
    };
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(a), 1);
    // Nondecreasing row sequences enumerate matrices up to row order.
    while (true) {
      std::uint32_t used = 0;
      for (auto r : rows) used |= r;
      if (used == full) {
        std::vector<Edge> edges;
        for (int r = 0; r < a; ++r) {
          for (int c = 0; c < b; ++c) {
            if (rows[static_cast<std::size_t>(r)] >> c & 1u) edges.push_back({r, a + c});
          }
        }
        Graph g(n, std::move(edges));
        if (is_connected(g)) {
          auto key = key_of(rows, a, b);
          if (a == b) {
            std::vector<std::uint32_t> trans(static_cast<std::size_t>(b), 0);
            for (int r = 0; r < a; ++r) {
              for (int c = 0; c < b; ++c) {
                if (rows[static_cast<std::size_t>(r)] >> c & 1u) trans[static_cast<std::size_t>(c)] |= 1u << r;
              }
            }
            key = std::min(key, key_of(trans, b, a));
          }
          if (seen.insert(key).second) out.push_back(std::move(g));
        }
      }
      int i = a - 1;
      while (i >= 0 && rows[static_cast<std::size_t>(i)] == full) --i;
      if (i < 0) break;
      ++rows[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < a; ++j) rows[static_cast<std::size_t>(j)] = rows[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

}  // namespace toricmg
