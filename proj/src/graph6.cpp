#include "ikg/graph6.hpp"

namespace ikg {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.substr(0, kHeader.size()) == kHeader) {
    line.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw DecodeError("graph6: empty record", base);

  auto value = [&](std::size_t pos) {
    auto c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) throw DecodeError("graph6: byte outside [63, 126]", base + pos);
    return static_cast<int>(c) - kBias;
  };

  std::size_t pos = 0;
  int n = 0;
  if (static_cast<unsigned char>(line[0]) == 126) {
    if (line.size() < 4) throw DecodeError("graph6: truncated length header", base + line.size());
    if (static_cast<unsigned char>(line[1]) == 126) {
      throw DecodeError("graph6: 8-byte length header implies more than 64 vertices", base + 1);
    }
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  } else {
    n = value(0);
    pos = 1;
  }
  if (n < 1) throw DecodeError("graph6: graph must have at least one vertex", base);
  if (n > kMaxVertices) throw DecodeError("graph6: more than 64 vertices", base);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() < pos + bytes) throw DecodeError("graph6: record too short", base + line.size());
  if (line.size() > pos + bytes) throw DecodeError("graph6: trailing garbage", base + pos + bytes);

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = value(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    int last = value(pos + bytes - 1);
    if (last & ((1 << (6 - bits % 6)) - 1)) {
      throw DecodeError("graph6: non-zero padding bits", base + pos + bytes - 1);
    }
  }
  return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace ikg
