#include "nig/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>


namespace nig {

namespace {

constexpr int kBias = 63;
constexpr int kLongMarker = 126;

int decode_byte(char c, std::size_t pos) {
  int value = static_cast<unsigned char>(c);
  if (value < kBias || value > 126) {
    throw ParseError(ParseErrorKind::kByteOutOfRange,
                     "graph6 byte " + std::to_string(value) + " at offset " + std::to_string(pos) +
                         " outside 63..126");
  }
  return value - kBias;
}

}  // namespace

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedHeader: return "malformed header";
    case ParseErrorKind::kByteOutOfRange: return "byte out of range";
    case ParseErrorKind::kTruncated: return "truncated record";
    case ParseErrorKind::kTrailingGarbage: return "trailing garbage";
    case ParseErrorKind::kNonzeroPadding: return "nonzero padding bits";
    case ParseErrorKind::kOrderAboveCap: return "order above cap";
    case ParseErrorKind::kSelfLoop: return "self-loop";
    case ParseErrorKind::kBadToken: return "bad token";
    case ParseErrorKind::kLabelAboveCap: return "label above cap";
    case ParseErrorKind::kLabelAboveOrder: return "label above declared order";
  }
  return "unknown";
}

Graph parse_graph6(std::string_view record, int cap) {
  if (record.empty()) throw ParseError(ParseErrorKind::kMalformedHeader, "empty graph6 record");
  if (record.starts_with(">>graph6<<")) record.remove_prefix(10);

  std::size_t pos = 0;
  long order = 0;
  if (static_cast<unsigned char>(record[0]) == kLongMarker) {
    if (record.size() >= 2 && static_cast<unsigned char>(record[1]) == kLongMarker) {
      throw ParseError(ParseErrorKind::kOrderAboveCap,
                       "graph6 8-byte header (order > 258047) not supported");
    }
    if (record.size() < 4) {
      throw ParseError(ParseErrorKind::kMalformedHeader, "graph6 long header needs 3 size bytes");
    }
    for (std::size_t i = 1; i <= 3; ++i) order = (order << 6) | decode_byte(record[i], i);
    if (order < 63) {
      throw ParseError(ParseErrorKind::kMalformedHeader,
                       "graph6 long header encodes order " + std::to_string(order) + " < 63");
    }
    pos = 4;
  } else {
    order = decode_byte(record[0], 0);
    pos = 1;
  }
  if (order > cap) {
    throw ParseError(ParseErrorKind::kOrderAboveCap,
                     "graph6 order " + std::to_string(order) + " exceeds cap " +
                         std::to_string(cap));
  }

  const int n = static_cast<int>(order);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (record.size() < pos + body) {
    throw ParseError(ParseErrorKind::kTruncated,
                     "graph6 body has " + std::to_string(record.size() - pos) + " bytes, need " +
                         std::to_string(body));
  }
  if (record.size() > pos + body) {
    throw ParseError(ParseErrorKind::kTrailingGarbage,
                     "graph6 record has " + std::to_string(record.size() - pos - body) +
                         " extra bytes");
  }

  Graph g(n);
  std::size_t k = 0;
  int chunk = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) chunk = decode_byte(record[pos + k / 6], pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    if (chunk & ((1 << (6 - k % 6)) - 1)) {
      throw ParseError(ParseErrorKind::kNonzeroPadding, "graph6 padding bits are not zero");
    }
  }
  // Bytes of a zero-bit body (order <= 1) still need range checks.
  for (std::size_t i = pos; i < record.size(); ++i) decode_byte(record[i], i);
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kLongMarker));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
    }
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

namespace {

long parse_label(std::string_view token, int line) {
  long value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size() || value < 0) {
    throw ParseError(ParseErrorKind::kBadToken, "line " + std::to_string(line) +
                                                    ": expected nonnegative integer, got '" +
                                                    std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

Graph parse_edge_list(std::string_view text, int cap) {
  std::optional<long> declared;
  std::vector<std::pair<Vertex, Vertex>> edges;
  long max_label = -1;
  int line_no = 0;
  bool first_content = true;

  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (first_content && tokens[0] == "n") {
      first_content = false;
      if (tokens.size() != 2) {
        throw ParseError(ParseErrorKind::kBadToken,
                         "line " + std::to_string(line_no) + ": expected 'n <order>'");
      }
      declared = parse_label(tokens[1], line_no);
      if (*declared > cap) {
        throw ParseError(ParseErrorKind::kOrderAboveCap,
                         "declared order " + std::to_string(*declared) + " exceeds cap " +
                             std::to_string(cap));
      }
      continue;
    }
    first_content = false;
    if (tokens.size() != 2) {
      throw ParseError(ParseErrorKind::kBadToken,
                       "line " + std::to_string(line_no) + ": expected exactly two labels");
    }
    long u = parse_label(tokens[0], line_no);
    long v = parse_label(tokens[1], line_no);
    for (long label : {u, v}) {
      if (label >= cap) {
        throw ParseError(ParseErrorKind::kLabelAboveCap,
                         "line " + std::to_string(line_no) + ": label " + std::to_string(label) +
                             " >= cap " + std::to_string(cap));
      }
    }
    if (u == v) {
      throw ParseError(ParseErrorKind::kSelfLoop,
                       "line " + std::to_string(line_no) + ": self-loop at " + std::to_string(u));
    }
    max_label = std::max({max_label, u, v});
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }

  long order = max_label + 1;
  if (declared) {
    if (max_label >= *declared) {
      throw ParseError(ParseErrorKind::kLabelAboveOrder,
                       "label " + std::to_string(max_label) + " >= declared order " +
                           std::to_string(*declared));
    }
    order = *declared;
  }
  return Graph(static_cast<int>(order), edges);
}

std::vector<Graph> read_graph6_stream(std::istream& in, int cap) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line, cap));
  }
  return out;
}

}  // namespace nig
