#ifndef NIG_GRAPH_IO_HPP
#define NIG_GRAPH_IO_HPP

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nig/graph.hpp"

namespace nig {

enum class ParseErrorKind {
  kMalformedHeader,
  kByteOutOfRange,
  kTruncated,
  kTrailingGarbage,
  kNonzeroPadding,
  kOrderAboveCap,
  kSelfLoop,
  kBadToken,
  kLabelAboveCap,
  kLabelAboveOrder,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ParseErrorKind kind() const { return kind_; }

 private:
  ParseErrorKind kind_;
};

/// Decodes one graph6 record (no trailing newline). Orders above `cap`
/// are rejected even when the header itself is well formed.
Graph parse_graph6(std::string_view record, int cap = kMaxOrder);

/// Standard graph6 encoding; short header for order <= 62, long form above.
std::string emit_graph6(const Graph& g);

/// Edge-list text: one "u v" pair per line, optional leading "n <order>",
/// blank lines and '#' comments ignored.
Graph parse_edge_list(std::string_view text, int cap = kMaxOrder);

/// Reads newline-delimited graph6 records, skipping blank lines and the
/// optional ">>graph6<<" marker.
std::vector<Graph> read_graph6_stream(std::istream& in, int cap = kMaxOrder);

}  // namespace nig

#endif  // NIG_GRAPH_IO_HPP
