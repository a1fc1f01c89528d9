#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "semidom/graph.hpp"

namespace semidom {

/// Malformed text input. `line()` is 1-based, or 0 when not line-specific.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0);
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Edge-list text: the first non-comment line holds n, each further
/// non-comment line "u v" with 0-based ids. '#' starts a comment; blank
/// lines are skipped.
Graph parse_edgelist(std::string_view text);

/// "n\n" followed by one "u v" line per edge in sorted order.
std::string encode_edgelist(const Graph& g);

/// Largest order the single-byte graph6 header can express.
inline constexpr int kGraph6MaxOrder = 62;

/// One graph6 record (no trailing newline, no ">>graph6<<" header).
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

/// Reads every non-empty line of a graph6 stream. Errors carry line numbers.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace semidom
