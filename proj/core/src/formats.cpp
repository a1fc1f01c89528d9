#include "semidom/formats.hpp"

#include <charconv>
#include <optional>
#include <sstream>

namespace semidom {

ParseError::ParseError(const std::string& what, int line)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Whitespace-separated non-negative integers; nullopt on any other token.
std::optional<std::vector<long>> integers(std::string_view s) {
    std::vector<long> out;
    while (true) {
        const auto start = s.find_first_not_of(" \t");
        if (start == std::string_view::npos) {
            return out;
        }
        s.remove_prefix(start);
        const auto end = std::min(s.find_first_of(" \t"), s.size());
        long value = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + end, value);
        if (ec != std::errc{} || ptr != s.data() + end || value < 0) {
            return std::nullopt;
        }
        out.push_back(value);
        s.remove_prefix(end);
    }
}

}  // namespace

Graph parse_edgelist(std::string_view text) {
    std::optional<long> n;
    std::vector<std::pair<Vertex, Vertex>> edges;
    int line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto nums = integers(line);
        if (!n) {
            if (!nums || nums->size() != 1) {
                throw ParseError("expected the vertex count", line_no);
            }
            n = nums->front();
            if (*n > 1'000'000) {
                throw ParseError("vertex count is too large", line_no);
            }
            continue;
        }
        if (!nums || nums->size() != 2) {
            throw ParseError("expected an edge \"u v\"", line_no);
        }
        const long u = (*nums)[0];
        const long v = (*nums)[1];
        if (u >= *n || v >= *n) {
            throw ParseError("vertex id out of range (n = " + std::to_string(*n) + ")", line_no);
        }
        if (u == v) {
            throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!n) {
        throw ParseError("missing vertex count");
    }
    return Graph(static_cast<int>(*n), edges);
}

std::string encode_edgelist(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (const auto& e : g.edges()) {
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    }
    return out;
}

Graph parse_graph6(std::string_view line) {
    line = trim(line);
    if (line.empty()) {
        throw ParseError("empty graph6 record");
    }
    for (char c : line) {
        if (c < 63 || c > 126) {
            throw ParseError("graph6 byte out of range [63,126]");
        }
    }
    const int n = line[0] - 63;
    if (n > kGraph6MaxOrder) {
        throw ParseError("only the single-byte graph6 header (n <= 62) is supported");
    }
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (line.size() - 1 != bytes) {
        throw ParseError("graph6 payload has " + std::to_string(line.size() - 1) +
                         " bytes, expected " + std::to_string(bytes));
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = line[1 + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) {
                edges.emplace_back(i, j);
            }
        }
    }
    // padding bits must be zero
    for (; k < bytes * 6; ++k) {
        const int byte = line[1 + k / 6] - 63;
        if ((byte >> (5 - k % 6)) & 1) {
            throw ParseError("graph6 padding bits are not zero");
        }
    }
    return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) {
        throw Error("graph6 encoding supports at most 62 vertices");
    }
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    std::string out(1 + (bits + 5) / 6, '\0');
    out[0] = static_cast<char>(63 + n);
    std::vector<int> payload((bits + 5) / 6, 0);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            if (g.adjacent(i, j)) {
                payload[k / 6] |= 1 << (5 - k % 6);
            }
        }
    }
    for (std::size_t b = 0; b < payload.size(); ++b) {
        out[1 + b] = static_cast<char>(63 + payload[b]);
    }
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto view = trim(line);
        if (view.empty()) {
            continue;
        }
        if (view.rfind(">>graph6<<", 0) == 0) {
            view.remove_prefix(10);
        }
        try {
            out.push_back(parse_graph6(view));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    return out;
}

}  // namespace semidom
