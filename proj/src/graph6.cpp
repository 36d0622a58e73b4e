#include "cocrit/graph6.hpp"

#include <stdexcept>

namespace cocrit {

namespace {

constexpr long long body_len(long long n) { return (n * (n - 1) / 2 + 5) / 6; }

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw std::invalid_argument("graph6: empty input");
    for (char c : line)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: character out of printable range");

    size_t pos = 0;
    long long n;
    if (line[0] == 126) {
        if (line.size() >= 2 && line[1] == 126)
            throw std::invalid_argument("graph6: 8-byte order header not supported (n >= 258048)");
        if (line.size() < 4) throw std::invalid_argument("graph6: truncated order header");
        n = ((long long)(line[1] - 63) << 12) | ((long long)(line[2] - 63) << 6) | (long long)(line[3] - 63);
        pos = 4;
    } else {
        n = line[0] - 63;
        pos = 1;
    }
    if (n > Graph::kMaxVertices)
        throw std::invalid_argument("graph6: order exceeds supported cap of " +
                                    std::to_string(Graph::kMaxVertices));
    if ((long long)(line.size() - pos) != body_len(n))
        throw std::invalid_argument("graph6: body length mismatch");

    Graph g((int)n);
    int u = 0, v = 1;  // upper triangle, column by column
    for (size_t i = pos; i < line.size(); ++i) {
        int word = line[i] - 63;
        for (int b = 5; b >= 0; --b) {
            bool bit = (word >> b) & 1;
            if (v >= n) {
                if (bit) throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if (bit) g.add_edge(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back(126);
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int word = 0, nb = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            word = (word << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(char(word + 63));
                word = 0;
                nb = 0;
            }
        }
    if (nb > 0) out.push_back(char((word << (6 - nb)) + 63));
    return out;
}

}  // namespace cocrit
