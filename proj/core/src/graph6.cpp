#include "cnspectra/graph6.hpp"

#include <cctype>
#include <sstream>
#include <string>

#include "cnspectra/errors.hpp"

namespace cns {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void bad(size_t offset, const std::string& why) {
    throw InputError("graph6 parse error at byte " + std::to_string(offset) + ": " + why);
}

int value_at(std::string_view s, size_t i) {
    if (i >= s.size()) bad(i, "unexpected end of input");
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) bad(i, "byte out of range [63,126]");
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    size_t base = 0;
    if (line.substr(0, kHeader.size()) == kHeader) {
        line.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) bad(base, "empty line");

    size_t i = 0;
    long long n;
    int first = value_at(line, i);
    if (first < 63) {
        n = first;
        i = 1;
    } else {
        // '~' introducer: the next three bytes carry n in 18 bits.
        if (line.size() < 4) bad(base + line.size(), "truncated order field");
        n = 0;
        for (size_t k = 1; k <= 3; ++k) n = (n << 6) | value_at(line, k);
        if (n < 63) bad(base + 1, "non-canonical long order field");
        i = 4;
    }
    if (n > 4096) bad(base, "order above the 4096-vertex build limit");

    Graph g(static_cast<int>(n));
    long long bits = n * (n - 1) / 2;
    size_t need = static_cast<size_t>((bits + 5) / 6);
    if (line.size() - i != need)
        bad(base + line.size(), "adjacency field has " + std::to_string(line.size() - i) +
                                    " bytes, expected " + std::to_string(need));

    long long bit = 0;
    int col = 1, row = 0;
    for (size_t k = i; k < line.size(); ++k) {
        int x = value_at(line, k);
        for (int b = 5; b >= 0; --b, ++bit) {
            int on = (x >> b) & 1;
            if (bit >= bits) {
                if (on) bad(base + k, "non-zero padding bits");
                continue;
            }
            if (on) g.add_edge(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const long long n = g.order();
    if (n > 258047) throw CapabilityError("write_graph6: order beyond the 3-byte field");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::string s(text);
    for (char& c : s)
        if (c == ';') c = '\n';
    std::istringstream in(s);
    std::string tok;
    int p = -1;
    if (!(in >> p) || p < 0) throw InputError("edge list: expected vertex count");
    Graph g(p);
    int u, v;
    while (in >> u) {
        if (!(in >> v)) throw InputError("edge list: dangling endpoint");
        g.add_edge(u, v);
    }
    return g;
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order());
    for (auto [u, v] : g.edges()) out += "; " + std::to_string(u) + " " + std::to_string(v);
    return out;
}

Graph parse_graph_auto(std::string_view text) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) throw InputError("empty graph input");
    if (std::isdigit(static_cast<unsigned char>(text[i]))) return parse_edge_list(text.substr(i));
    return parse_graph6(text.substr(i));
}

}  // namespace cns
