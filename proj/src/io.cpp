#include "freeness/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <fstream>
#include <sstream>

namespace freeness {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

bool read_int(std::string_view token, long long& out) {
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

constexpr std::size_t kMaxGraph6Order = 68719476735ull;

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    long long declared = -1;
    long long max_index = -1;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        auto tokens = split_ws(line);
        if (tokens.size() == 2 && tokens[0] == "n") {
            long long n = 0;
            if (!read_int(tokens[1], n) || n < 0) throw ParseError("bad vertex count header", line_no);
            if (declared >= 0) throw ParseError("duplicate vertex count header", line_no);
            declared = n;
            continue;
        }
        long long u = 0, v = 0;
        if (tokens.size() != 2 || !read_int(tokens[0], u) || !read_int(tokens[1], v) || u < 0 || v < 0)
            throw ParseError("expected two non-negative integers", line_no);
        if (u == v) throw ParseError("loop at vertex " + std::to_string(u), line_no);
        if (u > std::numeric_limits<int>::max() / 2 || v > std::numeric_limits<int>::max() / 2)
            throw ParseError("vertex index too large", line_no);
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
        max_index = std::max({max_index, u, v});
    }
    long long n = max_index + 1;
    if (declared >= 0) {
        if (declared < n) throw ParseError("edge endpoint exceeds declared vertex count");
        n = declared;
    }
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view word) {
    word = trim(word);
    if (word.starts_with(">>graph6<<")) word.remove_prefix(10);
    if (word.empty()) throw ParseError("empty graph6 word");
    for (char c : word) {
        auto b = static_cast<unsigned char>(c);
        if (b < 63 || b > 126) throw ParseError("graph6 character outside 63..126");
    }
    auto at = [&](std::size_t i) { return static_cast<std::size_t>(static_cast<unsigned char>(word[i]) - 63); };

    std::size_t n = 0;
    std::size_t offset = 0;
    if (at(0) < 63) {
        n = at(0);
        offset = 1;
    } else if (word.size() >= 2 && at(1) < 63) {
        if (word.size() < 4) throw ParseError("truncated graph6 order");
        n = (at(1) << 12) | (at(2) << 6) | at(3);
        if (n < 63) throw ParseError("non-canonical graph6 order");
        offset = 4;
    } else {
        if (word.size() < 8) throw ParseError("truncated graph6 order");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | at(i);
        if (n < 258048) throw ParseError("non-canonical graph6 order");
        offset = 8;
    }
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t groups = (bits + 5) / 6;
    if (word.size() - offset != groups)
        throw ParseError("graph6 length mismatch: expected " + std::to_string(offset + groups) + " characters, got " +
                         std::to_string(word.size()));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            std::size_t group = at(offset + k / 6);
            if ((group >> (5 - k % 6)) & 1u) edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
        }
    }
    if (groups > 0) {
        std::size_t pad = groups * 6 - bits;
        if ((at(offset + groups - 1) & ((1u << pad) - 1)) != 0) throw ParseError("nonzero graph6 padding bits");
    }
    return Graph(n, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
    if (!g.is_simple()) throw GraphError("graph6 encodes simple graphs only");
    const std::size_t n = g.vertex_count();
    if (n > kMaxGraph6Order) throw GraphError("graph too large for graph6");
    std::string out;
    auto put = [&](std::size_t six) { out.push_back(static_cast<char>(six + 63)); };
    if (n < 63) {
        put(n);
    } else if (n < 258048) {
        out.push_back('~');
        for (int s = 12; s >= 0; s -= 6) put((n >> s) & 63u);
    } else {
        out += "~~";
        for (int s = 30; s >= 0; s -= 6) put((n >> s) & 63u);
    }
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
        adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
    }
    std::size_t acc = 0, filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (adj[i][j] ? 1u : 0u);
            if (++filled == 6) {
                put(acc);
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) put(acc << (6 - filled));
    return out;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    if (path.ends_with(".g6")) return parse_graph6(buf.str());
    return parse_edge_list(buf.str());
}

}  // namespace freeness
