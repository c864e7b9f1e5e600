#include "corank/graph_io.hpp"

#include <charconv>
#include <sstream>

namespace corank {

FormatError::FormatError(const std::string& message, std::size_t offset, std::size_t line)
    : std::runtime_error(message + (line ? " (line " + std::to_string(line) + ", byte offset " : " (byte offset ") +
                         std::to_string(offset) + ")"),
      detail_(message),
      offset_(offset),
      line_(line)
{
}

namespace {

constexpr int kBias = 63;

int sextet(std::string_view text, std::size_t pos)
{
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
        throw FormatError("character outside the printable range 63..126", pos);
    }
    return c - kBias;
}

// Decodes N(n) starting at pos; returns n and advances pos.
std::size_t decode_order(std::string_view text, std::size_t& pos)
{
    if (pos >= text.size()) {
        throw FormatError("missing vertex count", pos);
    }
    if (text[pos] != '~') {
        return static_cast<std::size_t>(sextet(text, pos++));
    }
    std::size_t groups = 3;
    ++pos;
    if (pos < text.size() && text[pos] == '~') {
        groups = 6;
        ++pos;
    }
    if (pos + groups > text.size()) {
        throw FormatError("truncated vertex count", pos);
    }
    std::size_t n = 0;
    for (std::size_t i = 0; i < groups; ++i) {
        n = (n << 6) | static_cast<std::size_t>(sextet(text, pos++));
    }
    if (n > kMaxGraph6Order) {
        throw FormatError("vertex count " + std::to_string(n) + " exceeds supported maximum", pos);
    }
    return n;
}

std::string encode_order(std::size_t n)
{
    if (n > kMaxGraph6Order) {
        throw std::out_of_range("graph6 order " + std::to_string(n) + " exceeds supported maximum");
    }
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
        }
    }
    return out;
}

// Reads `bits` bits from the payload at pos and checks the padding and length.
std::vector<bool> decode_bits(std::string_view text, std::size_t pos, std::size_t bits)
{
    const std::size_t groups = (bits + 5) / 6;
    if (text.size() - pos < groups) {
        throw FormatError("payload too short: expected " + std::to_string(groups) + " bytes", text.size());
    }
    if (text.size() - pos > groups) {
        throw FormatError("unexpected trailing bytes after payload", pos + groups);
    }
    std::vector<bool> result;
    result.reserve(groups * 6);
    for (std::size_t g = 0; g < groups; ++g) {
        const int value = sextet(text, pos + g);
        for (int b = 5; b >= 0; --b) {
            result.push_back((value >> b) & 1);
        }
    }
    for (std::size_t i = bits; i < result.size(); ++i) {
        if (result[i]) {
            throw FormatError("nonzero padding bit", pos + groups - 1);
        }
    }
    result.resize(bits);
    return result;
}

std::string encode_bits(const std::vector<bool>& bits)
{
    std::string out;
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (std::size_t b = 0; b < 6; ++b) {
            value <<= 1;
            if (i + b < bits.size() && bits[i + b]) {
                value |= 1;
            }
        }
        out.push_back(static_cast<char>(value + kBias));
    }
    return out;
}

std::string_view strip(std::string_view s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    return s;
}

std::string_view drop_header(std::string_view s, std::string_view header)
{
    if (s.substr(0, header.size()) == header) {
        s.remove_prefix(header.size());
    }
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text)
{
    text = drop_header(strip(text), ">>graph6<<");
    if (text.empty()) {
        throw FormatError("empty graph6 record", 0);
    }
    std::size_t pos = 0;
    const std::size_t n = decode_order(text, pos);
    const std::size_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
    const auto bits = decode_bits(text, pos, bit_count);
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            if (bits[k++]) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph(n, edges);
}

std::string write_graph6(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<bool> bits;
    bits.reserve(n * (n > 0 ? n - 1 : 0) / 2);
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            bits.push_back(g.adjacent(i, j));
        }
    }
    return encode_order(n) + encode_bits(bits);
}

Digraph parse_digraph6(std::string_view text)
{
    text = drop_header(strip(text), ">>digraph6<<");
    if (text.empty() || text.front() != '&') {
        throw FormatError("digraph6 record must start with '&'", 0);
    }
    std::size_t pos = 1;
    const std::size_t n = decode_order(text, pos);
    const auto bits = decode_bits(text, pos, n * n);
    std::vector<Edge> arcs;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j) {
            if (bits[i * n + j]) {
                if (i == j) {
                    throw FormatError("loop at vertex " + std::to_string(i), pos + (i * n + j) / 6);
                }
                arcs.emplace_back(i, j);
            }
        }
    }
    return Digraph(n, arcs);
}

std::string write_digraph6(const Digraph& d)
{
    const std::size_t n = d.order();
    std::vector<bool> bits(n * n, false);
    for (auto [u, v] : d.arcs()) {
        bits[u * n + v] = true;
    }
    return "&" + encode_order(n) + encode_bits(bits);
}

namespace {

struct LineReader {
    explicit LineReader(std::string_view text) : text(text) {}

    bool next(std::string_view& line)
    {
        while (pos < text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            line = strip(text.substr(pos, end - pos));
            pos = end + 1;
            ++number;
            if (!line.empty() && line.front() != '#') {
                return true;
            }
        }
        return false;
    }

    std::string_view text;
    std::size_t pos = 0;
    std::size_t number = 0;
};

bool parse_uint(std::string_view token, std::size_t& value)
{
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

Edge parse_pair(std::string_view line, std::size_t line_no)
{
    auto t = tokens(line);
    std::size_t u = 0;
    std::size_t v = 0;
    if (t.size() != 2 || !parse_uint(t[0], u) || !parse_uint(t[1], v)) {
        throw FormatError("expected a line \"u v\"", 0, line_no);
    }
    return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

template <class Result>
Result parse_pairs_block(LineReader& reader, std::size_t n, std::size_t count, std::size_t header_line)
{
    std::vector<Edge> pairs;
    std::string_view line;
    for (std::size_t k = 0; k < count; ++k) {
        if (!reader.next(line)) {
            throw FormatError("expected " + std::to_string(count) + " pairs, got " + std::to_string(k), 0,
                              header_line);
        }
        pairs.push_back(parse_pair(line, reader.number));
    }
    try {
        return Result(n, pairs);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what(), 0, header_line);
    }
}

}  // namespace

Graph parse_edge_list(std::string_view text)
{
    LineReader reader(text);
    std::string_view line;
    if (!reader.next(line)) {
        throw FormatError("missing \"n m\" header", 0, 1);
    }
    auto t = tokens(line);
    std::size_t n = 0;
    std::size_t m = 0;
    if (t.size() != 2 || !parse_uint(t[0], n) || !parse_uint(t[1], m)) {
        throw FormatError("malformed \"n m\" header", 0, reader.number);
    }
    return parse_pairs_block<Graph>(reader, n, m, reader.number);
}

std::string write_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

Digraph parse_arc_list(std::string_view text)
{
    LineReader reader(text);
    std::string_view line;
    if (!reader.next(line)) {
        throw FormatError("missing \"n <count>\" header", 0, 1);
    }
    auto t = tokens(line);
    std::size_t n = 0;
    if (t.size() != 2 || t[0] != "n" || !parse_uint(t[1], n)) {
        throw FormatError("malformed \"n <count>\" header", 0, reader.number);
    }
    std::vector<Edge> arcs;
    const std::size_t header = reader.number;
    while (reader.next(line)) {
        arcs.push_back(parse_pair(line, reader.number));
    }
    try {
        return Digraph(n, arcs);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what(), 0, header);
    }
}

std::string write_arc_list(const Digraph& d)
{
    std::ostringstream out;
    out << "n " << d.order() << '\n';
    for (auto [u, v] : d.arcs()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

std::vector<InputRecord> read_graphs(std::istream& in)
{
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    LineReader reader(text);
    std::vector<InputRecord> records;
    std::string_view line;

    // Arc-list blocks have no arc count: they run until the first line that
    // is not an "u v" pair.
    while (reader.next(line)) {
        const std::size_t line_no = reader.number;
        auto t = tokens(line);
        try {
            if (t.size() == 2 && t[0] == "n") {
                std::size_t n = 0;
                if (!parse_uint(t[1], n)) {
                    throw FormatError("malformed \"n <count>\" header", 0, line_no);
                }
                std::vector<Edge> arcs;
                std::size_t save_pos = reader.pos;
                std::size_t save_number = reader.number;
                std::string_view next;
                while (reader.next(next)) {
                    auto nt = tokens(next);
                    std::size_t a = 0;
                    std::size_t b = 0;
                    if (nt.size() == 2 && parse_uint(nt[0], a) && parse_uint(nt[1], b)) {
                        arcs.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
                        save_pos = reader.pos;
                        save_number = reader.number;
                    } else {
                        break;
                    }
                }
                reader.pos = save_pos;
                reader.number = save_number;
                try {
                    records.push_back({Digraph(n, arcs), line_no});
                } catch (const std::invalid_argument& e) {
                    throw FormatError(e.what(), 0, line_no);
                }
            } else if (t.size() == 2) {
                std::size_t n = 0;
                std::size_t m = 0;
                if (!parse_uint(t[0], n) || !parse_uint(t[1], m)) {
                    throw FormatError("malformed \"n m\" header", 0, line_no);
                }
                records.push_back({parse_pairs_block<Graph>(reader, n, m, line_no), line_no});
            } else if (t.size() == 1 && !t[0].empty() && t[0].front() == '&') {
                records.push_back({parse_digraph6(t[0]), line_no});
            } else if (t.size() == 1) {
                records.push_back({parse_graph6(t[0]), line_no});
            } else {
                throw FormatError("unrecognized record", 0, line_no);
            }
        } catch (const FormatError& e) {
            if (e.line() != 0) throw;
            throw FormatError(e.detail(), e.offset(), line_no);
        }
    }
    return records;
}

}  // namespace corank
