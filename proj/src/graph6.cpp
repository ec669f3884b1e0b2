#include "subkdom/graph6.hpp"

#include <charconv>
#include <sstream>
#include <utility>

namespace subkdom {

namespace {

constexpr char kHeader[] = ">>graph6<<";
constexpr int kOffset = 63;
constexpr int kMaxByte = 126;

std::string_view strip_line(std::string_view line, std::size_t& base) {
    base = 0;
    const std::string_view header(kHeader);
    if (line.substr(0, header.size()) == header) {
        line.remove_prefix(header.size());
        base = header.size();
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    return line;
}

int byte_at(std::string_view body, std::size_t pos, std::size_t base) {
    if (pos >= body.size())
        throw MalformedInputError("graph6 line truncated at byte " +
                                      std::to_string(base + body.size()),
                                  static_cast<long>(base + body.size()));
    const auto b = static_cast<unsigned char>(body[pos]);
    if (b < kOffset || b > kMaxByte)
        throw MalformedInputError("byte outside graph6 alphabet at offset " +
                                      std::to_string(base + pos),
                                  static_cast<long>(base + pos));
    return b - kOffset;
}

// Returns the order and advances `pos` past the order prefix.
std::int64_t decode_order(std::string_view body, std::size_t& pos, std::size_t base) {
    if (body.empty())
        throw MalformedInputError("empty graph6 line", static_cast<long>(base));
    const int first = byte_at(body, pos, base);
    if (first < kMaxByte - kOffset) {
        ++pos;
        return first;
    }
    // 126 escape: three 6-bit digits, or 126 126 then six 6-bit digits.
    int digits = 3;
    ++pos;
    if (byte_at(body, pos, base) == kMaxByte - kOffset) {
        digits = 6;
        ++pos;
    }
    std::int64_t n = 0;
    for (int i = 0; i < digits; ++i, ++pos) n = n << 6 | byte_at(body, pos, base);
    return n;
}

// Calls bit(i, j, set) for every upper-triangle position in column order.
template <typename BitFn>
void decode_payload(std::string_view body, std::size_t pos, std::size_t base, std::int64_t n,
                    BitFn bit) {
    const std::int64_t total_bits = n * (n - 1) / 2;
    const std::int64_t payload_bytes = (total_bits + 5) / 6;
    const auto available = static_cast<std::int64_t>(body.size() - pos);
    if (available < payload_bytes)
        throw MalformedInputError("truncated bit payload: need " + std::to_string(payload_bytes) +
                                      " bytes, have " + std::to_string(available),
                                  static_cast<long>(base + body.size()));
    if (available > payload_bytes)
        throw MalformedInputError("trailing bytes after adjacency payload",
                                  static_cast<long>(base + pos + payload_bytes));

    std::int64_t index = 0;
    int i = 0;
    int j = 1;
    for (std::int64_t b = 0; b < payload_bytes; ++b) {
        const int value = byte_at(body, pos + static_cast<std::size_t>(b), base);
        for (int shift = 5; shift >= 0; --shift, ++index) {
            const bool set = value >> shift & 1;
            if (index < total_bits) {
                bit(i, j, set);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (set) {
                throw MalformedInputError("nonzero padding bits in final byte",
                                          static_cast<long>(base + pos +
                                                            static_cast<std::size_t>(b)));
            }
        }
    }
}

}  // namespace

std::int64_t graph6_order(std::string_view line) {
    std::size_t base = 0;
    const auto body = strip_line(line, base);
    std::size_t pos = 0;
    return decode_order(body, pos, base);
}

Graph6Record parse_graph6_record(std::string_view line) {
    std::size_t base = 0;
    const auto body = strip_line(line, base);
    std::size_t pos = 0;
    Graph6Record record;
    record.raw = std::string(body);
    record.order = decode_order(body, pos, base);
    record.bits.assign(static_cast<std::size_t>(record.order * (record.order - 1) / 2), false);
    decode_payload(body, pos, base, record.order, [&](int i, int j, bool set) {
        if (set)
            record.bits[static_cast<std::size_t>(j) * (j - 1) / 2 + static_cast<std::size_t>(i)] =
                true;
    });
    return record;
}

Graph parse_graph6(std::string_view line) {
    std::size_t base = 0;
    const auto body = strip_line(line, base);
    std::size_t pos = 0;
    const std::int64_t n = decode_order(body, pos, base);
    std::vector<std::pair<int, int>> edges;
    decode_payload(body, pos, base, n, [&](int i, int j, bool set) {
        if (set) edges.emplace_back(i, j);
    });
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::vector<int> parse_graph6_degrees(std::string_view line) {
    std::size_t base = 0;
    const auto body = strip_line(line, base);
    std::size_t pos = 0;
    const std::int64_t n = decode_order(body, pos, base);
    std::vector<int> degrees(static_cast<std::size_t>(n), 0);
    decode_payload(body, pos, base, n, [&](int i, int j, bool set) {
        if (set) {
            ++degrees[static_cast<std::size_t>(i)];
            ++degrees[static_cast<std::size_t>(j)];
        }
    });
    return degrees;
}

std::string encode_graph6(const Graph& g) {
    const std::int64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kOffset + n));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kMaxByte));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(kOffset + (n >> shift & 63)));
    } else {
        out.push_back(static_cast<char>(kMaxByte));
        out.push_back(static_cast<char>(kMaxByte));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(kOffset + (n >> shift & 63)));
    }
    int accumulator = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            accumulator = accumulator << 1 | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kOffset + accumulator));
                accumulator = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(kOffset + (accumulator << (6 - filled))));
    return out;
}

namespace {

std::vector<std::int64_t> parse_int_fields(const std::string& text, std::size_t expected,
                                           long line_number) {
    std::istringstream stream(text);
    std::vector<std::int64_t> values;
    std::string token;
    while (stream >> token) {
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw MalformedInputError("line " + std::to_string(line_number) +
                                          ": expected an integer, got \"" + token + "\"",
                                      line_number);
        values.push_back(value);
    }
    if (values.size() != expected)
        throw MalformedInputError("line " + std::to_string(line_number) + ": expected " +
                                      std::to_string(expected) + " fields",
                                  line_number);
    return values;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    long line_number = 0;
    long header_line = 0;
    std::int64_t n = -1;
    std::int64_t m = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<char> seen;  // n*n adjacency markers for duplicate detection

    while (std::getline(stream, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (n < 0) {
            const auto header = parse_int_fields(line, 2, line_number);
            n = header[0];
            m = header[1];
            header_line = line_number;
            if (n < 0 || m < 0)
                throw MalformedInputError("line " + std::to_string(line_number) +
                                              ": order and size must be nonnegative",
                                          line_number);
            seen.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
            continue;
        }
        if (static_cast<std::int64_t>(edges.size()) == m)
            throw MalformedInputError("line " + std::to_string(line_number) +
                                          ": more edge lines than the declared " +
                                          std::to_string(m),
                                      line_number);
        const auto fields = parse_int_fields(line, 2, line_number);
        const std::int64_t u = fields[0];
        const std::int64_t v = fields[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw MalformedInputError("line " + std::to_string(line_number) +
                                          ": vertex label out of range [0, " + std::to_string(n) +
                                          ")",
                                      line_number);
        if (u == v)
            throw MalformedInputError("line " + std::to_string(line_number) + ": self-loop at " +
                                          std::to_string(u),
                                      line_number);
        auto& mark = seen[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                          static_cast<std::size_t>(v)];
        if (mark)
            throw MalformedInputError("line " + std::to_string(line_number) + ": duplicate edge (" +
                                          std::to_string(u) + ", " + std::to_string(v) + ")",
                                      line_number);
        mark = 1;
        seen[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(u)] = 1;
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw MalformedInputError("empty edge-list input", 1);
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw MalformedInputError("expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()),
                                  header_line);
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string encode_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace subkdom
