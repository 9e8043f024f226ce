#include <strongdom/graph_io.hpp>

#include <charconv>
#include <sstream>
#include <vector>

using std::size_t;
using std::string;
using std::string_view;
using std::uint64_t;
using std::vector;

namespace strongdom
{
    ParseError::ParseError(const string & message, size_t position) :
        std::invalid_argument(message),
        _position(position)
    {
    }

    namespace
    {
        constexpr int graph6_bias = 63;

        auto graph6_bit_count(int n) -> size_t
        {
            return size_t(n) * size_t(n - 1) / 2;
        }
    }

    auto parse_graph6(string_view token) -> Graph
    {
        if (token.empty())
            throw ParseError("empty graph6 token", 0);

        for (size_t i = 0 ; i < token.size() ; ++i) {
            auto c = static_cast<unsigned char>(token[i]);
            if (c < graph6_bias || c > graph6_bias + 63)
                throw ParseError("graph6 byte " + std::to_string(int(c)) + " outside 63..126 at position " + std::to_string(i), i);
        }

        int n = static_cast<unsigned char>(token[0]) - graph6_bias;
        if (n > graph6_max_order)
            throw ParseError("long-form graph6 (order above " + std::to_string(graph6_max_order) + ") is not supported", 0);

        size_t bits = graph6_bit_count(n);
        size_t expected = 1 + (bits + 5) / 6;
        if (token.size() < expected)
            throw ParseError("graph6 token truncated: order " + std::to_string(n) + " needs " + std::to_string(expected)
                    + " bytes, got " + std::to_string(token.size()), token.size());
        if (token.size() > expected)
            throw ParseError("trailing bytes after graph6 token at position " + std::to_string(expected), expected);

        vector<uint64_t> rows(n, 0);
        size_t k = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i, ++k) {
                int value = static_cast<unsigned char>(token[1 + k / 6]) - graph6_bias;
                if ((value >> (5 - k % 6)) & 1) {
                    rows[i] |= uint64_t{1} << j;
                    rows[j] |= uint64_t{1} << i;
                }
            }

        for (; k < (expected - 1) * 6 ; ++k) {
            int value = static_cast<unsigned char>(token[1 + k / 6]) - graph6_bias;
            if ((value >> (5 - k % 6)) & 1)
                throw ParseError("nonzero graph6 padding bit at position " + std::to_string(1 + k / 6), 1 + k / 6);
        }

        return Graph::from_adjacency_rows(n, std::move(rows));
    }

    auto to_graph6(const Graph & g) -> string
    {
        int n = g.order();
        if (n > graph6_max_order)
            throw std::invalid_argument("graph of order " + std::to_string(n) + " exceeds short-form graph6 limit");

        size_t bits = graph6_bit_count(n);
        string result(1 + (bits + 5) / 6, char(graph6_bias));
        result[0] = char(graph6_bias + n);

        size_t k = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i, ++k)
                if ((g.row(i) >> j) & 1u)
                    result[1 + k / 6] = char(result[1 + k / 6] + (1 << (5 - k % 6)));

        return result;
    }

    namespace
    {
        auto trim(string_view s) -> string_view
        {
            auto is_space = [] (char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
            while (! s.empty() && is_space(s.front()))
                s.remove_prefix(1);
            while (! s.empty() && is_space(s.back()))
                s.remove_suffix(1);
            return s;
        }

        auto split_fields(string_view line) -> vector<string_view>
        {
            vector<string_view> result;
            size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
                    ++i;
                size_t start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t')
                    ++i;
                if (i > start)
                    result.push_back(line.substr(start, i - start));
            }
            return result;
        }

        auto parse_int(string_view field, size_t line_number) -> int
        {
            int value = 0;
            auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (ec != std::errc() || end != field.data() + field.size())
                throw ParseError("line " + std::to_string(line_number) + ": '" + string(field) + "' is not an integer", line_number);
            return value;
        }
    }

    auto parse_edge_list(string_view text) -> Graph
    {
        int order = -1;
        vector<Edge> edges;

        size_t line_number = 0;
        while (! text.empty()) {
            ++line_number;
            auto newline = text.find('\n');
            auto line = text.substr(0, newline);
            text = newline == string_view::npos ? string_view{} : text.substr(newline + 1);

            if (auto hash = line.find('#') ; hash != string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;

            auto fields = split_fields(line);
            if (order < 0) {
                if (fields.size() != 1)
                    throw ParseError("line " + std::to_string(line_number) + ": expected the vertex count", line_number);
                order = parse_int(fields[0], line_number);
                if (order < 0 || order > max_order)
                    throw ParseError("line " + std::to_string(line_number) + ": vertex count outside 0.." + std::to_string(max_order), line_number);
                continue;
            }

            if (fields.size() != 2)
                throw ParseError("line " + std::to_string(line_number) + ": expected 'u v'", line_number);
            auto u = parse_int(fields[0], line_number), v = parse_int(fields[1], line_number);
            if (u < 0 || v < 0 || u >= order || v >= order)
                throw ParseError("line " + std::to_string(line_number) + ": endpoint outside 0.." + std::to_string(order - 1), line_number);
            if (u == v)
                throw ParseError("line " + std::to_string(line_number) + ": loop edge", line_number);
            edges.emplace_back(u, v);
        }

        if (order < 0)
            throw ParseError("edge list has no vertex count", line_number);

        return Graph::from_edge_list(order, edges);
    }

    auto to_edge_list(const Graph & g) -> string
    {
        std::ostringstream out;
        out << g.order() << '\n';
        for (auto & [u, v] : g.edges())
            out << u << ' ' << v << '\n';
        return out.str();
    }
}
