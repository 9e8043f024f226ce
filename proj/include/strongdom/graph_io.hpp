#pragma once

#include <strongdom/graph.hpp>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace strongdom
{
    /// Malformed graph6 token or edge-list text. `position()` is a 0-based
    /// byte offset for graph6 and a 1-based line number for edge lists.
    class ParseError : public std::invalid_argument
    {
        private:
            std::size_t _position;

        public:
            ParseError(const std::string & message, std::size_t position);

            auto position() const -> std::size_t { return _position; }
    };

    /// Largest order representable in short-form graph6.
    inline constexpr int graph6_max_order = 62;

    /// Decodes one short-form graph6 token (no ">>graph6<<" header, no
    /// trailing newline). Nonzero padding bits are rejected so that the
    /// encoding is bijective.
    auto parse_graph6(std::string_view token) -> Graph;

    /// Throws std::invalid_argument if g.order() > 62.
    auto to_graph6(const Graph & g) -> std::string;

    /// Edge-list text: first non-comment line holds n, then one "u v" pair per
    /// line, 0-based. Anything after '#' on a line is ignored.
    auto parse_edge_list(std::string_view text) -> Graph;

    auto to_edge_list(const Graph & g) -> std::string;
}
