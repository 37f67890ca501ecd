/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RCK_GUARD_CORE_COLOURING_HH
#define RCK_GUARD_CORE_COLOURING_HH 1

#include <rck/graph.hh>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rck
{
    inline constexpr int max_colours = 4;

    /**
     * Target clique sizes (t_1, ..., t_k), one per colour. Colours keep the
     * order given; colour c (zero based) must avoid a monochromatic K_{t_c}.
     * Results that assume t_1 <= ... <= t_k check is_sorted() themselves.
     */
    class CliqueVector
    {
        private:
            std::vector<int> _sizes;

        public:
            explicit CliqueVector(std::vector<int> sizes);

            /// Parses "3,4" or "3,3,3".
            static auto parse(std::string_view) -> CliqueVector;

            [[nodiscard]] auto colours() const -> int { return int(_sizes.size()); }
            [[nodiscard]] auto operator[] (int c) const -> int { return _sizes[c]; }
            [[nodiscard]] auto sizes() const -> std::span<const int> { return _sizes; }
            [[nodiscard]] auto is_sorted() const -> bool;
            [[nodiscard]] auto sorted() const -> CliqueVector;

            /// Drops the first colour; needs at least two colours.
            [[nodiscard]] auto tail() const -> CliqueVector;

            [[nodiscard]] auto to_string() const -> std::string;

            auto operator== (const CliqueVector &) const -> bool = default;
    };

    using ClassAdjacency = std::array<VertexMask, max_vertices>;

    /**
     * An assignment of a colour in 0..k-1 to every edge of a host graph.
     * Edges are indexed in lexicographic order.
     */
    class EdgeColoring
    {
        private:
            Graph _host;
            int _k;
            std::vector<Edge> _edges;
            std::vector<std::uint8_t> _colours;

        public:
            EdgeColoring(Graph host, int k, std::vector<std::uint8_t> colours);

            [[nodiscard]] auto host() const -> const Graph & { return _host; }
            [[nodiscard]] auto colours_available() const -> int { return _k; }
            [[nodiscard]] auto edges() const -> std::span<const Edge> { return _edges; }
            [[nodiscard]] auto colours() const -> std::span<const std::uint8_t> { return _colours; }
            [[nodiscard]] auto colour(std::size_t edge_index) const -> int { return _colours[edge_index]; }

            /// Colour of an edge of the host; throws if it is not an edge.
            [[nodiscard]] auto colour_of(Edge) const -> int;

            /// Number of edges in colour class c.
            [[nodiscard]] auto class_size(int c) const -> int;

            /// Neighbour masks of the spanning subgraph G_c.
            [[nodiscard]] auto class_adjacency(int c) const -> ClassAdjacency;

            /// The spanning subgraph with edge set E_c.
            [[nodiscard]] auto class_graph(int c) const -> Graph;

            /// Colours as digits 1..k in edge order.
            [[nodiscard]] auto word() const -> std::string;

            static auto from_word(Graph host, int k, std::string_view word) -> EdgeColoring;

            auto operator== (const EdgeColoring &) const -> bool = default;
    };

    /**
     * True iff no colour class c contains a K_{t_c}. Throws if the colouring
     * is for a different graph or uses a different number of colours.
     */
    auto is_critical(const Graph &, const EdgeColoring &, const CliqueVector &) -> bool;

    /// Two lines: the host in graph6, then the colour word.
    auto serialise_witness(const EdgeColoring &) -> std::string;

    auto parse_witness(std::string_view graph6_line, std::string_view colour_line, int k) -> EdgeColoring;
}

#endif
