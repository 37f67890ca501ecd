/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RCK_GUARD_CORE_GRAPH_HH
#define RCK_GUARD_CORE_GRAPH_HH 1

#include <rck/errors.hh>

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rck
{
    using VertexMask = std::uint32_t;

    inline constexpr int max_vertices = 32;

    inline constexpr auto low_mask(int n) -> VertexMask
    {
        return n >= 32 ? ~VertexMask{0} : ((VertexMask{1} << n) - 1);
    }

    inline constexpr auto bit(int v) -> VertexMask
    {
        return VertexMask{1} << v;
    }

    inline auto popcount(VertexMask m) -> int
    {
        return std::popcount(m);
    }

    inline auto lowest(VertexMask m) -> int
    {
        return std::countr_zero(m);
    }

    /**
     * An undirected edge, always stored with u < v. Ordering is lexicographic
     * on (u, v), which is the edge order used by colourings and graph6.
     */
    struct Edge
    {
        int u = 0;
        int v = 0;

        /// Normalises the endpoint order. Throws on a loop.
        static auto between(int a, int b) -> Edge;

        auto operator<=> (const Edge &) const = default;
    };

    auto to_string(const Edge &) -> std::string;

    /**
     * A subset of the vertices of some ambient graph.
     */
    class VertexSet
    {
        private:
            VertexMask _mask = 0;

        public:
            constexpr VertexSet() = default;
            constexpr explicit VertexSet(VertexMask m) : _mask(m) { }

            static constexpr auto all(int n) -> VertexSet { return VertexSet{ low_mask(n) }; }

            [[nodiscard]] constexpr auto mask() const -> VertexMask { return _mask; }
            [[nodiscard]] constexpr auto contains(int v) const -> bool { return _mask & bit(v); }
            [[nodiscard]] auto size() const -> int { return popcount(_mask); }
            [[nodiscard]] constexpr auto empty() const -> bool { return 0 == _mask; }

            constexpr auto with(int v) const -> VertexSet { return VertexSet{ _mask | bit(v) }; }
            constexpr auto without(int v) const -> VertexSet { return VertexSet{ _mask & ~bit(v) }; }

            [[nodiscard]] auto members() const -> std::vector<int>;

            constexpr auto operator& (VertexSet o) const -> VertexSet { return VertexSet{ _mask & o._mask }; }
            constexpr auto operator| (VertexSet o) const -> VertexSet { return VertexSet{ _mask | o._mask }; }
            constexpr auto operator== (const VertexSet &) const -> bool = default;
    };

    /**
     * A finite simple undirected graph on at most 32 labelled vertices,
     * stored as one neighbour mask per vertex. Values are immutable; every
     * modifying operation returns a new graph.
     */
    class Graph
    {
        private:
            int _n = 0;
            std::array<VertexMask, max_vertices> _adj{};

        public:
            /// The edgeless graph on n vertices.
            explicit Graph(int n);

            static auto from_edges(int n, std::span<const Edge> edges) -> Graph;

            /// Builds from raw neighbour masks, validating symmetry, loops and range.
            static auto from_masks(std::span<const VertexMask> adj) -> Graph;

            [[nodiscard]] auto order() const -> int { return _n; }
            [[nodiscard]] auto vertices() const -> VertexSet { return VertexSet::all(_n); }
            [[nodiscard]] auto neighbours(int v) const -> VertexMask { return _adj[v]; }
            [[nodiscard]] auto adjacent(int u, int v) const -> bool { return _adj[u] & bit(v); }
            [[nodiscard]] auto degree(int v) const -> int { return popcount(_adj[v]); }
            [[nodiscard]] auto adjacency() const -> std::span<const VertexMask> { return { _adj.data(), std::size_t(_n) }; }

            [[nodiscard]] auto edge_count() const -> int;
            [[nodiscard]] auto is_complete() const -> bool;

            /// Edges in lexicographic order.
            [[nodiscard]] auto edges() const -> std::vector<Edge>;

            /// Edges of the complement, in lexicographic order.
            [[nodiscard]] auto non_edges() const -> std::vector<Edge>;

            /// The subgraph induced by s, with vertices relabelled 0.. in increasing order.
            [[nodiscard]] auto induced(VertexSet s) const -> Graph;

            [[nodiscard]] auto without_vertex(int v) const -> Graph;

            /// Applies a relabelling: vertex v of this graph becomes perm[v].
            [[nodiscard]] auto relabelled(std::span<const int> perm) const -> Graph;

            auto operator== (const Graph &) const -> bool;
    };

    struct DegreeStats
    {
        int min_degree = 0;
        int max_degree = 0;
        std::vector<int> degrees;
    };

    struct MultipartiteResult
    {
        bool is_complete_multipartite = false;
        int parts = 0;
    };

    auto add_edge(const Graph &, Edge) -> Graph;

    auto complement(const Graph &) -> Graph;

    /// Disjoint union plus all cross edges; g's vertices come first.
    auto join(const Graph & g, const Graph & h) -> Graph;

    auto clique_number(const Graph &) -> int;

    auto independence_number(const Graph &) -> int;

    auto has_clique(const Graph &, int t, VertexSet within) -> bool;

    /// Exact chromatic number, for graphs on at most 16 vertices.
    auto chromatic_number(const Graph &) -> int;

    auto degree_stats(const Graph &) -> DegreeStats;

    auto is_complete_multipartite(const Graph &) -> MultipartiteResult;

    /**
     * Mask-level clique test used on the hot paths: does the graph given by
     * adj contain a clique of size t using only vertices in candidates?
     */
    auto has_clique_in(std::span<const VertexMask> adj, int t, VertexMask candidates) -> bool;

    /// Size of the largest clique within candidates.
    auto max_clique_in(std::span<const VertexMask> adj, VertexMask candidates) -> int;
}

#endif
