/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RCK_GUARD_CORE_ARROWING_HH
#define RCK_GUARD_CORE_ARROWING_HH 1

#include <rck/colouring.hh>
#include <rck/graph.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace rck
{
    struct SearchConfig
    {
        /// Unset means unlimited. Hitting the limit gives an indeterminate result, never a verdict.
        std::optional<std::uint64_t> node_limit;

        /// Threads used for subproblems. Results do not depend on this.
        int workers = 1;

        /// Branching levels expanded into independent subproblems. Unset
        /// means 2 when the graph has more than 20 edges, otherwise 0.
        std::optional<int> split_depth;

        bool symmetry_breaking = true;
    };

    struct SearchStats
    {
        std::uint64_t nodes = 0;
        int max_depth = 0;
        std::uint64_t subproblems = 0;
        double wall_seconds = 0.0;

        auto operator+= (const SearchStats &) -> SearchStats &;
    };

    enum class ArrowOutcome
    {
        arrows,
        does_not_arrow,
        indeterminate
    };

    auto to_string(ArrowOutcome) -> const char *;

    struct ArrowVerdict
    {
        ArrowOutcome outcome = ArrowOutcome::indeterminate;

        /// Present exactly when outcome is does_not_arrow, and always critical.
        std::optional<EdgeColoring> witness;

        SearchStats stats;

        [[nodiscard]] auto arrows() const -> bool { return outcome == ArrowOutcome::arrows; }
        [[nodiscard]] auto decided() const -> bool { return outcome != ArrowOutcome::indeterminate; }
    };

    /**
     * Decides g -> (K_{t_1}, ..., K_{t_k}).
     *
     * Depth-first search over edges. Each uncoloured edge keeps the set of
     * colours it could take without closing a monochromatic target clique;
     * the next edge is the one with fewest such colours, then the largest
     * monochromatic common neighbourhood, then lowest lexicographic index.
     * Colours are tried in ascending order. Only cliques through the newly
     * coloured edge can appear, so the test looks at the common neighbours
     * of its endpoints in that colour class.
     *
     * The top split_depth branching levels are expanded into subproblems
     * which may run concurrently. The witness is the one from the earliest
     * subproblem (in search order) that has one, and statistics cover the
     * expansion plus every subproblem up to and including that one, so the
     * verdict, witness and statistics are identical for any worker count.
     */
    auto arrows(const Graph &, const CliqueVector &, const SearchConfig & = {}) -> ArrowVerdict;

    struct SeedRestriction
    {
        Edge edge;
        std::uint8_t allowed_colours = 0;
    };

    struct SymmetrySeed
    {
        std::vector<SeedRestriction> restrictions;
        bool colour_swap = false;
        bool vertex_fixed = false;
    };

    /**
     * Restrictions that keep the search sound. When colours share a target
     * size they are interchangeable, so the first edge only needs the
     * smallest colour of each interchangeable group. For complete graphs all
     * edges are equivalent and the first edge is (0,1).
     */
    auto symmetry_breaking_seed(const Graph &, const CliqueVector &) -> SymmetrySeed;

    enum class ExtremalGoal
    {
        maximise,
        minimise
    };

    struct ExtremalObjective
    {
        int colour = 0;
        ExtremalGoal goal = ExtremalGoal::maximise;
    };

    struct ExtremalResult
    {
        /// arrows means no critical colouring exists.
        ArrowOutcome outcome = ArrowOutcome::indeterminate;
        std::optional<EdgeColoring> colouring;
        int value = 0;
        SearchStats stats;
    };

    /**
     * Branch and bound for a critical colouring with the largest (or
     * smallest) colour class `objective.colour`. Among optimal colourings
     * the first in search order is returned.
     */
    auto extremal_critical_colouring(const Graph &, const CliqueVector &, ExtremalObjective,
            const SearchConfig & = {}) -> ExtremalResult;

    struct EnumerationResult
    {
        std::vector<EdgeColoring> colourings;
        bool truncated = false;
    };

    inline constexpr int max_unbounded_enumeration_edges = 40;

    /**
     * Visits critical colourings in lexicographic order of their colour
     * word. The visitor returns false to stop. Returns true if the stream
     * was exhausted.
     */
    auto for_each_critical_colouring(const Graph &, const CliqueVector &,
            const std::function<auto (const EdgeColoring &) -> bool> &) -> bool;

    /// Collects critical colourings; a limit is required above 40 edges.
    auto enumerate_critical_colourings(const Graph &, const CliqueVector &,
            std::optional<std::size_t> limit = std::nullopt) -> EnumerationResult;
}

#endif
