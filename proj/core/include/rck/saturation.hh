/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RCK_GUARD_CORE_SATURATION_HH
#define RCK_GUARD_CORE_SATURATION_HH 1

#include <rck/graph.hh>

#include <optional>

namespace rck
{
    struct SaturationReport
    {
        int t = 0;
        bool is_free = false;
        bool is_saturated = false;

        /// The input is complete: it has no non-edges, so when K_t-free it is saturated only vacuously.
        bool vacuous_complete = false;

        /// Lexicographically least non-edge whose addition keeps the graph K_t-free.
        std::optional<Edge> violating_non_edge;

        /// Whether max degree is n-1 or min degree is at least 2(t-2); set for saturated graphs.
        std::optional<bool> hajnal_holds;
    };

    /// Decides K_t-saturation by adding every non-edge in turn.
    auto is_saturated(const Graph &, int t) -> SaturationReport;

    /**
     * The dichotomy for K_t-saturated graphs: max degree n-1 or min degree
     * at least 2(t-2). Throws PreconditionError if g is not K_t-saturated.
     * A false return on a saturated graph means something upstream is wrong.
     */
    auto check_hajnal(const Graph &, int t) -> bool;
}

#endif
