/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RCK_GUARD_CORE_CANONICAL_HH
#define RCK_GUARD_CORE_CANONICAL_HH 1

#include <rck/graph.hh>

#include <string>

namespace rck
{
    inline constexpr int max_canonical_vertices = 12;

    /**
     * Returns a string that is equal for two graphs exactly when they are
     * isomorphic. The string is the graph6 encoding of a canonical
     * relabelling, so it can be parsed back into a representative graph.
     *
     * Works by degree refinement to an equitable ordered partition, then
     * individualising vertices of the first non-singleton cell and recursing.
     * Twin vertices (same neighbourhood apart from each other) are only
     * individualised once per cell since swapping them is an automorphism.
     * The smallest leaf encoding wins. Limited to 12 vertices.
     */
    auto canonical_form(const Graph &) -> std::string;
}

#endif
