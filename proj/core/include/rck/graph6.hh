/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RCK_GUARD_CORE_GRAPH6_HH
#define RCK_GUARD_CORE_GRAPH6_HH 1

#include <rck/graph.hh>

#include <string>
#include <string_view>

namespace rck
{
    /**
     * Parses one graph6 line. Trailing whitespace (including a CR) is
     * ignored. Throws ParseError on malformed input and SizeError for graphs
     * over the vertex cap.
     */
    auto parse_graph6(std::string_view line) -> Graph;

    auto to_graph6(const Graph &) -> std::string;
}

#endif
