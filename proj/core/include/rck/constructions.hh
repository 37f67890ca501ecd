/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RCK_GUARD_CORE_CONSTRUCTIONS_HH
#define RCK_GUARD_CORE_CONSTRUCTIONS_HH 1

#include <rck/arrowing.hh>
#include <rck/colouring.hh>
#include <rck/graph.hh>

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace rck
{
    auto complete_graph(int n) -> Graph;
    auto empty_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;
    auto star_graph(int leaves) -> Graph;
    auto complete_multipartite(std::span<const int> part_sizes) -> Graph;

    /// K_6 with the edge {0,1} removed.
    auto k6_minus() -> Graph;

    enum class RamseyProvenance
    {
        verified_by_search,
        literature,
        user_supplied
    };

    auto to_string(RamseyProvenance) -> const char *;

    struct RamseyFact
    {
        CliqueVector spec;
        int r = 0;
        RamseyProvenance provenance = RamseyProvenance::literature;

        /// Critical colouring of K_{r-1}, present for verified facts.
        std::optional<EdgeColoring> lower_witness;
    };

    /**
     * The static table of Ramsey numbers the toolkit trusts without a
     * user-supplied value: r(3,3) = 6 and r(3,4) = 9. Lookup ignores the
     * order of the clique sizes.
     */
    auto known_ramsey_number(const CliqueVector &) -> std::optional<int>;

    /**
     * With verify set, confirms r by showing K_r arrows and K_{r-1} does not,
     * keeping the K_{r-1} witness; only (3,3) and (3,4) are supported that
     * way. Without verify, returns the table value marked literature; specs
     * outside the table need user_r, which is recorded as user_supplied.
     */
    auto ramsey_fact(const CliqueVector &, bool verify, std::optional<int> user_r = std::nullopt,
            const SearchConfig & = {}) -> RamseyFact;

    /// The Ramsey number to use for spec: the table value, else user_r.
    auto resolve_ramsey_number(const CliqueVector &, std::optional<int> user_r) -> std::optional<int>;

    /// K_{r-2} joined with an independent set of n - r + 2 vertices.
    auto hanson_toft(const CliqueVector &, int n, std::optional<int> user_r = std::nullopt) -> Graph;

    /// (r-2)(n-r+2) + C(r-2, 2).
    auto hanson_toft_edge_count(int r, int n) -> long;

    /**
     * t_k - 2k - 1 + sum t_i for sorted sizes all at least 3; for two
     * colours this is 2 t_2 + t_1 - 5.
     */
    auto mindeg_bound(const CliqueVector &) -> int;

    /// s(t-1), the closed form of the lower bound on r(K_s, K_t).
    auto ramsey_lower_bound(int s, int t) -> int;

    /**
     * Builds a graph by name: "kn:N", "empty:N", "cycle:N", "k6minus",
     * "hanson-toft:T1,T2[,..]:N" and "complete-multipartite:P1,P2,...".
     */
    auto construct(std::string_view name, std::optional<int> user_r = std::nullopt) -> Graph;
}

#endif
