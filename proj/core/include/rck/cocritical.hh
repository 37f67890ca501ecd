/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RCK_GUARD_CORE_COCRITICAL_HH
#define RCK_GUARD_CORE_COCRITICAL_HH 1

#include <rck/arrowing.hh>
#include <rck/colouring.hh>
#include <rck/graph.hh>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rck
{
    struct CocriticalOptions
    {
        SearchConfig search;

        /// Ramsey number for specs outside the built-in table.
        std::optional<int> user_r;
    };

    enum class CocriticalVerdict
    {
        cocritical,
        not_cocritical,
        indeterminate
    };

    auto to_string(CocriticalVerdict) -> const char *;

    struct CocriticalReport
    {
        explicit CocriticalReport(CliqueVector s) : spec(std::move(s)) { }

        CliqueVector spec;
        CocriticalVerdict verdict = CocriticalVerdict::indeterminate;

        /// Outcome of the arrowing check on g itself.
        ArrowOutcome base_outcome = ArrowOutcome::indeterminate;

        /// Lexicographically least non-edge e with g + e not arrowing.
        std::optional<Edge> failing_edge;

        /// A critical colouring of g, present whenever g does not arrow.
        std::optional<EdgeColoring> base_witness;

        int order = 0;
        int edge_count = 0;
        int min_degree = 0;
        int max_degree = 0;
        std::optional<int> chromatic_number;

        std::optional<int> ramsey;
        std::optional<long> ht_bound;
        std::optional<bool> meets_ht;

        std::optional<bool> is_minimal;

        SearchStats stats;

        [[nodiscard]] auto is_cocritical() const -> bool { return verdict == CocriticalVerdict::cocritical; }
    };

    /**
     * g does not arrow, but g + e arrows for every non-edge e. Non-edges are
     * checked in lexicographic order (concurrently when workers > 1); the
     * report and its statistics only cover the checks up to the first
     * refuting edge, so results do not depend on the worker count.
     * Throws PreconditionError for complete graphs.
     */
    auto is_cocritical(const Graph &, const CliqueVector &, const CocriticalOptions & = {}) -> CocriticalReport;

    /**
     * True iff no single-vertex deletion of g is co-critical. Throws
     * PreconditionError unless g itself is co-critical; nullopt means the
     * node limit was hit.
     */
    auto is_minimal_cocritical(const Graph &, const CliqueVector &, const CocriticalOptions & = {}) -> std::optional<bool>;

    enum class LemmaClause
    {
        chromatic_bound,            // chi >= r - 1, equality only for complete (r-1)-partite
        class_clique_bound,         // max class degree <= n - 2, omega(G_l[A_l]) <= t_l - 2
        non_neighbour_clique,       // each non-neighbour of x sees a (t_l - 2)-clique of A_l in colour l
        blue_complete_packing,      // disjoint clique packings in A_k when A_l is blue-complete to A_k
        small_red_neighbourhood,    // k = 2, |A_1| = t_1 - 2 forces blue-completeness and a large A_2
        first_class_removal,        // k >= 3, deleting E_1 leaves a co-critical graph for the tail spec
        min_degree                  // delta >= the minimum degree bound for co-critical graphs
    };

    auto to_string(LemmaClause) -> const char *;

    enum class FindingStatus
    {
        pass,
        vacuous_pass,
        fail,
        indeterminate
    };

    auto to_string(FindingStatus) -> const char *;

    struct LemmaFinding
    {
        LemmaClause clause = LemmaClause::chromatic_bound;
        FindingStatus status = FindingStatus::pass;
        std::optional<int> vertex;
        std::optional<int> colour;
        std::string detail;

        [[nodiscard]] auto holds() const -> bool
        {
            return status == FindingStatus::pass || status == FindingStatus::vacuous_pass;
        }
    };

    enum class ColouringPolicy
    {
        maximise_last,
        minimise_first
    };

    /// Checks the chromatic bound for a co-critical graph with Ramsey number r.
    auto check_chromatic_bound(const Graph &, int r) -> LemmaFinding;

    /**
     * Structural checks of a critical colouring of a co-critical graph, for
     * every x with d(x) <= n - 2 and A_l = N_l(x). The class clique bound and
     * the non-neighbour clique clause are checked for any colouring. With
     * maximise_last the colouring must maximise the last class, and the
     * packing and small-red-neighbourhood clauses are added. With
     * minimise_first and k >= 3, the first-class-removal clause is added,
     * which runs a co-criticality check of its own.
     *
     * Needs k >= 2 and sorted sizes t_1 <= ... <= t_k with t_1 >= 3. Blue is
     * the last colour and red the first.
     */
    auto check_colouring_structure(const Graph &, const CliqueVector &, const EdgeColoring &, ColouringPolicy,
            const CocriticalOptions & = {}) -> std::vector<LemmaFinding>;

    /// Only the first-class-removal clause, for callers that already hold a colouring.
    auto check_first_class_removal(const Graph &, const CliqueVector &, const EdgeColoring &,
            const CocriticalOptions & = {}) -> LemmaFinding;

    /**
     * Finds the extremal colouring for the policy and runs
     * check_colouring_structure on it.
     */
    auto check_colouring_structure(const Graph &, const CliqueVector &, ColouringPolicy,
            const CocriticalOptions & = {}) -> std::vector<LemmaFinding>;

    /**
     * The bound every co-critical graph's minimum degree must meet: the
     * general formula, raised to 4 for (3,3) and 7 for (3,4).
     */
    auto cocritical_min_degree_bound(const CliqueVector &) -> int;

    auto mindeg_assert(const Graph &, const CliqueVector &) -> LemmaFinding;

    /// Largest number of vertex-disjoint s-cliques inside `within`.
    auto max_disjoint_cliques(std::span<const VertexMask> adj, int s, VertexMask within) -> int;

    struct LemmaSuite
    {
        std::vector<LemmaFinding> findings;
        std::optional<EdgeColoring> maximise_last_colouring;
        std::optional<EdgeColoring> minimise_first_colouring;

        /// Why some clauses were not run, if any were skipped.
        std::vector<std::string> skipped;

        [[nodiscard]] auto all_hold() const -> bool;
    };

    /**
     * Runs every applicable check on a graph already reported co-critical:
     * the chromatic bound (when r is known), the minimum degree bound, and
     * the colouring structure under both policies.
     */
    auto run_lemma_suite(const Graph &, const CocriticalReport &, const CocriticalOptions & = {}) -> LemmaSuite;
}

#endif
