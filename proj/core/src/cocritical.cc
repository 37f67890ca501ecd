/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rck/cocritical.hh>
#include <rck/constructions.hh>
#include <rck/parallel.hh>

#include <algorithm>
#include <atomic>
#include <chrono>

using std::atomic;
using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::vector;

using namespace std::chrono;

namespace rck
{
    using std::to_string;

    auto to_string(CocriticalVerdict v) -> const char *
    {
        switch (v) {
            case CocriticalVerdict::cocritical:     return "cocritical";
            case CocriticalVerdict::not_cocritical: return "not-cocritical";
            case CocriticalVerdict::indeterminate:  return "indeterminate";
        }
        throw std::logic_error{ "bad CocriticalVerdict" };
    }

    auto to_string(LemmaClause c) -> const char *
    {
        switch (c) {
            case LemmaClause::chromatic_bound:         return "chromatic-bound";
            case LemmaClause::class_clique_bound:      return "class-clique-bound";
            case LemmaClause::non_neighbour_clique:    return "non-neighbour-clique";
            case LemmaClause::blue_complete_packing:   return "blue-complete-packing";
            case LemmaClause::small_red_neighbourhood: return "small-red-neighbourhood";
            case LemmaClause::first_class_removal:     return "first-class-removal";
            case LemmaClause::min_degree:              return "min-degree";
        }
        throw std::logic_error{ "bad LemmaClause" };
    }

    auto to_string(FindingStatus s) -> const char *
    {
        switch (s) {
            case FindingStatus::pass:          return "pass";
            case FindingStatus::vacuous_pass:  return "vacuous-pass";
            case FindingStatus::fail:          return "fail";
            case FindingStatus::indeterminate: return "indeterminate";
        }
        throw std::logic_error{ "bad FindingStatus" };
    }

    namespace
    {
        auto finding_for(LemmaClause clause, optional<int> vertex = std::nullopt, optional<int> colour = std::nullopt) -> LemmaFinding
        {
            LemmaFinding finding;
            finding.clause = clause;
            finding.vertex = vertex;
            finding.colour = colour;
            return finding;
        }
    }

    auto is_cocritical(const Graph & g, const CliqueVector & spec, const CocriticalOptions & options) -> CocriticalReport
    {
        if (g.is_complete())
            throw PreconditionError{ "co-criticality is only defined for non-complete graphs" };

        auto start = steady_clock::now();

        auto degrees = degree_stats(g);
        CocriticalReport report{ spec };
        report.order = g.order();
        report.edge_count = g.edge_count();
        report.min_degree = degrees.min_degree;
        report.max_degree = degrees.max_degree;
        if (g.order() <= 16)
            report.chromatic_number = chromatic_number(g);

        report.ramsey = resolve_ramsey_number(spec, options.user_r);
        if (report.ramsey) {
            report.ht_bound = hanson_toft_edge_count(*report.ramsey, g.order());
            report.meets_ht = report.edge_count >= *report.ht_bound;
        }

        auto base = arrows(g, spec, options.search);
        report.stats = base.stats;
        report.base_outcome = base.outcome;
        report.base_witness = std::move(base.witness);

        if (base.outcome == ArrowOutcome::indeterminate)
            report.verdict = CocriticalVerdict::indeterminate;
        else if (base.outcome == ArrowOutcome::arrows)
            report.verdict = CocriticalVerdict::not_cocritical;
        else {
            auto non_edges = g.non_edges();
            vector<optional<ArrowVerdict>> results(non_edges.size());
            atomic<size_t> first_refuted{ non_edges.size() };

            SearchConfig inner = options.search;
            if (non_edges.size() > 1)
                inner.workers = 1;

            parallel_for(non_edges.size(), options.search.workers, [&] (size_t i) {
                if (i > first_refuted.load())
                    return;
                results[i] = arrows(add_edge(g, non_edges[i]), spec, inner);
                if (results[i]->outcome == ArrowOutcome::does_not_arrow) {
                    size_t current = first_refuted.load();
                    while (i < current && ! first_refuted.compare_exchange_weak(current, i))
                        ;
                }
            });

            report.verdict = CocriticalVerdict::cocritical;
            for (size_t i = 0 ; i < non_edges.size() ; ++i) {
                report.stats += results[i]->stats;
                if (results[i]->outcome == ArrowOutcome::indeterminate) {
                    report.verdict = CocriticalVerdict::indeterminate;
                    break;
                }
                if (results[i]->outcome == ArrowOutcome::does_not_arrow) {
                    report.verdict = CocriticalVerdict::not_cocritical;
                    report.failing_edge = non_edges[i];
                    break;
                }
            }
        }

        report.stats.wall_seconds = duration<double>(steady_clock::now() - start).count();
        return report;
    }

    auto is_minimal_cocritical(const Graph & g, const CliqueVector & spec, const CocriticalOptions & options) -> optional<bool>
    {
        auto own = is_cocritical(g, spec, options);
        if (own.verdict == CocriticalVerdict::indeterminate)
            return std::nullopt;
        if (! own.is_cocritical())
            throw PreconditionError{ "minimality is only defined for co-critical graphs" };

        for (int v = 0 ; v < g.order() ; ++v) {
            auto h = g.without_vertex(v);
            if (h.is_complete())
                continue;
            auto sub = is_cocritical(h, spec, options);
            if (sub.verdict == CocriticalVerdict::indeterminate)
                return std::nullopt;
            if (sub.is_cocritical())
                return false;
        }
        return true;
    }

    auto check_chromatic_bound(const Graph & g, int r) -> LemmaFinding
    {
        auto finding = finding_for(LemmaClause::chromatic_bound);
        int chi = chromatic_number(g);
        auto multipartite = is_complete_multipartite(g);
        bool bound = chi >= r - 1;
        bool equality_ok = chi != r - 1 || (multipartite.is_complete_multipartite && multipartite.parts == r - 1);
        finding.status = bound && equality_ok ? FindingStatus::pass : FindingStatus::fail;
        finding.detail = "chi=" + to_string(chi) + " r=" + to_string(r)
            + (multipartite.is_complete_multipartite ? " complete " + to_string(multipartite.parts) + "-partite" : "");
        return finding;
    }

    auto max_disjoint_cliques(span<const VertexMask> adj, int s, VertexMask within) -> int
    {
        if (s <= 0)
            return 0;
        if (1 == s)
            return popcount(within);

        int best = 0;

        // v is the lowest vertex still available: either it is left out, or
        // it is the lowest vertex of one of the chosen cliques
        auto recurse = [&] (auto & self, VertexMask available, int count) -> void {
            best = std::max(best, count);
            if (count + popcount(available) / s <= best)
                return;
            if (0 == available)
                return;
            int v = lowest(available);
            VertexMask rest = available & ~bit(v);

            // cliques of size s through v, built from higher vertices
            auto extend = [&] (auto & grow, VertexMask clique, VertexMask candidates, int size) -> void {
                if (size == s) {
                    self(self, available & ~clique, count + 1);
                    return;
                }
                for (VertexMask m = candidates ; m ; m &= m - 1) {
                    int w = lowest(m);
                    grow(grow, clique | bit(w), candidates & adj[w] & ~low_mask(w + 1), size + 1);
                }
            };
            extend(extend, bit(v), rest & adj[v], 1);

            self(self, rest, count);
        };
        recurse(recurse, within, 0);
        return best;
    }

    namespace
    {
        void require_structure_preconditions(const CliqueVector & spec)
        {
            if (spec.colours() < 2)
                throw PreconditionError{ "colouring structure checks need at least two colours" };
            if (! spec.is_sorted())
                throw PreconditionError{ "colouring structure checks need t_1 <= ... <= t_k" };
            if (spec[0] < 3)
                throw PreconditionError{ "colouring structure checks need t_1 >= 3" };
        }

        auto describe_set(VertexMask m) -> string
        {
            string result = "{";
            bool first = true;
            for ( ; m ; m &= m - 1) {
                result += (first ? "" : ",") + to_string(lowest(m));
                first = false;
            }
            return result + "}";
        }
    }

    auto check_first_class_removal(const Graph & g, const CliqueVector & spec, const EdgeColoring & colouring,
            const CocriticalOptions & options) -> LemmaFinding
    {
        auto finding = finding_for(LemmaClause::first_class_removal);
        if (spec.colours() < 3) {
            finding.status = FindingStatus::vacuous_pass;
            finding.detail = "needs at least three colours";
            return finding;
        }

        auto red = colouring.class_adjacency(0);
        vector<VertexMask> adj(g.adjacency().begin(), g.adjacency().end());
        for (int v = 0 ; v < g.order() ; ++v)
            adj[v] &= ~red[v];
        auto reduced = Graph::from_masks(adj);

        CocriticalOptions inner = options;
        inner.user_r = std::nullopt;
        auto report = is_cocritical(reduced, spec.tail(), inner);
        switch (report.verdict) {
            case CocriticalVerdict::cocritical:     finding.status = FindingStatus::pass; break;
            case CocriticalVerdict::not_cocritical: finding.status = FindingStatus::fail; break;
            case CocriticalVerdict::indeterminate:  finding.status = FindingStatus::indeterminate; break;
        }
        finding.detail = "|E_1|=" + to_string(colouring.class_size(0)) + " reduced graph " + to_string(report.verdict)
            + " for (" + spec.tail().to_string() + ")";
        return finding;
    }

    auto check_colouring_structure(const Graph & g, const CliqueVector & spec, const EdgeColoring & colouring,
            ColouringPolicy policy, const CocriticalOptions & options) -> vector<LemmaFinding>
    {
        require_structure_preconditions(spec);
        if (! is_critical(g, colouring, spec))
            throw PreconditionError{ "colouring structure checks need a critical colouring" };

        int n = g.order(), k = spec.colours(), blue = k - 1;
        VertexMask everything = g.vertices().mask();

        vector<ClassAdjacency> cls;
        vector<int> class_max_degree;
        for (int c = 0 ; c < k ; ++c) {
            cls.push_back(colouring.class_adjacency(c));
            int d = 0;
            for (int v = 0 ; v < n ; ++v)
                d = std::max(d, popcount(cls[c][v]));
            class_max_degree.push_back(d);
        }
        auto adj_of = [&] (int c) { return span<const VertexMask>{ cls[c].data(), size_t(n) }; };

        vector<LemmaFinding> findings;
        for (int x = 0 ; x < n ; ++x) {
            if (g.degree(x) > n - 2)
                continue;

            VertexMask outside = everything & ~g.neighbours(x) & ~bit(x);
            vector<VertexMask> a(k);
            for (int c = 0 ; c < k ; ++c)
                a[c] = cls[c][x];

            for (int c = 0 ; c < k ; ++c) {
                int omega = max_clique_in(adj_of(c), a[c]);

                auto bound = finding_for(LemmaClause::class_clique_bound, x, c);
                bool ok = class_max_degree[c] <= n - 2 && omega <= spec[c] - 2;
                bound.status = ok ? FindingStatus::pass : FindingStatus::fail;
                bound.detail = "max class degree " + to_string(class_max_degree[c]) + ", omega(A)=" + to_string(omega);
                findings.push_back(bound);

                auto sees = finding_for(LemmaClause::non_neighbour_clique, x, c);
                optional<int> bad;
                for (VertexMask m = outside ; m ; m &= m - 1) {
                    int u = lowest(m);
                    if (! has_clique_in(adj_of(c), spec[c] - 2, a[c] & cls[c][u])) {
                        bad = u;
                        break;
                    }
                }
                sees.status = (! bad && omega == spec[c] - 2) ? FindingStatus::pass : FindingStatus::fail;
                sees.detail = bad ? "vertex " + to_string(*bad) + " sees no (t-2)-clique of A in this colour"
                    : "omega(A)=" + to_string(omega);
                findings.push_back(sees);
            }

            if (policy == ColouringPolicy::maximise_last) {
                for (int c = 0 ; c < k - 1 ; ++c) {
                    auto packing = finding_for(LemmaClause::blue_complete_packing, x, c);
                    bool blue_complete = true;
                    for (VertexMask m = a[c] ; m ; m &= m - 1)
                        if ((cls[blue][lowest(m)] & a[blue]) != a[blue])
                            blue_complete = false;

                    if (! blue_complete) {
                        packing.status = FindingStatus::vacuous_pass;
                        packing.detail = "A_" + to_string(c + 1) + " not blue-complete to A_" + to_string(k);
                    }
                    else {
                        int tl = spec[c], tk = spec[blue];
                        int in_colour = max_disjoint_cliques(adj_of(c), tl - 1, a[blue]);
                        int in_blue = max_disjoint_cliques(adj_of(blue), tk - 2, a[blue]);
                        int size = popcount(a[blue]);
                        bool ok = in_colour >= tk - 2 && in_blue >= tl - 1 && size >= (tl - 1) * (tk - 2);
                        packing.status = ok ? FindingStatus::pass : FindingStatus::fail;
                        packing.detail = "disjoint K_" + to_string(tl - 1) + " in colour " + to_string(c + 1) + ": "
                            + to_string(in_colour) + ", disjoint K_" + to_string(tk - 2) + " in blue: "
                            + to_string(in_blue) + ", |A_k|=" + to_string(size);
                    }
                    findings.push_back(packing);
                }

                if (2 == k) {
                    auto small = finding_for(LemmaClause::small_red_neighbourhood, x);
                    int t1 = spec[0], t2 = spec[1];
                    if (popcount(a[0]) != t1 - 2) {
                        small.status = FindingStatus::vacuous_pass;
                        small.detail = "|A_1|=" + to_string(popcount(a[0]));
                    }
                    else {
                        bool blue_complete = true;
                        for (VertexMask m = a[0] ; m ; m &= m - 1)
                            if ((cls[blue][lowest(m)] & a[1]) != a[1])
                                blue_complete = false;
                        int need = (t1 - 1) * (t2 - 2) + 1;
                        bool ok = blue_complete && popcount(a[1]) >= need;
                        small.status = ok ? FindingStatus::pass : FindingStatus::fail;
                        small.detail = "A_1=" + describe_set(a[0]) + " A_2=" + describe_set(a[1])
                            + (blue_complete ? " blue-complete" : " not blue-complete") + ", need |A_2|>=" + to_string(need);
                    }
                    findings.push_back(small);
                }
            }
        }

        if (policy == ColouringPolicy::minimise_first && k >= 3)
            findings.push_back(check_first_class_removal(g, spec, colouring, options));

        return findings;
    }

    auto check_colouring_structure(const Graph & g, const CliqueVector & spec, ColouringPolicy policy,
            const CocriticalOptions & options) -> vector<LemmaFinding>
    {
        require_structure_preconditions(spec);
        ExtremalObjective objective = policy == ColouringPolicy::maximise_last
            ? ExtremalObjective{ spec.colours() - 1, ExtremalGoal::maximise }
            : ExtremalObjective{ 0, ExtremalGoal::minimise };

        auto extremal = extremal_critical_colouring(g, spec, objective, options.search);
        if (extremal.outcome == ArrowOutcome::arrows)
            throw PreconditionError{ "graph has no critical colouring" };
        if (extremal.outcome == ArrowOutcome::indeterminate) {
            auto finding = finding_for(LemmaClause::class_clique_bound);
            finding.status = FindingStatus::indeterminate;
            finding.detail = "extremal colouring search hit the node limit";
            return { finding };
        }
        return check_colouring_structure(g, spec, *extremal.colouring, policy, options);
    }

    auto cocritical_min_degree_bound(const CliqueVector & spec) -> int
    {
        int bound = mindeg_bound(spec);
        if (spec == CliqueVector{ { 3, 3 } })
            bound = std::max(bound, 4);
        if (spec == CliqueVector{ { 3, 4 } })
            bound = std::max(bound, 7);
        return bound;
    }

    auto mindeg_assert(const Graph & g, const CliqueVector & spec) -> LemmaFinding
    {
        auto finding = finding_for(LemmaClause::min_degree);
        int bound = cocritical_min_degree_bound(spec);
        int delta = degree_stats(g).min_degree;
        finding.status = delta >= bound ? FindingStatus::pass : FindingStatus::fail;
        finding.detail = "delta=" + to_string(delta) + " bound=" + to_string(bound);
        return finding;
    }

    auto LemmaSuite::all_hold() const -> bool
    {
        return std::all_of(findings.begin(), findings.end(), [] (const LemmaFinding & f) { return f.holds(); });
    }

    auto run_lemma_suite(const Graph & g, const CocriticalReport & report, const CocriticalOptions & options) -> LemmaSuite
    {
        if (! report.is_cocritical())
            throw PreconditionError{ "the lemma suite needs a co-critical graph" };

        LemmaSuite suite;
        auto & spec = report.spec;

        if (report.ramsey) {
            if (g.order() <= 16)
                suite.findings.push_back(check_chromatic_bound(g, *report.ramsey));
            else
                suite.skipped.push_back("chromatic-bound: more than 16 vertices");
        }
        else
            suite.skipped.push_back("chromatic-bound: Ramsey number unknown");

        bool structured = spec.colours() >= 2 && spec.is_sorted() && spec[0] >= 3;
        if (! structured) {
            suite.skipped.push_back("structure and degree checks need sorted sizes, all at least 3, and k >= 2");
            return suite;
        }

        suite.findings.push_back(mindeg_assert(g, spec));

        auto objective_for = [&] (ColouringPolicy policy) {
            return policy == ColouringPolicy::maximise_last
                ? ExtremalObjective{ spec.colours() - 1, ExtremalGoal::maximise }
                : ExtremalObjective{ 0, ExtremalGoal::minimise };
        };

        for (auto policy : { ColouringPolicy::maximise_last, ColouringPolicy::minimise_first }) {
            if (policy == ColouringPolicy::minimise_first && spec.colours() < 3)
                continue;
            auto extremal = extremal_critical_colouring(g, spec, objective_for(policy), options.search);
            if (extremal.outcome != ArrowOutcome::does_not_arrow) {
                auto finding = finding_for(policy == ColouringPolicy::maximise_last
                    ? LemmaClause::blue_complete_packing : LemmaClause::first_class_removal);
                finding.status = FindingStatus::indeterminate;
                finding.detail = "extremal colouring search did not finish";
                suite.findings.push_back(finding);
                continue;
            }
            auto found = check_colouring_structure(g, spec, *extremal.colouring, policy, options);
            suite.findings.insert(suite.findings.end(), found.begin(), found.end());
            if (policy == ColouringPolicy::maximise_last)
                suite.maximise_last_colouring = std::move(extremal.colouring);
            else
                suite.minimise_first_colouring = std::move(extremal.colouring);
        }

        return suite;
    }
}
