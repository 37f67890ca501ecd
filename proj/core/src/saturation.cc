/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rck/saturation.hh>

namespace rck
{
    namespace
    {
        auto dichotomy(const Graph & g, int t) -> bool
        {
            auto stats = degree_stats(g);
            return stats.max_degree == g.order() - 1 || stats.min_degree >= 2 * (t - 2);
        }
    }

    auto is_saturated(const Graph & g, int t) -> SaturationReport
    {
        if (t < 2)
            throw PreconditionError{ "saturation needs t >= 2" };

        SaturationReport report;
        report.t = t;
        report.vacuous_complete = g.is_complete();
        report.is_free = ! has_clique(g, t, g.vertices());
        if (! report.is_free)
            return report;

        for (auto & e : g.non_edges())
            if (! has_clique(add_edge(g, e), t, g.vertices())) {
                report.violating_non_edge = e;
                return report;
            }

        report.is_saturated = true;
        report.hajnal_holds = dichotomy(g, t);
        return report;
    }

    auto check_hajnal(const Graph & g, int t) -> bool
    {
        if (! is_saturated(g, t).is_saturated)
            throw PreconditionError{ "check_hajnal needs a K_t-saturated graph" };
        return dichotomy(g, t);
    }
}
