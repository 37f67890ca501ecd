/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rck/constructions.hh>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <vector>

using std::optional;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace rck
{
    using std::to_string;

    auto complete_graph(int n) -> Graph
    {
        return complement(Graph{ n });
    }

    auto empty_graph(int n) -> Graph
    {
        return Graph{ n };
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw PreconditionError{ "cycles need at least 3 vertices" };
        vector<Edge> edges;
        for (int v = 0 ; v < n ; ++v)
            edges.push_back(Edge::between(v, (v + 1) % n));
        std::sort(edges.begin(), edges.end());
        return Graph::from_edges(n, edges);
    }

    auto path_graph(int n) -> Graph
    {
        vector<Edge> edges;
        for (int v = 0 ; v + 1 < n ; ++v)
            edges.push_back(Edge{ v, v + 1 });
        return Graph::from_edges(n, edges);
    }

    auto star_graph(int leaves) -> Graph
    {
        return join(Graph{ 1 }, Graph{ leaves });
    }

    auto complete_multipartite(span<const int> part_sizes) -> Graph
    {
        if (part_sizes.empty())
            throw PreconditionError{ "complete multipartite graph needs at least one part" };
        for (int p : part_sizes)
            if (p < 1)
                throw PreconditionError{ "parts must be non-empty" };
        auto result = Graph{ part_sizes[0] };
        for (auto p : part_sizes.subspan(1))
            result = join(result, Graph{ p });
        return result;
    }

    auto k6_minus() -> Graph
    {
        auto k6 = complete_graph(6);
        vector<VertexMask> adj(k6.adjacency().begin(), k6.adjacency().end());
        adj[0] &= ~bit(1);
        adj[1] &= ~bit(0);
        return Graph::from_masks(adj);
    }

    auto to_string(RamseyProvenance p) -> const char *
    {
        switch (p) {
            case RamseyProvenance::verified_by_search: return "verified-by-search";
            case RamseyProvenance::literature:        return "literature";
            case RamseyProvenance::user_supplied:      return "user-supplied";
        }
        throw std::logic_error{ "bad RamseyProvenance" };
    }

    auto known_ramsey_number(const CliqueVector & spec) -> optional<int>
    {
        auto sorted = spec.sorted();
        if (sorted == CliqueVector{ { 3, 3 } })
            return 6;
        if (sorted == CliqueVector{ { 3, 4 } })
            return 9;
        return std::nullopt;
    }

    auto resolve_ramsey_number(const CliqueVector & spec, optional<int> user_r) -> optional<int>
    {
        if (auto r = known_ramsey_number(spec))
            return r;
        return user_r;
    }

    auto ramsey_fact(const CliqueVector & spec, bool verify, optional<int> user_r, const SearchConfig & config) -> RamseyFact
    {
        auto known = known_ramsey_number(spec);

        if (verify) {
            if (! known)
                throw PreconditionError{ "verified Ramsey facts are only available for (3,3) and (3,4), not ("
                    + spec.to_string() + ")" };

            auto upper = arrows(complete_graph(*known), spec, config);
            auto lower = arrows(complete_graph(*known - 1), spec, config);
            if (! upper.decided() || ! lower.decided())
                throw SizeError{ "Ramsey verification for (" + spec.to_string() + ") exceeded the node limit" };
            if (! upper.arrows() || lower.arrows())
                throw std::logic_error{ "search disagrees with the Ramsey table for (" + spec.to_string() + ")" };

            return RamseyFact{ spec, *known, RamseyProvenance::verified_by_search, std::move(lower.witness) };
        }

        if (known)
            return RamseyFact{ spec, *known, RamseyProvenance::literature, std::nullopt };
        if (user_r)
            return RamseyFact{ spec, *user_r, RamseyProvenance::user_supplied, std::nullopt };
        throw PreconditionError{ "no Ramsey number known for (" + spec.to_string() + "); supply one explicitly" };
    }

    auto hanson_toft_edge_count(int r, int n) -> long
    {
        long a = r - 2, b = n - r + 2;
        return a * b + a * (a - 1) / 2;
    }

    auto hanson_toft(const CliqueVector & spec, int n, optional<int> user_r) -> Graph
    {
        auto r = resolve_ramsey_number(spec, user_r);
        if (! r)
            throw PreconditionError{ "no Ramsey number known for (" + spec.to_string() + "); supply one explicitly" };
        if (n < *r)
            throw PreconditionError{ "Hanson-Toft graph needs n >= r = " + to_string(*r) + ", got " + to_string(n) };
        if (*r < 3)
            throw PreconditionError{ "Hanson-Toft graph needs r >= 3" };
        return join(complete_graph(*r - 2), empty_graph(n - *r + 2));
    }

    auto mindeg_bound(const CliqueVector & spec) -> int
    {
        if (! spec.is_sorted())
            throw PreconditionError{ "minimum degree bound needs t_1 <= ... <= t_k" };
        if (spec.colours() < 2)
            throw PreconditionError{ "minimum degree bound needs at least two colours" };
        for (int t : spec.sizes())
            if (t < 3)
                throw PreconditionError{ "minimum degree bound needs every t_i >= 3" };

        int k = spec.colours();
        int sum = std::accumulate(spec.sizes().begin(), spec.sizes().end(), 0);
        return spec[k - 1] - 2 * k - 1 + sum;
    }

    auto ramsey_lower_bound(int s, int t) -> int
    {
        if (s < 2 || t < 2)
            throw PreconditionError{ "ramsey_lower_bound needs s, t >= 2" };
        return s * (t - 1);
    }

    namespace
    {
        auto parse_int(string_view text, const string & context) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
                throw ParseError{ "bad number '" + string(text) + "' in construction '" + context + "'" };
            return value;
        }

        auto split(string_view text, char sep) -> vector<string_view>
        {
            vector<string_view> result;
            while (true) {
                auto at = text.find(sep);
                result.push_back(text.substr(0, at));
                if (at == string_view::npos)
                    return result;
                text.remove_prefix(at + 1);
            }
        }
    }

    auto construct(string_view name, optional<int> user_r) -> Graph
    {
        auto parts = split(name, ':');
        auto kind = parts[0];
        string context{ name };

        auto expect_parts = [&] (std::size_t n) {
            if (parts.size() != n)
                throw ParseError{ "construction '" + context + "' has the wrong number of ':' fields" };
        };

        if (kind == "k6minus") {
            expect_parts(1);
            return k6_minus();
        }
        if (kind == "kn") {
            expect_parts(2);
            return complete_graph(parse_int(parts[1], context));
        }
        if (kind == "empty") {
            expect_parts(2);
            return empty_graph(parse_int(parts[1], context));
        }
        if (kind == "cycle") {
            expect_parts(2);
            return cycle_graph(parse_int(parts[1], context));
        }
        if (kind == "hanson-toft") {
            expect_parts(3);
            return hanson_toft(CliqueVector::parse(parts[1]), parse_int(parts[2], context), user_r);
        }
        if (kind == "complete-multipartite") {
            expect_parts(2);
            vector<int> sizes;
            for (auto p : split(parts[1], ','))
                sizes.push_back(parse_int(p, context));
            return complete_multipartite(sizes);
        }
        throw ParseError{ "unknown construction '" + context + "'" };
    }
}
