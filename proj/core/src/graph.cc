/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rck/graph.hh>

#include <algorithm>
#include <numeric>

using std::span;
using std::string;
using std::vector;

namespace rck
{
    using std::to_string;

    auto Edge::between(int a, int b) -> Edge
    {
        if (a == b)
            throw PreconditionError{ "edge endpoints must differ, got " + to_string(a) + " twice" };
        if (a < 0 || b < 0)
            throw PreconditionError{ "negative vertex index" };
        return a < b ? Edge{ a, b } : Edge{ b, a };
    }

    auto to_string(const Edge & e) -> string
    {
        return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    }

    auto VertexSet::members() const -> vector<int>
    {
        vector<int> result;
        for (VertexMask m = _mask ; m ; m &= m - 1)
            result.push_back(lowest(m));
        return result;
    }

    Graph::Graph(int n) :
        _n(n)
    {
        if (n < 1 || n > max_vertices)
            throw SizeError{ "graph order must be in 1.." + to_string(max_vertices) + ", got " + to_string(n) };
    }

    auto Graph::from_edges(int n, span<const Edge> edges) -> Graph
    {
        Graph g{ n };
        for (auto & e : edges) {
            if (e.u < 0 || e.v >= n || e.u >= e.v)
                throw PreconditionError{ "edge " + to_string(e) + " invalid for order " + to_string(n) };
            g._adj[e.u] |= bit(e.v);
            g._adj[e.v] |= bit(e.u);
        }
        return g;
    }

    auto Graph::from_masks(span<const VertexMask> adj) -> Graph
    {
        Graph g{ int(adj.size()) };
        VertexMask range = low_mask(g._n);
        for (int v = 0 ; v < g._n ; ++v) {
            if (adj[v] & ~range)
                throw PreconditionError{ "neighbour mask of vertex " + to_string(v) + " out of range" };
            if (adj[v] & bit(v))
                throw PreconditionError{ "loop at vertex " + to_string(v) };
            g._adj[v] = adj[v];
        }
        for (int u = 0 ; u < g._n ; ++u)
            for (int v = 0 ; v < g._n ; ++v)
                if (g.adjacent(u, v) != g.adjacent(v, u))
                    throw PreconditionError{ "adjacency is not symmetric" };
        return g;
    }

    auto Graph::edge_count() const -> int
    {
        int twice = 0;
        for (int v = 0 ; v < _n ; ++v)
            twice += popcount(_adj[v]);
        return twice / 2;
    }

    auto Graph::is_complete() const -> bool
    {
        for (int v = 0 ; v < _n ; ++v)
            if (popcount(_adj[v]) != _n - 1)
                return false;
        return true;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (int u = 0 ; u < _n ; ++u)
            for (VertexMask m = _adj[u] & ~low_mask(u + 1) ; m ; m &= m - 1)
                result.push_back(Edge{ u, lowest(m) });
        return result;
    }

    auto Graph::non_edges() const -> vector<Edge>
    {
        vector<Edge> result;
        VertexMask range = low_mask(_n);
        for (int u = 0 ; u < _n ; ++u)
            for (VertexMask m = ~_adj[u] & range & ~low_mask(u + 1) ; m ; m &= m - 1)
                result.push_back(Edge{ u, lowest(m) });
        return result;
    }

    auto Graph::induced(VertexSet s) const -> Graph
    {
        auto keep = (s & vertices()).members();
        if (keep.empty())
            throw SizeError{ "induced subgraph on no vertices" };
        Graph result{ int(keep.size()) };
        for (int i = 0 ; i < result._n ; ++i)
            for (int j = 0 ; j < result._n ; ++j)
                if (adjacent(keep[i], keep[j]))
                    result._adj[i] |= bit(j);
        return result;
    }

    auto Graph::without_vertex(int v) const -> Graph
    {
        return induced(vertices().without(v));
    }

    auto Graph::relabelled(span<const int> perm) const -> Graph
    {
        if (int(perm.size()) != _n)
            throw PreconditionError{ "relabelling has wrong length" };
        Graph result{ _n };
        for (int u = 0 ; u < _n ; ++u)
            for (VertexMask m = _adj[u] ; m ; m &= m - 1)
                result._adj[perm[u]] |= bit(perm[lowest(m)]);
        return result;
    }

    auto Graph::operator== (const Graph & o) const -> bool
    {
        return _n == o._n && std::equal(_adj.begin(), _adj.begin() + _n, o._adj.begin());
    }

    auto add_edge(const Graph & g, Edge e) -> Graph
    {
        if (e.u < 0 || e.v >= g.order() || e.u >= e.v)
            throw PreconditionError{ "edge " + to_string(e) + " out of range" };
        if (g.adjacent(e.u, e.v))
            throw PreconditionError{ "edge " + to_string(e) + " already present" };
        vector<VertexMask> adj(g.adjacency().begin(), g.adjacency().end());
        adj[e.u] |= bit(e.v);
        adj[e.v] |= bit(e.u);
        return Graph::from_masks(adj);
    }

    auto complement(const Graph & g) -> Graph
    {
        vector<VertexMask> adj(g.order());
        VertexMask range = low_mask(g.order());
        for (int v = 0 ; v < g.order() ; ++v)
            adj[v] = ~g.neighbours(v) & range & ~bit(v);
        return Graph::from_masks(adj);
    }

    auto join(const Graph & g, const Graph & h) -> Graph
    {
        int n = g.order() + h.order();
        if (n > max_vertices)
            throw SizeError{ "join would have " + to_string(n) + " vertices" };
        vector<VertexMask> adj(n);
        VertexMask g_side = low_mask(g.order()), h_side = low_mask(n) & ~g_side;
        for (int v = 0 ; v < g.order() ; ++v)
            adj[v] = g.neighbours(v) | h_side;
        for (int v = 0 ; v < h.order() ; ++v)
            adj[g.order() + v] = (h.neighbours(v) << g.order()) | g_side;
        return Graph::from_masks(adj);
    }

    auto has_clique_in(span<const VertexMask> adj, int t, VertexMask candidates) -> bool
    {
        if (t <= 0)
            return true;
        if (popcount(candidates) < t)
            return false;
        if (1 == t)
            return true;
        if (2 == t) {
            for (VertexMask m = candidates ; m ; m &= m - 1)
                if (adj[lowest(m)] & candidates)
                    return true;
            return false;
        }

        while (popcount(candidates) >= t) {
            int v = lowest(candidates);
            candidates &= ~bit(v);
            if (has_clique_in(adj, t - 1, candidates & adj[v]))
                return true;
        }
        return false;
    }

    namespace
    {
        // Greedy colouring bound over the candidate set: any clique uses at
        // most one vertex per colour class.
        auto colour_bound(span<const VertexMask> adj, VertexMask candidates) -> int
        {
            int colours = 0;
            while (candidates) {
                ++colours;
                VertexMask uncoloured = candidates;
                while (uncoloured) {
                    int v = lowest(uncoloured);
                    uncoloured &= ~adj[v] & ~bit(v);
                    candidates &= ~bit(v);
                }
            }
            return colours;
        }

        void expand_clique(span<const VertexMask> adj, VertexMask candidates, int size, int & best)
        {
            if (0 == candidates) {
                best = std::max(best, size);
                return;
            }
            while (candidates) {
                if (size + colour_bound(adj, candidates) <= best)
                    return;
                int v = lowest(candidates);
                candidates &= ~bit(v);
                expand_clique(adj, candidates & adj[v], size + 1, best);
            }
        }
    }

    auto max_clique_in(span<const VertexMask> adj, VertexMask candidates) -> int
    {
        int best = 0;
        expand_clique(adj, candidates, 0, best);
        return best;
    }

    auto clique_number(const Graph & g) -> int
    {
        return max_clique_in(g.adjacency(), g.vertices().mask());
    }

    auto independence_number(const Graph & g) -> int
    {
        return clique_number(complement(g));
    }

    auto has_clique(const Graph & g, int t, VertexSet within) -> bool
    {
        if (t < 1)
            throw PreconditionError{ "clique size must be at least 1" };
        return has_clique_in(g.adjacency(), t, (within & g.vertices()).mask());
    }

    namespace
    {
        struct ColouringSearch
        {
            const Graph & g;
            vector<int> order;
            vector<int> colour;
            int best;
            int lower;

            auto allowed(int v, int c) const -> bool
            {
                for (VertexMask m = g.neighbours(v) ; m ; m &= m - 1)
                    if (colour[lowest(m)] == c)
                        return false;
                return true;
            }

            void search(int depth, int used)
            {
                if (best == lower)
                    return;
                if (depth == g.order()) {
                    best = used;
                    return;
                }
                int v = order[depth];
                for (int c = 0 ; c <= used && c < best - 1 ; ++c) {
                    if (! allowed(v, c))
                        continue;
                    colour[v] = c;
                    search(depth + 1, std::max(used, c + 1));
                    colour[v] = -1;
                }
            }
        };
    }

    auto chromatic_number(const Graph & g) -> int
    {
        if (g.order() > 16)
            throw SizeError{ "chromatic_number supports at most 16 vertices" };

        vector<int> order(g.order());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return g.degree(a) > g.degree(b); });

        ColouringSearch s{ g, order, vector<int>(g.order(), -1), 0, clique_number(g) };

        // greedy upper bound in the same order
        for (int v : order) {
            int c = 0;
            while (! s.allowed(v, c))
                ++c;
            s.colour[v] = c;
            s.best = std::max(s.best, c + 1);
        }
        std::fill(s.colour.begin(), s.colour.end(), -1);

        s.search(0, 0);
        return s.best;
    }

    auto degree_stats(const Graph & g) -> DegreeStats
    {
        DegreeStats result;
        for (int v = 0 ; v < g.order() ; ++v)
            result.degrees.push_back(g.degree(v));
        result.min_degree = *std::min_element(result.degrees.begin(), result.degrees.end());
        result.max_degree = *std::max_element(result.degrees.begin(), result.degrees.end());
        return result;
    }

    auto is_complete_multipartite(const Graph & g) -> MultipartiteResult
    {
        // complement must be a disjoint union of cliques, i.e. non-adjacency
        // is an equivalence relation
        auto h = complement(g);
        VertexMask seen = 0;
        int parts = 0;
        for (int v = 0 ; v < g.order() ; ++v) {
            if (seen & bit(v))
                continue;
            VertexMask part = h.neighbours(v) | bit(v);
            for (VertexMask m = part ; m ; m &= m - 1)
                if ((h.neighbours(lowest(m)) | bit(lowest(m))) != part)
                    return { false, 0 };
            seen |= part;
            ++parts;
        }
        return { true, parts };
    }
}
