/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RCK_GUARD_TESTS_ORACLES_HH
#define RCK_GUARD_TESTS_ORACLES_HH 1

// Deliberately naive reference implementations. Nothing here shares code
// with the library beyond the Graph accessors, so agreement is evidence.

#include <rck/colouring.hh>
#include <rck/graph.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace oracle
{
    using rck::Graph;

    inline auto is_clique(const Graph & g, std::uint32_t subset) -> bool
    {
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v = u + 1 ; v < g.order() ; ++v)
                if ((subset >> u & 1) && (subset >> v & 1) && ! g.adjacent(u, v))
                    return false;
        return true;
    }

    inline auto clique_number(const Graph & g) -> int
    {
        int best = 0;
        for (std::uint32_t s = 0 ; s < (1u << g.order()) ; ++s)
            if (std::popcount(s) > best && is_clique(g, s))
                best = std::popcount(s);
        return best;
    }

    inline auto colourable(const Graph & g, int k, std::vector<int> & colour, int v) -> bool
    {
        if (v == g.order())
            return true;
        for (int c = 0 ; c < k ; ++c) {
            bool ok = true;
            for (int u = 0 ; u < v ; ++u)
                if (g.adjacent(u, v) && colour[u] == c)
                    ok = false;
            if (ok) {
                colour[v] = c;
                if (colourable(g, k, colour, v + 1))
                    return true;
            }
        }
        return false;
    }

    inline auto chromatic_number(const Graph & g) -> int
    {
        std::vector<int> colour(g.order(), -1);
        for (int k = 1 ; ; ++k)
            if (colourable(g, k, colour, 0))
                return k;
    }

    inline auto isomorphic(const Graph & g, const Graph & h) -> bool
    {
        if (g.order() != h.order() || g.edge_count() != h.edge_count())
            return false;
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (g.relabelled(perm) == h)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    /**
     * Every colour word over the lexicographic edge order, tested against
     * precomputed edge masks of all t-cliques. Words are in lexicographic
     * order of the colour string.
     */
    class ColouringOracle
    {
        private:
            int _k;
            int _m;
            std::vector<std::vector<std::uint64_t>> _clique_masks;

        public:
            ColouringOracle(const Graph & g, const rck::CliqueVector & spec) :
                _k(spec.colours()),
                _m(g.edge_count())
            {
                auto edges = g.edges();
                auto index = [&] (int u, int v) {
                    for (std::size_t i = 0 ; i < edges.size() ; ++i)
                        if (edges[i].u == u && edges[i].v == v)
                            return int(i);
                    return -1;
                };
                for (int c = 0 ; c < _k ; ++c) {
                    std::vector<std::uint64_t> masks;
                    for (std::uint32_t s = 0 ; s < (1u << g.order()) ; ++s) {
                        if (std::popcount(s) != spec[c] || ! is_clique(g, s))
                            continue;
                        std::uint64_t m = 0;
                        for (int u = 0 ; u < g.order() ; ++u)
                            for (int v = u + 1 ; v < g.order() ; ++v)
                                if ((s >> u & 1) && (s >> v & 1))
                                    m |= std::uint64_t(1) << index(u, v);
                        masks.push_back(m);
                    }
                    _clique_masks.push_back(std::move(masks));
                }
            }

            auto critical(const std::vector<std::uint8_t> & word) const -> bool
            {
                for (int c = 0 ; c < _k ; ++c) {
                    std::uint64_t cls = 0;
                    for (int i = 0 ; i < _m ; ++i)
                        if (word[i] == c)
                            cls |= std::uint64_t(1) << i;
                    for (auto m : _clique_masks[c])
                        if ((cls & m) == m)
                            return false;
                }
                return true;
            }

            template <typename F_>
            void for_each_word(F_ && f) const
            {
                std::vector<std::uint8_t> word(_m, 0);
                while (true) {
                    f(word);
                    int i = _m - 1;
                    while (i >= 0 && ++word[i] == _k)
                        word[i--] = 0;
                    if (i < 0)
                        return;
                }
            }

            auto critical_words() const -> std::vector<std::vector<std::uint8_t>>
            {
                std::vector<std::vector<std::uint8_t>> result;
                for_each_word([&] (const std::vector<std::uint8_t> & w) {
                    if (critical(w))
                        result.push_back(w);
                });
                return result;
            }

            auto arrows() const -> bool
            {
                bool found = false;
                for_each_word([&] (const std::vector<std::uint8_t> & w) {
                    if (! found && critical(w))
                        found = true;
                });
                return ! found;
            }

            struct ClassRange
            {
                std::vector<int> min, max;
            };

            /// Per colour, the smallest and largest class size over critical words; nullopt if none.
            auto class_ranges() const -> std::optional<ClassRange>
            {
                ClassRange r{ std::vector<int>(_k, _m + 1), std::vector<int>(_k, -1) };
                bool any = false;
                for_each_word([&] (const std::vector<std::uint8_t> & w) {
                    if (! critical(w))
                        return;
                    any = true;
                    std::vector<int> counts(_k, 0);
                    for (auto c : w)
                        ++counts[c];
                    for (int c = 0 ; c < _k ; ++c) {
                        r.min[c] = std::min(r.min[c], counts[c]);
                        r.max[c] = std::max(r.max[c], counts[c]);
                    }
                });
                if (! any)
                    return std::nullopt;
                return r;
            }
    };

    inline auto arrows(const Graph & g, const rck::CliqueVector & spec) -> bool
    {
        return ColouringOracle{ g, spec }.arrows();
    }

    inline auto is_cocritical(const Graph & g, const rck::CliqueVector & spec) -> bool
    {
        if (arrows(g, spec))
            return false;
        for (auto & e : g.non_edges())
            if (! arrows(rck::add_edge(g, e), spec))
                return false;
        return true;
    }

    inline auto read_lines(const std::string & path) -> std::vector<std::string>
    {
        std::vector<std::string> lines;
        std::ifstream in{ path };
        std::string line;
        while (std::getline(in, line))
            if (! line.empty())
                lines.push_back(line);
        return lines;
    }
}

#endif
