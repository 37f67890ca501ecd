/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rck/canonical.hh>
#include <rck/graph6.hh>

#include <algorithm>
#include <map>
#include <optional>

using std::map;
using std::optional;
using std::string;
using std::vector;

namespace rck
{
    namespace
    {
        using Partition = vector<vector<int>>;

        auto refine(const Graph & g, Partition cells) -> Partition
        {
            bool changed = true;
            while (changed) {
                changed = false;
                vector<VertexMask> cell_masks;
                for (auto & c : cells) {
                    VertexMask m = 0;
                    for (int v : c)
                        m |= bit(v);
                    cell_masks.push_back(m);
                }

                Partition next;
                for (auto & c : cells) {
                    if (c.size() == 1) {
                        next.push_back(c);
                        continue;
                    }
                    map<vector<int>, vector<int>> groups;
                    for (int v : c) {
                        vector<int> signature;
                        for (auto m : cell_masks)
                            signature.push_back(popcount(g.neighbours(v) & m));
                        groups[signature].push_back(v);
                    }
                    if (groups.size() > 1)
                        changed = true;
                    for (auto & [_, members] : groups)
                        next.push_back(members);
                }
                cells = std::move(next);
            }
            return cells;
        }

        auto twins(const Graph & g, int u, int v) -> bool
        {
            return (g.neighbours(u) & ~bit(v)) == (g.neighbours(v) & ~bit(u));
        }

        void search(const Graph & g, const Partition & unrefined, optional<string> & best)
        {
            auto cells = refine(g, unrefined);

            auto target = std::find_if(cells.begin(), cells.end(), [] (const auto & c) { return c.size() > 1; });
            if (target == cells.end()) {
                vector<int> perm(g.order());
                for (std::size_t i = 0 ; i < cells.size() ; ++i)
                    perm[cells[i].front()] = int(i);
                auto candidate = to_graph6(g.relabelled(perm));
                if (! best || candidate < *best)
                    best = std::move(candidate);
                return;
            }

            auto index = target - cells.begin();
            vector<int> tried;
            for (int v : *target) {
                if (std::any_of(tried.begin(), tried.end(), [&] (int u) { return twins(g, u, v); }))
                    continue;
                tried.push_back(v);

                Partition individualised;
                individualised.insert(individualised.end(), cells.begin(), cells.begin() + index);
                individualised.push_back({ v });
                vector<int> rest;
                for (int w : *target)
                    if (w != v)
                        rest.push_back(w);
                individualised.push_back(rest);
                individualised.insert(individualised.end(), cells.begin() + index + 1, cells.end());

                search(g, individualised, best);
            }
        }
    }

    auto canonical_form(const Graph & g) -> string
    {
        if (g.order() > max_canonical_vertices)
            throw SizeError{ "canonical_form supports at most 12 vertices" };

        vector<int> all(g.order());
        for (int v = 0 ; v < g.order() ; ++v)
            all[v] = v;

        optional<string> best;
        search(g, Partition{ all }, best);
        return *best;
    }
}
