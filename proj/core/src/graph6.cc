/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rck/graph6.hh>

#include <vector>

using std::string;
using std::string_view;
using std::vector;

namespace rck
{
    using std::to_string;

    auto parse_graph6(string_view line) -> Graph
    {
        while (! line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);

        if (line.starts_with(">>graph6<<"))
            line.remove_prefix(10);

        if (line.empty())
            throw ParseError{ "empty graph6 line" };

        for (char c : line)
            if (c < 63 || c > 126)
                throw ParseError{ "graph6 byte out of range: '" + string(line) + "'" };

        if (line[0] == 126)
            throw SizeError{ "graph6 line encodes more than 62 vertices" };

        int n = line[0] - 63;
        if (n < 1)
            throw ParseError{ "graph6 line encodes a graph with no vertices" };
        if (n > max_vertices)
            throw SizeError{ "graph6 line encodes " + to_string(n) + " vertices" };

        std::size_t bits = std::size_t(n) * (n - 1) / 2;
        std::size_t expected = 1 + (bits + 5) / 6;
        if (line.size() != expected)
            throw ParseError{ "graph6 line for n=" + to_string(n) + " should have " + to_string(expected)
                + " bytes, got " + to_string(line.size()) };

        vector<VertexMask> adj(n, 0);
        std::size_t k = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i, ++k) {
                int group = line[1 + k / 6] - 63;
                if (group & (0x20 >> (k % 6))) {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
            }

        // padding bits must be zero
        for ( ; k % 6 != 0 ; ++k)
            if ((line[1 + k / 6] - 63) & (0x20 >> (k % 6)))
                throw ParseError{ "graph6 padding bits set in '" + string(line) + "'" };

        return Graph::from_masks(adj);
    }

    auto to_graph6(const Graph & g) -> string
    {
        int n = g.order();
        string result;
        result.push_back(char(63 + n));

        int group = 0, filled = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i) {
                group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    result.push_back(char(63 + group));
                    group = filled = 0;
                }
            }
        if (filled > 0)
            result.push_back(char(63 + (group << (6 - filled))));

        return result;
    }
}
