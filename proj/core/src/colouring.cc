/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rck/colouring.hh>
#include <rck/graph6.hh>

#include <algorithm>
#include <charconv>

using std::string;
using std::string_view;
using std::vector;

namespace rck
{
    using std::to_string;

    CliqueVector::CliqueVector(vector<int> sizes) :
        _sizes(std::move(sizes))
    {
        if (_sizes.empty() || int(_sizes.size()) > max_colours)
            throw PreconditionError{ "clique vector needs 1.." + std::to_string(max_colours) + " entries" };
        for (int t : _sizes)
            if (t < 2 || t > max_vertices)
                throw PreconditionError{ "clique sizes must be at least 2, got " + std::to_string(t) };
    }

    auto CliqueVector::parse(string_view text) -> CliqueVector
    {
        vector<int> sizes;
        while (true) {
            auto comma = text.find(',');
            auto piece = text.substr(0, comma);
            int value = 0;
            auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
            if (ec != std::errc{} || ptr != piece.data() + piece.size() || piece.empty())
                throw ParseError{ "bad clique vector entry '" + string(piece) + "'" };
            sizes.push_back(value);
            if (comma == string_view::npos)
                break;
            text.remove_prefix(comma + 1);
        }
        return CliqueVector{ sizes };
    }

    auto CliqueVector::is_sorted() const -> bool
    {
        return std::is_sorted(_sizes.begin(), _sizes.end());
    }

    auto CliqueVector::sorted() const -> CliqueVector
    {
        auto s = _sizes;
        std::sort(s.begin(), s.end());
        return CliqueVector{ s };
    }

    auto CliqueVector::tail() const -> CliqueVector
    {
        if (_sizes.size() < 2)
            throw PreconditionError{ "tail of a one-colour clique vector" };
        return CliqueVector{ vector<int>(_sizes.begin() + 1, _sizes.end()) };
    }

    auto CliqueVector::to_string() const -> string
    {
        string result;
        for (std::size_t i = 0 ; i < _sizes.size() ; ++i)
            result += (i ? "," : "") + std::to_string(_sizes[i]);
        return result;
    }

    EdgeColoring::EdgeColoring(Graph host, int k, vector<std::uint8_t> colours) :
        _host(std::move(host)),
        _k(k),
        _edges(_host.edges()),
        _colours(std::move(colours))
    {
        if (k < 1 || k > max_colours)
            throw PreconditionError{ "colour count must be in 1.." + to_string(max_colours) };
        if (_colours.size() != _edges.size())
            throw PreconditionError{ "colouring has " + to_string(_colours.size()) + " entries for "
                + to_string(_edges.size()) + " edges" };
        for (auto c : _colours)
            if (c >= k)
                throw PreconditionError{ "colour " + to_string(c + 1) + " out of range 1.." + to_string(k) };
    }

    auto EdgeColoring::colour_of(Edge e) const -> int
    {
        auto i = std::lower_bound(_edges.begin(), _edges.end(), e);
        if (i == _edges.end() || *i != e)
            throw PreconditionError{ "edge " + rck::to_string(e) + " is not in the host graph" };
        return _colours[i - _edges.begin()];
    }

    auto EdgeColoring::class_size(int c) const -> int
    {
        return int(std::count(_colours.begin(), _colours.end(), c));
    }

    auto EdgeColoring::class_adjacency(int c) const -> ClassAdjacency
    {
        ClassAdjacency adj{};
        for (std::size_t i = 0 ; i < _edges.size() ; ++i)
            if (_colours[i] == c) {
                adj[_edges[i].u] |= bit(_edges[i].v);
                adj[_edges[i].v] |= bit(_edges[i].u);
            }
        return adj;
    }

    auto EdgeColoring::class_graph(int c) const -> Graph
    {
        auto adj = class_adjacency(c);
        return Graph::from_masks({ adj.data(), std::size_t(_host.order()) });
    }

    auto EdgeColoring::word() const -> string
    {
        string result;
        for (auto c : _colours)
            result.push_back(char('1' + c));
        return result;
    }

    auto EdgeColoring::from_word(Graph host, int k, string_view word) -> EdgeColoring
    {
        vector<std::uint8_t> colours;
        for (char ch : word) {
            if (ch < '1' || ch > '0' + k)
                throw ParseError{ "bad colour digit '" + string(1, ch) + "' for " + to_string(k) + " colours" };
            colours.push_back(std::uint8_t(ch - '1'));
        }
        return EdgeColoring{ std::move(host), k, std::move(colours) };
    }

    auto is_critical(const Graph & g, const EdgeColoring & c, const CliqueVector & spec) -> bool
    {
        if (! (c.host() == g))
            throw PreconditionError{ "colouring is for a different edge set" };
        if (c.colours_available() != spec.colours())
            throw PreconditionError{ "colouring uses " + to_string(c.colours_available()) + " colours but spec has "
                + to_string(spec.colours()) };

        for (int colour = 0 ; colour < spec.colours() ; ++colour) {
            auto adj = c.class_adjacency(colour);
            if (has_clique_in({ adj.data(), std::size_t(g.order()) }, spec[colour], g.vertices().mask()))
                return false;
        }
        return true;
    }

    auto serialise_witness(const EdgeColoring & c) -> string
    {
        return to_graph6(c.host()) + "\n" + c.word() + "\n";
    }

    auto parse_witness(string_view graph6_line, string_view colour_line, int k) -> EdgeColoring
    {
        while (! colour_line.empty() && (colour_line.back() == '\n' || colour_line.back() == '\r'))
            colour_line.remove_suffix(1);
        return EdgeColoring::from_word(parse_graph6(graph6_line), k, colour_line);
    }
}
