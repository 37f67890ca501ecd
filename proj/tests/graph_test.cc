/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "oracles.hh"

#include <rck/canonical.hh>
#include <rck/constructions.hh>
#include <rck/errors.hh>
#include <rck/graph.hh>
#include <rck/graph6.hh>

#include <doctest.h>

#include <array>
#include <random>
#include <set>

using namespace rck;

namespace
{
    auto corpus(int n) -> std::vector<std::string>
    {
        return oracle::read_lines(std::string{ RCK_CORPUS_DIR } + "/graphs_n" + std::to_string(n) + ".g6");
    }

    auto random_permutation(int n, std::mt19937 & rng) -> std::vector<int>
    {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        return perm;
    }
}

TEST_CASE("graph construction validates its input")
{
    CHECK_THROWS(Graph{ 0 });
    CHECK_THROWS_AS(Graph{ 33 }, SizeError);
    std::array<Edge, 1> loop{ Edge{ 1, 1 } };
    CHECK_THROWS(Graph::from_edges(3, loop));
    std::array<VertexMask, 2> asymmetric{ 0b10, 0 };
    CHECK_THROWS(Graph::from_masks(asymmetric));
    CHECK_THROWS(add_edge(complete_graph(3), Edge{ 0, 1 }));
}

TEST_CASE("clique number examples")
{
    CHECK(clique_number(complete_graph(5)) == 5);
    CHECK(clique_number(cycle_graph(5)) == 2);
    CHECK(clique_number(join(complete_graph(4), empty_graph(2))) == 5);
    CHECK(clique_number(empty_graph(4)) == 1);
}

TEST_CASE("chromatic number examples")
{
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(k6_minus()) == 5);
    CHECK(chromatic_number(join(complete_graph(4), empty_graph(2))) == 5);
    CHECK(chromatic_number(join(complete_graph(7), empty_graph(2))) == 8);
    CHECK(chromatic_number(empty_graph(3)) == 1);
}

TEST_CASE("degree statistics")
{
    auto ht = join(complete_graph(4), empty_graph(2));
    CHECK(degree_stats(ht).min_degree == 4);
    auto empty = degree_stats(empty_graph(3));
    CHECK(empty.min_degree == 0);
    CHECK(empty.max_degree == 0);
    auto d = degree_stats(join(complete_graph(7), empty_graph(2)));
    CHECK(d.min_degree == 7);
    CHECK(d.max_degree == 8);
}

TEST_CASE("complete multipartite recognition")
{
    auto r = is_complete_multipartite(join(complete_graph(4), empty_graph(2)));
    CHECK(r.is_complete_multipartite);
    CHECK(r.parts == 5);
    CHECK_FALSE(is_complete_multipartite(cycle_graph(5)).is_complete_multipartite);
    std::array<int, 2> parts{ 3, 3 };
    auto k33 = is_complete_multipartite(complete_multipartite(parts));
    CHECK(k33.is_complete_multipartite);
    CHECK(k33.parts == 2);
}

TEST_CASE("graph6 examples and error handling")
{
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK(parse_graph6(">>graph6<<Bw\n") == complete_graph(3));
    CHECK(to_graph6(empty_graph(1)) == "@");
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);
    CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);
    CHECK_THROWS_AS(parse_graph6("B!"), ParseError);
    CHECK_THROWS_AS(parse_graph6("~?@?"), SizeError);
}

TEST_CASE("properties over all graphs on at most six vertices")
{
    for (int n = 1 ; n <= 6 ; ++n)
        for (auto & line : corpus(n)) {
            auto g = parse_graph6(line);
            CAPTURE(line);
            CHECK(to_graph6(g) == line);
            CHECK(clique_number(g) == oracle::clique_number(g));
            CHECK(clique_number(g) == independence_number(complement(g)));
            CHECK(chromatic_number(g) == oracle::chromatic_number(g));
            CHECK(chromatic_number(g) >= clique_number(g));
            for (auto & e : g.non_edges()) {
                auto lhs = complement(add_edge(g, e));
                auto rhs = complement(g);
                auto edges = rhs.edges();
                std::erase(edges, e);
                CHECK(lhs == Graph::from_edges(n, edges));
            }
            auto h = empty_graph(2);
            auto j = join(g, h);
            for (int v = 0 ; v < n ; ++v)
                CHECK(j.degree(v) == g.degree(v) + 2);
        }
}

TEST_CASE("canonical form examples")
{
    std::array<int, 5> relabel{ 1, 3, 0, 2, 4 };
    auto c5 = cycle_graph(5);
    CHECK(canonical_form(c5) == canonical_form(c5.relabelled(relabel)));
    CHECK(canonical_form(path_graph(4)) != canonical_form(star_graph(3)));

    // every labelled graph on 4 vertices, grouped by brute-force isomorphism
    std::vector<Graph> representatives;
    std::set<std::string> forms;
    auto all = complete_graph(4).edges();
    for (unsigned s = 0 ; s < 64 ; ++s) {
        std::vector<Edge> chosen;
        for (unsigned i = 0 ; i < 6 ; ++i)
            if (s >> i & 1)
                chosen.push_back(all[i]);
        auto g = Graph::from_edges(4, chosen);
        forms.insert(canonical_form(g));
        if (std::none_of(representatives.begin(), representatives.end(),
                    [&] (const Graph & r) { return oracle::isomorphic(r, g); }))
            representatives.push_back(g);
    }
    CHECK(representatives.size() == 11);
    CHECK(forms.size() == 11);
}

TEST_CASE("canonical form is invariant under relabelling and separates the corpus")
{
    std::mt19937 rng{ 17 };
    for (int n = 5 ; n <= 6 ; ++n) {
        std::set<std::string> forms;
        auto lines = corpus(n);
        for (auto & line : lines) {
            auto g = parse_graph6(line);
            auto form = canonical_form(g);
            forms.insert(form);
            for (int i = 0 ; i < 50 ; ++i)
                CHECK(canonical_form(g.relabelled(random_permutation(n, rng))) == form);
        }
        CHECK(forms.size() == lines.size());
    }

    auto big = join(complete_graph(4), cycle_graph(8));
    auto form = canonical_form(big);
    for (int i = 0 ; i < 50 ; ++i)
        CHECK(canonical_form(big.relabelled(random_permutation(12, rng))) == form);
    CHECK_THROWS_AS(canonical_form(empty_graph(13)), SizeError);
}
