/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "oracles.hh"

#include <rck/canonical.hh>
#include <rck/cocritical.hh>
#include <rck/constructions.hh>
#include <rck/errors.hh>
#include <rck/graph6.hh>
#include <rck/saturation.hh>

#include <doctest.h>

using namespace rck;

namespace
{
    const CliqueVector s33{ { 3, 3 } }, s34{ { 3, 4 } }, s333{ { 3, 3, 3 } };

    auto ht(int apex, int rest) -> Graph
    {
        return join(complete_graph(apex), empty_graph(rest));
    }
}

TEST_CASE("saturation examples")
{
    auto star = is_saturated(star_graph(4), 3);
    CHECK(star.is_saturated);
    CHECK(star.hajnal_holds == true);
    CHECK(check_hajnal(star_graph(4), 3));

    auto c5 = is_saturated(cycle_graph(5), 3);
    bool all_chords_close = true;
    for (auto & e : cycle_graph(5).non_edges())
        all_chords_close = all_chords_close && clique_number(add_edge(cycle_graph(5), e)) >= 3;
    CHECK(c5.is_saturated == all_chords_close);

    auto empty = is_saturated(empty_graph(5), 3);
    CHECK(empty.is_free);
    CHECK_FALSE(empty.is_saturated);
    CHECK(empty.violating_non_edge == Edge{ 0, 1 });

    CHECK(check_hajnal(ht(2, 4), 4));
    CHECK_THROWS_AS(check_hajnal(empty_graph(5), 3), PreconditionError);

    auto k2 = is_saturated(complete_graph(2), 3);
    CHECK(k2.vacuous_complete);
    CHECK(k2.is_saturated);
    auto k3 = is_saturated(complete_graph(3), 3);
    CHECK(k3.vacuous_complete);
    CHECK_FALSE(k3.is_free);
}

TEST_CASE("saturation report fields are consistent on the corpus")
{
    for (int n = 1 ; n <= 7 ; ++n)
        for (auto & line : oracle::read_lines(std::string{ RCK_CORPUS_DIR } + "/graphs_n" + std::to_string(n) + ".g6"))
            for (int t : { 3, 4 }) {
                auto g = parse_graph6(line);
                auto r = is_saturated(g, t);
                CHECK((! r.is_saturated || r.is_free));
                CHECK(bool(r.violating_non_edge) == (r.is_free && ! r.is_saturated));
                CHECK(r.is_free == (oracle::clique_number(g) < t));
                if (r.is_saturated)
                    CHECK(r.hajnal_holds == true);
            }
}

TEST_CASE("construction examples")
{
    CHECK(hanson_toft(s33, 6) == ht(4, 2));
    CHECK(hanson_toft(s33, 6).edge_count() == 14);
    CHECK(hanson_toft(s34, 9).edge_count() == 35);
    CHECK(hanson_toft(s33, 7).edge_count() == 18);
    CHECK_THROWS(hanson_toft(s33, 5));
    CHECK_THROWS(hanson_toft(s333, 17));
    CHECK(hanson_toft(s333, 17, 17).edge_count() == hanson_toft_edge_count(17, 17));

    CHECK(k6_minus().edge_count() == 14);
    CHECK(degree_stats(k6_minus()).min_degree == 4);

    CHECK(mindeg_bound(s33) == 4);
    CHECK(mindeg_bound(s34) == 6);
    CHECK(mindeg_bound(CliqueVector{ { 4, 4 } }) == 7);
    CHECK(mindeg_bound(s34) < 7);
    CHECK_THROWS(mindeg_bound(CliqueVector{ { 4, 3 } }));
    CHECK(ramsey_lower_bound(3, 3) == 6);
    CHECK(ramsey_lower_bound(3, 4) == 9);
    CHECK(ramsey_lower_bound(2, 5) == 8);

    CHECK(construct("kn:6") == complete_graph(6));
    CHECK(construct("k6minus") == k6_minus());
    CHECK(construct("hanson-toft:3,4:10") == ht(7, 3));
    std::array<int, 3> parts{ 2, 1, 1 };
    CHECK(construct("complete-multipartite:2,1,1") == complete_multipartite(parts));
    CHECK_THROWS(construct("petersen"));
    CHECK_THROWS(construct("kn:x"));
}

TEST_CASE("Hanson-Toft family")
{
    for (auto & [spec, r] : std::vector<std::pair<CliqueVector, int>>{ { s33, 6 }, { s34, 9 } })
        for (int n = r ; n <= r + 2 ; ++n) {
            if (r == 9 && n == 11)
                continue;
            auto g = hanson_toft(spec, n);
            CHECK(g.edge_count() == hanson_toft_edge_count(r, n));
            CHECK(g.edge_count() == (r - 2) * (n - r + 2) + (r - 2) * (r - 3) / 2);
            CHECK(degree_stats(g).min_degree == r - 2);
            CHECK(is_cocritical(g, spec).is_cocritical());
        }
}

TEST_CASE("Ramsey facts")
{
    auto f33 = ramsey_fact(s33, true);
    CHECK(f33.r == 6);
    CHECK(f33.provenance == RamseyProvenance::verified_by_search);
    REQUIRE(f33.lower_witness);
    CHECK(is_critical(complete_graph(5), *f33.lower_witness, s33));

    auto f34 = ramsey_fact(s34, true);
    CHECK(f34.r == 9);
    REQUIRE(f34.lower_witness);
    CHECK(is_critical(complete_graph(8), *f34.lower_witness, s34));

    CHECK_THROWS(ramsey_fact(s333, true, 17));
    CHECK_THROWS(ramsey_fact(s333, false));
    auto f333 = ramsey_fact(s333, false, 17);
    CHECK(f333.provenance == RamseyProvenance::user_supplied);
    CHECK(ramsey_fact(s34, false).provenance == RamseyProvenance::literature);
}

TEST_CASE("co-criticality examples")
{
    CHECK(is_cocritical(k6_minus(), s33).is_cocritical());
    CHECK(is_cocritical(ht(4, 2), s33).is_cocritical());
    auto c5 = is_cocritical(cycle_graph(5), s33);
    CHECK(c5.verdict == CocriticalVerdict::not_cocritical);
    CHECK(c5.failing_edge);
    auto h = is_cocritical(ht(7, 2), s34);
    CHECK(h.is_cocritical());
    CHECK(h.min_degree == 7);
    CHECK(h.ht_bound == 35);
    CHECK(h.meets_ht == true);
    REQUIRE(h.base_witness);
    CHECK(is_critical(ht(7, 2), *h.base_witness, s34));
    CHECK_THROWS_AS(is_cocritical(complete_graph(6), s33), PreconditionError);
}

TEST_CASE("co-criticality agrees with brute force on small graphs")
{
    for (int n = 3 ; n <= 6 ; ++n)
        for (auto & line : oracle::read_lines(std::string{ RCK_CORPUS_DIR } + "/graphs_n" + std::to_string(n) + ".g6")) {
            auto g = parse_graph6(line);
            if (g.is_complete() || g.edge_count() > 13)
                continue;
            CAPTURE(line);
            CHECK(is_cocritical(g, s33).is_cocritical() == oracle::is_cocritical(g, s33));
        }
}

TEST_CASE("minimality")
{
    CHECK(is_minimal_cocritical(k6_minus(), s33) == true);
    CHECK(is_minimal_cocritical(ht(4, 3), s33) == false);
    CHECK(canonical_form(k6_minus()) == canonical_form(ht(4, 2)));
    CHECK_THROWS_AS(is_minimal_cocritical(cycle_graph(5), s33), PreconditionError);
}

TEST_CASE("chromatic bound clause")
{
    for (auto & [g, r] : std::vector<std::pair<Graph, int>>{ { k6_minus(), 6 }, { ht(4, 2), 6 }, { ht(7, 2), 9 } }) {
        auto f = check_chromatic_bound(g, r);
        CHECK(f.clause == LemmaClause::chromatic_bound);
        CHECK(f.holds());
    }
    CHECK_FALSE(check_chromatic_bound(cycle_graph(5), 6).holds());
}

TEST_CASE("colouring structure clauses")
{
    auto a = check_colouring_structure(ht(4, 2), s33, ColouringPolicy::maximise_last);
    CHECK_FALSE(a.empty());
    for (auto & f : a)
        CHECK(f.holds());
    CHECK(std::any_of(a.begin(), a.end(), [] (auto & f) { return f.clause == LemmaClause::class_clique_bound; }));

    auto b = check_colouring_structure(k6_minus(), s33, ColouringPolicy::maximise_last);
    CHECK(std::any_of(b.begin(), b.end(), [] (auto & f) {
                return f.clause == LemmaClause::non_neighbour_clique && f.status == FindingStatus::pass; }));
    for (auto & f : b)
        CHECK(f.holds());

    auto c = check_colouring_structure(ht(7, 2), s34, ColouringPolicy::maximise_last);
    for (auto & f : c)
        CHECK(f.holds());
    CHECK(std::any_of(c.begin(), c.end(), [] (auto & f) { return f.clause == LemmaClause::small_red_neighbourhood; }));

    CHECK_THROWS(check_colouring_structure(ht(4, 2), CliqueVector{ { 4, 3 } }, ColouringPolicy::maximise_last));
}

TEST_CASE("a broken colouring is caught")
{
    // all red on the co-critical K_6^- has red triangles, so it is not a
    // critical colouring and the checker must refuse it
    auto g = k6_minus();
    EdgeColoring red{ g, 2, std::vector<std::uint8_t>(g.edge_count(), 0) };
    CHECK_THROWS(check_colouring_structure(g, s33, red, ColouringPolicy::maximise_last));
}

TEST_CASE("minimum degree assertion")
{
    CHECK(cocritical_min_degree_bound(s33) == 4);
    CHECK(cocritical_min_degree_bound(s34) == 7);
    CHECK(cocritical_min_degree_bound(s333) == 5);
    CHECK(mindeg_assert(k6_minus(), s33).holds());
    CHECK(mindeg_assert(ht(7, 2), s34).holds());
    CHECK_FALSE(mindeg_assert(cycle_graph(5), s33).holds());
}

TEST_CASE("disjoint clique packing")
{
    auto g = join(complete_graph(3), complete_graph(3));
    CHECK(max_disjoint_cliques(g.adjacency(), 3, low_mask(6)) == 2);
    CHECK(max_disjoint_cliques(cycle_graph(6).adjacency(), 2, low_mask(6)) == 3);
    CHECK(max_disjoint_cliques(cycle_graph(5).adjacency(), 2, low_mask(5)) == 2);
    CHECK(max_disjoint_cliques(star_graph(4).adjacency(), 2, low_mask(5)) == 1);
}

TEST_CASE("lemma suite on known co-critical graphs")
{
    for (auto & [g, spec] : std::vector<std::pair<Graph, CliqueVector>>{ { k6_minus(), s33 }, { ht(4, 3), s33 }, { ht(7, 2), s34 } }) {
        auto report = is_cocritical(g, spec);
        auto suite = run_lemma_suite(g, report);
        CHECK(suite.all_hold());
        CHECK(suite.maximise_last_colouring);
        CHECK(std::any_of(suite.findings.begin(), suite.findings.end(),
                    [] (auto & f) { return f.clause == LemmaClause::min_degree; }));
        CHECK(std::any_of(suite.findings.begin(), suite.findings.end(),
                    [] (auto & f) { return f.clause == LemmaClause::chromatic_bound; }));
    }
    CHECK_THROWS(run_lemma_suite(cycle_graph(5), is_cocritical(cycle_graph(5), s33)));
}
