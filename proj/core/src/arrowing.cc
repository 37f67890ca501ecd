/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rck/arrowing.hh>
#include <rck/parallel.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <variant>

using std::array;
using std::atomic;
using std::function;
using std::optional;
using std::size_t;
using std::uint64_t;
using std::uint8_t;
using std::vector;

using namespace std::chrono;

namespace rck
{
    auto SearchStats::operator+= (const SearchStats & o) -> SearchStats &
    {
        nodes += o.nodes;
        max_depth = std::max(max_depth, o.max_depth);
        subproblems += o.subproblems;
        wall_seconds += o.wall_seconds;
        return *this;
    }

    auto to_string(ArrowOutcome o) -> const char *
    {
        switch (o) {
            case ArrowOutcome::arrows:         return "arrows";
            case ArrowOutcome::does_not_arrow: return "not-arrows";
            case ArrowOutcome::indeterminate:  return "indeterminate";
        }
        throw std::logic_error{ "bad ArrowOutcome" };
    }

    namespace
    {
        constexpr int8_t uncoloured = -1;

        struct Choice
        {
            int edge = -1;          // -1 with dead == false means every edge is coloured
            uint8_t domain = 0;
            bool dead = false;
            int objective_allowed = 0;
            int objective_forced = 0;
        };

        /**
         * Partial colouring plus the per-colour adjacency of what has been
         * coloured so far.
         */
        class SearchState
        {
            private:
                const Graph & _g;
                const CliqueVector & _spec;
                int _k;
                vector<Edge> _edges;
                vector<int8_t> _colour;
                vector<uint8_t> _restriction;
                array<ClassAdjacency, max_colours> _class{};
                array<int, max_colours> _class_size{};
                int _coloured = 0;

            public:
                SearchState(const Graph & g, const CliqueVector & spec) :
                    _g(g),
                    _spec(spec),
                    _k(spec.colours()),
                    _edges(g.edges()),
                    _colour(_edges.size(), uncoloured),
                    _restriction(_edges.size(), uint8_t((1u << _k) - 1))
                {
                }

                auto edges() const -> const vector<Edge> & { return _edges; }
                auto edge_count() const -> int { return int(_edges.size()); }
                auto depth() const -> int { return _coloured; }
                auto class_size(int c) const -> int { return _class_size[c]; }

                void restrict(int e, uint8_t allowed)
                {
                    _restriction[e] &= allowed;
                }

                void assign(int e, int c)
                {
                    auto [u, v] = _edges[e];
                    _colour[e] = int8_t(c);
                    _class[c][u] |= bit(v);
                    _class[c][v] |= bit(u);
                    ++_class_size[c];
                    ++_coloured;
                }

                void unassign(int e)
                {
                    auto [u, v] = _edges[e];
                    int c = _colour[e];
                    _colour[e] = uncoloured;
                    _class[c][u] &= ~bit(v);
                    _class[c][v] &= ~bit(u);
                    --_class_size[c];
                    --_coloured;
                }

                auto domain(int e, int & score) const -> uint8_t
                {
                    auto [u, v] = _edges[e];
                    uint8_t result = 0;
                    score = 0;
                    for (int c = 0 ; c < _k ; ++c) {
                        VertexMask common = _class[c][u] & _class[c][v];
                        score = std::max(score, popcount(common));
                        if (! (_restriction[e] & (1u << c)))
                            continue;
                        if (! has_clique_in(_class[c], _spec[c] - 2, common))
                            result |= uint8_t(1u << c);
                    }
                    return result;
                }

                auto select(int objective_colour = -1) const -> Choice
                {
                    Choice best;
                    int best_size = std::numeric_limits<int>::max(), best_score = -1;
                    for (int e = 0, e_end = int(_edges.size()) ; e < e_end ; ++e) {
                        if (_colour[e] != uncoloured)
                            continue;
                        int score;
                        uint8_t d = domain(e, score);
                        if (0 == d) {
                            Choice dead;
                            dead.dead = true;
                            return dead;
                        }
                        if (objective_colour >= 0 && (d & (1u << objective_colour))) {
                            ++best.objective_allowed;
                            if (d == (1u << objective_colour))
                                ++best.objective_forced;
                        }
                        int size = std::popcount(d);
                        if (size < best_size || (size == best_size && score > best_score)) {
                            best.edge = e;
                            best.domain = d;
                            best_size = size;
                            best_score = score;
                        }
                    }
                    return best;
                }

                auto snapshot() const -> EdgeColoring
                {
                    vector<uint8_t> colours(_colour.begin(), _colour.end());
                    return EdgeColoring{ _g, _k, std::move(colours) };
                }
        };

        using Path = vector<std::pair<int, int>>;

        class LimitReached
        {
        };

        struct Dfs
        {
            SearchState & state;
            optional<uint64_t> node_limit;
            SearchStats stats;
            optional<EdgeColoring> witness;

            void visit()
            {
                ++stats.nodes;
                if (node_limit && stats.nodes > *node_limit)
                    throw LimitReached{};
                stats.max_depth = std::max(stats.max_depth, state.depth());
            }

            auto run() -> bool
            {
                visit();
                auto choice = state.select();
                if (choice.dead)
                    return false;
                if (choice.edge < 0) {
                    witness = state.snapshot();
                    return true;
                }
                for (uint8_t d = choice.domain ; d ; d &= d - 1) {
                    state.assign(choice.edge, std::countr_zero(d));
                    bool found = run();
                    state.unassign(choice.edge);
                    if (found)
                        return true;
                }
                return false;
            }
        };

        struct SolvedAtTop
        {
            EdgeColoring witness;
        };

        using WorkItem = std::variant<Path, SolvedAtTop>;

        struct Expansion
        {
            SearchState & state;
            vector<WorkItem> items;
            SearchStats stats;
            Path path;
            bool finished = false;

            void expand(int remaining)
            {
                if (finished)
                    return;
                if (0 == remaining) {
                    items.emplace_back(path);
                    return;
                }

                ++stats.nodes;
                stats.max_depth = std::max(stats.max_depth, state.depth());
                auto choice = state.select();
                if (choice.dead)
                    return;
                if (choice.edge < 0) {
                    items.emplace_back(SolvedAtTop{ state.snapshot() });
                    finished = true;
                    return;
                }
                int next_remaining = std::popcount(choice.domain) > 1 ? remaining - 1 : remaining;
                for (uint8_t d = choice.domain ; d && ! finished ; d &= d - 1) {
                    int c = std::countr_zero(d);
                    state.assign(choice.edge, c);
                    path.emplace_back(choice.edge, c);
                    expand(next_remaining);
                    path.pop_back();
                    state.unassign(choice.edge);
                }
            }
        };

        void apply_seed(SearchState & state, const SymmetrySeed & seed)
        {
            auto & edges = state.edges();
            for (auto & r : seed.restrictions) {
                auto i = std::lower_bound(edges.begin(), edges.end(), r.edge);
                state.restrict(int(i - edges.begin()), r.allowed_colours);
            }
        }

        struct SubResult
        {
            bool done = false;
            bool found = false;
            bool aborted = false;
            optional<EdgeColoring> witness;
            SearchStats stats;
        };
    }

    auto symmetry_breaking_seed(const Graph & g, const CliqueVector & spec) -> SymmetrySeed
    {
        SymmetrySeed seed;
        auto edges = g.edges();
        if (edges.empty())
            return seed;

        seed.vertex_fixed = g.is_complete();

        uint8_t allowed = 0;
        for (int c = 0 ; c < spec.colours() ; ++c) {
            bool smallest_of_group = true;
            for (int d = 0 ; d < c ; ++d)
                if (spec[d] == spec[c])
                    smallest_of_group = false;
            if (smallest_of_group)
                allowed |= uint8_t(1u << c);
            else
                seed.colour_swap = true;
        }

        if (seed.colour_swap)
            seed.restrictions.push_back(SeedRestriction{ edges.front(), allowed });

        return seed;
    }

    auto arrows(const Graph & g, const CliqueVector & spec, const SearchConfig & config) -> ArrowVerdict
    {
        auto start = steady_clock::now();

        SearchState root{ g, spec };
        if (config.symmetry_breaking)
            apply_seed(root, symmetry_breaking_seed(g, spec));

        int levels = config.split_depth.value_or(root.edge_count() > 20 ? 2 : 0);
        Expansion expansion{ root, {}, {}, {} };
        expansion.expand(std::max(levels, 0));

        auto & items = expansion.items;
        vector<SubResult> results(items.size());
        atomic<size_t> first_found{ items.size() };

        parallel_for(items.size(), config.workers, [&] (size_t i) {
            if (i > first_found.load())
                return;
            auto & result = results[i];
            if (auto solved = std::get_if<SolvedAtTop>(&items[i])) {
                result.found = true;
                result.witness = solved->witness;
            }
            else {
                SearchState state{ g, spec };
                if (config.symmetry_breaking)
                    apply_seed(state, symmetry_breaking_seed(g, spec));
                for (auto & [e, c] : std::get<Path>(items[i]))
                    state.assign(e, c);
                Dfs dfs{ state, config.node_limit, {}, {} };
                try {
                    result.found = dfs.run();
                    result.witness = std::move(dfs.witness);
                }
                catch (const LimitReached &) {
                    result.aborted = true;
                }
                result.stats = dfs.stats;
                result.stats.subproblems = 1;
            }
            result.done = true;
            if (result.found) {
                size_t current = first_found.load();
                while (i < current && ! first_found.compare_exchange_weak(current, i))
                    ;
            }
        });

        ArrowVerdict verdict;
        verdict.stats = expansion.stats;
        verdict.outcome = ArrowOutcome::arrows;
        for (size_t i = 0 ; i < results.size() ; ++i) {
            verdict.stats += results[i].stats;
            if (results[i].aborted) {
                verdict.outcome = ArrowOutcome::indeterminate;
                break;
            }
            if (results[i].found) {
                verdict.outcome = ArrowOutcome::does_not_arrow;
                verdict.witness = std::move(results[i].witness);
                break;
            }
        }

        if (verdict.outcome == ArrowOutcome::arrows && config.node_limit && verdict.stats.nodes > *config.node_limit)
            verdict.outcome = ArrowOutcome::indeterminate;

        if (verdict.witness && ! is_critical(g, *verdict.witness, spec))
            throw std::logic_error{ "arrowing search produced a non-critical witness" };

        verdict.stats.wall_seconds = duration<double>(steady_clock::now() - start).count();
        return verdict;
    }

    namespace
    {
        struct BranchAndBound
        {
            SearchState & state;
            ExtremalObjective objective;
            optional<uint64_t> node_limit;
            SearchStats stats;
            optional<EdgeColoring> best;
            int best_value = 0;

            auto improves(int value) const -> bool
            {
                if (! best)
                    return true;
                return objective.goal == ExtremalGoal::maximise ? value > best_value : value < best_value;
            }

            void run()
            {
                ++stats.nodes;
                if (node_limit && stats.nodes > *node_limit)
                    throw LimitReached{};
                stats.max_depth = std::max(stats.max_depth, state.depth());

                auto choice = state.select(objective.colour);
                if (choice.dead)
                    return;

                int current = state.class_size(objective.colour);
                if (choice.edge < 0) {
                    if (improves(current)) {
                        best = state.snapshot();
                        best_value = current;
                    }
                    return;
                }

                if (best) {
                    if (objective.goal == ExtremalGoal::maximise && current + choice.objective_allowed <= best_value)
                        return;
                    if (objective.goal == ExtremalGoal::minimise && current + choice.objective_forced >= best_value)
                        return;
                }

                // objective colour first when maximising, last when minimising
                uint8_t bit_of_objective = uint8_t(1u << objective.colour);
                uint8_t others = choice.domain & ~bit_of_objective;
                bool has_objective = choice.domain & bit_of_objective;

                auto branch = [&] (int c) {
                    state.assign(choice.edge, c);
                    run();
                    state.unassign(choice.edge);
                };

                if (objective.goal == ExtremalGoal::maximise && has_objective)
                    branch(objective.colour);
                for (uint8_t d = others ; d ; d &= d - 1)
                    branch(std::countr_zero(d));
                if (objective.goal == ExtremalGoal::minimise && has_objective)
                    branch(objective.colour);
            }
        };
    }

    auto extremal_critical_colouring(const Graph & g, const CliqueVector & spec, ExtremalObjective objective,
            const SearchConfig & config) -> ExtremalResult
    {
        if (objective.colour < 0 || objective.colour >= spec.colours())
            throw PreconditionError{ "objective colour out of range" };

        auto start = steady_clock::now();
        SearchState state{ g, spec };
        BranchAndBound bb{ state, objective, config.node_limit, {}, {}, 0 };

        ExtremalResult result;
        try {
            bb.run();
            if (bb.best) {
                result.outcome = ArrowOutcome::does_not_arrow;
                result.colouring = std::move(bb.best);
                result.value = bb.best_value;
            }
            else
                result.outcome = ArrowOutcome::arrows;
        }
        catch (const LimitReached &) {
            result.outcome = ArrowOutcome::indeterminate;
        }
        result.stats = bb.stats;
        result.stats.subproblems = 1;
        result.stats.wall_seconds = duration<double>(steady_clock::now() - start).count();
        return result;
    }

    namespace
    {
        struct Enumerator
        {
            SearchState & state;
            const function<auto (const EdgeColoring &) -> bool> & visitor;

            // returns false when the visitor asked to stop
            auto run(int e) -> bool
            {
                if (e == state.edge_count())
                    return visitor(state.snapshot());
                int score;
                for (uint8_t d = state.domain(e, score) ; d ; d &= d - 1) {
                    state.assign(e, std::countr_zero(d));
                    bool keep_going = run(e + 1);
                    state.unassign(e);
                    if (! keep_going)
                        return false;
                }
                return true;
            }
        };
    }

    auto for_each_critical_colouring(const Graph & g, const CliqueVector & spec,
            const function<auto (const EdgeColoring &) -> bool> & visitor) -> bool
    {
        SearchState state{ g, spec };
        Enumerator enumerator{ state, visitor };
        return enumerator.run(0);
    }

    auto enumerate_critical_colourings(const Graph & g, const CliqueVector & spec, optional<size_t> limit) -> EnumerationResult
    {
        if (! limit && g.edge_count() > max_unbounded_enumeration_edges)
            throw PreconditionError{ "enumerating colourings of more than 40 edges needs an explicit limit" };

        EnumerationResult result;
        bool complete = for_each_critical_colouring(g, spec, [&] (const EdgeColoring & c) {
            if (limit && result.colourings.size() >= *limit) {
                result.truncated = true;
                return false;
            }
            result.colourings.push_back(c);
            return true;
        });
        if (! complete)
            result.truncated = true;
        return result;
    }
}
