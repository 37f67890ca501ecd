/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "cli.hh"

#include <rck/arrowing.hh>
#include <rck/canonical.hh>
#include <rck/cocritical.hh>
#include <rck/constructions.hh>
#include <rck/graph6.hh>
#include <rck/parallel.hh>
#include <rck/saturation.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using std::function;
using std::istream;
using std::map;
using std::optional;
using std::ostream;
using std::set;
using std::string;
using std::vector;

using json = nlohmann::ordered_json;

namespace rck::cli
{
    using std::to_string;

    namespace
    {
        constexpr std::size_t batch_size = 256;
        constexpr int oracle_edge_limit = 14;

        struct Item
        {
            std::size_t line = 0;
            Graph graph;
        };

        struct ScanInfo
        {
            bool complete = false;
            bool cocritical = false;
            bool indeterminate = false;
            int order = 0;
            int min_degree = 0;
            optional<string> canonical;
            std::array<std::array<int, 4>, 7> tallies{};
            bool lemma_failed = false;
            bool oracle_checked = false;
            bool oracle_mismatch = false;
        };

        struct SatInfo
        {
            bool saturated = false;
            bool hajnal_failed = false;
        };

        struct Outcome
        {
            json record;
            string text;
            int severity = exit_codes::ok;
            ScanInfo scan;
            SatInfo sat;
        };

        auto merge_severity(int a, int b) -> int
        {
            auto rank = [] (int code) {
                switch (code) {
                    case exit_codes::input_error:      return 3;
                    case exit_codes::assertion_failed: return 2;
                    case exit_codes::indeterminate:    return 1;
                    default:                           return 0;
                }
            };
            return rank(a) >= rank(b) ? a : b;
        }

        auto spec_json(const CliqueVector & spec) -> json
        {
            json result = json::array();
            for (int t : spec.sizes())
                result.push_back(t);
            return result;
        }

        auto edge_json(const optional<Edge> & e) -> json
        {
            if (! e)
                return nullptr;
            return json::array({ e->u, e->v });
        }

        auto stats_json(const SearchStats & stats, bool timing) -> json
        {
            json result;
            result["nodes"] = stats.nodes;
            result["max_depth"] = stats.max_depth;
            result["subproblems"] = stats.subproblems;
            if (timing)
                result["seconds"] = stats.wall_seconds;
            return result;
        }

        auto witness_json(const optional<EdgeColoring> & c) -> json
        {
            if (! c)
                return nullptr;
            json result;
            result["g6"] = to_graph6(c->host());
            result["colours"] = c->word();
            return result;
        }

        template <typename T_>
        auto opt_json(const optional<T_> & v) -> json
        {
            if (! v)
                return nullptr;
            return json(*v);
        }

        auto status_index(FindingStatus s) -> int
        {
            return int(s);
        }

        auto tally(const vector<LemmaFinding> & findings) -> std::array<std::array<int, 4>, 7>
        {
            std::array<std::array<int, 4>, 7> result{};
            for (auto & f : findings)
                ++result[int(f.clause)][status_index(f.status)];
            return result;
        }

        auto lemmas_json(const LemmaSuite & suite) -> json
        {
            json result = json::array();
            auto counts = tally(suite.findings);
            for (int c = 0 ; c < 7 ; ++c) {
                auto & row = counts[c];
                if (row[0] + row[1] + row[2] + row[3] == 0)
                    continue;
                json entry;
                entry["clause"] = to_string(LemmaClause(c));
                entry["pass"] = row[0];
                entry["vacuous"] = row[1];
                entry["fail"] = row[2];
                entry["indeterminate"] = row[3];
                json failures = json::array();
                for (auto & f : suite.findings)
                    if (int(f.clause) == c && ! f.holds()) {
                        json ctx;
                        ctx["status"] = to_string(f.status);
                        ctx["vertex"] = opt_json(f.vertex);
                        ctx["colour"] = f.colour ? json(*f.colour + 1) : json(nullptr);
                        ctx["detail"] = f.detail;
                        failures.push_back(ctx);
                    }
                entry["failures"] = failures;
                result.push_back(entry);
            }
            return result;
        }

        auto read_batch(istream & in, std::size_t & line_no, vector<std::pair<std::size_t, string>> & batch) -> void
        {
            batch.clear();
            string line;
            while (batch.size() < batch_size && std::getline(in, line)) {
                ++line_no;
                while (! line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
                    line.pop_back();
                if (line.empty())
                    continue;
                batch.emplace_back(line_no, line);
            }
        }

        /**
         * Pulls graphs from the configured source in batches, evaluates each
         * batch with the worker pool and hands outcomes to emit in input order.
         */
        auto process_graphs(const RunConfig & config, istream & in, ostream & err,
                const function<auto (const Graph &, int inner_workers) -> Outcome> & evaluate,
                const function<void (const Outcome &)> & emit) -> int
        {
            int severity = exit_codes::ok;

            auto evaluate_all = [&] (const vector<Item> & items, int inner_workers) {
                vector<Outcome> outcomes(items.size());
                int outer = items.size() > 1 ? config.workers : 1;
                parallel_for(items.size(), outer, [&] (std::size_t i) {
                    outcomes[i] = evaluate(items[i].graph, inner_workers);
                });
                for (auto & o : outcomes) {
                    severity = merge_severity(severity, o.severity);
                    emit(o);
                }
            };

            if (config.construct) {
                auto g = construct(*config.construct, config.user_r);
                evaluate_all({ Item{ 0, g } }, config.workers);
                return severity;
            }

            std::ifstream file;
            istream * source = &in;
            if (config.input_file) {
                file.open(*config.input_file);
                if (! file) {
                    err << "error: cannot open " << *config.input_file << "\n";
                    return exit_codes::input_error;
                }
                source = &file;
            }

            std::size_t line_no = 0;
            vector<std::pair<std::size_t, string>> lines;
            while (true) {
                read_batch(*source, line_no, lines);
                if (lines.empty())
                    break;

                vector<Item> items;
                optional<string> failure;
                for (auto & [number, text] : lines) {
                    try {
                        items.push_back(Item{ number, parse_graph6(text) });
                    }
                    catch (const std::exception & e) {
                        failure = "line " + to_string(number) + ": " + e.what();
                        break;
                    }
                }

                evaluate_all(items, 1);

                if (failure) {
                    err << "error: " << *failure << "\n";
                    return exit_codes::input_error;
                }
            }
            return severity;
        }

        struct Output
        {
            std::ofstream file;
            ostream * stream;

            Output(const RunConfig & config, ostream & fallback) :
                stream(&fallback)
            {
                if (config.report_path) {
                    file.open(*config.report_path);
                    if (! file)
                        throw ParseError{ "cannot write report to " + *config.report_path };
                    stream = &file;
                }
            }
        };

        void write(const RunConfig & config, ostream & out, const Outcome & o)
        {
            if (config.format == OutputFormat::json)
                out << o.record.dump() << "\n";
            else
                out << o.text << "\n";
        }

        auto require_spec(const RunConfig & config) -> const CliqueVector &
        {
            if (! config.spec)
                throw ParseError{ "this subcommand needs --spec" };
            return *config.spec;
        }

        auto search_config(const RunConfig & config, int inner_workers) -> SearchConfig
        {
            SearchConfig search;
            search.node_limit = config.node_limit;
            search.workers = inner_workers;
            return search;
        }

        auto common_fields(const Graph & g, const CliqueVector & spec) -> json
        {
            json record;
            record["g6"] = to_graph6(g);
            record["spec"] = spec_json(spec);
            return record;
        }

        // every critical colouring by brute force over all k^|E| words
        auto brute_force_arrows(const Graph & g, const CliqueVector & spec) -> bool
        {
            auto edges = g.edges();
            int k = spec.colours();
            vector<std::uint8_t> word(edges.size(), 0);
            while (true) {
                if (is_critical(g, EdgeColoring{ g, k, word }, spec))
                    return false;
                std::size_t i = 0;
                while (i < word.size() && ++word[i] == k)
                    word[i++] = 0;
                if (i == word.size())
                    return true;
            }
        }

        auto cocritical_outcome(const RunConfig & config, const Graph & g, int inner_workers, bool scanning) -> Outcome
        {
            auto & spec = require_spec(config);
            CocriticalOptions options{ search_config(config, inner_workers), config.user_r };

            Outcome o;
            o.scan.order = g.order();
            json record = common_fields(g, spec);

            if (g.is_complete()) {
                if (! scanning)
                    throw PreconditionError{ "co-criticality is not defined for complete graph " + to_graph6(g) };
                o.scan.complete = true;
                record["verdict"] = "complete";
                record["delta"] = g.order() - 1;
                record["chi"] = g.order() <= 16 ? json(g.order()) : json(nullptr);
                record["edges"] = g.edge_count();
                record["ht_bound"] = nullptr;
                record["witness"] = nullptr;
                record["lemmas"] = json::array();
                record["stats"] = stats_json({}, config.timing);
                o.record = record;
                o.text = to_graph6(g) + " complete";
                return o;
            }

            auto report = is_cocritical(g, spec, options);
            if (config.minimal && report.is_cocritical())
                report.is_minimal = is_minimal_cocritical(g, spec, options);

            optional<LemmaSuite> suite;
            if (report.is_cocritical() && (config.lemmas || scanning))
                suite = run_lemma_suite(g, report, options);
            else if (report.is_cocritical()) {
                bool admissible = spec.colours() >= 2 && spec.is_sorted() && spec[0] >= 3;
                if (admissible) {
                    suite = LemmaSuite{};
                    suite->findings.push_back(mindeg_assert(g, spec));
                }
            }

            record["verdict"] = to_string(report.verdict);
            record["delta"] = report.min_degree;
            record["chi"] = opt_json(report.chromatic_number);
            record["edges"] = report.edge_count;
            record["ht_bound"] = opt_json(report.ht_bound);
            record["witness"] = witness_json(report.base_witness);
            record["lemmas"] = suite ? lemmas_json(*suite) : json::array();
            record["stats"] = stats_json(report.stats, config.timing);
            record["delta_max"] = report.max_degree;
            record["meets_ht"] = opt_json(report.meets_ht);
            record["failing_edge"] = edge_json(report.failing_edge);
            record["minimal"] = opt_json(report.is_minimal);
            if (suite && ! suite->skipped.empty())
                record["lemmas_skipped"] = suite->skipped;

            o.scan.cocritical = report.is_cocritical();
            o.scan.indeterminate = report.verdict == CocriticalVerdict::indeterminate;
            o.scan.min_degree = report.min_degree;

            if (report.is_cocritical() && g.order() <= max_canonical_vertices) {
                o.scan.canonical = canonical_form(g);
                record["canonical"] = *o.scan.canonical;
            }

            if (suite) {
                o.scan.tallies = tally(suite->findings);
                o.scan.lemma_failed = ! suite->all_hold();
                for (auto & f : suite->findings)
                    if (f.status == FindingStatus::indeterminate)
                        o.severity = merge_severity(o.severity, exit_codes::indeterminate);
            }

            if (config.oracle && g.edge_count() <= oracle_edge_limit) {
                bool brute = brute_force_arrows(g, spec);
                bool engine = report.base_outcome == ArrowOutcome::arrows;
                o.scan.oracle_checked = report.base_outcome != ArrowOutcome::indeterminate;
                o.scan.oracle_mismatch = o.scan.oracle_checked && brute != engine;
                record["oracle"] = o.scan.oracle_checked ? (o.scan.oracle_mismatch ? "disagree" : "agree") : "skipped";
            }

            if (o.scan.indeterminate || (config.minimal && report.is_cocritical() && ! report.is_minimal.has_value()))
                o.severity = merge_severity(o.severity, exit_codes::indeterminate);
            if (o.scan.lemma_failed || o.scan.oracle_mismatch)
                o.severity = merge_severity(o.severity, exit_codes::assertion_failed);

            o.record = record;
            std::ostringstream text;
            text << to_graph6(g) << " (" << spec.to_string() << ") " << to_string(report.verdict)
                << " delta=" << report.min_degree << " edges=" << report.edge_count;
            if (report.chromatic_number)
                text << " chi=" << *report.chromatic_number;
            if (report.failing_edge)
                text << " failing_edge=" << to_string(*report.failing_edge);
            if (report.is_minimal)
                text << " minimal=" << (*report.is_minimal ? "yes" : "no");
            if (suite)
                text << " lemmas=" << (suite->all_hold() ? "hold" : "VIOLATED");
            o.text = text.str();
            return o;
        }
    }

    auto cmd_arrow(const RunConfig & config, istream & in, ostream & out, ostream & err) -> int
    {
        auto & spec = require_spec(config);
        Output output{ config, out };

        std::ofstream witnesses;
        if (config.witness_path) {
            witnesses.open(*config.witness_path, std::ios::app);
            if (! witnesses) {
                err << "error: cannot write witnesses to " << *config.witness_path << "\n";
                return exit_codes::input_error;
            }
        }

        return process_graphs(config, in, err, [&] (const Graph & g, int inner_workers) {
            auto verdict = arrows(g, spec, search_config(config, inner_workers));
            Outcome o;
            json record = common_fields(g, spec);
            record["verdict"] = to_string(verdict.outcome);
            record["delta"] = degree_stats(g).min_degree;
            record["chi"] = g.order() <= 16 ? json(chromatic_number(g)) : json(nullptr);
            record["edges"] = g.edge_count();
            auto r = resolve_ramsey_number(spec, config.user_r);
            record["ht_bound"] = r && g.order() >= *r ? json(hanson_toft_edge_count(*r, g.order())) : json(nullptr);
            record["witness"] = witness_json(verdict.witness);
            record["lemmas"] = json::array();
            record["stats"] = stats_json(verdict.stats, config.timing);
            o.record = record;
            o.text = to_graph6(g) + " (" + spec.to_string() + ") " + to_string(verdict.outcome)
                + (verdict.witness ? " witness=" + verdict.witness->word() : "");
            if (! verdict.decided())
                o.severity = exit_codes::indeterminate;
            return o;
        }, [&] (const Outcome & o) {
            write(config, *output.stream, o);
            if (witnesses.is_open() && ! o.record["witness"].is_null())
                witnesses << o.record["witness"]["g6"].get<string>() << "\n"
                    << o.record["witness"]["colours"].get<string>() << "\n";
        });
    }

    auto cmd_cocritical(const RunConfig & config, istream & in, ostream & out, ostream & err) -> int
    {
        require_spec(config);
        Output output{ config, out };
        return process_graphs(config, in, err, [&] (const Graph & g, int inner_workers) {
            return cocritical_outcome(config, g, inner_workers, false);
        }, [&] (const Outcome & o) {
            write(config, *output.stream, o);
        });
    }

    auto cmd_scan(const RunConfig & config, istream & in, ostream & out, ostream & err) -> int
    {
        auto & spec = require_spec(config);
        Output output{ config, out };

        std::size_t graphs = 0, complete = 0, cocritical = 0, indeterminate = 0, oracle_checked = 0, oracle_mismatches = 0;
        std::size_t lemma_failures = 0;
        optional<int> min_delta;
        map<int, int> min_delta_by_order, count_by_order;
        set<string> canonical_forms;
        std::array<std::array<long, 4>, 7> tallies{};

        int code = process_graphs(config, in, err, [&] (const Graph & g, int inner_workers) {
            return cocritical_outcome(config, g, inner_workers, true);
        }, [&] (const Outcome & o) {
            ++graphs;
            auto & s = o.scan;
            complete += s.complete;
            indeterminate += s.indeterminate;
            oracle_checked += s.oracle_checked;
            oracle_mismatches += s.oracle_mismatch;
            lemma_failures += s.lemma_failed;
            if (s.cocritical) {
                ++cocritical;
                min_delta = min_delta ? std::min(*min_delta, s.min_degree) : s.min_degree;
                auto it = min_delta_by_order.find(s.order);
                min_delta_by_order[s.order] = it == min_delta_by_order.end() ? s.min_degree : std::min(it->second, s.min_degree);
                ++count_by_order[s.order];
                if (s.canonical)
                    canonical_forms.insert(*s.canonical);
            }
            for (int c = 0 ; c < 7 ; ++c)
                for (int k = 0 ; k < 4 ; ++k)
                    tallies[c][k] += s.tallies[c][k];
            if (config.format == OutputFormat::json)
                write(config, *output.stream, o);
        });

        if (code == exit_codes::input_error)
            return code;

        json summary;
        summary["spec"] = spec_json(spec);
        summary["graphs"] = graphs;
        summary["complete_skipped"] = complete;
        summary["cocritical"] = cocritical;
        summary["indeterminate"] = indeterminate;
        summary["min_delta"] = opt_json(min_delta);
        json by_order = json::array();
        for (auto & [n, count] : count_by_order) {
            json row;
            row["n"] = n;
            row["cocritical"] = count;
            row["min_delta"] = min_delta_by_order[n];
            by_order.push_back(row);
        }
        summary["by_order"] = by_order;
        json lemma_rows = json::array();
        for (int c = 0 ; c < 7 ; ++c) {
            auto & row = tallies[c];
            if (row[0] + row[1] + row[2] + row[3] == 0)
                continue;
            json entry;
            entry["clause"] = to_string(LemmaClause(c));
            entry["pass"] = row[0];
            entry["vacuous"] = row[1];
            entry["fail"] = row[2];
            entry["indeterminate"] = row[3];
            lemma_rows.push_back(entry);
        }
        summary["lemmas"] = lemma_rows;
        summary["graphs_with_lemma_failures"] = lemma_failures;
        if (config.oracle) {
            summary["oracle_checked"] = oracle_checked;
            summary["oracle_mismatches"] = oracle_mismatches;
        }
        summary["canonical_forms"] = vector<string>(canonical_forms.begin(), canonical_forms.end());

        if (config.format == OutputFormat::json) {
            json wrapper;
            wrapper["summary"] = summary;
            *output.stream << wrapper.dump() << "\n";
        }
        else {
            auto & os = *output.stream;
            os << "spec (" << spec.to_string() << "): " << graphs << " graphs, " << complete << " complete skipped, "
                << cocritical << " co-critical, " << indeterminate << " indeterminate\n";
            if (min_delta)
                os << "minimum degree among co-critical graphs: " << *min_delta << "\n";
            for (auto & row : by_order)
                os << "  n=" << row["n"] << ": " << row["cocritical"] << " co-critical, min delta " << row["min_delta"] << "\n";
            for (auto & row : lemma_rows)
                os << "  " << row["clause"].get<string>() << ": pass " << row["pass"] << ", vacuous " << row["vacuous"]
                    << ", fail " << row["fail"] << ", indeterminate " << row["indeterminate"] << "\n";
            if (config.oracle)
                os << "oracle: " << oracle_checked << " checked, " << oracle_mismatches << " mismatches\n";
            for (auto & c : canonical_forms)
                os << "  co-critical: " << c << "\n";
        }

        return code;
    }

    auto cmd_saturated(const RunConfig & config, istream & in, ostream & out, ostream & err) -> int
    {
        if (! config.t)
            throw ParseError{ "saturated needs --t" };
        int t = *config.t;
        Output output{ config, out };

        std::size_t graphs = 0, saturated = 0, hajnal_failures = 0;
        int code = process_graphs(config, in, err, [&] (const Graph & g, int) {
            auto report = is_saturated(g, t);
            auto degrees = degree_stats(g);
            Outcome o;
            json record;
            record["g6"] = to_graph6(g);
            record["t"] = t;
            record["verdict"] = ! report.is_free ? "not-free" : report.is_saturated ? "saturated" : "free-not-saturated";
            record["vacuous_complete"] = report.vacuous_complete;
            record["violating_edge"] = edge_json(report.violating_non_edge);
            record["hajnal"] = opt_json(report.hajnal_holds);
            record["delta"] = degrees.min_degree;
            record["delta_max"] = degrees.max_degree;
            record["edges"] = g.edge_count();
            o.record = record;
            o.sat.saturated = report.is_saturated;
            o.sat.hajnal_failed = report.hajnal_holds && ! *report.hajnal_holds;
            if (o.sat.hajnal_failed)
                o.severity = exit_codes::assertion_failed;
            o.text = to_graph6(g) + " K_" + to_string(t) + " " + record["verdict"].get<string>()
                + (report.vacuous_complete ? " (vacuous: complete)" : "")
                + (report.violating_non_edge ? " violating_edge=" + to_string(*report.violating_non_edge) : "")
                + (report.hajnal_holds ? string(" hajnal=") + (*report.hajnal_holds ? "holds" : "FAILS") : "");
            return o;
        }, [&] (const Outcome & o) {
            ++graphs;
            saturated += o.sat.saturated;
            hajnal_failures += o.sat.hajnal_failed;
            write(config, *output.stream, o);
        });

        if (code == exit_codes::input_error)
            return code;

        if (graphs > 1) {
            json summary;
            summary["t"] = t;
            summary["graphs"] = graphs;
            summary["saturated"] = saturated;
            summary["hajnal_failures"] = hajnal_failures;
            if (config.format == OutputFormat::json) {
                json wrapper;
                wrapper["summary"] = summary;
                *output.stream << wrapper.dump() << "\n";
            }
            else
                *output.stream << graphs << " graphs, " << saturated << " K_" << t << "-saturated, "
                    << hajnal_failures << " dichotomy failures\n";
        }
        return code;
    }

    auto run(const RunConfig & config, istream & in, ostream & out, ostream & err) -> int
    {
        try {
            if (config.construct && config.input_file)
                throw ParseError{ "give at most one of --construct and --in" };
            if (config.workers < 1)
                throw ParseError{ "--workers must be at least 1" };

            switch (config.subcommand) {
                case Subcommand::arrow:      return cmd_arrow(config, in, out, err);
                case Subcommand::cocritical: return cmd_cocritical(config, in, out, err);
                case Subcommand::scan:       return cmd_scan(config, in, out, err);
                case Subcommand::saturated:  return cmd_saturated(config, in, out, err);
            }
        }
        catch (const ParseError & e) {
            err << "error: " << e.what() << "\n";
            return exit_codes::input_error;
        }
        catch (const PreconditionError & e) {
            err << "error: " << e.what() << "\n";
            return exit_codes::input_error;
        }
        catch (const SizeError & e) {
            err << "error: " << e.what() << "\n";
            return exit_codes::input_error;
        }
        return exit_codes::input_error;
    }

    auto parse_arguments(int argc, const char * const * argv) -> RunConfig
    {
        RunConfig config;
        config.workers = default_workers();

        CLI::App app{ "Ramsey arrowing, saturation and co-criticality checks on small graphs", "rck" };
        app.require_subcommand(1);

        string spec_text;
        optional<int> t;
        bool text = false, json_output = false;

        auto add_common = [&] (CLI::App * sub) {
            sub->add_option("--construct", config.construct, "named construction: kn:N, empty:N, cycle:N, k6minus, "
                    "hanson-toft:T1,T2:N, complete-multipartite:P1,P2,...");
            sub->add_option("--in", config.input_file, "graph6 file (default: standard input)");
            sub->add_option("--workers", config.workers, "worker threads (default: RCK_WORKERS or all cores)");
            sub->add_option("--node-limit", config.node_limit, "search node budget per search");
            sub->add_flag("--json", json_output, "JSON lines output (default)");
            sub->add_flag("--text", text, "human-readable output");
            sub->add_flag("--timing", config.timing, "include wall-clock times in records");
            sub->add_option("--report", config.report_path, "write records to this file");
            sub->add_option("--ramsey", config.user_r, "Ramsey number to use for a spec outside the built-in table");
        };

        auto arrow = app.add_subcommand("arrow", "decide G -> (K_t1, ..., K_tk)");
        auto cocritical = app.add_subcommand("cocritical", "decide co-criticality, optionally with lemma checks");
        auto scan = app.add_subcommand("scan", "co-criticality scan over a graph6 corpus with summary");
        auto saturated = app.add_subcommand("saturated", "decide K_t-saturation and check the degree dichotomy");

        for (auto sub : { arrow, cocritical, scan })
            sub->add_option("--spec", spec_text, "clique sizes, e.g. 3,4")->required();
        for (auto sub : { arrow, cocritical, scan, saturated })
            add_common(sub);
        arrow->add_option("--witness-out", config.witness_path, "append witness colourings to this file");
        for (auto sub : { cocritical, scan }) {
            sub->add_flag("--lemmas", config.lemmas, "run the colouring structure checks");
            sub->add_flag("--minimal", config.minimal, "check vertex-minimality of co-critical graphs");
        }
        scan->add_flag("--oracle", config.oracle, "cross-check arrowing against brute force for small graphs");
        saturated->add_option("--t", t, "clique size")->required();

        app.parse(argc, argv);

        if (arrow->parsed())
            config.subcommand = Subcommand::arrow;
        else if (cocritical->parsed())
            config.subcommand = Subcommand::cocritical;
        else if (scan->parsed())
            config.subcommand = Subcommand::scan;
        else
            config.subcommand = Subcommand::saturated;

        if (! spec_text.empty())
            config.spec = CliqueVector::parse(spec_text);
        config.t = t;
        if (text && json_output)
            throw CLI::ValidationError{ "--json and --text are exclusive" };
        config.format = text ? OutputFormat::text : OutputFormat::json;
        return config;
    }

    auto main_with_streams(int argc, const char * const * argv, istream & in, ostream & out, ostream & err) -> int
    {
        RunConfig config;
        try {
            config = parse_arguments(argc, argv);
        }
        catch (const CLI::CallForHelp &) {
            err << "usage: rck {arrow,cocritical,scan,saturated} [options]; try rck <subcommand> --help\n";
            return exit_codes::ok;
        }
        catch (const CLI::ParseError & e) {
            err << "error: " << e.what() << "\n";
            return exit_codes::input_error;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << "\n";
            return exit_codes::input_error;
        }
        return run(config, in, out, err);
    }
}
