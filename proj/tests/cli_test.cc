/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "cli/cli.hh"

#include <json.hpp>
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

using json = nlohmann::ordered_json;

namespace
{
    struct Run
    {
        int code;
        std::string out, err;

        auto records() const -> std::vector<json>
        {
            std::vector<json> result;
            std::istringstream lines{ out };
            std::string line;
            while (std::getline(lines, line))
                result.push_back(json::parse(line));
            return result;
        }
    };

    auto run(std::vector<std::string> args, const std::string & input = "") -> Run
    {
        args.insert(args.begin(), "rck");
        std::vector<const char *> argv;
        for (auto & a : args)
            argv.push_back(a.c_str());
        std::istringstream in{ input };
        std::ostringstream out, err;
        int code = rck::cli::main_with_streams(int(argv.size()), argv.data(), in, out, err);
        return { code, out.str(), err.str() };
    }

    auto corpus(int n) -> std::string
    {
        return std::string{ RCK_CORPUS_DIR } + "/graphs_n" + std::to_string(n) + ".g6";
    }
}

TEST_CASE("arrow subcommand")
{
    auto k6 = run({ "arrow", "--spec", "3,3", "--construct", "kn:6" });
    CHECK(k6.code == 0);
    auto r = k6.records();
    REQUIRE(r.size() == 1);
    CHECK(r[0]["verdict"] == "arrows");
    CHECK(r[0]["witness"].is_null());

    auto path = std::filesystem::temp_directory_path() / "rck_cli_test_witness.txt";
    std::filesystem::remove(path);
    auto k8 = run({ "arrow", "--spec", "3,4", "--construct", "kn:8", "--witness-out", path.string() });
    CHECK(k8.code == 0);
    CHECK(k8.records()[0]["verdict"] == "not-arrows");
    std::ifstream witness{ path };
    std::string g6, colours;
    std::getline(witness, g6);
    std::getline(witness, colours);
    CHECK(g6 == "G~~~~{");
    CHECK(colours.size() == 28);

    auto empty = run({ "arrow", "--spec", "3,3" });
    CHECK(empty.code == 0);
    CHECK(empty.out.empty());
}

TEST_CASE("record schema")
{
    auto r = run({ "arrow", "--spec", "3,3", "--construct", "kn:5" }).records().at(0);
    std::vector<std::string> keys;
    for (auto & [k, v] : r.items())
        keys.push_back(k);
    std::vector<std::string> expected{ "g6", "spec", "verdict", "delta", "chi", "edges", "ht_bound", "witness", "lemmas", "stats" };
    CHECK(std::vector<std::string>(keys.begin(), keys.begin() + expected.size()) == expected);
    CHECK_FALSE(r["stats"].contains("seconds"));
    auto timed = run({ "arrow", "--spec", "3,3", "--construct", "kn:5", "--timing" }).records().at(0);
    CHECK(timed["stats"].contains("seconds"));
}

TEST_CASE("cocritical subcommand")
{
    auto k6m = run({ "cocritical", "--spec", "3,3", "--construct", "k6minus", "--minimal" });
    CHECK(k6m.code == 0);
    auto r = k6m.records().at(0);
    CHECK(r["verdict"] == "cocritical");
    CHECK(r["minimal"] == true);

    auto ht = run({ "cocritical", "--spec", "3,4", "--construct", "hanson-toft:3,4:9", "--lemmas" });
    CHECK(ht.code == 0);
    auto h = ht.records().at(0);
    CHECK(h["verdict"] == "cocritical");
    CHECK(h["delta"] == 7);
    CHECK(h["ht_bound"] == 35);
    CHECK(h["lemmas"].size() >= 3);

    auto complete = run({ "cocritical", "--spec", "3,3", "--construct", "kn:6" });
    CHECK(complete.code == 2);
    CHECK(complete.err.find("complete") != std::string::npos);
}

TEST_CASE("scan subcommand")
{
    auto scan = run({ "scan", "--spec", "3,3", "--in", corpus(6) });
    CHECK(scan.code == 0);
    auto records = scan.records();
    REQUIRE(records.size() == 157);
    auto summary = records.back()["summary"];
    CHECK(summary["graphs"] == 156);
    CHECK(summary["cocritical"].get<int>() >= 1);
    CHECK(summary["min_delta"] == 4);
    CHECK(summary["graphs_with_lemma_failures"] == 0);

    auto oracle = run({ "scan", "--spec", "2,3", "--in", corpus(4), "--oracle" });
    CHECK(oracle.code == 0);
    auto s = oracle.records().back()["summary"];
    CHECK(s["oracle_mismatches"] == 0);
    CHECK(s["oracle_checked"].get<int>() > 0);

    auto text = run({ "scan", "--spec", "3,3", "--in", corpus(6), "--text" });
    CHECK(text.code == 0);
    CHECK(text.out.find("minimum degree among co-critical graphs: 4") != std::string::npos);
}

TEST_CASE("saturated subcommand")
{
    auto sat = run({ "saturated", "--t", "4", "--in", corpus(7) });
    CHECK(sat.code == 0);
    CHECK(sat.records().back()["summary"]["hajnal_failures"] == 0);

    auto k3 = run({ "saturated", "--t", "3", "--construct", "kn:3" }).records().at(0);
    CHECK(k3["vacuous_complete"] == true);

    auto empty = run({ "saturated", "--t", "3" }, "D??\n").records().at(0);
    CHECK(empty["verdict"] == "free-not-saturated");
    CHECK(empty["violating_edge"] == json::array({ 0, 1 }));
}

TEST_CASE("input errors")
{
    CHECK(run({ "arrow", "--spec", "3,3" }, "Bw\nnot graph6!\n").code == 2);
    CHECK(run({ "arrow", "--spec", "3,x", "--construct", "kn:3" }).code == 2);
    CHECK(run({ "arrow", "--construct", "kn:3" }).code == 2);
    CHECK(run({ "arrow", "--spec", "3,3", "--construct", "kn:3", "--in", corpus(3) }).code == 2);
    CHECK(run({ "arrow", "--spec", "3,3", "--in", "/nonexistent/file.g6" }).code == 2);
    CHECK(run({ "arrow", "--spec", "3,3", "--construct", "bogus" }).code == 2);
    CHECK(run({ "arrow", "--spec", "3,3", "--workers", "0", "--construct", "kn:3" }).code == 2);
    CHECK(run({}).code == 2);

    // records before the bad line are still emitted
    auto partial = run({ "arrow", "--spec", "3,3" }, "Bw\n!!\n");
    CHECK(partial.records().size() == 1);
    CHECK(partial.err.find("line 2") != std::string::npos);
}

TEST_CASE("node limit exit code")
{
    auto r = run({ "arrow", "--spec", "3,4", "--construct", "kn:9", "--node-limit", "5" });
    CHECK(r.code == 3);
    CHECK(r.records().at(0)["verdict"] == "indeterminate");
}

TEST_CASE("output is independent of the worker count")
{
    auto one = run({ "scan", "--spec", "3,3", "--in", corpus(6), "--workers", "1" });
    auto four = run({ "scan", "--spec", "3,3", "--in", corpus(6), "--workers", "4" });
    CHECK(one.out == four.out);
    auto a = run({ "cocritical", "--spec", "3,4", "--construct", "hanson-toft:3,4:9", "--workers", "1" });
    auto b = run({ "cocritical", "--spec", "3,4", "--construct", "hanson-toft:3,4:9", "--workers", "4" });
    CHECK(a.out == b.out);
}
