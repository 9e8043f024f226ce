#include <strongdom/claims.hpp>
#include <strongdom/domatic.hpp>
#include <strongdom/domination.hpp>
#include <strongdom/enumerate.hpp>
#include <strongdom/families.hpp>
#include <strongdom/graph_io.hpp>
#include <strongdom/oracle.hpp>
#include <strongdom/report.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

using namespace strongdom;

using std::cerr;
using std::cout;
using std::string;
using std::vector;

namespace
{
    constexpr int exit_failure = 1;
    constexpr int exit_usage = 2;

    /// Bad command-line values detected after parsing; reported like CLI11 errors.
    struct UsageError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    auto read_all(const string & path) -> string
    {
        if (path == "-")
            return { std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>() };
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw std::runtime_error("cannot open " + path);
        return { std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>() };
    }

    auto read_graphs(const string & path, const string & format) -> vector<Graph>
    {
        auto text = read_all(path);
        if (format == "edges")
            return { parse_edge_list(text) };

        vector<Graph> result;
        std::istringstream lines(text);
        string line;
        while (std::getline(lines, line)) {
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.starts_with(">>graph6<<"))
                line.erase(0, 10);
            if (! line.empty())
                result.push_back(parse_graph6(line));
        }
        return result;
    }

    auto write_graphs(const vector<Graph> & graphs, const string & format) -> void
    {
        for (std::size_t i = 0 ; i < graphs.size() ; ++i) {
            if (format == "edges")
                cout << (i ? "\n" : "") << to_edge_list(graphs[i]);
            else
                cout << to_graph6(graphs[i]) << '\n';
        }
    }

    auto print_set(const string & label, const VertexSet & s) -> void
    {
        cout << label;
        for (auto v : s.members())
            cout << ' ' << v;
        cout << '\n';
    }

    struct ComputeArgs
    {
        string input = "-";
        string format = "graph6";
        string what = "dst";
        bool witness = false;
        std::uint64_t node_budget = default_node_budget;
    };

    auto run_compute(const ComputeArgs & args) -> int
    {
        SolverOptions options;
        options.node_budget = args.node_budget;

        for (auto & g : read_graphs(args.input, args.format)) {
            if (0 == g.order())
                throw std::runtime_error("graph has no vertices");

            if (args.what == "dst") {
                auto result = strong_domatic_number(g, options);
                cout << "dst " << result.value << '\n';
                for (auto & c : result.witness.classes)
                    print_set("class", c);
            }
            else if (args.what == "domatic") {
                auto result = domatic_partition(g, options);
                cout << "domatic " << result.value << '\n';
                if (args.witness)
                    for (auto & c : result.witness.classes)
                        print_set("class", c);
            }
            else {
                auto kind = args.what == "gst" ? DominationKind::strong
                    : args.what == "gammaw" ? DominationKind::weak : DominationKind::classic;
                auto result = minimum_dominating_set(g, kind);
                cout << args.what << ' ' << result.size << '\n';
                if (args.witness)
                    print_set("set", result.witness);
            }
        }
        return 0;
    }

    auto run_family(const string & name, const vector<int> & params, const string & format) -> int
    {
        auto kind = parse_family_kind(name);
        if (! kind)
            throw UsageError("unknown family '" + name + "'");
        Graph g;
        try {
            g = basic_family({ *kind, params });
        }
        catch (const std::invalid_argument & e) {
            throw UsageError(e.what());
        }
        write_graphs({ g }, format);
        return 0;
    }

    auto run_enumerate(int order, int degree, bool connected_only, const string & format) -> int
    {
        vector<Graph> graphs;
        try {
            graphs = enumerate_regular(order, degree, connected_only);
        }
        catch (const std::invalid_argument & e) {
            throw UsageError(e.what());
        }
        write_graphs(graphs, format);
        return 0;
    }

    struct ClaimsArgs
    {
        int max_n = 12;
        std::uint64_t seed = default_seed;
        string report;
        bool json = false;
        bool csv = false;
        bool timings = false;
        std::uint64_t node_budget = default_node_budget;
    };

    auto run_verify_claims(const ClaimsArgs & args) -> int
    {
        if (args.max_n < 6 || args.max_n > graph6_max_order)
            throw UsageError("--max-n must be in 6.." + std::to_string(graph6_max_order));

        auto results = run_claims({ args.max_n, args.seed, args.node_budget });

        ReportOptions options{ args.timings };
        auto text = args.json ? report_json(results, options)
            : args.csv ? report_csv(results, options) : report_text(results, options);

        if (args.report.empty() || args.report == "-")
            cout << text;
        else {
            std::ofstream out(args.report, std::ios::binary);
            if (! (out << text))
                throw std::runtime_error("cannot write " + args.report);
        }

        int pass = 0, fail = 0, skipped = 0, informational = 0;
        for (auto & r : results) {
            if (r.status == ClaimStatus::pass)
                ++pass;
            else if (r.status == ClaimStatus::skipped_budget)
                ++skipped;
            else if (r.informational)
                ++informational;
            else
                ++fail;
        }
        cerr << results.size() << " claim results: " << pass << " pass, " << fail << " fail, "
            << skipped << " skipped-budget, " << informational << " informational mismatch\n";
        return 0;
    }

    auto run_oracle_check(std::uint64_t seed, int count, int max_n) -> int
    {
        if (max_n < 1 || max_n > oracle_max_order)
            throw UsageError("--max-n must be in 1.." + std::to_string(oracle_max_order) + " for oracle-check");
        if (count < 0)
            throw UsageError("--count must be non-negative");

        int mismatches = 0;
        for (auto & g : random_corpus(seed, count, max_n)) {
            auto dst = strong_domatic_number(g).value, dst_oracle = oracle_strong_domatic(g);
            auto gst = strong_domination_number(g).size, gst_oracle = oracle_gamma_st(g);
            if (dst != dst_oracle) {
                ++mismatches;
                cout << "mismatch " << to_graph6(g) << " dst solver " << dst << " oracle " << dst_oracle << '\n';
            }
            if (gst != gst_oracle) {
                ++mismatches;
                cout << "mismatch " << to_graph6(g) << " gst solver " << gst << " oracle " << gst_oracle << '\n';
            }
        }
        cout << "checked " << count << " graphs, " << mismatches << " mismatches\n";
        return mismatches == 0 ? 0 : exit_failure;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Strong domination and strong domatic partitions of small graphs" };
    app.require_subcommand(1);

    const vector<string> formats{ "graph6", "edges" };

    ComputeArgs compute;
    auto compute_cmd = app.add_subcommand("compute", "Evaluate an invariant for each input graph");
    compute_cmd->add_option("--input", compute.input, "Input file, or - for stdin")->capture_default_str();
    compute_cmd->add_option("--format", compute.format, "Input format")->check(CLI::IsMember(formats))->capture_default_str();
    compute_cmd->add_option("--what", compute.what, "Invariant to compute")
        ->check(CLI::IsMember({ "dst", "gst", "gamma", "gammaw", "domatic" }))->capture_default_str();
    compute_cmd->add_flag("--witness", compute.witness, "Also print a witness set or partition");
    compute_cmd->add_option("--node-budget", compute.node_budget, "Search node budget for partition solvers")->capture_default_str();

    string family_name_arg, family_format = "graph6";
    vector<int> family_params;
    auto family_cmd = app.add_subcommand("family", "Print a member of a named family");
    family_cmd->add_option("kind", family_name_arg,
            "path, cycle, complete, complete_bipartite, star, empty, friendship, book or petersen")->required();
    family_cmd->add_option("params", family_params, "Integer parameters");
    family_cmd->add_option("--format", family_format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();

    int enum_order = 0, enum_degree = 0;
    bool connected_only = false;
    string enum_format = "graph6";
    auto enumerate_cmd = app.add_subcommand("enumerate", "List regular graphs up to isomorphism");
    enumerate_cmd->add_option("--order", enum_order, "Number of vertices")->required();
    enumerate_cmd->add_option("--degree", enum_degree, "Common vertex degree")->required();
    enumerate_cmd->add_flag("--connected-only", connected_only, "Drop disconnected graphs");
    enumerate_cmd->add_option("--format", enum_format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();

    ClaimsArgs claims;
    auto claims_cmd = app.add_subcommand("verify-claims", "Check the claim registry and emit a report");
    claims_cmd->add_option("--max-n", claims.max_n, "Largest order of any checked instance")->capture_default_str();
    claims_cmd->add_option("--seed", claims.seed, "Seed for randomized corpora")->capture_default_str();
    claims_cmd->add_option("--report", claims.report, "Report path (default stdout)");
    auto json_flag = claims_cmd->add_flag("--json", claims.json, "JSON report");
    auto csv_flag = claims_cmd->add_flag("--csv", claims.csv, "CSV report");
    json_flag->excludes(csv_flag);
    claims_cmd->add_flag("--timings", claims.timings, "Record wall-clock milliseconds instead of 0");
    claims_cmd->add_option("--node-budget", claims.node_budget, "Search node budget per solver call")->capture_default_str();

    std::uint64_t oracle_seed = default_seed;
    int oracle_count = 200, oracle_max_n = 8;
    auto oracle_cmd = app.add_subcommand("oracle-check", "Compare the solvers with exhaustive oracles on random graphs");
    oracle_cmd->add_option("--seed", oracle_seed, "Corpus seed")->capture_default_str();
    oracle_cmd->add_option("--count", oracle_count, "Number of random graphs")->capture_default_str();
    oracle_cmd->add_option("--max-n", oracle_max_n, "Largest order")->capture_default_str();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e, cerr, cerr);
        cerr << app.help();
        return exit_usage;
    }

    try {
        if (compute_cmd->parsed())
            return run_compute(compute);
        if (family_cmd->parsed())
            return run_family(family_name_arg, family_params, family_format);
        if (enumerate_cmd->parsed())
            return run_enumerate(enum_order, enum_degree, connected_only, enum_format);
        if (claims_cmd->parsed())
            return run_verify_claims(claims);
        if (oracle_cmd->parsed())
            return run_oracle_check(oracle_seed, oracle_count, oracle_max_n);
    }
    catch (const UsageError & e) {
        cerr << "strongdom: " << e.what() << '\n' << app.help();
        return exit_usage;
    }
    catch (const ParseError & e) {
        cerr << "strongdom: input error: " << e.what() << '\n';
        return exit_failure;
    }
    catch (const std::exception & e) {
        cerr << "strongdom: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}
