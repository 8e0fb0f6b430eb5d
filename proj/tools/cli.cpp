#include "cli.hpp"

#include "mextremal/bounds.hpp"
#include "mextremal/coloring.hpp"
#include "mextremal/constructions.hpp"
#include "mextremal/containment.hpp"
#include "mextremal/error.hpp"
#include "mextremal/extremal.hpp"
#include "mextremal/io.hpp"
#include "mextremal/pipeline.hpp"
#include "mextremal/reduced.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace mextremal::cli {

namespace
{
    using nlohmann::json;

    struct Format
    {
        bool json = false;
        int threads = 0;
    };

    auto schema(std::string_view command) -> std::string
    {
        return "mextremal." + std::string{ command } + "/1";
    }

    auto rational_json(const Rational & q) -> json
    {
        return { { "exact", to_string(q) }, { "approx", boost::rational_cast<double>(q) } };
    }

    auto set_string(const std::vector<int> & items) -> std::string
    {
        std::string s = "{";
        for (std::size_t i = 0 ; i < items.size() ; ++i)
            s += (i ? "," : "") + std::to_string(items[i]);
        return s + "}";
    }

    auto map_string(const std::vector<int> & map) -> std::string
    {
        std::string s;
        for (std::size_t i = 0 ; i < map.size() ; ++i)
            s += (i ? " " : "") + std::to_string(i) + "->" + std::to_string(map[i]);
        return s;
    }

    auto read_patterns(const std::vector<std::string> & paths) -> std::vector<ColoredMultigraph>
    {
        std::vector<ColoredMultigraph> patterns;
        for (const auto & p : paths)
            patterns.push_back(read_graph_file(p));
        return patterns;
    }

    void print_row(std::ostream & out, std::string_view label, const std::string & value)
    {
        out << std::left << std::setw(20) << label << value << "\n";
    }

    void print_rational_row(std::ostream & out, std::string_view label, const Rational & q)
    {
        out << std::left << std::setw(20) << label << std::setw(16) << to_string(q) << to_decimal(q) << "\n";
    }

    void emit_graph(std::ostream & out, const Format & fmt, const ColoredMultigraph & g)
    {
        if (fmt.json) {
            auto j = graph_to_json(g);
            j["schema"] = schema("graph");
            out << j.dump() << "\n";
        }
        else
            out << serialize_text(g);
    }

    auto search_options(const Format & fmt, long long max_nodes, bool no_symmetry) -> SearchOptions
    {
        SearchOptions o;
        o.threads = fmt.threads;
        o.max_nodes = max_nodes;
        o.symmetry_breaking = ! no_symmetry;
        return o;
    }

    void emit_search(std::ostream & out, const Format & fmt, std::string_view command, std::string_view label,
            const MexResult & result, const std::string & witness_path)
    {
        if (! witness_path.empty())
            write_graph_file(witness_path, result.witness);
        if (fmt.json) {
            json j = { { "schema", schema(command) }, { "value", result.value }, { "exhaustive", result.exhaustive },
                { "nodes_explored", result.nodes_explored }, { "witness", graph_to_json(result.witness) } };
            out << j.dump() << "\n";
            return;
        }
        out << label << " = " << result.value << "\n";
        out << "exhaustive = " << (result.exhaustive ? "true" : "false") << "\n";
        out << "nodes = " << result.nodes_explored << "\n";
        if (witness_path.empty())
            out << "# witness\n" << serialize_text(result.witness);
        else
            out << "witness written to " << witness_path << "\n";
    }

    auto trace_json(const PipelineResult & result) -> json
    {
        const auto & t = result.trace;
        json rounds = json::array();
        for (const auto & rt : t.rounds) {
            json cuts = json::array();
            for (const auto & c : rt.cuts)
                cuts.push_back({ { "part", c.part }, { "color", c.color }, { "edges", c.edges }, { "cut_edges", c.cut_edges },
                    { "exact", c.exact }, { "side", c.side } });
            rounds.push_back({ { "round", rt.round }, { "permutation", rt.permutation }, { "cuts", cuts },
                { "kept_core_edges", rt.kept_core_edges }, { "hprime_edges", rt.hprime_edges },
                { "clique", rt.clique ? json(*rt.clique) : json(nullptr) } });
        }
        json stats = json::array();
        for (const auto & s : t.statistics)
            stats.push_back({ { "color", s.color }, { "expected_edges", rational_json(s.expected_edges) },
                { "density_lower_bound", rational_json(s.density_lower_bound) }, { "empirical_mean", s.empirical_mean } });
        return { { "parts", t.parts }, { "partition_source", std::string{ to_string(t.source) } }, { "core_edges", t.core_edges },
            { "kept_core_edges", t.kept_core_edges }, { "direct_clique", t.direct_clique }, { "rounds", rounds },
            { "statistics", stats } };
    }

    auto parse_partition(const std::vector<int> & labels) -> std::optional<Partition>
    {
        if (labels.empty())
            return std::nullopt;
        return Partition::from_labels(labels);
    }

    auto parse_builtin(const std::string & name, int t, int r) -> ColoredMultigraph
    {
        if (name == "permutation")
            return gadget_permutation_complement(t);
        if (name == "monochrome")
            return gadget_monochrome(t, r);
        if (name == "checkerboard")
            return gadget_checkerboard(t);
        fail(ErrorKind::InvalidArgument, "unknown builtin gadget '" + name + "'");
    }
}

auto run(std::span<const std::string> args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{ "Multicolor Turan toolkit: chromatic data, reduced matchings, exact mex, constructions, bounds", "mextremal" };
    app.require_subcommand(1);
    app.fallthrough();
    Format fmt;
    app.add_flag("--json", fmt.json, "Emit JSON instead of text");
    app.add_option("--threads", fmt.threads, "Worker threads (0: MEXTREMAL_THREADS or hardware)")->check(CLI::NonNegativeNumber);

    std::string graph_path, second_path, witness_path;
    std::vector<std::string> pattern_paths;
    int n = 0, r = 0, s = 0, k = 0, m = 0, t = 0, rounds = 10, color = red, length = 0, parts = 0;
    std::optional<int> bounds_k, bounds_m;
    std::uint64_t seed = 0;
    long long max_nodes = 0, trials = 0;
    bool no_symmetry = false, exact = false;
    std::string word, builtin;
    std::vector<int> matching, partition_labels;

    auto * chi = app.add_subcommand("chi", "Chromatic number of the underlying simple graph");
    chi->add_option("graph", graph_path, "Graph file")->required();

    auto * redmm = app.add_subcommand("redmm", "Reduced maximum matching number M(G) with witness");
    redmm->add_option("graph", graph_path, "Graph file")->required();

    auto * bounds = app.add_subcommand("bounds", "Trivial and matching-corrected upper bounds for a graph");
    bounds->add_option("graph", graph_path, "Graph file")->required();
    bounds->add_option("--r", r, "Number of colors")->required();
    bounds->add_option("--k", bounds_k, "Also report the construction lower bound for this k");
    bounds->add_option("--m", bounds_m, "Matching size for the construction lower bound");

    auto add_search = [&] (CLI::App * sub, bool need_patterns) {
        sub->add_option("--n", n, "Host vertex count")->required();
        sub->add_option("--r", r, "Number of colors")->required();
        auto * p = sub->add_option("patterns", pattern_paths, "Forbidden pattern files");
        if (need_patterns)
            p->required();
        sub->add_option("--max-nodes", max_nodes, "Node budget (0: unlimited)");
        sub->add_flag("--no-symmetry", no_symmetry, "Disable symmetry breaking");
        sub->add_option("--witness", witness_path, "Write the witness to this file");
    };
    auto * mex = app.add_subcommand("mex", "Exact mex(r, n, patterns)");
    add_search(mex, true);
    auto * maxedges = app.add_subcommand("maxedges", "Maximum total edges avoiding the patterns");
    add_search(maxedges, false);

    auto * contains = app.add_subcommand("contains", "Search for a colored copy of pattern in host");
    contains->add_option("host", graph_path, "Host graph file")->required();
    contains->add_option("pattern", second_path, "Pattern graph file")->required();

    auto * hom = app.add_subcommand("hom", "Search for a colored homomorphism pattern -> target");
    hom->add_option("pattern", graph_path, "Pattern graph file")->required();
    hom->add_option("target", second_path, "Target graph file")->required();

    auto * blowup = app.add_subcommand("blowup", "Blow each vertex up into an independent set");
    blowup->add_option("graph", graph_path, "Graph file")->required();
    blowup->add_option("--s", s, "Class size")->required()->check(CLI::PositiveNumber);

    auto * construct = app.add_subcommand("construct", "Generate a named construction");
    construct->require_subcommand(1);
    auto * c_family = construct->add_subcommand("family", "Lower-bound family for (r, k, m)");
    c_family->add_option("--r", r, "Even number of colors")->required();
    c_family->add_option("--k", k, "k")->required();
    c_family->add_option("--m", m, "m")->required();
    auto * c_h = construct->add_subcommand("H", "Complete k-partite graph with random gadgets between parts");
    c_h->add_option("--r", r, "Number of colors")->required();
    c_h->add_option("--k", k, "Number of parts")->required();
    c_h->add_option("--t", t, "Part size")->required();
    c_h->add_option("--seed", seed, "RNG seed");
    auto * c_hprime = construct->add_subcommand("Hprime", "Join a 2m-clique in one color onto a graph");
    c_hprime->add_option("graph", graph_path, "Base graph file")->required();
    c_hprime->add_option("--m", m, "Half the clique size")->required();
    c_hprime->add_option("--color", color, "Clique color");
    auto * c_t1 = construct->add_subcommand("t1", "Triangle with one double edge and two red edges");
    auto * c_t2 = construct->add_subcommand("t2", "Triangle with one double edge, one red and one blue edge");
    auto * c_cycle = construct->add_subcommand("cycle", "Two-colored cycle from a color word over R/B");
    c_cycle->add_option("--length", length, "Cycle length")->required();
    c_cycle->add_option("--word", word, "Color word such as RRRRB")->required();
    auto * c_gadget = construct->add_subcommand("gadget", "Colored K_{t,t} gadget");
    c_gadget->add_option("--t", t, "Side size")->required();
    c_gadget->add_option("--r", r, "Number of colors");
    c_gadget->add_option("--seed", seed, "RNG seed");
    c_gadget->add_option("--builtin", builtin, "permutation | monochrome | checkerboard");
    auto * c_turan = construct->add_subcommand("turan", "Balanced complete multipartite graph");
    c_turan->add_option("--n", n, "Vertex count")->required();
    c_turan->add_option("--parts", parts, "Number of parts")->required();
    auto * c_pprime = construct->add_subcommand("pprime", "P' with a single-color matching and full multiplicity elsewhere");
    c_pprime->add_option("--k", k, "P' has k+1 vertices")->required();
    c_pprime->add_option("--r", r, "Number of colors")->required();
    c_pprime->add_option("--matching", matching, "Matching colors, comma separated")->delimiter(',');

    auto * verify = app.add_subcommand("verify-gadget", "Check that every s x s sub-board spans all colors");
    verify->add_option("graph", graph_path, "Gadget graph file")->required();
    verify->add_option("--s", s, "Subset size")->required();
    auto * exact_flag = verify->add_flag("--exact", exact, "Exhaustive check (default)");
    auto * trials_opt = verify->add_option("--trials", trials, "Sample this many subset pairs")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "Sampling seed");
    exact_flag->excludes(trials_opt);

    auto * pipeline = app.add_subcommand("pipeline", "Hunt for P' in a host graph");
    pipeline->add_option("host", graph_path, "Host graph file")->required();
    pipeline->add_option("--k", k, "P' has k+1 vertices")->required();
    pipeline->add_option("--matching", matching, "Matching colors, comma separated")->delimiter(',');
    pipeline->add_option("--rounds", rounds, "Sampling rounds")->check(CLI::NonNegativeNumber);
    pipeline->add_option("--seed", seed, "RNG seed");
    pipeline->add_option("--partition", partition_labels, "Part label per vertex, comma separated")->delimiter(',');

    auto * tightness = app.add_subcommand("tightness", "Compare the construction lower bound with the upper bound");
    tightness->add_option("--r", r, "Even number of colors")->required();
    tightness->add_option("--k", k, "k")->required();
    tightness->add_option("--m", m, "m")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().back()->help());
        return exit_ok;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    }
    catch (const CLI::ParseError & e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (chi->parsed()) {
            int value = chromatic_number(read_graph_file(graph_path));
            if (fmt.json)
                out << json{ { "schema", schema("chi") }, { "chi", value } }.dump() << "\n";
            else
                out << "chi = " << value << "\n";
        }
        else if (redmm->parsed()) {
            auto g = read_graph_file(graph_path);
            int chi_value = chromatic_number(g);
            auto rm = reduced_max_matching(g);
            json pairs = json::array();
            for (auto [x, y] : rm.matching.edges)
                pairs.push_back({ x, y });
            if (fmt.json)
                out << json{ { "schema", schema("redmm") }, { "M", rm.value }, { "chi", chi_value },
                    { "partition", rm.partition.classes }, { "matching", pairs } }.dump() << "\n";
            else {
                out << "M = " << rm.value << "\n";
                out << "chi = " << chi_value << "\n";
                out << "partition =";
                for (const auto & cls : rm.partition.classes)
                    out << " " << set_string(cls);
                out << "\nmatching =";
                for (auto [x, y] : rm.matching.edges)
                    out << " " << set_string({ x, y });
                out << "\n";
            }
        }
        else if (bounds->parsed()) {
            auto rep = report(read_graph_file(graph_path), r);
            if (bounds_k || bounds_m) {
                if (! bounds_k || ! bounds_m)
                    fail(ErrorKind::InvalidArgument, "--k and --m must be given together");
                rep.construction_lower = construction_lower(r, *bounds_k, *bounds_m);
            }
            if (fmt.json) {
                json j = { { "schema", schema("bounds") }, { "r", rep.r }, { "chi", rep.chi }, { "M", rep.M },
                    { "trivial_upper", rational_json(rep.trivial_upper) }, { "theorem_upper", rational_json(rep.theorem_upper) },
                    { "construction_lower", rep.construction_lower ? rational_json(*rep.construction_lower) : json(nullptr) } };
                out << j.dump() << "\n";
            }
            else {
                print_row(out, "r", std::to_string(rep.r));
                print_row(out, "chi", std::to_string(rep.chi));
                print_row(out, "M", std::to_string(rep.M));
                print_rational_row(out, "trivial_upper", rep.trivial_upper);
                print_rational_row(out, "theorem_upper", rep.theorem_upper);
                if (rep.construction_lower)
                    print_rational_row(out, "construction_lower", *rep.construction_lower);
            }
        }
        else if (mex->parsed()) {
            auto patterns = read_patterns(pattern_paths);
            auto result = mex_exact(n, r, patterns, search_options(fmt, max_nodes, no_symmetry));
            emit_search(out, fmt, "mex", "T", result, witness_path);
        }
        else if (maxedges->parsed()) {
            auto patterns = read_patterns(pattern_paths);
            auto result = max_edges_avoiding(n, r, patterns, search_options(fmt, max_nodes, no_symmetry));
            emit_search(out, fmt, "maxedges", "E", result, witness_path);
        }
        else if (contains->parsed() || hom->parsed()) {
            auto first = read_graph_file(graph_path);
            auto second = read_graph_file(second_path);
            std::optional<std::vector<int>> map;
            if (contains->parsed()) {
                if (auto e = contains_colored(first, second))
                    map = e->map;
            }
            else if (auto h = hom_exists(first, second))
                map = h->map;
            std::string name = contains->parsed() ? "contains" : "hom";
            if (fmt.json)
                out << json{ { "schema", schema(name) }, { "found", map.has_value() }, { "map", map ? json(*map) : json(nullptr) } }.dump()
                    << "\n";
            else if (map)
                out << "found: " << map_string(*map) << "\n";
            else
                out << "none\n";
        }
        else if (blowup->parsed())
            emit_graph(out, fmt, blow_up(read_graph_file(graph_path), s));
        else if (construct->parsed()) {
            ColoredMultigraph g;
            if (c_family->parsed())
                g = lower_bound_family(r, k, m).graph;
            else if (c_h->parsed())
                g = graph_H(r, k, t, seed);
            else if (c_hprime->parsed())
                g = graph_H_prime(read_graph_file(graph_path), m, color);
            else if (c_t1->parsed())
                g = t1();
            else if (c_t2->parsed())
                g = t2();
            else if (c_cycle->parsed())
                g = cycle_pattern(length, word);
            else if (c_gadget->parsed()) {
                int colors = r == 0 ? 2 : r;
                if (builtin.empty())
                    g = gadget_coloring({ t, colors, 1, seed });
                else
                    g = parse_builtin(builtin, t, colors);
            }
            else if (c_turan->parsed())
                g = turan_graph(n, parts);
            else if (c_pprime->parsed())
                g = build_pprime({ k, matching, r });
            emit_graph(out, fmt, g);
        }
        else if (verify->parsed()) {
            auto g = read_graph_file(graph_path);
            std::optional<GadgetSampling> sampling;
            if (trials > 0)
                sampling = GadgetSampling{ trials, seed };
            auto verdict = verify_gadget(g, s, sampling);
            if (fmt.json)
                out << json{ { "schema", schema("verify-gadget") }, { "pass", verdict.pass }, { "mode", sampling ? "sampled" : "exact" },
                    { "checked", verdict.checked }, { "rows", verdict.rows }, { "cols", verdict.cols } }.dump() << "\n";
            else if (verdict.pass)
                out << "pass (" << (sampling ? "sampled" : "exact") << ", checked " << verdict.checked << ")\n";
            else
                out << "fail rows " << set_string(verdict.rows) << " cols " << set_string(verdict.cols) << " (checked " << verdict.checked
                    << ")\n";
        }
        else if (pipeline->parsed()) {
            auto h = read_graph_file(graph_path);
            PipelineOptions options;
            options.partition = parse_partition(partition_labels);
            options.rounds = rounds;
            options.seed = seed;
            auto result = find_pprime(h, { k, matching, h.r() }, options);
            if (fmt.json) {
                json j = { { "schema", schema("pipeline") }, { "found", result.found() },
                    { "embedding", result.embedding ? json(result.embedding->map) : json(nullptr) }, { "trace", trace_json(result) } };
                out << j.dump() << "\n";
            }
            else {
                const auto & tr = result.trace;
                out << "partition (" << to_string(tr.source) << ") =";
                for (const auto & p : tr.parts)
                    out << " " << set_string(p);
                out << "\ncore edges = " << tr.core_edges << ", kept across parts = " << tr.kept_core_edges << "\n";
                if (tr.direct_clique)
                    out << "core already contains K_" << k + 1 << "\n";
                for (const auto & rt : tr.rounds) {
                    int cut_total = 0;
                    for (const auto & c : rt.cuts)
                        cut_total += c.cut_edges;
                    out << "round " << rt.round << ": pi = " << set_string(rt.permutation) << ", cut edges = " << cut_total
                        << ", e(H') = " << rt.hprime_edges << (rt.clique ? ", clique " + set_string(*rt.clique) : std::string{}) << "\n";
                }
                if (result.embedding)
                    out << "found: " << map_string(result.embedding->map) << "\n";
                else
                    out << "not found within " << rounds << " rounds\n";
            }
        }
        else if (tightness->parsed()) {
            auto rep = tightness_check(r, k, m);
            if (fmt.json) {
                json j = { { "schema", schema("tightness") }, { "r", rep.r }, { "k", rep.k }, { "m", rep.m },
                    { "construction_lower", rational_json(rep.construction_lower) }, { "theorem_upper", rational_json(rep.theorem_upper) },
                    { "trivial_upper", rational_json(rep.trivial_upper) }, { "deficit", rational_json(rep.deficit) },
                    { "theorem_term", rational_json(rep.theorem_term) }, { "gap_ratio", rational_json(rep.gap_ratio) },
                    { "consistent", rep.consistent } };
                out << j.dump() << "\n";
            }
            else {
                print_rational_row(out, "construction_lower", rep.construction_lower);
                print_rational_row(out, "theorem_upper", rep.theorem_upper);
                print_rational_row(out, "trivial_upper", rep.trivial_upper);
                print_rational_row(out, "deficit", rep.deficit);
                print_rational_row(out, "theorem_term", rep.theorem_term);
                print_rational_row(out, "gap_ratio", rep.gap_ratio);
                print_row(out, "consistent", rep.consistent ? "true" : "false");
            }
        }
    }
    catch (const Error & e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    }
    return exit_ok;
}

}
