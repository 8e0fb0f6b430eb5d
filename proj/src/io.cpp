#include "mextremal/io.hpp"
#include "mextremal/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace mextremal {

namespace
{
    auto syntax(int line, const std::string & what) -> Error
    {
        return Error{ ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + what };
    }

    auto to_int(std::string_view token, int line) -> int
    {
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw syntax(line, "expected an integer, got '" + std::string{ token } + "'");
        return value;
    }

    auto tokenize(std::string_view line) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
                ++i;
            if (i > start)
                tokens.push_back(line.substr(start, i - start));
        }
        return tokens;
    }

    auto build(int n, int r, const std::vector<ColoredEdge> & edges, const std::vector<int> & lines) -> ColoredMultigraph
    {
        ColoredMultigraph g{ n, r };
        for (std::size_t i = 0 ; i < edges.size() ; ++i) {
            try {
                g.add_edge(edges[i].u, edges[i].v, edges[i].color);
            }
            catch (const Error & e) {
                throw Error{ e.kind(), "line " + std::to_string(lines[i]) + ": " + e.detail() };
            }
        }
        return g;
    }
}

auto parse_text(std::string_view text) -> ColoredMultigraph
{
    int n = -1, r = -1, line_no = 0;
    std::vector<ColoredEdge> edges;
    std::vector<int> edge_lines;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#') ; hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tokens = tokenize(line);
        if (tokens.empty())
            continue;

        if (tokens[0] == "n") {
            if (n != -1)
                throw syntax(line_no, "repeated 'n' line");
            if (tokens.size() != 2)
                throw syntax(line_no, "expected 'n <N>'");
            n = to_int(tokens[1], line_no);
            if (n < 0)
                throw syntax(line_no, "negative vertex count");
        }
        else if (tokens[0] == "r") {
            if (n == -1)
                throw syntax(line_no, "'r' line before 'n' line");
            if (r != -1)
                throw syntax(line_no, "repeated 'r' line");
            if (tokens.size() != 2)
                throw syntax(line_no, "expected 'r <R>'");
            r = to_int(tokens[1], line_no);
            if (r < 1 || r > max_colors)
                throw Error{ ErrorKind::ColorOutOfRange, "line " + std::to_string(line_no) + ": color count " + std::to_string(r) };
        }
        else if (tokens[0] == "e") {
            if (n == -1 || r == -1)
                throw syntax(line_no, "edge line before 'n' and 'r' lines");
            if (tokens.size() != 4)
                throw syntax(line_no, "expected 'e <u> <v> <c>'");
            ColoredEdge e{ to_int(tokens[1], line_no), to_int(tokens[2], line_no), to_int(tokens[3], line_no) };
            if (e.u > e.v && e.u < n)
                throw syntax(line_no, "pair must be written with u < v");
            edges.push_back(e);
            edge_lines.push_back(line_no);
        }
        else
            throw syntax(line_no, "unknown directive '" + std::string{ tokens[0] } + "'");
    }

    if (n == -1)
        throw syntax(line_no, "missing 'n' line");
    if (r == -1)
        throw syntax(line_no, "missing 'r' line");
    return build(n, r, edges, edge_lines);
}

auto serialize_text(const ColoredMultigraph & g) -> std::string
{
    std::ostringstream out;
    out << "n " << g.n() << "\n" << "r " << g.r() << "\n";
    for (const auto & e : g.edges())
        out << "e " << e.u << " " << e.v << " " << e.color << "\n";
    return out.str();
}

auto graph_from_json(const nlohmann::json & j) -> ColoredMultigraph
{
    auto bad = [] (const std::string & what) { return Error{ ErrorKind::SyntaxError, "json: " + what }; };

    if (! j.is_object())
        throw bad("expected an object");
    for (const char * key : { "n", "r", "edges" })
        if (! j.contains(key))
            throw bad(std::string{ "missing key '" } + key + "'");
    if (! j["n"].is_number_integer() || ! j["r"].is_number_integer())
        throw bad("'n' and 'r' must be integers");
    if (! j["edges"].is_array())
        throw bad("'edges' must be an array");

    int n = j["n"].get<int>(), r = j["r"].get<int>();
    if (n < 0)
        throw bad("negative vertex count");

    std::vector<ColoredEdge> edges;
    for (const auto & item : j["edges"]) {
        if (! item.is_array() || item.size() != 3 || ! item[0].is_number_integer() || ! item[1].is_number_integer() || ! item[2].is_number_integer())
            throw bad("edge entries must be [u, v, c] integer triples");
        ColoredEdge e{ item[0].get<int>(), item[1].get<int>(), item[2].get<int>() };
        if (e.u > e.v && e.u < n)
            throw bad("pair must be written with u < v");
        edges.push_back(e);
    }
    return ColoredMultigraph::from_edges(n, r, edges);
}

auto parse_json(std::string_view text) -> ColoredMultigraph
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error & e) {
        throw Error{ ErrorKind::SyntaxError, std::string{ "json: " } + e.what() };
    }
    return graph_from_json(j);
}

auto graph_to_json(const ColoredMultigraph & g) -> nlohmann::json
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto & e : g.edges())
        edges.push_back({ e.u, e.v, e.color });
    return { { "n", g.n() }, { "r", g.r() }, { "edges", edges } };
}

auto serialize_json(const ColoredMultigraph & g) -> std::string
{
    return graph_to_json(g).dump();
}

auto read_graph_file(const std::filesystem::path & path) -> ColoredMultigraph
{
    std::ifstream in{ path, std::ios::binary };
    if (! in)
        fail(ErrorKind::IoError, "cannot open '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        if (path.extension() == ".json")
            return parse_json(buffer.str());
        return parse_text(buffer.str());
    }
    catch (const Error & e) {
        throw Error{ e.kind(), path.string() + ": " + e.detail() };
    }
}

void write_graph_file(const std::filesystem::path & path, const ColoredMultigraph & g)
{
    std::ofstream out{ path, std::ios::binary };
    if (! out)
        fail(ErrorKind::IoError, "cannot write '" + path.string() + "'");
    out << (path.extension() == ".json" ? serialize_json(g) + "\n" : serialize_text(g));
}

}
