#include "isolab/graph_io.hpp"
#include "isolab/errors.hpp"

#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <vector>

namespace isolab {

namespace {

bool is_blank(const std::string & line)
{
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Reads exactly `count` integers from a line and rejects trailing garbage.
std::vector<long long> integers(const std::string & text, std::size_t count, std::size_t line_no)
{
    std::istringstream in(text);
    std::vector<long long> values(count);
    for (auto & v : values)
        if (! (in >> v))
            throw ParseError("expected " + std::to_string(count) + " integers in \"" + text + "\"", line_no);
    std::string rest;
    if (in >> rest)
        throw ParseError("unexpected token \"" + rest + "\"", line_no);
    return values;
}

void check_range(long long u, long long v, long long n, std::size_t line_no)
{
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError("line " + std::to_string(line_no) + ": vertex index out of range for order " + std::to_string(n));
}

} // namespace

Graph read_edge_list(std::istream & in)
{
    std::string line;
    std::size_t line_no = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line))
            continue;
        if (n < 0) {
            auto header = integers(line, 2, line_no);
            n = header[0];
            m = header[1];
            if (n < 0 || m < 0)
                throw ParseError("negative count in header", line_no);
            continue;
        }
        auto uv = integers(line, 2, line_no);
        check_range(uv[0], uv[1], n, line_no);
        if (uv[0] == uv[1])
            throw GraphError("line " + std::to_string(line_no) + ": self-loop");
        edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
    }
    if (n < 0)
        throw ParseError("missing \"n m\" header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("header announces " + std::to_string(m) + " edges but " + std::to_string(edges.size()) + " were listed");
    return Graph(static_cast<int>(n), edges);
}

Graph read_dimacs(std::istream & in)
{
    std::string line;
    std::size_t line_no = 0;
    long long n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line))
            continue;
        std::istringstream tokens(line);
        std::string tag;
        tokens >> tag;
        if (tag == "c")
            continue;
        std::string rest;
        std::getline(tokens, rest);
        if (tag == "p") {
            if (n >= 0)
                throw ParseError("duplicate problem line", line_no);
            std::istringstream header(rest);
            std::string kind;
            header >> kind;
            if (kind != "edge" && kind != "col")
                throw ParseError("unsupported problem kind \"" + kind + "\"", line_no);
            std::string numbers;
            std::getline(header, numbers);
            auto nm = integers(numbers, 2, line_no);
            n = nm[0];
            if (n < 0)
                throw ParseError("negative vertex count", line_no);
        }
        else if (tag == "e") {
            if (n < 0)
                throw ParseError("edge before problem line", line_no);
            auto uv = integers(rest, 2, line_no);
            check_range(uv[0] - 1, uv[1] - 1, n, line_no);
            if (uv[0] == uv[1])
                throw GraphError("line " + std::to_string(line_no) + ": self-loop");
            edges.emplace_back(static_cast<Vertex>(uv[0] - 1), static_cast<Vertex>(uv[1] - 1));
        }
        else
            throw ParseError("unknown line type \"" + tag + "\"", line_no);
    }
    if (n < 0)
        throw ParseError("missing \"p edge n m\" line");
    return Graph(static_cast<int>(n), edges);
}

Graph read_graph(std::istream & in, GraphFormat format)
{
    if (format == GraphFormat::EdgeList)
        return read_edge_list(in);
    if (format == GraphFormat::Dimacs)
        return read_dimacs(in);

    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::istringstream first_pass(text);
    std::string token;
    first_pass >> token;
    std::istringstream second_pass(text);
    if (token == "c" || token == "p")
        return read_dimacs(second_pass);
    return read_edge_list(second_pass);
}

Graph read_graph_file(const std::string & path, GraphFormat format)
{
    std::ifstream in(path);
    if (! in)
        throw IoError("cannot open graph file \"" + path + "\"");
    return read_graph(in, format);
}

void write_edge_list(std::ostream & out, const Graph & g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

void write_dimacs(std::ostream & out, const Graph & g)
{
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_graph_file(const std::string & path, const Graph & g, GraphFormat format)
{
    std::ofstream out(path);
    if (! out)
        throw IoError("cannot write graph file \"" + path + "\"");
    if (format == GraphFormat::Dimacs)
        write_dimacs(out, g);
    else
        write_edge_list(out, g);
    if (! out)
        throw IoError("write failed for \"" + path + "\"");
}

} // namespace isolab
