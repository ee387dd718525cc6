#include "isolab/cli.hpp"
#include "isolab/constructions.hpp"
#include "isolab/corpus.hpp"
#include "isolab/errors.hpp"
#include "isolab/families.hpp"
#include "isolab/random_regular.hpp"
#include "isolab/solvers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <climits>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace isolab::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> params{"gamma", "iota", "nabla", "hitting", "packing"};

GraphFormat parse_format(const std::string & text)
{
    if (text == "auto")
        return GraphFormat::Auto;
    if (text == "edge-list")
        return GraphFormat::EdgeList;
    if (text == "dimacs")
        return GraphFormat::Dimacs;
    throw UsageError("unknown graph format \"" + text + "\"");
}

} // namespace

Command parse_args(const std::vector<std::string> & args)
{
    CLI::App app{"Exact isolation, domination and decycling numbers", "isolation-lab"};
    app.require_subcommand(1, 1);

    std::map<std::string, std::string> values;
    std::vector<std::string> positional;

    auto * solve = app.add_subcommand("solve", "compute one exact parameter of a graph");
    solve->add_option("--graph", values["graph"], "graph file")->required();
    solve->add_option("--param", values["param"], "gamma | iota | nabla | hitting | packing")
        ->required()
        ->check(CLI::IsMember(params));
    solve->add_option("--family", values["family"], "family, e.g. K3, P4, C5, S3, cycles, 2*K3, file:pattern.el");
    solve->add_option("--engine", values["engine"], "pruned | exhaustive")->check(CLI::IsMember({"pruned", "exhaustive"}));
    solve->add_option("--format", values["format"], "auto | edge-list | dimacs")
        ->check(CLI::IsMember({"auto", "edge-list", "dimacs"}));

    auto * construct = app.add_subcommand("construct", "build a graph and write it as an edge list");
    construct->add_option("expression", positional, "attach(G, F@root) | cart(G, F) | subdiv(G, h) | extremalG(k,q,t) | extremalH(k,q,t)")
        ->required()
        ->expected(1);
    construct->add_option("--out", values["out"], "output path (default: stdout)");
    construct->add_option("--format", values["format"], "edge-list | dimacs")->check(CLI::IsMember({"edge-list", "dimacs"}));

    auto * sample = app.add_subcommand("sample", "sample a random regular graph");
    sample->add_option("--n", values["n"], "order")->required();
    sample->add_option("--d", values["d"], "degree")->required();
    sample->add_option("--seed", values["seed"], "seed")->required();
    sample->add_option("--out", values["out"], "output path (default: stdout)");

    auto * verify = app.add_subcommand("verify", "run verification checks over a corpus");
    verify->add_option("--suite", values["suite"], "comma separated check ids, or all")->required();
    verify->add_option("--corpus", values["corpus"], "corpus description (default all-connected-n<=5)");
    verify->add_option("--out", values["out"], "report path (default: stdout)");
    verify->add_option("--threads", values["threads"], "worker threads (default: all cores)");

    auto * info = app.add_subcommand("info", "degree profile, bipartiteness and cycle lengths");
    info->add_option("--graph", values["graph"], "graph file")->required();
    info->add_option("--format", values["format"], "auto | edge-list | dimacs")
        ->check(CLI::IsMember({"auto", "edge-list", "dimacs"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        const auto & chosen = app.get_subcommands();
        throw HelpRequested(chosen.empty() ? app.help() : chosen.front()->help());
    }
    catch (const CLI::CallForAllHelp &) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    }
    catch (const CLI::ParseError & e) {
        throw UsageError(e.what());
    }

    Command command;
    command.verb = app.get_subcommands().front()->get_name();
    command.positional = positional;
    for (auto & [key, value] : values)
        if (! value.empty())
            command.options[key] = value;

    auto numeric = [&](const char * key) {
        if (auto it = command.options.find(key); it != command.options.end()) {
            const auto & text = it->second;
            if (text.empty() || ! std::ranges::all_of(text, [](unsigned char c) { return std::isdigit(c); }))
                throw UsageError(std::string("--") + key + " expects a non-negative integer, got \"" + text + "\"");
        }
    };
    for (auto key : {"n", "d", "seed", "threads"})
        numeric(key);

    if (command.verb == "solve") {
        const auto & param = command.options["param"];
        bool wants_family = param == "iota" || param == "hitting" || param == "packing";
        bool has_family = command.options.contains("family");
        if (wants_family && ! has_family)
            throw UsageError("--param " + param + " needs --family");
        if (! wants_family && has_family)
            throw UsageError("--param " + param + " does not take --family");
        if (has_family && ! command.options["family"].starts_with("file:")) {
            try {
                parse_family(command.options["family"]);
            }
            catch (const ParseError & e) {
                throw UsageError(e.what());
            }
        }
    }
    return command;
}

Graph read_graph(const std::string & path, GraphFormat format)
{
    return read_graph_file(path, format);
}

namespace {

// Recursive descent over name(arg, ...) with atoms as leaves.
class ExpressionParser {
public:
    explicit ExpressionParser(std::string text) : text_(std::move(text)) {}

    Graph parse_graph()
    {
        auto result = graph_term();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected trailing text");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string & message) const
    {
        throw ParseError(message + " at offset " + std::to_string(pos_) + " in \"" + text_ + "\"");
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string token()
    {
        skip_space();
        auto start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != '@'
            && ! std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an operand");
        return text_.substr(start, pos_ - start);
    }

    void expect(char c)
    {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool peek(char c)
    {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    int integer()
    {
        auto t = token();
        if (! std::ranges::all_of(t, [](unsigned char c) { return std::isdigit(c); }))
            fail("expected an integer, got \"" + t + "\"");
        return std::stoi(t);
    }

    static Graph atom(const std::string & name)
    {
        if (name == "petersen" || (name.size() >= 2 && std::string("KPCS").find(name[0]) != std::string::npos
                                      && std::ranges::all_of(name.substr(1), [](unsigned char c) { return std::isdigit(c); })))
            return named_graph(name);
        return read_graph_file(name);
    }

    Graph graph_term()
    {
        auto name = token();
        if (! peek('('))
            return atom(name);
        expect('(');
        Graph result;
        if (name == "attach") {
            auto g = graph_term();
            expect(',');
            auto f = graph_term();
            int root = 0;
            if (peek('@')) {
                expect('@');
                root = integer();
            }
            result = attach_rooted_copies(g, {f, root});
        }
        else if (name == "cart") {
            auto g = graph_term();
            expect(',');
            auto f = graph_term();
            result = cartesian_product(g, f);
        }
        else if (name == "subdiv") {
            auto g = graph_term();
            expect(',');
            result = subdivide(g, integer());
        }
        else if (name == "extremalG" || name == "extremalH") {
            int k = integer();
            expect(',');
            int q = integer();
            expect(',');
            int t = integer();
            result = name == "extremalG" ? extremal_path_of_cliques(k, q, t) : extremal_H(k, q, t);
        }
        else
            fail("unknown construction \"" + name + "\"");
        expect(')');
        return result;
    }

    std::string text_;
    std::size_t pos_ = 0;
};

json number(double value)
{
    if (std::isfinite(value) && value == std::floor(value) && std::fabs(value) < 9.0e15)
        return static_cast<long long>(value);
    return value;
}

std::ostream & open_output(const std::string & path, std::ofstream & file, std::ostream & fallback)
{
    if (path.empty() || path == "-")
        return fallback;
    file.open(path);
    if (! file)
        throw IoError("cannot write \"" + path + "\"");
    return file;
}

int run_solve(const Command & command, std::ostream & out)
{
    const auto & options = command.options;
    auto format = options.contains("format") ? parse_format(options.at("format")) : GraphFormat::Auto;
    auto g = read_graph(options.at("graph"), format);
    const auto & param = options.at("param");

    SolverOptions solver;
    if (options.contains("engine") && options.at("engine") == "exhaustive")
        solver.engine = Engine::Exhaustive;

    json result;
    result["param"] = param;
    if (param == "packing") {
        auto spec = parse_family(options.at("family"));
        if (spec.is_scaled())
            throw UsageError("packing takes an unscaled family");
        SearchBudget budget(solver.node_budget);
        std::vector<std::vector<Vertex>> copies;
        int value = packing_in(g, VertexMask(static_cast<std::size_t>(g.order()), 1), spec, INT_MAX, budget, &copies);
        result["value"] = value;
        result["witness"] = copies;
        result["nodes"] = budget.used();
        result["engine"] = "pruned";
        result["family"] = spec.to_string();
    }
    else {
        SolverOutcome outcome;
        if (param == "gamma")
            outcome = domination_number(g, solver);
        else if (param == "nabla")
            outcome = decycling_number(g, solver);
        else {
            auto spec = parse_family(options.at("family"));
            result["family"] = spec.to_string();
            outcome = param == "iota" ? isolation_number(g, spec, solver) : hitting_number(g, spec, solver);
        }
        result["value"] = outcome.value;
        result["witness"] = outcome.witness.members();
        result["nodes"] = outcome.nodes_explored;
        result["engine"] = to_string(outcome.engine);
    }
    out << result.dump() << '\n';
    return exit_ok;
}

int run_construct(const Command & command, std::ostream & out)
{
    auto g = evaluate_construction(command.positional.at(0));
    std::ofstream file;
    auto & target = open_output(command.options.contains("out") ? command.options.at("out") : "", file, out);
    if (command.options.contains("format") && command.options.at("format") == "dimacs")
        write_dimacs(target, g);
    else
        write_edge_list(target, g);
    if (! target)
        throw IoError("write failed");
    return exit_ok;
}

int run_sample(const Command & command, std::ostream & out)
{
    const auto & options = command.options;
    auto g = sample_regular(std::stoi(options.at("n")), std::stoi(options.at("d")), std::stoull(options.at("seed")));
    std::ofstream file;
    auto & target = open_output(options.contains("out") ? options.at("out") : "", file, out);
    write_edge_list(target, g);
    if (! target)
        throw IoError("write failed");
    return exit_ok;
}

int run_verify(const Command & command, std::ostream & out)
{
    const auto & options = command.options;
    std::vector<std::string> checks;
    std::stringstream suite(options.at("suite"));
    for (std::string item; std::getline(suite, item, ',');)
        if (! item.empty())
            checks.push_back(item);
    auto corpus = options.contains("corpus") ? options.at("corpus") : "all-connected-n<=5";
    unsigned threads = options.contains("threads") ? static_cast<unsigned>(std::stoul(options.at("threads"))) : 0;
    auto reports = run_suite(corpus, checks, threads);
    return emit_report(reports, options.contains("out") ? options.at("out") : "-", out);
}

int run_info(const Command & command, std::ostream & out)
{
    const auto & options = command.options;
    auto format = options.contains("format") ? parse_format(options.at("format")) : GraphFormat::Auto;
    auto g = read_graph(options.at("graph"), format);
    json result;
    result["order"] = g.order();
    result["size"] = g.size();
    result["components"] = components(g).size();
    result["bipartite"] = is_bipartite(g);
    result["forest"] = is_forest(g);
    if (! g.is_null()) {
        auto profile = degree_profile(g);
        result["min_degree"] = profile.min_degree;
        result["max_degree"] = profile.max_degree;
        result["regular"] = profile.is_regular;
    }
    auto lengths = all_cycle_lengths(g);
    result["cycle_lengths"] = std::vector<int>(lengths.begin(), lengths.end());
    out << result.dump() << '\n';
    return exit_ok;
}

} // namespace

Graph evaluate_construction(const std::string & expression)
{
    return ExpressionParser(expression).parse_graph();
}

std::string report_json(const std::vector<CheckReport> & reports)
{
    json array = json::array();
    for (const auto & r : reports) {
        json computed = json::object();
        for (const auto & [key, value] : r.computed)
            computed[key] = number(value);
        array.push_back({{"check_id", r.check_id}, {"instance", r.instance}, {"computed", computed},
            {"verdict", to_string(r.verdict)}, {"detail", r.detail}});
    }
    return array.dump(2);
}

int emit_report(const std::vector<CheckReport> & reports, const std::string & path, std::ostream & out)
{
    std::ofstream file;
    auto & target = open_output(path, file, out);
    target << report_json(reports) << '\n';
    if (! target)
        throw IoError("failed to write report to \"" + path + "\"");
    return suite_passed(reports) ? exit_ok : exit_check_failed;
}

int run_command(const Command & command, std::ostream & out, std::ostream &)
{
    if (command.verb == "solve")
        return run_solve(command, out);
    if (command.verb == "construct")
        return run_construct(command, out);
    if (command.verb == "sample")
        return run_sample(command, out);
    if (command.verb == "verify")
        return run_verify(command, out);
    if (command.verb == "info")
        return run_info(command, out);
    throw UsageError("unknown verb \"" + command.verb + "\"");
}

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    try {
        return run_command(parse_args(args), out, err);
    }
    catch (const HelpRequested & e) {
        out << e.what();
        return exit_ok;
    }
    catch (const UsageError & e) {
        err << e.what() << '\n';
        return exit_usage;
    }
    catch (const ParseError & e) {
        err << "parse error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const GraphError & e) {
        err << "graph error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const ParameterError & e) {
        err << "parameter error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const UnsupportedError & e) {
        err << "unsupported: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const ResourceError & e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_resource;
    }
    catch (const IoError & e) {
        err << "i/o error: " << e.what() << '\n';
        return exit_io;
    }
}

} // namespace isolab::cli
