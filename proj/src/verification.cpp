#include "isolab/verification.hpp"
#include "isolab/corpus.hpp"
#include "isolab/errors.hpp"
#include "isolab/random_regular.hpp"
#include "isolab/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

namespace isolab {

std::string to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::Vacuous: return "Vacuous";
    case Verdict::Unsupported: return "Unsupported";
    }
    return "?";
}

AlphaValue alpha(int d)
{
    if (d < 1)
        throw ParameterError("alpha_d needs d >= 1");
    double d1 = static_cast<double>(d) + 1.0;
    return {d, (1.0 + std::log(d1)) / d1};
}

bool within_alpha_bound(int gamma, int d, int n)
{
    double d1 = static_cast<double>(d) + 1.0;
    return static_cast<double>(gamma) * d1 <= (1.0 + std::log(d1)) * static_cast<double>(n) + 1e-9;
}

namespace {

int gamma_of(const Graph & g)
{
    return domination_number(g).value;
}

int iota_of(const Graph & g, const FamilySpec & spec)
{
    return isolation_number(g, spec).value;
}

std::string relation(const std::string & text, long long lhs, long long rhs)
{
    return text + " [" + std::to_string(lhs) + " vs " + std::to_string(rhs) + "]";
}

// Collects the relations of one report; any failure makes the verdict Fail
// and is listed in the detail with both sides.
class Relations {
public:
    void require(bool holds, const std::string & text)
    {
        if (! holds)
            failures_.push_back(text);
        else
            held_.push_back(text);
    }

    void note(const std::string & text) { notes_.push_back(text); }

    void finish(CheckReport & report, Verdict otherwise = Verdict::Pass) const
    {
        std::ostringstream detail;
        if (! failures_.empty()) {
            report.verdict = Verdict::Fail;
            detail << "violated: ";
            join(detail, failures_);
        }
        else {
            report.verdict = otherwise;
            detail << "holds: ";
            join(detail, held_);
        }
        if (! notes_.empty()) {
            detail << "; ";
            join(detail, notes_);
        }
        report.detail = detail.str();
    }

private:
    static void join(std::ostringstream & out, const std::vector<std::string> & items)
    {
        for (std::size_t i = 0; i < items.size(); ++i)
            out << (i ? "; " : "") << items[i];
    }

    std::vector<std::string> failures_, held_, notes_;
};

bool is_complete(const Graph & g)
{
    auto n = static_cast<std::size_t>(g.order());
    return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_cycle_graph(const Graph & g, int length)
{
    if (g.order() != length || ! is_connected(g))
        return false;
    auto profile = degree_profile(g);
    return profile.is_regular && profile.min_degree == 2;
}

} // namespace

CheckReport check_lemma_reduction(const Graph & g, const RootedPattern & rp)
{
    CheckReport report{"lemma_reduction", "G=" + describe(g) + " F=" + describe(rp.pattern) + " root=" + std::to_string(rp.root), {},
        Verdict::Pass, ""};
    if (rp.pattern.is_null() || ! is_connected(rp.pattern)) {
        report.verdict = Verdict::Unsupported;
        report.detail = "the pattern must be connected";
        return report;
    }
    auto construction = attach_rooted_copies(g, rp);
    int iota = iota_of(construction, FamilySpec::single(rp.pattern));
    int gamma = gamma_of(g);
    report.computed = {{"iota_C(G,F)_F", iota}, {"gamma_G", gamma}, {"order_C(G,F)", construction.order()}};
    Relations r;
    r.require(iota == gamma, relation("iota(C(G,F),F) == gamma(G)", iota, gamma));
    r.finish(report);
    return report;
}

CheckReport check_cartesian(const Graph & g, const Graph & f)
{
    CheckReport report{"cartesian", "G=" + describe(g) + " F=" + describe(f), {}, Verdict::Pass, ""};
    auto product = cartesian_product(g, f);
    auto pg = degree_profile(g), pf = degree_profile(f), pp = degree_profile(product);
    int iota = iota_of(product, FamilySpec::single(f));
    int gamma_g = gamma_of(g);
    int gamma_f = gamma_of(f);

    report.computed = {{"delta_GxF", pp.min_degree}, {"delta_G", pg.min_degree}, {"delta_F", pf.min_degree},
        {"iota_GxF_F", iota}, {"gamma_G", gamma_g}, {"gamma_F", gamma_f}, {"regular_GxF", pp.is_regular ? 1 : 0}};

    Relations r;
    r.require(pp.min_degree == pg.min_degree + pf.min_degree,
        relation("delta(G□F) == delta(G) + delta(F)", pp.min_degree, pg.min_degree + pf.min_degree));
    r.require(iota >= gamma_g, relation("iota(G□F,F) >= gamma(G)", iota, gamma_g));
    if (pg.is_regular && pf.is_regular)
        r.require(pp.is_regular, "G□F regular when G and F are regular");
    if (gamma_f != pf.min_degree)
        r.note("delta(G)+gamma(F) = " + std::to_string(pg.min_degree + gamma_f) + " differs from delta(G□F) = "
            + std::to_string(pp.min_degree) + " (gamma(F) != delta(F))");
    r.finish(report);
    return report;
}

CheckReport check_tF_sandwich(const Graph & g, const FamilySpec & spec, int t)
{
    if (t < 1)
        throw ParameterError("t must be at least 1");
    if (spec.is_scaled())
        throw ParameterError("the sandwich check takes an unscaled family");
    auto scaled = FamilySpec::scaled(t, spec);
    CheckReport report{"tF_sandwich", "G=" + describe(g) + " F=" + spec.to_string() + " t=" + std::to_string(t), {},
        Verdict::Pass, ""};

    int iota_f = iota_of(g, spec);
    int iota_tf = iota_of(g, scaled);
    report.computed = {{"iota_F", iota_f}, {"iota_tF", iota_tf}, {"t", t}};

    Relations r;
    r.require(iota_tf <= iota_f, relation("iota(G,tF) <= iota(G,F)", iota_tf, iota_f));
    if (spec.is_all_cycles()) {
        r.note("left inequality unsupported: gamma of the cycle family is unbounded");
        r.finish(report, Verdict::Unsupported);
        return report;
    }
    int gamma_family = family_domination(spec);
    long long lower = iota_f - static_cast<long long>(t - 1) * gamma_family;
    report.computed["gamma_family"] = gamma_family;
    report.computed["lower_bound"] = static_cast<double>(lower);
    r.require(lower <= iota_tf, relation("iota(G,F) - (t-1) gamma(F) <= iota(G,tF)", lower, iota_tf));
    if (iota_f == 0)
        r.note("vacuous: G contains no F-graph");
    else if (lower == iota_tf)
        r.note("left inequality tight");
    r.finish(report);
    return report;
}

CheckReport check_extremal(int k, int q, int t)
{
    auto g = extremal_path_of_cliques(k, q, t);
    auto h = extremal_H(k, q, t);
    auto base = FamilySpec::generator(GeneratorKind::Clique, k);
    auto scaled = FamilySpec::scaled(t, base);
    CheckReport report{"extremal", "k=" + std::to_string(k) + " q=" + std::to_string(q) + " t=" + std::to_string(t), {},
        Verdict::Pass, ""};

    int g_tf = iota_of(g, scaled), g_f = iota_of(g, base), g_gamma = gamma_of(g);
    int h_tf = iota_of(h, scaled), h_f = iota_of(h, base), h_gamma = gamma_of(h);
    report.computed = {{"order_G", g.order()}, {"order_H", h.order()}, {"iota_G_tK", g_tf}, {"iota_G_K", g_f},
        {"gamma_G", g_gamma}, {"iota_H_tK", h_tf}, {"iota_H_K", h_f}, {"gamma_H", h_gamma}, {"q", q}};

    Relations r;
    r.require(g_tf == q, relation("iota(G,tK_k) == q", g_tf, q));
    r.require(g_f == q, relation("iota(G,K_k) == q", g_f, q));
    r.require(g_gamma == q, relation("gamma(G) == q", g_gamma, q));
    r.require(h_tf == q, relation("iota(H,tK_k) == q", h_tf, q));
    r.require(h_f == q + t - 1, relation("iota(H,K_k) == q+t-1", h_f, q + t - 1));
    r.require(h_gamma == q + t - 1, relation("gamma(H) == q+t-1", h_gamma, q + t - 1));
    r.require(h_tf == h_f - (t - 1), relation("iota(H,tK_k) == iota(H,K_k) - (t-1) gamma(K_k)", h_tf, h_f - (t - 1)));
    r.finish(report);
    return report;
}

CheckReport check_tFEP(const Graph & g, int t)
{
    if (t < 1)
        throw ParameterError("t must be at least 1");
    auto cycles = FamilySpec::all_cycles();
    auto scaled = FamilySpec::scaled(t, cycles);
    CheckReport report{"tFEP", "G=" + describe(g) + " t=" + std::to_string(t), {}, Verdict::Pass, ""};

    auto best_tc = isolation_number(g, scaled);
    auto residual = remove_closed_neighborhood(g, best_tc.witness).graph;
    int tau = decycling_number(residual).value;
    int residual_packing = packing_number(residual, cycles);
    int iota_c = iota_of(g, cycles);
    report.computed = {{"iota_C", iota_c}, {"iota_tC", best_tc.value}, {"tau_residual", tau},
        {"residual_cycle_packing", residual_packing}, {"t", t}};

    Relations r;
    r.require(iota_c <= best_tc.value + tau, relation("iota(G,C) <= iota(G,tC) + tau", iota_c, best_tc.value + tau));
    r.require(best_tc.value <= iota_c, relation("iota(G,tC) <= iota(G,C)", best_tc.value, iota_c));
    r.require(residual_packing < t, relation("disjoint cycles in G - N[D] < t", residual_packing, t));
    r.finish(report);
    return report;
}

CheckReport check_decycling(const Graph & g, int h)
{
    if (h < 2)
        throw ParameterError("the decycling identity needs h >= 2");
    auto sub = subdivide(g, h);
    CheckReport report{"decycling", "G=" + describe(g) + " h=" + std::to_string(h), {}, Verdict::Pass, ""};
    int nabla_g = decycling_number(g).value;
    int nabla_s = decycling_number(sub).value;
    int iota_s = iota_of(sub, FamilySpec::all_cycles());
    report.computed = {{"nabla_G", nabla_g}, {"nabla_Sh", nabla_s}, {"iota_Sh_C", iota_s}, {"order_Sh", sub.order()}};

    Relations r;
    r.require(nabla_g == nabla_s, relation("nabla(G) == nabla(S_h(G))", nabla_g, nabla_s));
    r.require(nabla_s == iota_s, relation("nabla(S_h(G)) == iota(S_h(G),C)", nabla_s, iota_s));
    r.finish(report);
    return report;
}

CheckReport check_mod2r(const Graph & g, int r)
{
    if (r < 1)
        throw ParameterError("r must be at least 1");
    auto sub = subdivide(g, 2 * r + 1);
    CheckReport report{"mod2r", "G=" + describe(g) + " r=" + std::to_string(r), {}, Verdict::Pass, ""};
    bool bipartite = is_bipartite(sub);
    auto lengths = all_cycle_lengths(sub);
    int modulus = 2 * r;
    std::vector<int> bad;
    for (auto l : lengths)
        if (l % modulus != 0)
            bad.push_back(l);
    report.computed = {{"bipartite", bipartite ? 1 : 0}, {"distinct_cycle_lengths", static_cast<double>(lengths.size())},
        {"modulus", modulus}, {"lengths_not_divisible", static_cast<double>(bad.size())}};
    if (! lengths.empty()) {
        report.computed["min_cycle_length"] = *lengths.begin();
        report.computed["max_cycle_length"] = *lengths.rbegin();
    }

    Relations rel;
    rel.require(bipartite, "S_{2r+1}(G) bipartite");
    for (auto l : bad)
        rel.require(false, relation("cycle length mod 2r == 0 (FLAGGED for review)", l % modulus, 0) + " length "
                + std::to_string(l));
    if (lengths.empty())
        rel.note("no cycles");
    rel.finish(report);
    return report;
}

CheckReport check_classical_bounds(const Graph & g, int k)
{
    if (k < 1)
        throw ParameterError("k must be at least 1");
    CheckReport report{"classical_bounds", "G=" + describe(g) + " k=" + std::to_string(k), {}, Verdict::Pass, ""};
    if (g.is_null() || ! is_connected(g)) {
        report.verdict = Verdict::Unsupported;
        report.detail = "the bounds are stated for connected graphs";
        return report;
    }
    int n = g.order();
    int gamma = gamma_of(g);
    int iota_k = iota_of(g, FamilySpec::generator(GeneratorKind::Clique, k));
    int iota_c = iota_of(g, FamilySpec::all_cycles());
    report.computed = {{"n", n}, {"k", k}, {"gamma", gamma}, {"iota_Kk", iota_k}, {"iota_C", iota_c}};

    Relations r;
    if (n >= 2)
        r.require(2 * gamma <= n, relation("gamma <= n/2 (as 2 gamma <= n)", 2 * gamma, n));

    bool clique_exception = n == k && is_complete(g);
    bool c5_exception = k == 2 && is_cycle_graph(g, 5);
    if (clique_exception || c5_exception) {
        r.note(std::string("exception branch for iota(G,K_k) <= n/(k+1): G is ") + (clique_exception ? "K_k" : "C_5")
            + (iota_k * (k + 1) > n ? " and exceeds the bound" : " and meets the bound anyway"));
    }
    else
        r.require(iota_k * (k + 1) <= n, relation("iota(G,K_k) <= n/(k+1) (as iota (k+1) <= n)", iota_k * (k + 1), n));

    if (n == 3 && is_complete(g))
        r.note(std::string("exception branch for iota(G,C) <= n/4: G is C_3") + (4 * iota_c > n ? " and exceeds the bound" : ""));
    else
        r.require(4 * iota_c <= n, relation("iota(G,C) <= n/4 (as 4 iota <= n)", 4 * iota_c, n));
    r.finish(report);
    return report;
}

CheckReport check_degree_domination(const Graph & g, int d)
{
    auto a = alpha(d);
    CheckReport report{"degree_domination", "G=" + describe(g) + " d=" + std::to_string(d), {}, Verdict::Pass, ""};
    if (g.is_null() || degree_profile(g).min_degree < d) {
        report.verdict = Verdict::Unsupported;
        report.detail = "minimum degree below d";
        return report;
    }
    int gamma = gamma_of(g);
    report.computed = {{"gamma", gamma}, {"alpha_d", a.alpha}, {"alpha_d_n", a.alpha * g.order()}, {"n", g.order()}};
    Relations r;
    r.require(within_alpha_bound(gamma, d, g.order()), "gamma <= alpha_d n [" + std::to_string(gamma) + " vs "
            + std::to_string(a.alpha * g.order()) + "]");
    r.finish(report);
    return report;
}

CheckReport sweep_gamma_regular(int n, int d, int samples, std::uint64_t seed)
{
    if (samples < 1)
        throw ParameterError("the sweep needs at least one sample");
    auto a = alpha(d);
    CheckReport report{"sweep_gamma_regular", "n=" + std::to_string(n) + " d=" + std::to_string(d) + " samples="
            + std::to_string(samples) + " seed=" + std::to_string(seed), {}, Verdict::Vacuous, ""};
    int max_gamma = 0, min_gamma = n, violations = 0;
    double total = 0.0;
    for (int i = 0; i < samples; ++i) {
        auto g = sample_regular(n, d, seed + static_cast<std::uint64_t>(i));
        int gamma = gamma_of(g);
        max_gamma = std::max(max_gamma, gamma);
        min_gamma = std::min(min_gamma, gamma);
        total += gamma;
        if (! within_alpha_bound(gamma, d, n))
            ++violations;
    }
    double mean = total / samples;
    report.computed = {{"max_gamma", max_gamma}, {"min_gamma", min_gamma}, {"mean_gamma", mean}, {"alpha_d", a.alpha},
        {"alpha_d_n", a.alpha * n}, {"bound_violations", violations}, {"samples", samples}};
    std::ostringstream detail;
    detail << "descriptive only; ";
    if (d >= 2) {
        double scale = static_cast<double>(n) * std::log(static_cast<double>(d)) / d;
        report.computed["ratio_max"] = max_gamma / scale;
        report.computed["ratio_mean"] = mean / scale;
        detail << "gamma d/(n ln d): max " << max_gamma / scale << ", mean " << mean / scale << "; ";
    }
    else
        detail << "ratio undefined for d = 1; ";
    detail << violations << " samples above alpha_d n";
    report.detail = detail.str();
    return report;
}

namespace {

struct CheckRequest {
    std::string name;
    std::vector<std::string> args;
};

std::vector<std::string> split_on(const std::string & text, char sep)
{
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        auto end = text.find(sep, start);
        parts.push_back(text.substr(start, end - start));
        if (end == std::string::npos)
            return parts;
        start = end + 1;
    }
}

int parse_int(const std::string & text, const std::string & check)
{
    try {
        std::size_t used = 0;
        int value = std::stoi(text, &used);
        if (used == text.size())
            return value;
    }
    catch (const std::exception &) {
    }
    throw ParseError("bad parameter \"" + text + "\" in check \"" + check + "\"");
}

const std::vector<std::string> & known_checks()
{
    static const std::vector<std::string> names{"lemma_reduction", "cartesian", "tF_sandwich", "tFEP", "decycling", "mod2r",
        "classical_bounds", "degree_domination", "extremal", "sweep"};
    return names;
}

std::vector<CheckRequest> parse_checks(const std::vector<std::string> & checks)
{
    static const std::map<std::string, std::string> aliases{{"lemma1", "lemma_reduction"}, {"cart", "cartesian"},
        {"tF", "tF_sandwich"}, {"classical", "classical_bounds"}, {"dombound", "degree_domination"},
        {"sweep_gamma_regular", "sweep"}};
    std::vector<CheckRequest> result;
    for (const auto & item : checks) {
        auto parts = split_on(item, ':');
        auto name = parts.front();
        if (auto alias = aliases.find(name); alias != aliases.end())
            name = alias->second;
        if (name == "all") {
            if (parts.size() > 1)
                throw ParseError("\"all\" takes no parameters");
            for (const auto & known : known_checks())
                result.push_back({known, {}});
            continue;
        }
        if (std::ranges::find(known_checks(), name) == known_checks().end())
            throw ParseError("unknown check \"" + parts.front() + "\"");
        result.push_back({name, {parts.begin() + 1, parts.end()}});
    }
    return result;
}

bool corpus_free(const CheckRequest & request)
{
    return request.name == "extremal" || request.name == "sweep";
}

std::vector<int> int_args_or(const CheckRequest & request, std::size_t index, std::vector<int> defaults)
{
    if (request.args.size() > index)
        return {parse_int(request.args[index], request.name)};
    return defaults;
}

std::vector<FamilySpec> family_args_or(const CheckRequest & request, std::vector<FamilySpec> defaults)
{
    if (! request.args.empty())
        return {parse_family(request.args[0])};
    return defaults;
}

void prefix_instance(std::vector<CheckReport> & reports, const std::string & name)
{
    for (auto & r : reports)
        r.instance = name + " " + r.instance;
}

std::vector<CheckReport> run_on_instance(const NamedGraph & item, const CheckRequest & request,
    const std::vector<NamedGraph> & corpus)
{
    const auto & g = item.graph;
    std::vector<CheckReport> out;
    if (request.name == "lemma_reduction") {
        std::vector<Graph> patterns;
        if (! request.args.empty()) {
            auto spec = parse_family(request.args[0]);
            if (! spec.pattern() || spec.is_scaled())
                throw ParseError("lemma_reduction needs a single pattern, got \"" + request.args[0] + "\"");
            patterns.push_back(*spec.pattern());
        }
        else
            patterns = all_graphs_up_to(3, true);
        for (const auto & f : patterns)
            for (Vertex root = 0; root < f.order(); ++root)
                out.push_back(check_lemma_reduction(g, {f, root}));
    }
    else if (request.name == "cartesian") {
        if (! request.args.empty())
            out.push_back(check_cartesian(g, named_graph(request.args[0])));
        else
            for (const auto & other : corpus)
                out.push_back(check_cartesian(g, other.graph));
    }
    else if (request.name == "tF_sandwich") {
        auto families = family_args_or(request, {FamilySpec::generator(GeneratorKind::Clique, 2),
                                                    FamilySpec::generator(GeneratorKind::Clique, 3),
                                                    FamilySpec::generator(GeneratorKind::Path, 3)});
        for (const auto & spec : families)
            for (int t : int_args_or(request, 1, {2, 3}))
                out.push_back(check_tF_sandwich(g, spec, t));
    }
    else if (request.name == "tFEP") {
        for (int t : int_args_or(request, 0, {2}))
            out.push_back(check_tFEP(g, t));
    }
    else if (request.name == "decycling") {
        for (int h : int_args_or(request, 0, {2, 3}))
            out.push_back(check_decycling(g, h));
    }
    else if (request.name == "mod2r") {
        for (int r : int_args_or(request, 0, {1, 2}))
            out.push_back(check_mod2r(g, r));
    }
    else if (request.name == "classical_bounds") {
        for (int k : int_args_or(request, 0, {1, 2, 3, 4}))
            out.push_back(check_classical_bounds(g, k));
    }
    else if (request.name == "degree_domination") {
        int min_degree = g.is_null() ? 0 : degree_profile(g).min_degree;
        if (request.args.empty() && min_degree < 1) {
            CheckReport report{"degree_domination", "G=" + describe(g) + " d=0", {}, Verdict::Unsupported,
                "minimum degree 0: no d >= 1 applies"};
            out.push_back(report);
        }
        else
            for (int d : int_args_or(request, 0, {min_degree}))
                out.push_back(check_degree_domination(g, d));
    }
    prefix_instance(out, item.name);
    return out;
}

std::vector<CheckReport> run_corpus_free(const CheckRequest & request)
{
    std::vector<CheckReport> out;
    if (request.name == "extremal") {
        if (! request.args.empty()) {
            if (request.args.size() != 3)
                throw ParseError("extremal takes k:q:t");
            out.push_back(check_extremal(parse_int(request.args[0], request.name), parse_int(request.args[1], request.name),
                parse_int(request.args[2], request.name)));
        }
        else
            for (int k : {1, 2})
                for (int q : {1, 2, 3})
                    for (int t : {2, 3})
                        out.push_back(check_extremal(k, q, t));
    }
    else {
        std::vector<int> values{10, 3, 20, 1};
        if (! request.args.empty() && request.args.size() != 4)
            throw ParseError("sweep takes n:d:samples:seed");
        for (std::size_t i = 0; i < request.args.size(); ++i)
            values[i] = parse_int(request.args[i], request.name);
        out.push_back(sweep_gamma_regular(values[0], values[1], values[2], static_cast<std::uint64_t>(values[3])));
    }
    return out;
}

} // namespace

std::vector<CheckReport> run_suite(const std::string & corpus_spec, const std::vector<std::string> & checks, unsigned threads)
{
    auto requests = parse_checks(checks);
    auto corpus = load_corpus(corpus_spec);

    std::vector<CheckRequest> per_instance, global;
    for (auto & r : requests)
        (corpus_free(r) ? global : per_instance).push_back(std::move(r));

    // One task per (instance, check) and per corpus-free check; results are
    // stored by task index so the output order does not depend on scheduling.
    std::vector<std::function<std::vector<CheckReport>()>> tasks;
    if (! per_instance.empty())
        for (const auto & item : corpus)
            for (const auto & request : per_instance)
                tasks.emplace_back([&item, &request, &corpus] { return run_on_instance(item, request, corpus); });
    for (const auto & request : global)
        tasks.emplace_back([&request] { return run_corpus_free(request); });

    std::vector<std::vector<CheckReport>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            }
            catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks.size(), 1)));
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i)
        pool.emplace_back(worker);
    worker();
    pool.clear();

    for (const auto & e : errors)
        if (e)
            std::rethrow_exception(e);

    std::vector<CheckReport> reports;
    for (auto & batch : results)
        for (auto & r : batch)
            reports.push_back(std::move(r));
    return reports;
}

bool suite_passed(const std::vector<CheckReport> & reports)
{
    return std::ranges::none_of(reports, [](const CheckReport & r) { return r.verdict == Verdict::Fail; });
}

} // namespace isolab
