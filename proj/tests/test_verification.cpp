#include "isolab/corpus.hpp"
#include "isolab/errors.hpp"
#include "isolab/solvers.hpp"
#include "isolab/verification.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace isolab;

namespace {

bool mentions(const CheckReport & r, const std::string & text)
{
    return r.detail.find(text) != std::string::npos;
}

// Two triangles joined by a path of length 2 through vertex 6.
Graph two_triangles_with_bridge()
{
    return Graph(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 6}, {6, 3}});
}

} // namespace

TEST_CASE("alpha")
{
    CHECK(alpha(1).alpha == doctest::Approx(0.84657).epsilon(1e-5));
    CHECK(alpha(3).alpha == doctest::Approx(0.59657).epsilon(1e-5));
    for (int d = 1; d < 100; ++d) {
        CHECK(alpha(d + 1).alpha < alpha(d).alpha);
        CHECK(alpha(d).alpha > 0);
        CHECK(alpha(d).alpha <= 1);
    }
    CHECK_THROWS_AS(alpha(0), ParameterError);
    CHECK(within_alpha_bound(1, 3, 4));
    CHECK(within_alpha_bound(4, 3, 8));
    CHECK_FALSE(within_alpha_bound(5, 3, 8));
}

TEST_CASE("lemma reduction check")
{
    auto r = check_lemma_reduction(named_graph("C5"), {named_graph("K2"), 0});
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.computed.at("gamma_G") == 2);
    CHECK(r.computed.at("iota_C(G,F)_F") == 2);
    CHECK(r.computed.at("order_C(G,F)") == 10);

    auto k1p3 = check_lemma_reduction(Graph(1, {}), {named_graph("P3"), 0});
    CHECK(k1p3.verdict == Verdict::Pass);
    CHECK(k1p3.computed.at("gamma_G") == 1);

    CHECK(check_lemma_reduction(named_graph("P3"), {Graph(2, {}), 0}).verdict == Verdict::Unsupported);
}

TEST_CASE("Cartesian check")
{
    auto cube = check_cartesian(named_graph("C4"), named_graph("K2"));
    CHECK(cube.verdict == Verdict::Pass);
    CHECK(cube.computed.at("delta_GxF") == 3);
    CHECK(cube.computed.at("gamma_G") == 2);
    CHECK(cube.computed.at("iota_GxF_F") >= 2);
    CHECK(check_cartesian(Graph(1, {}), named_graph("K3")).verdict == Verdict::Pass);
    auto p = check_cartesian(named_graph("P3"), named_graph("P2"));
    CHECK(p.verdict == Verdict::Pass);
    CHECK(p.computed.at("delta_GxF") == 2);
}

TEST_CASE("sandwich check")
{
    auto k2 = FamilySpec::single(named_graph("K2"));
    auto g = check_tF_sandwich(extremal_path_of_cliques(2, 2, 2), k2, 2);
    CHECK(g.verdict == Verdict::Pass);
    CHECK(g.computed.at("iota_tF") == 2);
    CHECK(g.computed.at("iota_F") == 2);

    auto h = check_tF_sandwich(extremal_H(2, 2, 2), k2, 2);
    CHECK(h.verdict == Verdict::Pass);
    CHECK(h.computed.at("iota_F") == 3);
    CHECK(h.computed.at("iota_tF") == 2);
    CHECK(h.computed.at("lower_bound") == 2);
    CHECK(mentions(h, "tight"));

    auto none = check_tF_sandwich(named_graph("P4"), FamilySpec::single(named_graph("K3")), 3);
    CHECK(none.verdict == Verdict::Pass);
    CHECK(mentions(none, "vacuous"));

    CHECK(check_tF_sandwich(named_graph("K4"), FamilySpec::all_cycles(), 2).verdict == Verdict::Unsupported);
}

TEST_CASE("extremal check")
{
    for (int k = 1; k <= 2; ++k)
        for (int q = 1; q <= 3; ++q)
            for (int t = 2; t <= 3; ++t)
                CHECK(check_extremal(k, q, t).verdict == Verdict::Pass);
}

TEST_CASE("tFEP check")
{
    auto bridged = check_tFEP(two_triangles_with_bridge(), 2);
    CHECK(bridged.verdict == Verdict::Pass);
    CHECK(bridged.computed.at("residual_cycle_packing") < 2);

    auto forest = check_tFEP(named_graph("P5"), 3);
    CHECK(forest.verdict == Verdict::Pass);
    CHECK(forest.computed.at("iota_C") == 0);
    CHECK(forest.computed.at("tau_residual") == 0);

    auto c3 = check_tFEP(named_graph("K3"), 2);
    CHECK(c3.verdict == Verdict::Pass);
    CHECK(c3.computed.at("iota_tC") == 0);
    CHECK(c3.computed.at("tau_residual") == 1);
    CHECK(c3.computed.at("iota_C") == 1);
}

TEST_CASE("decycling check")
{
    auto k4 = check_decycling(named_graph("K4"), 2);
    CHECK(k4.verdict == Verdict::Pass);
    CHECK(k4.computed.at("nabla_G") == 2);
    CHECK(k4.computed.at("order_Sh") == 16);
    CHECK(check_decycling(named_graph("S3"), 2).computed.at("nabla_Sh") == 0);
    auto k3 = check_decycling(named_graph("K3"), 2);
    CHECK(k3.computed.at("nabla_Sh") == 1);
    CHECK(k3.computed.at("iota_Sh_C") == 1);
    CHECK_THROWS_AS(check_decycling(named_graph("K3"), 1), ParameterError);
}

TEST_CASE("mod 2r check")
{
    // S_3(K3) is C12.
    auto k3 = check_mod2r(named_graph("K3"), 1);
    CHECK(k3.verdict == Verdict::Pass);
    CHECK(k3.computed.at("min_cycle_length") == 12);

    auto tree = check_mod2r(named_graph("S3"), 2);
    CHECK(tree.verdict == Verdict::Pass);
    CHECK(mentions(tree, "no cycles"));

    // S_5(K4) has cycle lengths 18 and 24; 18 is not 0 mod 4.
    auto k4 = check_mod2r(named_graph("K4"), 2);
    CHECK(k4.verdict == Verdict::Fail);
    CHECK(k4.computed.at("min_cycle_length") == 18);
    CHECK(k4.computed.at("max_cycle_length") == 24);
    CHECK(mentions(k4, "FLAGGED"));
    CHECK(mentions(k4, "length 18"));
    CHECK_THROWS_AS(check_mod2r(named_graph("K4"), 0), ParameterError);
}

TEST_CASE("property: mod 2r verdicts follow the cycle-length arithmetic")
{
    // S_{2r+1} turns a cycle of length l into one of length (2r+2) l.
    for (const auto & g : all_graphs_up_to(4, true))
        for (int r = 1; r <= 2; ++r) {
            bool expect = std::ranges::all_of(oracle::cycle_lengths(oracle::adj(g)),
                [&](int l) { return ((2 * r + 2) * l) % (2 * r) == 0; });
            CHECK((check_mod2r(g, r).verdict == Verdict::Pass) == expect);
        }
}

TEST_CASE("classical bounds check")
{
    auto c5 = check_classical_bounds(named_graph("C5"), 2);
    CHECK(c5.verdict == Verdict::Pass);
    CHECK(c5.computed.at("iota_Kk") == 2);
    CHECK(mentions(c5, "exception"));
    auto k3 = check_classical_bounds(named_graph("K3"), 1);
    CHECK(k3.verdict == Verdict::Pass);
    CHECK(k3.computed.at("iota_C") == 1);
    auto p6 = check_classical_bounds(named_graph("P6"), 2);
    CHECK(p6.verdict == Verdict::Pass);
    CHECK(p6.computed.at("iota_Kk") == oracle::isolation(oracle::adj(named_graph("P6")), oracle::pattern_family(named_graph("K2"))));
    CHECK(check_classical_bounds(Graph(2, {}), 1).verdict == Verdict::Unsupported);
}

TEST_CASE("degree domination check")
{
    CHECK(check_degree_domination(named_graph("K4"), 3).verdict == Verdict::Pass);
    auto c5 = check_degree_domination(named_graph("C5"), 2);
    CHECK(c5.verdict == Verdict::Pass);
    CHECK(c5.computed.at("alpha_d_n") == doctest::Approx(3.4977).epsilon(1e-4));
    CHECK(check_degree_domination(named_graph("petersen"), 3).verdict == Verdict::Pass);
    CHECK(check_degree_domination(named_graph("P3"), 2).verdict == Verdict::Unsupported);
}

TEST_CASE("sweep")
{
    auto s = sweep_gamma_regular(10, 3, 20, 1);
    CHECK(s.verdict == Verdict::Vacuous);
    CHECK(s.computed.at("max_gamma") <= std::floor(alpha(3).alpha * 10));
    CHECK(s.computed.at("bound_violations") == 0);

    auto k4 = sweep_gamma_regular(4, 3, 5, 9);
    CHECK(k4.computed.at("max_gamma") == 1);
    CHECK(k4.computed.at("min_gamma") == 1);

    auto cycles = sweep_gamma_regular(8, 2, 10, 3);
    CHECK(cycles.computed.at("min_gamma") >= 3);
}

TEST_CASE("suite runner")
{
    auto lemma = run_suite("all-connected-n<=5", {"lemma_reduction:K2"});
    CHECK(lemma.size() == 62);
    CHECK(suite_passed(lemma));

    auto classical = run_suite("all-connected-n<=6", {"classical:2"});
    CHECK(classical.size() == 143);
    CHECK(suite_passed(classical));

    auto empty = run_suite("empty", {"lemma1"});
    CHECK(empty.empty());
    CHECK(suite_passed(empty));

    CHECK_THROWS_AS(run_suite("empty", {"nonsense"}), ParseError);
}

TEST_CASE("property: suite output does not depend on the thread count")
{
    auto one = run_suite("all-connected-n<=4", {"all"}, 1);
    auto four = run_suite("all-connected-n<=4", {"all"}, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].instance == four[i].instance);
        CHECK(one[i].computed == four[i].computed);
        CHECK(one[i].verdict == four[i].verdict);
    }
}

TEST_CASE("property: failing reports name both sides")
{
    for (const auto & r : run_suite("all-connected-n<=4", {"mod2r"}))
        if (r.verdict == Verdict::Fail) {
            CHECK(mentions(r, "violated"));
            CHECK(mentions(r, " vs "));
        }
}
