#pragma once

#include "isolab/constructions.hpp"
#include "isolab/families.hpp"
#include "isolab/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace isolab {

/// Vacuous and Unsupported are kept apart from Pass: Vacuous marks reports
/// that assert nothing, Unsupported marks instances outside a statement's
/// hypotheses.
enum class Verdict { Pass, Fail, Vacuous, Unsupported };

std::string to_string(Verdict verdict);

struct CheckReport {
    std::string check_id;
    std::string instance;
    /// Parameter name to value; integral quantities are stored exactly.
    std::map<std::string, double> computed;
    Verdict verdict = Verdict::Pass;
    /// For Fail, the violated relation with both sides' values.
    std::string detail;
};

/// (1 + ln(d+1)) / (d+1).
struct AlphaValue {
    int d;
    double alpha;
};

/// Throws ParameterError for d < 1.
AlphaValue alpha(int d);

/// Whether gamma <= alpha_d * n, compared as gamma*(d+1) <= (1 + ln(d+1))*n
/// with an absolute slack of 1e-9 on the right-hand side.
bool within_alpha_bound(int gamma, int d, int n);

/// iota(C(G,F), F) == gamma(G). Unsupported for a disconnected pattern.
CheckReport check_lemma_reduction(const Graph & g, const RootedPattern & rp);

/// delta(G □ F) == delta(G) + delta(F), iota(G □ F, F) >= gamma(G), and
/// regularity of G □ F when both factors are regular. Also records
/// delta(G) + gamma(F) for comparison with the degree identity.
CheckReport check_cartesian(const Graph & g, const Graph & f);

/// iota(G,F) - (t-1) gamma(F) <= iota(G,tF) <= iota(G,F). For all cycles the
/// left side is Unsupported and only the right inequality is checked.
CheckReport check_tF_sandwich(const Graph & g, const FamilySpec & spec, int t);

/// The equality chains on the two extremal graphs for F = K_k:
/// iota(G,tK_k) = iota(G,K_k) = gamma(G) = q, iota(H,tK_k) = q and
/// iota(H,K_k) = gamma(H) = q + t - 1.
CheckReport check_extremal(int k, int q, int t);

/// With D an optimal tC-isolating set and tau the decycling number of
/// G - N[D]: iota(G,C) <= iota(G,tC) + tau, iota(G,tC) <= iota(G,C), and
/// G - N[D] holds fewer than t disjoint cycles.
CheckReport check_tFEP(const Graph & g, int t);

/// nabla(G) == nabla(S_h(G)) == iota(S_h(G), C). Throws ParameterError for h < 2.
CheckReport check_decycling(const Graph & g, int h);

/// S_{2r+1}(G) is bipartite and all its cycle lengths are 0 mod 2r. A Fail
/// is flagged in the detail for review. Throws ParameterError for r < 1.
CheckReport check_mod2r(const Graph & g, int r);

/// For connected G: gamma <= n/2 (n >= 2); iota(G,K_k) <= n/(k+1) unless G
/// is K_k or (k = 2 and G is C_5); iota(G,C) <= n/4 unless G is C_3.
/// Unsupported for a disconnected G.
CheckReport check_classical_bounds(const Graph & g, int k);

/// gamma(G) <= alpha_d n. Unsupported when delta(G) < d.
CheckReport check_degree_domination(const Graph & g, int d);

/// Descriptive sweep over `samples` random d-regular graphs on n vertices
/// (seeds seed, seed+1, ...). Always Vacuous; bound violations are counted.
CheckReport sweep_gamma_regular(int n, int d, int samples, std::uint64_t seed);

/// Runs the listed checks over a corpus (see load_corpus). Check ids, with
/// optional colon-separated parameters:
///   lemma_reduction[:FAMILY]   (default: every connected pattern on <= 3 vertices)
///   cartesian[:GRAPH]          (default: every ordered pair of corpus graphs)
///   tF_sandwich[:FAMILY[:t]]   (default: K2, K3, P3 and t = 2, 3)
///   tFEP[:t]                   (default 2)
///   decycling[:h]              (default 2 and 3)
///   mod2r[:r]                  (default 1 and 2)
///   classical_bounds[:k]       (default 1..4)
///   degree_domination[:d]      (default: the minimum degree)
///   extremal[:k:q:t]           (default grid {1,2} x {1,2,3} x {2,3}; ignores the corpus)
///   sweep[:n:d:samples:seed]   (default 10:3:20:1; ignores the corpus)
///   all                        (every check with its defaults)
/// Aliases: lemma1, cart, tF, classical, dombound. Reports are ordered by
/// instance, then by check; corpus-free checks come last. Instances are
/// evaluated on up to `threads` threads (0 = hardware concurrency).
std::vector<CheckReport> run_suite(const std::string & corpus_spec, const std::vector<std::string> & checks,
    unsigned threads = 0);

/// True when no report failed.
bool suite_passed(const std::vector<CheckReport> & reports);

} // namespace isolab
