#ifndef RELROOTS_SURVEY_HPP
#define RELROOTS_SURVEY_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relroots/rootlab.hpp"

namespace relroots {

/// One surveyed graph. `id` is the graph6 string for simple graphs and an
/// edge-list hash otherwise.
struct SurveyRow {
    std::string id;
    int n = 0, m = 0, d = 0;
    Int c1, c2;
    CertVerdict verdict = CertVerdict::not_applicable;
    bool real_rooted = false;
    long n_distinct_real = 0;
    std::optional<double> min_real_root;
    std::optional<int> lambda;
};

SurveyRow survey_row(const Multigraph& g);

struct RandomSurveySummary {
    int n = 0;
    double rho = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
    long connected = 0;
    long discarded_disconnected = 0;
    long certified_nonreal = 0;
    long with_nonreal_root = 0;
    long real_rooted = 0;
    long h_minus_one_zero = 0;  // graphs with h(-1) = 0; expected to stay 0
};

struct RandomSurveyResult {
    RandomSurveySummary summary;
    std::vector<SurveyRow> rows;
};

/// Labeled G(n, rho) samples, disconnected ones discarded (and counted).
/// Deterministic: per-trial streams depend only on (seed, trial index).
/// Requires 4 <= n <= 12, rho in (0, 1], trials >= 1.
RandomSurveyResult random_survey(int n, double rho, int trials, std::uint64_t seed);

struct ExhaustiveSurveyResult {
    int n = 0;
    long connected_total = 0;
    std::map<long, long> histogram;  // distinct real roots of h -> graph count
    long parity_violations = 0;      // odd corank yet zero real roots (must stay 0)
    long h_minus_one_zero = 0;
};

/// All 2^C(n,2) labeled graphs, connected ones analyzed. Requires 1 <= n <= 6.
ExhaustiveSurveyResult exhaustive_survey(int n);

/// Same analysis over a stream of graph6 lines (one graph per line).
ExhaustiveSurveyResult exhaustive_survey_graph6(std::istream& in);

struct KnTrendRow {
    int n = 0;
    std::optional<IsolatedRoot> min_root;  // absent when h(K_n) has no real root
    std::optional<double> approx;
};

struct KnTrendResult {
    std::vector<KnTrendRow> rows;
    bool strictly_decreasing = true;  // over the orders that have real roots
};

/// Smallest real root of h(K_n) for n = 3..n_max; K_n of even corank has no
/// real root at all and gets an empty entry. Requires 3 <= n_max <= 14.
KnTrendResult kn_root_trend(int n_max);

/// Minimum cutset size: smallest i with a disconnecting i-subset (direct scan
/// for m <= 24, max-flow min-cut otherwise).
int edge_connectivity(const Multigraph& g);

}  // namespace relroots

#endif
