#include "relroots/survey.hpp"

#include <algorithm>
#include <climits>
#include <istream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "relroots/rng.hpp"

namespace relroots {

namespace {

std::string graph_id(const Multigraph& g) {
    if (g.n <= 62 && is_simple(g)) return to_graph6(g);
    // FNV-1a over the edge-list text for multigraphs.
    std::string text = to_edge_list(g);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << "el:" << std::hex << h;
    return os.str();
}

// Unit-capacity undirected max flow (one unit per parallel copy).
int max_flow(const Multigraph& g, int s, int t) {
    struct Arc {
        int to, rev, cap;
    };
    std::vector<std::vector<Arc>> adj(g.n);
    for (const auto& [a, b] : g.edges) {
        adj[a].push_back({b, static_cast<int>(adj[b].size()), 1});
        adj[b].push_back({a, static_cast<int>(adj[a].size()) - 1, 1});
    }
    int flow = 0;
    while (true) {
        std::vector<std::pair<int, int>> parent(g.n, {-1, -1});
        std::queue<int> q;
        q.push(s);
        parent[s] = {s, -1};
        while (!q.empty() && parent[t].first == -1) {
            int u = q.front();
            q.pop();
            for (int i = 0; i < static_cast<int>(adj[u].size()); ++i) {
                const Arc& arc = adj[u][i];
                if (arc.cap > 0 && parent[arc.to].first == -1) {
                    parent[arc.to] = {u, i};
                    q.push(arc.to);
                }
            }
        }
        if (parent[t].first == -1) break;
        for (int v = t; v != s;) {
            auto [u, i] = parent[v];
            adj[u][i].cap -= 1;
            adj[v][adj[u][i].rev].cap += 1;
            v = u;
        }
        ++flow;
    }
    return flow;
}

struct RowBuild {
    SurveyRow row;
    bool h_minus_one_zero = false;
};

RowBuild build_row(const Multigraph& g) {
    RowBuild out;
    SurveyRow& row = out.row;
    row.id = graph_id(g);
    row.n = g.n;
    row.m = g.m();
    row.d = g.m() - g.n + 1;
    row.c1 = Int(static_cast<long>(bridges(g).size()));
    row.c2 = count_cutsets(g, 2);
    row.verdict = certify_nonreal(g).verdict;
    RatPoly h = h_polynomial(g);
    auto iso = isolate_real_roots(h, make_rat(1, 1000000000L));
    long with_mult = 0;
    for (const IsolatedRoot& r : iso) with_mult += r.multiplicity;
    row.n_distinct_real = static_cast<long>(iso.size());
    row.real_rooted = (with_mult == std::max(h.degree(), 0));
    if (!iso.empty()) row.min_real_root = iso.front().approx();
    row.lambda = edge_connectivity(g);
    out.h_minus_one_zero = (h(Rat(-1)) == 0);
    return out;
}

}  // namespace

SurveyRow survey_row(const Multigraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("survey_row: graph must be connected");
    return build_row(g).row;
}

RandomSurveyResult random_survey(int n, double rho, int trials, std::uint64_t seed) {
    if (n < 4 || n > 12) throw std::invalid_argument("random_survey: need 4 <= n <= 12");
    if (!(rho > 0.0 && rho <= 1.0)) throw std::invalid_argument("random_survey: need rho in (0,1]");
    if (trials < 1) throw std::invalid_argument("random_survey: need trials >= 1");

    RandomSurveyResult res;
    res.summary.n = n;
    res.summary.rho = rho;
    res.summary.trials = trials;
    res.summary.seed = seed;
    for (int trial = 0; trial < trials; ++trial) {
        SplitMix64 rng = trial_stream(seed, static_cast<std::uint64_t>(trial));
        Multigraph g;
        g.n = n;
        sample_gnp_edges(g, rho, rng);
        if (!is_connected(g)) {
            ++res.summary.discarded_disconnected;
            continue;
        }
        RowBuild rb = build_row(g);
        ++res.summary.connected;
        if (rb.row.verdict == CertVerdict::certified_nonreal) ++res.summary.certified_nonreal;
        if (rb.row.real_rooted)
            ++res.summary.real_rooted;
        else
            ++res.summary.with_nonreal_root;
        if (rb.h_minus_one_zero) ++res.summary.h_minus_one_zero;
        res.rows.push_back(std::move(rb.row));
    }
    return res;
}

namespace {

void tally_graph(const Multigraph& g, ExhaustiveSurveyResult& res) {
    RatPoly h = h_polynomial(g);
    long nreal = count_distinct_real_roots(h);
    ++res.connected_total;
    ++res.histogram[nreal];
    const int d = g.m() - g.n + 1;
    if (d % 2 == 1 && nreal == 0) ++res.parity_violations;
    if (h(Rat(-1)) == 0) ++res.h_minus_one_zero;
}

}  // namespace

ExhaustiveSurveyResult exhaustive_survey(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("exhaustive_survey: need 1 <= n <= 6");
    ExhaustiveSurveyResult res;
    res.n = n;
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0;; ++mask) {
        Multigraph g;
        g.n = n;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (mask & (1u << bit)) g.add_edge(i, j);
        if (is_connected(g)) tally_graph(g, res);
        if (mask == (1u << pairs) - 1) break;
    }
    return res;
}

ExhaustiveSurveyResult exhaustive_survey_graph6(std::istream& in) {
    ExhaustiveSurveyResult res;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        Multigraph g = parse_graph6(line);
        res.n = std::max(res.n, g.n);
        if (is_connected(g)) tally_graph(g, res);
    }
    return res;
}

KnTrendResult kn_root_trend(int n_max) {
    if (n_max < 3 || n_max > 14) throw std::invalid_argument("kn_root_trend: need 3 <= n_max <= 14");
    KnTrendResult res;
    double prev = 0.0;
    for (int n = 3; n <= n_max; ++n) {
        RatPoly rel = complete_graph_reliability(n);
        RatPoly h = h_from_reliability(rel, n);
        auto iso = isolate_real_roots(h, make_rat(1, 1000000000L));
        if (iso.empty()) throw std::logic_error("kn_root_trend: K_n lost its real root");
        KnTrendRow row;
        row.n = n;
        row.min_root = iso.front();
        row.approx = iso.front().approx();
        if (n > 3 && !(row.approx < prev)) res.strictly_decreasing = false;
        prev = row.approx;
        res.rows.push_back(std::move(row));
    }
    return res;
}

int edge_connectivity(const Multigraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("edge_connectivity: graph must be connected");
    if (g.n == 1) return 0;
    if (g.m() <= 24) {
        for (int i = 1; i <= g.m(); ++i)
            if (count_cutsets(g, i) > 0) return i;
        return g.m();
    }
    int best = INT_MAX;
    for (int t = 1; t < g.n; ++t) best = std::min(best, max_flow(g, 0, t));
    return best;
}

}  // namespace relroots
