#include "relroots/reliability.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace relroots {

namespace {

struct UnionFind {
    std::vector<int> parent;
    int components;
    explicit UnionFind(int n) : parent(n), components(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
};

// Spanning-subset size counts shared by the two brute-force enumerations.
// counts[k] = number of k-edge subsets passing `keep`.
template <typename Pred>
std::vector<long> count_subsets_by_size(const Multigraph& g, Pred keep) {
    const int m = g.m();
    std::vector<long> counts(m + 1, 0);
    for (std::uint32_t mask = 0;; ++mask) {
        UnionFind uf(g.n);
        int size = 0;
        for (int e = 0; e < m; ++e)
            if (mask & (1u << e)) {
                uf.unite(g.edges[e].first, g.edges[e].second);
                ++size;
            }
        if (keep(uf)) ++counts[size];
        if (mask == (1u << m) - 1) break;
    }
    return counts;
}

RatPoly expand_size_counts(const std::vector<long>& counts, int m) {
    // sum_k counts[k] (1-q)^k q^(m-k)
    RatPoly total;
    RatPoly up = RatPoly::constant(Rat(1));  // (1-q)^k, built incrementally
    const RatPoly one_minus_q{1, -1};
    for (int k = 0; k <= m; ++k) {
        if (counts[k] != 0) {
            RatPoly term = up * RatPoly::monomial(Rat(counts[k]), m - k);
            total += term;
        }
        if (k < m) up *= one_minus_q;
    }
    return total;
}

}  // namespace

RatPoly reliability_bruteforce(const Multigraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("reliability_bruteforce: graph must be connected");
    if (g.m() > 24) throw std::invalid_argument("reliability_bruteforce: m > 24 refused");
    auto counts = count_subsets_by_size(g, [](UnionFind& uf) { return uf.components == 1; });
    return expand_size_counts(counts, g.m());
}

RatPoly split_reliability(const Multigraph& g, Terminals st) {
    if (!is_connected(g)) throw std::invalid_argument("split_reliability: graph must be connected");
    if (g.m() > 24) throw std::invalid_argument("split_reliability: m > 24 refused");
    if (st.s == st.t) throw std::invalid_argument("split_reliability: s and t must differ");
    if (st.s < 0 || st.s >= g.n || st.t < 0 || st.t >= g.n)
        throw std::invalid_argument("split_reliability: terminal out of range");
    auto counts = count_subsets_by_size(g, [&](UnionFind& uf) {
        return uf.components == 2 && uf.find(st.s) != uf.find(st.t);
    });
    return expand_size_counts(counts, g.m());
}

// --- deletion-contraction engine ---------------------------------------------

namespace {

// Weighted multigraph: each edge points into the interned weight table.
struct WEdge {
    int a, b, w;
};
struct WGraph {
    int n = 0;
    std::vector<WEdge> edges;
};

struct RelCtx {
    std::vector<std::pair<RatPoly, RatPoly>> weights;  // (operational, failed)
    std::unordered_map<std::string, int> weight_ids;
    std::unordered_map<std::string, RatPoly> memo;

    int intern(const RatPoly& p, const RatPoly& q) {
        std::string key;
        for (const Rat& c : p.coeffs()) key += c.get_str() + ",";
        key += "|";
        for (const Rat& c : q.coeffs()) key += c.get_str() + ",";
        auto it = weight_ids.find(key);
        if (it != weight_ids.end()) return it->second;
        int id = static_cast<int>(weights.size());
        weights.emplace_back(p, q);
        weight_ids.emplace(std::move(key), id);
        return id;
    }
};

std::string canon_key(const WGraph& g) {
    std::vector<std::tuple<int, int, int>> es;
    es.reserve(g.edges.size());
    for (const WEdge& e : g.edges) es.emplace_back(e.a, e.b, e.w);
    std::sort(es.begin(), es.end());
    std::ostringstream os;
    os << g.n << ":";
    for (const auto& [a, b, w] : es) os << a << "," << b << "," << w << ";";
    return os.str();
}

bool wconnected(const WGraph& g) {
    if (g.n <= 1) return true;
    UnionFind uf(g.n);
    for (const WEdge& e : g.edges) uf.unite(e.a, e.b);
    return uf.components == 1;
}

std::vector<int> wbridges(const WGraph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.n);
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        adj[g.edges[i].a].emplace_back(g.edges[i].b, i);
        adj[g.edges[i].b].emplace_back(g.edges[i].a, i);
    }
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<int> result;
    int timer = 0;
    // Explicit stack; substituted cycles can be long paths.
    struct Frame {
        int u, in_edge;
        size_t next = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({0, -1});
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        Frame& fr = stack.back();
        if (fr.next < adj[fr.u].size()) {
            auto [v, id] = adj[fr.u][fr.next++];
            if (id == fr.in_edge) continue;
            if (disc[v] == -1) {
                disc[v] = low[v] = timer++;
                stack.push_back({v, id});
            } else {
                low[fr.u] = std::min(low[fr.u], disc[v]);
            }
        } else {
            int u = fr.u, in_edge = fr.in_edge;
            stack.pop_back();
            if (!stack.empty()) {
                int parent = stack.back().u;
                low[parent] = std::min(low[parent], low[u]);
                if (low[u] > disc[parent]) result.push_back(in_edge);
            }
        }
    }
    return result;
}

void contract_wedge(WGraph& g, int e) {
    int a = g.edges[e].a, b = g.edges[e].b;
    if (a > b) std::swap(a, b);
    g.edges.erase(g.edges.begin() + e);
    for (WEdge& ed : g.edges) {
        if (ed.a == b) ed.a = a;
        if (ed.b == b) ed.b = a;
        if (ed.a > b) --ed.a;
        if (ed.b > b) --ed.b;
        if (ed.a > ed.b) std::swap(ed.a, ed.b);
    }
    --g.n;
}

// Applies loop, bridge, parallel and series reductions until none fires.
// Accumulates the multiplicative factor. Returns false when the graph turned
// out disconnected (reliability 0).
bool reduce(WGraph& g, RatPoly& factor, RelCtx& ctx) {
    bool changed = true;
    while (changed) {
        changed = false;

        // Loops never affect connectivity; their total weight factors out.
        for (int i = static_cast<int>(g.edges.size()) - 1; i >= 0; --i) {
            if (g.edges[i].a == g.edges[i].b) {
                const auto& [p, q] = ctx.weights[g.edges[i].w];
                factor *= (p + q);
                g.edges.erase(g.edges.begin() + i);
                changed = true;
            }
        }
        if (g.n == 1) return true;
        if (!wconnected(g)) return false;

        // A bridge must operate.
        std::vector<int> brs = wbridges(g);
        if (!brs.empty()) {
            int e = brs.front();
            factor *= ctx.weights[g.edges[e].w].first;
            contract_wedge(g, e);
            changed = true;
            continue;
        }

        // Parallel bundle: at least one of the copies must operate.
        {
            std::unordered_map<long long, std::vector<int>> groups;
            for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
                groups[static_cast<long long>(g.edges[i].a) * 1000003 + g.edges[i].b].push_back(i);
            for (auto& [key, ids] : groups) {
                (void)key;
                if (ids.size() < 2) continue;
                RatPoly all_weight = RatPoly::constant(Rat(1));
                RatPoly all_fail = RatPoly::constant(Rat(1));
                for (int id : ids) {
                    const auto& [p, q] = ctx.weights[g.edges[id].w];
                    all_weight *= (p + q);
                    all_fail *= q;
                }
                int w = ctx.intern(all_weight - all_fail, all_fail);
                g.edges[ids.front()].w = w;
                for (size_t k = ids.size(); k-- > 1;) g.edges.erase(g.edges.begin() + ids[k]);
                changed = true;
                break;  // indices shifted; rescan
            }
            if (changed) continue;
        }

        // Series: eliminate a degree-2 vertex. The state where both incident
        // edges fail leaves the vertex stranded, so that mass is dropped.
        if (g.n > 2) {
            std::vector<int> deg(g.n, 0);
            std::vector<std::pair<int, int>> touch(g.n, {-1, -1});
            for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
                for (int v : {g.edges[i].a, g.edges[i].b}) {
                    ++deg[v];
                    if (touch[v].first == -1)
                        touch[v].first = i;
                    else
                        touch[v].second = i;
                }
            }
            for (int v = 0; v < g.n; ++v) {
                if (deg[v] != 2) continue;
                int e1 = touch[v].first, e2 = touch[v].second;
                int u = g.edges[e1].a == v ? g.edges[e1].b : g.edges[e1].a;
                int w = g.edges[e2].a == v ? g.edges[e2].b : g.edges[e2].a;
                if (u == w) continue;  // parallel pair through v; handled above
                const auto [p1, q1] = ctx.weights[g.edges[e1].w];
                const auto [p2, q2] = ctx.weights[g.edges[e2].w];
                int nw = ctx.intern(p1 * p2, p1 * q2 + q1 * p2);
                if (e1 > e2) std::swap(e1, e2);
                g.edges.erase(g.edges.begin() + e2);
                g.edges.erase(g.edges.begin() + e1);
                WEdge ne{std::min(u, w), std::max(u, w), nw};
                // Relabel after removing v.
                if (ne.a > v) --ne.a;
                if (ne.b > v) --ne.b;
                for (WEdge& ed : g.edges) {
                    if (ed.a > v) --ed.a;
                    if (ed.b > v) --ed.b;
                }
                --g.n;
                g.edges.push_back(ne);
                changed = true;
                break;
            }
            if (changed) continue;
        }
    }
    return true;
}

RatPoly rel_recurse(WGraph g, RelCtx& ctx) {
    RatPoly factor = RatPoly::constant(Rat(1));
    if (!reduce(g, factor, ctx)) return RatPoly();
    if (g.n == 1) return factor;

    std::string key = canon_key(g);
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return factor * it->second;

    // Branch on an edge in the densest spot.
    std::vector<int> deg(g.n, 0);
    for (const WEdge& e : g.edges) {
        ++deg[e.a];
        ++deg[e.b];
    }
    int pick = 0, best = -1;
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        int score = deg[g.edges[i].a] + deg[g.edges[i].b];
        if (score > best) {
            best = score;
            pick = i;
        }
    }
    const auto [p, q] = ctx.weights[g.edges[pick].w];

    WGraph contracted = g;
    contract_wedge(contracted, pick);
    WGraph deleted = g;
    deleted.edges.erase(deleted.edges.begin() + pick);

    RatPoly result = p * rel_recurse(std::move(contracted), ctx) +
                     q * rel_recurse(std::move(deleted), ctx);
    ctx.memo.emplace(std::move(key), result);
    return factor * result;
}

}  // namespace

RatPoly reliability(const Multigraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("reliability: graph must be connected");
    RelCtx ctx;
    const int base = ctx.intern(RatPoly{1, -1}, RatPoly{0, 1});
    WGraph wg;
    wg.n = g.n;
    wg.edges.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges) wg.edges.push_back({a, b, base});
    return rel_recurse(std::move(wg), ctx);
}

RatPoly h_from_reliability(const RatPoly& rel, int n) {
    try {
        return exact_div(rel, one_minus_q_pow(n - 1));
    } catch (const std::domain_error&) {
        throw std::logic_error("h_polynomial: (1-q)^(n-1) does not divide Rel — engine bug");
    }
}

RatPoly h_polynomial(const Multigraph& g) { return h_from_reliability(reliability(g), g.n); }

RelForms forms(const Multigraph& g) {
    RelForms out;
    out.rel = reliability(g);
    out.n = g.n;
    out.m = g.m();
    out.d = g.m() - g.n + 1;

    if (out.rel(Rat(0)) != 1) throw std::logic_error("forms: Rel(0) != 1 — engine bug");
    if (out.m >= 1 && out.rel(Rat(1)) != 0) throw std::logic_error("forms: Rel(1) != 0 — engine bug");

    RatPoly h = h_from_reliability(out.rel, out.n);
    if (h.degree() != out.d) throw std::logic_error("forms: deg h != corank — engine bug");
    out.H.reserve(out.d + 1);
    for (int i = 0; i <= out.d; ++i) {
        Rat c = h.coeff(i);
        if (c.get_den() != 1) throw std::logic_error("forms: H coefficients must be integers");
        out.H.push_back(c.get_num());
    }
    if (out.H[0] != 1) throw std::logic_error("forms: H_0 != 1 — engine bug");

    out.F.reserve(out.d + 1);
    for (int k = 0; k <= out.d; ++k) {
        Int f(0);
        for (int r = 0; r <= k; ++r) f += out.H[r] * binomial(out.d - r, k - r);
        out.F.push_back(f);
    }
    out.c.reserve(out.m + 1);
    for (int i = 0; i <= out.m; ++i) {
        Int ci = binomial(out.m, i);
        if (i <= out.d) ci -= out.F[i];
        out.c.push_back(ci);
    }
    return out;
}

void crosscheck_cutsets(const RelForms& forms_value, const Multigraph& g) {
    for (int i = 0; i <= forms_value.m; ++i) {
        Int direct = count_cutsets(g, i);
        if (direct != forms_value.c[i]) {
            std::ostringstream os;
            os << "crosscheck_cutsets: c_" << i << " mismatch: derived " << forms_value.c[i]
               << " vs enumerated " << direct;
            throw std::logic_error(os.str());
        }
    }
}

Rat h2_formula(int n, int m, int d, const Int& c2) {
    if (d < 2) throw std::invalid_argument("h2_formula: requires d >= 2");
    Int v = binomial(m, 2) - c2 - Int(d - 1) * Int(n - 1) - binomial(d, 2);
    return Rat(v);
}

RatPoly hk_split_closed_form(int eta, int k) {
    if (eta < 3 || k < 1 || k > eta - 2)
        throw std::invalid_argument("hk_split_closed_form: need eta >= 3, 1 <= k <= eta-2");
    RatPoly out = RatPoly::monomial(Rat(1), 1);
    out *= one_minus_q_pow(2 * eta - k - 3);
    out *= poly_pow(RatPoly{1, 2}, eta - k - 2);
    out *= RatPoly(std::vector<Rat>{Rat(k), Rat(2 * (eta - 1))});
    return out;
}

RatPoly complete_graph_reliability(int n) {
    if (n < 2 || n > 14) throw std::invalid_argument("complete_graph_reliability: need 2 <= n <= 14");
    std::vector<RatPoly> p(n + 1);
    p[1] = RatPoly::constant(Rat(1));
    for (int i = 2; i <= n; ++i) {
        RatPoly sum;
        for (int k = 1; k < i; ++k) {
            RatPoly term = p[k] * RatPoly::monomial(Rat(binomial(i - 1, k - 1)),
                                                    k * (i - k));
            sum += term;
        }
        p[i] = RatPoly::constant(Rat(1)) - sum;
    }
    return p[n];
}

}  // namespace relroots
