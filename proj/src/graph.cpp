#include "relroots/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "relroots/rng.hpp"

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

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n) throw std::invalid_argument(std::string(what) + ": vertex out of range");
}

}  // namespace

void Multigraph::add_edge(int a, int b) {
    check_vertex(a, n, "add_edge");
    check_vertex(b, n, "add_edge");
    if (a == b) throw std::invalid_argument("add_edge: loops are forbidden");
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
}

bool Multigraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

bool is_simple(const Multigraph& g) {
    std::set<std::pair<int, int>> seen;
    for (const auto& e : g.edges)
        if (!seen.insert(e).second) return false;
    return true;
}

int component_count(const Multigraph& g) {
    if (g.n == 0) return 0;
    UnionFind uf(g.n);
    for (const auto& [a, b] : g.edges) uf.unite(a, b);
    return uf.components;
}

bool is_connected(const Multigraph& g) { return g.n >= 1 && component_count(g) == 1; }

std::vector<int> bridges(const Multigraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("bridges: graph must be connected");
    // Tarjan with edge ids, so parallel edges act as back edges for each other.
    std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (neighbor, edge id)
    for (int i = 0; i < g.m(); ++i) {
        adj[g.edges[i].first].emplace_back(g.edges[i].second, i);
        adj[g.edges[i].second].emplace_back(g.edges[i].first, i);
    }
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<int> result;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int in_edge) {
        disc[u] = low[u] = timer++;
        for (const auto& [v, id] : adj[u]) {
            if (id == in_edge) continue;
            if (disc[v] == -1) {
                dfs(v, id);
                low[u] = std::min(low[u], low[v]);
                if (low[v] > disc[u]) result.push_back(id);
            } else {
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    dfs(0, -1);
    std::sort(result.begin(), result.end());
    return result;
}

Int count_cutsets(const Multigraph& g, int i) {
    if (!is_connected(g)) throw std::invalid_argument("count_cutsets: graph must be connected");
    const int m = g.m();
    if (i < 0 || i > m) throw std::invalid_argument("count_cutsets: i out of range");
    if (i == 0) return Int(0);

    auto disconnected_without = [&](const std::vector<int>& removed) {
        UnionFind uf(g.n);
        size_t k = 0;
        for (int e = 0; e < m; ++e) {
            if (k < removed.size() && removed[k] == e) {
                ++k;
                continue;
            }
            uf.unite(g.edges[e].first, g.edges[e].second);
        }
        return uf.components > 1;
    };

    if (i == 1) {
        Int c(0);
        for (int e = 0; e < m; ++e)
            if (disconnected_without({e})) ++c;
        return c;
    }
    if (i == 2) {
        Int c(0);
        for (int e = 0; e < m; ++e)
            for (int f = e + 1; f < m; ++f)
                if (disconnected_without({e, f})) ++c;
        return c;
    }
    if (m > 24)
        throw std::invalid_argument("count_cutsets: m > 24 refused for i > 2 (exact enumeration only)");

    // Enumerate i-subsets in lexicographic order.
    std::vector<int> idx(i);
    for (int k = 0; k < i; ++k) idx[k] = k;
    Int c(0);
    while (true) {
        if (disconnected_without(idx)) ++c;
        int k = i - 1;
        while (k >= 0 && idx[k] == m - i + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < i; ++j) idx[j] = idx[j - 1] + 1;
    }
    return c;
}

Multigraph delete_edge(const Multigraph& g, int e) {
    if (e < 0 || e >= g.m()) throw std::invalid_argument("delete_edge: bad edge index");
    Multigraph out = g;
    out.edges.erase(out.edges.begin() + e);
    return out;
}

Multigraph contract_edge(const Multigraph& g, int e) {
    if (e < 0 || e >= g.m()) throw std::invalid_argument("contract_edge: bad edge index");
    const auto [a, b] = g.edges[e];  // a < b; b is merged into a and removed
    Multigraph out;
    out.n = g.n - 1;
    auto relabel = [&](int v) {
        if (v == b) v = a;
        return v > b ? v - 1 : v;
    };
    for (int i = 0; i < g.m(); ++i) {
        if (i == e) continue;
        int x = relabel(g.edges[i].first);
        int y = relabel(g.edges[i].second);
        if (x == y) continue;  // loop created by the contraction
        if (x > y) std::swap(x, y);
        out.edges.emplace_back(x, y);
    }
    return out;
}

Multigraph edge_substitute(const Multigraph& g, const Multigraph& h, Terminals uv) {
    check_vertex(uv.s, h.n, "edge_substitute");
    check_vertex(uv.t, h.n, "edge_substitute");
    if (uv.s == uv.t) throw std::invalid_argument("edge_substitute: u and v must differ");
    if (!is_connected(h)) throw std::invalid_argument("edge_substitute: gadget must be connected");

    Multigraph out;
    out.n = g.n + g.m() * (h.n - 2);
    int fresh = g.n;
    for (const auto& [a, b] : g.edges) {
        // u -> a, v -> b; interior vertices of h get fresh labels.
        std::vector<int> map(h.n, -1);
        map[uv.s] = a;
        map[uv.t] = b;
        for (int w = 0; w < h.n; ++w)
            if (map[w] == -1) map[w] = fresh++;
        for (const auto& [x, y] : h.edges) out.add_edge(map[x], map[y]);
    }
    return out;
}

// --- families ---------------------------------------------------------------

FamilyGraph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    Multigraph g;
    g.n = n;
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return {g, std::nullopt, "cycle:" + std::to_string(n)};
}

FamilyGraph make_bundle(int k) {
    if (k < 1) throw std::invalid_argument("bundle: need k >= 1");
    Multigraph g;
    g.n = 2;
    for (int i = 0; i < k; ++i) g.add_edge(0, 1);
    return {g, Terminals{0, 1}, "bundle:" + std::to_string(k)};
}

FamilyGraph make_path(int n) {
    if (n < 2) throw std::invalid_argument("path: need n >= 2");
    Multigraph g;
    g.n = n;
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return {g, Terminals{0, n - 1}, "path:" + std::to_string(n)};
}

FamilyGraph make_complete(int n) {
    if (n < 2) throw std::invalid_argument("complete: need n >= 2");
    Multigraph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return {g, std::nullopt, "complete:" + std::to_string(n)};
}

FamilyGraph make_theta(int l1, int l2, int l3) {
    if (!(1 <= l1 && l1 <= l2 && l2 <= l3))
        throw std::invalid_argument("theta: need 1 <= l1 <= l2 <= l3");
    Multigraph g;
    g.n = l1 + l2 + l3 - 1;
    int fresh = 2;  // hubs are 0 and 1
    for (int len : {l1, l2, l3}) {
        int prev = 0;
        for (int step = 1; step < len; ++step) {
            g.add_edge(prev, fresh);
            prev = fresh++;
        }
        g.add_edge(prev, 1);
    }
    return {g, Terminals{0, 1},
            "theta:" + std::to_string(l1) + "," + std::to_string(l2) + "," + std::to_string(l3)};
}

FamilyGraph make_hk_gadget(int eta, int k) {
    if (eta < 3 || k < 1 || k > eta - 2)
        throw std::invalid_argument("hk: need eta >= 3 and 1 <= k <= eta-2");
    Multigraph g;
    const int triangles = eta - 1 - k;
    g.n = eta + triangles;
    int fresh = eta;
    for (int i = 0; i + 1 < eta; ++i) {
        g.add_edge(i, i + 1);
        if (i < triangles) {  // the leading edges carry the triangles
            g.add_edge(i, fresh);
            g.add_edge(i + 1, fresh);
            ++fresh;
        }
    }
    return {g, Terminals{0, eta - 1}, "hk:" + std::to_string(eta) + "," + std::to_string(k)};
}

FamilyGraph make_k4_minus_e() {
    Multigraph g;
    g.n = 4;
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    return {g, Terminals{0, 1}, "k4me"};
}

FamilyGraph make_erdos_renyi(int n, double rho, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("er: need n >= 1");
    if (rho < 0.0 || rho > 1.0) throw std::invalid_argument("er: need rho in [0,1]");
    Multigraph g;
    g.n = n;
    SplitMix64 rng = trial_stream(seed, 0);
    sample_gnp_edges(g, rho, rng);
    std::ostringstream name;
    name << "er:" << n << "," << rho << "," << seed;
    return {g, std::nullopt, name.str()};
}

FamilySpec parse_family_spec(const std::string& text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    std::vector<std::string> parts;
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::istringstream is(rest);
        std::string tok;
        while (std::getline(is, tok, ',')) parts.push_back(tok);
    }
    auto want = [&](size_t k) {
        if (parts.size() != k)
            throw std::invalid_argument("family spec '" + text + "': wrong parameter count");
    };
    auto num = [&](size_t i) {
        size_t pos = 0;
        int v = std::stoi(parts[i], &pos);
        if (pos != parts[i].size())
            throw std::invalid_argument("family spec '" + text + "': bad integer");
        return v;
    };
    FamilySpec s;
    if (name == "cycle") {
        s.kind = FamilySpec::Kind::cycle;
        want(1);
        s.a = num(0);
    } else if (name == "bundle") {
        s.kind = FamilySpec::Kind::bundle;
        want(1);
        s.a = num(0);
    } else if (name == "path" || name == "tree") {
        s.kind = FamilySpec::Kind::path;
        want(1);
        s.a = num(0);
    } else if (name == "complete") {
        s.kind = FamilySpec::Kind::complete;
        want(1);
        s.a = num(0);
    } else if (name == "theta") {
        s.kind = FamilySpec::Kind::theta;
        want(3);
        s.a = num(0);
        s.b = num(1);
        s.c = num(2);
    } else if (name == "hk") {
        s.kind = FamilySpec::Kind::hk;
        want(2);
        s.a = num(0);
        s.b = num(1);
    } else if (name == "k4me") {
        s.kind = FamilySpec::Kind::k4_minus_e;
        want(0);
    } else if (name == "er") {
        s.kind = FamilySpec::Kind::erdos_renyi;
        want(3);
        s.a = num(0);
        s.rho = std::stod(parts[1]);
        s.seed = std::stoull(parts[2]);
    } else {
        throw std::invalid_argument("unknown family '" + name + "'");
    }
    return s;
}

std::string family_spec_to_string(const FamilySpec& spec) {
    return make_family(spec).name;
}

FamilyGraph make_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::cycle:
            return make_cycle(spec.a);
        case FamilySpec::Kind::bundle:
            return make_bundle(spec.a);
        case FamilySpec::Kind::path:
            return make_path(spec.a);
        case FamilySpec::Kind::complete:
            return make_complete(spec.a);
        case FamilySpec::Kind::theta:
            return make_theta(spec.a, spec.b, spec.c);
        case FamilySpec::Kind::hk:
            return make_hk_gadget(spec.a, spec.b);
        case FamilySpec::Kind::k4_minus_e:
            return make_k4_minus_e();
        case FamilySpec::Kind::erdos_renyi:
            return make_erdos_renyi(spec.a, spec.rho, spec.seed);
    }
    throw std::logic_error("make_family: unreachable");
}

// --- text formats ------------------------------------------------------------

Multigraph parse_edge_list(const std::string& text) {
    std::istringstream is(text);
    long n = 0, m = 0;
    if (!(is >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    if (n < 1) throw std::invalid_argument("edge list: need n >= 1");
    if (m < 0) throw std::invalid_argument("edge list: need m >= 0");
    Multigraph g;
    g.n = static_cast<int>(n);
    for (long i = 0; i < m; ++i) {
        long a = 0, b = 0;
        if (!(is >> a >> b)) throw std::invalid_argument("edge list: fewer than m edge lines");
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge list: endpoint out of range");
        if (a == b) throw std::invalid_argument("edge list: loops are forbidden");
        g.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
    std::string leftover;
    if (is >> leftover) throw std::invalid_argument("edge list: trailing data after m edges");
    return g;
}

std::string to_edge_list(const Multigraph& g) {
    std::ostringstream os;
    os << g.n << " " << g.m() << "\n";
    for (const auto& [a, b] : g.edges) os << a << " " << b << "\n";
    return os.str();
}

Multigraph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    for (char c : s)
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid character");
    if (s[0] == 126) throw std::invalid_argument("graph6: only short form (n <= 62) is supported");
    const int n = s[0] - 63;
    Multigraph g;
    g.n = n;
    const long bits = static_cast<long>(n) * (n - 1) / 2;
    const long need = (bits + 5) / 6;
    if (static_cast<long>(s.size()) - 1 != need)
        throw std::invalid_argument("graph6: truncated or oversized bit field");
    long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = s[1 + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string to_graph6(const Multigraph& g) {
    if (g.n > 62) throw std::invalid_argument("graph6: only short form (n <= 62) is supported");
    if (!is_simple(g)) throw std::invalid_argument("graph6: graph must be simple");
    std::set<std::pair<int, int>> es(g.edges.begin(), g.edges.end());
    std::string s(1, static_cast<char>(g.n + 63));
    int bit = 5, byte = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (es.count({i, j})) byte |= 1 << bit;
            if (--bit < 0) {
                s.push_back(static_cast<char>(byte + 63));
                bit = 5;
                byte = 0;
            }
        }
    }
    if (bit != 5) s.push_back(static_cast<char>(byte + 63));
    return s;
}

}  // namespace relroots
