#ifndef RELROOTS_GRAPH_HPP
#define RELROOTS_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relroots/rational.hpp"

namespace relroots {

/// Multigraph on dense vertex labels 0..n-1. Edges are an explicit multiset
/// of unordered pairs (stored with a < b); loops are forbidden. Edge indices
/// are stable handles for delete/contract.
struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int m() const { return static_cast<int>(edges.size()); }
    int corank() const { return m() - n + 1; }  // meaningful for connected graphs
    void add_edge(int a, int b);
    bool has_edge(int a, int b) const;  // at least one copy
};

struct Terminals {
    int s = 0;
    int t = 1;
};

bool is_simple(const Multigraph& g);
int component_count(const Multigraph& g);
bool is_connected(const Multigraph& g);

/// Indices of edges whose individual removal disconnects G. Parallel edges
/// are never bridges. Throws on disconnected input.
std::vector<int> bridges(const Multigraph& g);

/// Number of i-edge subsets whose removal disconnects G. Direct enumeration;
/// i <= 2 is allowed for any m (pair scan), larger i requires m <= 24.
Int count_cutsets(const Multigraph& g, int i);

Multigraph delete_edge(const Multigraph& g, int e);
/// Merges the endpoints of edge e, drops the loops this creates, keeps
/// parallel edges, and relabels vertices densely.
Multigraph contract_edge(const Multigraph& g, int e);

/// Replaces every edge {a,b} of g (a < b) by a fresh copy of h with u -> a,
/// v -> b. h must be connected and u != v.
Multigraph edge_substitute(const Multigraph& g, const Multigraph& h, Terminals uv);

// --- families ---------------------------------------------------------------

struct FamilySpec {
    enum class Kind { cycle, bundle, path, complete, theta, hk, k4_minus_e, erdos_renyi };
    Kind kind = Kind::cycle;
    int a = 0, b = 0, c = 0;  // cycle/bundle/path/complete use a; theta uses a,b,c; hk uses a,b
    double rho = 0.0;
    std::uint64_t seed = 0;
};

/// Parses inline specs like "cycle:5", "theta:1,2,2", "hk:4,2", "k4me",
/// "er:10,0.5,7".
FamilySpec parse_family_spec(const std::string& text);
std::string family_spec_to_string(const FamilySpec& spec);

struct FamilyGraph {
    Multigraph graph;
    std::optional<Terminals> terminals;
    std::string name;
};

FamilyGraph make_family(const FamilySpec& spec);
FamilyGraph make_cycle(int n);
FamilyGraph make_bundle(int k);
FamilyGraph make_path(int n);
FamilyGraph make_complete(int n);
FamilyGraph make_theta(int l1, int l2, int l3);
/// Path of order eta with the first eta-1-k edges replaced by triangles;
/// terminals are the path endpoints.
FamilyGraph make_hk_gadget(int eta, int k);
FamilyGraph make_k4_minus_e();
FamilyGraph make_erdos_renyi(int n, double rho, std::uint64_t seed);

// --- text formats ------------------------------------------------------------

/// "n m" header then m lines "a b"; repeated lines make parallel edges.
Multigraph parse_edge_list(const std::string& text);
std::string to_edge_list(const Multigraph& g);

/// graph6 short form (order <= 62), simple graphs.
Multigraph parse_graph6(const std::string& text);
std::string to_graph6(const Multigraph& g);

}  // namespace relroots

#endif
