#ifndef RELROOTS_RELIABILITY_HPP
#define RELROOTS_RELIABILITY_HPP

#include <vector>

#include "relroots/graph.hpp"
#include "relroots/ratpoly.hpp"

namespace relroots {

/// Oracle: sum over connected spanning edge subsets E' of
/// (1-q)^|E'| q^(m-|E'|), by direct enumeration. Requires m <= 24.
RatPoly reliability_bruteforce(const Multigraph& g);

/// All-terminal reliability polynomial via deletion-contraction with
/// bridge / parallel-bundle / series reductions and memoization. Each edge
/// carries an (operational, failed) polynomial weight pair so bundle and
/// series collapses stay inside one representation. Equals
/// reliability_bruteforce wherever both are defined. No shared state:
/// every call owns its memo table, so concurrent calls are safe.
RatPoly reliability(const Multigraph& g);

/// rel / (1-q)^(n-1), the H-polynomial h(q). Exact division; an inexact
/// division signals an engine bug and raises std::logic_error.
RatPoly h_polynomial(const Multigraph& g);
RatPoly h_from_reliability(const RatPoly& rel, int n);

/// One reliability polynomial in three bases plus the derived cutset counts.
struct RelForms {
    int n = 0, m = 0, d = 0;
    RatPoly rel;
    std::vector<Int> F;  // F_0..F_d
    std::vector<Int> H;  // H_0..H_d
    std::vector<Int> c;  // c_0..c_m (derived: C(m,i) - F_i for i <= d, C(m,i) above)
};

RelForms forms(const Multigraph& g);

/// Test hook: recompute every c_i by direct cutset enumeration (m <= 24) and
/// compare with the derived values. Throws std::logic_error on mismatch.
void crosscheck_cutsets(const RelForms& forms_value, const Multigraph& g);

/// H_2 = C(m,2) - c2 - (d-1)(n-1) - C(d,2). Requires d >= 2. Valid against
/// forms().H[2] for graphs with c1 = 0.
Rat h2_formula(int n, int m, int d, const Int& c2);

/// Probability the operational subgraph has exactly two components with s
/// and t separated. Brute force; requires m <= 24 and s != t.
RatPoly split_reliability(const Multigraph& g, Terminals st);

/// q(1-q)^(2*eta-k-3) (1+2q)^(eta-k-2) (k + 2(eta-1) q), expanded.
RatPoly hk_split_closed_form(int eta, int k);

/// Reliability of K_n via the component-of-vertex-1 recursion
/// P_n = 1 - sum_{k=1}^{n-1} C(n-1,k-1) P_k q^{k(n-k)}. Requires 2 <= n <= 14.
RatPoly complete_graph_reliability(int n);

}  // namespace relroots

#endif
