#ifndef RELROOTS_ROOTLAB_HPP
#define RELROOTS_ROOTLAB_HPP

#include <optional>
#include <string>
#include <vector>

#include "relroots/complex_roots.hpp"
#include "relroots/graph.hpp"
#include "relroots/reliability.hpp"
#include "relroots/sturm.hpp"

namespace relroots {

/// Root analysis of Rel(G) = (1-q)^(n-1) h(q): the forced root q = 1 is
/// reported with its multiplicity, the rest is the full report on h.
/// real_rooted refers to h.
struct RelRootsReport {
    int q_one_multiplicity = 0;
    RatPoly h;
    RootReport h_report;
};

RelRootsReport reliability_roots(const Multigraph& g, const Rat& eps);

enum class CertVerdict { certified_nonreal, inconclusive, not_applicable };

std::string to_string(CertVerdict v);

/// Nonreal-root certificate: d >= 2, c1 = 0 and c2 < m(n-1)/(2d) force a
/// nonreal root of h. f2_lead is the leading coefficient
/// ((2*c2 - n + 1)m - 2*c2*(n-1)) / d^2 of the third Sturm term of the
/// reversed H-polynomial; the certified verdict is equivalent to it being
/// negative.
struct Certificate {
    int n = 0, m = 0, d = 0;
    std::optional<Int> c1, c2;
    std::optional<Rat> bound, f2_lead;
    CertVerdict verdict = CertVerdict::not_applicable;
};

Certificate certify_nonreal(const Multigraph& g);

/// Exact evaluation of "l1 <= l2 + l3 - 2 sqrt(l2 l3)" via
/// 4 l2 l3 <= (l2 + l3 - l1)^2; equality counts as real-rooted.
bool theta_real_rooted(int l1, int l2, int l3);

/// poly = splitRel(H; u,v) - s * Rel(H), all exact.
struct GadgetEquation {
    Multigraph h;
    Terminals uv;
    Rat s;
    RatPoly split_rel, rel, poly;
};

GadgetEquation gadget_equation(const Multigraph& h, Terminals uv, const Rat& s);

/// Checks that every root of the gadget equation at s = r/(1-r) (r a rational
/// reliability root of gbase, auto-extracted) is a root of
/// Rel(gbase[H]) * Rel(H): exact gcd degree equality on squarefree parts.
bool verify_substitution_theorem(const Multigraph& gbase, const Multigraph& h, Terminals uv);

/// The closed-form radical for beta, the defining cubic 8q^3+5q^2+2q+1, and
/// its Sturm-isolated unique real root.
struct BetaResult {
    long double value = 0.0L;
    RatPoly cubic;
    IsolatedRoot root;
};

BetaResult beta();

/// One traced point of the K4-e branch: the real solution of
/// s(-4q^3+q^2+2q+1) - 6q^3 - 2q^2 = 0 continuing from q(-1/2) = beta.
struct BranchPoint {
    Rat s;
    IsolatedRoot root;
    double q = 0.0;
    double residual = 0.0;
    int n_real_roots = 0;  // real-root count of the cubic at this s
};

/// Requires -1/2 <= s_lo < s_hi <= -3/20. Emits steps+1 points; the branch is
/// always anchored at beta via an internal pre-trace when s_lo > -1/2.
/// Throws when adjacent points jump by more than a step-scaled threshold.
std::vector<BranchPoint> k4e_branch(const Rat& s_lo, const Rat& s_hi, int steps);

/// Constructive witness for a reliability root near `target`.
/// For target in [-1/2, -delta]: a cycle substitution of an H_{eta,k} gadget,
/// verified unconditionally by isolating the root of the substituted graph's
/// own H-polynomial. For target in (beta+delta, -1/2): the K4-e gadget with
/// the branch-inverted s, flagged conditional (imports the substitution
/// identity and density of s).
struct RootSynthesis {
    Multigraph graph;
    std::string construction;
    IsolatedRoot root;
    bool conditional = false;
    bool verified = false;  // root isolated on the explicit graph itself
    Rat target, eps;
    double achieved_gap = 0.0;
    int eta = 0, k = 0, cycle_n = 0;
    std::optional<Rat> s;
};

RootSynthesis synthesize_root_near(const Rat& target, const Rat& eps);

}  // namespace relroots

#endif
