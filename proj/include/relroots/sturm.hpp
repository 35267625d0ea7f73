#ifndef RELROOTS_STURM_HPP
#define RELROOTS_STURM_HPP

#include <complex>
#include <vector>

#include "relroots/ratpoly.hpp"

namespace relroots {

/// Sturm sequence f0 = f, f1 = f', f_i = -rem(f_{i-2}, f_{i-1}), ending at the
/// last nonzero term. Degrees strictly decrease.
struct SturmSeq {
    std::vector<RatPoly> polys;
};

SturmSeq sturm_sequence(const RatPoly& f);  // requires deg f >= 1

int sign_variations(const SturmSeq& s, const XRat& x);

/// Number of distinct real roots of squarefree_part(f) in (a, b].
long count_distinct_real_roots(const RatPoly& f, const XRat& a, const XRat& b);
long count_distinct_real_roots(const RatPoly& f);  // over (-inf, +inf)

/// True iff every complex root of f is real. Decided on the squarefree part
/// (the classical criterion below mishandles repeated roots). Constants count
/// as real-rooted; the zero polynomial is rejected.
bool is_real_rooted(const RatPoly& f);

/// The textbook criterion: all Sturm-sequence leading coefficients positive
/// and no degree gaps. Valid verdict only for squarefree f with positive
/// leading coefficient; kept as an independent second route.
bool sturm_positivity_criterion(const RatPoly& f);

/// Strict bound B with every root satisfying |z| < B.
Rat cauchy_root_bound(const RatPoly& f);

/// One distinct real root per entry. lo == hi means the root is exactly that
/// rational; otherwise the root lies strictly inside (lo, hi) and hi - lo is
/// at most the requested width.
struct IsolatedRoot {
    Rat lo, hi;
    int multiplicity = 1;
    bool is_exact() const { return lo == hi; }
    Rat mid() const { return (lo + hi) / 2; }
    double approx() const { return rat_to_double(mid()); }
};

/// Disjoint isolating intervals of width <= eps, sorted increasing, one per
/// distinct real root of f, with multiplicities from the Yun decomposition.
std::vector<IsolatedRoot> isolate_real_roots(const RatPoly& f, const Rat& eps);

/// All rational roots of f (each listed once, sorted increasing).
std::vector<Rat> rational_roots(const RatPoly& f);

/// The unique rational with smallest denominator in [lo, hi].
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

/// Real-root analysis bundle: exact isolating intervals plus floating
/// approximations of the nonreal conjugate pairs (upper-half-plane
/// representative only). Built by analyze_roots() in complex_roots.hpp.
struct RootReport {
    std::vector<IsolatedRoot> real_roots;
    long n_distinct_real = 0;
    bool real_rooted = false;
    std::vector<std::complex<double>> complex_pairs;
    Rat epsilon;
};

}  // namespace relroots

#endif
