#ifndef RELROOTS_COMPLEX_ROOTS_HPP
#define RELROOTS_COMPLEX_ROOTS_HPP

#include <complex>
#include <vector>

#include "relroots/ratpoly.hpp"
#include "relroots/sturm.hpp"

namespace relroots {

/// All complex roots of f to residual |f(z)| <= eps * sum_i |a_i||z|^i, via
/// Durand-Kerner with a fixed, documented start: points on the circle of
/// radius (1 + max|a_i/a_d|) at angles 2*pi*k/deg + 0.4. Conjugate symmetry
/// is enforced on output (the exact Sturm real-root count decides how many
/// outputs are pinned to the real axis). Throws std::runtime_error when the
/// iteration cap is reached without meeting the residual target.
std::vector<std::complex<double>> complex_roots(const RatPoly& f, double eps = 1e-12,
                                                int max_iter = 10000);

/// Number of real roots counted with multiplicity (exact).
long real_root_count_with_multiplicity(const RatPoly& f);

/// Full real/complex root analysis of f: exact isolating intervals with
/// multiplicities, plus one floating representative per nonreal conjugate
/// pair. The solver only runs when nonreal roots actually exist.
RootReport analyze_roots(const RatPoly& f, const Rat& eps);

}  // namespace relroots

#endif
