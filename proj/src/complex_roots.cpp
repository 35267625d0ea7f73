#include "relroots/complex_roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relroots {

namespace {

using Cplx = std::complex<double>;

Cplx eval_monic(const std::vector<Cplx>& a, const Cplx& z) {
    // a holds coefficients a_0..a_{d-1} of the monic polynomial.
    Cplx acc(1.0, 0.0);
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double eval_abs_sum(const std::vector<Cplx>& a, double r) {
    double acc = 1.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
}

}  // namespace

long real_root_count_with_multiplicity(const RatPoly& f) {
    if (f.is_zero()) throw std::domain_error("real_root_count_with_multiplicity: zero polynomial");
    long total = 0;
    std::vector<RatPoly> factors = squarefree_decomposition(f);
    for (size_t k = 0; k < factors.size(); ++k) {
        if (factors[k].degree() < 1) continue;
        total += static_cast<long>(k + 1) * count_distinct_real_roots(factors[k]);
    }
    return total;
}

std::vector<std::complex<double>> complex_roots(const RatPoly& f, double eps, int max_iter) {
    if (f.is_zero()) throw std::domain_error("complex_roots: zero polynomial");
    std::vector<Cplx> roots;
    RatPoly g = f;

    // Exact roots at zero come off first; Durand-Kerner then works on g.
    int zeros = 0;
    while (g.degree() >= 1 && g.coeff(0) == 0) {
        std::vector<Rat> shifted(g.coeffs().begin() + 1, g.coeffs().end());
        g = RatPoly(std::move(shifted));
        ++zeros;
    }
    const int d = g.degree();
    if (d >= 1) {
        std::vector<Cplx> a(d);  // monic coefficients a_0..a_{d-1}
        for (int i = 0; i < d; ++i) a[i] = Cplx(Rat(g.coeff(i) / g.leading()).get_d(), 0.0);

        if (d == 1) {
            roots.push_back(-a[0]);
        } else {
            double radius = 1.0;
            for (const Cplx& c : a) radius = std::max(radius, 1.0 + std::abs(c));
            std::vector<Cplx> z(d);
            for (int k = 0; k < d; ++k) {
                double ang = 2.0 * M_PI * k / d + 0.4;
                z[k] = radius * Cplx(std::cos(ang), std::sin(ang));
            }
            bool converged = false;
            for (int it = 0; it < max_iter && !converged; ++it) {
                double maxstep = 0.0;
                for (int i = 0; i < d; ++i) {
                    Cplx denom(1.0, 0.0);
                    for (int j = 0; j < d; ++j)
                        if (j != i) denom *= (z[i] - z[j]);
                    if (denom == Cplx(0.0, 0.0)) {
                        z[i] += Cplx(1e-8, 1e-8);
                        maxstep = 1.0;
                        continue;
                    }
                    Cplx w = eval_monic(a, z[i]) / denom;
                    z[i] -= w;
                    maxstep = std::max(maxstep, std::abs(w) / (1.0 + std::abs(z[i])));
                }
                if (maxstep < 1e-15) {
                    converged = true;
                    for (int i = 0; i < d && converged; ++i) {
                        double scale = eval_abs_sum(a, std::abs(z[i]));
                        if (std::abs(eval_monic(a, z[i])) > eps * scale) converged = false;
                    }
                }
            }
            if (!converged) {
                // Stalled steps can still mean converged residuals; check once more.
                bool ok = true;
                for (int i = 0; i < d && ok; ++i) {
                    double scale = eval_abs_sum(a, std::abs(z[i]));
                    if (std::abs(eval_monic(a, z[i])) > eps * scale) ok = false;
                }
                if (!ok)
                    throw std::runtime_error(
                        "complex_roots: Durand-Kerner did not reach the residual target within the "
                        "iteration cap");
            }
            roots.insert(roots.end(), z.begin(), z.end());
        }
    }
    for (int i = 0; i < zeros; ++i) roots.emplace_back(0.0, 0.0);

    // Conjugate symmetry: the exact real count says how many outputs are real.
    long n_real = real_root_count_with_multiplicity(f);
    std::sort(roots.begin(), roots.end(), [](const Cplx& x, const Cplx& y) {
        if (std::abs(x.imag()) != std::abs(y.imag())) return std::abs(x.imag()) < std::abs(y.imag());
        return x.real() < y.real();
    });
    for (long i = 0; i < n_real && i < static_cast<long>(roots.size()); ++i)
        roots[i] = Cplx(roots[i].real(), 0.0);
    std::vector<Cplx> rest(roots.begin() + n_real, roots.end());
    roots.resize(n_real);
    // Pair off the remaining roots with their conjugates and average them.
    std::vector<bool> used(rest.size(), false);
    for (size_t i = 0; i < rest.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        size_t best = rest.size();
        double bestdist = 0.0;
        for (size_t j = 0; j < rest.size(); ++j) {
            if (used[j]) continue;
            double dist = std::abs(std::conj(rest[i]) - rest[j]);
            if (best == rest.size() || dist < bestdist) {
                best = j;
                bestdist = dist;
            }
        }
        if (best == rest.size()) {
            roots.push_back(rest[i]);  // odd leftover; should not happen for real input
            continue;
        }
        used[best] = true;
        Cplx u = (rest[i] + std::conj(rest[best])) / 2.0;
        if (u.imag() < 0) u = std::conj(u);
        roots.push_back(u);
        roots.push_back(std::conj(u));
    }
    std::sort(roots.begin(), roots.end(), [](const Cplx& x, const Cplx& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return roots;
}

RootReport analyze_roots(const RatPoly& f, const Rat& eps) {
    if (f.is_zero()) throw std::domain_error("analyze_roots: zero polynomial");
    RootReport rep;
    rep.epsilon = eps;
    rep.real_roots = isolate_real_roots(f, eps);
    rep.n_distinct_real = static_cast<long>(rep.real_roots.size());
    long with_mult = 0;
    for (const IsolatedRoot& r : rep.real_roots) with_mult += r.multiplicity;
    const long pairs = (f.degree() - with_mult) / 2;
    rep.real_rooted = (pairs == 0);
    if (pairs > 0) {
        auto all = complex_roots(f, rat_to_double(eps));
        // Keep the nonreal ones: drop the `with_mult` entries closest to the
        // real axis, then keep upper-half-plane representatives.
        std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
            return std::abs(x.imag()) > std::abs(y.imag());
        });
        all.resize(2 * pairs);
        rep.complex_pairs.clear();
        for (const auto& z : all)
            if (z.imag() > 0) rep.complex_pairs.push_back(z);
        std::sort(rep.complex_pairs.begin(), rep.complex_pairs.end(),
                  [](const auto& x, const auto& y) {
                      if (x.real() != y.real()) return x.real() < y.real();
                      return x.imag() < y.imag();
                  });
    }
    return rep;
}

}  // namespace relroots
