#include "relroots/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace relroots {

SturmSeq sturm_sequence(const RatPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("sturm_sequence: degree must be >= 1");
    SturmSeq s;
    s.polys.push_back(f);
    s.polys.push_back(derivative(f));
    while (true) {
        const RatPoly& a = s.polys[s.polys.size() - 2];
        const RatPoly& b = s.polys[s.polys.size() - 1];
        RatPoly r = remainder(a, b);
        if (r.is_zero()) break;
        s.polys.push_back(-r);
    }
    return s;
}

int sign_variations(const SturmSeq& s, const XRat& x) {
    int count = 0;
    int prev = 0;
    for (const RatPoly& p : s.polys) {
        int sg = p.sign_at(x);
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++count;
        prev = sg;
    }
    return count;
}

long count_distinct_real_roots(const RatPoly& f, const XRat& a, const XRat& b) {
    if (f.is_zero()) throw std::domain_error("count_distinct_real_roots: zero polynomial");
    if (!(a < b)) throw std::invalid_argument("count_distinct_real_roots: need a < b");
    RatPoly sf = squarefree_part(f);
    if (sf.degree() < 1) return 0;
    SturmSeq s = sturm_sequence(sf);
    return sign_variations(s, a) - sign_variations(s, b);
}

long count_distinct_real_roots(const RatPoly& f) {
    return count_distinct_real_roots(f, XRat::neg_inf(), XRat::pos_inf());
}

bool is_real_rooted(const RatPoly& f) {
    if (f.is_zero()) throw std::domain_error("is_real_rooted: zero polynomial");
    if (f.degree() == 0) return true;
    RatPoly sf = squarefree_part(f);
    return count_distinct_real_roots(sf) == sf.degree();
}

bool sturm_positivity_criterion(const RatPoly& f) {
    if (f.is_zero()) throw std::domain_error("sturm_positivity_criterion: zero polynomial");
    if (f.degree() == 0) return true;
    SturmSeq s = sturm_sequence(f);
    int expected = f.degree();
    for (const RatPoly& p : s.polys) {
        if (p.degree() != expected) return false;  // degree gap
        if (sgn(p.leading()) <= 0) return false;
        --expected;
    }
    return expected == -1;  // sequence ran all the way down to a constant
}

Rat cauchy_root_bound(const RatPoly& f) {
    if (f.degree() < 1) return Rat(1);
    Rat maxratio(0);
    for (int i = 0; i < f.degree(); ++i) {
        Rat r = rat_abs(f.coeff(i)) / rat_abs(f.leading());
        if (r > maxratio) maxratio = r;
    }
    return Rat(1) + maxratio;
}

namespace {

// Roots of the squarefree polynomial behind `chain` in (lo, hi], refined to
// one-root intervals. Produces exact points when a bisection midpoint (or the
// right endpoint) hits a root.
struct Isolator {
    const RatPoly& sf;
    const SturmSeq& chain;
    std::vector<IsolatedRoot> found;

    int var(const Rat& x) const { return sign_variations(chain, XRat(x)); }

    void refine_single(Rat lo, Rat hi, int vlo, int vhi, const Rat& eps) {
        while (hi - lo > eps) {
            Rat m = (lo + hi) / 2;
            if (sf(m) == 0) {
                found.push_back({m, m, 1});
                return;
            }
            int vm = var(m);
            if (vlo - vm == 1) {
                hi = m;
                vhi = vm;
            } else {
                lo = m;
                vlo = vm;
            }
        }
        if (sf(hi) == 0) {
            found.push_back({hi, hi, 1});
        } else {
            found.push_back({lo, hi, 1});
        }
        (void)vhi;
    }

    void split(const Rat& lo, const Rat& hi, int vlo, int vhi, const Rat& eps) {
        long cnt = vlo - vhi;
        if (cnt <= 0) return;
        if (cnt == 1) {
            refine_single(lo, hi, vlo, vhi, eps);
            return;
        }
        Rat m = (lo + hi) / 2;
        if (sf(m) == 0) {
            found.push_back({m, m, 1});
            // Carve a gap below m so the exact point owns (m-delta, m].
            Rat delta = (m - lo) / 2;
            int vleft = var(m - delta);
            int vm = var(m);
            while (vleft - vm > 1) {
                delta /= 2;
                vleft = var(m - delta);
            }
            split(lo, m - delta, vlo, vleft, eps);
            split(m, hi, vm, vhi, eps);
        } else {
            int vm = var(m);
            split(lo, m, vlo, vm, eps);
            split(m, hi, vm, vhi, eps);
        }
    }

    // Shrink a non-exact interval until its left endpoint moves past `x`.
    void detach_from(IsolatedRoot& r, const Rat& x) {
        while (!r.is_exact() && r.lo == x) {
            Rat m = (r.lo + r.hi) / 2;
            if (sf(m) == 0) {
                r.lo = r.hi = m;
                return;
            }
            if (var(r.lo) - var(m) == 1) {
                r.hi = m;
            } else {
                r.lo = m;
            }
        }
    }
};

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const RatPoly& f, const Rat& eps) {
    if (f.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
    if (!(eps > 0)) throw std::invalid_argument("isolate_real_roots: eps must be positive");
    RatPoly sf = squarefree_part(f);
    std::vector<IsolatedRoot> out;
    if (sf.degree() < 1) return out;

    SturmSeq chain = sturm_sequence(sf);
    Rat b = cauchy_root_bound(sf);
    Isolator iso{sf, chain, {}};
    iso.split(-b, b, iso.var(-b), iso.var(b), eps);
    out = std::move(iso.found);
    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& c) { return a.lo < c.lo; });

    // Closed intervals must be pairwise disjoint; separate shared endpoints.
    for (size_t i = 1; i < out.size(); ++i) {
        if (out[i].lo == out[i - 1].hi) iso.detach_from(out[i], out[i - 1].hi);
    }

    // Multiplicities via the Yun decomposition: the root belongs to exactly
    // one squarefree factor.
    std::vector<RatPoly> factors = squarefree_decomposition(f);
    std::vector<SturmSeq> factor_chains(factors.size());
    std::vector<bool> have_chain(factors.size(), false);
    for (IsolatedRoot& r : out) {
        int mult = 1;
        for (size_t k = 0; k < factors.size(); ++k) {
            const RatPoly& g = factors[k];
            if (g.degree() < 1) continue;
            bool hit = false;
            if (r.is_exact()) {
                hit = (g(r.lo) == 0);
            } else {
                if (!have_chain[k]) {
                    factor_chains[k] = sturm_sequence(g);
                    have_chain[k] = true;
                }
                hit = (sign_variations(factor_chains[k], XRat(r.lo)) -
                           sign_variations(factor_chains[k], XRat(r.hi)) ==
                       1);
            }
            if (hit) {
                mult = static_cast<int>(k) + 1;
                break;
            }
        }
        r.multiplicity = mult;
    }
    return out;
}

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_rational_between: lo > hi");
    if (lo == hi) return lo;
    if (lo <= 0 && 0 <= hi) return Rat(0);
    if (hi < 0) return -simplest_rational_between(-hi, -lo);
    // 0 < lo < hi: continued-fraction descent.
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    Rat flr(fl);
    if (lo == flr) return lo;
    if (hi >= flr + 1) return flr + 1;
    Rat inner = simplest_rational_between(1 / (hi - flr), 1 / (lo - flr));
    return flr + 1 / inner;
}

std::vector<Rat> rational_roots(const RatPoly& f) {
    if (f.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    std::vector<Rat> roots;
    RatPoly sf = squarefree_part(f);
    if (sf.degree() < 1) return roots;

    // Primitive integer form of sf: any rational root p/s in lowest terms has
    // s dividing the leading coefficient.
    Int den_lcm(1);
    for (const Rat& c : sf.coeffs()) {
        Int d = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Rat> scaled;
    scaled.reserve(sf.coeffs().size());
    for (const Rat& c : sf.coeffs()) scaled.push_back(c * Rat(den_lcm));
    Int content(0);
    for (const Rat& c : scaled) {
        Int n = c.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
    Int lead_int = abs(Int(scaled.back().get_num() / content));

    SturmSeq chain = sturm_sequence(sf);
    for (const IsolatedRoot& r0 : isolate_real_roots(sf, make_rat(1, 16))) {
        if (r0.is_exact()) {
            roots.push_back(r0.lo);
            continue;
        }
        Rat lo = r0.lo, hi = r0.hi;
        for (int guard = 0; guard < 100000; ++guard) {
            Rat cand = simplest_rational_between(lo, hi);
            if (sf(cand) == 0) {
                roots.push_back(cand);
                break;
            }
            if (cand.get_den() > lead_int) break;  // no rational root in here
            Rat m = (lo + hi) / 2;
            if (sf(m) == 0) {
                roots.push_back(m);
                break;
            }
            if (sign_variations(chain, XRat(lo)) - sign_variations(chain, XRat(m)) == 1) {
                hi = m;
            } else {
                lo = m;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace relroots
