#include <doctest.h>

#include <cmath>

#include "relroots/complex_roots.hpp"
#include "relroots/rng.hpp"
#include "relroots/sturm.hpp"

using namespace relroots;

namespace {

bool contains(const IsolatedRoot& r, const Rat& x) { return r.lo <= x && x <= r.hi; }

// Random product of distinct linear factors and irreducible quadratics, with
// the factor counts returned so tests know the truth.
RatPoly random_factored(SplitMix64& rng, int& real_count, int& pair_count) {
    real_count = 0;
    pair_count = 0;
    RatPoly f = RatPoly::constant(Rat(1));
    std::vector<Rat> used;
    int nlin = 1 + static_cast<int>(rng.next_below(3));
    for (int i = 0; i < nlin; ++i) {
        Rat root = make_rat(static_cast<long>(rng.next_below(19)) - 9,
                            static_cast<long>(1 + rng.next_below(4)));
        bool dup = false;
        for (const Rat& u : used) dup = dup || (u == root);
        if (dup) continue;
        used.push_back(root);
        f *= RatPoly(std::vector<Rat>{-root, Rat(1)});
        ++real_count;
    }
    int nquad = static_cast<int>(rng.next_below(3));
    for (int i = 0; i < nquad; ++i) {
        // (q - a)^2 + b^2 with b != 0 has a strictly complex pair.
        Rat a = Rat(static_cast<long>(rng.next_below(9)) - 4);
        Rat b = Rat(static_cast<long>(1 + rng.next_below(4)));
        f *= RatPoly(std::vector<Rat>{a * a + b * b, -2 * a, Rat(1)});
        ++pair_count;
    }
    return f;
}

}  // namespace

TEST_CASE("Sturm sequence textbook cases") {
    SturmSeq s = sturm_sequence(RatPoly{-1, 0, 1});  // q^2 - 1
    REQUIRE(s.polys.size() == 3);
    CHECK(s.polys[0] == RatPoly{-1, 0, 1});
    CHECK(s.polys[1] == RatPoly{0, 2});
    CHECK(s.polys[2] == RatPoly{1});

    s = sturm_sequence(RatPoly{1, 0, 1});  // q^2 + 1
    REQUIRE(s.polys.size() == 3);
    CHECK(s.polys[2] == RatPoly{-1});

    // Reversal of h for Theta(1,2,2): the third term has negative lead.
    s = sturm_sequence(RatPoly{4, 3, 1});
    REQUIRE(s.polys.size() == 3);
    CHECK(s.polys[2].leading() < 0);

    CHECK_THROWS_AS(sturm_sequence(RatPoly{3}), std::invalid_argument);
}

TEST_CASE("distinct real root counting") {
    CHECK(count_distinct_real_roots(RatPoly{1, 0, 1}) == 0);
    CHECK(count_distinct_real_roots(RatPoly{1, 4, 4}) == 1);  // double root counted once
    CHECK(count_distinct_real_roots(RatPoly{1, 3, 4}) == 0);  // negative discriminant

    // (q-1)(q-2)(q-3) over (1, 3]: half-open semantics.
    RatPoly f = RatPoly{-1, 1} * RatPoly{-2, 1} * RatPoly{-3, 1};
    CHECK(count_distinct_real_roots(f, Rat(1), Rat(3)) == 2);
    CHECK(count_distinct_real_roots(f, Rat(0), Rat(1)) == 1);
    CHECK(count_distinct_real_roots(f, XRat::neg_inf(), XRat::pos_inf()) == 3);
    CHECK_THROWS_AS(count_distinct_real_roots(f, Rat(3), Rat(1)), std::invalid_argument);
}

TEST_CASE("real-rootedness verdicts") {
    CHECK(is_real_rooted(RatPoly{1, 4, 4}));        // (1+2q)^2
    CHECK_FALSE(is_real_rooted(RatPoly{1, 3, 4}));  // conjugate pair
    for (int n = 2; n <= 9; ++n) CHECK(is_real_rooted(RatPoly{1, n - 1}));
    CHECK(is_real_rooted(RatPoly{7}));
    CHECK_THROWS_AS(is_real_rooted(RatPoly()), std::domain_error);
}

TEST_CASE("positivity criterion agrees with sign variation on squarefree inputs") {
    SplitMix64 rng{99};
    int checked = 0;
    for (int i = 0; i < 120; ++i) {
        int nr = 0, np = 0;
        RatPoly f = random_factored(rng, nr, np);
        RatPoly sf = squarefree_part(f);
        if (sf.degree() < 1) continue;
        if (sf.leading() < 0) sf *= Rat(-1);
        CHECK(sturm_positivity_criterion(sf) == is_real_rooted(sf));
        CHECK(is_real_rooted(sf) == (np == 0));
        ++checked;
    }
    CHECK(checked > 60);
}

TEST_CASE("isolation: sample roots from the operation contract") {
    auto roots = isolate_real_roots(RatPoly{1, 2}, make_rat(1, 1024));
    REQUIRE(roots.size() == 1);
    CHECK(contains(roots[0], make_rat(-1, 2)));
    CHECK(roots[0].hi - roots[0].lo <= make_rat(1, 1024));

    // beta's cubic: one real root at -0.570720298118725...
    roots = isolate_real_roots(RatPoly{1, 2, 5, 8}, make_rat(1, 10000000000L));
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0].approx() - (-0.5707202981)) < 1e-9);

    // (1-q)^3: exact triple root at 1.
    roots = isolate_real_roots(poly_pow(RatPoly{1, -1}, 3), make_rat(1, 32));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].is_exact());
    CHECK(roots[0].lo == 1);
    CHECK(roots[0].multiplicity == 3);
}

TEST_CASE("isolation: disjoint intervals, multiplicities add up") {
    SplitMix64 rng{4242};
    for (int i = 0; i < 60; ++i) {
        int nr = 0, np = 0;
        RatPoly f = random_factored(rng, nr, np);
        auto iso = isolate_real_roots(f, make_rat(1, 4096));
        CHECK(static_cast<int>(iso.size()) == nr);
        long mult = 0;
        for (const auto& r : iso) mult += r.multiplicity;
        CHECK(mult + 2 * np == f.degree());
        for (size_t k = 1; k < iso.size(); ++k) CHECK(iso[k - 1].hi < iso[k].lo);
        CHECK(count_distinct_real_roots(f) == static_cast<long>(iso.size()));
    }
}

TEST_CASE("isolation: repeated factors get the right multiplicity") {
    RatPoly f = poly_pow(RatPoly{1, 2}, 2) * poly_pow(RatPoly{-1, 1}, 3) * RatPoly{1, 0, 1};
    auto iso = isolate_real_roots(f, make_rat(1, 1024));
    REQUIRE(iso.size() == 2);
    CHECK(contains(iso[0], make_rat(-1, 2)));
    CHECK(iso[0].multiplicity == 2);
    CHECK(contains(iso[1], Rat(1)));
    CHECK(iso[1].multiplicity == 3);
}

TEST_CASE("simplest rational in an interval") {
    CHECK(simplest_rational_between(make_rat(1, 3), make_rat(1, 2)) == make_rat(1, 2));
    CHECK(simplest_rational_between(make_rat(3, 10), make_rat(17, 50)) == make_rat(1, 3));
    CHECK(simplest_rational_between(make_rat(-2, 3), make_rat(-1, 2)) == make_rat(-1, 2));
    CHECK(simplest_rational_between(Rat(2), Rat(3)) == Rat(2));
    CHECK(simplest_rational_between(make_rat(5, 3), make_rat(7, 3)) == Rat(2));
    CHECK(simplest_rational_between(make_rat(-1, 7), make_rat(1, 9)) == Rat(0));
}

TEST_CASE("rational root extraction") {
    RatPoly f = RatPoly(std::vector<Rat>{make_rat(1, 1), Rat(4)});  // 1 + 4q
    auto r = rational_roots(f);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == make_rat(-1, 4));

    f = RatPoly{1, 2} * RatPoly{1, 3} * RatPoly{1, -1};
    r = rational_roots(f);
    REQUIRE(r.size() == 3);
    CHECK(r[0] == make_rat(-1, 2));
    CHECK(r[1] == make_rat(-1, 3));
    CHECK(r[2] == Rat(1));

    CHECK(rational_roots(RatPoly{-2, 0, 1}).empty());  // q^2 - 2

    f = RatPoly{-2, 0, 1} * RatPoly{5, 1};
    r = rational_roots(f);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == Rat(-5));

    // Root at zero.
    f = RatPoly{0, 1} * RatPoly{-3, 1};
    r = rational_roots(f);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == Rat(0));
    CHECK(r[1] == Rat(3));
}

TEST_CASE("complex roots: fixed small cases") {
    auto r = complex_roots(RatPoly{1, 0, 1});
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0] - std::complex<double>(0, -1)) < 1e-9);
    CHECK(std::abs(r[1] - std::complex<double>(0, 1)) < 1e-9);

    r = complex_roots(RatPoly{1, 0, 0, -1});  // 1 - q^3
    REQUIRE(r.size() == 3);
    for (const auto& z : r) CHECK(std::abs(std::abs(z) - 1.0) < 1e-9);
    int reals = 0;
    for (const auto& z : r)
        if (z.imag() == 0.0) ++reals;
    CHECK(reals == 1);

    r = complex_roots(RatPoly{1, 3, 4});
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0].real() - (-0.375)) < 1e-9);
    CHECK(std::abs(std::abs(r[0].imag()) - std::sqrt(7.0) / 8.0) < 1e-9);

    CHECK_THROWS_AS(complex_roots(RatPoly()), std::domain_error);
}

TEST_CASE("complex roots: reversal maps roots to reciprocals") {
    SplitMix64 rng{555};
    for (int i = 0; i < 20; ++i) {
        int nr = 0, np = 0;
        RatPoly f = random_factored(rng, nr, np);
        if (f.coeff(0) == 0 || f.degree() < 1) continue;
        auto orig = complex_roots(f, 1e-11);
        auto rev = complex_roots(reverse(f), 1e-11);
        REQUIRE(orig.size() == rev.size());
        // Every reversed root must be the reciprocal of some original root.
        for (const auto& z : rev) {
            double best = 1e9;
            for (const auto& w : orig) best = std::min(best, std::abs(z - 1.0 / w));
            CHECK(best < 1e-6);
        }
    }
}

TEST_CASE("analyze_roots ties the counts together") {
    RootReport rep = analyze_roots(RatPoly{1, 4, 4}, make_rat(1, 1 << 20));
    CHECK(rep.real_rooted);
    CHECK(rep.n_distinct_real == 1);
    CHECK(rep.complex_pairs.empty());

    rep = analyze_roots(RatPoly{1, 3, 4}, make_rat(1, 1 << 20));
    CHECK_FALSE(rep.real_rooted);
    CHECK(rep.n_distinct_real == 0);
    REQUIRE(rep.complex_pairs.size() == 1);
    CHECK(rep.complex_pairs[0].imag() > 0);
    CHECK(std::abs(rep.complex_pairs[0].real() - (-0.375)) < 1e-9);

    // Mixed: (1+2q)^2 (q-1)^3 (q^2+1); degree 7 = 2 + 3 + 2.
    RatPoly f = poly_pow(RatPoly{1, 2}, 2) * poly_pow(RatPoly{-1, 1}, 3) * RatPoly{1, 0, 1};
    rep = analyze_roots(f, make_rat(1, 1 << 20));
    CHECK_FALSE(rep.real_rooted);
    CHECK(rep.n_distinct_real == 2);
    REQUIRE(rep.complex_pairs.size() == 1);
    long mult = 0;
    for (const auto& r : rep.real_roots) mult += r.multiplicity;
    CHECK(mult + 2 * static_cast<long>(rep.complex_pairs.size()) == f.degree());
}
