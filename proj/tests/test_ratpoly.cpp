#include <doctest.h>

#include "relroots/ratpoly.hpp"
#include "relroots/rng.hpp"

using namespace relroots;

namespace {

RatPoly random_poly(SplitMix64& rng, int max_deg, long coeff_range) {
    int deg = static_cast<int>(rng.next_below(max_deg + 1));
    std::vector<Rat> c(deg + 1);
    for (auto& x : c)
        x = Rat(static_cast<long>(rng.next_below(2 * coeff_range + 1)) - coeff_range);
    return RatPoly(std::move(c));
}

}  // namespace

TEST_CASE("ring operations match the worked examples") {
    RatPoly one_minus_q{1, -1};
    RatPoly one_plus_q{1, 1};
    CHECK(one_minus_q * one_plus_q == RatPoly{1, 0, -1});
    CHECK(exact_div(RatPoly{1, 0, -1}, one_minus_q) == one_plus_q);
    CHECK_THROWS_AS(exact_div(RatPoly{1, 0, 1}, one_minus_q), std::domain_error);
    CHECK_THROWS_AS(divmod(one_plus_q, RatPoly()), std::domain_error);
}

TEST_CASE("degree bookkeeping") {
    CHECK(RatPoly().degree() == -1);
    CHECK(RatPoly().is_zero());
    CHECK(RatPoly{0}.is_zero());
    CHECK(RatPoly{5}.degree() == 0);
    CHECK(RatPoly{0, 0, 3}.degree() == 2);
    CHECK(RatPoly{1, 2}.coeff(7) == 0);
    CHECK_THROWS_AS(RatPoly().leading(), std::domain_error);
}

TEST_CASE("derivative, gcd, squarefree part") {
    CHECK(derivative(RatPoly{1, 3, 4}) == RatPoly{3, 8});
    CHECK(derivative(RatPoly{42}) == RatPoly());

    // (1+2q)^2 against its derivative: monic gcd is q + 1/2.
    RatPoly sq{1, 4, 4};
    RatPoly expected_gcd(std::vector<Rat>{make_rat(1, 2), Rat(1)});
    CHECK(poly_gcd(sq, RatPoly{2, 4}) == expected_gcd);
    CHECK(squarefree_part(sq) == expected_gcd);

    // Leading-sign convention: squarefree part keeps f's sign.
    RatPoly neg = -sq;
    CHECK(squarefree_part(neg).leading() == -1);
}

TEST_CASE("reversal") {
    CHECK(reverse(RatPoly{1, 3, 4}) == RatPoly{4, 3, 1});
    CHECK(reverse(RatPoly{5}) == RatPoly{5});
    CHECK(reverse(RatPoly{0, 0, 1}) == RatPoly{1});
    CHECK_THROWS_AS(reverse(RatPoly()), std::domain_error);

    SplitMix64 rng{2024};
    for (int i = 0; i < 50; ++i) {
        RatPoly f = random_poly(rng, 6, 9);
        if (f.is_zero() || f.coeff(0) == 0) continue;
        CHECK(reverse(reverse(f)) == f);
    }
}

TEST_CASE("Yun decomposition recovers multiplicities") {
    // (1-q)^3: the only factor sits at multiplicity 3.
    RatPoly cube = poly_pow(RatPoly{1, -1}, 3);
    auto factors = squarefree_decomposition(cube);
    REQUIRE(factors.size() == 3);
    CHECK(factors[0].degree() == 0);
    CHECK(factors[1].degree() == 0);
    CHECK(factors[2] == RatPoly{-1, 1});  // monic q - 1

    // (q+2)^2 (q-1) (q^2+1)
    RatPoly f = poly_pow(RatPoly{2, 1}, 2) * RatPoly{-1, 1} * RatPoly{1, 0, 1};
    factors = squarefree_decomposition(f);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0] == RatPoly{-1, 1} * RatPoly{1, 0, 1});
    CHECK(factors[1] == RatPoly{2, 1});
}

TEST_CASE("divmod invariants on random inputs") {
    SplitMix64 rng{7};
    for (int i = 0; i < 200; ++i) {
        RatPoly f = random_poly(rng, 8, 12);
        RatPoly g = random_poly(rng, 5, 12);
        if (g.is_zero()) continue;
        auto [q, r] = divmod(f, g);
        CHECK(q * g + r == f);
        CHECK(r.degree() < g.degree());

        if (!f.is_zero()) {
            // gcd(f*g, f) is exactly monic f.
            RatPoly expect = f * Rat(1 / f.leading());
            CHECK(poly_gcd(f * g, f) == expect);
        }
    }
}

TEST_CASE("evaluation agrees with direct power sums") {
    SplitMix64 rng{13};
    for (int i = 0; i < 50; ++i) {
        RatPoly f = random_poly(rng, 7, 20);
        Rat x = make_rat(static_cast<long>(rng.next_below(21)) - 10,
                         static_cast<long>(1 + rng.next_below(7)));
        Rat direct(0), p(1);
        for (int k = 0; k <= f.degree(); ++k) {
            direct += f.coeff(k) * p;
            p *= x;
        }
        CHECK(f(x) == direct);
    }
}

TEST_CASE("string rendering") {
    CHECK(RatPoly{1, 3, 4}.str() == "1 + 3*q + 4*q^2");
    CHECK(RatPoly{-1, 0, 2}.str() == "-1 + 2*q^2");
    CHECK(RatPoly(std::vector<Rat>{make_rat(1, 2), Rat(-1)}).str() == "1/2 - q");
    CHECK(RatPoly().str() == "0");
}

TEST_CASE("rational helpers") {
    CHECK(make_rat(2, 6) == make_rat(1, 3));
    CHECK(rat_to_string(make_rat(-4, 6)) == "-2/3");
    CHECK(rat_from_string("-2/3") == make_rat(-2, 3));
    CHECK(rat_from_string("42") == Rat(42));
    CHECK_THROWS_AS(rat_from_string("x/y"), std::invalid_argument);
    CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(4, 7) == 0);
}
