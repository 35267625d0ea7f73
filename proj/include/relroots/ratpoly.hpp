#ifndef RELROOTS_RATPOLY_HPP
#define RELROOTS_RATPOLY_HPP

#include <complex>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "relroots/rational.hpp"

namespace relroots {

/// Dense univariate polynomial over Q; coefficient index = power of q.
/// Coefficients are kept in lowest terms (mpq canonical form) and the vector
/// carries no trailing zeros. The zero polynomial is the empty vector and
/// reports degree() == -1 (stand-in for degree -infinity).
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    RatPoly(std::initializer_list<long> ints);

    static RatPoly constant(const Rat& c);
    static RatPoly variable();  // q
    static RatPoly monomial(const Rat& c, int power);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& leading() const;
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat operator()(const Rat& x) const;
    std::complex<double> eval(const std::complex<double>& z) const;
    int sign_at(const Rat& x) const;
    int sign_at(const XRat& x) const;  // sign at +/-infinity from the leading coefficient

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);
    RatPoly& operator*=(const Rat& c);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
    friend RatPoly operator*(RatPoly a, const Rat& c) { return a *= c; }
    friend RatPoly operator*(const Rat& c, RatPoly a) { return a *= c; }

    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }

    std::string str(const std::string& var = "q") const;

private:
    std::vector<Rat> coeffs_;
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const RatPoly& p);

/// Euclidean division over Q: f = quot * g + rem with deg rem < deg g.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g);
RatPoly remainder(const RatPoly& f, const RatPoly& g);
/// Exact quotient; throws std::domain_error when g does not divide f.
RatPoly exact_div(const RatPoly& f, const RatPoly& g);
RatPoly derivative(const RatPoly& f);
/// Monic gcd; gcd(f, 0) = monic f, gcd(0, 0) = 0.
RatPoly poly_gcd(const RatPoly& f, const RatPoly& g);
/// f / gcd(f, f'), scaled so |leading| = 1 with the sign of f's leading coefficient.
RatPoly squarefree_part(const RatPoly& f);
/// Yun decomposition: returns monic squarefree g_1, g_2, ... with
/// f = leading(f) * prod_i g_i^i; trailing entries may be the constant 1.
std::vector<RatPoly> squarefree_decomposition(const RatPoly& f);
/// Coefficient reversal q^deg(f) * f(1/q); throws on the zero polynomial.
RatPoly reverse(const RatPoly& f);
RatPoly poly_pow(const RatPoly& f, unsigned k);
/// (1-q)^k, used all over the reliability forms.
RatPoly one_minus_q_pow(unsigned k);

}  // namespace relroots

#endif
