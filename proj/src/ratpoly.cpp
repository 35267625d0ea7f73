#include "relroots/ratpoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace relroots {

RatPoly::RatPoly(std::initializer_list<long> ints) {
    coeffs_.reserve(ints.size());
    for (long v : ints) coeffs_.emplace_back(v);
    normalize();
}

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }

RatPoly RatPoly::variable() { return RatPoly{0, 1}; }

RatPoly RatPoly::monomial(const Rat& c, int power) {
    if (power < 0) throw std::invalid_argument("RatPoly::monomial: negative power");
    std::vector<Rat> v(power + 1, Rat(0));
    v[power] = c;
    return RatPoly(std::move(v));
}

void RatPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& RatPoly::leading() const {
    if (is_zero()) throw std::domain_error("RatPoly::leading: zero polynomial");
    return coeffs_.back();
}

Rat RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[i];
}

Rat RatPoly::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> RatPoly::eval(const std::complex<double>& z) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->get_d();
    return acc;
}

int RatPoly::sign_at(const Rat& x) const { return sgn((*this)(x)); }

int RatPoly::sign_at(const XRat& x) const {
    if (x.is_finite()) return sign_at(x.value());
    if (is_zero()) return 0;
    int lead = sgn(leading());
    if (x.kind() == XRat::Kind::pos_inf) return lead;
    return degree() % 2 == 0 ? lead : -lead;
}

RatPoly RatPoly::operator-() const {
    RatPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        const bool unit = (a == 1);
        if (i == 0 || !unit) {
            os << a.get_num().get_str();
            if (a.get_den() != 1) os << "/" << a.get_den().get_str();
        }
        if (i >= 1) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.str(); }

std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g) {
    if (g.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
    std::vector<Rat> rem(f.coeffs());
    const int dg = g.degree();
    const int df = f.degree();
    if (df < dg) return {RatPoly(), f};
    std::vector<Rat> quot(df - dg + 1, Rat(0));
    const Rat& lead = g.leading();
    for (int k = df - dg; k >= 0; --k) {
        Rat c = rem[k + dg] / lead;
        if (c == 0) continue;
        quot[k] = c;
        for (int j = 0; j <= dg; ++j) rem[k + j] -= c * g.coeff(j);
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly remainder(const RatPoly& f, const RatPoly& g) { return divmod(f, g).second; }

RatPoly exact_div(const RatPoly& f, const RatPoly& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw std::domain_error("exact_div: remainder is nonzero");
    return q;
}

RatPoly derivative(const RatPoly& f) {
    if (f.degree() < 1) return RatPoly();
    std::vector<Rat> out(f.degree(), Rat(0));
    for (int i = 1; i <= f.degree(); ++i) out[i - 1] = f.coeff(i) * Rat(i);
    return RatPoly(std::move(out));
}

RatPoly poly_gcd(const RatPoly& f, const RatPoly& g) {
    RatPoly a = f, b = g;
    while (!b.is_zero()) {
        RatPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * Rat(1 / a.leading());
}

RatPoly squarefree_part(const RatPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (f.degree() == 0) return RatPoly::constant(Rat(sgn(f.leading())));
    RatPoly g = poly_gcd(f, derivative(f));
    RatPoly sf = exact_div(f, g);
    // Scale so |leading| = 1 keeping f's leading sign.
    Rat scale = Rat(sgn(sf.leading())) / rat_abs(sf.leading());
    sf *= scale;
    if (sgn(sf.leading()) != sgn(f.leading())) sf *= Rat(-1);
    return sf;
}

std::vector<RatPoly> squarefree_decomposition(const RatPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
    std::vector<RatPoly> factors;
    if (f.degree() == 0) return factors;
    // Yun's algorithm over Q.
    RatPoly fm = f * Rat(1 / f.leading());
    RatPoly df = derivative(fm);
    RatPoly g = poly_gcd(fm, df);
    if (g.degree() == 0) {
        factors.push_back(fm);
        return factors;
    }
    RatPoly w = exact_div(fm, g);
    RatPoly y = exact_div(df, g);
    RatPoly z = y - derivative(w);
    while (true) {
        if (w.degree() == 0) break;
        RatPoly gi = poly_gcd(w, z);
        factors.push_back(gi);
        w = exact_div(w, gi);
        y = exact_div(z, gi);
        z = y - derivative(w);
    }
    return factors;
}

RatPoly reverse(const RatPoly& f) {
    if (f.is_zero()) throw std::domain_error("reverse: zero polynomial");
    std::vector<Rat> out(f.coeffs().rbegin(), f.coeffs().rend());
    return RatPoly(std::move(out));
}

RatPoly poly_pow(const RatPoly& f, unsigned k) {
    RatPoly acc = RatPoly::constant(Rat(1));
    RatPoly base = f;
    while (k > 0) {
        if (k & 1u) acc *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return acc;
}

RatPoly one_minus_q_pow(unsigned k) { return poly_pow(RatPoly{1, -1}, k); }

}  // namespace relroots
