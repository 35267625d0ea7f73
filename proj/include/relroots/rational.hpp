#ifndef RELROOTS_RATIONAL_HPP
#define RELROOTS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace relroots {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class's two-argument constructor does not canonicalize; these always do.
inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

// Accepts "num/den" or a bare integer, e.g. "-3/7", "42".
inline Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return make_rat(std::move(num), std::move(den));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
    }
}

// Canonical "num/den" form, denominator always spelled out ("3/1", "-1/2").
inline std::string rat_to_string(const Rat& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline double rat_to_double(const Rat& x) { return x.get_d(); }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// A rational extended with the two infinities, used for interval endpoints.
class XRat {
public:
    enum class Kind { neg_inf, finite, pos_inf };

    XRat() = default;
    XRat(Rat v) : kind_(Kind::finite), value_(std::move(v)) {}  // NOLINT: implicit by design
    XRat(long v) : XRat(Rat(v)) {}                              // NOLINT

    static XRat neg_inf() { return XRat(Kind::neg_inf); }
    static XRat pos_inf() { return XRat(Kind::pos_inf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    const Rat& value() const {
        if (!is_finite()) throw std::logic_error("XRat: value() on infinity");
        return value_;
    }

    bool operator<(const XRat& o) const {
        if (kind_ != o.kind_) return static_cast<int>(kind_) < static_cast<int>(o.kind_);
        return kind_ == Kind::finite && value_ < o.value_;
    }

private:
    explicit XRat(Kind k) : kind_(k) {}
    Kind kind_ = Kind::finite;
    Rat value_;
};

}  // namespace relroots

#endif
