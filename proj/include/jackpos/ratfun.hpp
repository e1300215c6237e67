#pragma once

#include "jackpos/tau_poly.hpp"

#include <string>
#include <string_view>

namespace jackpos {

/// An element of Q(t), kept as num/den with gcd(num, den) = 1 and den monic.
/// Zero is 0/1.
class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(const TauPoly& p) : num_(p), den_(1) {}  // NOLINT
    RatFun(const Rational& c) : num_(c), den_(1) {}  // NOLINT
    RatFun(long c) : RatFun(Rational(c)) {}          // NOLINT
    RatFun(int c) : RatFun(Rational(c)) {}           // NOLINT
    // Throws DivisionByZero if den is zero.
    RatFun(const TauPoly& num, const TauPoly& den);

    static RatFun t() { return RatFun(TauPoly::t()); }

    const TauPoly& num() const { return num_; }
    const TauPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.degree() == 0 && num_ == TauPoly(1); }
    bool is_polynomial() const { return den_.degree() == 0; }
    // Value as a rational when the function is constant.
    bool is_constant() const { return is_polynomial() && num_.is_constant(); }
    Rational constant_value() const;

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);

    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend bool operator==(const RatFun&, const RatFun&) = default;

    RatFun inverse() const;

    // "(2*t+2)/(t+2)": numerator and denominator scaled by one common
    // positive rational so that all coefficients are coprime integers.
    // The denominator is omitted when it clears to 1.
    std::string to_string() const;
    // Integer-cleared numerator and denominator as used by table exports.
    std::pair<TauPoly, TauPoly> cleared() const;

private:
    void canonicalize();
    TauPoly num_;
    TauPoly den_;
};

RatFun parse_ratfun(std::string_view text);

enum class Op { add, sub, mul, div };
RatFun ratfun_arith(const RatFun& a, const RatFun& b, Op op);

// f(t0). Throws PoleError if den(t0) = 0.
Rational eval_at(const RatFun& f, const Rational& t0);

struct Limit {
    enum class Kind { finite, plus_infinity, minus_infinity };
    Kind kind = Kind::finite;
    Rational value;  // meaningful for finite limits only

    bool is_finite() const { return kind == Kind::finite; }
    friend bool operator==(const Limit&, const Limit&) = default;
};

// lim_{t -> +inf} f(t).
Limit limit_at_infinity(const RatFun& f);

std::string to_string(const Limit& l);

}  // namespace jackpos
