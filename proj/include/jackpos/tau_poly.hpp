#pragma once

#include "jackpos/rational.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jackpos {

/// Univariate polynomial in the Jack parameter t with rational coefficients.
///
/// coeffs()[k] is the coefficient of t^k. The highest stored coefficient is
/// nonzero; the zero polynomial has no coefficients and degree -1.
class TauPoly {
public:
    TauPoly() = default;
    TauPoly(std::initializer_list<Rational> coeffs);
    explicit TauPoly(std::vector<Rational> coeffs);
    TauPoly(const Rational& c);  // NOLINT: constants convert implicitly
    TauPoly(long c) : TauPoly(Rational(c)) {}  // NOLINT
    TauPoly(int c) : TauPoly(Rational(c)) {}   // NOLINT

    static TauPoly t() { return TauPoly{0, 1}; }
    static TauPoly monomial(const Rational& c, int power);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational coeff(int k) const;
    Rational leading() const;
    // Lowest k with a nonzero coefficient; 0 for the zero polynomial.
    int valuation() const;

    Rational eval(const Rational& t0) const;
    TauPoly derivative() const;
    TauPoly monic() const;
    // Drops the factor t^valuation().
    TauPoly strip_t_powers() const;

    TauPoly operator-() const;
    TauPoly& operator+=(const TauPoly& o);
    TauPoly& operator-=(const TauPoly& o);
    TauPoly& operator*=(const TauPoly& o);
    TauPoly& operator*=(const Rational& c);

    friend TauPoly operator+(TauPoly a, const TauPoly& b) { return a += b; }
    friend TauPoly operator-(TauPoly a, const TauPoly& b) { return a -= b; }
    friend TauPoly operator*(const TauPoly& a, const TauPoly& b);
    friend TauPoly operator*(TauPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const TauPoly&, const TauPoly&) = default;

    // Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<TauPoly, TauPoly> divmod(const TauPoly& a, const TauPoly& b);
    // Monic gcd over Q; gcd(0, 0) = 0.
    static TauPoly gcd(const TauPoly& a, const TauPoly& b);

    // Smallest positive rational c such that c * p has coprime integer
    // coefficients (c = 1 for the zero polynomial).
    Rational integer_clearing_factor() const;

    // Text such as "2*t^2-t+3", in the variable `var`; "0" for zero.
    std::string to_string(std::string_view var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Parses a polynomial in t, e.g. "2*t^2-t+3/2", "-t", "(t+2)".
TauPoly parse_tau_poly(std::string_view text);

}  // namespace jackpos
