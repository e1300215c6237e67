#pragma once

#include "jackpos/mpoly.hpp"
#include "jackpos/partition.hpp"
#include "jackpos/ratfun.hpp"

#include <map>
#include "json.hpp"
#include <string>
#include <vector>

namespace jackpos {

enum class Basis { monomial, elementary, powersum, schur, jack };

const char* to_string(Basis b);
Basis parse_basis(std::string_view s);

using CoeffMap = std::map<Partition, RatFun, PartitionOrder>;

/// Symmetric polynomial in `nvars` variables over Q(t), stored as the
/// coefficients of one basis. Keys have length <= nvars; zero coefficients
/// are never stored. Jack-basis coefficients refer to P_lambda(x; t) with t
/// the global indeterminate.
class SymPoly {
public:
    SymPoly(int nvars = 0, Basis basis = Basis::monomial) : nvars_(nvars), basis_(basis) {}

    int nvars() const { return nvars_; }
    Basis basis() const { return basis_; }
    const CoeffMap& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Highest |lambda| with a nonzero coefficient; -1 for zero.
    int degree() const;
    RatFun coeff(const Partition& lambda) const;

    // Throws UnsupportedRange if the key does not fit n variables: length > n,
    // or lambda_1 > n for the elementary basis. Power-sum keys are unrestricted.
    void add_term(const Partition& lambda, const RatFun& c);

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    SymPoly& operator*=(const RatFun& s);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(SymPoly a, const RatFun& s) { return a *= s; }
    friend bool operator==(const SymPoly&, const SymPoly&) = default;

    // "m(3,2) + (-t-4)*m(2,2) + ..." in the fixed partition order.
    std::string to_string() const;

private:
    int nvars_;
    Basis basis_;
    CoeffMap coeffs_;
};

// {"n": n, "basis": tag, "terms": [{"partition": [..], "coeff": "<ratfun>"}]}
nlohmann::json to_json(const SymPoly& f);
SymPoly sympoly_from_json(const nlohmann::json& j);

// Single basis element m/e/p/s/P_lambda in n variables, tagged with its
// basis. e_lambda with lambda_1 > n and m/s/P_lambda with length > n are 0.
SymPoly basis_element(Basis tag, const Partition& lambda, int n);

// Monomial expansion of the basis element (zero polynomial allowed).
const SymPoly& monomial_expansion(Basis tag, const Partition& lambda, int n);

// s_lambda via the bialternant a_{lambda+delta} / a_delta, in the monomial basis.
SymPoly schur(const Partition& lambda, int n);

// Monic Jack P_lambda(x; t) in the monomial basis. Built by Gram-Schmidt in
// max(n, |lambda|) variables with the t-deformed Hall product, then
// truncated to n variables.
SymPoly jack(const Partition& lambda, int n);

// Change of basis through the monomial basis. Throws UnsupportedRange for a
// power-sum source or target when deg f > nvars.
SymPoly convert(const SymPoly& f, Basis target);

// Reads a symmetric polynomial off its coefficients at partition exponents.
// The input is assumed symmetric; nothing else is inspected.
SymPoly collect_symmetric(const MPoly<RatFun>& p);

// Product, returned in the monomial basis.
SymPoly multiply(const SymPoly& f, const SymPoly& g);

// <p_lambda, p_mu> = delta z_lambda, extended bilinearly. deg f, g <= n.
RatFun hall_inner(const SymPoly& f, const SymPoly& g);
// <p_lambda, p_mu>_t = delta z_lambda t^{-l(lambda)}.
RatFun hall_inner_tau(const SymPoly& f, const SymPoly& g);

// P_lambda(1, ..., 1; t) from the product over cells.
RatFun principal_spec_jack(const Partition& lambda, int n);

// f(x_1 + 1, ..., x_n + 1), in the monomial basis.
SymPoly shift_vars(const SymPoly& f);

// Exact evaluation at a point with n coordinates.
RatFun evaluate(const SymPoly& f, const std::vector<RatFun>& point);
RatFun evaluate(const SymPoly& f, const std::vector<TauPoly>& point);
Rational evaluate(const std::map<Partition, Rational, PartitionOrder>& f, int nvars,
                  const std::vector<Rational>& point);

// Coefficients specialized at t = t0 (throws PoleError at a pole).
std::map<Partition, Rational, PartitionOrder> specialize(const SymPoly& f, const Rational& t0);

// Coefficientwise limit t -> inf; throws UnsupportedRange if any diverges.
std::map<Partition, Rational, PartitionOrder> limit_coefficients(const SymPoly& f);

// m_kappa(x + 1) = sum_rho c_rho m_rho(x) in n variables.
const std::map<Partition, Integer, PartitionOrder>& shifted_monomial(const Partition& kappa, int n);

}  // namespace jackpos
