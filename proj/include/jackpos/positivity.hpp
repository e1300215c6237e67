#pragma once

#include "jackpos/partition.hpp"
#include "jackpos/ratfun.hpp"
#include "jackpos/report.hpp"
#include "jackpos/sympoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jackpos {

/// P_lambda(x+1; t) / P_lambda(1; t) = sum_nu coeffs[nu] P_nu(x; t) / P_nu(1; t).
struct ShiftedExpansion {
    Partition shape;
    int nvars = 0;
    CoeffMap coeffs;
};

// Shift, normalize, and expand in the Jack basis by back-substitution. Uses
// only the Gram-Schmidt Jack polynomials, never the interpolation module.
const ShiftedExpansion& shifted_expansion(const Partition& lambda, int n);

// Coefficientwise shifted_expansion(lambda) - shifted_expansion(mu); zero
// entries are dropped.
CoeffMap difference_expansion(const Partition& lambda, const Partition& mu, int n);

// Every coefficient lies in F>=0.
bool is_jack_positive(const CoeffMap& diff);

// s_lambda(x+1)/s_lambda(1) in the basis s_nu(x)/s_nu(1), computed from the
// bialternant Schur polynomials. Coefficients are rational numbers.
std::map<Partition, Rational, PartitionOrder> schur_shifted_expansion(const Partition& lambda, int n);

/// A specialization point for t: a nonnegative rational or infinity.
struct TauValue {
    bool infinite = false;
    Rational value;

    static TauValue inf() { return {true, 0}; }
    std::string to_string() const;
    friend bool operator==(const TauValue&, const TauValue&) = default;
};

// "inf" or a nonnegative rational such as "1/2". Throws ParseError.
TauValue parse_tau(std::string_view s);
// Comma-separated list of parse_tau tokens.
std::vector<TauValue> parse_tau_list(std::string_view s);

// Sweeps for thm1 use the finite values {0, 1/2, 1, 2}.
std::vector<TauValue> default_thm1_taus();
// The Jack probes add infinity.
std::vector<TauValue> default_probe_taus();

/// Product grid values^n translated by `shift` in every coordinate.
struct Grid {
    std::vector<Rational> values;
    Rational shift = 0;

    Grid shifted(const Rational& by) const { return Grid{values, shift + by}; }
    std::size_t size(int n) const;
    std::vector<std::vector<Rational>> points(int n) const;
    nlohmann::json describe(int n) const;
};

// {0, 1/4, 1/2, 1, 2, 5}
Grid basic_grid();
// 15 values from 0 to 50, a superset of basic_grid (225 points for n = 2).
Grid dense_grid();
// "basic", "dense", or a comma-separated list of nonnegative rationals.
Grid parse_grid(std::string_view s);

// f_lambda(x)/f_lambda(1) - f_mu(x)/f_mu(1) in the monomial basis, where f
// is m, e_{lambda'}, p, s or P(x; t) according to `kind`. Throws
// UnsupportedRange when a normalizing value would vanish (length > n).
SymPoly normalized_difference(Basis kind, const Partition& lambda, const Partition& mu, int n);

// Evaluates normalized_difference exactly at every grid point, with t
// specialized to tau0 for kind = jack (infinity takes the e_{lambda'}
// path). Fails on any negative value. A sampling probe, not a proof.
VerificationReport numeric_eval_check(Basis kind, const Partition& lambda, const Partition& mu, int n,
                                      const std::optional<TauValue>& tau0, const Grid& grid);

// Expands p_lambda(x+1)/p_lambda(1) - p_mu(x+1)/p_mu(1) in the power sums
// (p_0 = n) and tests every coefficient for nonnegativity. Requires both
// sizes <= n, else UnsupportedRange.
std::map<Partition, Rational, PartitionOrder> powersum_difference(const Partition& lambda, const Partition& mu,
                                                                  int n);
bool powersum_characterization(const Partition& lambda, const Partition& mu, int n);

// Greedy nu with lambda containing nu and nu dominating mu; nullopt when
// lambda does not weakly dominate mu.
std::optional<Partition> interpolating_partition(const Partition& lambda, const Partition& mu);

// All sweeps range over partitions of size <= d and length <= n, merge
// results in pair order, and run on `threads` workers (0 = all cores).

// contains(lambda, mu) <=> Jack positivity, symbolically and at each tau,
// plus the independent Schur pipeline at t = 1.
VerificationReport verify_thm1(int d, int n, const std::vector<TauValue>& taus = default_thm1_taus(),
                               unsigned threads = 0);
// shifted_expansion coefficients equal interpolation binomials.
VerificationReport verify_binomial_formula(int d, int n, unsigned threads = 0);
// powersum_characterization <=> containment; needs d <= n.
VerificationReport verify_powersum(int d, int n, unsigned threads = 0);
// Dominance pairs for m, e', p, s on the grid.
VerificationReport verify_cgs(int d, int n, const Grid& grid, unsigned threads = 0);
// Weak dominance pairs for m, e', p, s on the grid shifted by 1.
VerificationReport verify_kt(int d, int n, const Grid& grid, unsigned threads = 0);
// Both legs of the decomposition through an interpolating nu.
VerificationReport verify_corKT(int d, int n, const Grid& grid, unsigned threads = 0);
// Jack probes at each tau; dominance pairs on the grid.
VerificationReport verify_conj_cgs(int d, int n, const std::vector<TauValue>& taus, const Grid& grid,
                                   unsigned threads = 0);
// Jack probes at each tau; weak dominance pairs on the grid shifted by 1.
VerificationReport verify_conj_kt(int d, int n, const std::vector<TauValue>& taus, const Grid& grid,
                                  unsigned threads = 0);

}  // namespace jackpos
