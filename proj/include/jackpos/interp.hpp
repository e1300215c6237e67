#pragma once

#include "jackpos/partition.hpp"
#include "jackpos/ratfun.hpp"
#include "jackpos/report.hpp"
#include "jackpos/sympoly.hpp"

#include <string>
#include <vector>

namespace jackpos {

enum class Normalization { unital, monic };

/// Interpolation (shifted) Jack polynomial h_mu in n variables: the unique
/// symmetric polynomial of degree |mu| with h_mu(lambda-bar) = delta for all
/// |lambda| <= |mu|, scaled either to value 1 at mu-bar (unital) or to
/// coefficient 1 on m_mu (monic).
struct InterpPoly {
    SymPoly poly;  // monomial basis, inhomogeneous
    Partition shape;
    int nvars = 0;
    Normalization normalization = Normalization::unital;
};

// Solves the square interpolation system over Q(t). Unknowns are monomial
// coefficients indexed by enumerate_partitions(|mu|, n), one equation per
// node lambda-bar with |lambda| <= |mu|. Throws InvariantViolation if the
// system is singular.
InterpPoly interp_linear(const Partition& mu, int n, Normalization norm);

// Monic h_mu from the reverse-tableau sum
//   sum_T psi_T prod_s (x_{T(s)} - (a'(s) + (n - T(s) - l'(s)) t)).
InterpPoly interp_tableau(const Partition& mu, int n);

// binom(lambda, mu)_t = h_mu(lambda-bar) with h_mu unital.
RatFun binomial(const Partition& lambda, const Partition& mu, int n);

// H_nu(t) = h_nu^monic(nu-bar).
RatFun h_normalizer(const Partition& nu, int n);

struct BinomialEntry {
    Partition lambda;
    Partition nu;
    RatFun value;
};

/// All binom(lambda, nu) with |lambda|, |nu| <= bound and length <= n,
/// lambda-major in partition order.
struct BinomialTable {
    int bound = 0;
    int nvars = 0;
    std::vector<BinomialEntry> entries;
};

BinomialTable binomial_table(int d, int n, unsigned threads = 0);

// One row per entry: "(3,1),(3),2*t+2,t+2"; the empty partition is "( )".
std::string to_csv(const BinomialTable& table);
nlohmann::json to_json(const BinomialTable& table);
BinomialTable binomial_table_from_json(const nlohmann::json& j);

// binom(lambda, mu) = 0 <=> lambda does not contain mu, over all pairs of
// size <= d.
VerificationReport extra_vanishing_check(int d, int n, unsigned threads = 0);

// binom(lambda, mu) in F>0 <=> lambda contains mu (zero otherwise).
VerificationReport positivity_check(int d, int n, unsigned threads = 0);

// For every cover mu < lambda = mu + one box (|lambda| <= d, length <= n)
// and every |nu| <= d: binom(lambda, nu) - binom(mu, nu) is in F>=0. Stats
// include how many nonzero differences got a (1+t)^N certificate.
VerificationReport monotonicity_check(int d, int n, unsigned threads = 0);

struct StabilityResult {
    bool stable = true;
    std::vector<std::pair<int, RatFun>> values;  // (n, binom)
};

StabilityResult n_stability_check(const Partition& lambda, const Partition& mu, const std::vector<int>& n_range);

// Text of a partition in table exports.
std::string csv_partition(const Partition& p);

}  // namespace jackpos
