#pragma once

#include "jackpos/ratfun.hpp"

#include <optional>
#include <vector>

namespace jackpos {

/// Membership in the cone F>=0 = { u/v : u, v in Z>=0[t], v != 0 }.
///
/// A nonzero f lies in the cone iff f > 0 on (0, inf):
///  - if f = u/v with u, v having nonnegative coefficients, then u, v are
///    positive at every t > 0 unless identically zero, so f > 0 there;
///  - conversely write num = t^a p, den = t^b q with p(0), q(0) != 0. If f
///    is positive on (0, inf) with reduced num/den, then p and q have no
///    positive roots and a common sign, so +-p and +-q are positive on
///    [0, inf). By Polya's theorem (1+t)^N p and (1+t)^N q have positive
///    coefficients for large N, and the powers of t have coefficient 1.
/// A zero of f at t = 0 is allowed (f = t is in the cone).
///
/// The decision below is exact: Sturm sequences count the distinct roots
/// of p and q in (0, inf), and one sign evaluation at t = 1 settles the
/// common sign. The (1+t)^N certificate search is run independently.

// Number of distinct real roots of p in the open interval (0, inf).
// p must be nonzero.
int count_positive_roots(const TauPoly& p);

// Sturm chain p, p', -rem(p_{i-1}, p_i), ...
std::vector<TauPoly> sturm_chain(const TauPoly& p);

enum class ConeClass { zero, member_positive, non_member };

const char* to_string(ConeClass c);

// f = u/v with u, v integer polynomials with nonnegative coefficients,
// obtained by multiplying num and den by (1+t)^exponent.
struct ConeCertificate {
    TauPoly u;
    TauPoly v;
    int exponent = 0;
};

struct ConeVerdict {
    ConeClass cls = ConeClass::non_member;
    std::optional<ConeCertificate> certificate;

    // zero or member_positive, i.e. f in F>=0
    bool nonnegative() const { return cls != ConeClass::non_member; }
};

inline constexpr int kMaxCertificateExponent = 64;

// Searches (1+t)^N for N <= max_exponent. Only meaningful for cone members;
// returns nullopt if no certificate was found within the bound.
std::optional<ConeCertificate> find_certificate(const RatFun& f,
                                                int max_exponent = kMaxCertificateExponent);

// Exact decision; attaches a certificate when the search finds one.
ConeVerdict cone_member(const RatFun& f, bool with_certificate = true);

// Checks coefficients >= 0 and u * den(f) == v * num(f).
bool certificate_is_valid(const RatFun& f, const ConeCertificate& cert);

}  // namespace jackpos
