#include "jackpos/cone.hpp"

#include "jackpos/errors.hpp"

namespace jackpos {

std::vector<TauPoly> sturm_chain(const TauPoly& p) {
    std::vector<TauPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    TauPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        TauPoly r = TauPoly::divmod(a, b).second;
        if (r.is_zero()) break;
        // Positive rescaling keeps the sign pattern; monic keeps numbers small.
        Rational lc = r.leading();
        r *= Rational(-1) / abs(lc);
        chain.push_back(std::move(r));
    }
    return chain;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

int count_positive_roots(const TauPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("count_positive_roots of the zero polynomial");
    TauPoly q = p.strip_t_powers();
    if (q.degree() <= 0) return 0;
    auto chain = sturm_chain(q);
    std::vector<int> at_zero;
    std::vector<int> at_inf;
    for (const auto& c : chain) {
        at_zero.push_back(sgn(c.coeff(0)));
        at_inf.push_back(sgn(c.leading()));
    }
    return sign_changes(at_zero) - sign_changes(at_inf);
}

const char* to_string(ConeClass c) {
    switch (c) {
        case ConeClass::zero: return "zero";
        case ConeClass::member_positive: return "member_positive";
        case ConeClass::non_member: return "non_member";
    }
    return "?";
}

namespace {

bool all_nonnegative(const TauPoly& p) {
    for (const auto& c : p.coeffs())
        if (c < 0) return false;
    return true;
}

}  // namespace

std::optional<ConeCertificate> find_certificate(const RatFun& f, int max_exponent) {
    if (f.is_zero()) return std::nullopt;
    int s = sgn(f.num().leading());
    TauPoly u = f.num() * Rational(s);
    TauPoly v = f.den() * Rational(s);
    const TauPoly one_plus_t{1, 1};
    for (int n = 0; n <= max_exponent; ++n) {
        if (all_nonnegative(u) && all_nonnegative(v)) {
            std::vector<Rational> all = u.coeffs();
            all.insert(all.end(), v.coeffs().begin(), v.coeffs().end());
            Rational scale = TauPoly(std::move(all)).integer_clearing_factor();
            return ConeCertificate{u * scale, v * scale, n};
        }
        u *= one_plus_t;
        v *= one_plus_t;
    }
    return std::nullopt;
}

ConeVerdict cone_member(const RatFun& f, bool with_certificate) {
    if (f.is_zero()) return {ConeClass::zero, std::nullopt};
    if (count_positive_roots(f.num()) > 0 || count_positive_roots(f.den()) > 0)
        return {ConeClass::non_member, std::nullopt};
    // No sign changes on (0, inf): the sign at t = 1 is the sign everywhere.
    if (sgn(f.num().eval(1)) * sgn(f.den().eval(1)) <= 0) return {ConeClass::non_member, std::nullopt};
    ConeVerdict v{ConeClass::member_positive, std::nullopt};
    if (with_certificate) v.certificate = find_certificate(f);
    return v;
}

bool certificate_is_valid(const RatFun& f, const ConeCertificate& cert) {
    if (cert.v.is_zero()) return false;
    for (const auto* p : {&cert.u, &cert.v})
        for (const auto& c : p->coeffs())
            if (c < 0 || c.get_den() != 1) return false;
    return cert.u * f.den() == cert.v * f.num();
}

}  // namespace jackpos
