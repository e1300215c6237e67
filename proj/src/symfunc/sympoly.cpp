#include "jackpos/sympoly.hpp"

#include "jackpos/errors.hpp"
#include "jackpos/memo.hpp"
#include "jackpos/mpoly.hpp"

#include <functional>
#include <numeric>
#include <tuple>

namespace jackpos {

const char* to_string(Basis b) {
    switch (b) {
        case Basis::monomial: return "monomial";
        case Basis::elementary: return "elementary";
        case Basis::powersum: return "powersum";
        case Basis::schur: return "schur";
        case Basis::jack: return "jack";
    }
    return "?";
}

Basis parse_basis(std::string_view s) {
    for (Basis b : {Basis::monomial, Basis::elementary, Basis::powersum, Basis::schur, Basis::jack})
        if (s == to_string(b)) return b;
    throw ParseError("unknown basis '" + std::string(s) + "'");
}

namespace {

const char* basis_letter(Basis b) {
    switch (b) {
        case Basis::monomial: return "m";
        case Basis::elementary: return "e";
        case Basis::powersum: return "p";
        case Basis::schur: return "s";
        case Basis::jack: return "P";
    }
    return "?";
}

}  // namespace

int SymPoly::degree() const {
    int d = -1;
    for (const auto& [lambda, c] : coeffs_) d = std::max(d, lambda.size());
    return d;
}

RatFun SymPoly::coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? RatFun() : it->second;
}

void SymPoly::add_term(const Partition& lambda, const RatFun& c) {
    // e_lambda is indexed by lambda with lambda_1 <= n; other bases by length.
    bool fits = basis_ == Basis::elementary ? (lambda.empty() || lambda[0] <= nvars_)
                : basis_ == Basis::powersum ? true
                                            : lambda.length() <= nvars_;
    if (!fits)
        throw UnsupportedRange("term " + lambda.to_string() + " needs more than " + std::to_string(nvars_) +
                               " variables");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    if (o.nvars_ != nvars_ || o.basis_ != basis_)
        throw std::invalid_argument("adding symmetric polynomials of different shape or basis");
    for (const auto& [lambda, c] : o.coeffs_) add_term(lambda, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    if (o.nvars_ != nvars_ || o.basis_ != basis_)
        throw std::invalid_argument("subtracting symmetric polynomials of different shape or basis");
    for (const auto& [lambda, c] : o.coeffs_) add_term(lambda, -c);
    return *this;
}

SymPoly& SymPoly::operator*=(const RatFun& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [lambda, c] : coeffs_) c *= s;
    return *this;
}

std::string SymPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [lambda, c] : coeffs_) {
        if (!out.empty()) out += " + ";
        if (lambda.empty()) {
            std::string cs = c.to_string();
            out += c.is_constant() ? cs : "(" + cs + ")";
            continue;
        }
        if (!c.is_one()) out += "(" + c.to_string() + ")*";
        out += basis_letter(basis_) + lambda.to_string();
    }
    return out;
}

nlohmann::json to_json(const SymPoly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lambda, c] : f.terms())
        terms.push_back({{"partition", lambda.parts()}, {"coeff", c.to_string()}});
    return {{"n", f.nvars()}, {"basis", to_string(f.basis())}, {"terms", terms}};
}

SymPoly sympoly_from_json(const nlohmann::json& j) {
    SymPoly f(j.at("n").get<int>(), parse_basis(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms"))
        f.add_term(Partition(t.at("partition").get<std::vector<int>>()),
                   parse_ratfun(t.at("coeff").get<std::string>()));
    return f;
}

// ---------------------------------------------------------------------------
// Conversions between SymPoly (monomial basis) and explicit polynomials.

namespace {

template <class Coeff>
MPoly<Coeff> to_mpoly(const std::map<Partition, Coeff, PartitionOrder>& terms, int n) {
    MPoly<Coeff> p(n);
    for (const auto& [lambda, c] : terms)
        for (const auto& alpha : distinct_permutations(lambda.padded(n))) p.add_term(alpha, c);
    return p;
}

MPoly<RatFun> to_mpoly(const SymPoly& f) { return to_mpoly(f.terms(), f.nvars()); }

bool is_partition_exponent(const Exponent& e) {
    for (std::size_t i = 1; i < e.size(); ++i)
        if (e[i] > e[i - 1]) return false;
    return true;
}

template <class Coeff>
SymPoly from_mpoly(const MPoly<Coeff>& p) {
    SymPoly f(p.nvars(), Basis::monomial);
    for (const auto& [e, c] : p.terms())
        if (is_partition_exponent(e)) f.add_term(Partition(e), RatFun(c));
    return f;
}

SymPoly elementary_expansion(const Partition& lambda, int n) {
    SymPoly zero(n, Basis::monomial);
    if (!lambda.empty() && lambda[0] > n) return zero;
    auto prod = MPoly<Rational>::constant(n, 1);
    for (int r : lambda.parts()) {
        MPoly<Rational> er(n);
        // e_r = m_(1^r)
        Exponent e(static_cast<std::size_t>(n), 0);
        std::fill(e.begin(), e.begin() + r, 1);
        for (const auto& alpha : distinct_permutations(e)) er.add_term(alpha, 1);
        prod = prod * er;
    }
    return from_mpoly(prod);
}

SymPoly powersum_expansion(const Partition& lambda, int n) {
    auto prod = MPoly<Rational>::constant(n, 1);
    for (int r : lambda.parts()) {
        MPoly<Rational> pr(n);
        for (int i = 0; i < n; ++i) {
            Exponent e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = r;
            pr.add_term(e, 1);
        }
        prod = prod * pr;
    }
    return from_mpoly(prod);
}

struct ExpansionKey {
    Basis tag;
    Partition lambda;
    int n;
    bool operator<(const ExpansionKey& o) const {
        if (tag != o.tag) return tag < o.tag;
        if (n != o.n) return n < o.n;
        return PartitionOrder{}(lambda, o.lambda);
    }
};

Memo<ExpansionKey, SymPoly>& expansion_memo() {
    static Memo<ExpansionKey, SymPoly> memo;
    return memo;
}

}  // namespace

SymPoly schur(const Partition& lambda, int n) {
    if (lambda.length() > n) return SymPoly(n, Basis::monomial);
    return monomial_expansion(Basis::schur, lambda, n);
}

namespace {

SymPoly schur_bialternant(const Partition& lambda, int n) {
    // a_alpha = det(x_i^{alpha_j}) = sum over permutations of sign * x^{sigma(alpha)}.
    auto alternant = [n](const std::vector<int>& alpha) {
        MPoly<Rational> a(n);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int inversions = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
            Exponent e(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                e[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            a.add_term(e, inversions % 2 ? -1 : 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return a;
    };
    std::vector<int> delta(static_cast<std::size_t>(n));
    std::vector<int> shifted = lambda.padded(n);
    for (int j = 0; j < n; ++j) {
        delta[static_cast<std::size_t>(j)] = n - 1 - j;
        shifted[static_cast<std::size_t>(j)] += n - 1 - j;
    }
    return from_mpoly(alternant(shifted).divide_exact(alternant(delta)));
}

// ---------------------------------------------------------------------------
// Jack polynomials by Gram-Schmidt in the degree-k component with k variables.

using Vec = std::vector<RatFun>;

// Coefficient of m_lambda in p_rho: number of ways to send the parts of rho
// (as a sequence) into the rows of lambda so that row j receives lambda_j.
Integer powersum_to_monomial(const Partition& rho, const Partition& lambda) {
    std::vector<int> room = lambda.parts();
    const auto& parts = rho.parts();
    std::function<Integer(std::size_t)> rec = [&](std::size_t i) -> Integer {
        if (i == parts.size()) {
            for (int r : room)
                if (r != 0) return 0;
            return 1;
        }
        Integer total = 0;
        for (auto& r : room) {
            if (r >= parts[i]) {
                r -= parts[i];
                total += rec(i + 1);
                r += parts[i];
            }
        }
        return total;
    };
    return rec(0);
}

struct JackDegree {
    std::vector<Partition> parts;         // partitions of k, PartitionOrder
    std::vector<std::vector<RatFun>> gram;  // <m_a, m_b>_t
    std::vector<Vec> jack;                 // P_lambda in m coordinates
};

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw InvariantViolation("singular power-sum transition matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational s = 1 / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

JackDegree build_jack_degree(int k) {
    JackDegree d;
    d.parts = partitions_of(k, k);
    const std::size_t m = d.parts.size();
    // p_rho = sum_lambda L[rho][lambda] m_lambda, so m = L^{-1} p.
    std::vector<std::vector<Rational>> L(m, std::vector<Rational>(m));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) L[r][c] = Rational(powersum_to_monomial(d.parts[r], d.parts[c]));
    auto Linv = invert(L);  // m_a = sum_rho Linv[a][rho] p_rho
    std::vector<RatFun> weight(m);
    for (std::size_t r = 0; r < m; ++r)
        weight[r] = RatFun(TauPoly(z_factor(d.parts[r])), TauPoly::monomial(1, d.parts[r].length()));
    d.gram.assign(m, std::vector<RatFun>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) {
            // Group by power of t: weight[r] = z_r / t^{l(r)}.
            std::vector<Rational> by_len(static_cast<std::size_t>(k) + 1);
            for (std::size_t r = 0; r < m; ++r) {
                if (Linv[a][r] == 0 || Linv[b][r] == 0) continue;
                by_len[static_cast<std::size_t>(d.parts[r].length())] += Linv[a][r] * Linv[b][r] * z_factor(d.parts[r]);
            }
            // sum_l c_l t^{-l} = (sum_l c_l t^{k-l}) / t^k
            std::vector<Rational> num(static_cast<std::size_t>(k) + 1);
            for (int l = 0; l <= k; ++l) num[static_cast<std::size_t>(k - l)] = by_len[static_cast<std::size_t>(l)];
            d.gram[a][b] = RatFun(TauPoly(std::move(num)), TauPoly::monomial(1, k));
            d.gram[b][a] = d.gram[a][b];
        }
    auto inner = [&](const Vec& u, const Vec& v) {
        RatFun s;
        for (std::size_t a = 0; a < m; ++a) {
            if (u[a].is_zero()) continue;
            RatFun row;
            for (std::size_t b = 0; b < m; ++b)
                if (!v[b].is_zero()) row += d.gram[a][b] * v[b];
            s += u[a] * row;
        }
        return s;
    };
    std::vector<RatFun> norms;
    for (std::size_t i = 0; i < m; ++i) {
        Vec v(m);
        v[i] = RatFun(1);
        Vec unit = v;
        for (std::size_t j = 0; j < i; ++j) {
            RatFun c = inner(unit, d.jack[j]);
            if (c.is_zero()) continue;
            c /= norms[j];
            for (std::size_t a = 0; a < m; ++a)
                if (!d.jack[j][a].is_zero()) v[a] -= c * d.jack[j][a];
        }
        norms.push_back(inner(v, v));
        d.jack.push_back(std::move(v));
    }
    return d;
}

const JackDegree& jack_degree(int k) {
    static Memo<int, JackDegree> memo;
    return memo.get(k, [k] { return build_jack_degree(k); });
}

SymPoly jack_gram_schmidt(const Partition& lambda, int n) {
    SymPoly f(n, Basis::monomial);
    if (lambda.length() > n) return f;
    const int k = lambda.size();
    // Computed with max(n, k) >= k variables; the degree-k coefficients do
    // not depend on the variable count once it is at least k. Deleting
    // variables down to n drops the keys longer than n.
    const JackDegree& d = jack_degree(k);
    std::size_t idx = 0;
    while (!(d.parts[idx] == lambda)) ++idx;
    for (std::size_t a = 0; a < d.parts.size(); ++a)
        if (d.parts[a].length() <= n) f.add_term(d.parts[a], d.jack[idx][a]);
    return f;
}

}  // namespace

const SymPoly& monomial_expansion(Basis tag, const Partition& lambda, int n) {
    return expansion_memo().get(ExpansionKey{tag, lambda, n}, [&]() -> SymPoly {
        switch (tag) {
            case Basis::monomial: {
                SymPoly f(n, Basis::monomial);
                if (lambda.length() <= n) f.add_term(lambda, 1);
                return f;
            }
            case Basis::elementary: return elementary_expansion(lambda, n);
            case Basis::powersum: return powersum_expansion(lambda, n);
            case Basis::schur:
                return lambda.length() > n ? SymPoly(n, Basis::monomial) : schur_bialternant(lambda, n);
            case Basis::jack: return jack_gram_schmidt(lambda, n);
        }
        throw InvariantViolation("unknown basis");
    });
}

SymPoly basis_element(Basis tag, const Partition& lambda, int n) {
    SymPoly f(n, tag);
    bool nonzero = tag == Basis::elementary ? (lambda.empty() || lambda[0] <= n)
                   : tag == Basis::powersum ? true
                                            : lambda.length() <= n;
    if (nonzero) f.add_term(lambda, 1);
    return f;
}

SymPoly jack(const Partition& lambda, int n) { return monomial_expansion(Basis::jack, lambda, n); }

SymPoly collect_symmetric(const MPoly<RatFun>& p) { return from_mpoly(p); }

SymPoly multiply(const SymPoly& f, const SymPoly& g) {
    if (f.nvars() != g.nvars()) throw std::invalid_argument("multiplying polynomials in different variable counts");
    return from_mpoly(to_mpoly(convert(f, Basis::monomial)) * to_mpoly(convert(g, Basis::monomial)));
}

namespace {

SymPoly to_monomial(const SymPoly& f) {
    if (f.basis() == Basis::monomial) return f;
    SymPoly g(f.nvars(), Basis::monomial);
    for (const auto& [lambda, c] : f.terms()) g += monomial_expansion(f.basis(), lambda, f.nvars()) * c;
    return g;
}

}  // namespace

SymPoly convert(const SymPoly& f, Basis target) {
    const int n = f.nvars();
    if ((f.basis() == Basis::powersum || target == Basis::powersum) && f.degree() > n)
        throw UnsupportedRange("power-sum expansion needs degree <= n (degree " + std::to_string(f.degree()) +
                               ", n = " + std::to_string(n) + ")");
    SymPoly g = to_monomial(f);
    if (target == Basis::monomial) return g;
    SymPoly out(n, target);
    if (target == Basis::powersum) {
        // p_rho = (prod m_i(rho)!) m_rho + terms strictly higher in dominance.
        while (!g.is_zero()) {
            auto [kappa, c] = *g.terms().begin();
            Rational lead = 1;
            for (int i = 1; i <= kappa.size(); ++i)
                for (int k = 1; k <= kappa.multiplicity(i); ++k) lead *= k;
            RatFun coef = c / RatFun(lead);
            out.add_term(kappa, coef);
            g -= monomial_expansion(Basis::powersum, kappa, n) * coef;
        }
        return out;
    }
    // Schur, Jack and e_{kappa'} all have leading monomial m_kappa.
    while (!g.is_zero()) {
        auto [kappa, c] = *g.terms().rbegin();
        Partition index = target == Basis::elementary ? kappa.conjugate() : kappa;
        out.add_term(target == Basis::elementary ? index : kappa, c);
        g -= monomial_expansion(target, index, n) * c;
    }
    return out;
}

namespace {

RatFun powersum_pairing(const SymPoly& f, const SymPoly& g, bool deformed) {
    for (const auto* h : {&f, &g})
        if (h->degree() > h->nvars())
            throw UnsupportedRange("Hall inner product needs degree <= n (degree " + std::to_string(h->degree()) +
                                   ", n = " + std::to_string(h->nvars()) + ")");
    SymPoly pf = convert(f, Basis::powersum);
    SymPoly pg = convert(g, Basis::powersum);
    RatFun s;
    for (const auto& [rho, c] : pf.terms()) {
        RatFun d = pg.coeff(rho);
        if (d.is_zero()) continue;
        RatFun w(z_factor(rho));
        if (deformed) w /= RatFun(TauPoly::monomial(1, rho.length()));
        s += c * d * w;
    }
    return s;
}

}  // namespace

RatFun hall_inner(const SymPoly& f, const SymPoly& g) { return powersum_pairing(f, g, false); }

RatFun hall_inner_tau(const SymPoly& f, const SymPoly& g) { return powersum_pairing(f, g, true); }

RatFun principal_spec_jack(const Partition& lambda, int n) {
    if (lambda.length() > n)
        throw UnsupportedRange("principal specialization needs length <= n for " + lambda.to_string());
    Partition conj = lambda.conjugate();
    TauPoly num(1);
    TauPoly den(1);
    for (const Cell& s : cells(lambda)) {
        const int i = s.row;
        const int j = s.col;
        num *= TauPoly{Rational(j - 1), Rational(n - i + 1)};
        den *= TauPoly{Rational(lambda[static_cast<std::size_t>(i - 1)] - j),
                       Rational(conj[static_cast<std::size_t>(j - 1)] - i + 1)};
    }
    return RatFun(num, den);
}

namespace {

Integer binom(int a, int b) {
    if (b < 0 || b > a) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

struct ShiftKey {
    Partition kappa;
    int n;
    bool operator<(const ShiftKey& o) const {
        if (n != o.n) return n < o.n;
        return PartitionOrder{}(kappa, o.kappa);
    }
};

}  // namespace

const std::map<Partition, Integer, PartitionOrder>& shifted_monomial(const Partition& kappa, int n) {
    static Memo<ShiftKey, std::map<Partition, Integer, PartitionOrder>> memo;
    return memo.get(ShiftKey{kappa, n}, [&] {
        std::map<Partition, Integer, PartitionOrder> out;
        if (kappa.length() > n) return out;
        auto perms = distinct_permutations(kappa.padded(n));
        for (const auto& rho : enumerate_partitions(kappa.size(), n)) {
            auto r = rho.padded(n);
            Integer total = 0;
            for (const auto& alpha : perms) {
                Integer term = 1;
                for (int i = 0; i < n && term != 0; ++i)
                    term *= binom(alpha[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(i)]);
                total += term;
            }
            if (total != 0) out.emplace(rho, total);
        }
        return out;
    });
}

SymPoly shift_vars(const SymPoly& f) {
    SymPoly g = to_monomial(f);
    SymPoly out(g.nvars(), Basis::monomial);
    for (const auto& [kappa, c] : g.terms())
        for (const auto& [rho, k] : shifted_monomial(kappa, g.nvars())) out.add_term(rho, c * RatFun(Rational(k)));
    return out;
}

namespace {

template <class V, class CoeffMapT, class Lift>
V evaluate_impl(const CoeffMapT& terms, int n, const std::vector<V>& point, Lift lift) {
    if (static_cast<int>(point.size()) != n)
        throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                                    std::to_string(n));
    int maxdeg = 0;
    for (const auto& [lambda, c] : terms)
        if (!lambda.empty()) maxdeg = std::max(maxdeg, lambda[0]);
    // powers[i][k] = point[i]^k
    std::vector<std::vector<V>> powers(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& row = powers[static_cast<std::size_t>(i)];
        row.push_back(V(1));
        for (int k = 1; k <= maxdeg; ++k) row.push_back(row.back() * point[static_cast<std::size_t>(i)]);
    }
    V total(0);
    for (const auto& [lambda, c] : terms) {
        V m(0);
        for (const auto& alpha : distinct_permutations(lambda.padded(n))) {
            V prod(1);
            for (int i = 0; i < n; ++i) {
                int e = alpha[static_cast<std::size_t>(i)];
                if (e) prod *= powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)];
            }
            m += prod;
        }
        total += lift(c) * m;
    }
    return total;
}

}  // namespace

RatFun evaluate(const SymPoly& f, const std::vector<RatFun>& point) {
    SymPoly g = to_monomial(f);
    return evaluate_impl(g.terms(), g.nvars(), point, [](const RatFun& c) { return c; });
}

RatFun evaluate(const SymPoly& f, const std::vector<TauPoly>& point) {
    std::vector<RatFun> p(point.begin(), point.end());
    return evaluate(f, p);
}

Rational evaluate(const std::map<Partition, Rational, PartitionOrder>& f, int nvars,
                  const std::vector<Rational>& point) {
    return evaluate_impl(f, nvars, point, [](const Rational& c) { return c; });
}

std::map<Partition, Rational, PartitionOrder> specialize(const SymPoly& f, const Rational& t0) {
    std::map<Partition, Rational, PartitionOrder> out;
    for (const auto& [lambda, c] : f.terms()) {
        Rational v = eval_at(c, t0);
        if (v != 0) out.emplace(lambda, v);
    }
    return out;
}

std::map<Partition, Rational, PartitionOrder> limit_coefficients(const SymPoly& f) {
    std::map<Partition, Rational, PartitionOrder> out;
    for (const auto& [lambda, c] : f.terms()) {
        Limit l = limit_at_infinity(c);
        if (!l.is_finite())
            throw UnsupportedRange("coefficient of " + lambda.to_string() + " diverges as t -> inf");
        if (l.value != 0) out.emplace(lambda, l.value);
    }
    return out;
}

}  // namespace jackpos
