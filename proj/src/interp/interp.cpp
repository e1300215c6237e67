#include "jackpos/interp.hpp"

#include "jackpos/cone.hpp"
#include "jackpos/errors.hpp"
#include "jackpos/memo.hpp"
#include "jackpos/mpoly.hpp"
#include "jackpos/parallel.hpp"
#include "jackpos/tableau.hpp"

#include <sstream>

namespace jackpos {

namespace {

using Matrix = std::vector<std::vector<RatFun>>;

int weight(const RatFun& f) { return f.num().degree() + f.den().degree(); }

// Solves A X = B in place by Gauss-Jordan elimination over Q(t). Pivots are
// chosen by smallest symbolic degree within the column.
void solve_in_place(Matrix& a, Matrix& b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = col; r < n; ++r)
            if (!a[r][col].is_zero() && (piv == n || weight(a[r][col]) < weight(a[piv][col]))) piv = r;
        if (piv == n) throw InvariantViolation("singular interpolation system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        RatFun inv = a[col][col].inverse();
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        for (auto& x : b[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            RatFun f = a[r][col];
            for (std::size_t j = col; j < n; ++j)
                if (!a[col][j].is_zero()) a[r][j] -= f * a[col][j];
            for (std::size_t j = 0; j < b[r].size(); ++j)
                if (!b[col][j].is_zero()) b[r][j] -= f * b[col][j];
        }
    }
}

struct DegreeKey {
    int d;
    int n;
    bool operator<(const DegreeKey& o) const { return d != o.d ? d < o.d : n < o.n; }
};

using UnitalFamily = std::map<Partition, SymPoly, PartitionOrder>;

// Unital h_mu for every mu of size d with length <= n, from one elimination.
UnitalFamily solve_degree(int d, int n) {
    auto nodes = enumerate_partitions(d, n);
    auto targets = partitions_of(d, n);
    const std::size_t size = nodes.size();
    Matrix a(size, std::vector<RatFun>(size));
    for (std::size_t i = 0; i < size; ++i) {
        auto pt = shifted_point(nodes[i], n);
        for (std::size_t j = 0; j < size; ++j)
            a[i][j] = evaluate(monomial_expansion(Basis::monomial, nodes[j], n), pt);
    }
    Matrix b(size, std::vector<RatFun>(targets.size()));
    for (std::size_t k = 0; k < targets.size(); ++k) {
        auto it = std::find(nodes.begin(), nodes.end(), targets[k]);
        b[static_cast<std::size_t>(it - nodes.begin())][k] = RatFun(1);
    }
    solve_in_place(a, b);
    UnitalFamily out;
    for (std::size_t k = 0; k < targets.size(); ++k) {
        SymPoly h(n, Basis::monomial);
        for (std::size_t j = 0; j < size; ++j) h.add_term(nodes[j], b[j][k]);
        out.emplace(targets[k], std::move(h));
    }
    return out;
}

const SymPoly& unital(const Partition& mu, int n) {
    static Memo<DegreeKey, UnitalFamily> memo;
    if (mu.length() > n)
        throw UnsupportedRange("interpolation polynomial needs length <= n for " + mu.to_string());
    const auto& family = memo.get(DegreeKey{mu.size(), n}, [&] { return solve_degree(mu.size(), n); });
    return family.at(mu);
}

struct ShapeKey {
    Partition mu;
    int n;
    bool operator<(const ShapeKey& o) const { return n != o.n ? n < o.n : PartitionOrder{}(mu, o.mu); }
};

const SymPoly& monic(const Partition& mu, int n) {
    static Memo<ShapeKey, SymPoly> memo;
    return memo.get(ShapeKey{mu, n}, [&] {
        const SymPoly& h = unital(mu, n);
        return h * h.coeff(mu).inverse();
    });
}

}  // namespace

InterpPoly interp_linear(const Partition& mu, int n, Normalization norm) {
    const SymPoly& p = norm == Normalization::unital ? unital(mu, n) : monic(mu, n);
    return InterpPoly{p, mu, n, norm};
}

InterpPoly interp_tableau(const Partition& mu, int n) {
    if (mu.length() > n)
        throw UnsupportedRange("interpolation polynomial needs length <= n for " + mu.to_string());
    MPoly<RatFun> total(n);
    for (const auto& t : enumerate_rt(mu, n)) {
        auto prod = MPoly<RatFun>::constant(n, RatFun(1));
        for (const Cell& s : cells(mu)) {
            const int entry = t.at(s);
            const auto [coarm, coleg] = coarm_coleg(mu, s);
            // x_{T(s)} - (a'(s) + (n - T(s) - l'(s)) t)
            auto factor = MPoly<RatFun>::variable(n, entry - 1);
            factor.add_term(Exponent(static_cast<std::size_t>(n), 0),
                            -RatFun(TauPoly{Rational(coarm), Rational(n - entry - coleg)}));
            prod = prod * factor;
        }
        total += prod * psi_weight(t);
    }
    return InterpPoly{collect_symmetric(total), mu, n, Normalization::monic};
}

namespace {

struct PairKey {
    Partition lambda;
    Partition mu;
    int n;
    bool operator<(const PairKey& o) const {
        if (n != o.n) return n < o.n;
        if (!(lambda == o.lambda)) return PartitionOrder{}(lambda, o.lambda);
        return PartitionOrder{}(mu, o.mu);
    }
};

}  // namespace

RatFun h_normalizer(const Partition& nu, int n) { return unital(nu, n).coeff(nu).inverse(); }

RatFun binomial(const Partition& lambda, const Partition& mu, int n) {
    static Memo<PairKey, RatFun> memo;
    if (lambda.length() > n)
        throw UnsupportedRange("binomial needs length <= n for " + lambda.to_string());
    return memo.get(PairKey{lambda, mu, n}, [&] {
        // Evaluate the monic form (polynomial coefficients), then rescale.
        return evaluate(monic(mu, n), shifted_point(lambda, n)) / h_normalizer(mu, n);
    });
}

BinomialTable binomial_table(int d, int n, unsigned threads) {
    auto parts = enumerate_partitions(d, n);
    BinomialTable table{d, n, {}};
    const std::size_t m = parts.size();
    table.entries.resize(m * m);
    // Fan out over nu first so each interpolation family is built once per worker.
    parallel_for(m, threads, [&](std::size_t j) {
        for (std::size_t i = 0; i < m; ++i)
            table.entries[i * m + j] = BinomialEntry{parts[i], parts[j], binomial(parts[i], parts[j], n)};
    });
    return table;
}

std::string csv_partition(const Partition& p) { return p.empty() ? "( )" : p.to_string(); }

std::string to_csv(const BinomialTable& table) {
    std::ostringstream os;
    for (const auto& e : table.entries) {
        auto [num, den] = e.value.cleared();
        os << csv_partition(e.lambda) << "," << csv_partition(e.nu) << "," << num.to_string() << ","
           << den.to_string() << "\n";
    }
    return os.str();
}

nlohmann::json to_json(const BinomialTable& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : table.entries) {
        auto [num, den] = e.value.cleared();
        entries.push_back(
            {{"lambda", e.lambda.parts()}, {"nu", e.nu.parts()}, {"num", num.to_string()}, {"den", den.to_string()}});
    }
    return {{"bound", table.bound}, {"n", table.nvars}, {"entries", entries}};
}

BinomialTable binomial_table_from_json(const nlohmann::json& j) {
    BinomialTable t{j.at("bound").get<int>(), j.at("n").get<int>(), {}};
    for (const auto& e : j.at("entries"))
        t.entries.push_back({Partition(e.at("lambda").get<std::vector<int>>()),
                             Partition(e.at("nu").get<std::vector<int>>()),
                             RatFun(parse_tau_poly(e.at("num").get<std::string>()),
                                    parse_tau_poly(e.at("den").get<std::string>()))});
    return t;
}

namespace {

nlohmann::json pair_json(const Partition& lambda, const Partition& mu) {
    return {{"lambda", lambda.parts()}, {"mu", mu.parts()}};
}

}  // namespace

VerificationReport extra_vanishing_check(int d, int n, unsigned threads) {
    VerificationReport r;
    r.claim = "extra-vanishing";
    r.bounds = {{"d", d}, {"n", n}};
    ReportTimer timer(r);
    auto table = binomial_table(d, n, threads);
    for (const auto& e : table.entries) {
        bool zero = e.value.is_zero();
        if (zero == contains(e.lambda, e.nu)) {
            auto c = pair_json(e.lambda, e.nu);
            c["binomial"] = e.value.to_string();
            r.add_counterexample(c);
        }
    }
    r.stats["pairs"] = table.entries.size();
    return r;
}

VerificationReport positivity_check(int d, int n, unsigned threads) {
    VerificationReport r;
    r.claim = "positivity";
    r.bounds = {{"d", d}, {"n", n}};
    ReportTimer timer(r);
    auto table = binomial_table(d, n, threads);
    std::vector<ConeVerdict> verdicts(table.entries.size());
    parallel_for(table.entries.size(), threads, [&](std::size_t i) {
        verdicts[i] = cone_member(table.entries[i].value);
        if (verdicts[i].certificate && !certificate_is_valid(table.entries[i].value, *verdicts[i].certificate))
            throw InvariantViolation("invalid cone certificate for " + table.entries[i].value.to_string());
    });
    std::size_t positive = 0, certified = 0;
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const auto& e = table.entries[i];
        bool expect_positive = contains(e.lambda, e.nu);
        ConeClass want = expect_positive ? ConeClass::member_positive : ConeClass::zero;
        if (verdicts[i].cls == ConeClass::member_positive) {
            ++positive;
            if (verdicts[i].certificate) ++certified;
        }
        if (verdicts[i].cls != want) {
            auto c = pair_json(e.lambda, e.nu);
            c["binomial"] = e.value.to_string();
            c["verdict"] = to_string(verdicts[i].cls);
            r.add_counterexample(c);
        }
    }
    r.stats["pairs"] = table.entries.size();
    r.stats["positive"] = positive;
    r.stats["certified"] = certified;
    return r;
}

VerificationReport monotonicity_check(int d, int n, unsigned threads) {
    VerificationReport r;
    r.claim = "thm2";
    r.bounds = {{"d", d}, {"n", n}};
    ReportTimer timer(r);
    struct Cover {
        Partition mu;
        Partition lambda;
    };
    std::vector<Cover> covers;
    for (const auto& mu : enumerate_partitions(d - 1, n))
        for (const auto& lambda : add_one_box(mu, n)) covers.push_back({mu, lambda});
    auto nus = enumerate_partitions(d, n);
    struct Outcome {
        ConeVerdict verdict;
        RatFun diff;
    };
    std::vector<Outcome> outcomes(covers.size() * nus.size());
    parallel_for(outcomes.size(), threads, [&](std::size_t k) {
        const auto& cv = covers[k / nus.size()];
        const auto& nu = nus[k % nus.size()];
        RatFun diff = binomial(cv.lambda, nu, n) - binomial(cv.mu, nu, n);
        outcomes[k] = {cone_member(diff), diff};
    });
    std::size_t nonzero = 0, certified = 0, max_exponent = 0;
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
        const auto& o = outcomes[k];
        if (o.verdict.cls == ConeClass::zero) continue;
        ++nonzero;
        if (o.verdict.certificate) {
            if (!certificate_is_valid(o.diff, *o.verdict.certificate))
                throw InvariantViolation("invalid cone certificate for " + o.diff.to_string());
            ++certified;
            max_exponent = std::max<std::size_t>(max_exponent, static_cast<std::size_t>(o.verdict.certificate->exponent));
        }
        if (o.verdict.cls == ConeClass::non_member) {
            const auto& cv = covers[k / nus.size()];
            nlohmann::json c = pair_json(cv.lambda, cv.mu);
            c["nu"] = nus[k % nus.size()].parts();
            c["difference"] = o.diff.to_string();
            r.add_counterexample(c);
        }
    }
    r.stats["cover_pairs"] = covers.size();
    r.stats["differences"] = outcomes.size();
    r.stats["nonzero_differences"] = nonzero;
    r.stats["certified"] = certified;
    r.stats["max_certificate_exponent"] = max_exponent;
    r.stats["certified_fraction"] = nonzero ? static_cast<double>(certified) / static_cast<double>(nonzero) : 1.0;
    return r;
}

StabilityResult n_stability_check(const Partition& lambda, const Partition& mu, const std::vector<int>& n_range) {
    StabilityResult res;
    for (int n : n_range) {
        if (lambda.length() > n || mu.length() > n)
            throw UnsupportedRange("n = " + std::to_string(n) + " is below the partition lengths");
        RatFun v = binomial(lambda, mu, n);
        if (!res.values.empty() && !(res.values.front().second == v)) res.stable = false;
        res.values.emplace_back(n, v);
    }
    return res;
}

}  // namespace jackpos
