#include "jackpos/positivity.hpp"

#include "jackpos/cone.hpp"
#include "jackpos/errors.hpp"
#include "jackpos/interp.hpp"
#include "jackpos/memo.hpp"
#include "jackpos/mpoly.hpp"
#include "jackpos/parallel.hpp"

#include <algorithm>

namespace jackpos {

namespace {

struct ShapeKey {
    Partition lambda;
    int n;
    bool operator<(const ShapeKey& o) const { return n != o.n ? n < o.n : PartitionOrder{}(lambda, o.lambda); }
};

std::vector<RatFun> ones(int n) { return std::vector<RatFun>(static_cast<std::size_t>(n), RatFun(1)); }

// Value of a coefficient that is known not to involve t.
Rational constant_value(const RatFun& c) {
    if (c.num().degree() > 0 || c.den().degree() > 0)
        throw InvariantViolation("expected a constant, got " + c.to_string());
    return eval_at(c, Rational(0));
}

void require_length(const Partition& p, int n) {
    if (p.length() > n)
        throw UnsupportedRange("partition " + p.to_string() + " has more than " + std::to_string(n) + " parts");
}

nlohmann::json pair_json(const Partition& lambda, const Partition& mu) {
    return {{"lambda", lambda.parts()}, {"mu", mu.parts()}};
}

std::vector<std::string> point_strings(const std::vector<Rational>& x) {
    std::vector<std::string> out;
    for (const auto& v : x) out.push_back(to_string(v));
    return out;
}

}  // namespace

const ShiftedExpansion& shifted_expansion(const Partition& lambda, int n) {
    static Memo<ShapeKey, ShiftedExpansion> memo;
    require_length(lambda, n);
    return memo.get(ShapeKey{lambda, n}, [&] {
        SymPoly shifted = shift_vars(jack(lambda, n)) * principal_spec_jack(lambda, n).inverse();
        ShiftedExpansion out{lambda, n, {}};
        const SymPoly in_jack = convert(shifted, Basis::jack);
        for (const auto& [nu, c] : in_jack.terms())
            out.coeffs.emplace(nu, c * principal_spec_jack(nu, n));
        return out;
    });
}

CoeffMap difference_expansion(const Partition& lambda, const Partition& mu, int n) {
    CoeffMap out = shifted_expansion(lambda, n).coeffs;
    for (const auto& [nu, c] : shifted_expansion(mu, n).coeffs) {
        RatFun v = out[nu] - c;
        if (v.is_zero())
            out.erase(nu);
        else
            out[nu] = v;
    }
    return out;
}

bool is_jack_positive(const CoeffMap& diff) {
    return std::all_of(diff.begin(), diff.end(),
                       [](const auto& kv) { return cone_member(kv.second, false).nonnegative(); });
}

std::map<Partition, Rational, PartitionOrder> schur_shifted_expansion(const Partition& lambda, int n) {
    require_length(lambda, n);
    auto at_ones = [&](const Partition& p) { return constant_value(evaluate(schur(p, n), ones(n))); };
    SymPoly shifted = shift_vars(schur(lambda, n)) * RatFun(1 / at_ones(lambda));
    std::map<Partition, Rational, PartitionOrder> out;
    const SymPoly in_schur = convert(shifted, Basis::schur);
    for (const auto& [nu, c] : in_schur.terms()) out.emplace(nu, constant_value(c) * at_ones(nu));
    return out;
}

std::string TauValue::to_string() const { return infinite ? "inf" : jackpos::to_string(value); }

TauValue parse_tau(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s == "inf") return TauValue::inf();
    Rational v = parse_rational(s);
    if (v < 0) throw ParseError("t sample must be nonnegative: " + std::string(s));
    return {false, v};
}

namespace {

std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> out;
    while (true) {
        auto pos = s.find(',');
        out.push_back(s.substr(0, pos));
        if (pos == std::string_view::npos) break;
        s.remove_prefix(pos + 1);
    }
    return out;
}

}  // namespace

std::vector<TauValue> parse_tau_list(std::string_view s) {
    std::vector<TauValue> out;
    for (auto tok : split_commas(s)) out.push_back(parse_tau(tok));
    return out;
}

std::vector<TauValue> default_thm1_taus() {
    return {{false, 0}, {false, Rational(1, 2)}, {false, 1}, {false, 2}};
}

std::vector<TauValue> default_probe_taus() {
    auto v = default_thm1_taus();
    v.push_back(TauValue::inf());
    return v;
}

std::size_t Grid::size(int n) const {
    std::size_t s = 1;
    for (int i = 0; i < n; ++i) s *= values.size();
    return s;
}

std::vector<std::vector<Rational>> Grid::points(int n) const {
    std::vector<std::vector<Rational>> out;
    const std::size_t total = size(n);
    out.reserve(total);
    for (std::size_t k = 0; k < total; ++k) {
        std::vector<Rational> x(static_cast<std::size_t>(n));
        std::size_t r = k;
        for (int i = n - 1; i >= 0; --i) {
            x[static_cast<std::size_t>(i)] = values[r % values.size()] + shift;
            r /= values.size();
        }
        out.push_back(std::move(x));
    }
    return out;
}

nlohmann::json Grid::describe(int n) const {
    std::vector<std::string> vs;
    for (const auto& v : values) vs.push_back(to_string(v));
    return {{"values", vs}, {"shift", to_string(shift)}, {"points", size(n)}};
}

Grid basic_grid() { return Grid{{0, Rational(1, 4), Rational(1, 2), 1, 2, 5}, 0}; }

Grid dense_grid() {
    return Grid{{0, Rational(1, 8), Rational(1, 4), Rational(3, 8), Rational(1, 2), Rational(3, 4), 1, Rational(3, 2), 2,
                 3, 5, 8, 13, 20, 50},
                0};
}

Grid parse_grid(std::string_view s) {
    if (s == "basic") return basic_grid();
    if (s == "dense") return dense_grid();
    Grid g;
    for (auto tok : split_commas(s)) {
        Rational v = parse_rational(tok);
        if (v < 0) throw ParseError("grid values must be nonnegative: " + std::string(tok));
        g.values.push_back(v);
    }
    return g;
}

namespace {

const SymPoly& base_polynomial(Basis kind, const Partition& p, int n) {
    require_length(p, n);
    if (kind == Basis::elementary) return monomial_expansion(Basis::elementary, p.conjugate(), n);
    return monomial_expansion(kind, p, n);
}

SymPoly normalized(Basis kind, const Partition& p, int n) {
    const SymPoly& f = base_polynomial(kind, p, n);
    return f * evaluate(f, ones(n)).inverse();
}

// Expanded polynomial with rational coefficients, for repeated evaluation.
struct DensePoly {
    int nvars = 0;
    int max_exp = 0;
    std::vector<std::pair<Exponent, Rational>> terms;

    DensePoly(const std::map<Partition, Rational, PartitionOrder>& coeffs, int n) : nvars(n) {
        for (const auto& [kappa, c] : coeffs) {
            max_exp = std::max(max_exp, kappa[0]);
            for (auto& alpha : distinct_permutations(kappa.padded(n))) terms.emplace_back(std::move(alpha), c);
        }
    }

    Rational operator()(const std::vector<Rational>& x) const {
        std::vector<std::vector<Rational>> pw(static_cast<std::size_t>(nvars));
        for (std::size_t i = 0; i < pw.size(); ++i) {
            pw[i].resize(static_cast<std::size_t>(max_exp) + 1);
            pw[i][0] = 1;
            for (int k = 1; k <= max_exp; ++k) pw[i][static_cast<std::size_t>(k)] = pw[i][static_cast<std::size_t>(k - 1)] * x[i];
        }
        Rational s = 0, term;
        for (const auto& [alpha, c] : terms) {
            term = c;
            for (std::size_t i = 0; i < alpha.size(); ++i)
                if (alpha[i]) term *= pw[i][static_cast<std::size_t>(alpha[i])];
            s += term;
        }
        return s;
    }
};

constexpr std::size_t kMaxReportedPoints = 5;

}  // namespace

SymPoly normalized_difference(Basis kind, const Partition& lambda, const Partition& mu, int n) {
    return normalized(kind, lambda, n) - normalized(kind, mu, n);
}

VerificationReport numeric_eval_check(Basis kind, const Partition& lambda, const Partition& mu, int n,
                                      const std::optional<TauValue>& tau0, const Grid& grid) {
    VerificationReport r;
    r.claim = "numeric-eval";
    r.note = "sampling probe, not a proof";
    r.bounds = {{"kind", to_string(kind)}, {"lambda", lambda.parts()}, {"mu", mu.parts()}, {"n", n},
                {"grid", grid.describe(n)}};
    if (tau0) r.bounds["tau"] = tau0->to_string();
    ReportTimer timer(r);

    Basis path = kind;
    Rational t0 = 0;
    if (kind == Basis::jack) {
        if (!tau0) throw std::invalid_argument("jack probes need a value of t");
        if (tau0->infinite)
            path = Basis::elementary;
        else
            t0 = tau0->value;
    }
    DensePoly f(specialize(normalized_difference(path, lambda, mu, n), t0), n);

    std::size_t violations = 0;
    std::optional<Rational> min_value;
    std::vector<Rational> argmin;
    for (const auto& x : grid.points(n)) {
        Rational v = f(x);
        if (!min_value || v < *min_value) {
            min_value = v;
            argmin = x;
        }
        if (v < 0) {
            ++violations;
            if (r.counterexamples.size() < kMaxReportedPoints)
                r.add_counterexample({{"x", point_strings(x)}, {"value", to_string(v)}});
        }
    }
    r.stats["points"] = grid.size(n);
    r.stats["violations"] = violations;
    if (min_value) {
        r.stats["min_value"] = to_string(*min_value);
        r.stats["argmin"] = point_strings(argmin);
    }
    return r;
}

std::map<Partition, Rational, PartitionOrder> powersum_difference(const Partition& lambda, const Partition& mu,
                                                                  int n) {
    for (const auto* p : {&lambda, &mu})
        if (p->size() > n)
            throw UnsupportedRange("power-sum expansion needs size <= n (" + p->to_string() +
                                   ", n = " + std::to_string(n) + ")");
    using Map = std::map<Partition, Rational, PartitionOrder>;
    // p_k(x + 1) = sum_j C(k, j) p_j(x), with p_0 = n.
    auto expand = [&](const Partition& p) {
        Map acc{{Partition{}, Rational(1)}};
        for (int k : p.parts()) {
            Map next;
            for (const auto& [rho, c] : acc)
                for (int j = 0; j <= k; ++j) {
                    Integer binom;
                    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
                    if (j == 0) {
                        next[rho] += c * binom * n;
                    } else {
                        std::vector<int> parts = rho.parts();
                        parts.insert(std::upper_bound(parts.begin(), parts.end(), j, std::greater<int>()), j);
                        next[Partition(parts)] += c * binom;
                    }
                }
            acc = std::move(next);
        }
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(p.length()));
        for (auto& [rho, c] : acc) c /= scale;
        return acc;
    };
    Map out = expand(lambda);
    for (const auto& [rho, c] : expand(mu)) out[rho] -= c;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

bool powersum_characterization(const Partition& lambda, const Partition& mu, int n) {
    auto diff = powersum_difference(lambda, mu, n);
    return std::all_of(diff.begin(), diff.end(), [](const auto& kv) { return kv.second >= 0; });
}

std::optional<Partition> interpolating_partition(const Partition& lambda, const Partition& mu) {
    if (!weakly_dominates(lambda, mu)) return std::nullopt;
    std::vector<int> nu;
    int remaining = mu.size();
    for (int part : lambda.parts()) {
        int take = std::min(part, remaining);
        if (take == 0) break;
        nu.push_back(take);
        remaining -= take;
    }
    return Partition(nu);
}

namespace {

struct PairResult {
    std::vector<nlohmann::json> counterexamples;
    nlohmann::json stats = nlohmann::json::object();
};

// Runs `check` on every pair in order and merges the results in that order.
// Integer stats with the same key are summed.
template <class Check>
void sweep_pairs(VerificationReport& r, const std::vector<std::pair<Partition, Partition>>& pairs, unsigned threads,
                 Check check) {
    std::vector<PairResult> results(pairs.size());
    parallel_for(pairs.size(), threads, [&](std::size_t i) { results[i] = check(pairs[i].first, pairs[i].second); });
    r.stats["pairs"] = pairs.size();
    for (auto& res : results) {
        for (auto& c : res.counterexamples) r.add_counterexample(std::move(c));
        for (auto it = res.stats.begin(); it != res.stats.end(); ++it) {
            const long long v = it.value().template get<long long>();
            auto& slot = r.stats[it.key()];
            slot = slot.is_null() ? v : slot.template get<long long>() + v;
        }
    }
}

template <class Pred>
std::vector<std::pair<Partition, Partition>> pairs_where(int d, int n, Pred pred) {
    auto parts = enumerate_partitions(d, n);
    std::vector<std::pair<Partition, Partition>> out;
    for (const auto& lambda : parts)
        for (const auto& mu : parts)
            if (pred(lambda, mu)) out.emplace_back(lambda, mu);
    return out;
}

nlohmann::json base_bounds(int d, int n) { return {{"d", d}, {"n", n}}; }

std::vector<std::string> tau_strings(const std::vector<TauValue>& taus) {
    std::vector<std::string> out;
    for (const auto& t : taus) out.push_back(t.to_string());
    return out;
}

}  // namespace

VerificationReport verify_thm1(int d, int n, const std::vector<TauValue>& taus, unsigned threads) {
    VerificationReport r;
    r.claim = "thm1";
    r.bounds = base_bounds(d, n);
    r.bounds["tau"] = tau_strings(taus);
    ReportTimer timer(r);
    for (const auto& t : taus)
        if (t.infinite) throw std::invalid_argument("thm1 samples t at finite values only");
    auto pairs = pairs_where(d, n, [](const auto&, const auto&) { return true; });
    sweep_pairs(r, pairs, threads, [&](const Partition& lambda, const Partition& mu) {
        PairResult res;
        const bool contained = contains(lambda, mu);
        auto fail = [&](const std::string& level, nlohmann::json extra) {
            nlohmann::json c = pair_json(lambda, mu);
            c["level"] = level;
            c["contains"] = contained;
            c.update(extra);
            res.counterexamples.push_back(std::move(c));
        };
        CoeffMap diff = difference_expansion(lambda, mu, n);
        const bool positive = is_jack_positive(diff);
        if (positive) {
            // Independent confirmation of each coefficient by a (1+t)^N certificate.
            long long certified = 0;
            for (const auto& [nu, c] : diff) {
                auto v = cone_member(c);
                if (v.certificate && certificate_is_valid(c, *v.certificate)) ++certified;
            }
            res.stats["positive_coefficients"] = static_cast<long long>(diff.size());
            res.stats["certified_coefficients"] = certified;
        }
        if (positive != contained) fail("symbolic", {{"jack_positive", positive}});
        res.stats["containing"] = contained ? 1 : 0;
        if (!contained) {
            // The coefficient at nu = mu is binom(lambda, mu) - 1 = -1.
            RatFun at_mu = diff.contains(mu) ? diff.at(mu) : RatFun(0);
            if (at_mu == RatFun(-1))
                res.stats["negative_witnesses"] = 1;
            else
                fail("symbolic", {{"coefficient_at_mu", at_mu.to_string()}});
        }
        for (const auto& t : taus) {
            bool nonnegative = true;
            Rational at_mu = 0;
            for (const auto& [nu, c] : diff) {
                Rational v = eval_at(c, t.value);
                if (v < 0) nonnegative = false;
                if (nu == mu) at_mu = v;
            }
            if (nonnegative != contained) fail("t=" + t.to_string(), {{"nonnegative", nonnegative}});
            if (!contained && at_mu != -1) fail("t=" + t.to_string(), {{"coefficient_at_mu", to_string(at_mu)}});
        }
        // Independent Schur pipeline at t = 1.
        auto s = schur_shifted_expansion(lambda, n);
        for (const auto& [nu, c] : schur_shifted_expansion(mu, n)) s[nu] -= c;
        std::erase_if(s, [](const auto& kv) { return kv.second == 0; });
        const bool schur_positive = std::all_of(s.begin(), s.end(), [](const auto& kv) { return kv.second >= 0; });
        if (schur_positive != contained) fail("schur", {{"schur_positive", schur_positive}});
        std::map<Partition, Rational, PartitionOrder> jack_at_one;
        for (const auto& [nu, c] : diff) {
            Rational v = eval_at(c, Rational(1));
            if (v != 0) jack_at_one.emplace(nu, v);
        }
        if (jack_at_one != s) fail("schur", {{"mismatch", "Jack coefficients at t=1 differ from Schur coefficients"}});
        return res;
    });
    return r;
}

VerificationReport verify_binomial_formula(int d, int n, unsigned threads) {
    VerificationReport r;
    r.claim = "binomial-formula";
    r.bounds = base_bounds(d, n);
    ReportTimer timer(r);
    auto parts = enumerate_partitions(d, n);
    std::vector<PairResult> results(parts.size());
    parallel_for(parts.size(), threads, [&](std::size_t i) {
        const Partition& lambda = parts[i];
        const auto& expansion = shifted_expansion(lambda, n).coeffs;
        for (const auto& [nu, c] : expansion)
            if (nu.size() > d) results[i].counterexamples.push_back({{"lambda", lambda.parts()}, {"nu", nu.parts()}});
        for (const auto& nu : parts) {
            auto it = expansion.find(nu);
            RatFun lhs = it == expansion.end() ? RatFun(0) : it->second;
            RatFun rhs = binomial(lambda, nu, n);
            if (!(lhs == rhs))
                results[i].counterexamples.push_back({{"lambda", lambda.parts()},
                                                      {"nu", nu.parts()},
                                                      {"expansion", lhs.to_string()},
                                                      {"binomial", rhs.to_string()}});
        }
    });
    for (auto& res : results)
        for (auto& c : res.counterexamples) r.add_counterexample(std::move(c));
    r.stats["comparisons"] = parts.size() * parts.size();
    return r;
}

VerificationReport verify_powersum(int d, int n, unsigned threads) {
    VerificationReport r;
    r.claim = "powersum";
    r.bounds = base_bounds(d, n);
    if (d > n) throw UnsupportedRange("powersum check needs d <= n");
    ReportTimer timer(r);
    auto pairs = pairs_where(d, n, [](const auto&, const auto&) { return true; });
    sweep_pairs(r, pairs, threads, [&](const Partition& lambda, const Partition& mu) {
        PairResult res;
        bool positive = powersum_characterization(lambda, mu, n);
        if (positive != contains(lambda, mu)) {
            nlohmann::json c = pair_json(lambda, mu);
            c["powersum_positive"] = positive;
            res.counterexamples.push_back(std::move(c));
        }
        return res;
    });
    return r;
}

namespace {

const std::vector<Basis> kClassicalKinds = {Basis::monomial, Basis::elementary, Basis::powersum, Basis::schur};

// Records every failing probe of (lambda, mu) as one counterexample.
void probe(PairResult& res, Basis kind, const Partition& lambda, const Partition& mu, int n,
           const std::optional<TauValue>& tau, const Grid& grid, const std::string& leg = {}) {
    auto rep = numeric_eval_check(kind, lambda, mu, n, tau, grid);
    res.stats["evaluations"] = res.stats.value("evaluations", 0LL) + static_cast<long long>(grid.size(n));
    if (rep.pass) return;
    nlohmann::json c = pair_json(lambda, mu);
    c["kind"] = to_string(kind);
    if (tau) c["tau"] = tau->to_string();
    if (!leg.empty()) c["leg"] = leg;
    c["points"] = rep.counterexamples;
    c["violations"] = rep.stats["violations"];
    res.counterexamples.push_back(std::move(c));
}

bool witnesses_violation(Basis kind, const Partition& lambda, const Partition& mu, int n, const Grid& grid) {
    return !numeric_eval_check(kind, lambda, mu, n, std::nullopt, grid).pass;
}

VerificationReport classical_sweep(const std::string& claim, int d, int n, const Grid& grid, bool weak,
                                   unsigned threads) {
    VerificationReport r;
    r.claim = claim;
    r.bounds = base_bounds(d, n);
    r.bounds["grid"] = grid.describe(n);
    r.note = "sampling probe, not a proof";
    ReportTimer timer(r);
    auto in_scope = [&](const Partition& l, const Partition& m) { return weak || l.size() == m.size(); };
    auto hypothesis = [&](const Partition& l, const Partition& m) {
        return weak ? weakly_dominates(l, m) : dominates(l, m);
    };
    auto pairs = pairs_where(d, n, in_scope);
    sweep_pairs(r, pairs, threads, [&](const Partition& lambda, const Partition& mu) {
        PairResult res;
        if (hypothesis(lambda, mu)) {
            res.stats["hypothesis_pairs"] = 1;
            for (Basis kind : kClassicalKinds) probe(res, kind, lambda, mu, n, std::nullopt, grid);
        } else {
            // The converse is informational: a finite grid need not see it.
            res.stats["converse_pairs"] = 1;
            bool seen = witnesses_violation(Basis::schur, lambda, mu, n, grid);
            res.stats["converse_witnessed"] = seen ? 1 : 0;
        }
        return res;
    });
    return r;
}

VerificationReport jack_sweep(const std::string& claim, int d, int n, const std::vector<TauValue>& taus,
                              const Grid& grid, bool weak, unsigned threads) {
    VerificationReport r;
    r.claim = claim;
    r.bounds = base_bounds(d, n);
    r.bounds["tau"] = tau_strings(taus);
    r.bounds["grid"] = grid.describe(n);
    r.note = "sampling probe, not a proof";
    ReportTimer timer(r);
    auto pairs = pairs_where(d, n, [&](const Partition& l, const Partition& m) {
        return weak ? weakly_dominates(l, m) : dominates(l, m);
    });
    sweep_pairs(r, pairs, threads, [&](const Partition& lambda, const Partition& mu) {
        PairResult res;
        for (const auto& t : taus) probe(res, Basis::jack, lambda, mu, n, t, grid);
        return res;
    });
    r.stats["points_per_pair"] = grid.size(n);
    return r;
}

}  // namespace

VerificationReport verify_cgs(int d, int n, const Grid& grid, unsigned threads) {
    return classical_sweep("cgs", d, n, grid, false, threads);
}

VerificationReport verify_kt(int d, int n, const Grid& grid, unsigned threads) {
    return classical_sweep("kt", d, n, grid.shifted(1), true, threads);
}

VerificationReport verify_corKT(int d, int n, const Grid& grid, unsigned threads) {
    VerificationReport r;
    r.claim = "cor-kt";
    r.bounds = base_bounds(d, n);
    r.bounds["grid"] = grid.describe(n);
    r.note = "sampling probe, not a proof";
    ReportTimer timer(r);
    const Grid upper = grid.shifted(1);
    auto pairs = pairs_where(d, n, [](const Partition& l, const Partition& m) { return weakly_dominates(l, m); });
    sweep_pairs(r, pairs, threads, [&](const Partition& lambda, const Partition& mu) {
        PairResult res;
        auto nu = interpolating_partition(lambda, mu);
        if (!nu || !contains(lambda, *nu) || !dominates(*nu, mu)) {
            nlohmann::json c = pair_json(lambda, mu);
            c["error"] = "no interpolating partition";
            res.counterexamples.push_back(std::move(c));
            return res;
        }
        for (Basis kind : kClassicalKinds) {
            // f(x + 1) differences at x in the grid are values on the shifted grid.
            probe(res, kind, lambda, *nu, n, std::nullopt, upper, "containment");
            probe(res, kind, *nu, mu, n, std::nullopt, grid, "dominance");
            probe(res, kind, *nu, mu, n, std::nullopt, upper, "dominance");
            probe(res, kind, lambda, mu, n, std::nullopt, upper, "total");
        }
        return res;
    });
    return r;
}

VerificationReport verify_conj_cgs(int d, int n, const std::vector<TauValue>& taus, const Grid& grid,
                                   unsigned threads) {
    return jack_sweep("conj-cgs", d, n, taus, grid, false, threads);
}

VerificationReport verify_conj_kt(int d, int n, const std::vector<TauValue>& taus, const Grid& grid,
                                  unsigned threads) {
    return jack_sweep("conj-kt", d, n, taus, grid.shifted(1), true, threads);
}

}  // namespace jackpos
