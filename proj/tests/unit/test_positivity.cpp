#include "doctest.h"

#include "jackpos/cone.hpp"
#include "jackpos/errors.hpp"
#include "jackpos/interp.hpp"
#include "jackpos/mpoly.hpp"
#include "jackpos/positivity.hpp"

using namespace jackpos;

namespace {

using Poly = MPoly<RatFun>;
const TauPoly t = TauPoly::t();

Poly x(int n, int i) { return Poly::variable(n, i); }
Poly c(int n, const RatFun& v) { return Poly::constant(n, v); }

RatFun rf(TauPoly num, TauPoly den) { return RatFun(std::move(num), std::move(den)); }

}  // namespace

TEST_CASE("shifted expansion") {
    auto& e0 = shifted_expansion(Partition{}, 2);
    REQUIRE(e0.coeffs.size() == 1);
    CHECK(e0.coeffs.at(Partition{}) == RatFun(1));

    auto& e1 = shifted_expansion(Partition{1}, 1);
    REQUIRE(e1.coeffs.size() == 2);
    CHECK(e1.coeffs.at(Partition{1}) == RatFun(1));
    CHECK(e1.coeffs.at(Partition{}) == RatFun(1));

    auto& e31 = shifted_expansion(Partition{3, 1}, 2);
    CHECK(e31.coeffs.at(Partition{3, 1}) == RatFun(1));
    CHECK(e31.coeffs.at(Partition{3}) == rf(TauPoly{2, 2}, TauPoly{2, 1}));
    for (const auto& [nu, v] : e31.coeffs) {
        CHECK(contains(Partition{3, 1}, nu));
        CHECK(v == binomial(Partition{3, 1}, nu, 2));
    }
    CHECK_THROWS_AS(shifted_expansion(Partition{1, 1, 1}, 2), UnsupportedRange);
}

TEST_CASE("difference expansion of (3,1) and (2)") {
    auto diff = difference_expansion(Partition{3, 1}, Partition{2}, 2);
    const std::vector<std::pair<Partition, RatFun>> expected = {
        {Partition{3, 1}, RatFun(1)},
        {Partition{3}, rf(TauPoly{2, 2}, TauPoly{2, 1})},
        {Partition{2, 1}, rf(TauPoly{6, 2}, TauPoly{2, 1})},
        {Partition{2}, rf(TauPoly{2, 4}, TauPoly{1, 1})},
        {Partition{1, 1}, rf(TauPoly{3, 1}, TauPoly{1, 1})},
        {Partition{1}, RatFun(2)},
    };
    const std::vector<Rational> at_one = {1, Rational(4, 3), Rational(8, 3), 3, 2, 2};
    CHECK(diff.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CAPTURE(expected[i].first.to_string());
        REQUIRE(diff.contains(expected[i].first));
        CHECK(diff.at(expected[i].first) == expected[i].second);
        CHECK(eval_at(diff.at(expected[i].first), Rational(1)) == at_one[i]);
    }
    CHECK(is_jack_positive(diff));

    // The Schur pipeline gives the same numbers at t = 1.
    auto s = schur_shifted_expansion(Partition{3, 1}, 2);
    for (const auto& [nu, v] : schur_shifted_expansion(Partition{2}, 2)) s[nu] -= v;
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(s[expected[i].first] == at_one[i]);

    CHECK(difference_expansion(Partition{2, 1}, Partition{2, 1}, 3).empty());
    CHECK(is_jack_positive({}));

    auto bad = difference_expansion(Partition{2}, Partition{1, 1}, 2);
    CHECK_FALSE(is_jack_positive(bad));
    CHECK(bad.at(Partition{1, 1}) == RatFun(-1));
}

TEST_CASE("transitivity of Jack positivity") {
    const int n = 2;
    auto parts = enumerate_partitions(3, n);
    for (const auto& a : parts)
        for (const auto& b : parts)
            for (const auto& m : parts)
                if (is_jack_positive(difference_expansion(a, b, n)) && is_jack_positive(difference_expansion(b, m, n)))
                    CHECK(is_jack_positive(difference_expansion(a, m, n)));
}

TEST_CASE("examples with two variables and (4) against (3,1)") {
    const int n = 2;
    Poly d2 = (x(n, 0) - x(n, 1)) * (x(n, 0) - x(n, 1));
    // (1/15)(x1 - x2)^2 (3x1^2 + 4x1x2 + 3x2^2)
    Poly sra = d2 * (x(n, 0) * x(n, 0) * RatFun(3) + x(n, 0) * x(n, 1) * RatFun(4) + x(n, 1) * x(n, 1) * RatFun(3)) *
               RatFun(Rational(1, 15));
    CHECK(normalized_difference(Basis::schur, Partition{4}, Partition{3, 1}, n) == collect_symmetric(sra));

    // (t+3)(x1-x2)^2 / (4(2t+1)(2t+3)) * (t(x1+x2)^2 + 2(x1^2+x1x2+x2^2))
    Poly s = x(n, 0) + x(n, 1);
    Poly q = x(n, 0) * x(n, 0) + x(n, 0) * x(n, 1) + x(n, 1) * x(n, 1);
    RatFun pre = rf(TauPoly{3, 1}, TauPoly(4) * TauPoly{1, 2} * TauPoly{3, 2});
    Poly jack_form = d2 * pre * (s * s * RatFun(t) + q * RatFun(2));
    SymPoly jack_diff = normalized_difference(Basis::jack, Partition{4}, Partition{3, 1}, n);
    CHECK(jack_diff == collect_symmetric(jack_form));

    // The elementary path is the t -> infinity limit of the Jack difference.
    auto lim = limit_coefficients(jack_diff);
    auto e = specialize(normalized_difference(Basis::elementary, Partition{4}, Partition{3, 1}, n), Rational(0));
    CHECK(lim == e);

    auto rep = numeric_eval_check(Basis::schur, Partition{4}, Partition{3, 1}, n, std::nullopt, basic_grid());
    CHECK(rep.pass);
    CHECK(rep.note == "sampling probe, not a proof");
    CHECK(rep.stats["points"] == 36);
    for (const auto& tau : default_probe_taus())
        CHECK(numeric_eval_check(Basis::jack, Partition{4}, Partition{3, 1}, n, tau, dense_grid()).pass);
}

TEST_CASE("numeric probes find violations without dominance") {
    // (2) dominates (1,1), so the difference is (x1 - x2)^2 / 3 >= 0.
    CHECK(numeric_eval_check(Basis::schur, Partition{2}, Partition{1, 1}, 2, std::nullopt, basic_grid()).pass);
    auto rep = numeric_eval_check(Basis::schur, Partition{1, 1}, Partition{2}, 2, std::nullopt, basic_grid());
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.counterexamples.empty());
    CHECK_THROWS_AS(numeric_eval_check(Basis::jack, Partition{2}, Partition{1, 1}, 2, std::nullopt, basic_grid()),
                    std::invalid_argument);
}

TEST_CASE("power-sum characterization") {
    CHECK(powersum_characterization(Partition{1}, Partition{}, 1));
    auto d = powersum_difference(Partition{1}, Partition{}, 1);
    REQUIRE(d.size() == 1);
    CHECK(d.at(Partition{1}) == 1);
    CHECK_FALSE(powersum_characterization(Partition{2}, Partition{1, 1}, 2));
    CHECK(powersum_characterization(Partition{2, 1}, Partition{1}, 3));
    CHECK_THROWS_AS(powersum_characterization(Partition{3}, Partition{1}, 2), UnsupportedRange);

    // Against the general change of basis.
    for (int n = 1; n <= 4; ++n)
        for (const auto& lambda : enumerate_partitions(n, n))
            for (const auto& mu : enumerate_partitions(n, n)) {
                SymPoly f = convert(normalized_difference(Basis::powersum, lambda, mu, n), Basis::monomial);
                SymPoly g = convert(shift_vars(f), Basis::powersum);
                // shift_vars of the difference of normalized p's is the shifted difference.
                SymPoly lhs = convert(shift_vars(normalized_difference(Basis::powersum, lambda, mu, n)),
                                      Basis::powersum);
                std::map<Partition, Rational, PartitionOrder> expected;
                for (const auto& [rho, v] : lhs.terms()) {
                    // p_0 = n: the constant term of the expansion lives at the empty partition.
                    expected.emplace(rho, eval_at(v, Rational(0)));
                }
                CHECK(powersum_difference(lambda, mu, n) == expected);
                (void)g;
            }
    CHECK(verify_powersum(4, 4).pass);
    CHECK_THROWS_AS(verify_powersum(3, 2), UnsupportedRange);
}

TEST_CASE("interpolating partitions") {
    CHECK(interpolating_partition(Partition{3, 1}, Partition{2, 2}) == Partition{3, 1});
    CHECK(interpolating_partition(Partition{2}, Partition{1, 1}) == Partition{2});
    CHECK(interpolating_partition(Partition{2, 1}, Partition{2, 1}) == Partition{2, 1});
    CHECK(interpolating_partition(Partition{4, 2}, Partition{2, 1}) == Partition{3});
    CHECK_FALSE(interpolating_partition(Partition{1, 1}, Partition{2}).has_value());
    for (const auto& lambda : enumerate_partitions(5, 3))
        for (const auto& mu : enumerate_partitions(5, 3))
            if (auto nu = interpolating_partition(lambda, mu)) {
                CHECK(contains(lambda, *nu));
                CHECK(dominates(*nu, mu));
            }
}

TEST_CASE("grids and tau values") {
    CHECK(basic_grid().size(2) == 36);
    CHECK(dense_grid().size(2) == 225);
    for (const auto& v : basic_grid().values)
        CHECK(std::find(dense_grid().values.begin(), dense_grid().values.end(), v) != dense_grid().values.end());
    auto pts = basic_grid().shifted(1).points(2);
    CHECK(pts.front() == std::vector<Rational>{1, 1});
    CHECK(pts.back() == std::vector<Rational>{6, 6});
    CHECK(parse_grid("0,1/2,3").values == std::vector<Rational>{0, Rational(1, 2), 3});
    CHECK_THROWS_AS(parse_grid("0,-1"), ParseError);
    auto taus = parse_tau_list("0,1/2,1,2,inf");
    CHECK(taus == default_probe_taus());
    CHECK(taus.back().to_string() == "inf");
    CHECK_THROWS_AS(parse_tau("-1"), ParseError);
    CHECK_THROWS_AS(parse_tau("x"), ParseError);
}

TEST_CASE("sweeps at small bounds") {
    auto thm1 = verify_thm1(4, 2);
    CHECK(thm1.pass);
    CHECK(thm1.stats["negative_witnesses"].get<long long>() ==
          thm1.stats["pairs"].get<long long>() - thm1.stats["containing"].get<long long>());
    CHECK(verify_binomial_formula(4, 3).pass);
    CHECK(verify_cgs(4, 2, basic_grid()).pass);
    CHECK(verify_kt(4, 2, basic_grid()).pass);
    CHECK(verify_corKT(4, 2, basic_grid()).pass);
    auto conj = verify_conj_cgs(4, 2, default_probe_taus(), basic_grid(), 2);
    CHECK(conj.pass);
    CHECK(conj.note == "sampling probe, not a proof");
    CHECK(verify_conj_kt(3, 2, default_probe_taus(), basic_grid()).pass);
    // Same report regardless of worker count.
    auto a = to_json(verify_cgs(3, 2, basic_grid(), 1));
    auto b = to_json(verify_cgs(3, 2, basic_grid(), 3));
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    CHECK(a == b);
}
