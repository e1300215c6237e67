#include "doctest.h"

#include "jackpos/cone.hpp"
#include "jackpos/errors.hpp"
#include "jackpos/interp.hpp"
#include "jackpos/mpoly.hpp"

using namespace jackpos;

namespace {

using Poly = MPoly<RatFun>;

const TauPoly t = TauPoly::t();

// c0 + sum_i c_i x_i in n variables.
Poly linear(int n, std::vector<RatFun> cs, const RatFun& c0) {
    Poly p = Poly::constant(n, c0);
    for (int i = 0; i < n; ++i) p += Poly::variable(n, i) * cs[static_cast<std::size_t>(i)];
    return p;
}

Poly x(int n, int i) { return Poly::variable(n, i); }
Poly c(int n, const RatFun& v) { return Poly::constant(n, v); }

std::vector<int> upto(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

}  // namespace

TEST_CASE("interpolation polynomial of (3,2) in two variables") {
    const int n = 2;
    // x1 x2 (x1 - 1)(x2 - 1)(x1 + x2 - t - 4)
    Poly golden = x(n, 0) * x(n, 1) * (x(n, 0) - c(n, 1)) * (x(n, 1) - c(n, 1)) *
                  linear(n, {1, 1}, RatFun(-t - TauPoly(4)));
    SymPoly expected = collect_symmetric(golden);
    Partition mu{3, 2};
    CHECK(interp_linear(mu, n, Normalization::monic).poly == expected);
    CHECK(interp_tableau(mu, n).poly == expected);

    // The two tableau summands written out.
    Poly common = x(n, 1) * x(n, 0) * (x(n, 1) - c(n, 1)) * (x(n, 0) - c(n, 1));
    Poly sum = common * (x(n, 0) - c(n, RatFun(t + TauPoly(2)))) + common * (x(n, 1) - c(n, 2));
    CHECK(collect_symmetric(sum) == expected);

    // Substituting (3 + t, 2) into the factored form: the last factor is 1.
    std::vector<RatFun> pt{RatFun(TauPoly(3) + t), RatFun(2)};
    CHECK(shifted_point(mu, n) == std::vector<TauPoly>{TauPoly(3) + t, TauPoly(2)});
    RatFun by_hand = pt[0] * pt[1] * (pt[0] - RatFun(1)) * (pt[1] - RatFun(1)) * (pt[0] + pt[1] - RatFun(t + TauPoly(4)));
    CHECK(by_hand == RatFun((TauPoly(3) + t) * TauPoly(2) * (TauPoly(2) + t)));
    CHECK(h_normalizer(mu, n) == by_hand);
}

TEST_CASE("small interpolation polynomials") {
    for (int n = 1; n <= 3; ++n) {
        SymPoly one(n);
        one.add_term(Partition{}, RatFun(1));
        CHECK(interp_linear(Partition{}, n, Normalization::unital).poly == one);
        CHECK(interp_linear(Partition{}, n, Normalization::monic).poly == one);
        CHECK(interp_tableau(Partition{}, n).poly == one);
        CHECK(h_normalizer(Partition{}, n) == RatFun(1));
    }
    CHECK(interp_linear(Partition{1}, 1, Normalization::unital).poly == collect_symmetric(x(1, 0)));
    CHECK(h_normalizer(Partition{1}, 1) == RatFun(1));

    // One variable: falling factorial.
    for (int r = 0; r <= 5; ++r) {
        Poly ff = c(1, 1);
        for (int k = 0; k < r; ++k) ff = ff * (x(1, 0) - c(1, k));
        SymPoly expected = collect_symmetric(ff);
        CHECK(interp_tableau(Partition{r}, 1).poly == expected);
        CHECK(interp_linear(Partition{r}, 1, Normalization::monic).poly == expected);
    }
    CHECK_THROWS_AS(interp_linear(Partition{1, 1}, 1, Normalization::unital), UnsupportedRange);
    CHECK_THROWS_AS(interp_tableau(Partition{1, 1}, 1), UnsupportedRange);
}

TEST_CASE("tableau sum equals linear solve") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : enumerate_partitions(5, n)) {
            CAPTURE(mu.to_string());
            CAPTURE(n);
            auto lin = interp_linear(mu, n, Normalization::monic);
            CHECK(interp_tableau(mu, n).poly == lin.poly);
            CHECK(lin.poly.degree() == mu.size());
            CHECK(lin.poly.coeff(mu) == RatFun(1));
        }
}

TEST_CASE("vanishing and normalization") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& mu : enumerate_partitions(4, n)) {
            auto h = interp_linear(mu, n, Normalization::unital).poly;
            auto hm = interp_linear(mu, n, Normalization::monic).poly;
            RatFun hn = h_normalizer(mu, n);
            CHECK(cone_member(hn, false).cls == ConeClass::member_positive);
            CHECK(h == hm * hn.inverse());
            for (const auto& lambda : enumerate_partitions(mu.size(), n)) {
                RatFun v = evaluate(h, shifted_point(lambda, n));
                CHECK(v == RatFun(lambda == mu ? 1 : 0));
            }
        }
}

TEST_CASE("binomial coefficients") {
    const RatFun two_t_plus_2_over_t_plus_2(TauPoly{2, 2}, TauPoly{2, 1});
    for (int n = 2; n <= 4; ++n) CHECK(binomial(Partition{3, 1}, Partition{3}, n) == two_t_plus_2_over_t_plus_2);
    CHECK(binomial(Partition{2}, Partition{1, 1}, 2) == RatFun(0));
    CHECK(binomial(Partition{6}, Partition{3, 2}, 2) == RatFun(0));
    CHECK(binomial(Partition{5, 1}, Partition{3, 2}, 2) == RatFun(0));
    CHECK(cone_member(binomial(Partition{3, 3}, Partition{3, 2}, 2), false).cls == ConeClass::member_positive);
    for (const auto& lambda : enumerate_partitions(4, 2)) {
        CHECK(binomial(lambda, lambda, 2) == RatFun(1));
        CHECK(binomial(lambda, Partition{}, 2) == RatFun(1));
    }
    CHECK_THROWS_AS(binomial(Partition{1, 1, 1}, Partition{1}, 2), UnsupportedRange);
}

TEST_CASE("Schur-side example coefficients at t = 1") {
    // binom((3,1), nu) - binom((2), nu) at t = 1.
    const std::vector<std::pair<Partition, Rational>> expected = {
        {Partition{3, 1}, 1},         {Partition{3}, Rational(4, 3)}, {Partition{2, 1}, Rational(8, 3)},
        {Partition{2}, 3},            {Partition{1, 1}, 2},           {Partition{1}, 2}};
    for (const auto& [nu, v] : expected) {
        RatFun d = binomial(Partition{3, 1}, nu, 2) - binomial(Partition{2}, nu, 2);
        CHECK(eval_at(d, Rational(1)) == v);
    }
}

TEST_CASE("structural sweeps") {
    CHECK(extra_vanishing_check(4, 2).pass);
    CHECK(extra_vanishing_check(4, 3, 2).pass);
    CHECK(positivity_check(4, 3).pass);
    auto mono = monotonicity_check(4, 3, 2);
    CHECK(mono.pass);
    CHECK(mono.stats["certified"].get<std::size_t>() == mono.stats["nonzero_differences"].get<std::size_t>());
    auto j = to_json(mono);
    CHECK(j["claim"] == "thm2");
    CHECK(j["pass"] == true);
    CHECK(j["counterexamples"].empty());
}

TEST_CASE("n-stability") {
    auto a = n_stability_check(Partition{3, 1}, Partition{3}, {2, 3, 4});
    CHECK(a.stable);
    CHECK(a.values.front().second == RatFun(TauPoly{2, 2}, TauPoly{2, 1}));
    auto b = n_stability_check(Partition{1}, Partition{1}, {1, 2, 3});
    CHECK(b.stable);
    CHECK(b.values.front().second == RatFun(1));
    auto c2 = n_stability_check(Partition{2, 1}, Partition{1, 1}, {2, 3});
    CHECK(c2.stable);
    CHECK(c2.values.front().second == evaluate(interp_linear(Partition{1, 1}, 2, Normalization::unital).poly,
                                                shifted_point(Partition{2, 1}, 2)));
    CHECK_THROWS_AS(n_stability_check(Partition{1, 1}, Partition{1}, {1, 2}), UnsupportedRange);
    (void)upto;
}

TEST_CASE("binomial tables") {
    auto tab = binomial_table(3, 2);
    std::string csv = to_csv(tab);
    CHECK(csv.find("(3,1),(3),2*t+2,t+2\n") == std::string::npos);  // (3,1) has size 4
    auto tab4 = binomial_table(4, 2);
    CHECK(to_csv(tab4).find("(3,1),(3),2*t+2,t+2\n") != std::string::npos);
    CHECK(to_csv(binomial_table(0, 1)) == "( ),( ),1,1\n");
    CHECK(to_csv(binomial_table(3, 2, 1)) == to_csv(binomial_table(3, 2, 3)));

    auto tab2 = binomial_table(2, 2);
    for (const auto& e : tab2.entries) CHECK(e.value.is_zero() != contains(e.lambda, e.nu));
    auto back = binomial_table_from_json(to_json(tab2));
    REQUIRE(back.entries.size() == tab2.entries.size());
    for (std::size_t i = 0; i < back.entries.size(); ++i) {
        CHECK(back.entries[i].lambda == tab2.entries[i].lambda);
        CHECK(back.entries[i].nu == tab2.entries[i].nu);
        CHECK(back.entries[i].value == tab2.entries[i].value);
    }
}
