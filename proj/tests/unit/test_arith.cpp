#include "doctest.h"

#include "jackpos/cone.hpp"
#include "jackpos/errors.hpp"
#include "jackpos/ratfun.hpp"

#include <random>

using namespace jackpos;

namespace {

const TauPoly t = TauPoly::t();

RatFun rf(std::string_view s) { return parse_ratfun(s); }

TauPoly random_poly(std::mt19937& rng, int max_deg, int lo, int hi) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coef(lo, hi);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    return TauPoly(std::move(c));
}

RatFun random_ratfun(std::mt19937& rng) {
    TauPoly den;
    while (den.is_zero()) den = random_poly(rng, 3, -4, 4);
    return RatFun(random_poly(rng, 3, -4, 4), den);
}

// A random element of the cone: ratio of nonnegative-coefficient polynomials.
RatFun random_cone_member(std::mt19937& rng) {
    TauPoly den;
    while (den.is_zero()) den = random_poly(rng, 3, 0, 5);
    return RatFun(random_poly(rng, 4, 0, 5), den);
}

}  // namespace

TEST_CASE("ratfun arithmetic examples") {
    CHECK(ratfun_arith(RatFun(t, t + 1), RatFun(1, t + 1), Op::add) == RatFun(1));
    CHECK(ratfun_arith(RatFun(t - 1), RatFun(t + 1), Op::mul) == RatFun(t * t - 1));
    RatFun r(t * t - 1, t + 1);
    CHECK(r == RatFun(t - 1));
    CHECK(r.den() == TauPoly(1));
    CHECK_THROWS_AS(ratfun_arith(RatFun(1), RatFun(), Op::div), DivisionByZero);
    CHECK_THROWS_AS(RatFun(t, TauPoly()), DivisionByZero);
}

TEST_CASE("canonical form: monic denominator, coprime parts") {
    RatFun f(TauPoly{2, 4}, TauPoly{4, 2});  // (4t+2)/(2t+4) = (2t+1)/(t+2)
    CHECK(f.den() == TauPoly{2, 1});
    CHECK(f.num() == TauPoly{1, 2});
    CHECK(f.to_string() == "(2*t+1)/(t+2)");
    CHECK(RatFun(TauPoly{-1, 1}, TauPoly(2)).to_string() == "(t-1)/2");
    CHECK(RatFun().to_string() == "0");
    CHECK(RatFun(Rational(3, 4)).to_string() == "3/4");
}

TEST_CASE("canonical form property") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        RatFun a = random_ratfun(rng);
        RatFun b = random_ratfun(rng);
        for (Op op : {Op::add, Op::sub, Op::mul, Op::div}) {
            if (op == Op::div && b.is_zero()) continue;
            RatFun c = ratfun_arith(a, b, op);
            CHECK(c.den().leading() == 1);
            CHECK(TauPoly::gcd(c.num(), c.den()).degree() <= 0);
        }
        if (!b.is_zero()) CHECK(a / b * b == a);
        CHECK(a - b + b == a);
    }
}

TEST_CASE("text round trip") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        RatFun a = random_ratfun(rng);
        CHECK(parse_ratfun(a.to_string()) == a);
    }
    CHECK(rf("(2*t+2)/(t+2)") == RatFun(TauPoly{2, 2}, TauPoly{2, 1}));
    CHECK(rf("t/2") == RatFun(TauPoly{0, Rational(1, 2)}));
    CHECK_THROWS_AS(rf("2*x+1"), ParseError);
    CHECK_THROWS_AS(rf("1/0"), ParseError);
}

TEST_CASE("eval_at") {
    CHECK(eval_at(rf("(2*t+2)/(t+2)"), 1) == Rational(4, 3));
    CHECK(eval_at(rf("(4*t+2)/(t+1)"), 1) == 3);
    CHECK(eval_at(rf("t/(t+1)"), 0) == 0);
    CHECK_THROWS_AS(eval_at(rf("1/(t-1)"), 1), PoleError);
}

TEST_CASE("limit_at_infinity") {
    CHECK(limit_at_infinity(rf("(2*t+2)/(t+2)")) == Limit{Limit::Kind::finite, 2});
    CHECK(limit_at_infinity(rf("1/(t+1)")) == Limit{Limit::Kind::finite, 0});
    CHECK(limit_at_infinity(rf("(t^2+1)/(t+1)")).kind == Limit::Kind::plus_infinity);
    CHECK(limit_at_infinity(rf("(-t^2+1)/(t+1)")).kind == Limit::Kind::minus_infinity);
}

TEST_CASE("cone_member examples") {
    auto v = cone_member(rf("(2*t+6)/(t+2)"));
    CHECK(v.cls == ConeClass::member_positive);
    REQUIRE(v.certificate);
    CHECK(v.certificate->exponent == 0);
    CHECK(v.certificate->u == TauPoly{6, 2});
    CHECK(v.certificate->v == TauPoly{2, 1});

    CHECK(cone_member(rf("(t-1)/(t+1)")).cls == ConeClass::non_member);

    auto q = cone_member(rf("t^2-t+1"));
    CHECK(q.cls == ConeClass::member_positive);
    REQUIRE(q.certificate);
    CHECK(q.certificate->exponent == 1);
    CHECK(q.certificate->u == TauPoly{1, 0, 0, 1});
    CHECK(q.certificate->v == TauPoly{1, 1});

    CHECK(cone_member(RatFun((t - 1) * (t - 1))).cls == ConeClass::non_member);
    CHECK(cone_member(rf("t^2-2*t+1")).cls == ConeClass::non_member);
    CHECK(cone_member(RatFun()).cls == ConeClass::zero);
    CHECK(cone_member(RatFun(t)).cls == ConeClass::member_positive);  // zero at t = 0 is allowed
    CHECK(cone_member(rf("-1")).cls == ConeClass::non_member);
    CHECK(cone_member(rf("1/(t^2-2*t+1)")).cls == ConeClass::non_member);  // pole inside (0, inf)
    CHECK(cone_member(rf("(t+1)/(t^2-t+1)")).cls == ConeClass::member_positive);
}

TEST_CASE("cone closure and certificate soundness") {
    std::mt19937 rng(3);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        RatFun f = trial % 2 ? random_cone_member(rng) : random_ratfun(rng);
        RatFun g = random_cone_member(rng);
        auto vf = cone_member(f);
        auto vg = cone_member(g);
        for (const auto* v : {&vf, &vg})
            if (v->certificate) CHECK(certificate_is_valid(v == &vf ? f : g, *v->certificate));
        if (!vf.nonnegative() || !vg.nonnegative()) continue;
        ++checked;
        CHECK(cone_member(f + g).nonnegative());
        CHECK(cone_member(f * g).nonnegative());
    }
    CHECK(checked > 100);
}

TEST_CASE("cone members are positive at sampled points") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(1, 10000);
    for (int trial = 0; trial < 100; ++trial) {
        RatFun f = trial % 3 ? random_cone_member(rng) : random_ratfun(rng);
        if (cone_member(f).cls != ConeClass::member_positive) continue;
        for (int k = 0; k < 50; ++k) {
            Rational t0(num(rng), 100);  // (0, 100]
            CHECK(eval_at(f, t0) > 0);
        }
    }
}

namespace {

// Distinct roots of p in (0, hi] found by scanning a rational grid: exact
// zeros at grid points plus sign changes between neighbours.
int scan_positive_roots(const TauPoly& p, const Rational& hi, int steps) {
    int roots = 0;
    Rational prev_x = 0;
    int prev_sign = sgn(p.eval(0));
    for (int k = 1; k <= steps; ++k) {
        Rational x = hi * k / steps;
        int s = sgn(p.eval(x));
        if (s == 0) {
            ++roots;
            prev_sign = 0;  // the crossing (if any) is this root
        } else if (prev_sign != 0 && s != prev_sign) {
            // Bisect to make sure exactly one crossing is bracketed at this
            // resolution; odd-multiplicity root count only.
            Rational lo = prev_x, up = x;
            for (int it = 0; it < 30; ++it) {
                Rational mid = (lo + up) / 2;
                int sm = sgn(p.eval(mid));
                if (sm == 0) break;
                (sm == prev_sign ? lo : up) = mid;
            }
            ++roots;
        }
        if (s != 0 || prev_sign == 0) prev_sign = s;
        prev_x = x;
    }
    return roots;
}

}  // namespace

TEST_CASE("Sturm count agrees with grid scanning") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> root(-4, 8);
    std::uniform_int_distribution<int> mult(1, 2);
    std::uniform_int_distribution<int> nfac(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
        TauPoly p;
        if (trial % 2 == 0) {
            // Integer roots with multiplicities, times a root-free quadratic.
            p = TauPoly{3, 1, 1};
            int deg = 2;
            for (int f = nfac(rng); f > 0 && deg < 8; --f) {
                int r = root(rng);
                for (int m = mult(rng); m > 0 && deg < 8; --m, ++deg) p *= TauPoly{-r, 1};
            }
        } else {
            while (p.degree() < 1) p = random_poly(rng, 8, -9, 9);
            if (p.coeff(0) == 0) p += TauPoly(1);
        }
        // Cauchy bound on root magnitudes.
        Rational bound = 1;
        for (const auto& c : p.coeffs()) bound = std::max(bound, Rational(1 + abs(c / p.leading())));
        Integer hi = bound.get_num() / bound.get_den() + 1;
        int sturm = count_positive_roots(p);
        // Step 1/64, so every integer lies on the grid.
        int scanned = scan_positive_roots(p, Rational(hi), static_cast<int>(hi.get_si()) * 64);
        // Even-multiplicity roots do not change sign but do hit the grid
        // exactly (integer roots), so the scan sees every distinct root.
        CHECK_MESSAGE(sturm == scanned, "p = " << p.to_string());
    }
}

TEST_CASE("certificate search bound") {
    // t^2 - 1.9 t + 1 > 0 on R, but needs a large (1+t)^N multiplier.
    RatFun f(TauPoly{1, Rational(-19, 10), 1});
    auto v = cone_member(f);
    CHECK(v.cls == ConeClass::member_positive);
    REQUIRE(v.certificate);
    CHECK(certificate_is_valid(f, *v.certificate));
    CHECK(v.certificate->exponent > 10);
}
