#include "doctest.h"

#include "jackpos/cone.hpp"
#include "jackpos/sympoly.hpp"
#include "jackpos/tableau.hpp"

using namespace jackpos;

namespace {

// sum_T weight(T) x^T collected into the monomial basis.
template <class Weight>
SymPoly tableau_sum(const Partition& shape, int n, Weight weight) {
    SymPoly f(n, Basis::monomial);
    for (const auto& t : enumerate_rt(shape, n)) {
        std::vector<int> content(static_cast<std::size_t>(n), 0);
        for (const auto& row : t.rows)
            for (int v : row) ++content[static_cast<std::size_t>(v - 1)];
        if (!std::is_sorted(content.rbegin(), content.rend())) continue;  // keep x^alpha with alpha a partition
        f.add_term(Partition(content), weight(t));
    }
    return f;
}

}  // namespace

TEST_CASE("enumerate_rt examples") {
    auto ts = enumerate_rt({3, 2}, 2);
    REQUIRE(ts.size() == 2);
    CHECK(ts[0].to_string() == "[[2,2,1],[1,1]]");
    CHECK(ts[1].to_string() == "[[2,2,2],[1,1]]");
    CHECK(enumerate_rt({1, 1}, 1).empty());
    auto row = enumerate_rt({2}, 1);
    REQUIRE(row.size() == 1);
    CHECK(row[0].to_string() == "[[1,1]]");
    CHECK(enumerate_rt({}, 3).size() == 1);
}

TEST_CASE("enumerated tableaux are valid and ordered") {
    for (const auto& shape : enumerate_partitions(6, 3))
        for (int n = 1; n <= 3; ++n) {
            auto ts = enumerate_rt(shape, n);
            for (std::size_t i = 0; i < ts.size(); ++i) {
                CHECK(ts[i].is_valid());
                if (i) CHECK(ts[i - 1].rows < ts[i].rows);
            }
        }
}

TEST_CASE("psi weights") {
    for (const auto& t : enumerate_rt({3, 2}, 2)) CHECK(psi_weight(t) == RatFun(1));
    CHECK(psi_weight(enumerate_rt({4}, 1)[0]) == RatFun(1));
    ReverseTableau bad{{2}, {{1, 2}}, 2};
    CHECK_THROWS_AS(psi_weight(bad), std::invalid_argument);
    // P_(2) = m_(2) + 2t/(1+t) m_(1,1)
    auto ts = enumerate_rt({2}, 2);
    REQUIRE(ts.size() == 3);
    CHECK(psi_weight(ts[1]) == RatFun(TauPoly{0, 2}, TauPoly{1, 1}));  // [[2,1]]
}

TEST_CASE("tableau sums: Schur at t = 1 and Jack in general") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& lambda : enumerate_partitions(6, n)) {
            CAPTURE(lambda.to_string());
            CAPTURE(n);
            auto unweighted = tableau_sum(lambda, n, [](const ReverseTableau&) { return RatFun(1); });
            CHECK(unweighted == schur(lambda, n));
            auto weighted = tableau_sum(lambda, n, [](const ReverseTableau& t) { return psi_weight(t); });
            CHECK(weighted == jack(lambda, n));
            CHECK(jack_tableau(lambda, n) == weighted);
            for (const auto& t : enumerate_rt(lambda, n)) {
                RatFun w = psi_weight(t);
                CHECK(eval_at(w, 1) == 1);
                CHECK(cone_member(w, false).cls == ConeClass::member_positive);
            }
        }
}
