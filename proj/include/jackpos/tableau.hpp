#pragma once

#include "jackpos/partition.hpp"
#include "jackpos/ratfun.hpp"
#include "jackpos/sympoly.hpp"

#include <string>
#include <vector>

namespace jackpos {

/// Semi-standard reverse tableau: entries in {1..rank}, strictly decreasing
/// down columns and weakly decreasing along rows.
struct ReverseTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;
    int rank = 0;

    int at(Cell s) const { return rows[static_cast<std::size_t>(s.row - 1)][static_cast<std::size_t>(s.col - 1)]; }
    bool is_valid() const;
    // "[[2,2,1],[1,1]]"
    std::string to_string() const;

    friend bool operator==(const ReverseTableau&, const ReverseTableau&) = default;
};

// All reverse tableaux of the shape with entries <= rank, ordered
// lexicographically by their row-major entry sequence.
std::vector<ReverseTableau> enumerate_rt(const Partition& shape, int rank);

// The horizontal strip chain of T: element k (k = 0..rank) is the shape
// occupied by entries > rank - k, so chain.front() is empty and
// chain.back() is the full shape.
std::vector<Partition> shape_chain(const ReverseTableau& t);

// b_lambda(s) = (a(s) + t (l(s) + 1)) / (a(s) + 1 + t l(s)).
RatFun hook_ratio(const Partition& lambda, Cell s);

// psi_{lambda/mu} for a horizontal strip lambda/mu: product over cells of mu
// lying in a row that meets the strip but in no column that meets it of
// b_mu(s) / b_lambda(s).
RatFun strip_weight(const Partition& lambda, const Partition& mu);

// Jack tableau weight: product of strip weights along the chain of shapes
// {entries >= k}. Throws std::invalid_argument for an invalid tableau.
RatFun psi_weight(const ReverseTableau& t);

// P_lambda(x; t) = sum_T psi_T(t) x^T over reverse tableaux of rank n,
// returned in the monomial basis.
SymPoly jack_tableau(const Partition& lambda, int n);

}  // namespace jackpos
