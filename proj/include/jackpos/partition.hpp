#pragma once

#include "jackpos/rational.hpp"
#include "jackpos/tau_poly.hpp"

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jackpos {

/// Integer partition, stored with trailing zeros trimmed. Constructors accept
/// untrimmed input such as (4,0).
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    // Throws ParseError unless parts are nonnegative and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    // 0-based row access; rows beyond the length read as 0.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // m_i: number of parts equal to i (i >= 1).
    int multiplicity(int i) const;

    Partition conjugate() const;

    // Parts padded with zeros to `n` entries.
    std::vector<int> padded(int n) const;

    // "(3,2)", "()" for the empty partition.
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// Size first, then lexicographic on parts. Within one size this is a linear
// extension of dominance (dominance-smaller partitions come first).
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

// "3,2", "(3,2)", "[3,2]", "" (empty partition). Throws ParseError.
Partition parse_partition(std::string_view text);

bool contains(const Partition& lambda, const Partition& mu);
bool weakly_dominates(const Partition& lambda, const Partition& mu);
bool dominates(const Partition& lambda, const Partition& mu);

// z_lambda = prod_i i^{m_i} m_i!
Rational z_factor(const Partition& lambda);

// 1-based cell (row, col) of a Young diagram.
struct Cell {
    int row;
    int col;
    friend bool operator==(const Cell&, const Cell&) = default;
};

struct CoArmLeg {
    int coarm;
    int coleg;
};

// a'(s) = col - 1, l'(s) = row - 1. Throws std::out_of_range outside the diagram.
CoArmLeg coarm_coleg(const Partition& lambda, Cell s);

// a(s) = lambda_row - col, l(s) = lambda'_col - row.
int arm(const Partition& lambda, Cell s);
int leg(const Partition& lambda, Cell s);

bool in_diagram(const Partition& lambda, Cell s);
std::vector<Cell> cells(const Partition& lambda);

// Coordinates lambda_i + (n - i) t for i = 1..n. Throws UnsupportedRange if
// length(lambda) > n.
std::vector<TauPoly> shifted_point(const Partition& lambda, int n);

// All partitions with size <= d and length <= n, in PartitionOrder.
std::vector<Partition> enumerate_partitions(int d, int n);
// All partitions of exactly `size` with length <= n, in PartitionOrder.
std::vector<Partition> partitions_of(int size, int n);

// Partitions obtained by adding one box to lambda, keeping length <= n.
std::vector<Partition> add_one_box(const Partition& lambda, int n);

}  // namespace jackpos
