#include "jackpos/tableau.hpp"

#include <algorithm>

#include <stdexcept>

namespace jackpos {

bool ReverseTableau::is_valid() const {
    if (static_cast<int>(rows.size()) != shape.length()) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != shape[i]) return false;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            int v = rows[i][j];
            if (v < 1 || v > rank) return false;
            if (j > 0 && rows[i][j - 1] < v) return false;
            if (i > 0 && rows[i - 1][j] <= v) return false;
        }
    }
    return true;
}

std::string ReverseTableau::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(rows[i][j]);
        }
        s += "]";
    }
    return s + "]";
}

namespace {

void fill(const Partition& shape, int rank, std::size_t idx, const std::vector<Cell>& order, ReverseTableau& cur,
          std::vector<ReverseTableau>& out) {
    if (idx == order.size()) {
        out.push_back(cur);
        return;
    }
    Cell s = order[idx];
    auto r = static_cast<std::size_t>(s.row - 1);
    auto c = static_cast<std::size_t>(s.col - 1);
    int hi = rank;
    if (c > 0) hi = std::min(hi, cur.rows[r][c - 1]);
    if (r > 0) hi = std::min(hi, cur.rows[r - 1][c] - 1);
    // Rows below still need room for strictly smaller entries.
    int below = leg(shape, s);
    for (int v = below + 1; v <= hi; ++v) {
        cur.rows[r][c] = v;
        fill(shape, rank, idx + 1, order, cur, out);
    }
}

}  // namespace

std::vector<ReverseTableau> enumerate_rt(const Partition& shape, int rank) {
    std::vector<ReverseTableau> out;
    if (rank < 0 || shape.length() > rank) return out;
    ReverseTableau cur{shape, {}, rank};
    for (int p : shape.parts()) cur.rows.emplace_back(static_cast<std::size_t>(p), 0);
    fill(shape, rank, 0, cells(shape), cur, out);
    return out;
}

std::vector<Partition> shape_chain(const ReverseTableau& t) {
    std::vector<Partition> chain;
    for (int k = t.rank + 1; k >= 1; --k) {
        std::vector<int> parts;
        for (const auto& row : t.rows) {
            int cnt = 0;
            for (int v : row)
                if (v >= k) ++cnt;
            parts.push_back(cnt);
        }
        chain.emplace_back(std::move(parts));
    }
    return chain;
}

RatFun hook_ratio(const Partition& lambda, Cell s) {
    int a = arm(lambda, s);
    int l = leg(lambda, s);
    return RatFun(TauPoly{Rational(a), Rational(l + 1)}, TauPoly{Rational(a + 1), Rational(l)});
}

RatFun strip_weight(const Partition& lambda, const Partition& mu) {
    RatFun w(1);
    for (const Cell& s : cells(mu)) {
        auto r = static_cast<std::size_t>(s.row - 1);
        bool row_meets = lambda[r] > mu[r];
        // The strip meets column j iff lambda'_j > mu'_j; for a horizontal
        // strip that means some row i has mu_i < j <= lambda_i.
        bool col_meets = false;
        for (int i = 0; i < lambda.length(); ++i) {
            auto ii = static_cast<std::size_t>(i);
            if (mu[ii] < s.col && s.col <= lambda[ii]) {
                col_meets = true;
                break;
            }
        }
        if (row_meets && !col_meets) w *= hook_ratio(mu, s) / hook_ratio(lambda, s);
    }
    return w;
}

RatFun psi_weight(const ReverseTableau& t) {
    if (!t.is_valid()) throw std::invalid_argument("psi_weight: invalid reverse tableau " + t.to_string());
    auto chain = shape_chain(t);
    RatFun w(1);
    for (std::size_t k = 1; k < chain.size(); ++k) w *= strip_weight(chain[k], chain[k - 1]);
    return w;
}

SymPoly jack_tableau(const Partition& lambda, int n) {
    SymPoly f(n, Basis::monomial);
    for (const auto& t : enumerate_rt(lambda, n)) {
        std::vector<int> content(static_cast<std::size_t>(n), 0);
        for (const auto& row : t.rows)
            for (int v : row) ++content[static_cast<std::size_t>(v - 1)];
        // Symmetric, so the coefficients at partition exponents suffice.
        if (std::is_sorted(content.rbegin(), content.rend())) f.add_term(Partition(content), psi_weight(t));
    }
    return f;
}

}  // namespace jackpos
