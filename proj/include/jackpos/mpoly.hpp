#pragma once

#include "jackpos/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace jackpos {

using Exponent = std::vector<int>;

/// Sparse polynomial in a fixed number of variables; terms keyed by exponent
/// vectors in lexicographic order, zero coefficients never stored.
template <class Coeff>
class MPoly {
public:
    using Terms = std::map<Exponent, Coeff>;

    explicit MPoly(int nvars = 0) : nvars_(nvars) {}

    static MPoly constant(int nvars, const Coeff& c) {
        MPoly p(nvars);
        p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }
    static MPoly variable(int nvars, int i) {
        MPoly p(nvars);
        Exponent e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.add_term(e, Coeff(1));
        return p;
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Coeff coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void add_term(const Exponent& e, const Coeff& c) {
        if (c == Coeff(0)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == Coeff(0)) terms_.erase(it);
        }
    }

    MPoly& operator+=(const MPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MPoly& operator*=(const Coeff& s) {
        if (s == Coeff(0)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const Coeff& s) { return a *= s; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.nvars_);
        Exponent e(static_cast<std::size_t>(a.nvars_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend bool operator==(const MPoly&, const MPoly&) = default;

    // Exact division; throws InvariantViolation if `d` does not divide.
    MPoly divide_exact(const MPoly& d) const {
        if (d.is_zero()) throw DivisionByZero("multivariate division by zero");
        MPoly rem = *this;
        MPoly quo(nvars_);
        const auto& [lead_e, lead_c] = *d.terms_.rbegin();
        while (!rem.is_zero()) {
            const auto& [re, rc] = *rem.terms_.rbegin();
            Exponent qe(re.size());
            for (std::size_t i = 0; i < re.size(); ++i) {
                qe[i] = re[i] - lead_e[i];
                if (qe[i] < 0) throw InvariantViolation("inexact multivariate division");
            }
            Coeff qc = rc / lead_c;
            MPoly step(nvars_);
            step.add_term(qe, qc);
            quo += step;
            rem -= step * d;
        }
        return quo;
    }

private:
    int nvars_;
    Terms terms_;
};

// Distinct permutations of `v` (any order of input), in lexicographic order.
inline std::vector<Exponent> distinct_permutations(Exponent v) {
    std::vector<Exponent> out;
    std::sort(v.begin(), v.end());
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace jackpos
