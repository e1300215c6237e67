#include "jackpos/partition.hpp"

#include "jackpos/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace jackpos {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw ParseError("partition with a negative part");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw ParseError("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

int Partition::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Partition Partition::conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

std::vector<int> Partition::padded(int n) const {
    std::vector<int> v(static_cast<std::size_t>(std::max(n, length())), 0);
    std::copy(parts_.begin(), parts_.end(), v.begin());
    return v;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
    int sa = a.size();
    int sb = b.size();
    if (sa != sb) return sa < sb;
    return a.parts() < b.parts();
}

Partition parse_partition(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() >= 2 && ((s.front() == '(' && s.back() == ')') || (s.front() == '[' && s.back() == ']')))
        s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    if (s.empty()) return Partition{};
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.size() > 6 ||
            !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("malformed partition '" + std::string(text) + "'");
        parts.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const ParseError& e) {
        throw ParseError("malformed partition '" + std::string(text) + "': " + e.what());
    }
}

bool contains(const Partition& lambda, const Partition& mu) {
    for (std::size_t i = 0; i < mu.parts().size(); ++i)
        if (lambda[i] < mu[i]) return false;
    return true;
}

bool weakly_dominates(const Partition& lambda, const Partition& mu) {
    std::size_t len = std::max(lambda.parts().size(), mu.parts().size());
    int sl = 0;
    int sm = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sl += lambda[i];
        sm += mu[i];
        if (sl < sm) return false;
    }
    return true;
}

bool dominates(const Partition& lambda, const Partition& mu) {
    return lambda.size() == mu.size() && weakly_dominates(lambda, mu);
}

Rational z_factor(const Partition& lambda) {
    Integer z = 1;
    for (int i = 1; i <= (lambda.empty() ? 0 : lambda[0]); ++i) {
        int m = lambda.multiplicity(i);
        for (int k = 1; k <= m; ++k) z *= i * k;
    }
    return Rational(z);
}

bool in_diagram(const Partition& lambda, Cell s) {
    return s.row >= 1 && s.col >= 1 && s.row <= lambda.length() &&
           s.col <= lambda[static_cast<std::size_t>(s.row - 1)];
}

CoArmLeg coarm_coleg(const Partition& lambda, Cell s) {
    if (!in_diagram(lambda, s))
        throw std::out_of_range("cell (" + std::to_string(s.row) + "," + std::to_string(s.col) + ") outside " +
                                lambda.to_string());
    return {s.col - 1, s.row - 1};
}

int arm(const Partition& lambda, Cell s) { return lambda[static_cast<std::size_t>(s.row - 1)] - s.col; }

int leg(const Partition& lambda, Cell s) {
    int below = 0;
    for (int r = s.row + 1; r <= lambda.length() && lambda[static_cast<std::size_t>(r - 1)] >= s.col; ++r) ++below;
    return below;
}

std::vector<Cell> cells(const Partition& lambda) {
    std::vector<Cell> out;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[static_cast<std::size_t>(i - 1)]; ++j) out.push_back({i, j});
    return out;
}

std::vector<TauPoly> shifted_point(const Partition& lambda, int n) {
    if (lambda.length() > n)
        throw UnsupportedRange("partition " + lambda.to_string() + " has more than " + std::to_string(n) + " parts");
    std::vector<TauPoly> pt;
    pt.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        pt.push_back(TauPoly{Rational(lambda[static_cast<std::size_t>(i - 1)]), Rational(n - i)});
    return pt;
}

std::vector<Partition> partitions_of(int size, int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // Parts chosen in increasing lexicographic order of the part sequence.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == n) return;
        for (int p = 1; p <= std::min(remaining, max_part); ++p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    if (size == 0) {
        out.emplace_back();
        return out;
    }
    rec(size, size);
    std::sort(out.begin(), out.end(), PartitionOrder{});
    return out;
}

std::vector<Partition> enumerate_partitions(int d, int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= d; ++k) {
        auto part = partitions_of(k, n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Partition> add_one_box(const Partition& lambda, int n) {
    std::vector<Partition> out;
    for (int i = 0; i < n; ++i) {
        auto parts = lambda.padded(n);
        if (i > 0 && parts[static_cast<std::size_t>(i)] + 1 > parts[static_cast<std::size_t>(i - 1)]) continue;
        ++parts[static_cast<std::size_t>(i)];
        out.emplace_back(std::move(parts));
    }
    return out;
}

}  // namespace jackpos
