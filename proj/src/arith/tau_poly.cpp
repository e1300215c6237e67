#include "jackpos/tau_poly.hpp"

#include "jackpos/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace jackpos {

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational");
    auto valid_int = [](std::string_view v) {
        if (!v.empty() && (v[0] == '-' || v[0] == '+')) v.remove_prefix(1);
        return !v.empty() && std::all_of(v.begin(), v.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        });
    };
    auto slash = s.find('/');
    std::string p = s.substr(0, slash);
    std::string q = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(p) || !valid_int(q) || q[0] == '-' || q[0] == '+')
        throw ParseError("malformed rational '" + s + "'");
    if (p[0] == '+') p.erase(0, 1);
    Integer den(q);
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational r(Integer(p), den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

TauPoly::TauPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

TauPoly::TauPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TauPoly::TauPoly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

TauPoly TauPoly::monomial(const Rational& c, int power) {
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return TauPoly(std::move(v));
}

void TauPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational TauPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational TauPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

int TauPoly::valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return static_cast<int>(k);
    return 0;
}

Rational TauPoly::eval(const Rational& t0) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t0;
        acc += *it;
    }
    return acc;
}

TauPoly TauPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return TauPoly(std::move(d));
}

TauPoly TauPoly::monic() const {
    if (is_zero()) return {};
    TauPoly r = *this;
    Rational inv = 1 / leading();
    for (auto& c : r.coeffs_) c *= inv;
    return r;
}

TauPoly TauPoly::strip_t_powers() const {
    int v = valuation();
    if (v == 0) return *this;
    return TauPoly(std::vector<Rational>(coeffs_.begin() + v, coeffs_.end()));
}

TauPoly TauPoly::operator-() const {
    TauPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TauPoly& TauPoly::operator+=(const TauPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

TauPoly& TauPoly::operator-=(const TauPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

TauPoly operator*(const TauPoly& a, const TauPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    Rational tmp;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
            r[i + j] += tmp;
        }
    }
    return TauPoly(std::move(r));
}

TauPoly& TauPoly::operator*=(const TauPoly& o) { return *this = *this * o; }

TauPoly& TauPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::pair<TauPoly, TauPoly> TauPoly::divmod(const TauPoly& a, const TauPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {TauPoly{}, a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rational inv_lead = 1 / b.leading();
    const int db = b.degree();
    Rational tmp;
    for (int k = a.degree(); k >= db; --k) {
        Rational c = rem[static_cast<std::size_t>(k)] * inv_lead;
        if (c == 0) continue;
        quo[static_cast<std::size_t>(k - db)] = c;
        for (int j = 0; j <= db; ++j) {
            mpq_mul(tmp.get_mpq_t(), c.get_mpq_t(), b.coeffs_[static_cast<std::size_t>(j)].get_mpq_t());
            rem[static_cast<std::size_t>(k - db + j)] -= tmp;
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {TauPoly(std::move(quo)), TauPoly(std::move(rem))};
}

TauPoly TauPoly::gcd(const TauPoly& a, const TauPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return TauPoly(1);
    TauPoly x = a.monic();
    TauPoly y = b.monic();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        TauPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

Rational TauPoly::integer_clearing_factor() const {
    if (is_zero()) return 1;
    Integer l = 1;
    Integer g = 0;
    for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& c : coeffs_) {
        Integer v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rational f(l, g);
    f.canonicalize();
    return f;
}

std::string TauPoly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (c < 0)
            os << "-";
        else if (!first)
            os << "+";
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

namespace {

std::string strip_spaces(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    return s;
}

}  // namespace

bool encloses(std::string_view s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth == 0 && i + 1 < s.size()) return false;
    }
    return true;
}

TauPoly parse_tau_poly(std::string_view text) {
    std::string s = strip_spaces(text);
    while (encloses(s)) s = s.substr(1, s.size() - 2);
    if (s.empty()) throw ParseError("empty polynomial");
    TauPoly acc;
    std::size_t i = 0;
    while (i < s.size()) {
        int sgn_ = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sgn_ = -1;
            ++i;
        }
        std::size_t start = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        Rational coef = 1;
        if (i > start) coef = parse_rational(s.substr(start, i - start));
        int power = 0;
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && s[i] == 't') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t ps = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (ps == i) throw ParseError("missing exponent in '" + s + "'");
                power = std::stoi(s.substr(ps, i - ps));
            }
        } else if (i == start) {
            throw ParseError("malformed polynomial '" + s + "'");
        }
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw ParseError("malformed polynomial '" + s + "'");
        acc += TauPoly::monomial(coef * sgn_, power);
    }
    return acc;
}

}  // namespace jackpos
