#include "jackpos/ratfun.hpp"

#include "jackpos/errors.hpp"

#include <cctype>

namespace jackpos {

bool encloses(std::string_view s);  // tau_poly.cpp

RatFun::RatFun(const TauPoly& num, const TauPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    canonicalize();
}

void RatFun::canonicalize() {
    if (num_.is_zero()) {
        den_ = TauPoly(1);
        return;
    }
    if (den_.degree() > 0) {
        TauPoly g = TauPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = TauPoly::divmod(num_, g).first;
            den_ = TauPoly::divmod(den_, g).first;
        }
    }
    Rational lc = den_.leading();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RatFun::constant_value() const { return num_.coeff(0); }

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (den_.degree() > 0) canonicalize();
        else if (num_.is_zero()) den_ = TauPoly(1);
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFun();
    if (den_.degree() == 0 && o.den_.degree() == 0) {
        num_ *= o.num_;
        return *this;
    }
    // Cross-cancel first to keep the product small.
    TauPoly g1 = TauPoly::gcd(num_, o.den_);
    TauPoly g2 = TauPoly::gcd(o.num_, den_);
    TauPoly n1 = g1.degree() > 0 ? TauPoly::divmod(num_, g1).first : num_;
    TauPoly d2 = g1.degree() > 0 ? TauPoly::divmod(o.den_, g1).first : o.den_;
    TauPoly n2 = g2.degree() > 0 ? TauPoly::divmod(o.num_, g2).first : o.num_;
    TauPoly d1 = g2.degree() > 0 ? TauPoly::divmod(den_, g2).first : den_;
    num_ = n1 * n2;
    den_ = d1 * d2;
    Rational lc = den_.leading();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(t)");
    RatFun r;
    r.num_ = den_;
    r.den_ = num_;
    Rational lc = r.den_.leading();
    if (lc != 1) {
        Rational inv = 1 / lc;
        r.num_ *= inv;
        r.den_ *= inv;
    }
    return r;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

std::pair<TauPoly, TauPoly> RatFun::cleared() const {
    if (is_zero()) return {TauPoly{}, TauPoly(1)};
    // Clear denominators of both parts, then divide out the common content.
    std::vector<Rational> all = num_.coeffs();
    all.insert(all.end(), den_.coeffs().begin(), den_.coeffs().end());
    Rational f = TauPoly(std::move(all)).integer_clearing_factor();
    // integer_clearing_factor on the concatenation ignores positions, which
    // is what we want: one scale for every coefficient of num and den.
    return {num_ * f, den_ * f};
}

namespace {

std::string wrap(const TauPoly& p) {
    std::string s = p.to_string();
    int terms = 0;
    for (const auto& c : p.coeffs())
        if (c != 0) ++terms;
    return terms > 1 ? "(" + s + ")" : s;
}

}  // namespace

std::string RatFun::to_string() const {
    auto [n, d] = cleared();
    if (d == TauPoly(1)) return n.to_string();
    return wrap(n) + "/" + wrap(d);
}

RatFun parse_ratfun(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational function");
    // Split at the first '/' outside parentheses. Coefficients are integers
    // in this grammar, so "a/b" always means a divided by b.
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == '/' && depth == 0) {
            TauPoly den = parse_tau_poly(s.substr(i + 1));
            if (den.is_zero()) throw ParseError("zero denominator in '" + s + "'");
            return RatFun(parse_tau_poly(s.substr(0, i)), den);
        }
    }
    return RatFun(parse_tau_poly(s));
}

RatFun ratfun_arith(const RatFun& a, const RatFun& b, Op op) {
    switch (op) {
        case Op::add: return a + b;
        case Op::sub: return a - b;
        case Op::mul: return a * b;
        case Op::div:
            if (b.is_zero()) throw DivisionByZero("division by zero in Q(t)");
            return a / b;
    }
    throw InvariantViolation("unknown arithmetic op");
}

Rational eval_at(const RatFun& f, const Rational& t0) {
    Rational d = f.den().eval(t0);
    if (d == 0) throw PoleError("pole at t = " + t0.get_str() + " of " + f.to_string());
    return f.num().eval(t0) / d;
}

Limit limit_at_infinity(const RatFun& f) {
    if (f.is_zero()) return {Limit::Kind::finite, 0};
    int dn = f.num().degree();
    int dd = f.den().degree();
    if (dn < dd) return {Limit::Kind::finite, 0};
    Rational ratio = f.num().leading() / f.den().leading();
    if (dn == dd) return {Limit::Kind::finite, ratio};
    return {ratio > 0 ? Limit::Kind::plus_infinity : Limit::Kind::minus_infinity, 0};
}

std::string to_string(const Limit& l) {
    switch (l.kind) {
        case Limit::Kind::finite: return l.value.get_str();
        case Limit::Kind::plus_infinity: return "+inf";
        case Limit::Kind::minus_infinity: return "-inf";
    }
    return "?";
}

}  // namespace jackpos
