/*
   Copyright 2026 The ratgf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <ratgf/rational_function.hpp>

namespace ratgf {

namespace {

// Joint content and sign normalization once gcd(num, den) = 1 holds.
void fix_sign(PolyZ& num, PolyZ& den) {
    if (sgn(den[den.valuation()]) < 0) {
        num = -num;
        den = -den;
    }
}

}  // namespace

RationalFunction::RationalFunction(const Rational& c)
    : num_(Integer(c.get_num())), den_(Integer(c.get_den())) {}

RationalFunction::RationalFunction(PolyZ num, PolyZ den) {
    if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = PolyZ(Integer(1));
        return;
    }
    PolyZ g = gcd(num, den);
    if (!is_one(g)) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    fix_sign(num, den);
    num_ = std::move(num);
    den_ = std::move(den);
}

RationalFunction RationalFunction::from_rational(const PolyQ& num, const PolyQ& den) {
    auto [mn, zn] = clear_denominators(num);
    auto [md, zd] = clear_denominators(den);
    // num/den = (zn/mn) / (zd/md) = (zn*md) / (zd*mn)
    return {zn.scaled(md), zd.scaled(mn)};
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_, Canonical{}}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Cross-cancel first so the products stay reduced.
    const PolyZ g1 = gcd(a.num_, b.den_);
    const PolyZ g2 = gcd(b.num_, a.den_);
    PolyZ n = exact_div(a.num_, g1) * exact_div(b.num_, g2);
    PolyZ d = exact_div(a.den_, g2) * exact_div(b.den_, g1);
    fix_sign(n, d);
    return {std::move(n), std::move(d), RationalFunction::Canonical{}};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw ZeroDenominator("division by the zero rational function");
    return a * RationalFunction(b.den_, b.num_);
}

Rational RationalFunction::eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (sgn(d) == 0) throw ZeroDenominator("evaluation at a pole");
    return num_.eval(x) / d;
}

std::vector<Rational> RationalFunction::series(std::size_t n) const {
    if (sgn(den_[0]) == 0) throw ZeroDenominator("no power series expansion: den(0) = 0");
    std::vector<Rational> s(n);
    const Rational d0(den_[0]);
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc(num_[i]);
        const std::size_t top = std::min(i, static_cast<std::size_t>(std::max(den_.degree(), 0)));
        for (std::size_t j = 1; j <= top; ++j) acc -= Rational(den_.coeffs()[j]) * s[i - j];
        s[i] = acc / d0;
    }
    return s;
}

namespace {

PolyZ bipoly_content(const BiPoly& p, PolyZ g) {
    for (const auto& c : p.coeffs()) {
        g = gcd(g, c);
        if (g.degree() == 0 && g[0] == 1) break;
    }
    return g;
}

PolyZ lcm(const PolyZ& a, const PolyZ& b) {
    const PolyZ g = gcd(a, b);
    return exact_div(a, g) * b;
}

}  // namespace

BivariateRationalFunction::BivariateRationalFunction(BiPoly num, BiPoly den) {
    if (den.is_zero()) throw ZeroDenominator("bivariate rational function with zero denominator");
    PolyZ g = bipoly_content(num, bipoly_content(den, PolyZ{}));
    if (!is_one(g)) {
        std::vector<PolyZ> n, d;
        for (const auto& c : num.coeffs()) n.push_back(exact_div(c, g));
        for (const auto& c : den.coeffs()) d.push_back(exact_div(c, g));
        num = BiPoly(std::move(n));
        den = BiPoly(std::move(d));
    }
    const PolyZ& low = den[den.valuation()];
    if (sgn(low[low.valuation()]) < 0) {
        num = -num;
        den = -den;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

BivariateRationalFunction BivariateRationalFunction::from_coefficients(const Poly<RationalFunction>& num,
                                                                       const Poly<RationalFunction>& den) {
    PolyZ m(Integer(1));
    for (const auto& c : num.coeffs()) m = lcm(m, c.den());
    for (const auto& c : den.coeffs()) m = lcm(m, c.den());
    auto clear = [&m](const Poly<RationalFunction>& p) {
        std::vector<PolyZ> v;
        for (const auto& c : p.coeffs()) v.push_back(c.num() * exact_div(m, c.den()));
        return BiPoly(std::move(v));
    };
    return {clear(num), clear(den)};
}

RationalFunction BivariateRationalFunction::at_inner(const Rational& v) const {
    auto subst = [&v](const BiPoly& p) {
        std::vector<Rational> c;
        for (const auto& q : p.coeffs()) c.push_back(q.eval(v));
        return PolyQ(std::move(c));
    };
    return RationalFunction::from_rational(subst(num_), subst(den_));
}

}  // namespace ratgf
