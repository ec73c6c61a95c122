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


#include <ratgf/format.hpp>

namespace ratgf {

namespace {

std::string power(const std::string& var, std::size_t k) {
    if (k == 0) return "";
    return k == 1 ? var : var + "^" + std::to_string(k);
}

// Appends c * var^k as a signed term ("+3*t^2", "-t", "+7").
void append_term(std::string& out, const Integer& c, const std::string& var, std::size_t k) {
    const bool first = out.empty();
    Integer a = abs(c);
    if (sgn(c) < 0) out += "-";
    else if (!first) out += "+";
    if (k == 0) {
        out += a.get_str();
        return;
    }
    if (a != 1) out += a.get_str() + "*";
    out += power(var, k);
}

bool single_term(const PolyZ& p) {
    int n = 0;
    for (const auto& c : p.coeffs()) n += sgn(c) != 0;
    return n <= 1;
}

bool single_term(const BiPoly& p) {
    int n = 0;
    for (const auto& c : p.coeffs())
        for (const auto& x : c.coeffs()) n += sgn(x) != 0;
    return n <= 1;
}

template <class P>
std::string fraction(const std::string& num, const std::string& den, const P& n, const P& d, bool den_is_one) {
    if (den_is_one) return num;
    std::string s = single_term(n) ? num : "(" + num + ")";
    return s + "/" + (single_term(d) ? den : "(" + den + ")");
}

}  // namespace

std::string pretty(const PolyZ& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.size(); k-- > 0;)
        if (sgn(p.coeffs()[k]) != 0) append_term(out, p.coeffs()[k], var, k);
    return out;
}

std::string pretty(const RationalFunction& f, const std::string& var) {
    PolyZ n = f.num(), d = f.den();
    if (sgn(d.leading()) < 0) {
        n = -n;
        d = -d;
    }
    return fraction(pretty(n, var), pretty(d, var), n, d, d == PolyZ(Integer(1)));
}

std::string pretty(const BiPoly& p, const std::string& outer, const std::string& inner) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.size(); k-- > 0;) {
        const PolyZ& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        if (single_term(c)) {
            const std::size_t j = static_cast<std::size_t>(c.degree());
            const Integer& a = c.coeffs()[j];
            if (k == 0) {
                append_term(out, a, inner, j);
                continue;
            }
            const std::string vk = j == 0 ? "" : power(inner, j) + "*";
            Integer m = abs(a);
            out += sgn(a) < 0 ? "-" : (out.empty() ? "" : "+");
            if (m != 1) out += m.get_str() + "*";
            out += vk + power(outer, k);
            continue;
        }
        const bool neg = sgn(c.leading()) < 0;
        const std::string body = pretty(neg ? PolyZ(-c) : c, inner);
        out += neg ? "-" : (out.empty() ? "" : "+");
        out += k == 0 ? (neg || !out.empty() ? "(" + body + ")" : body) : "(" + body + ")*" + power(outer, k);
    }
    return out;
}

std::string pretty(const BivariateRationalFunction& f, const std::string& outer, const std::string& inner) {
    BiPoly n = f.num(), d = f.den();
    if (sgn(d.leading().leading()) < 0) {
        n = -n;
        d = -d;
    }
    const bool one = d == BiPoly(PolyZ(Integer(1)));
    return fraction(pretty(n, outer, inner), pretty(d, outer, inner), n, d, one);
}

std::string pretty(const CFiniteSpec<Rational>& s) {
    auto list = [](const std::vector<Rational>& v) {
        std::string r = "[";
        for (std::size_t i = 0; i < v.size(); ++i) r += (i ? ", " : "") + to_string(v[i]);
        return r + "]";
    };
    return "[" + list(s.initial) + ", " + list(s.rec) + "]";
}

}  // namespace ratgf
