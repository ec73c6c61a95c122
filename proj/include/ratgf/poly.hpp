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

#ifndef RATGF_POLY_HPP
#define RATGF_POLY_HPP

#include <ratgf/errors.hpp>
#include <ratgf/integer.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <type_traits>
#include <utility>
#include <vector>

namespace ratgf {

template <class C>
class Poly;

using PolyZ = Poly<Integer>;
using PolyQ = Poly<Rational>;

namespace detail {
// Unqualified call so that ADL picks up is_zero overloads declared after this
// header (rational functions, nested polynomials).
template <class T>
bool coeff_is_zero(const T& x) {
    return is_zero(x);
}

// Large Poly<Integer> products and exact quotients go through Kronecker
// substitution into a single GMP integer (see poly.cpp).
constexpr std::size_t kKroneckerThreshold = 12;
PolyZ kronecker_mul(const PolyZ& a, const PolyZ& b);
bool kronecker_exact_div(const PolyZ& a, const PolyZ& b, PolyZ& q);
}  // namespace detail

/*
 * Dense univariate polynomial with coefficients in C, stored in ascending
 * degree order. Canonical form has no trailing zero coefficient, so the zero
 * polynomial is the empty vector and degree() of zero is kDegreeOfZero.
 *
 * C is Integer, Rational, or (for bivariate use) Poly<Integer>.
 */
template <class C>
class Poly {
public:
    using coeff_type = C;
    static constexpr int kDegreeOfZero = -1;

    Poly() = default;
    Poly(const C& c) {  // NOLINT: constants convert implicitly
        if (!detail::coeff_is_zero(c)) coeffs_.push_back(c);
    }
    Poly(int c) : Poly(C(c)) {}  // NOLINT
    explicit Poly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<C> coeffs) : coeffs_(coeffs) { trim(); }

    static Poly monomial(const C& c, std::size_t k) {
        if (detail::coeff_is_zero(c)) return {};
        std::vector<C> v(k + 1, C(0));
        v[k] = c;
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(C(1), 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<C>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i; zero beyond the degree.
    C operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C(0); }
    const C& leading() const { return coeffs_.back(); }

    /// Index of the lowest nonzero coefficient. Requires a nonzero polynomial.
    std::size_t valuation() const {
        std::size_t i = 0;
        while (detail::coeff_is_zero(coeffs_[i])) ++i;
        return i;
    }

    void set(std::size_t i, C c) {
        if (i >= coeffs_.size()) coeffs_.resize(i + 1, C(0));
        coeffs_[i] = std::move(c);
        trim();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& b) {
        if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), C(0));
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& b) {
        if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), C(0));
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if constexpr (std::is_same_v<C, Integer>) {
            if (std::min(a.size(), b.size()) >= detail::kKroneckerThreshold)
                return detail::kronecker_mul(a, b);
        }
        std::vector<C> r(a.size() + b.size() - 1, C(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (detail::coeff_is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(r));
    }

    /// Multiplies every coefficient by the scalar c.
    Poly scaled(const C& c) const {
        if (detail::coeff_is_zero(c)) return {};
        Poly r = *this;
        for (auto& x : r.coeffs_) x *= c;
        r.trim();  // zero divisors do not occur in our domains, but stay canonical
        return r;
    }

    /// Multiplies by x^k.
    Poly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<C> v(k, C(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Poly(std::move(v));
    }

    /// Keeps the terms of degree < n.
    Poly truncated(std::size_t n) const {
        if (n >= coeffs_.size()) return *this;
        return Poly(std::vector<C>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n)));
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<C> v(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * C(static_cast<long>(i));
        return Poly(std::move(v));
    }

    /// Horner evaluation at x, in whatever ring T the coefficients embed into.
    template <class T>
    T eval(const T& x) const {
        T acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

    /// Coefficient list reversed (x^deg * p(1/x)).
    Poly reversed() const { return Poly(std::vector<C>(coeffs_.rbegin(), coeffs_.rend())); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim() {
        while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
};

template <class C>
bool is_zero(const Poly<C>& p) {
    return p.is_zero();
}
template <class C>
bool is_one(const Poly<C>& p) {
    return p.size() == 1 && is_one(p[0]);
}

/// Quotient and remainder with deg(r) < deg(b). Needs exact division of
/// coefficients by lc(b): always true over a field, or when lc(b) is a unit.
template <class C>
std::pair<Poly<C>, Poly<C>> divmod(const Poly<C>& a, const Poly<C>& b) {
    if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
    std::vector<C> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Poly<C>{}, a};
    std::vector<C> q(static_cast<std::size_t>(a.degree() - db + 1), C(0));
    const C& lb = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        C& ri = r[static_cast<std::size_t>(i)];
        if (is_zero(ri)) continue;
        C c = exact_quotient(ri, lb);
        q[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {Poly<C>(std::move(q)), Poly<C>(std::move(r))};
}

/// a / b when b divides a exactly in C[x]; otherwise InexactDivision.
template <class C>
Poly<C> exact_div(const Poly<C>& a, const Poly<C>& b) {
    if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw InexactDivision("divisor has larger degree");
    if constexpr (std::is_same_v<C, Integer>) {
        if (b.size() >= detail::kKroneckerThreshold) {
            Poly<C> q;
            if (!detail::kronecker_exact_div(a, b, q)) throw InexactDivision("nonzero remainder");
            return q;
        }
    }
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InexactDivision("nonzero remainder");
    return q;
}

template <class C>
Poly<C> exact_quotient(const Poly<C>& a, const Poly<C>& b) {
    return exact_div(a, b);
}

enum class PolyOp { add, sub, mul, exact_div };

template <class C>
Poly<C> poly_arith(const Poly<C>& a, const Poly<C>& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
        case PolyOp::exact_div: return exact_div(a, b);
    }
    return {};
}

// Integer-coefficient specifics (poly.cpp).

/// Nonnegative gcd of the coefficients; zero for the zero polynomial.
Integer content(const PolyZ& p);
PolyZ primitive_part(const PolyZ& p);
/// gcd in Z[x], normalized to positive leading coefficient (zero iff both are zero).
PolyZ gcd(const PolyZ& a, const PolyZ& b);
/// Sum of the coefficients times x^0 ... i.e. p(1).
inline Integer eval_at_one(const PolyZ& p) {
    Integer s = 0;
    for (const auto& c : p.coeffs()) s += c;
    return s;
}
PolyQ to_rational(const PolyZ& p);
/// Clears denominators: returns (m, z) with p = z / m, m > 0 minimal.
std::pair<Integer, PolyZ> clear_denominators(const PolyQ& p);

}  // namespace ratgf

#endif  // RATGF_POLY_HPP
