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

#ifndef RATGF_RATIONAL_FUNCTION_HPP
#define RATGF_RATIONAL_FUNCTION_HPP

#include <ratgf/poly.hpp>

#include <vector>

namespace ratgf {

/*
 * Univariate rational function over Q, kept as a quotient of integer
 * polynomials in canonical form:
 *   - gcd(num, den) = 1 in Z[x], including the integer content,
 *   - the lowest-degree nonzero coefficient of den is positive,
 *   - zero is 0/1.
 * Two rational functions are equal iff their canonical forms are identical.
 */
class RationalFunction {
public:
    RationalFunction() : den_(Integer(1)) {}
    RationalFunction(int c) : RationalFunction(Integer(c)) {}  // NOLINT
    RationalFunction(const Integer& c) : num_(c), den_(Integer(1)) {}  // NOLINT
    RationalFunction(const Rational& c);  // NOLINT
    RationalFunction(const PolyZ& p) : num_(p), den_(Integer(1)) {}  // NOLINT
    RationalFunction(PolyZ num, PolyZ den);

    static RationalFunction from_rational(const PolyQ& num, const PolyQ& den);

    const PolyZ& num() const { return num_; }
    const PolyZ& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    /// Value at x; ZeroDenominator if x is a pole.
    Rational eval(const Rational& x) const;

    /// First n power series coefficients at 0. Requires den(0) != 0.
    std::vector<Rational> series(std::size_t n) const;

private:
    struct Canonical {};
    RationalFunction(PolyZ num, PolyZ den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    PolyZ num_;
    PolyZ den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline bool is_one(const RationalFunction& f) { return f.num() == f.den(); }
inline RationalFunction exact_quotient(const RationalFunction& a, const RationalFunction& b) { return a / b; }

/// Canonical representative of num/den.
inline RationalFunction ratfunc_normalize(const PolyZ& num, const PolyZ& den) { return {num, den}; }

/// Polynomial in an outer variable t whose coefficients are polynomials in
/// an inner variable v.
using BiPoly = Poly<PolyZ>;

/*
 * Rational function in (v, t) with integer coefficients. Canonical up to the
 * common content in Z[v] (removed) and sign: the lowest t-coefficient of den
 * has a positive lowest v-coefficient. No gcd in t is taken.
 */
class BivariateRationalFunction {
public:
    BivariateRationalFunction() = default;
    BivariateRationalFunction(BiPoly num, BiPoly den);

    /// Clears the v-denominators of coefficients that are rational functions in v.
    static BivariateRationalFunction from_coefficients(const Poly<RationalFunction>& num,
                                                       const Poly<RationalFunction>& den);

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }

    /// Substitutes a value for the inner variable.
    RationalFunction at_inner(const Rational& v) const;

    friend bool operator==(const BivariateRationalFunction& a, const BivariateRationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    BiPoly num_;
    BiPoly den_;
};

}  // namespace ratgf

#endif  // RATGF_RATIONAL_FUNCTION_HPP
