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

#ifndef RATGF_LINALG_HPP
#define RATGF_LINALG_HPP

#include <ratgf/matrix.hpp>
#include <ratgf/rational_function.hpp>

#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace ratgf {

/*
 * Determinant by fraction-free (Bareiss) elimination over an integral domain
 * D. Every division is exact, so the routine works over Z and over Z[v].
 *
 * Rows whose pivot-column entry is zero at a step only get rescaled by
 * p_k / p_{k-1}; that rescaling is deferred and folded into one exact
 * multiply-divide when the row is next touched. For banded matrices (graph
 * Laplacians in layer order) this keeps the work near O(n * band^2).
 */
template <class D>
D det_bareiss(Matrix<D> a) {
    if (!a.is_square()) throw ShapeError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return D(1);

    // pivots[s] is the divisor of step s (pivot of step s-1, with pivots[0] = 1).
    std::vector<D> pivots{D(1)};
    pivots.reserve(n + 1);
    // synced[i] = number of elimination steps already applied to row i.
    std::vector<std::size_t> synced(n, 0);
    bool negate = false;

    auto sync = [&](std::size_t i, std::size_t k) {
        const std::size_t s = synced[i];
        if (s == k) return;
        for (std::size_t j = k; j < n; ++j) {
            D& x = a(i, j);
            if (is_zero(x)) continue;
            x = exact_quotient(D(x * pivots[k]), pivots[s]);
        }
        synced[i] = k;
    };

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && is_zero(a(r, k))) ++r;
        if (r == n) return D(0);
        if (r != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
            std::swap(synced[k], synced[r]);
            negate = !negate;
        }
        sync(k, k);
        const D& piv = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(a(i, k))) continue;
            sync(i, k);
            const D lead = a(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                const D& top = a(k, j);
                D& x = a(i, j);
                if (is_zero(top)) {
                    if (!is_zero(x)) x = exact_quotient(D(piv * x), pivots[k]);
                } else {
                    x = exact_quotient(D(piv * x - lead * top), pivots[k]);
                }
            }
            a(i, k) = D(0);
            synced[i] = k + 1;
        }
        pivots.push_back(piv);
    }
    sync(n - 1, n - 1);
    D det = a(n - 1, n - 1);
    return negate ? D(-det) : det;
}

/// Outcome of solve_linear. For Underdetermined, x is one solution (free
/// variables zero); for Inconsistent, x is empty.
template <class F>
struct LinearSolution {
    enum class Kind { Unique, Underdetermined, Inconsistent };
    Kind kind = Kind::Inconsistent;
    std::vector<F> x;

    bool unique() const { return kind == Kind::Unique; }
    bool consistent() const { return kind != Kind::Inconsistent; }
};

/// Maps a field to an integral domain it is the fraction field of, so the
/// solver can eliminate without intermediate gcds.
template <class F>
struct FractionFree;

template <>
struct FractionFree<Rational> {
    using Ring = Integer;
    static Ring numer(const Rational& x) { return x.get_num(); }
    static Ring denom(const Rational& x) { return x.get_den(); }
    static Ring lcm(const Ring& a, const Ring& b) {
        Integer r;
        mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    }
    static Rational make(const Ring& n, const Ring& d) {
        Rational r(n, d);
        r.canonicalize();
        return r;
    }
};

template <>
struct FractionFree<RationalFunction> {
    using Ring = PolyZ;
    static Ring numer(const RationalFunction& x) { return x.num(); }
    static Ring denom(const RationalFunction& x) { return x.den(); }
    static Ring lcm(const Ring& a, const Ring& b) {
        if (is_one(a)) return b;
        if (is_one(b)) return a;
        return exact_div(a, gcd(a, b)) * b;
    }
    static RationalFunction make(const Ring& n, const Ring& d) { return {n, d}; }
};

namespace detail {

template <class F>
void check_shape(const Matrix<F>& a, const std::vector<F>& b) {
    if (b.size() != a.rows())
        throw ShapeError("right-hand side has " + std::to_string(b.size()) + " entries for " +
                         std::to_string(a.rows()) + " equations");
}

template <class F>
bool row_holds(const Matrix<F>& a, const std::vector<F>& b, std::size_t i, const std::vector<F>& x) {
    F acc(0);
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!is_zero(a(i, j)) && !is_zero(x[j])) acc += a(i, j) * x[j];
    return acc == b[i];
}

}  // namespace detail

/*
 * Plain Gauss-Jordan elimination over a field F. Reference route; the
 * fraction-free solve_linear below is the one used in production.
 */
template <class F>
LinearSolution<F> solve_linear_gauss(Matrix<F> a, std::vector<F> b) {
    detail::check_shape(a, b);
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && is_zero(a(p, c))) ++p;
        if (p == m) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(a(r, j), a(p, j));
        std::swap(b[r], b[p]);
        const F inv = F(1) / a(r, c);
        for (std::size_t j = 0; j < n; ++j) a(r, j) *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            const F f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(r, j);
            b[i] -= f * b[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (!is_zero(b[i])) return {};
    LinearSolution<F> out;
    out.kind = r == n ? LinearSolution<F>::Kind::Unique : LinearSolution<F>::Kind::Underdetermined;
    out.x.assign(n, F(0));
    for (std::size_t k = 0; k < r; ++k) out.x[pivot_cols[k]] = b[k];
    return out;
}

/*
 * Exact solve of A x = b over a field F with a FractionFree mapping.
 *
 * Rows are cleared of denominators and reduced one at a time against the
 * pivot rows found so far (Bareiss updates; the entries stay minors of the
 * cleared system, so all divisions are exact). Once rank reaches the number
 * of unknowns, one more row is reduced fraction-free, the solution is formed
 * by fraction-free back substitution, and every remaining equation is
 * checked directly in F.
 */
template <class F>
LinearSolution<F> solve_linear(const Matrix<F>& a, const std::vector<F>& b) {
    detail::check_shape(a, b);
    using FF = FractionFree<F>;
    using R = typename FF::Ring;
    const std::size_t m = a.rows(), n = a.cols();

    struct PivotRow {
        std::vector<R> v;  // n entries of A, then b
        std::size_t col;
    };
    std::vector<PivotRow> pivots;
    std::vector<R> divisors{R(1)};  // divisors[k] = pivot of step k-1

    auto cleared_row = [&](std::size_t i) {
        R l(1);
        for (std::size_t j = 0; j < n; ++j) l = FF::lcm(l, FF::denom(a(i, j)));
        l = FF::lcm(l, FF::denom(b[i]));
        std::vector<R> v(n + 1);
        for (std::size_t j = 0; j <= n; ++j) {
            const F& e = j < n ? a(i, j) : b[i];
            if (is_zero(e)) continue;
            const R d = FF::denom(e);
            v[j] = is_one(d) ? R(FF::numer(e) * l) : R(FF::numer(e) * exact_quotient(l, d));
        }
        return v;
    };

    auto reduce = [&](std::vector<R>& v) {
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            const auto& p = pivots[k].v;
            const R lead = v[pivots[k].col];
            const R& pk = divisors[k + 1];
            for (std::size_t j = 0; j <= n; ++j) {
                if (j == pivots[k].col) continue;
                R& x = v[j];
                if (is_zero(p[j])) {
                    if (!is_zero(x)) x = exact_quotient(R(pk * x), divisors[k]);
                } else if (is_zero(lead)) {
                    if (!is_zero(x)) x = exact_quotient(R(pk * x), divisors[k]);
                } else {
                    x = exact_quotient(R(pk * x - lead * p[j]), divisors[k]);
                }
            }
            v[pivots[k].col] = R(0);
        }
    };

    // Returns false if the row is inconsistent with the pivots; otherwise
    // appends it as a pivot when it raises the rank.
    auto absorb = [&](std::size_t i) {
        std::vector<R> v = cleared_row(i);
        reduce(v);
        std::size_t c = 0;
        while (c < n && is_zero(v[c])) ++c;
        if (c == n) return is_zero(v[n]);
        divisors.push_back(v[c]);
        pivots.push_back({std::move(v), c});
        return true;
    };

    // Fraction-free back substitution: y = det * x is integral for the pivot
    // unknowns, free unknowns are zero.
    auto back_substitute = [&]() {
        const std::size_t r = pivots.size();
        std::vector<F> x(n, F(0));
        if (r == 0) return x;
        const R& det = divisors[r];
        std::vector<R> y(n, R(0));
        for (std::size_t k = r; k-- > 0;) {
            const auto& p = pivots[k].v;
            R acc = det * p[n];
            for (std::size_t kk = k + 1; kk < r; ++kk) {
                const std::size_t c = pivots[kk].col;
                if (!is_zero(p[c]) && !is_zero(y[c])) acc -= p[c] * y[c];
            }
            y[pivots[k].col] = exact_quotient(acc, p[pivots[k].col]);
        }
        for (std::size_t k = 0; k < r; ++k) {
            const std::size_t c = pivots[k].col;
            x[c] = FF::make(y[c], det);
        }
        return x;
    };

    LinearSolution<F> out;
    std::size_t i = 0;
    for (; i < m && pivots.size() < n; ++i)
        if (!absorb(i)) return out;
    if (pivots.size() == n) {
        if (i < m && !absorb(i)) return out;
        if (i < m) ++i;
        out.x = back_substitute();
        for (; i < m; ++i)
            if (!detail::row_holds(a, b, i, out.x)) {
                out.x.clear();
                return out;
            }
        out.kind = LinearSolution<F>::Kind::Unique;
        return out;
    }
    out.x = back_substitute();
    out.kind = LinearSolution<F>::Kind::Underdetermined;
    return out;
}

}  // namespace ratgf

#endif  // RATGF_LINALG_HPP
