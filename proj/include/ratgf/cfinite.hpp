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

#ifndef RATGF_CFINITE_HPP
#define RATGF_CFINITE_HPP

#include <ratgf/linalg.hpp>
#include <ratgf/rational_function.hpp>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ratgf {

/*
 * A C-finite sequence given by d initial values and d recurrence
 * coefficients:  L[n] = rec[0] * L[n-1] + ... + rec[d-1] * L[n-d].
 * F is Rational, or RationalFunction for sequences of polynomials in v.
 */
template <class F>
struct CFiniteSpec {
    std::vector<F> initial;
    std::vector<F> rec;

    std::size_t order() const { return rec.size(); }
    friend bool operator==(const CFiniteSpec& a, const CFiniteSpec& b) {
        return a.initial == b.initial && a.rec == b.rec;
    }
};

/// First n terms of the sequence; the first d are spec.initial verbatim.
template <class F>
std::vector<F> seq_from_rec(const CFiniteSpec<F>& spec, std::size_t n) {
    std::vector<F> s;
    s.reserve(n);
    const std::size_t d = spec.order();
    for (std::size_t i = 0; i < n; ++i) {
        if (i < d) {
            s.push_back(spec.initial[i]);
            continue;
        }
        F acc(0);
        for (std::size_t j = 0; j < d; ++j)
            if (!is_zero(spec.rec[j]) && !is_zero(s[i - 1 - j])) acc += spec.rec[j] * s[i - 1 - j];
        s.push_back(std::move(acc));
    }
    return s;
}

namespace detail {

template <class F>
bool replays(const CFiniteSpec<F>& spec, std::span<const F> data) {
    const auto s = seq_from_rec(spec, data.size());
    for (std::size_t i = 0; i < data.size(); ++i)
        if (s[i] != data[i]) return false;
    return true;
}

template <class F>
CFiniteSpec<F> checked_spec(std::span<const F> data, std::size_t d, std::vector<F> rec) {
    CFiniteSpec<F> spec{std::vector<F>(data.begin(), data.begin() + static_cast<long>(d)), std::move(rec)};
    if (!replays(spec, data)) throw InternalInconsistency("fitted recurrence does not replay its data");
    return spec;
}

}  // namespace detail

/*
 * Looks for a recurrence of order exactly d by undetermined coefficients:
 * one equation per data point after the first d. Requires |data| >= 2d+3.
 * Returns nullopt when no recurrence of order d fits every point.
 */
template <class F>
std::optional<CFiniteSpec<F>> guess_rec1(std::span<const F> data, std::size_t d) {
    if (d == 0) throw std::invalid_argument("recurrence order must be positive");
    if (data.size() <= 2 * d + 2)
        throw DataTooShort("order " + std::to_string(d) + " needs at least " + std::to_string(2 * d + 3) +
                           " terms, got " + std::to_string(data.size()));
    const std::size_t rows = data.size() - d;
    Matrix<F> a(rows, d);
    std::vector<F> b(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t n = r + d;
        for (std::size_t i = 0; i < d; ++i) a(r, i) = data[n - 1 - i];
        b[r] = data[n];
    }
    auto sol = solve_linear(a, b);
    if (!sol.consistent()) return std::nullopt;
    return detail::checked_spec(data, d, std::move(sol.x));
}

/// Smallest-order fit with d = 1 .. floor(|data|/2) - 2.
template <class F>
std::optional<CFiniteSpec<F>> guess_rec(std::span<const F> data) {
    if (data.size() < 5) return std::nullopt;
    for (std::size_t d = 1; d + 2 <= data.size() / 2; ++d)
        if (auto g = guess_rec1(data, d)) return g;
    return std::nullopt;
}

template <class F>
std::optional<CFiniteSpec<F>> guess_rec(const std::vector<F>& data) {
    return guess_rec(std::span<const F>(data));
}

namespace detail {

// Fits a recurrence whose denominator 1 - sum rec[i] t^i satisfies
// D_{d-i} = eps * D_i (palindromic for eps = 1, antipalindromic for -1).
template <class F>
std::optional<CFiniteSpec<F>> guess_sym_rec1(std::span<const F> data, std::size_t d, int eps) {
    // free[j] = index i of D_i carried by unknown j; its mirror d-i follows.
    std::vector<std::size_t> free;
    for (std::size_t i = 1; 2 * i < d; ++i) free.push_back(i);
    if (d % 2 == 0 && eps == 1) free.push_back(d / 2);
    const F e(eps);
    const std::size_t rows = data.size() - d;
    Matrix<F> a(rows, free.size());
    std::vector<F> b(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t n = r + d;
        for (std::size_t j = 0; j < free.size(); ++j) {
            const std::size_t i = free[j];
            a(r, j) = data[n - i];
            if (2 * i != d) a(r, j) += e * data[n - (d - i)];
        }
        b[r] = -(data[n] + e * data[n - d]);
    }
    std::vector<F> x;
    if (!free.empty()) {
        auto sol = solve_linear(a, b);
        if (!sol.consistent()) return std::nullopt;
        x = std::move(sol.x);
    } else {
        for (std::size_t r = 0; r < rows; ++r)
            if (!is_zero(b[r])) return std::nullopt;
    }
    std::vector<F> den(d + 1, F(0));
    den[0] = F(1);
    den[d] = e;
    for (std::size_t j = 0; j < free.size(); ++j) {
        den[free[j]] = x[j];
        den[d - free[j]] = e * x[j];
    }
    std::vector<F> rec(d);
    for (std::size_t i = 1; i <= d; ++i) rec[i - 1] = -den[i];
    return checked_spec(data, d, std::move(rec));
}

}  // namespace detail

/*
 * Like guess_rec, restricted to recurrences with a palindromic or
 * antipalindromic denominator. About half as many unknowns, so order d is
 * accepted once |data| >= d + ceil(d/2) + 3.
 */
template <class F>
std::optional<CFiniteSpec<F>> guess_sym_rec(std::span<const F> data) {
    if (data.size() < 5) return std::nullopt;
    for (std::size_t d = 1; d + (d + 1) / 2 + 3 <= data.size(); ++d)
        for (int eps : {1, -1})
            if (auto g = detail::guess_sym_rec1(data, d, eps)) return g;
    return std::nullopt;
}

template <class F>
std::optional<CFiniteSpec<F>> guess_sym_rec(const std::vector<F>& data) {
    return guess_sym_rec(std::span<const F>(data));
}

/// Numerator and denominator of the generating function sum_{i>=0} L[i+1] t^i,
/// before canonicalization: D = 1 - sum rec[i] t^i, N = (D * initial(t)) mod t^d.
template <class F>
std::pair<Poly<F>, Poly<F>> c_to_r_parts(const CFiniteSpec<F>& spec) {
    const std::size_t d = spec.order();
    std::vector<F> den(d + 1, F(0));
    den[0] = F(1);
    for (std::size_t i = 0; i < d; ++i) den[i + 1] = -spec.rec[i];
    Poly<F> dp(std::move(den));
    Poly<F> init(spec.initial);
    Poly<F> np = (dp * init).truncated(d);

    // Self-check: the expansion must replay deg(D) + 11 terms of the sequence.
    const std::size_t count = static_cast<std::size_t>(dp.degree()) + 11;
    const auto expected = seq_from_rec(spec, count);
    std::vector<F> s(count, F(0));
    for (std::size_t i = 0; i < count; ++i) {
        F acc = np[i];
        for (std::size_t j = 1; j <= std::min(i, d); ++j)
            if (!is_zero(dp.coeffs()[j]) && !is_zero(s[i - j])) acc -= dp.coeffs()[j] * s[i - j];
        s[i] = std::move(acc);
        if (s[i] != expected[i]) throw InternalInconsistency("generating function does not replay the recurrence");
    }
    return {std::move(np), std::move(dp)};
}

/// Rational generating function whose t^i coefficient is the (i+1)-th term.
RationalFunction c_to_r(const CFiniteSpec<Rational>& spec);
/// The same over Q(v), with v-denominators cleared.
BivariateRationalFunction c_to_r(const CFiniteSpec<RationalFunction>& spec);

}  // namespace ratgf

#endif  // RATGF_CFINITE_HPP
