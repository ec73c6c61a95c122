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


#include <ratgf/cfinite.hpp>
#include <ratgf/linalg.hpp>
#include <ratgf/toeplitz.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace ratgf {

namespace {

std::string offsets_text(const std::vector<long>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

// Common denominator of every entry and the matching integer matrix.
std::pair<Integer, Matrix<Integer>> scaled(const Matrix<Rational>& a) {
    Integer l = 1;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    Matrix<Integer> z(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) z(i, j) = a(i, j).get_num() * (l / a(i, j).get_den());
    return {l, std::move(z)};
}

Rational unscale(const Integer& v, const Integer& l, std::size_t n) {
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), l.get_mpz_t(), n);
    Rational r(v, p);
    r.canonicalize();
    return r;
}

// allow_dead admits a first offset one step below the band (a zero column).
void validate_state(const ToeplitzFamily& f, const MinorState& s, bool allow_dead = false) {
    const long k1 = static_cast<long>(f.k1()), k2 = static_cast<long>(f.k2());
    const auto& o = s.offsets;
    bool ok = o.size() == f.k1() && !o.empty() && o.back() == k1 - 1 && o.front() >= -(k2 - 1) - (allow_dead ? 1 : 0);
    for (std::size_t i = 1; ok && i < o.size(); ++i) ok = o[i - 1] < o[i];
    if (!ok) throw BadState("offsets " + offsets_text(o) + " do not fit a band of widths " + std::to_string(k1) +
                            ", " + std::to_string(k2));
}

std::vector<Rational> trimmed_values(const ToeplitzFamily& f, const std::vector<long>& offsets) {
    std::vector<Rational> v;
    for (long o : offsets) v.push_back(f.entry(o));
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
    return v;
}

RationalFunction times_t(const Rational& c) {
    return {PolyZ({Integer(0), Integer(c.get_num())}), PolyZ(Integer(c.get_den()))};
}

}  // namespace

Rational ToeplitzFamily::entry(long offset) const {
    if (offset >= 0) return static_cast<std::size_t>(offset) < row.size() ? row[static_cast<std::size_t>(offset)] : Rational(0);
    return static_cast<std::size_t>(-offset) < col.size() ? col[static_cast<std::size_t>(-offset)] : Rational(0);
}

void ToeplitzFamily::validate() const {
    if (row.empty() || col.empty()) throw InconsistentSpec("row and column prefixes must be nonempty");
    if (row[0] != col[0])
        throw InconsistentSpec("diagonal entry differs: row starts with " + to_string(row[0]) + ", column with " +
                               to_string(col[0]));
}

Matrix<Rational> matrix_from_spec(const ToeplitzSpec& spec) {
    spec.family.validate();
    const std::size_t n = spec.n;
    Matrix<Rational> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = spec.family.entry(static_cast<long>(j) - static_cast<long>(i));
    return a;
}

Rational permanent_ryser(const Matrix<Rational>& a) {
    if (!a.is_square()) throw ShapeError("permanent of a non-square matrix");
    const std::size_t n = a.rows();
    if (n > 20) throw BudgetExceeded("inclusion-exclusion permanent limited to n <= 20, got " + std::to_string(n));
    if (n == 0) return 1;
    auto [l, z] = scaled(a);
    std::vector<Integer> sums(n, Integer(0));
    Integer total = 0, prod;
    // Gray-code walk over nonempty column subsets.
    unsigned long subset = 0;
    for (unsigned long k = 1; k < (1ul << n); ++k) {
        const int j = __builtin_ctzl(k);
        subset ^= 1ul << j;
        const bool added = subset >> j & 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(z(i, static_cast<std::size_t>(j))) == 0) continue;
            if (added) sums[i] += z(i, static_cast<std::size_t>(j));
            else sums[i] -= z(i, static_cast<std::size_t>(j));
        }
        prod = 1;
        for (std::size_t i = 0; i < n && sgn(prod) != 0; ++i) prod *= sums[i];
        if (sgn(prod) == 0) continue;
        if (__builtin_popcountl(subset) % 2) total -= prod;
        else total += prod;
    }
    if (n % 2) total = -total;
    return unscale(total, l, n);
}

std::vector<Rational> value_sequence(const ToeplitzFamily& f, ToeplitzMode mode, std::size_t count,
                                     SequenceMethod method) {
    f.validate();
    if (method == SequenceMethod::transfer) {
        auto s = gf_transfer(f, mode).series(count + 1);
        return {s.begin() + 1, s.end()};
    }
    if (mode == ToeplitzMode::perm && count > 20)
        throw BudgetExceeded("direct permanents stop at n = 20 (asked for " + std::to_string(count) +
                             "); use the transfer method");
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t n = 1; n <= count; ++n) {
        const auto a = matrix_from_spec(n, f);
        if (mode == ToeplitzMode::perm) {
            out.push_back(permanent_ryser(a));
        } else {
            auto [l, z] = scaled(a);
            out.push_back(unscale(det_bareiss(std::move(z)), l, n));
        }
    }
    return out;
}

RationalFunction gf_family_guess(const ToeplitzFamily& f, ToeplitzMode mode, std::size_t m, std::size_t n) {
    if (m < 1 || m >= n) throw std::invalid_argument("fit window needs 1 <= m < n");
    const auto data = value_sequence(f, mode, n);
    const std::vector<Rational> window(data.begin() + static_cast<long>(m - 1), data.end());
    const auto spec = guess_rec(window);
    if (!spec) throw NoFit("no recurrence fits terms " + std::to_string(m) + ".." + std::to_string(n));
    const std::size_t d = spec->order();
    std::vector<Rational> den(d + 1, Rational(0));
    den[0] = 1;
    for (std::size_t i = 0; i < d; ++i) den[i + 1] = -spec->rec[i];
    std::vector<Rational> series(n + 1);
    series[0] = 1;
    std::copy(data.begin(), data.end(), series.begin() + 1);
    const PolyQ dp(std::move(den));
    const PolyQ np = (dp * PolyQ(std::move(series))).truncated(d + m);
    const RationalFunction gf = RationalFunction::from_rational(np, dp);
    const auto check = gf.series(n + 1);
    for (std::size_t i = 1; i <= n; ++i)
        if (check[i] != data[i - 1]) throw NoFit("guessed generating function misses term " + std::to_string(i));
    return gf;
}

std::vector<long> MinorState::col_offsets(const ToeplitzFamily& f) const {
    std::vector<long> c;
    const long low = -(static_cast<long>(f.k2()) - 1);
    if (offsets.empty()) return c;
    for (long o = offsets.front(); o >= low; --o) c.push_back(o);
    return c;
}

std::vector<Rational> MinorState::row_values(const ToeplitzFamily& f) const { return trimmed_values(f, offsets); }

std::vector<Rational> MinorState::col_values(const ToeplitzFamily& f) const {
    return trimmed_values(f, col_offsets(f));
}

MinorState root_state(const ToeplitzFamily& f) {
    MinorState s;
    for (std::size_t i = 0; i < f.k1(); ++i) s.offsets.push_back(static_cast<long>(i));
    return s;
}

Matrix<Rational> minor_matrix(const ToeplitzFamily& f, const MinorState& s, std::size_t m) {
    validate_state(f, s, true);
    if (m < f.k1()) throw std::invalid_argument("minor dimension below the row band");
    std::vector<long> cols = s.offsets;
    for (long o = static_cast<long>(f.k1()); cols.size() < m; ++o) cols.push_back(o);
    Matrix<Rational> a(m, m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) a(r, c) = f.entry(cols[c] - static_cast<long>(r));
    return a;
}

std::vector<Expansion> expand_minor(const ToeplitzFamily& f, const MinorState& s, ToeplitzMode mode) {
    f.validate();
    validate_state(f, s);
    const long k1 = static_cast<long>(f.k1()), k2 = static_cast<long>(f.k2());
    std::vector<Expansion> out;
    for (std::size_t p = 0; p < s.offsets.size(); ++p) {
        const long o = s.offsets[p];
        const Rational a = f.entry(o);
        if (sgn(a) == 0) continue;
        MinorState child;
        for (long x : s.offsets)
            if (x != o) child.offsets.push_back(x - 1);
        child.offsets.push_back(k1 - 1);
        const bool dead = child.offsets.front() < -(k2 - 1);
        const bool negative = mode == ToeplitzMode::det && p % 2 == 1;
        out.push_back({negative ? Rational(-a) : a, p + 1, std::move(child), dead});
    }
    return out;
}

TransferScheme children_scheme(const ToeplitzFamily& f, ToeplitzMode mode) {
    f.validate();
    const std::size_t cap = 10 * (std::size_t(1) << std::min<std::size_t>(f.k1() + f.k2(), 40));
    TransferScheme sc;
    sc.family = f;
    sc.mode = mode;
    std::map<MinorState, std::size_t> index;
    sc.states.push_back(root_state(f));
    index.emplace(sc.states.front(), 0);
    for (std::size_t i = 0; i < sc.states.size(); ++i) {
        std::vector<Transition> tr;
        for (auto& e : expand_minor(f, sc.states[i], mode)) {
            if (e.dead) continue;
            auto [it, fresh] = index.emplace(e.child, sc.states.size());
            if (fresh) {
                if (sc.states.size() >= cap)
                    throw SchemeExplosion("more than " + std::to_string(cap) + " minor states");
                sc.states.push_back(std::move(e.child));
            }
            tr.push_back({e.coeff, it->second, e.position});
        }
        sc.transitions.push_back(std::move(tr));
    }
    return sc;
}

RationalFunction gf_transfer(const TransferScheme& scheme) {
    const std::size_t n = scheme.states.size();
    Matrix<RationalFunction> a(n, n);
    std::vector<RationalFunction> b(n);
    b[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = 1;
        for (const auto& t : scheme.transitions[i]) a(i, t.target) -= times_t(t.coeff);
    }
    auto sol = solve_linear(a, b);
    if (!sol.unique()) throw SingularTransferSystem("transfer system over Q(t) is not uniquely solvable");
    return sol.x[0];
}

RationalFunction gf_transfer(const ToeplitzFamily& f, ToeplitzMode mode) { return gf_transfer(children_scheme(f, mode)); }

}  // namespace ratgf
