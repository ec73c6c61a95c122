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


#include <ratgf/spanning_gf.hpp>

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace ratgf {

namespace {

std::string render(const Rational& x) { return to_string(x); }

std::string render(const RationalFunction& x) {
    // data terms are polynomials in v
    std::string s = "[";
    const auto& c = x.num().coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].get_str();
    return s + "]";
}

template <class F>
std::optional<CFiniteSpec<F>> run_guesser(const std::vector<F>& window, Guesser g) {
    return g == Guesser::symmetric ? guess_sym_rec(window) : guess_rec(window);
}

template <class F, class Term>
std::pair<CFiniteSpec<F>, std::size_t> adaptive_fit(Term&& term, std::size_t expected_order, Guesser guesser,
                                                    const FitBudget& budget, std::vector<F>& data) {
    if (budget.max_terms < budget.holdout + 5)
        throw std::invalid_argument("term budget " + std::to_string(budget.max_terms) + " leaves no fitting window");
    std::size_t want = std::max<std::size_t>(12, 2 * expected_order + 8);
    want = std::min(want, budget.max_terms);
    for (;;) {
        while (data.size() < want) data.push_back(F(term(data.size() + 1)));
        const std::vector<F> window(data.begin(), data.end() - static_cast<long>(budget.holdout));
        if (auto spec = run_guesser(window, guesser))
            if (seq_from_rec(*spec, data.size()) == data) return {std::move(*spec), data.size()};
        if (want == budget.max_terms) break;
        want = std::min(2 * want, budget.max_terms);
    }
    std::vector<std::string> dump;
    for (const F& x : data) dump.push_back(render(x));
    throw NoFitWithinBudget("no validated recurrence within " + std::to_string(budget.max_terms) + " terms",
                            std::move(dump));
}

std::size_t expected_grid_order(std::size_t vertices) {
    return std::size_t(1) << std::min<std::size_t>(vertices - 1, 12);
}

}  // namespace

GFResult fit_sequence(const std::function<Rational(std::size_t)>& term, std::size_t expected_order,
                      Guesser guesser, const FitBudget& budget) {
    GFResult r;
    auto [spec, used] = adaptive_fit(term, expected_order, guesser, budget, r.data);
    r.gf = c_to_r(spec) * PolyZ::x();
    r.spec = std::move(spec);
    r.data_used = used;
    return r;
}

BivariateGFResult fit_sequence(const std::function<PolyZ(std::size_t)>& term, std::size_t expected_order,
                               Guesser guesser, const FitBudget& budget) {
    std::vector<RationalFunction> data;
    auto [spec, used] = adaptive_fit(term, expected_order, guesser, budget, data);
    BivariateGFResult r;
    const auto g = c_to_r(spec);
    r.gf = BivariateRationalFunction(g.num().shifted(1), g.den());
    r.spec = std::move(spec);
    r.data_used = used;
    for (const auto& x : data) r.data.push_back(x.num());
    return r;
}

GFResult gf_spanning(const LabeledGraph& base, Guesser guesser, const FitBudget& budget) {
    if (is_zero(spanning_tree_count(base))) throw NotConnected("base graph is disconnected");
    auto term = [&](std::size_t n) { return Rational(spanning_tree_count(product_with_path(base, n))); };
    return fit_sequence(term, expected_grid_order(base.n_vertices()), guesser, budget);
}

GFResult gf_grid(std::size_t k, Guesser guesser, const FitBudget& budget) {
    return gf_spanning(path_graph(k), guesser, budget);
}

Integer two_forest_term(std::size_t k, std::size_t n) {
    if (k == 0 || n == 0) throw std::invalid_argument("grid dimensions must be positive");
    if (k * n == 1) return 0;
    return two_forest_count(grid_graph(k, n), 0, k * n - 1);
}

GFResult gf_two_forest(std::size_t k, const FitBudget& budget) {
    if (k == 0) throw std::invalid_argument("grid dimensions must be positive");
    auto term = [&](std::size_t n) { return Rational(two_forest_term(k, n)); };
    return fit_sequence(term, 3 * expected_grid_order(k), Guesser::plain, budget);
}

PolyZ c_poly(std::size_t k, const FitBudget& budget) {
    if (k < 2) throw std::invalid_argument("c-poly needs k >= 2");
    const GFResult s = gf_two_forest(k, budget);
    const GFResult f = gf_grid(k, Guesser::symmetric, budget);
    const PolyZ sq = f.gf.den() * f.gf.den();
    PolyZ c;
    try {
        c = exact_div(s.gf.den(), sq);
    } catch (const InexactDivision&) {
        throw StructureConjectureViolated("den(S_" + std::to_string(k) + ") is not divisible by den(F_" +
                                          std::to_string(k) + ")^2");
    }
    if (sgn(c.leading()) < 0) c = -c;
    return c;
}

Rational resistance(std::size_t k, std::size_t n) {
    if (k == 0 || n == 0) throw std::invalid_argument("grid dimensions must be positive");
    if (k * n < 2) throw BadVertexPair("the 1 x 1 grid has a single corner");
    const auto g = grid_graph(k, n);
    Rational r(two_forest_count(g, 0, k * n - 1), spanning_tree_count(g));
    r.canonicalize();
    return r;
}

Rational doyle_constant(std::size_t k) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    Rational s = 0;
    for (std::size_t i = 1; i < k; ++i) {
        Rational x(Integer(k - i), Integer(k));
        x.canonicalize();
        s += x * x;
    }
    return 2 * s;
}

BivariateGFResult gf_ver(const LabeledGraph& base, Guesser guesser, const FitBudget& budget) {
    if (is_zero(spanning_tree_count(base))) throw NotConnected("base graph is disconnected");
    auto term = [&](std::size_t n) { return ver_polynomial(product_with_path(base, n)); };
    return fit_sequence(term, expected_grid_order(base.n_vertices()), guesser, budget);
}

std::string to_decimal(const Rational& x, int digits) {
    const mp_bitcnt_t bits = static_cast<mp_bitcnt_t>(digits) * 4 + 64;
    mpf_class f(x, bits);
    char buf[256];
    gmp_snprintf(buf, sizeof buf, "%.*Fg", digits, f.get_mpf_t());
    return buf;
}

MomentsReport moments_of(const PolyZ& ver, std::size_t n, std::size_t upto) {
    if (upto < 1 || upto > 4) throw std::invalid_argument("moment order must be between 1 and 4");
    MomentsReport m;
    m.n = n;
    m.upto = upto;
    m.trees = eval_at_one(ver);
    if (is_zero(m.trees)) throw NotConnected("no spanning trees at n = " + std::to_string(n));
    // factorial moments f[j] = P^(j)(1) / P(1)
    Rational f[5];
    PolyZ d = ver;
    for (std::size_t j = 0; j <= upto; ++j) {
        Rational q(eval_at_one(d), m.trees);
        q.canonicalize();
        f[j] = q;
        d = d.derivative();
    }
    const Rational mu = f[1];
    m.mean = mu;
    if (upto < 2) return m;
    const Rational e2 = f[2] + f[1];
    const Rational var = e2 - mu * mu;
    m.variance = var;
    if (upto < 3) return m;
    const Rational e3 = f[3] + 3 * f[2] + f[1];
    m.third_central = e3 - 3 * mu * e2 + 2 * mu * mu * mu;
    if (sgn(var) != 0) {
        const mp_bitcnt_t bits = 256;
        mpf_class v(var, bits), c(*m.third_central, bits);
        mpf_class s = sqrt(v);
        mpf_class skew = c / (v * s);
        char buf[256];
        gmp_snprintf(buf, sizeof buf, "%.30Fg", skew.get_mpf_t());
        m.skewness = buf;
    }
    if (upto < 4) return m;
    const Rational e4 = f[4] + 6 * f[3] + 7 * f[2] + f[1];
    m.fourth_central = e4 - 4 * mu * e3 + 6 * mu * mu * e2 - 3 * mu * mu * mu * mu;
    if (sgn(var) != 0) {
        Rational k = *m.fourth_central / (var * var);
        k.canonicalize();
        m.kurtosis = k;
        m.kurtosis_decimal = to_decimal(k);
    }
    return m;
}

MomentsReport moments(const LabeledGraph& base, std::size_t n, std::size_t upto) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    return moments_of(ver_polynomial(product_with_path(base, n)), n, upto);
}

}  // namespace ratgf
