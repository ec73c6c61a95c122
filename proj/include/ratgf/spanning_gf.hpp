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


#ifndef RATGF_SPANNING_GF_HPP
#define RATGF_SPANNING_GF_HPP

#include <ratgf/cfinite.hpp>
#include <ratgf/errors.hpp>
#include <ratgf/graph.hpp>
#include <ratgf/rational_function.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ratgf {

enum class Guesser { plain, symmetric };

/*
 * Data budget of the adaptive pipelines. Terms are generated for n = 1, 2,
 * ...; the guesser sees all but the last `holdout` of them and the fit is
 * accepted only if it reproduces every generated term. The term count
 * starts at max(12, 2 * expected_order + 8) and doubles up to max_terms.
 */
struct FitBudget {
    std::size_t max_terms = 120;
    std::size_t holdout = 6;
};

/// The budget ran out before a fit passed validation. data holds every
/// generated term as a decimal string (or a v-coefficient list rendering).
class NoFitWithinBudget : public Error {
public:
    NoFitWithinBudget(const std::string& what_arg, std::vector<std::string> data)
        : Error("NoFitWithinBudget: " + what_arg), data(std::move(data)) {}
    std::vector<std::string> data;
};

/// gf = sum_{n>=1} a(n) t^n, so gf = t^offset * c_to_r(spec).
struct GFResult {
    RationalFunction gf;
    CFiniteSpec<Rational> spec;
    std::size_t data_used = 0;
    int offset = 1;
    std::vector<Rational> data;
};

struct BivariateGFResult {
    BivariateRationalFunction gf;
    CFiniteSpec<RationalFunction> spec;
    std::size_t data_used = 0;
    int offset = 1;
    std::vector<PolyZ> data;
};

/// Adaptive fit of an arbitrary sequence a(1), a(2), ... .
GFResult fit_sequence(const std::function<Rational(std::size_t)>& term, std::size_t expected_order,
                      Guesser guesser, const FitBudget& budget = {});
BivariateGFResult fit_sequence(const std::function<PolyZ(std::size_t)>& term, std::size_t expected_order,
                               Guesser guesser, const FitBudget& budget = {});

/// Spanning trees of base x P_n.
GFResult gf_spanning(const LabeledGraph& base, Guesser guesser = Guesser::symmetric, const FitBudget& budget = {});
/// Shorthand for gf_spanning(path_graph(k), ...).
GFResult gf_grid(std::size_t k, Guesser guesser = Guesser::symmetric, const FitBudget& budget = {});

/// Two-tree forests of the k x n grid separating the corners (1,1) and
/// (k,n). The 1 x 1 grid has a single corner; its term is taken to be 0.
Integer two_forest_term(std::size_t k, std::size_t n);
GFResult gf_two_forest(std::size_t k, const FitBudget& budget = {});

/// den(S_k) / den(F_k)^2 with positive leading coefficient.
PolyZ c_poly(std::size_t k, const FitBudget& budget = {});

/// Effective resistance between the corners (1,1) and (k,n), unit resistors.
Rational resistance(std::size_t k, std::size_t n);
/// 2 * sum_{i=1}^{k-1} (1 - i/k)^2.
Rational doyle_constant(std::size_t k);

/// Bivariate GF of the vertical-edge statistic over base x P_n.
BivariateGFResult gf_ver(const LabeledGraph& base, Guesser guesser = Guesser::symmetric, const FitBudget& budget = {});

/*
 * Moments of the number of vertical edges in a uniform spanning tree of
 * base x P_n. Entries of order above `upto` are left empty, as are the
 * standardized ones when the variance vanishes.
 */
struct MomentsReport {
    std::size_t n = 0;
    std::size_t upto = 4;
    Integer trees;
    Rational mean;
    std::optional<Rational> variance;
    std::optional<Rational> third_central;
    std::optional<Rational> fourth_central;
    std::optional<std::string> skewness;  // 30 significant digits
    std::optional<Rational> kurtosis;
    std::optional<std::string> kurtosis_decimal;
};

MomentsReport moments(const LabeledGraph& base, std::size_t n, std::size_t upto = 4);
/// Same, from a ready-made Ver polynomial.
MomentsReport moments_of(const PolyZ& ver, std::size_t n, std::size_t upto = 4);

/// Decimal rendering of x with the given number of significant digits.
std::string to_decimal(const Rational& x, int digits = 30);

}  // namespace ratgf

#endif  // RATGF_SPANNING_GF_HPP
