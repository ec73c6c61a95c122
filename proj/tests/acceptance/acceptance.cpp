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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. With --allow-long the full k = 6 and k = 7 grid
// generating functions are also reproduced.

#include "../brute_force.hpp"
#include "../oracles.hpp"
#include "../support.hpp"
#include "goldens.hpp"

#include <ratgf/cfinite.hpp>
#include <ratgf/linalg.hpp>
#include <ratgf/spanning_gf.hpp>
#include <ratgf/toeplitz.hpp>

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace ratgf;
using ratgf::testing::ratio;
using ratgf::testing::Z;

namespace {

// Tolerances and time limits (seconds).
constexpr double kMomentRelTol = 1e-2;
constexpr double kShapeTol = 1e-1;
constexpr std::size_t kMomentN = 60;
constexpr double kLimit[12] = {0, 1, 30, 180, 240, 60, 180, 10, 10, 120, 60, 600};

PolyZ poly(const goldens::Coeffs& c) {
    std::vector<Integer> v;
    for (const char* s : c) v.emplace_back(s);
    return PolyZ(std::move(v));
}

BiPoly bipoly(const goldens::BiCoeffs& c) {
    std::vector<PolyZ> v;
    for (const auto& row : c) v.push_back(poly(row));
    return BiPoly(std::move(v));
}

RationalFunction at_v_one(const BivariateRationalFunction& g) {
    auto collapse = [](const BiPoly& p) {
        std::vector<Integer> c;
        for (const auto& x : p.coeffs()) c.push_back(eval_at_one(x));
        return PolyZ(std::move(c));
    };
    return RationalFunction(collapse(g.num()), collapse(g.den()));
}

// Each check returns an empty string on success, else a reason.
using Check = std::function<std::string()>;

std::string expect(bool ok, const std::string& why) { return ok ? "" : why; }

std::string c1() {
    std::vector<Rational> d;
    for (long x : {1, 4, 15, 56, 209, 780, 2911, 10864, 40545, 151316}) d.emplace_back(x);
    const auto s = guess_rec(d);
    return expect(s && *s == CFiniteSpec<Rational>{{1, 4}, {4, -1}}, "unexpected recurrence");
}

std::string c2() {
    const RationalFunction want[] = {
        RationalFunction(Z({0, 1}), Z({1, -1})),
        RationalFunction(Z({0, 1}), Z({1, -4, 1})),
        RationalFunction(Z({0, 1, 0, -1}), Z({1, -15, 32, -15, 1})),
        RationalFunction(poly(goldens::F4_NUM), poly(goldens::F4_DEN)),
    };
    for (std::size_t k = 1; k <= 4; ++k)
        if (!(gf_spanning(path_graph(k)).gf == want[k - 1])) return "F" + std::to_string(k) + " differs";
    return "";
}

std::string c3() {
    const auto r = gf_grid(5);
    if (!(r.gf.den() == poly(goldens::F5_DEN))) return "denominator differs";
    return expect(r.gf.num() == poly(goldens::F5_NUM), "numerator differs");
}

std::string c4() {
    if (!(c_poly(2) == Z({-1, 1}))) return "C2 differs";
    if (!(c_poly(3) == Z({1, -8, 17, -8, 1}))) return "C3 differs";
    return expect(c_poly(4) == poly(goldens::C4), "C4 differs");
}

std::string c5() {
    for (std::size_t k : {2, 3}) {
        Rational slack = 0;
        for (std::size_t i = 1; i < k; ++i) {
            const Rational x = 1 - ratio(static_cast<long>(i), static_cast<long>(k));
            slack += x * x;
        }
        slack *= 2;
        for (std::size_t n = 2; n <= 40; ++n) {
            const Rational low = ratio(static_cast<long>(n - 1), static_cast<long>(k));
            const Rational r = resistance(k, n);
            if (r < low || r > low + slack)
                return "k=" + std::to_string(k) + " n=" + std::to_string(n) + " R=" + to_string(r);
        }
    }
    return "";
}

std::string c6() {
    const BivariateRationalFunction want[] = {
        BivariateRationalFunction(BiPoly({PolyZ(), Z({0, 1})}), BiPoly({Z({1}), Z({-2, -2}), Z({1})})),
        BivariateRationalFunction(BiPoly({PolyZ(), Z({0, 0, 1}), PolyZ(), Z({0, 0, -1})}),
                                  BiPoly({Z({1}), Z({-4, -8, -3}), Z({6, 16, 10}), Z({-4, -8, -3}), Z({1})})),
        BivariateRationalFunction(bipoly(goldens::G4_NUM), bipoly(goldens::G4_DEN)),
    };
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto g = gf_ver(path_graph(k)).gf;
        if (k >= 2 && !(g == want[k - 2])) return "g" + std::to_string(k) + " differs";
        if (!(at_v_one(g) == gf_spanning(path_graph(k)).gf)) return "v=1 specialisation differs for k=" + std::to_string(k);
    }
    return "";
}

std::string c7(std::string& detail) {
    const auto m = moments(path_graph(2), kMomentN);
    const double b = 2 + std::sqrt(3.0), n = static_cast<double>(kMomentN);
    const double mean_asym = 1.0 / 3 + (2 * b - 1) * n / (3 * b);
    const double var_asym = -1.0 / 9 + (7 * b - 2) * n / (9 * (4 * b - 1));
    const double mean = m.mean.get_d(), var = m.variance->get_d();
    const double skew = std::stod(*m.skewness), kurt = std::stod(*m.kurtosis_decimal);
    const double em = std::abs(mean - mean_asym) / mean_asym, ev = std::abs(var - var_asym) / var_asym;
    std::ostringstream s;
    s << std::setprecision(3) << "rel err mean " << em << ", variance " << ev << "; skewness " << skew
      << ", kurtosis " << kurt;
    detail = s.str();
    return expect(em < kMomentRelTol && ev < kMomentRelTol && std::abs(skew) < kShapeTol &&
                      std::abs(kurt - 3) < kShapeTol,
                  "outside tolerance");
}

std::string c8() {
    const ToeplitzFamily f{{2, 3}, {2, 4, 5}};
    const RationalFunction want(Z({1}), Z({1, -2, 12, -45}));
    const auto g = gf_family_guess(f, ToeplitzMode::det, 10, 50);
    const auto t = gf_transfer(f, ToeplitzMode::det);
    if (!(g == want)) return "guess gave " + std::to_string(g.den().coeffs().size()) + "-term denominator";
    return expect(t == want, "transfer differs");
}

std::string c9() {
    using namespace ratgf::testing;
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_graph(6, 10);
        if (spanning_tree_count(g) != brute_total(brute_forests(g, 1))) return "tree count, trial " + std::to_string(trial);
        if (g.n_vertices() < 2) continue;
        const auto a = static_cast<std::size_t>(uniform(0, static_cast<long>(g.n_vertices()) - 1));
        auto b = static_cast<std::size_t>(uniform(0, static_cast<long>(g.n_vertices()) - 2));
        if (b >= a) ++b;
        if (two_forest_count(g, a, b) != brute_total(brute_forests(g, 2, a, b)))
            return "two-forest count, trial " + std::to_string(trial);
    }
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_family(4);
        const auto n = static_cast<std::size_t>(uniform(1, 7));
        const auto a = matrix_from_spec(n, f);
        if (det_bareiss(a) != cofactor_det(a)) return "determinant, trial " + std::to_string(trial);
        if (n <= 6 && permanent_ryser(a) != permutation_perm(a)) return "permanent, trial " + std::to_string(trial);
    }
    return "";
}

std::string c10() {
    auto q = [](std::initializer_list<Rational> v) { return std::vector<Rational>(v); };
    const std::vector<ToeplitzFamily> families = {
        {q({1, 1}), q({1, 1})},         {q({2, 3}), q({2, 4, 5})},       {q({1, -1, 2}), q({1, 3})},
        {q({0, 1}), q({0, 1})},         {q({3, ratio(1, 2)}), q({3, 2, -1})}, {q({1, 2, 3}), q({1, 4, 5})},
        {q({-2, 1, 1}), q({-2, 1, 1})}, {q({1}), q({1, 1, 1})},          {q({0, 1, 1}), q({0, 1, -1})},
        {q({4, -3, 2}), q({4, ratio(-1, 3)})},
    };
    for (std::size_t i = 0; i < families.size(); ++i) {
        const auto s = gf_transfer(families[i], ToeplitzMode::perm).series(13);
        for (std::size_t n = 1; n <= 12; ++n)
            if (s[n] != permanent_ryser(matrix_from_spec(n, families[i])))
                return "family " + std::to_string(i) + " at n=" + std::to_string(n);
    }
    return "";
}

std::string c11(bool allow_long, std::string& detail) {
    std::vector<Integer> fresh;
    for (std::size_t n = 1; n <= 12; ++n) fresh.push_back(spanning_tree_count(grid_graph(6, n)));
    std::vector<std::string> partial;
    try {
        gf_grid(6, Guesser::symmetric, FitBudget{20, 6});
        return "a 20-term budget unexpectedly produced a fit";
    } catch (const NoFitWithinBudget& e) {
        partial = e.data;
    }
    if (partial.size() < 12) return "partial run kept fewer than 12 terms";
    for (std::size_t i = 0; i < 12; ++i)
        if (Integer(partial[i]) != fresh[i]) return "partial term " + std::to_string(i + 1) + " differs";
    const auto ref = RationalFunction(poly(goldens::F6_NUM), poly(goldens::F6_DEN)).series(13);
    for (std::size_t i = 0; i < 12; ++i)
        if (ref[i + 1] != Rational(fresh[i])) return "reference series term " + std::to_string(i + 1) + " differs";
    if (!allow_long) {
        detail = "partial k=6 run only; full k=6,7 need --allow-long";
        return "";
    }
    const auto f6 = gf_grid(6);
    if (!(f6.gf == RationalFunction(poly(goldens::F6_NUM), poly(goldens::F6_DEN)))) return "full F6 differs";
    const auto f7 = gf_grid(7);
    if (!(f7.gf == RationalFunction(poly(goldens::F7_NUM), poly(goldens::F7_DEN)))) return "full F7 differs";
    detail = "partial k=6 run, full F6 (" + std::to_string(f6.data_used) + " terms) and F7 (" +
             std::to_string(f7.data_used) + " terms)";
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    bool allow_long = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--allow-long") == 0) allow_long = true;
        else {
            std::cerr << "usage: acceptance [--allow-long]\n";
            return 2;
        }
    }
    std::string detail7, detail11;
    const std::vector<std::pair<const char*, Check>> criteria = {
        {"recurrence guessing golden", c1},
        {"grid generating functions k=1..4", c2},
        {"grid generating function k=5", c3},
        {"joint resistance polynomials k=2..4", c4},
        {"resistance sandwich k=2,3 n=2..40", c5},
        {"vertical-edge generating functions k=2..4", c6},
        {"vertical-edge moments at n=60", [&] { return c7(detail7); }},
        {"banded Toeplitz determinant golden", c8},
        {"oracle property suite", c9},
        {"permanent transfer vs inclusion-exclusion", c10},
        {"k=6 grid data check", [&] { return c11(allow_long, detail11); }},
    };
    int failures = 0;
    double total = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string why;
        try {
            why = criteria[i].second();
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        total += secs;
        if (why.empty() && secs > kLimit[i + 1]) why = "exceeded the time limit";
        const std::string& extra = i == 6 ? detail7 : i == 10 ? detail11 : why;
        std::cout << (why.empty() ? "PASS" : "FAIL") << "  " << std::setw(2) << i + 1 << "  " << std::left
                  << std::setw(44) << criteria[i].first << std::right << std::fixed << std::setprecision(2)
                  << std::setw(8) << secs << " s";
        if (!why.empty()) std::cout << "  " << why;
        if (!extra.empty() && extra != why) std::cout << "  (" << extra << ")";
        std::cout << '\n' << std::flush;
        failures += !why.empty();
    }
    std::cout << (failures ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failures) << "/"
              << criteria.size() << " in " << std::fixed << std::setprecision(1) << total << " s\n";
    return failures ? 1 : 0;
}
