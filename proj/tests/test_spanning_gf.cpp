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


#include "support.hpp"

#include <doctest.h>
#include <ratgf/spanning_gf.hpp>

using namespace ratgf;
using ratgf::testing::Z;

namespace {

BiPoly B(std::initializer_list<PolyZ> c) { return BiPoly(std::vector<PolyZ>(c)); }

bool palindromic(const PolyZ& p) { return p.reversed() == p; }

void check_series(const GFResult& r) {
    const auto s = r.gf.series(r.data.size() + 1);
    CHECK(s[0] == 0);
    for (std::size_t i = 0; i < r.data.size(); ++i) CHECK(s[i + 1] == r.data[i]);
    CHECK(r.gf.den().degree() == static_cast<int>(r.spec.order()));
}

}  // namespace

TEST_CASE("gf_spanning on small grids") {
    const auto f1 = gf_spanning(LabeledGraph(1));
    CHECK(f1.gf == RationalFunction(Z({0, 1}), Z({1, -1})));
    CHECK(f1.offset == 1);
    const auto f2 = gf_spanning(path_graph(2));
    CHECK(f2.gf == RationalFunction(Z({0, 1}), Z({1, -4, 1})));
    const auto f3 = gf_spanning(path_graph(3));
    CHECK(f3.gf == RationalFunction(Z({0, 1, 0, -1}), Z({1, -15, 32, -15, 1})));
    for (const auto* r : {&f1, &f2, &f3}) check_series(*r);
}

TEST_CASE("plain and symmetric guessers agree") {
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto a = gf_grid(k, Guesser::plain), b = gf_grid(k, Guesser::symmetric);
        CHECK(a.gf == b.gf);
        check_series(a);
        if (k >= 2) CHECK(palindromic(b.gf.den()));
        else CHECK(b.gf.den().reversed() == -b.gf.den());
    }
    LabeledGraph tri(3);
    tri.add_edge(0, 1, EdgeLabel::other);
    tri.add_edge(1, 2, EdgeLabel::other);
    tri.add_edge(2, 0, EdgeLabel::other);
    const auto p = gf_spanning(tri, Guesser::plain), s = gf_spanning(tri, Guesser::symmetric);
    CHECK(p.gf == s.gf);
    check_series(p);
}

TEST_CASE("gf_spanning rejects a disconnected base") {
    CHECK_THROWS_AS(gf_spanning(LabeledGraph(2)), NotConnected);
}

TEST_CASE("budget exhaustion carries the data") {
    auto factorial = [](std::size_t n) {
        Integer f = 1;
        for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
        return Rational(f);
    };
    try {
        fit_sequence(factorial, 2, Guesser::plain, FitBudget{20, 6});
        FAIL("expected NoFitWithinBudget");
    } catch (const NoFitWithinBudget& e) {
        REQUIRE(e.data.size() == 20);
        CHECK(e.data[4] == "120");
    }
    CHECK_THROWS_AS(fit_sequence(factorial, 2, Guesser::plain, FitBudget{8, 6}), std::invalid_argument);
}

TEST_CASE("two-forest terms and generating functions") {
    CHECK(two_forest_term(2, 2) == 4);
    CHECK(two_forest_term(1, 5) == 4);
    CHECK(two_forest_term(1, 1) == 0);
    const auto s1 = gf_two_forest(1);
    CHECK(s1.gf == RationalFunction(Z({0, 0, 1}), Z({1, -2, 1})));
    const auto s2 = gf_two_forest(2);
    check_series(s2);
    const PolyZ d = Z({1, -4, 1});
    CHECK(s2.gf.den() == d * d * Z({1, -1}));
}

TEST_CASE("c_poly for k = 2, 3") {
    CHECK(c_poly(2) == Z({-1, 1}));
    CHECK(c_poly(3) == Z({1, -8, 17, -8, 1}));
    CHECK_THROWS_AS(c_poly(1), std::invalid_argument);
}

TEST_CASE("resistance") {
    for (std::size_t n = 2; n < 8; ++n) CHECK(resistance(1, n) == Integer(n - 1));
    CHECK(resistance(2, 2) == 1);
    const Rational r = resistance(2, 40);
    CHECK(r >= Rational(39, 2));
    CHECK(r <= Rational(40, 2));
    CHECK(doyle_constant(2) == Rational(1, 2));
    CHECK(doyle_constant(3) == Rational(10, 9));
    CHECK_THROWS_AS(resistance(1, 1), BadVertexPair);
}

TEST_CASE("gf_ver for k = 2, 3") {
    const auto g2 = gf_ver(path_graph(2));
    CHECK(g2.gf == BivariateRationalFunction(B({PolyZ{}, Z({0, 1})}), B({Z({1}), Z({-2, -2}), Z({1})})));
    const auto g3 = gf_ver(path_graph(3));
    const PolyZ a = Z({4, 8, 3}), b = Z({6, 16, 10});
    CHECK(g3.gf == BivariateRationalFunction(B({PolyZ{}, Z({0, 0, 1}), PolyZ{}, Z({0, 0, -1})}),
                                             B({Z({1}), -a, b, -a, Z({1})})));
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto g = gf_ver(path_graph(k), Guesser::plain);
        CHECK(g.gf.at_inner(Rational(1)) == gf_grid(k).gf);
    }
}

TEST_CASE("moments") {
    const auto m = moments(path_graph(2), 2);
    CHECK(m.mean == Rational(3, 2));
    CHECK(*m.variance == Rational(1, 4));
    CHECK(*m.third_central == 0);
    CHECK(*m.kurtosis == 1);
    CHECK(m.trees == 4);
    const auto z = moments(LabeledGraph(1), 7);
    CHECK(z.mean == 0);
    CHECK(*z.variance == 0);
    CHECK_FALSE(z.skewness);
    CHECK_FALSE(z.kurtosis);
    const auto only_mean = moments(path_graph(3), 4, 1);
    CHECK_FALSE(only_mean.variance);
    CHECK_THROWS_AS(moments(LabeledGraph(2), 3), NotConnected);
    CHECK_THROWS_AS(moments(path_graph(2), 3, 5), std::invalid_argument);
}

TEST_CASE("moments agree with direct enumeration of the distribution") {
    for (std::size_t n = 1; n <= 6; ++n) {
        const PolyZ p = ver_polynomial(grid_graph(3, n));
        const Integer total = eval_at_one(p);
        Rational mu = 0;
        for (std::size_t i = 0; i < p.size(); ++i) mu += testing::ratio(p[i] * static_cast<unsigned long>(i), total);
        Rational c2 = 0, c3 = 0, c4 = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            const Rational w = testing::ratio(p[i], total), x = Rational(static_cast<unsigned long>(i)) - mu;
            c2 += w * x * x;
            c3 += w * x * x * x;
            c4 += w * x * x * x * x;
        }
        const auto m = moments(path_graph(3), n);
        CHECK(m.mean == mu);
        CHECK(*m.variance == c2);
        CHECK(*m.third_central == c3);
        CHECK(*m.fourth_central == c4);
    }
}

TEST_CASE("to_decimal") {
    CHECK(to_decimal(Rational(1, 4)) == "0.25");
    CHECK(to_decimal(Rational(1, 3), 5) == "0.33333");
    CHECK(to_decimal(Rational(-7)) == "-7");
}
