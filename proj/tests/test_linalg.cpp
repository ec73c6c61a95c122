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
#include <ratgf/linalg.hpp>

using namespace ratgf;
using ratgf::testing::Z;

namespace {

template <class D>
D cofactor_det(const Matrix<D>& a) {
    const std::size_t n = a.rows();
    if (n == 0) return D(1);
    D acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(a(0, j))) continue;
        D term = a(0, j) * cofactor_det(a.without({0}, {j}));
        if (j % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

Matrix<Integer> random_int_matrix(std::size_t r, std::size_t c, long bound) {
    Matrix<Integer> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = testing::uniform(-bound, bound);
    return m;
}

template <class F>
std::vector<F> times(const Matrix<F>& a, const std::vector<F>& x) {
    std::vector<F> y(a.rows(), F(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

Matrix<Rational> as_rational(const Matrix<Integer>& m) {
    return m.map([](const Integer& x) { return Rational(x); });
}

}  // namespace

TEST_CASE("det_bareiss examples") {
    CHECK(det_bareiss(Matrix<Integer>{{1, 2}, {3, 4}}) == -2);
    CHECK(det_bareiss(Matrix<Integer>::identity(5)) == 1);
    CHECK(det_bareiss(Matrix<Integer>(0, 0)) == 1);
    CHECK_THROWS_AS(det_bareiss(Matrix<Integer>(2, 3)), ShapeError);
    CHECK(det_bareiss(Matrix<Integer>{{0, 1}, {1, 0}}) == -1);
    CHECK(det_bareiss(Matrix<Integer>{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("det_bareiss on a banded Toeplitz matrix") {
    // first row 1,2,3 and first column 1,4
    Matrix<Integer> m(6, 6);
    const long row[] = {1, 2, 3}, col[] = {1, 4};
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            if (j >= i && j - i < 3) m(i, j) = row[j - i];
            if (i > j && i - j < 2) m(i, j) = col[i - j];
        }
    CHECK(det_bareiss(m) == cofactor_det(m));
}

TEST_CASE("det_bareiss matches cofactor expansion on random matrices") {
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(0, 6));
        auto m = random_int_matrix(n, n, 9);
        // sprinkle zeros so that pivoting is exercised
        for (std::size_t i = 0; i < n; ++i)
            if (testing::uniform(0, 2) == 0) m(i, static_cast<std::size_t>(testing::uniform(0, n - 1))) = 0;
        CHECK(det_bareiss(m) == cofactor_det(m));
    }
}

TEST_CASE("det_bareiss over Z[v]") {
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(1, 5));
        Matrix<PolyZ> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = testing::random_poly(2, 4);
        CHECK(det_bareiss(m) == cofactor_det(m));
    }
}

TEST_CASE("solve_linear examples") {
    auto r = solve_linear(Matrix<Rational>{{1}}, {Rational(5)});
    CHECK(r.unique());
    CHECK(r.x == std::vector<Rational>{5});
    CHECK(solve_linear(Matrix<Rational>{{1, 1}, {1, 1}}, {Rational(2), Rational(3)}).kind ==
          LinearSolution<Rational>::Kind::Inconsistent);
    auto u = solve_linear(Matrix<Rational>{{1, 1}, {1, 1}}, {Rational(2), Rational(2)});
    CHECK(u.kind == LinearSolution<Rational>::Kind::Underdetermined);
    CHECK(u.x[0] + u.x[1] == 2);
    CHECK_THROWS_AS(solve_linear(Matrix<Rational>{{1, 1}}, {Rational(2), Rational(2)}), ShapeError);
    auto f = solve_linear(Matrix<Rational>{{Rational(1, 2), Rational(1, 3)}, {1, 1}}, {Rational(1), Rational(2)});
    CHECK(f.unique());
    CHECK(f.x == std::vector<Rational>{2, 0});
}

TEST_CASE("solve_linear reproduces the right-hand side") {
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = static_cast<std::size_t>(testing::uniform(1, 8));
        const std::size_t c = static_cast<std::size_t>(testing::uniform(1, 6));
        auto base = random_int_matrix(r, c, 5);
        // force rank deficiency now and then by copying a column
        if (c > 1 && testing::uniform(0, 3) == 0)
            for (std::size_t i = 0; i < r; ++i) base(i, c - 1) = base(i, 0);
        const auto a = as_rational(base);
        std::vector<Rational> x(c);
        for (auto& e : x) e = testing::ratio(testing::uniform(-9, 9), testing::uniform(1, 4));
        const auto b = times(a, x);
        const auto s = solve_linear(a, b);
        REQUIRE(s.consistent());
        CHECK(times(a, s.x) == b);
        const auto g = solve_linear_gauss(a, b);
        CHECK(g.kind == s.kind);
        if (s.unique()) CHECK(s.x == x);
    }
}

TEST_CASE("solve_linear agrees with Gauss-Jordan on inconsistent systems") {
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t c = static_cast<std::size_t>(testing::uniform(1, 5));
        const std::size_t r = c + static_cast<std::size_t>(testing::uniform(1, 3));
        const auto a = as_rational(random_int_matrix(r, c, 3));
        std::vector<Rational> b(r);
        for (auto& e : b) e = testing::uniform(-5, 5);
        const auto s = solve_linear(a, b), g = solve_linear_gauss(a, b);
        CHECK(s.kind == g.kind);
        if (s.consistent()) CHECK(times(a, s.x) == b);
    }
}

TEST_CASE("solve_linear over Q(v)") {
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(1, 4));
        Matrix<RationalFunction> a(n + 1, n);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = RationalFunction(testing::random_poly(2, 3));
        std::vector<RationalFunction> x(n);
        for (auto& e : x) {
            PolyZ d = testing::random_poly(2, 3);
            if (d.is_zero()) d = Z({1});
            e = RationalFunction(testing::random_poly(2, 3), d);
        }
        const auto b = times(a, x);
        const auto s = solve_linear(a, b), g = solve_linear_gauss(a, b);
        REQUIRE(s.consistent());
        CHECK(times(a, s.x) == b);
        CHECK(s.kind == g.kind);
        if (s.unique()) CHECK(s.x == x);
    }
}
