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


// Shared helpers for the unit tests: deterministic random generators and a
// few small builders.
#pragma once

#include <ratgf/poly.hpp>
#include <ratgf/rational_function.hpp>

#include <random>
#include <vector>

namespace ratgf::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20260214);
    return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational ratio(long n, long d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline Rational ratio(const Integer& n, const Integer& d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline Integer big_integer(int digits) {
    Integer x = 0;
    for (int i = 0; i < digits; ++i) x = x * 10 + uniform(0, 9);
    return uniform(0, 1) ? x : Integer(-x);
}

inline PolyZ random_poly(int max_degree, long bound) {
    std::vector<Integer> c;
    const long deg = uniform(0, max_degree);
    for (long i = 0; i <= deg; ++i) c.emplace_back(uniform(-bound, bound));
    return PolyZ(std::move(c));
}

inline PolyZ random_big_poly(int degree, int digits) {
    std::vector<Integer> c;
    for (int i = 0; i <= degree; ++i) c.push_back(big_integer(digits));
    if (sgn(c.back()) == 0) c.back() = 1;
    return PolyZ(std::move(c));
}

inline PolyZ Z(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return PolyZ(std::move(v));
}

inline PolyZ schoolbook(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return PolyZ(std::move(r));
}

}  // namespace ratgf::testing
