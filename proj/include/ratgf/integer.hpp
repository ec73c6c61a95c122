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

#ifndef RATGF_INTEGER_HPP
#define RATGF_INTEGER_HPP

#include <gmpxx.h>
#include <ratgf/errors.hpp>

#include <string>
#include <string_view>

namespace ratgf {

using Integer = mpz_class;
using Rational = mpq_class;

// Scalar traits shared by the polynomial and linear algebra templates. Every
// coefficient domain used in the library provides these free functions.

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline bool is_one(const Integer& x) { return x == 1; }
inline bool is_one(const Rational& x) { return x == 1; }

/// Quotient a / b, required to be exact. Throws InexactDivision otherwise.
Integer exact_quotient(const Integer& a, const Integer& b);
Rational exact_quotient(const Rational& a, const Rational& b);

/// Parses "123", "-7" or "3/4". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

inline std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x);

}  // namespace ratgf

#endif  // RATGF_INTEGER_HPP
