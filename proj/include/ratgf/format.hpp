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


#ifndef RATGF_FORMAT_HPP
#define RATGF_FORMAT_HPP

#include <ratgf/cfinite.hpp>
#include <ratgf/rational_function.hpp>

#include <string>

namespace ratgf {

/// Descending-degree algebraic text, e.g. "t^2-4*t+1".
std::string pretty(const PolyZ& p, const std::string& var = "t");
/// num/den with the denominator's top coefficient made positive, e.g.
/// "-1/(45*t^3-12*t^2+2*t-1)".
std::string pretty(const RationalFunction& f, const std::string& var = "t");

/// Grouped by powers of the outer variable: "t^2-(2*v+2)*t+1".
std::string pretty(const BiPoly& p, const std::string& outer = "t", const std::string& inner = "v");
std::string pretty(const BivariateRationalFunction& f, const std::string& outer = "t", const std::string& inner = "v");

/// "[[1, 4], [4, -1]]".
std::string pretty(const CFiniteSpec<Rational>& s);

}  // namespace ratgf

#endif  // RATGF_FORMAT_HPP
