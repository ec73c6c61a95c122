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

namespace ratgf {

RationalFunction c_to_r(const CFiniteSpec<Rational>& spec) {
    auto [num, den] = c_to_r_parts(spec);
    return RationalFunction::from_rational(num, den);
}

BivariateRationalFunction c_to_r(const CFiniteSpec<RationalFunction>& spec) {
    auto [num, den] = c_to_r_parts(spec);
    return BivariateRationalFunction::from_coefficients(num, den);
}

}  // namespace ratgf
