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


#ifndef RATGF_JSON_IO_HPP
#define RATGF_JSON_IO_HPP

#include <ratgf/cfinite.hpp>
#include <ratgf/graph.hpp>
#include <ratgf/spanning_gf.hpp>
#include <ratgf/toeplitz.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace ratgf {

using Json = nlohmann::ordered_json;

/// Malformed input document.
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// {"n": 4, "edges": [[0, 1, "vertical", 1], ...]}; the multiplicity may be omitted.
LabeledGraph graph_from_json(const Json& j);
Json graph_to_json(const LabeledGraph& g);

// {"row": [..], "col": [..], "mode": "det"|"perm"}; entries are integers or
// "p/q" strings, mode defaults to det.
std::pair<ToeplitzFamily, ToeplitzMode> family_from_json(const Json& j);
Json family_to_json(const ToeplitzFamily& f, ToeplitzMode mode);

/// Ascending coefficients as decimal strings; bivariate ones nest lists in v.
Json poly_to_json(const PolyZ& p);
Json poly_to_json(const BiPoly& p);
PolyZ poly_from_json(const Json& j);

/// An integer as a JSON number when it fits in 64 bits, else a decimal
/// string; non-integers as "p/q" strings.
Json scalar_to_json(const Rational& x);
Rational scalar_from_json(const Json& j);

Json spec_to_json(const CFiniteSpec<Rational>& s);

// {"num", "den", "var", "offset", "order", "terms_used"}
Json gf_to_json(const RationalFunction& gf, int offset, std::size_t order, std::size_t terms_used);
Json gf_to_json(const GFResult& r);
Json gf_to_json(const BivariateGFResult& r);

Json moments_to_json(const MomentsReport& m);

/// States in discovery order (root first), transitions in first-row order.
Json scheme_to_json(const TransferScheme& s);

std::string to_string(ToeplitzMode mode);
ToeplitzMode parse_mode(const std::string& s);

}  // namespace ratgf

#endif  // RATGF_JSON_IO_HPP
