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


#include <ratgf/json_io.hpp>

#include <limits>

namespace ratgf {

namespace {

[[noreturn]] void bad(const std::string& what) { throw FormatError(what); }

std::size_t as_index(const Json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) bad(what + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

Json string_list(const std::vector<Integer>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

Json scalar_list(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(scalar_to_json(x));
    return a;
}

std::vector<Rational> scalars_from(const Json& j, const std::string& what) {
    if (!j.is_array()) bad(what + " must be a list");
    std::vector<Rational> v;
    for (const auto& e : j) v.push_back(scalar_from_json(e));
    return v;
}

}  // namespace

std::string to_string(ToeplitzMode mode) { return mode == ToeplitzMode::det ? "det" : "perm"; }

ToeplitzMode parse_mode(const std::string& s) {
    if (s == "det") return ToeplitzMode::det;
    if (s == "perm") return ToeplitzMode::perm;
    throw std::invalid_argument("mode must be det or perm, got '" + s + "'");
}

LabeledGraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) bad("graph needs fields \"n\" and \"edges\"");
    const std::size_t n = as_index(j["n"], "\"n\"");
    if (!j["edges"].is_array()) bad("\"edges\" must be a list");
    try {
        LabeledGraph g(n);
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() < 3 || e.size() > 4) bad("each edge is [u, v, label, multiplicity]");
            if (!e[2].is_string()) bad("edge label must be a string");
            unsigned long mult = 1;
            if (e.size() == 4) {
                if (!e[3].is_number_integer() || e[3].get<long long>() < 1) bad("edge multiplicity must be a positive integer");
                mult = e[3].get<unsigned long>();
            }
            g.add_edge(as_index(e[0], "edge endpoint"), as_index(e[1], "edge endpoint"),
                       parse_edge_label(e[2].get<std::string>()), mult);
        }
        return g;
    } catch (const FormatError&) {
        throw;
    } catch (const std::invalid_argument& x) {
        bad(x.what());
    }
}

Json graph_to_json(const LabeledGraph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v, to_string(e.label), e.multiplicity}));
    return Json{{"n", g.n_vertices()}, {"edges", edges}};
}

std::pair<ToeplitzFamily, ToeplitzMode> family_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("row") || !j.contains("col")) bad("family needs fields \"row\" and \"col\"");
    ToeplitzFamily f{scalars_from(j["row"], "\"row\""), scalars_from(j["col"], "\"col\"")};
    ToeplitzMode mode = ToeplitzMode::det;
    if (j.contains("mode")) {
        if (!j["mode"].is_string()) bad("\"mode\" must be a string");
        try {
            mode = parse_mode(j["mode"].get<std::string>());
        } catch (const std::invalid_argument& x) {
            bad(x.what());
        }
    }
    return {std::move(f), mode};
}

Json family_to_json(const ToeplitzFamily& f, ToeplitzMode mode) {
    return Json{{"row", scalar_list(f.row)}, {"col", scalar_list(f.col)}, {"mode", to_string(mode)}};
}

Json poly_to_json(const PolyZ& p) { return string_list(p.coeffs()); }

Json poly_to_json(const BiPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(poly_to_json(c));
    return a;
}

PolyZ poly_from_json(const Json& j) {
    if (!j.is_array()) bad("polynomial must be a coefficient list");
    std::vector<Integer> v;
    for (const auto& e : j) {
        if (e.is_number_integer()) v.emplace_back(e.get<long>());
        else if (e.is_string()) {
            try {
                v.push_back(parse_integer(e.get<std::string>()));
            } catch (const std::invalid_argument& x) {
                bad(x.what());
            }
        }
        else bad("polynomial coefficient must be an integer or a decimal string");
    }
    return PolyZ(std::move(v));
}

Json scalar_to_json(const Rational& x) {
    if (x.get_den() != 1) return to_string(x);
    const Integer& n = x.get_num();
    if (mpz_fits_slong_p(n.get_mpz_t())) return n.get_si();
    return n.get_str();
}

Rational scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& x) {
            bad(x.what());
        }
    }
    bad("entry must be an integer or a \"p/q\" string");
}

Json spec_to_json(const CFiniteSpec<Rational>& s) {
    return Json{{"initial", scalar_list(s.initial)}, {"rec", scalar_list(s.rec)}};
}

Json gf_to_json(const RationalFunction& gf, int offset, std::size_t order, std::size_t terms_used) {
    return Json{{"num", poly_to_json(gf.num())}, {"den", poly_to_json(gf.den())}, {"var", "t"},
                {"offset", offset},          {"order", order},                 {"terms_used", terms_used}};
}

Json gf_to_json(const GFResult& r) { return gf_to_json(r.gf, r.offset, r.spec.order(), r.data_used); }

Json gf_to_json(const BivariateGFResult& r) {
    return Json{{"num", poly_to_json(r.gf.num())}, {"den", poly_to_json(r.gf.den())}, {"var", "t"},
                {"inner_var", "v"},                {"offset", r.offset},           {"order", r.spec.order()},
                {"terms_used", r.data_used}};
}

Json moments_to_json(const MomentsReport& m) {
    auto opt = [](const std::optional<Rational>& x) { return x ? Json(to_string(*x)) : Json(nullptr); };
    auto opts = [](const std::optional<std::string>& x) { return x ? Json(*x) : Json(nullptr); };
    Json j{{"n", m.n}, {"trees", m.trees.get_str()}, {"mean", to_string(m.mean)}, {"mean_decimal", to_decimal(m.mean)}};
    if (m.upto >= 2) {
        j["variance"] = opt(m.variance);
        j["variance_decimal"] = m.variance ? Json(to_decimal(*m.variance)) : Json(nullptr);
    }
    if (m.upto >= 3) {
        j["third_central"] = opt(m.third_central);
        j["skewness"] = opts(m.skewness);
    }
    if (m.upto >= 4) {
        j["fourth_central"] = opt(m.fourth_central);
        j["kurtosis"] = opt(m.kurtosis);
        j["kurtosis_decimal"] = opts(m.kurtosis_decimal);
    }
    return j;
}

Json scheme_to_json(const TransferScheme& s) {
    Json states = Json::array();
    for (std::size_t i = 0; i < s.states.size(); ++i) {
        const auto& st = s.states[i];
        Json tr = Json::array();
        for (const auto& t : s.transitions[i])
            tr.push_back(Json{{"coeff", scalar_to_json(t.coeff)}, {"target", t.target}, {"position", t.position}});
        states.push_back(Json{{"index", i},
                              {"offsets", st.offsets},
                              {"row", scalar_list(st.row_values(s.family))},
                              {"col", scalar_list(st.col_values(s.family))},
                              {"transitions", tr}});
    }
    return Json{{"family", family_to_json(s.family, s.mode)}, {"states", states}};
}

}  // namespace ratgf
