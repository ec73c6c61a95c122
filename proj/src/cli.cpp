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


#include <ratgf/cli.hpp>
#include <ratgf/format.hpp>
#include <ratgf/json_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace ratgf::cli {

namespace {

// Reported with exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::size_t k = 0, n = 0, max_terms = 0;
    std::string data, graph, row, col, family, mode = "det", method;
    bool pretty = false, emit_data = false, allow_long = false;
};

constexpr std::size_t kLongVertices = 6;

std::vector<Rational> parse_list(const std::string& text, const std::string& flag) {
    std::vector<Rational> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(parse_rational(item));
        } catch (const std::invalid_argument&) {
            throw UsageError(flag + ": '" + item + "' is not a number");
        }
    }
    if (v.empty()) throw UsageError(flag + " needs a comma-separated list");
    return v;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

Guesser guesser_from(const std::string& m) { return m == "plain" ? Guesser::plain : Guesser::symmetric; }

FitBudget budget_from(const Options& o) {
    FitBudget b;
    if (o.max_terms) b.max_terms = o.max_terms;
    return b;
}

void require_long(const Options& o, bool is_long, const std::string& what) {
    if (is_long && !o.allow_long)
        throw BudgetExceeded(what + " is a long-running target; pass --allow-long to run it");
}

Json data_json(const std::vector<Rational>& d) {
    Json a = Json::array();
    for (const auto& x : d) a.push_back(to_string(x));
    return a;
}

std::string data_text(const std::vector<std::string>& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? ", " : "") + d[i];
    return s;
}

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& text) {
    if (o.pretty) out << text << '\n';
    else out << j.dump() << '\n';
}

void emit_gf(std::ostream& out, const Options& o, const GFResult& r) {
    Json j = gf_to_json(r);
    std::string text = pretty(r.gf);
    if (o.emit_data) {
        j["data"] = data_json(r.data);
        std::vector<std::string> d;
        for (const auto& x : r.data) d.push_back(to_string(x));
        text += "\ndata: " + data_text(d);
    }
    emit(out, o, j, text);
}

void emit_gf(std::ostream& out, const Options& o, const BivariateGFResult& r) {
    Json j = gf_to_json(r);
    std::string text = pretty(r.gf);
    if (o.emit_data) {
        Json d = Json::array();
        std::vector<std::string> s;
        for (const auto& p : r.data) {
            d.push_back(poly_to_json(p));
            s.push_back(pretty(p, "v"));
        }
        j["data"] = d;
        text += "\ndata: " + data_text(s);
    }
    emit(out, o, j, text);
}

LabeledGraph base_graph(const Options& o, bool have_k, bool have_graph) {
    if (have_k == have_graph) throw UsageError("give exactly one of --k and --graph");
    if (have_k) {
        if (o.k == 0) throw UsageError("--k must be positive");
        return path_graph(o.k);
    }
    try {
        return graph_from_json(read_json_file(o.graph));
    } catch (const FormatError& e) {
        throw UsageError(o.graph + ": " + e.what());
    }
}

std::pair<ToeplitzFamily, ToeplitzMode> toeplitz_input(const Options& o, bool have_family, bool have_mode) {
    if (have_family) {
        if (!o.row.empty() || !o.col.empty()) throw UsageError("--family excludes --row and --col");
        try {
            auto fm = family_from_json(read_json_file(o.family));
            if (have_mode) fm.second = parse_mode(o.mode);
            fm.first.validate();
            return fm;
        } catch (const FormatError& e) {
            throw UsageError(o.family + ": " + e.what());
        }
    }
    if (o.row.empty() || o.col.empty()) throw UsageError("--row and --col are required (or --family)");
    ToeplitzFamily f{parse_list(o.row, "--row"), parse_list(o.col, "--col")};
    f.validate();
    return {std::move(f), parse_mode(o.mode)};
}

std::string scheme_text(const TransferScheme& s) {
    std::string out;
    auto list = [](const std::vector<Rational>& v) {
        std::string r = "[";
        for (std::size_t i = 0; i < v.size(); ++i) r += (i ? "," : "") + to_string(v[i]);
        return r + "]";
    };
    for (std::size_t i = 0; i < s.states.size(); ++i) {
        const auto& st = s.states[i];
        out += "C" + std::to_string(i + 1) + " row=" + list(st.row_values(s.family)) +
               " col=" + list(st.col_values(s.family)) + " :";
        if (s.transitions[i].empty()) out += " (none)";
        for (const auto& t : s.transitions[i]) out += " " + to_string(t.coeff) + "*C" + std::to_string(t.target + 1);
        if (i + 1 < s.states.size()) out += "\n";
    }
    return out;
}

std::string moments_text(const MomentsReport& m) {
    std::string s = "n = " + std::to_string(m.n) + "\ntrees = " + m.trees.get_str() + "\nmean = " + to_string(m.mean);
    if (m.variance) s += "\nvariance = " + to_string(*m.variance);
    if (m.upto >= 3) s += "\nskewness = " + m.skewness.value_or("undefined");
    if (m.upto >= 4) s += "\nkurtosis = " + (m.kurtosis ? to_string(*m.kurtosis) : std::string("undefined"));
    return s;
}

std::string error_name(const std::string& what) {
    const auto colon = what.find(':');
    return colon == std::string::npos ? "Error" : what.substr(0, colon);
}

void report(std::ostream& err, const std::exception& e, const Json* data = nullptr) {
    const std::string what = e.what();
    const std::string name = error_name(what);
    Json j{{"error", name}, {"message", what.size() > name.size() + 2 ? what.substr(name.size() + 2) : what}};
    if (data) j["data"] = *data;
    err << j.dump() << '\n';
}

bool is_usage_error(const Error& e) {
    return dynamic_cast<const InconsistentSpec*>(&e) || dynamic_cast<const BadVertexPair*>(&e) ||
           dynamic_cast<const ShapeError*>(&e);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact generating functions for spanning trees and banded Toeplitz families", "ratgf"};
    app.require_subcommand(1);
    Options o;
    std::function<void()> action;

    auto pretty = [&](CLI::App* s) { s->add_flag("--pretty", o.pretty, "algebraic text instead of JSON"); };
    auto fit_flags = [&](CLI::App* s) {
        s->add_option("--max-terms", o.max_terms, "data budget (default 120)")->check(CLI::PositiveNumber);
        s->add_flag("--allow-long", o.allow_long, "permit long-running targets");
    };
    auto guesser = [&](CLI::App* s, const std::string& def) {
        o.method = def;
        s->add_option("--method", o.method, "plain or symmetric")
            ->check(CLI::IsMember({"plain", "symmetric"}))
            ->capture_default_str();
    };

    auto* guess = app.add_subcommand("guess", "fit a C-finite recurrence to a list");
    guess->add_option("--data", o.data, "comma-separated terms")->required();
    auto* guess_method = guess->add_option("--method", o.method, "plain or symmetric")
                             ->check(CLI::IsMember({"plain", "symmetric"}));
    pretty(guess);
    guess->callback([&] {
        action = [&] {
            const auto data = parse_list(o.data, "--data");
            const bool sym = guess_method->count() && o.method == "symmetric";
            const auto spec = sym ? guess_sym_rec(data) : guess_rec(data);
            if (!spec) throw NoFit("no recurrence fits the " + std::to_string(data.size()) + " terms");
            emit(out, o, spec_to_json(*spec), ratgf::pretty(*spec));
        };
    });

    auto* grid = app.add_subcommand("gf-grid", "spanning trees of the k x n grid");
    grid->add_option("--k", o.k, "rows")->required()->check(CLI::PositiveNumber);
    guesser(grid, "symmetric");
    pretty(grid);
    grid->add_flag("--emit-data", o.emit_data, "include the generated terms");
    fit_flags(grid);
    grid->callback([&] {
        action = [&] {
            require_long(o, o.k >= kLongVertices, "k >= 6");
            emit_gf(out, o, gf_grid(o.k, guesser_from(o.method), budget_from(o)));
        };
    });

    auto* product = app.add_subcommand("gf-product", "spanning trees of G x P_n");
    product->add_option("--graph", o.graph, "graph JSON file")->required();
    guesser(product, "symmetric");
    pretty(product);
    product->add_flag("--emit-data", o.emit_data, "include the generated terms");
    fit_flags(product);
    product->callback([&] {
        action = [&] {
            const auto g = base_graph(o, false, true);
            require_long(o, g.n_vertices() >= kLongVertices, "a base graph with 6 or more vertices");
            emit_gf(out, o, gf_spanning(g, guesser_from(o.method), budget_from(o)));
        };
    });

    auto* ver = app.add_subcommand("gf-ver", "bivariate GF of the vertical-edge statistic");
    auto* ver_k = ver->add_option("--k", o.k, "rows of the grid");
    auto* ver_graph = ver->add_option("--graph", o.graph, "graph JSON file (instead of --k)");
    guesser(ver, "symmetric");
    pretty(ver);
    ver->add_flag("--emit-data", o.emit_data, "include the generated polynomials");
    fit_flags(ver);
    ver->callback([&] {
        action = [&] {
            const auto g = base_graph(o, ver_k->count() > 0, ver_graph->count() > 0);
            require_long(o, g.n_vertices() >= 5, "a base graph with 5 or more vertices");
            emit_gf(out, o, gf_ver(g, guesser_from(o.method), budget_from(o)));
        };
    });

    auto* cpoly = app.add_subcommand("c-poly", "den(S_k) / den(F_k)^2");
    cpoly->add_option("--k", o.k, "rows (>= 2)")->required();
    pretty(cpoly);
    fit_flags(cpoly);
    cpoly->callback([&] {
        action = [&] {
            if (o.k < 2) throw UsageError("--k must be at least 2");
            require_long(o, o.k >= 5, "k >= 5");
            const PolyZ c = c_poly(o.k, budget_from(o));
            emit(out, o, Json{{"k", o.k}, {"c", poly_to_json(c)}, {"var", "t"}}, ratgf::pretty(c));
        };
    });

    auto* res = app.add_subcommand("resistance", "corner-to-corner resistance of the k x n grid");
    res->add_option("--k", o.k, "rows")->required()->check(CLI::PositiveNumber);
    res->add_option("--n", o.n, "columns")->required()->check(CLI::PositiveNumber);
    pretty(res);
    res->callback([&] {
        action = [&] {
            const Rational r = resistance(o.k, o.n);
            emit(out, o,
                 Json{{"k", o.k}, {"n", o.n}, {"resistance", to_string(r)}, {"decimal", to_decimal(r)}},
                 to_string(r));
        };
    });

    auto* mom = app.add_subcommand("moments", "moments of the vertical-edge statistic");
    auto* mom_k = mom->add_option("--k", o.k, "rows of the grid");
    auto* mom_graph = mom->add_option("--graph", o.graph, "graph JSON file (instead of --k)");
    mom->add_option("--n", o.n, "layers")->required()->check(CLI::PositiveNumber);
    pretty(mom);
    mom->callback([&] {
        action = [&] {
            const auto g = base_graph(o, mom_k->count() > 0, mom_graph->count() > 0);
            const auto m = moments(g, o.n);
            emit(out, o, moments_to_json(m), moments_text(m));
        };
    });

    auto* tgf = app.add_subcommand("toeplitz-gf", "GF of determinants or permanents of a banded Toeplitz family");
    tgf->add_option("--row", o.row, "first-row prefix, comma-separated");
    tgf->add_option("--col", o.col, "first-column prefix, comma-separated");
    auto* tgf_family = tgf->add_option("--family", o.family, "family JSON file (instead of --row/--col)");
    auto* tgf_mode = tgf->add_option("--mode", o.mode, "det or perm")->check(CLI::IsMember({"det", "perm"}));
    o.method = "transfer";
    auto* tgf_method = tgf->add_option("--method", o.method, "guess or transfer")->check(CLI::IsMember({"guess", "transfer"}));
    pretty(tgf);
    tgf->add_flag("--emit-data", o.emit_data, "include the series terms");
    tgf->add_option("--max-terms", o.max_terms, "terms for --method guess (default 50, 20 for perm)")
        ->check(CLI::PositiveNumber);
    tgf->callback([&] {
        action = [&] {
            const auto [f, mode] = toeplitz_input(o, tgf_family->count() > 0, tgf_mode->count() > 0);
            const bool guessing = tgf_method->count() && o.method == "guess";
            RationalFunction gf;
            std::size_t n = 0;
            if (guessing) {
                n = o.max_terms ? o.max_terms : (mode == ToeplitzMode::perm ? 20 : 50);
                gf = gf_family_guess(f, mode, std::max<std::size_t>(1, n / 5), n);
            } else {
                gf = gf_transfer(f, mode);
            }
            Json j = gf_to_json(gf, 0, static_cast<std::size_t>(gf.den().degree()), n);
            std::string text = ratgf::pretty(gf);
            if (o.emit_data) {
                const std::size_t count = o.max_terms ? o.max_terms : 20;
                auto s = gf.series(count + 1);
                std::vector<Rational> terms(s.begin() + 1, s.end());
                j["data"] = data_json(terms);
                std::vector<std::string> d;
                for (const auto& x : terms) d.push_back(to_string(x));
                text += "\ndata: " + data_text(d);
            }
            emit(out, o, j, text);
        };
    });

    auto* tsc = app.add_subcommand("toeplitz-scheme", "minor states and transitions of a banded Toeplitz family");
    tsc->add_option("--row", o.row, "first-row prefix, comma-separated");
    tsc->add_option("--col", o.col, "first-column prefix, comma-separated");
    auto* tsc_family = tsc->add_option("--family", o.family, "family JSON file (instead of --row/--col)");
    auto* tsc_mode = tsc->add_option("--mode", o.mode, "det or perm")->check(CLI::IsMember({"det", "perm"}));
    pretty(tsc);
    tsc->callback([&] {
        action = [&] {
            const auto [f, mode] = toeplitz_input(o, tsc_family->count() > 0, tsc_mode->count() > 0);
            const auto s = children_scheme(f, mode);
            emit(out, o, scheme_to_json(s), scheme_text(s));
        };
    });

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        action();
        return 0;
    } catch (const NoFitWithinBudget& e) {
        Json d = e.data;
        report(err, e, &d);
        return 1;
    } catch (const Error& e) {
        report(err, e);
        return is_usage_error(e) ? 2 : 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        report(err, e);
        return 1;
    }
}

}  // namespace ratgf::cli
