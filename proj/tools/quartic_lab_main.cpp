/*
   Copyright 2026 The quartic-lab Authors

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

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quartic/boros_moll.hpp"
#include "quartic/expr.hpp"
#include "quartic/fixtures.hpp"
#include "quartic/quadrature.hpp"
#include "quartic/recurrence.hpp"
#include "quartic/series.hpp"

namespace {

using namespace quartic;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;    // verification or tolerance failure
constexpr int kExitDomain = 2;  // domain or usage error

// ---------------------------------------------------------------------------
// Stable JSON: keys emitted in sorted order by construction, floats always
// printed with 17 significant digits so reports are byte-identical across
// runs and platforms.

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (static_cast<unsigned char>(c) < 0x20) continue;
        out += c;
    }
    return out;
}

/// Minimal JSON value tree; objects keep keys sorted.
struct Json {
    enum class Kind { null, boolean, number, string, array, object } kind = Kind::null;
    bool b = false;
    std::string num;  // preformatted numeral
    std::string str;
    std::vector<Json> arr;
    std::vector<std::pair<std::string, Json>> obj;

    static Json null() { return {}; }
    static Json boolean(bool v) {
        Json j;
        j.kind = Kind::boolean;
        j.b = v;
        return j;
    }
    static Json number(double v) {
        Json j;
        j.kind = Kind::number;
        j.num = fmt17(v);
        return j;
    }
    static Json number(int64_t v) {
        Json j;
        j.kind = Kind::number;
        j.num = std::to_string(v);
        return j;
    }
    static Json string(std::string v) {
        Json j;
        j.kind = Kind::string;
        j.str = std::move(v);
        return j;
    }
    static Json array(std::vector<Json> v) {
        Json j;
        j.kind = Kind::array;
        j.arr = std::move(v);
        return j;
    }
    static Json object() {
        Json j;
        j.kind = Kind::object;
        return j;
    }
    Json& set(const std::string& key, Json v) {
        auto it = obj.begin();
        while (it != obj.end() && it->first < key) ++it;
        obj.insert(it, {key, std::move(v)});
        return *this;
    }
    void write(std::ostream& os) const {
        switch (kind) {
            case Kind::null: os << "null"; break;
            case Kind::boolean: os << (b ? "true" : "false"); break;
            case Kind::number: os << num; break;
            case Kind::string: os << '"' << json_escape(str) << '"'; break;
            case Kind::array:
                os << '[';
                for (size_t i = 0; i < arr.size(); ++i) {
                    if (i) os << ',';
                    arr[i].write(os);
                }
                os << ']';
                break;
            case Kind::object:
                os << '{';
                for (size_t i = 0; i < obj.size(); ++i) {
                    if (i) os << ',';
                    os << '"' << json_escape(obj[i].first) << "\":";
                    obj[i].second.write(os);
                }
                os << '}';
                break;
        }
    }
};

void emit(const Json& j) {
    std::ostringstream os;
    j.write(os);
    std::cout << os.str() << "\n";
}

uint64_t spot_check_seed() {
    if (const char* env = std::getenv("QUARTIC_LAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw std::domain_error("QUARTIC_LAB_SEED must be an unsigned integer");
        }
    }
    return 42;
}

// ---------------------------------------------------------------------------
// eval

int run_eval(int n, double alpha, int m, double a, const std::string& method, double tol) {
    IntegralParams p{n, alpha, m, a};
    double value = 0.0, error_bound = 0.0;
    int64_t terms_or_evals = 0;
    if (method == "quadrature") {
        QuadResult r = integral_quadrature(p, tol);
        value = r.value;
        error_bound = r.error_estimate;
        terms_or_evals = r.evaluations;
    } else if (method == "series") {
        SeriesResult r = series_sum(p, tol);
        value = r.value;
        error_bound = r.tail_bound;
        terms_or_evals = r.terms_used;
    } else if (method == "closed") {
        if (n != 2 || alpha != 2.0)
            throw std::domain_error("the closed form applies to n = 2, alpha = 2 only");
        p.require_positivity();
        value = closed_form_t1(m, a);
        error_bound = 0.0;
        terms_or_evals = m + 1;
    } else {
        throw std::domain_error("unknown method: " + method);
    }
    Json out = Json::object();
    out.set("a", Json::number(a))
        .set("alpha", Json::number(alpha))
        .set("error_bound", Json::number(error_bound))
        .set("m", Json::number(static_cast<int64_t>(m)))
        .set("method", Json::string(method))
        .set("n", Json::number(static_cast<int64_t>(n)))
        .set("terms_or_evals", Json::number(terms_or_evals))
        .set("value", Json::number(value));
    emit(out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

TheoremFixture substituted_u(const TheoremFixture& fx, int n) {
    TheoremFixture out = fx;
    Rational u(1, n);
    out.kernel = fx.kernel.substitute(Var::u, u);
    std::vector<MultiPoly> coeffs;
    for (const auto& c : fx.op.coeffs()) coeffs.push_back(c.substitute(Var::u, u));
    out.op = DiffOp(std::move(coeffs));
    out.certificate_expr = fx.certificate_expr.substitute(Var::u, u);
    return out;
}

CertifiedIntegrand integrand_for(const TheoremFixture& fx, std::optional<int> fixed_n) {
    CertifiedIntegrand f = fx.reduced_form ? CertifiedIntegrand::reduced(fx.kernel)
                                           : CertifiedIntegrand::plain(fx.kernel);
    if (fixed_n && fx.reduced_form) {
        f.kernel = f.kernel.substitute(Var::u, Rational(1, *fixed_n));
        f.exponent_x = f.exponent_x.substitute(Var::u, Rational(1, *fixed_n));
    }
    return f;
}

Json spot_checks_json(const std::vector<SpotCheck>& checks) {
    std::vector<Json> arr;
    for (const auto& sc : checks) {
        Json point = Json::object();
        point.set("a", Json::string(sc.point[1].to_string()))
            .set("m", Json::string(sc.point[2].to_string()))
            .set("u", Json::string(sc.point[3].to_string()))
            .set("x", Json::string(sc.point[0].to_string()));
        Json one = Json::object();
        one.set("ok", Json::boolean(sc.ok))
            .set("point", std::move(point))
            .set("value", Json::string(sc.value.to_string()));
        arr.push_back(std::move(one));
    }
    return Json::array(std::move(arr));
}

Json variant_json(const TheoremFixture& fx, const VerificationReport& rep,
                  const VarNames& names) {
    Json v = Json::object();
    v.set("certificate", Json::string(fx.certificate_expr.to_string(names)))
        .set("denominator_compatible", Json::boolean(rep.denominator_compatible))
        .set("kernel", Json::string(fx.kernel.to_string(names)))
        .set("name", Json::string(fx.name))
        .set("operator", Json::string(fx.op.to_string(names)))
        .set("residual", Json::string(rep.residual_text))
        .set("spot_checks", spot_checks_json(rep.spot_checks))
        .set("verified", Json::boolean(rep.verified));
    return v;
}

// The resolution of the mutually inconsistent printed statements, written
// out once the residuals above establish it.
Json typos_json() {
    std::vector<Json> t;
    t.push_back(Json::string(
        "kernel: the reduced integral is printed with z^2 + 2*a*z + 1, keeping the 2 of the"
        " quartic case; substituting z = x^n into the stated integrand gives z^2 + n*a*z + 1"));
    t.push_back(Json::string(
        "operator: the second-order coefficient is printed as n^2*(a^2 - 1); the series"
        " coefficient ratios force n^2*a^2 - 4, which matches the printed form only at n = 2."
        " As printed, the operator instead annihilates the integral with the z^2 + 2*a*z + 1"
        " kernel"));
    t.push_back(Json::string(
        "certificate: printed over z^2 + a*z + 1 with z-linear numerator terms also missing"
        " one factor n; restoring n*a for a in those places gives the certificate that"
        " verifies against the fixed operator and kernel"));
    return Json::array(std::move(t));
}

int run_verify(int theorem, std::string variant, std::optional<int> fixed_n,
               bool corrupt_certificate) {
    const uint64_t seed = spot_check_seed();
    std::vector<TheoremFixture> fixtures;
    VarNames names = kSymbolNames;
    if (theorem == 2) {
        fixtures.push_back(theorem2_printed());
        if (variant.empty()) variant = "printed";
        if (variant != "printed")
            throw std::domain_error("theorem 2 has a single configured variant: printed");
    } else if (theorem == 3) {
        fixtures = theorem3_variants();
        names = kReducedNames;
        if (!variant.empty() && !find_theorem3_variant("theorem3-" + variant))
            throw std::domain_error("unknown theorem 3 variant: " + variant);
    } else {
        throw std::domain_error("--theorem must be 2 or 3");
    }

    std::vector<Json> variants_json;
    int verified_count = 0;
    std::string verified_name;
    bool requested_verified = false;
    bool requested_seen = false;
    for (TheoremFixture fx : fixtures) {
        if (fixed_n) fx = substituted_u(fx, *fixed_n);
        if (corrupt_certificate)
            fx.certificate_expr = fx.certificate_expr + RatFunc(MultiPoly::variable(Var::x));
        CertifiedIntegrand f = integrand_for(fx, fixed_n);
        Certificate cert = make_certificate(fx.certificate_expr, f);
        VerificationReport rep = verify_certificate(fx.op, cert, f, seed, names);
        if (rep.verified) {
            ++verified_count;
            verified_name = fx.name;
        }
        std::string short_name =
            theorem == 2 ? "printed" : fx.name.substr(std::string("theorem3-").size());
        if (short_name == variant) {
            requested_verified = rep.verified;
            requested_seen = true;
        }
        variants_json.push_back(variant_json(fx, rep, names));
    }

    Json out = Json::object();
    out.set("requested_variant", variant.empty() ? Json::null() : Json::string(variant))
        .set("seed", Json::number(static_cast<int64_t>(seed)))
        .set("theorem", Json::number(static_cast<int64_t>(theorem)))
        .set("variants", Json::array(std::move(variants_json)))
        .set("verified_count", Json::number(static_cast<int64_t>(verified_count)))
        .set("verified_variant",
             verified_count > 0 ? Json::string(verified_name) : Json::null());
    if (theorem == 3) out.set("typos", typos_json());

    bool ok;
    if (!variant.empty() && requested_seen) {
        ok = requested_verified;
    } else if (fixed_n) {
        // At a fixed n, distinct variants can coincide (n = 1 hides the
        // missing factor n; n = 2 repairs the operator), so the summary
        // only requires that some triple verifies.
        ok = (verified_count >= 1);
    } else {
        // Symbolic summary: the configured set must contain exactly one
        // verifying triple.
        ok = (verified_count == 1);
    }
    out.set("verified", Json::boolean(ok));
    emit(out);
    return ok ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------------------
// poly

int run_poly(int m, bool exact_only) {
    PolyCoeffs p = boros_moll_coeffs(m);
    bool positive = true, log_concave = true;
    for (const auto& d : p.coeffs) positive = positive && d > Rational(0);
    for (size_t l = 1; l + 1 < p.coeffs.size(); ++l)
        log_concave =
            log_concave && p.coeffs[l] * p.coeffs[l] >= p.coeffs[l - 1] * p.coeffs[l + 1];

    std::vector<Json> coeffs;
    for (const auto& d : p.coeffs) {
        Json c = Json::object();
        c.set("exact", Json::string(d.to_string()));
        if (!exact_only) c.set("float", Json::number(d.to_double()));
        coeffs.push_back(std::move(c));
    }
    Json out = Json::object();
    out.set("coefficients", Json::array(std::move(coeffs)))
        .set("log_concave", Json::boolean(log_concave))
        .set("m", Json::number(static_cast<int64_t>(m)))
        .set("positive", Json::boolean(positive));
    emit(out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// ode2rec

int run_ode2rec(std::optional<int> theorem, const std::string& op_text) {
    DiffOp op;
    std::string source;
    if (!op_text.empty()) {
        op = parse_diffop(op_text);
        source = op_text;
    } else if (theorem && *theorem == 2) {
        op = theorem2_printed().op;
        source = "theorem2-printed";
    } else if (theorem && *theorem == 3) {
        op = find_theorem3_variant("theorem3-corrected")->op;
        source = "theorem3-corrected";
    } else {
        throw std::domain_error("ode2rec needs --op or --theorem 2|3");
    }
    Recurrence rec = ode_to_recurrence(op);
    Json offsets = Json::object();
    for (const auto& [k, poly] : rec.offsets)
        offsets.set(std::to_string(k), Json::string(poly.to_string(kRecurrenceNames)));
    Json out = Json::object();
    out.set("offsets", std::move(offsets))
        .set("operator", Json::string(op.to_string()))
        .set("recurrence", Json::string(rec.to_string()))
        .set("source", Json::string(source))
        .set("valid_from", Json::number(static_cast<int64_t>(rec.valid_from)));
    emit(out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// crosscheck

struct Row {
    int n;
    double alpha;
    int m;
    double a;
    double quad = 0.0;
    std::optional<double> series;
    std::optional<double> closed;
    double max_rel_dev = 0.0;
};

std::vector<double> parse_grid(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw std::domain_error("empty a-grid");
    return out;
}

int run_crosscheck(int m_max, const std::string& n_set, const std::string& a_grid, double tol,
                   const std::string& out_format) {
    std::vector<int> ns;
    {
        std::stringstream ss(n_set);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            ns.push_back(std::stoi(item));
        }
    }
    if (ns.empty()) throw std::domain_error("empty n-set");

    std::vector<Row> rows;
    for (int n : ns) {
        if (n < 1) throw std::domain_error("n must be a positive integer");
        double alpha = n == 2 ? 2.0 : static_cast<double>(n);
        std::vector<double> grid;
        if (a_grid == "auto") {
            grid = n == 2 ? std::vector<double>{-0.9, -0.5, 0.0, 0.5, 0.9}
                          : std::vector<double>{-1.6 / n, -0.4 / n, 0.0, 0.4 / n, 1.6 / n};
        } else {
            grid = parse_grid(a_grid);
        }
        for (int m = 0; m <= m_max; ++m) {
            for (double a : grid) {
                if (!(alpha * a > -2.0)) continue;  // keep the grid inside the domain
                Row row{n, alpha, m, a};
                row.quad = integral_quadrature({n, alpha, m, a}, 1e-12).value;
                if (std::fabs(alpha * a) < 2.0)
                    row.series = series_sum({n, alpha, m, a}, 1e-12).value;
                if (n == 2 && a > -1.0) row.closed = closed_form_t1(m, a);
                double dev = 0.0;
                if (row.series)
                    dev = std::max(dev, std::fabs(*row.series - row.quad) / std::fabs(row.quad));
                if (row.closed)
                    dev = std::max(dev, std::fabs(*row.closed - row.quad) / std::fabs(row.quad));
                row.max_rel_dev = dev;
                rows.push_back(row);
            }
        }
    }

    const Row* worst = nullptr;
    for (const auto& r : rows)
        if (!worst || r.max_rel_dev > worst->max_rel_dev) worst = &r;
    bool pass = worst == nullptr || worst->max_rel_dev <= tol;

    auto row_json = [](const Row& r) {
        Json j = Json::object();
        j.set("a", Json::number(r.a))
            .set("alpha", Json::number(r.alpha))
            .set("closed", r.closed ? Json::number(*r.closed) : Json::null())
            .set("m", Json::number(static_cast<int64_t>(r.m)))
            .set("max_rel_dev", Json::number(r.max_rel_dev))
            .set("n", Json::number(static_cast<int64_t>(r.n)))
            .set("quad", Json::number(r.quad))
            .set("series", r.series ? Json::number(*r.series) : Json::null());
        return j;
    };

    if (out_format == "csv") {
        std::cout << "n,alpha,m,a,quad,series,closed,max_rel_dev\n";
        for (const auto& r : rows) {
            std::cout << r.n << ',' << fmt17(r.alpha) << ',' << r.m << ',' << fmt17(r.a) << ','
                      << fmt17(r.quad) << ',' << (r.series ? fmt17(*r.series) : "") << ','
                      << (r.closed ? fmt17(*r.closed) : "") << ',' << fmt17(r.max_rel_dev)
                      << "\n";
        }
    } else if (out_format == "json") {
        std::vector<Json> jrows;
        for (const auto& r : rows) jrows.push_back(row_json(r));
        Json out = Json::object();
        out.set("pass", Json::boolean(pass))
            .set("rows", Json::array(std::move(jrows)))
            .set("tol", Json::number(tol));
        if (worst) out.set("worst", row_json(*worst));
        emit(out);
    } else {
        throw std::domain_error("--out must be csv or json");
    }
    return pass ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quartic integral laboratory: evaluation by quadrature, series and closed"
                 " form; exact certificate verification; operator-to-recurrence translation"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate the integral by one method");
    int e_n = 2, e_m = 0;
    double e_alpha = 2.0, e_a = 0.0, e_tol = 1e-12;
    std::string e_method = "quadrature";
    eval->add_option("--n", e_n, "half-degree exponent n >= 1");
    eval->add_option("--alpha", e_alpha, "middle-coefficient scale");
    eval->add_option("--m", e_m, "power m >= 0");
    eval->add_option("--a", e_a, "parameter a");
    eval->add_option("--method", e_method, "quadrature|series|closed");
    eval->add_option("--tol", e_tol, "relative tolerance (default 1e-12)");

    // verify
    auto* verify = app.add_subcommand("verify", "Verify telescoping certificates exactly");
    int v_theorem = 0;
    std::string v_variant;
    int v_n = 0;
    bool v_corrupt = false;
    verify->add_option("--theorem", v_theorem, "2 or 3")->required();
    verify->add_option("--variant", v_variant,
                       "theorem 2: printed; theorem 3: printed|kernel-fix|operator-fix|corrected");
    verify->add_option("--n", v_n, "verify at a fixed n instead of symbolically in u");
    verify->add_flag("--corrupt-certificate", v_corrupt,
                     "test hook: perturb certificates by +x before verifying");

    // poly
    auto* poly = app.add_subcommand("poly", "Exact polynomial coefficients");
    int p_m = 0;
    bool p_exact = false;
    poly->add_option("--m", p_m, "degree m >= 0")->required();
    poly->add_flag("--exact", p_exact, "emit exact rationals only");

    // ode2rec
    auto* ode2rec = app.add_subcommand("ode2rec", "Translate an operator to a recurrence");
    int o_theorem = 0;
    std::string o_op;
    ode2rec->add_option("--theorem", o_theorem, "built-in operator: 2 or 3 (corrected)");
    ode2rec->add_option("--op", o_op, "operator expression, e.g. \"1 - a*D_a\"");

    // crosscheck
    auto* crosscheck = app.add_subcommand("crosscheck", "Cross-validate all methods on a grid");
    int c_mmax = 8;
    std::string c_nset = "2", c_agrid = "auto", c_out = "json";
    double c_tol = 1e-10;
    crosscheck->add_option("--m-max", c_mmax, "largest m (default 8)");
    crosscheck->add_option("--n-set", c_nset, "comma-separated n values (default 2)");
    crosscheck->add_option("--a-grid", c_agrid, "comma-separated a values or auto");
    crosscheck->add_option("--tol", c_tol, "pass threshold on max relative deviation");
    crosscheck->add_option("--out", c_out, "json|csv");

    try {
        app.parse(argc, argv);
        if (eval->parsed()) return run_eval(e_n, e_alpha, e_m, e_a, e_method, e_tol);
        if (verify->parsed())
            return run_verify(v_theorem, v_variant,
                              v_n > 0 ? std::optional<int>(v_n) : std::nullopt, v_corrupt);
        if (poly->parsed()) {
            if (p_m < 0) throw std::domain_error("--m must be >= 0");
            return run_poly(p_m, p_exact);
        }
        if (ode2rec->parsed())
            return run_ode2rec(o_theorem > 0 ? std::optional<int>(o_theorem) : std::nullopt,
                               o_op);
        if (crosscheck->parsed()) return run_crosscheck(c_mmax, c_nset, c_agrid, c_tol, c_out);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitDomain;
    } catch (const QuadratureFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const SeriesBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitDomain;
}
