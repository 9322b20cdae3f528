/*
   Copyright 2026 The qsatake Authors

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

// qsatake: quantum products, invariant suites and the differential operator
// pipeline from the command line. JSON output is deterministic (sorted keys);
// the exit status is 0 iff every requested check passes, 2 on bad input.

#include <cctype>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <qsatake/json_io.hpp>
#include <qsatake/qde.hpp>
#include <qsatake/quadric.hpp>
#include <qsatake/spinor.hpp>
#include <qsatake/type_a.hpp>
#include <qsatake/verify.hpp>

using namespace qsatake;

namespace {

struct Common {
    std::string emit = "text";
    unsigned seed = 0;
    bool timing = false;
    VerifyTolerances tol;
};

class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "A:2,3", or a bare family name completed by --n / --a / --b.
SpaceSpec resolve_space(const std::string& text, int n, int a, int b) {
    if (text.find(':') != std::string::npos) return parse_space(text);
    std::string fam;
    for (char c : text) fam += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (fam == "A") {
        if (a < 1 || b < 1) throw InputError("family A needs --a and --b");
        return parse_space("A:" + std::to_string(a) + "," + std::to_string(b));
    }
    if (fam == "Q" || fam == "OG") {
        if (n < 1) throw InputError("family " + fam + " needs --n");
        return parse_space(fam + ":" + std::to_string(n));
    }
    throw InputError("unknown space '" + text + "' (expected A, Q or OG)");
}

struct ClassExpr {
    char kind = 0;  // 'p', 'h', 'e', 't' (tau), 'l' (partition literal), 's' (quadric label)
    int k = 0;
    Partition lam;
    std::string text;
};

ClassExpr parse_class(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto fail = [&](std::size_t pos, const std::string& why) -> ClassExpr {
        throw InputError("cannot parse class '" + raw + "' at position " + std::to_string(pos) + ": " + why);
    };
    auto number = [&](std::size_t pos) {
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail(pos, "expected a number");
        std::size_t end = pos;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        return std::make_pair(std::stoi(s.substr(pos, end - pos)), end);
    };
    ClassExpr c;
    c.text = s;
    if (s.empty()) return fail(0, "empty expression");
    if (s[0] == '(' || std::isdigit(static_cast<unsigned char>(s[0]))) {
        c.kind = 'l';
        c.lam = parse_partition(s);
        return c;
    }
    if (s.rfind("tau", 0) == 0) {
        c.kind = 't';
        if (s.size() > 3 && s[3] == '(') {
            c.kind = 'l';
            c.lam = parse_partition(s.substr(3));
            return c;
        }
        auto [k, end] = number(3);
        if (end != s.size()) return fail(end, "trailing characters");
        c.k = k;
        return c;
    }
    if (s[0] == 'p' || s[0] == 'h' || s[0] == 'e' || s[0] == 's') {
        c.kind = s[0];
        auto [k, end] = number(1);
        c.k = k;
        if (c.kind == 's' && end < s.size() && (s[end] == '+' || s[end] == '-')) ++end;
        if (end != s.size()) return fail(end, "trailing characters");
        return c;
    }
    return fail(0, "expected p<k>, h<k>, e<k>, tau<k>, tau(...), s<k> or a partition");
}

json vector_json(const PartitionVector& v) { return to_json(v); }

json quadric_json(const QuadricClass& c) {
    json terms = json::object();
    auto slots = quadric_slots(c.n());
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (!c[i].is_zero()) terms[slot_label(slots[i])] = c[i].to_string("q");
    return json{{"terms", terms}, {"pretty", c.to_string()}};
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};

std::string fixed(double x, int prec) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(prec);
    os << x;
    return os.str();
}

// ---- qprod ----

int cmd_qprod(const Common& opt, const std::string& space_text, int n_opt, int a_opt, int b_opt, const std::string& cls_text, const std::string& times_text) {
    Timer timer;
    const SpaceSpec sp = resolve_space(space_text, n_opt, a_opt, b_opt);
    const ClassExpr cls = parse_class(cls_text);
    json out{{"command", "qprod"}, {"space", sp.to_string()}, {"class", cls.text}, {"times", times_text}};
    bool pass = true;
    std::string pretty_result;

    if (sp.family == 'A') {
        GrassmannSpace g(sp.a, sp.b);
        const Partition mu = parse_partition(times_text);
        check_in_box(mu, g);
        PartitionVector v;
        switch (cls.kind) {
            case 'p':
                if (cls.k < 1 || cls.k >= g.n()) throw InputError("p_l needs 1 <= l <= " + std::to_string(g.n() - 1) + " on " + sp.to_string());
                v = power_sum_rim_product(cls.k, mu, g).v;
                break;
            case 'h':
            case 'e':
                v = quantum_pieri(cls.kind, cls.k, mu, g).v;
                break;
            case 'l':
                check_in_box(cls.lam, g);
                v = q_multiply_symfunc(schur_in_h(cls.lam), mu, g).v;
                break;
            default:
                throw InputError("class '" + cls.text + "' is not defined on a Grassmannian");
        }
        out["result"] = vector_json(v);
        pretty_result = pretty(v);
    } else if (sp.family == 'O') {
        const int n = sp.n;
        const Partition mu = parse_partition(times_text.rfind("tau", 0) == 0 ? times_text.substr(3) : times_text);
        subset_of_label(mu, n);
        PartitionVector v;
        if (cls.kind == 'p') {
            if (cls.k % 2 == 0 || cls.k < 1 || cls.k > 2 * n - 3) throw InputError("on OG(n,2n) p_l is available for odd 1 <= l <= 2n-3");
            v = spinor_power_product((cls.k + 1) / 2, mu, n);
        } else if (cls.kind == 't' || cls.kind == 'l') {
            StrictPartition lam = cls.kind == 't' ? StrictPartition{cls.k} : cls.lam;
            subset_of_label(lam, n);
            if (lam == StrictPartition{1}) {
                v = spinor_power_product(1, mu, n);
            } else {
                auto r = spinor_spectral_product(lam, mu, n, 1.0);
                v = r.value;
                pass = r.residual < opt.tol.rounding;
                out["rounding_residual"] = r.residual;
            }
        } else {
            throw InputError("class '" + cls.text + "' is not defined on OG(n,2n); use tau<k>, tau(...) or odd p<k>");
        }
        out["result"] = vector_json(v);
        pretty_result = pretty(v);
    } else {
        const int n = sp.n;
        auto quadric_class = [&](const std::string& t) {
            ClassExpr c = parse_class(t);
            if (c.kind == 's') return QuadricClass::basis(n, c.text);
            if ((c.kind == 'h' || c.kind == 'p' || c.kind == 't') && c.k == 1) return quadric_hyperplane(n);
            throw InputError("quadric classes are s<k>, s<n-1>+, s<n-1>- or the hyperplane h1");
        };
        auto r = quadric_qproduct(quadric_class(cls_text), quadric_class(times_text));
        pass = r.residual < opt.tol.rounding;
        out["rounding_residual"] = r.residual;
        out["result"] = quadric_json(r.value);
        pretty_result = r.value.to_string();
    }
    out["pass"] = pass;
    if (opt.timing) out["seconds"] = timer.seconds();
    if (opt.emit == "json")
        emit_json(out);
    else
        std::cout << pretty_result << "\n";
    return pass ? 0 : 1;
}

// ---- verify ----

int cmd_verify(const Common& opt, const std::string& suite) {
    Timer timer;
    std::vector<std::string> names = suite == "all" ? verify_suite_names() : std::vector<std::string>{suite};
    json reports = json::array();
    bool pass = true;
    long total = 0, passed = 0;
    for (const auto& name : names) {
        Timer t;
        SuiteReport r = run_suite(name, opt.tol);
        pass = pass && r.pass();
        for (const auto& c : r.checks) {
            ++total;
            passed += c.pass;
        }
        json j = to_json(r);
        if (opt.timing) j["seconds"] = t.seconds();
        reports.push_back(j);
        if (opt.emit != "json") {
            std::cout << "[" << r.suite << "]\n";
            for (const auto& c : r.checks) std::cout << "  " << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
            for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
            if (opt.timing) std::cout << "  " << fixed(t.seconds(), 2) << " s\n";
        }
    }
    if (opt.emit == "json") {
        json out{{"command", "verify"}, {"suite", suite}, {"seed", opt.seed}, {"reports", reports}, {"checks_passed", passed}, {"checks_total", total}, {"pass", pass}};
        if (opt.timing) out["seconds"] = timer.seconds();
        emit_json(out);
    } else {
        std::cout << (pass ? "PASS" : "FAIL") << " " << passed << "/" << total << " checks\n";
    }
    return pass ? 0 : 1;
}

// ---- qde ----

int cmd_qde(const Common& opt, const std::string& space_text, int n_opt, int a_opt, int b_opt, std::size_t cyclic, std::optional<unsigned> lefschetz, bool reg) {
    Timer timer;
    const SpaceSpec sp = resolve_space(space_text, n_opt, a_opt, b_opt);
    auto M = hyperplane_matrix(sp);
    if (cyclic >= M.dim()) throw InputError("cyclic index out of range (dimension " + std::to_string(M.dim()) + ")");
    auto mo = minimal_operator(M, cyclic, false);
    const bool cyc = mo.span_dim == M.dim();
    json out{{"command", "qde"}, {"space", sp.to_string()}, {"cyclic_vector", M.labels[cyclic]}, {"span_dim", mo.span_dim}, {"dim", M.dim()}, {"cyclic", cyc},
             {"operator", to_json(mo.op)}};
    std::vector<std::string> lines{"space " + sp.to_string() + ", cyclic vector " + M.labels[cyclic] + " spans " + std::to_string(mo.span_dim) + "/" + std::to_string(M.dim()),
                                   "L = " + mo.op.to_string()};
    OreOperator cur = mo.op;
    if (lefschetz) {
        auto lf = lefschetz_transform(cur, *lefschetz);
        out["lefschetz"] = json{{"codim", *lefschetz}, {"stripped_factor", detail::factor_string(lf.factor)}, {"operator", to_json(lf.op)}};
        lines.push_back("quantum Lefschetz (codim " + std::to_string(*lefschetz) + "): stripped " + detail::factor_string(lf.factor));
        lines.push_back("L' = " + lf.op.to_string());
        cur = lf.op;
    }
    if (reg) {
        auto rg = regularize(cur);
        out["regularized"] = json{{"stripped_factor", detail::factor_string(rg.factor)}, {"operator", to_json(rg.op)}, {"recurrence", to_json(operator_to_recurrence(rg.op))}};
        lines.push_back("regularized: stripped " + detail::factor_string(rg.factor));
        lines.push_back("L_reg = " + rg.op.to_string());
        lines.push_back("recurrence: " + operator_to_recurrence(rg.op).to_string());
        cur = rg.op;
    }
    out["pass"] = cyc;
    if (opt.timing) out["seconds"] = timer.seconds();
    if (opt.emit == "json") {
        emit_json(out);
    } else {
        for (const auto& l : lines) std::cout << l << "\n";
        if (!cyc) std::cout << "warning: the chosen vector is not cyclic; the operator is that of the generated submodule\n";
    }
    return cyc ? 0 : 1;
}

// ---- apery ----

int cmd_apery(const Common& opt, std::size_t N) {
    if (N < 1) throw InputError("--n must be at least 1");
    auto d = apery_sequences(N);
    const unsigned digits = std::max(30u, static_cast<unsigned>(3.1 * static_cast<double>(N)) + 20u);
    auto z = zeta3_enclosure(digits);
    json rows = json::array();
    if (opt.emit != "json") std::cout << "n\ta_n\tb_n\t|zeta(3) - 6b_n/a_n|\n";
    for (std::size_t n = 0; n <= N; ++n) {
        Rational approx = Rational(6) * d.b[n] / Rational(d.a[n]);
        Rational e1 = abs(z.lo - approx), e2 = abs(z.hi - approx);
        const std::string err = scientific_string(std::max(e1, e2), 6);
        if (opt.emit == "json")
            rows.push_back({{"n", n}, {"a", d.a[n].get_str()}, {"b", d.b[n].get_str()}, {"error", err}});
        else
            std::cout << n << "\t" << d.a[n].get_str() << "\t" << d.b[n].get_str() << "\t" << err << "\n";
    }
    const bool pass = d.binomial_identity && d.denominators_divide;
    if (opt.emit == "json")
        emit_json(json{{"command", "apery"},
                       {"n", N},
                       {"rows", rows},
                       {"zeta3", decimal_string(z.lo, 30)},
                       {"binomial_identity", d.binomial_identity},
                       {"denominators_divide", d.denominators_divide},
                       {"pass", pass}});
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qsatake: quantum cohomology of minuscule spaces and its Satake model"};
    app.require_subcommand(1);
    Common opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--emit", opt.emit, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
        sub->add_option("--seed", opt.seed, "seed for randomized sampling")->capture_default_str();
        sub->add_flag("--timing", opt.timing, "include wall-clock times (output is then not reproducible)");
        sub->add_option("--tol-rounding", opt.tol.rounding, "integer rounding residual of spectral products")->capture_default_str();
        sub->add_option("--tol-eigen", opt.tol.eigen, "eigenvector residuals")->capture_default_str();
        sub->add_option("--tol-identity", opt.tol.identity, "u-matrix and P~ identities")->capture_default_str();
        sub->add_option("--tol-inverse", opt.tol.inverse, "quadric inverse matrix residual")->capture_default_str();
        sub->add_option("--tol-basis-change", opt.tol.basis_change, "type A basis change residual")->capture_default_str();
        sub->add_option("--tol-gap", opt.tol.gap, "eigenvalue cluster width")->capture_default_str();
    };

    std::string space, cls, times = "()";
    int n = 0, a = 0, b = 0;
    auto* qprod = app.add_subcommand("qprod", "quantum product of a class with a Schubert class");
    qprod->add_option("--space", space, "A:a,b | Q:n | OG:n, or A/Q/OG with --a --b / --n")->required();
    qprod->add_option("--n", n);
    qprod->add_option("--a", a);
    qprod->add_option("--b", b);
    qprod->add_option("--class", cls, "p<k> | h<k> | e<k> | tau<k> | tau(...) | s<k> | partition")->required();
    qprod->add_option("--times", times, "Schubert class: partition, or s<k> on a quadric")->capture_default_str();
    add_common(qprod);

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"typeA", "quadric", "spinor", "e6", "e7", "satake", "all"}))->capture_default_str();
    add_common(verify);

    std::size_t cyclic = 0;
    unsigned lef = 0;
    bool reg = false;
    auto* qde = app.add_subcommand("qde", "minimal quantum differential operator");
    qde->add_option("--space", space, "A:a,b | Q:n | OG:n, or a / q / og with --a --b / --n")->required();
    qde->add_option("--n", n);
    qde->add_option("--a", a);
    qde->add_option("--b", b);
    qde->add_option("--cyclic", cyclic, "index of the cyclic basis vector")->capture_default_str();
    auto* lef_opt = qde->add_option("--lefschetz", lef, "codimension of the quantum Lefschetz step");
    qde->add_flag("--regularize", reg, "regularize the final operator");
    add_common(qde);

    std::size_t N = 20;
    auto* apery = app.add_subcommand("apery", "Apery sequences and zeta(3) approximations");
    apery->add_option("--n", N)->capture_default_str();
    add_common(apery);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    try {
        if (*qprod) return cmd_qprod(opt, space, n, a, b, cls, times);
        if (*verify) return cmd_verify(opt, suite);
        if (*qde) return cmd_qde(opt, space, n, a, b, cyclic, *lef_opt ? std::optional<unsigned>(lef) : std::nullopt, reg);
        if (*apery) return cmd_apery(opt, N);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
