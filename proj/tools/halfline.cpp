// Command-line front end: every pipeline stage behind a subcommand, with
// exact pretty output by default and machine-readable JSON behind --json.
// Exit codes: 0 success, 1 domain error (name on stderr), 2 usage error.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "halfline/asymptotics.hpp"
#include "halfline/closed_forms.hpp"
#include "halfline/dfinite.hpp"
#include "halfline/guessing.hpp"
#include "halfline/identities.hpp"
#include "halfline/json_io.hpp"
#include "halfline/parse.hpp"
#include "halfline/selfcheck.hpp"
#include "halfline/walks.hpp"

using namespace halfline;

namespace {

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Series pretty output drops the trailing O(t^N) marker: the truncation
// order is whatever --order requested, so the marker adds nothing here.
std::string series_pretty(const SeriesT& f) {
    std::string s = f.str();
    auto tail = s.rfind(" + O(t^");
    return tail == std::string::npos ? s : s.substr(0, tail);
}

std::string derivative_mark(int k) {
    if (k == 0) return "";
    if (k <= 3) return std::string(static_cast<std::size_t>(k), '\'');
    return "^(" + std::to_string(k) + ")";
}

std::string ode_pretty(const LinODE& l) {
    std::string s;
    const int d = l.order();
    for (int i = 0; i <= d; ++i) {
        const UniPoly& p = l.coeffs[static_cast<std::size_t>(i)];
        if (p.is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + p.str("t") + ")*F" + derivative_mark(d - i);
    }
    if (s.empty()) s = "0";
    return s + " = " + l.inhom.str("t");
}

std::string rec_pretty(const PRec& r) {
    std::string s;
    const int order = r.order();
    for (int i = 0; i <= order; ++i) {
        const UniPoly& q = r.coeffs[static_cast<std::size_t>(i)];
        if (q.is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string idx = order - i > 0 ? "n+" + std::to_string(order - i) : "n";
        s += "(" + q.str("n") + ")*f[" + idx + "]";
    }
    return s + " = 0";
}

std::string join_rationals(const std::vector<Rational>& v, const std::string& sep) {
    std::string s;
    for (const auto& r : v) {
        if (!s.empty()) s += sep;
        s += r.str();
    }
    return s;
}

// The excursion pipeline shared by the ode and rec subcommands: truncated
// counts, algebraic candidate, differential equation.
OdeDerivation excursion_ode_pipeline(int order) {
    GuessReport rep = guess_algebraic(classical_kernel(order).F0, 0, 2, 2);
    if (!rep.candidate)
        fail("NoCandidate", "no algebraic equation found at truncation order " +
                                std::to_string(order));
    return derive_ode(*rep.candidate);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact enumeration toolkit for half-line walks"};
    app.require_subcommand(1);

    int default_order = 12;
    int default_guess_order = 8;
    if (const char* env = std::getenv("HALFLINE_ORDER")) {
        try {
            std::size_t used = 0;
            int v = std::stoi(env, &used);
            if (used != std::string(env).size() || v < 0) throw std::invalid_argument("");
            default_order = default_guess_order = v;
        } catch (const std::exception&) {
            std::cerr << "HALFLINE_ORDER must be a nonnegative integer, got \"" << env << "\"\n";
            return 2;
        }
    }

    int exit_status = 0;

    // count
    std::string count_steps = "-1,1";
    int count_len = 10;
    bool count_json = false;
    auto* count = app.add_subcommand("count", "walk counts by dynamic programming");
    count->add_option("--steps", count_steps, "comma-separated step values")->capture_default_str();
    count->add_option("--len", count_len, "maximum walk length")->required();
    count->add_flag("--json", count_json, "machine-readable output");
    count->callback([&] {
        CountTable t = dp_count(StepSet(parse_int_list(count_steps)), count_len);
        if (count_json) {
            emit(json_of(t));
            return;
        }
        for (int n = 0; n <= t.max_len; ++n) {
            std::cout << n << ":";
            for (const auto& [pos, cnt] : t.rows[static_cast<std::size_t>(n)])
                std::cout << " " << pos << "=" << cnt.str();
            std::cout << "\n";
        }
    });

    // solve
    std::string solve_method;
    int solve_order = default_order;
    bool solve_json = false;
    auto* solve = app.add_subcommand("solve", "the full series F(x;t) by one of five methods");
    solve->add_option("--method", solve_method, "kernel | wiener-hopf | orbit-sum | factorize | fixpoint")
        ->required()
        ->check(CLI::IsMember({"kernel", "wiener-hopf", "orbit-sum", "factorize", "fixpoint"}));
    solve->add_option("--order", solve_order, "truncation order")->capture_default_str();
    solve->add_flag("--json", solve_json, "machine-readable output");
    solve->callback([&] {
        SeriesT f = [&] {
            if (solve_method == "kernel") return classical_kernel(solve_order).F;
            if (solve_method == "wiener-hopf") return wiener_hopf(solve_order);
            if (solve_method == "orbit-sum") return orbit_sum(solve_order);
            if (solve_method == "factorize") {
                WHFactors wh = wh_factorize(solve_order);
                return (wh.F0 * wh.Fplus).truncate(solve_order);
            }
            return fixpoint_solve(StepSet({-1, 1}), solve_order);
        }();
        if (solve_json) emit(json_of(f));
        else std::cout << series_pretty(f) << "\n";
    });

    // convergent
    int conv_height = 4;
    int conv_order = default_order;
    bool conv_json = false;
    auto* conv = app.add_subcommand("convergent", "continued-fraction convergent of F(0;t)");
    conv->add_option("--height,-k", conv_height, "height bound")->required();
    conv->add_option("--order", conv_order, "truncation order")->capture_default_str();
    conv->add_flag("--json", conv_json, "machine-readable output");
    conv->callback([&] {
        Convergent c = cf_convergent(conv_height, conv_order);
        if (conv_json) emit(Json{{"height", c.k}, {"series", json_of(c.series)}});
        else std::cout << series_pretty(c.series) << "\n";
    });

    // identities
    std::string id_kind;
    long long id_i = 0, id_n = 0, id_r = 0, id_s = 0;
    bool id_json = false;
    auto* ident = app.add_subcommand("identities", "closed-form counting identities");
    ident->add_option("--kind", id_kind, "reflection | cycle | lagrange")
        ->required()
        ->check(CLI::IsMember({"reflection", "cycle", "lagrange"}));
    ident->add_option("--i", id_i, "endpoint (reflection)");
    ident->add_option("--n", id_n, "walk length (reflection, lagrange)");
    ident->add_option("--r", id_r, "up-steps (cycle)");
    ident->add_option("--s", id_s, "down-steps (cycle)");
    ident->add_flag("--json", id_json, "machine-readable output");
    ident->callback([&] {
        Rational value = [&] {
            if (id_kind == "reflection") return reflection_count(id_i, id_n);
            if (id_kind == "cycle") return cycle_count(id_r, id_s);
            return lagrange_f0(id_n);
        }();
        if (id_json) emit(Json{{"kind", id_kind}, {"value", value.str()}});
        else std::cout << value.str() << "\n";
    });

    // guess
    int guess_order = default_guess_order;
    int guess_dx = -1, guess_dt = 2, guess_dy = 2;
    bool guess_excursion = false, guess_json = false;
    auto* guess = app.add_subcommand("guess", "algebraic equation from truncated counting data");
    guess->add_option("--order", guess_order, "truncation order of the data")->capture_default_str();
    guess->add_option("--dx", guess_dx, "x-degree bound (default: 2, or 0 with --excursion)");
    guess->add_option("--dt", guess_dt, "t-degree bound")->capture_default_str();
    guess->add_option("--dy", guess_dy, "Y-degree bound")->capture_default_str();
    guess->add_flag("--excursion", guess_excursion, "guess for F(0;t) instead of F(x;t)");
    guess->add_flag("--json", guess_json, "machine-readable output");
    guess->callback([&] {
        int dx = guess_dx >= 0 ? guess_dx : (guess_excursion ? 0 : 2);
        SeriesT data = guess_excursion ? classical_kernel(guess_order).F0
                                       : fixpoint_solve(StepSet({-1, 1}), guess_order);
        GuessReport rep = guess_algebraic(data, dx, guess_dt, guess_dy);
        if (guess_json) {
            Json j{{"nullspace_dim", rep.nullspace_dim},
                   {"orders_used", rep.orders_used},
                   {"confirmed_to", rep.confirmed_to}};
            j["candidate"] = rep.candidate ? json_of(*rep.candidate) : Json(nullptr);
            emit(j);
            return;
        }
        std::cout << "nullspace dimension " << rep.nullspace_dim << "\n";
        if (rep.candidate) std::cout << "candidate: " << rep.candidate->str() << "\n";
        else std::cout << "no candidate\n";
    });

    // ode
    int ode_order = default_guess_order;
    bool ode_json = false;
    auto* ode = app.add_subcommand("ode", "differential equation for the excursion series");
    ode->add_option("--order", ode_order, "truncation order for the guessing stage")
        ->capture_default_str();
    ode->add_flag("--json", ode_json, "machine-readable output");
    ode->callback([&] {
        OdeDerivation d = excursion_ode_pipeline(ode_order);
        if (ode_json) {
            emit(Json{{"minimal_relation", json_of(d.minimal_relation)}, {"ode", json_of(d.ode)}});
            return;
        }
        std::cout << "relation: " << ode_pretty(d.minimal_relation) << "\n";
        std::cout << "ode:      " << ode_pretty(d.ode) << "\n";
    });

    // rec
    int rec_order = default_guess_order;
    bool rec_even = false, rec_json = false;
    auto* rec = app.add_subcommand("rec", "recurrence for the excursion counts");
    rec->add_option("--order", rec_order, "truncation order for the guessing stage")
        ->capture_default_str();
    rec->add_flag("--even", rec_even, "restrict to even indices g(n) = f(2n)");
    rec->add_flag("--json", rec_json, "machine-readable output");
    rec->callback([&] {
        PRec r = ode_to_rec(excursion_ode_pipeline(rec_order).ode);
        if (rec_even) r = even_index_subsequence(r);
        if (rec_json) emit(json_of(r));
        else std::cout << rec_pretty(r) << "\n";
    });

    // unroll
    std::string unroll_rec, unroll_init;
    long long unroll_n = 0;
    bool unroll_json = false;
    auto* unroll = app.add_subcommand("unroll", "exact terms of a recurrence solution");
    unroll->add_option("--rec", unroll_rec, "comma-separated coefficient polynomials in n, "
                                            "highest shift first")
        ->required();
    unroll->add_option("--init", unroll_init, "comma-separated initial values")->required();
    unroll->add_option("--n", unroll_n, "last index to produce")->required();
    unroll->add_flag("--json", unroll_json, "machine-readable output");
    unroll->callback([&] {
        PRec r{parse_poly_list(unroll_rec, "n")};
        std::vector<Rational> seq = rec_unroll(r, parse_rational_list(unroll_init), unroll_n);
        if (unroll_json) {
            Json terms = Json::array();
            for (const auto& v : seq) terms.push_back(v.str());
            emit(Json{{"terms", terms}});
            return;
        }
        std::cout << join_rationals(seq, ", ") << "\n";
    });

    // asymp
    std::string asymp_rec;
    int asymp_depth = 4;
    bool asymp_json = false;
    auto* asymp = app.add_subcommand("asymp", "growth expansions phi^n n^alpha (1 + ...)");
    asymp->add_option("--rec", asymp_rec, "comma-separated coefficient polynomials in n, "
                                          "highest shift first")
        ->required();
    asymp->add_option("--depth", asymp_depth, "number of correction coefficients")
        ->capture_default_str();
    asymp->add_flag("--json", asymp_json, "machine-readable output");
    asymp->callback([&] {
        auto exps = poincare_expansion(PRec{parse_poly_list(asymp_rec, "n")}, asymp_depth);
        if (asymp_json) {
            Json j = Json::array();
            for (const auto& e : exps) j.push_back(json_of(e));
            emit(j);
            return;
        }
        for (const auto& e : exps)
            std::cout << "phi = " << e.phi.str() << "  alpha = " << e.alpha.str() << "  c = ["
                      << join_rationals(e.c, ", ") << "]\n";
    });

    // estimate
    std::string est_rec, est_init, est_points;
    long long est_n = 1000;
    int est_depth = 4, est_precision = 50;
    bool est_json = false;
    auto* est = app.add_subcommand("estimate", "growth constant from exact sequence data");
    est->add_option("--rec", est_rec, "comma-separated coefficient polynomials in n")->required();
    est->add_option("--init", est_init, "comma-separated initial values")->required();
    est->add_option("--n", est_n, "unroll the sequence this far")->capture_default_str();
    est->add_option("--points", est_points, "comma-separated evaluation indices")->required();
    est->add_option("--depth", est_depth, "expansion depth")->capture_default_str();
    est->add_option("--precision", est_precision, "decimal digits")->capture_default_str();
    est->add_flag("--json", est_json, "machine-readable output");
    est->callback([&] {
        PRec r{parse_poly_list(est_rec, "n")};
        std::vector<Rational> values = rec_unroll(r, parse_rational_list(est_init), est_n);
        AsympExpansion dominant = poincare_expansion(r, est_depth).front();
        ConstantEstimate ce =
            estimate_constant(values, dominant, parse_index_list(est_points), est_precision);
        if (est_json) {
            Json j = json_of(ce);
            j["phi"] = dominant.phi.str();
            j["alpha"] = dominant.alpha.str();
            emit(j);
            return;
        }
        std::cout << "estimate = " << ce.estimate << "\n";
        std::cout << "bracket  = " << ce.bracket << "\n";
    });

    // selfcheck
    std::string only_names;
    bool selfcheck_json = false;
    auto* selfcheck = app.add_subcommand("selfcheck", "cross-method equivalence battery");
    auto* only_opt = selfcheck->add_option("--only", only_names,
                                           "comma-separated subset of check names (empty: none)");
    selfcheck->add_flag("--json", selfcheck_json, "machine-readable output");
    selfcheck->callback([&] {
        std::vector<SelfCheck> battery = default_battery();
        if (only_opt->count() > 0) {
            std::vector<SelfCheck> subset;
            for (const std::string& name : detail::split_top_level(only_names)) {
                if (name.empty()) continue;
                bool known = false;
                for (auto& c : battery)
                    if (c.name == name) {
                        subset.push_back(c);
                        known = true;
                    }
                if (!known) throw CLI::ValidationError("--only", "unknown check \"" + name + "\"");
            }
            battery = std::move(subset);
        }
        std::vector<SelfCheckResult> results = run_battery(battery);
        bool any_fail = false;
        if (selfcheck_json) {
            Json j = Json::array();
            for (const auto& r : results)
                j.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            emit(j);
        } else {
            for (const auto& r : results) {
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
                if (!r.pass) std::cout << ": " << r.detail;
                std::cout << "\n";
            }
        }
        for (const auto& r : results) any_fail = any_fail || !r.pass;
        if (any_fail) exit_status = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return exit_status;
}
