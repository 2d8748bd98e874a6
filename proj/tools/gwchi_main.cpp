#include "CLI11.hpp"

#include "gwchi/error.hpp"
#include "gwchi/hilbert.hpp"
#include "gwchi/jsonio.hpp"
#include "gwchi/k0var.hpp"
#include "gwchi/power.hpp"
#include "gwchi/rng.hpp"
#include "gwchi/symmetric.hpp"

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace gwchi;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Shared option state; every subcommand reads the subset it declares.
struct Options {
    std::string field_flag = "rclosed";
    unsigned order = 10;
    unsigned trials = 200;
    std::uint64_t seed = Rng::default_seed;
    bool json = false;
    std::string expr;
    std::int64_t e_complex = 0;
    std::int64_t e_real = 0;
    std::string ring = "z";
    std::string route = "both";
};

void add_field_flag(CLI::App* cmd, Options& opt) {
    cmd->add_option("--field", opt.field_flag, "Field model: cclosed|rclosed|fq:<q>|q")
        ->default_val("rclosed");
}

void add_order_flag(CLI::App* cmd, Options& opt) {
    cmd->add_option("--order", opt.order, "Series truncation order")
        ->default_val(10)
        ->check(CLI::Range(1u, 64u));
}

void add_json_flag(CLI::App* cmd, Options& opt) {
    cmd->add_flag("--json", opt.json, "Emit JSON instead of text");
}

Json gw_column_json(const GwSeries& s) {
    Json rank = Json::array(), sig = Json::array();
    const bool ordered = s.ring().field.orderings() > 0;
    for (unsigned n = 0; n <= s.order(); ++n) {
        rank.push_back(int_json(s.coeff(n).rank()));
        if (ordered) sig.push_back(int_json(s.coeff(n).signature()));
    }
    Json j;
    j["rank"] = std::move(rank);
    j["signature"] = ordered ? std::move(sig) : Json(nullptr);
    return j;
}

void print_gw_columns(const GwSeries& s) {
    const bool ordered = s.ring().field.orderings() > 0;
    std::cout << (ordered ? "deg rank signature" : "deg rank") << "\n";
    for (unsigned n = 0; n <= s.order(); ++n) {
        std::cout << n << " " << s.coeff(n).rank().str();
        if (ordered) std::cout << " " << s.coeff(n).signature().str();
        std::cout << "\n";
    }
}

int run_chi(const Options& opt) {
    const FieldModel field = FieldModel::from_flag(opt.field_flag);
    const auto expr = parse_variety(opt.expr);
    const GwElement result = eval_chi(expr, field);
    if (opt.json) {
        Json j;
        j["schema"] = 1;
        j["command"] = "chi";
        j["expr"] = expr->render();
        j["field"] = field.name();
        j["result"] = result.json();
        emit(j);
    } else {
        std::cout << "expr: " << expr->render() << "\n";
        std::cout << "field: " << field.name() << "\n";
        std::cout << "chi: " << result.str() << "\n";
        std::cout << "rank: " << result.rank().str() << "\n";
        const auto sig = result.signature_opt();
        std::cout << "signature: " << (sig ? sig->str() : std::string("none")) << "\n";
        std::cout << "discriminant: " << result.discriminant().str() << "\n";
    }
    return exit_ok;
}

int run_series_local_hilb(const Options& opt) {
    const FieldModel field = FieldModel::from_flag(opt.field_flag);
    const GwSeries s = local_hilb_series_gw(field, opt.order);
    if (opt.json) {
        Json j;
        j["schema"] = 1;
        j["command"] = "series";
        j["kind"] = "local-hilb";
        j["field"] = field.name();
        j["order"] = opt.order;
        j["series"] = s.json();
        j.update(gw_column_json(s));
        emit(j);
    } else {
        std::cout << "kind: local-hilb\n";
        std::cout << "field: " << field.name() << "\n";
        std::cout << "order: " << opt.order << "\n";
        std::cout << "series: " << s.str() << "\n";
        print_gw_columns(s);
    }
    return exit_ok;
}

int run_series_gottsche(const Options& opt) {
    const FieldModel field = FieldModel::from_flag(opt.field_flag);
    const SurfaceInvariants inv{opt.e_complex, opt.e_real};
    GwSeries series = opt.route == "power" ? gottsche_via_power(inv, field, opt.order)
                                           : gottsche_via_sym(inv, field, opt.order);
    std::optional<bool> routes_agree;
    if (opt.route == "both")
        routes_agree = series == gottsche_via_power(inv, field, opt.order);
    if (opt.json) {
        Json j;
        j["schema"] = 1;
        j["command"] = "series";
        j["kind"] = "gottsche";
        j["field"] = field.name();
        j["e_C"] = opt.e_complex;
        j["e_R"] = opt.e_real;
        j["order"] = opt.order;
        j["route"] = opt.route;
        j["routes_agree"] = routes_agree ? Json(*routes_agree) : Json(nullptr);
        j["series"] = series.json();
        j.update(gw_column_json(series));
        emit(j);
    } else {
        std::cout << "kind: gottsche\n";
        std::cout << "field: " << field.name() << "\n";
        std::cout << "e_C: " << opt.e_complex << "\n";
        std::cout << "e_R: " << opt.e_real << "\n";
        std::cout << "order: " << opt.order << "\n";
        std::cout << "route: " << opt.route << "\n";
        if (routes_agree)
            std::cout << "routes_agree: " << (*routes_agree ? "true" : "false") << "\n";
        std::cout << "series: " << series.str() << "\n";
        print_gw_columns(series);
    }
    return exit_ok;
}

int run_series_surface_printed(const Options& opt) {
    const FieldModel field = FieldModel::from_flag(opt.field_flag);
    const SurfaceInvariants inv{opt.e_complex, opt.e_real};
    const GwSeries printed = surface_formula_printed(inv, field, opt.order);

    // The corrected series is the route-C expansion; it needs a torsion-free
    // model, so the diff is reported only where it can be computed.
    std::optional<std::vector<SeriesDiff>> diffs;
    if (field.kind() == FieldKind::QuadraticallyClosed || field.kind() == FieldKind::RealClosed)
        diffs = diff_series(printed, gottsche_via_power(inv, field, opt.order));

    if (opt.json) {
        Json j;
        j["schema"] = 1;
        j["command"] = "series";
        j["kind"] = "surface-printed";
        j["field"] = field.name();
        j["e_C"] = opt.e_complex;
        j["e_R"] = opt.e_real;
        j["order"] = opt.order;
        j["series"] = printed.json();
        j.update(gw_column_json(printed));
        if (diffs) {
            Json d = Json::array();
            for (const auto& diff : *diffs)
                d.push_back(Json{{"degree", diff.degree}, {"printed", diff.lhs}, {"corrected", diff.rhs}});
            j["diff_vs_corrected"] = std::move(d);
        } else {
            j["diff_vs_corrected"] = nullptr;
        }
        emit(j);
    } else {
        std::cout << "kind: surface-printed\n";
        std::cout << "field: " << field.name() << "\n";
        std::cout << "e_C: " << opt.e_complex << "\n";
        std::cout << "e_R: " << opt.e_real << "\n";
        std::cout << "order: " << opt.order << "\n";
        std::cout << "series: " << printed.str() << "\n";
        print_gw_columns(printed);
        if (!diffs) {
            std::cout << "diff vs corrected route: unavailable for this model\n";
        } else if (diffs->empty()) {
            std::cout << "diff vs corrected route: none\n";
        } else {
            std::cout << "diff vs corrected route:\n";
            for (const auto& diff : *diffs)
                std::cout << "t^" << diff.degree << ": " << diff.lhs << " vs " << diff.rhs << "\n";
        }
    }
    return exit_ok;
}

int run_series_yau_zaslow(const Options& opt) {
    const auto yz = yau_zaslow_reference(opt.e_real, opt.order);
    if (opt.json) {
        Json j;
        j["schema"] = 1;
        j["command"] = "series";
        j["kind"] = "yau-zaslow";
        j["e_R"] = opt.e_real;
        j["order"] = opt.order;
        j["rank_series"] = yz.rank.json();
        j["sign_series"] = yz.sign.json();
        emit(j);
    } else {
        std::cout << "kind: yau-zaslow\n";
        std::cout << "e_R: " << opt.e_real << "\n";
        std::cout << "order: " << opt.order << "\n";
        std::cout << "rank_series: " << yz.rank.str() << "\n";
        std::cout << "sign_series: " << yz.sign.str() << "\n";
        std::cout << "deg rank sign\n";
        for (unsigned n = 0; n <= opt.order; ++n)
            std::cout << n << " " << yz.rank.coeff(n).str() << " " << yz.sign.coeff(n).str() << "\n";
    }
    return exit_ok;
}

Json check_report_json(const std::vector<CheckReport>& reports) {
    Json arr = Json::array();
    for (const auto& r : reports) {
        Json j;
        j["check"] = r.check;
        j["pass"] = r.pass;
        j["detail"] = r.pass ? Json(nullptr) : Json(r.detail);
        arr.push_back(std::move(j));
    }
    return arr;
}

void print_check_reports(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports) {
        if (r.pass)
            std::cout << "PASS " << r.check << "\n";
        else
            std::cout << "FAIL " << r.check << ": " << r.detail << "\n";
    }
}

int finish_verify(bool pass) {
    std::cout << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? exit_ok : exit_verify_failed;
}

int run_verify_axioms(const Options& opt) {
    std::vector<AxiomReport> reports;
    std::optional<std::string> field_name;
    if (opt.ring == "z") {
        reports = axiom_suite<IntRing>(int_seed(), sample_int, opt.trials, opt.order, opt.seed);
    } else if (opt.ring == "gw") {
        const FieldModel field = FieldModel::from_flag(opt.field_flag);
        field_name = field.name();
        reports = axiom_suite<GwRing>(gw_seed(field), [field](Rng& rng) { return sample_gw(field, rng); },
                                      opt.trials, opt.order, opt.seed);
    } else {
        throw error("verify axioms: --ring must be z or gw");
    }
    const bool pass = all_pass(reports);
    if (opt.json) {
        Json j;
        j["schema"] = 1;
        j["command"] = "verify";
        j["suite"] = "axioms";
        j["ring"] = opt.ring;
        j["field"] = field_name ? Json(*field_name) : Json(nullptr);
        j["order"] = opt.order;
        j["trials"] = opt.trials;
        j["seed"] = opt.seed;
        j["reports"] = axiom_report_json(reports);
        j["pass"] = pass;
        emit(j);
        return pass ? exit_ok : exit_verify_failed;
    }
    std::cout << "suite: axioms\n";
    std::cout << "ring: " << opt.ring << "\n";
    if (field_name) std::cout << "field: " << *field_name << "\n";
    std::cout << "order: " << opt.order << "\n";
    std::cout << "trials: " << opt.trials << "\n";
    std::cout << "seed: " << opt.seed << "\n";
    for (const auto& r : reports) {
        if (r.failures == 0)
            std::cout << "PASS " << r.axiom << "\n";
        else
            std::cout << "FAIL " << r.axiom << " [failures=" << r.failures
                      << "] first: " << *r.first_counterexample << "\n";
    }
    return finish_verify(pass);
}

int run_verify_identities(const Options& opt) {
    const FieldModel field = FieldModel::from_flag(opt.field_flag);
    const IdentityBounds bounds{};
    std::vector<CheckReport> reports;
    const auto pairs = identity_sample_pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto batch = identity_checks(pairs[i].first, pairs[i].second, field, bounds);
        const std::string context = " [X = " + pairs[i].first->render() +
                                    ", Y = " + pairs[i].second->render() + "]";
        for (auto& r : batch) {
            r.check += context;
            reports.push_back(std::move(r));
        }
    }
    {
        CheckReport strata{"strata rank identity: sum over partitions of conf_rank/aut equals the "
                           "symmetric-power rank [r in -5..10, n <= 6]",
                           true, ""};
        for (std::int64_t r = -5; r <= 10 && strata.pass; ++r)
            for (unsigned n = 0; n <= 6 && strata.pass; ++n)
                if (!sym_delta_rank_check(Int(r), n)) {
                    strata.pass = false;
                    strata.detail = "r = " + std::to_string(r) + ", n = " + std::to_string(n);
                }
        reports.push_back(std::move(strata));
    }
    const bool pass = all_pass(reports);
    if (opt.json) {
        Json j;
        j["schema"] = 1;
        j["command"] = "verify";
        j["suite"] = "identities";
        j["field"] = field.name();
        j["reports"] = check_report_json(reports);
        j["pass"] = pass;
        emit(j);
        return pass ? exit_ok : exit_verify_failed;
    }
    std::cout << "suite: identities\n";
    std::cout << "field: " << field.name() << "\n";
    print_check_reports(reports);
    return finish_verify(pass);
}

int run_verify_conjecture(const Options& opt) {
    const FieldModel field = FieldModel::from_flag(opt.field_flag);
    const auto reports = conjecture_checks(field, opt.order);
    const bool pass = all_pass(reports);
    if (opt.json) {
        Json j;
        j["schema"] = 1;
        j["command"] = "verify";
        j["suite"] = "conjecture";
        j["field"] = field.name();
        j["sym_bound"] = opt.order;
        j["reports"] = check_report_json(reports);
        j["pass"] = pass;
        emit(j);
        return pass ? exit_ok : exit_verify_failed;
    }
    std::cout << "suite: conjecture\n";
    std::cout << "field: " << field.name() << "\n";
    std::cout << "sym bound: " << opt.order << "\n";
    print_check_reports(reports);
    return finish_verify(pass);
}

int run_verify_gottsche(const Options& opt) {
    const FieldModel field = FieldModel::from_flag(opt.field_flag);
    const SurfaceInvariants inv{opt.e_complex, opt.e_real};
    const GwSeries via_sym = gottsche_via_sym(inv, field, opt.order);
    const GwSeries via_power = gottsche_via_power(inv, field, opt.order);
    const bool ordered = field.orderings() > 0;

    std::vector<CheckReport> reports;
    {
        CheckReport r{"the symmetric-power route equals the power-structure route", true, ""};
        if (!(via_sym == via_power)) {
            const auto diffs = diff_series(via_sym, via_power);
            r.pass = false;
            r.detail = "first diff at t^" + std::to_string(diffs.front().degree);
        }
        reports.push_back(std::move(r));
    }
    {
        CheckReport r{"rank matches the classical product", true, ""};
        const auto oracle = gottsche_rank_oracle(opt.e_complex, opt.order);
        for (unsigned n = 0; n <= opt.order && r.pass; ++n)
            if (via_sym.coeff(n).rank() != oracle.coeff(n)) {
                r.pass = false;
                r.detail = "t^" + std::to_string(n) + ": " + via_sym.coeff(n).rank().str() + " vs " +
                           oracle.coeff(n).str();
            }
        reports.push_back(std::move(r));
    }
    if (ordered) {
        CheckReport r{"signature matches the corrected real product", true, ""};
        const auto oracle = gottsche_sign_oracle(opt.e_complex, opt.e_real, opt.order);
        for (unsigned n = 0; n <= opt.order && r.pass; ++n)
            if (via_sym.coeff(n).signature() != oracle.coeff(n)) {
                r.pass = false;
                r.detail = "t^" + std::to_string(n) + ": " + via_sym.coeff(n).signature().str() +
                           " vs " + oracle.coeff(n).str();
            }
        reports.push_back(std::move(r));
    }
    const bool pass = all_pass(reports);
    if (opt.json) {
        Json j;
        j["schema"] = 1;
        j["command"] = "verify";
        j["suite"] = "gottsche";
        j["field"] = field.name();
        j["e_C"] = opt.e_complex;
        j["e_R"] = opt.e_real;
        j["order"] = opt.order;
        j["routes_agree"] = reports.front().pass;
        j["reports"] = check_report_json(reports);
        j["pass"] = pass;
        emit(j);
        return pass ? exit_ok : exit_verify_failed;
    }
    std::cout << "suite: gottsche\n";
    std::cout << "field: " << field.name() << "\n";
    std::cout << "e_C: " << opt.e_complex << "\n";
    std::cout << "e_R: " << opt.e_real << "\n";
    std::cout << "order: " << opt.order << "\n";
    print_check_reports(reports);
    return finish_verify(pass);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Grothendieck-Witt Euler-characteristic toolkit"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* chi = app.add_subcommand("chi", "Evaluate chi^c of a variety expression");
    chi->add_option("expr", opt.expr, "Variety expression, e.g. \"proj(2) - L\"")->required();
    add_field_flag(chi, opt);
    add_json_flag(chi, opt);

    CLI::App* series = app.add_subcommand("series", "Emit a generating series");
    series->require_subcommand(1);

    CLI::App* local_hilb = series->add_subcommand("local-hilb", "Punctual Hilbert series of A^2");
    add_field_flag(local_hilb, opt);
    add_order_flag(local_hilb, opt);
    add_json_flag(local_hilb, opt);

    CLI::App* gottsche = series->add_subcommand("gottsche", "Hilbert-scheme series of a surface");
    gottsche->add_option("--ec", opt.e_complex, "Complex-point Euler characteristic")->required();
    gottsche->add_option("--er", opt.e_real, "Real-point Euler characteristic")->required();
    gottsche->add_option("--route", opt.route, "Computation route")
        ->default_val("both")
        ->check(CLI::IsMember({"both", "sym", "power"}));
    add_field_flag(gottsche, opt);
    add_order_flag(gottsche, opt);
    add_json_flag(gottsche, opt);

    CLI::App* surface = series->add_subcommand("surface-printed", "Closed surface formula, verbatim");
    surface->add_option("--ec", opt.e_complex, "Complex-point Euler characteristic")->required();
    surface->add_option("--er", opt.e_real, "Real-point Euler characteristic")->required();
    add_field_flag(surface, opt);
    add_order_flag(surface, opt);
    add_json_flag(surface, opt);

    CLI::App* yz = series->add_subcommand("yau-zaslow", "Classical K3 reference series");
    yz->add_option("--er", opt.e_real, "Real-point Euler characteristic (even)")->required();
    add_order_flag(yz, opt);
    add_json_flag(yz, opt);

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1);

    CLI::App* axioms = verify->add_subcommand("axioms", "Power-structure axioms on random inputs");
    axioms->add_option("--ring", opt.ring, "Coefficient ring: z|gw")
        ->default_val("z")
        ->check(CLI::IsMember({"z", "gw"}));
    axioms->add_option("--trials", opt.trials, "Randomized trials")->default_val(200);
    axioms->add_option("--seed", opt.seed, "RNG seed")->default_val(Rng::default_seed);
    add_field_flag(axioms, opt);
    add_order_flag(axioms, opt);
    add_json_flag(axioms, opt);

    CLI::App* identities = verify->add_subcommand("identities", "Symmetric-power identities");
    add_field_flag(identities, opt);
    add_json_flag(identities, opt);

    CLI::App* conjecture = verify->add_subcommand("conjecture", "Kernel classes stay in the kernel");
    add_field_flag(conjecture, opt);
    add_order_flag(conjecture, opt);
    add_json_flag(conjecture, opt);

    CLI::App* vgottsche = verify->add_subcommand("gottsche", "Route agreement and oracles");
    vgottsche->add_option("--ec", opt.e_complex, "Complex-point Euler characteristic")->required();
    vgottsche->add_option("--er", opt.e_real, "Real-point Euler characteristic")->required();
    add_field_flag(vgottsche, opt);
    add_order_flag(vgottsche, opt);
    add_json_flag(vgottsche, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (chi->parsed()) return run_chi(opt);
        if (local_hilb->parsed()) return run_series_local_hilb(opt);
        if (gottsche->parsed()) return run_series_gottsche(opt);
        if (surface->parsed()) return run_series_surface_printed(opt);
        if (yz->parsed()) return run_series_yau_zaslow(opt);
        if (axioms->parsed()) return run_verify_axioms(opt);
        if (identities->parsed()) return run_verify_identities(opt);
        if (conjecture->parsed()) return run_verify_conjecture(opt);
        if (vgottsche->parsed()) return run_verify_gottsche(opt);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
