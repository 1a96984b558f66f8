// Command-line front end: sncd, abelian, igusa, verify-all.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mzeta/report.hpp"

namespace {

long env_budget() {
    if (const char* env = std::getenv("MZETA_BUDGET")) {
        try {
            return std::stol(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring unparsable MZETA_BUDGET='" << env << "'\n";
        }
    }
    return 0;
}

int emit(const nlohmann::json& report, bool as_json) {
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << mzeta::render_human(report);
    return mzeta::report_passed(report) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"motivic zeta functions of degenerations: exact computation and checks"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON report on stdout");

    // sncd
    auto* sncd = app.add_subcommand("sncd", "analyze a normal-crossings fiber model file");
    std::string sncd_file;
    mzeta::SncdOptions sopt;
    sncd->add_option("file", sncd_file, "model JSON file")->required();
    sncd->add_flag("--lct", sopt.lct, "log canonical threshold min mu_i/N_i");
    sncd->add_flag("--delta", sopt.delta, "degeneracy index");
    sncd->add_flag("--poles", sopt.poles, "poles of the normalized zeta function");
    sncd->add_flag("--monodromy-zeta", sopt.monodromy_zeta, "A'Campo monodromy zeta function");
    sncd->add_option("--series", sopt.series, "expand Z(T) to this T-degree");
    sncd->add_option("--gmp-with", sopt.gmp_with,
                     "characteristic polynomials in t (H^0, H^1, ...) for the monodromy check");

    // abelian
    auto* abelian = app.add_subcommand("abelian", "zeta function from Neron-model data");
    std::optional<std::string> ab_type;
    std::optional<std::string> ab_file;
    long ab_n = 0;
    mzeta::AbelianOptions aopt;
    std::string data_dir = mzeta::default_data_dir();
    abelian->add_option("--type", ab_type, "bundled reduction type tag (see --help-tags)");
    abelian->add_option("--n", ab_n, "parameter for the In / Instar families");
    abelian->add_option("--neron", ab_file, "user Neron data JSON file");
    abelian->add_flag("--verify", aopt.verify, "check the unique-pole prediction");
    abelian->add_flag("--gmp", aopt.gmp, "check cyclotomic divisibility for every pole");
    abelian->add_option("--series", aopt.series, "expand Z(T) to this T-degree");
    abelian->add_option("--euler-check", aopt.euler_check,
                        "compare Euler characteristics of coefficients with phi(d) up to d");
    abelian->add_option("--gmp-with", aopt.gmp_with, "characteristic polynomials for --gmp");

    // igusa
    auto* igusa = app.add_subcommand("igusa", "p-adic solution counting and Poincare series");
    mzeta::IgusaOptions iopt;
    igusa->add_option("--poly", iopt.poly, "polynomial in x,y,z,w, e.g. \"x^2 + y^3 - 7\"")
        ->required();
    igusa->add_option("-p", iopt.p, "prime")->required();
    igusa->add_option("-M,-m", iopt.M, "highest level: count solutions mod p^(m+1)")->required();
    igusa->add_flag("--fit", iopt.fit, "fit a rational function to the counts");
    igusa->add_flag("--check-poinzeta", iopt.check_poinzeta,
                    "verify the Poincare/zeta relation (monomial x^k only)");

    // verify-all
    auto* verify = app.add_subcommand("verify-all", "run the bundled verification suite");
    std::string verify_data = mzeta::default_data_dir();
    verify->add_option("--data", verify_data, "data directory (default: bundled)");
    abelian->add_option("--data", data_dir, "data directory (default: bundled)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(sncd)) return emit(mzeta::cmd_sncd(sncd_file, sopt), as_json);
        if (app.got_subcommand(abelian))
            return emit(mzeta::cmd_abelian(ab_type, ab_n, ab_file, data_dir, aopt), as_json);
        if (app.got_subcommand(igusa)) {
            iopt.budget = env_budget();
            return emit(mzeta::cmd_igusa(iopt), as_json);
        }
        if (app.got_subcommand(verify))
            return emit(mzeta::cmd_verify_all(verify_data), as_json);
    } catch (const mzeta::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
