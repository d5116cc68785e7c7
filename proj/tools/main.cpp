#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "hypercone/commands.hpp"
#include "hypercone/records.hpp"

namespace {

int emit(const hypercone::OutputRecord& rec, const std::string& format) {
    std::cout << hypercone::render_record(rec, format);
    return rec.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numerical verification of weighted minimizing hypercones"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "csv";
    app.add_option("--format", format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    std::string m_spec = "2..13";
    std::string alpha_spec;
    std::string lambda_spec = "1";
    hypercone::AlphaTableArgs at_args;
    hypercone::VerifyArgs vf_args;
    hypercone::FoliateArgs fo_args;
    hypercone::SubcalibArgs sc_args;

    auto* at = app.add_subcommand("alpha-table",
                                  "Critical exponents with certified rational enclosures");
    at->add_option("--m", m_spec, "Dimensions, e.g. 2..13 or 2,7,2017")->capture_default_str();
    at->add_option("--digits", at_args.digits, "Decimal places")->capture_default_str();

    auto* vf = app.add_subcommand("verify", "Exact verification sweeps");
    vf->add_option("--which", vf_args.which,
                   "q | quartic | sturm | identity | bracket | lawson | stability")
        ->required()
        ->check(CLI::IsMember({"q", "quartic", "sturm", "identity", "bracket", "lawson",
                               "stability"}));
    vf->add_option("--m", m_spec, "Dimensions to sweep")->capture_default_str();
    vf->add_option("--sum-max", vf_args.sum_max, "lawson: largest k+h")->capture_default_str();
    vf->add_option("--seed", vf_args.seed, "identity: RNG seed")->capture_default_str();
    vf->add_option("--samples", vf_args.samples, "identity: sample count")
        ->capture_default_str();

    auto* fo = app.add_subcommand("foliate", "Integrate the barrier-bounded branch solutions");
    fo->add_option("--m", fo_args.m, "Dimension")->required();
    fo->add_option("--alpha", alpha_spec, "Weight exponent (exact: 4, 9/2, or 4.5)")->required();
    fo->add_option("--digits", fo_args.digits, "Echo precision")->capture_default_str();
    fo->add_option("--eps", fo_args.eps, "Offset from the singular angles")
        ->capture_default_str();
    fo->add_option("--tol", fo_args.tol, "Residual tolerance")->capture_default_str();
    fo->add_option("--lambdas", lambda_spec, "Level-curve scales, e.g. 0.5,1,2")
        ->capture_default_str();
    fo->add_option("--out", fo_args.out_path, "Curve sample file")->capture_default_str();
    fo->add_flag("--force", fo_args.force, "Explore below the certified exponent");

    auto* sc = app.add_subcommand("subcalib", "Divergence sign report for the explicit field");
    sc->add_option("--m", sc_args.m, "Dimension")->required();
    sc->add_option("--alpha", alpha_spec, "Weight exponent (exact)")->required();
    sc->add_option("--rmin", sc_args.grid.r_min, "Radial range minimum")->capture_default_str();
    sc->add_option("--rmax", sc_args.grid.r_max, "Radial range maximum")->capture_default_str();
    sc->add_option("--ymin", sc_args.grid.y_min, "Height range minimum")->capture_default_str();
    sc->add_option("--ymax", sc_args.grid.y_max, "Height range maximum")->capture_default_str();
    sc->add_option("--nr", sc_args.grid.nr, "Radial cell count")->capture_default_str();
    sc->add_option("--ny", sc_args.grid.ny, "Height cell count")->capture_default_str();
    sc->add_option("--band", sc_args.grid.cone_band, "Excluded angular half-width")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*at) {
            at_args.m_list = hypercone::parse_int_range(m_spec);
            return emit(hypercone::cmd_alpha_table(at_args), format);
        }
        if (*vf) {
            vf_args.m_list = hypercone::parse_int_range(m_spec);
            return emit(hypercone::cmd_verify(vf_args), format);
        }
        if (*fo) {
            fo_args.alpha = alpha_spec;
            fo_args.lambdas = hypercone::parse_double_list(lambda_spec);
            return emit(hypercone::cmd_foliate(fo_args), format);
        }
        if (*sc) {
            sc_args.alpha = alpha_spec;
            return emit(hypercone::cmd_subcalib(sc_args), format);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
