#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thetaloc/census.hpp"
#include "thetaloc/characteristic.hpp"
#include "thetaloc/errors.hpp"
#include "thetaloc/incidence.hpp"
#include "thetaloc/json_io.hpp"
#include "thetaloc/siegel.hpp"
#include "thetaloc/theta.hpp"
#include "thetaloc/verify.hpp"

namespace {

using namespace thetaloc;

// All floating output in scientific notation with 17 significant digits so
// runs diff reproducibly.
void print_kv(const std::string& key, double value) {
    std::printf("%s = %.16e\n", key.c_str(), value);
}

void print_kv(const std::string& key, const std::complex<double>& value) {
    print_kv(key + "_re", value.real());
    print_kv(key + "_im", value.imag());
}

struct ThetaArgs {
    std::string delta;
    std::string omega_path;
    std::string z_path;
    double tol = 1e-10;
    double fd_step = 1e-5;
    int j = 0, k = 0;
};

ThetaOptions theta_options(const ThetaArgs& args) {
    ThetaOptions opts;
    opts.tol = args.tol;
    opts.fd_step = args.fd_step;
    return opts;
}

int run_theta_eval(const ThetaArgs& args) {
    const Characteristic delta = Characteristic::from_string(args.delta);
    const PeriodMatrix omega =
        period_matrix_from_json(load_json_file(args.omega_path));
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(omega.genus());
    if (!args.z_path.empty())
        z = vector_from_json(load_json_file(args.z_path));
    const ThetaValue v = eval_theta(delta, omega, z, theta_options(args));
    print_kv("value", v.value);
    print_kv("tail_bound", v.tail_bound);
    print_kv("radius", v.radius);
    print_kv("normalized_magnitude", v.normalized_magnitude());
    std::printf("n_points = %zu\n", v.n_points);
    return 0;
}

int run_theta_jet(const ThetaArgs& args) {
    const Characteristic delta = Characteristic::from_string(args.delta);
    const PeriodMatrix omega =
        period_matrix_from_json(load_json_file(args.omega_path));
    const JetAtZero jet = jet_at_zero(delta, omega, theta_options(args));
    const int g = omega.genus();
    print_kv("value", jet.value);
    print_kv("value_tail", jet.value_tail);
    for (int j = 0; j < g; ++j)
        print_kv("gradient_" + std::to_string(j), jet.gradient[j]);
    print_kv("gradient_tail", jet.gradient_tail);
    for (int j = 0; j < g; ++j)
        for (int k = 0; k < g; ++k)
            print_kv("hessian_" + std::to_string(j) + std::to_string(k),
                     jet.hessian(j, k));
    print_kv("hessian_tail", jet.hessian_tail);
    print_kv("radius", jet.radius);
    std::printf("n_points = %zu\n", jet.n_points);
    return 0;
}

int run_theta_heat(const ThetaArgs& args) {
    const Characteristic delta = Characteristic::from_string(args.delta);
    const PeriodMatrix omega =
        period_matrix_from_json(load_json_file(args.omega_path));
    const double resid =
        heat_residual(delta, omega, args.j, args.k, theta_options(args));
    const JetAtZero jet = jet_at_zero(delta, omega, theta_options(args));
    print_kv("residual", resid);
    print_kv("relative_residual",
             resid / std::max(jet.hessian_peak(args.j, args.k), 1e-300));
    print_kv("fd_step", args.fd_step);
    return 0;
}

int run_theta_order(const ThetaArgs& args) {
    const Characteristic delta = Characteristic::from_string(args.delta);
    const PeriodMatrix omega =
        period_matrix_from_json(load_json_file(args.omega_path));
    const VanishingOrderResult res =
        vanishing_order_at_zero(delta, omega, theta_options(args));
    const char* label = nullptr;
    switch (res.order) {
        case VanishingOrder::Order0: label = "0"; break;
        case VanishingOrder::Order1: label = "1"; break;
        case VanishingOrder::Order2: label = "2"; break;
        case VanishingOrder::HigherOrIndeterminate:
            label = "higher_or_indeterminate";
            break;
    }
    std::printf("order = %s\n", label);
    print_kv("value_magnitude", res.value_magnitude);
    print_kv("gradient_magnitude", res.gradient_magnitude);
    print_kv("hessian_magnitude", res.hessian_magnitude);
    std::printf("indeterminate = %s\n", res.indeterminate ? "true" : "false");
    return res.indeterminate ? 3 : 0;
}

int run_incidence_report(const std::string& kind_name, std::uint64_t seed,
                         double tol) {
    ThetaOptions opts;
    opts.tol = tol;
    const StratumKind kind = stratum_kind_from_string(kind_name);
    const StratumPoint point = sample_stratum_point(kind, seed, opts);
    const IncidenceReport report =
        vanishing_set_numeric(point, opts, /*strict=*/false);
    std::cout << to_json(report).dump(2) << '\n';
    return report.indeterminate.empty() ? 0 : 3;
}

int run_incidence_census() {
    const LocalIntersectionCensus census = local_intersection_census();
    Json j;
    j["components_of_red_at_point"] = census.components_of_red_at_point;
    j["hyp_per_red_point"] = census.hyp_per_red_point;
    j["incidences_with_multiplicity"] = census.incidences_with_multiplicity;
    j["distinct_hyp"] = census.distinct_hyp;
    j["containments_per_delta"] = census.containments_per_delta;
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_census_nerve(const std::string& config_path) {
    const NerveInput input = nerve_input_from_json(load_json_file(config_path));
    const NerveTable table = nerve_e1(input);
    const DegreeSupport support = supported_degrees(table);
    Json j;
    j["ambient_dim"] = table.ambient_dim;
    Json nz = Json::array();
    for (const auto& [s, t] : table.nonzero) nz.push_back({s, t});
    j["nonzero"] = std::move(nz);
    j["supported_degrees"] = support.degrees;
    j["degeneration_automatic"] = support.degeneration_automatic;
    j["obstructions"] = support.obstructions;
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_census_gysin(int ambient, std::vector<int> support, int vanish_from) {
    const std::set<int> supp(support.begin(), support.end());
    const auto constraints = gysin_support(ambient, supp, vanish_from);
    Json j;
    j["ambient_dim"] = ambient;
    j["boundary_support"] = supp;
    j["complement_vanishing_from"] = vanish_from;
    Json cs = Json::array();
    for (std::size_t k = 0; k < constraints.size(); ++k)
        cs.push_back(to_string(constraints[k]));
    j["constraints"] = std::move(cs);
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_verify_cmd(const VerifyConfig& cfg, const std::string& json_path) {
    const VerifyReport report = run_verify(cfg);
    for (const CheckResult& c : report.checks)
        std::printf("[%s] %s (%.1f ms)\n", to_string(c.status).c_str(),
                    c.name.c_str(), c.wall_ms);
    std::printf("overall: %s\n", report.overall_pass ? "pass"
                                 : report.any_indeterminate ? "indeterminate"
                                                            : "fail");
    if (!json_path.empty()) save_json_file(json_path, to_json(report));
    if (report.overall_pass) return 0;
    bool any_fail = false;
    for (const CheckResult& c : report.checks)
        if (c.status == CheckStatus::Fail) any_fail = true;
    return any_fail ? 1 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riemann theta functions with half-integer characteristics "
                 "and the incidence structure of the genus-3 reducible locus"};
    app.require_subcommand(1);
    std::function<int()> action;

    ThetaArgs targs;
    CLI::App* theta = app.add_subcommand("theta", "theta function evaluation");
    theta->require_subcommand(1);
    {
        CLI::App* c = theta->add_subcommand(
            "eval", "evaluate theta(delta, Omega, z) with a certified bound");
        c->add_option("--delta", targs.delta, "characteristic, e.g. [110|100]")
            ->required();
        c->add_option("--omega", targs.omega_path, "period matrix JSON file")
            ->required();
        c->add_option("--z", targs.z_path, "argument vector JSON file (default 0)");
        c->add_option("--tol", targs.tol, "requested certified tolerance");
        c->callback([&] { action = [&] { return run_theta_eval(targs); }; });
    }
    {
        CLI::App* c = theta->add_subcommand(
            "jet", "value, gradient and Hessian at z = 0 with bounds");
        c->add_option("--delta", targs.delta)->required();
        c->add_option("--omega", targs.omega_path)->required();
        c->add_option("--tol", targs.tol);
        c->callback([&] { action = [&] { return run_theta_jet(targs); }; });
    }
    {
        CLI::App* c = theta->add_subcommand(
            "heat", "heat-equation residual for the (j,k) entry");
        c->add_option("--delta", targs.delta)->required();
        c->add_option("--omega", targs.omega_path)->required();
        c->add_option("--j", targs.j, "row index (0-based)")->required();
        c->add_option("--k", targs.k, "column index (0-based)")->required();
        c->add_option("--tol", targs.tol);
        c->add_option("--fd-step", targs.fd_step, "finite-difference step");
        c->callback([&] { action = [&] { return run_theta_heat(targs); }; });
    }
    {
        CLI::App* c = theta->add_subcommand(
            "order", "vanishing order at z = 0 (0, 1, 2, or higher)");
        c->add_option("--delta", targs.delta)->required();
        c->add_option("--omega", targs.omega_path)->required();
        c->add_option("--tol", targs.tol);
        c->callback([&] { action = [&] { return run_theta_order(targs); }; });
    }

    std::string kind = "red";
    std::uint64_t seed = 0;
    double inc_tol = 1e-10;
    CLI::App* incidence =
        app.add_subcommand("incidence", "vanishing patterns on reducible strata");
    incidence->require_subcommand(1);
    {
        CLI::App* c = incidence->add_subcommand(
            "report", "classify all even thetanulls at a sampled stratum point");
        c->add_option("--kind", kind, "generic, red or red_sing")->required();
        c->add_option("--seed", seed, "sampling seed")->required();
        c->add_option("--tol", inc_tol);
        c->callback([&] {
            action = [&] { return run_incidence_report(kind, seed, inc_tol); };
        });
    }
    incidence->add_subcommand("census", "local intersection counts at a [1,1,1] point")
        ->callback([&] { action = [] { return run_incidence_census(); }; });

    int genus = 3;
    std::string nerve_config;
    int gysin_ambient = 10;
    std::vector<int> gysin_support_arg = {7, 8};
    int gysin_vanish = 3;
    CLI::App* census = app.add_subcommand("census", "exact counting formulas");
    census->require_subcommand(1);
    {
        CLI::App* c = census->add_subcommand(
            "components", "number of components of the reducible locus model");
        c->add_option("--genus", genus)->required();
        c->callback([&] {
            action = [&] {
                std::cout << component_count(genus) << '\n';
                return 0;
            };
        });
    }
    {
        CLI::App* c = census->add_subcommand(
            "betti", "first Betti number of the pointed rational moduli model");
        c->add_option("--genus", genus)->required();
        c->callback([&] {
            action = [&] {
                std::cout << moduli_betti(genus) << '\n';
                return 0;
            };
        });
    }
    {
        CLI::App* c = census->add_subcommand(
            "nerve", "first-page support and degeneration of a nerve table");
        c->add_option("--config", nerve_config, "NerveInput JSON file")
            ->required();
        c->callback([&] {
            action = [&] { return run_census_nerve(nerve_config); };
        });
    }
    {
        CLI::App* c = census->add_subcommand(
            "gysin", "homology constraints from the boundary sequence");
        c->add_option("--ambient", gysin_ambient, "ambient dimension");
        c->add_option("--support", gysin_support_arg,
                      "boundary cohomology support degrees");
        c->add_option("--vanish-from", gysin_vanish,
                      "complement homology vanishes from this degree");
        c->callback([&] {
            action = [&] {
                return run_census_gysin(gysin_ambient, gysin_support_arg,
                                        gysin_vanish);
            };
        });
    }

    VerifyConfig vcfg;
    std::string verify_json;
    {
        CLI::App* c = app.add_subcommand(
            "verify", "run the full reproduction suite and report per check");
        c->add_option("--json", verify_json, "write the JSON report here");
        c->add_option("--seed", vcfg.seed, "master seed");
        c->add_option("--tol", vcfg.tol, "certified evaluation tolerance");
        c->add_option("--fd-step", vcfg.fd_step, "heat-equation FD step");
        c->add_option("--only", vcfg.only, "run only the named checks");
        c->callback([&] {
            action = [&] { return run_verify_cmd(vcfg, verify_json); };
        });
    }

    std::string roundtrip_path;
    CLI::App* io = app.add_subcommand("io", "JSON schema utilities");
    io->require_subcommand(1);
    {
        CLI::App* c = io->add_subcommand(
            "roundtrip", "parse, serialize and reparse a JSON artifact");
        c->add_option("path", roundtrip_path, "JSON file")->required();
        c->callback([&] {
            action = [&] {
                const bool ok = io_roundtrip(roundtrip_path);
                std::printf("roundtrip %s\n", ok ? "ok" : "mismatch");
                return ok ? 0 : 1;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const thetaloc::indeterminate_error& e) {
        std::cerr << "indeterminate: " << e.what();
        for (const std::string& s : e.offenders) std::cerr << ' ' << s;
        std::cerr << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
