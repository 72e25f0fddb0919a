#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stagxx/cli.hpp"
#include "stagxx/errors.hpp"
#include "stagxx/ground.hpp"

namespace {

using namespace stagxx;

struct ModelFlags {
    double J = 1.0;
    double j = 0.0;
    double B = 0.0;
    double b = 0.0;
    double T = 0.0;

    void attach(CLI::App* app) {
        app->add_option("--J", J, "uniform coupling J >= 0")->capture_default_str();
        app->add_option("--j", j, "staggered coupling")->capture_default_str();
        app->add_option("--B", B, "uniform field")->capture_default_str();
        app->add_option("--b", b, "staggered field")->capture_default_str();
        app->add_option("--T", T, "temperature, 0 for the ground state")->capture_default_str();
    }

    ChainParams params() const { return ChainParams(J, j, B, b); }
};

struct QuadFlags {
    QuadSpec quad;

    void attach(CLI::App* app) {
        app->add_option("--abs-tol", quad.abs_tol, "quadrature absolute tolerance")->capture_default_str();
        app->add_option("--rel-tol", quad.rel_tol, "quadrature relative tolerance")->capture_default_str();
        app->add_option("--max-subdivisions", quad.max_subdivisions, "quadrature bisection budget")
            ->capture_default_str();
    }
};

std::optional<ground::ScanAxis> scan_axis(const std::string& s) {
    if (s == "B") return ground::ScanAxis::B;
    if (s == "b") return ground::ScanAxis::b;
    if (s == "j") return ground::ScanAxis::j;
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Staggered XX chain: thermodynamics, correlations and entanglement"};
    app.require_subcommand(1);

    ModelFlags point_model;
    QuadFlags point_quad;
    std::string point_q;
    auto* point = app.add_subcommand("point", "evaluate quantities at one parameter point");
    point_model.attach(point);
    point_quad.attach(point);
    point->add_option("--q", point_q, "comma-separated quantities")->required();

    ModelFlags sweep_model;
    QuadFlags sweep_quad;
    std::string sweep_config, sweep_x, sweep_y, sweep_q, sweep_out;
    int sweep_workers = 0;
    auto* sweep = app.add_subcommand("sweep", "evaluate quantities on an x-y grid, CSV to stdout or --out");
    auto* config_opt = sweep->add_option("--config", sweep_config, "config file")->check(CLI::ExistingFile);
    sweep_model.attach(sweep);
    sweep_quad.attach(sweep);
    auto* x_opt = sweep->add_option("--x", sweep_x, "x axis as name,start,stop,steps");
    auto* y_opt = sweep->add_option("--y", sweep_y, "y axis as name,start,stop,steps");
    auto* q_opt = sweep->add_option("--q", sweep_q, "comma-separated quantities");
    config_opt->excludes(x_opt)->excludes(y_opt)->excludes(q_opt);
    sweep->add_option("--out", sweep_out, "output file");
    sweep->add_option("--workers", sweep_workers, "worker threads, 0 for all cores")->capture_default_str();

    ModelFlags scan_model;
    QuadFlags scan_quad;
    std::string scan_axis_name = "b";
    double scan_from = 0.0, scan_to = 2.0, scan_step = 5e-3;
    auto* scan = app.add_subcommand("qcp-scan", "second derivative of the ground energy along one axis");
    scan_model.attach(scan);
    scan_quad.attach(scan);
    scan->add_option("--axis", scan_axis_name, "B, b or j")->capture_default_str();
    scan->add_option("--from", scan_from)->capture_default_str();
    scan->add_option("--to", scan_to)->capture_default_str();
    scan->add_option("--step", scan_step)->capture_default_str();

    ModelFlags cmp_model;
    QuadFlags cmp_quad;
    std::vector<int> ed_sizes{8, 10, 12}, ff_sizes{256, 1024, 4096};
    bool cmp_examples = false;
    auto* cmp = app.add_subcommand("oracle-compare", "finite-size oracles against the integrals");
    cmp_model.attach(cmp);
    cmp_quad.attach(cmp);
    cmp->add_option("--ed-sizes", ed_sizes, "dense diagonalization ring sizes")->delimiter(',')->capture_default_str();
    cmp->add_option("--ff-sizes", ff_sizes, "momentum-sum ring sizes")->delimiter(',')->capture_default_str();
    cmp->add_flag("--examples", cmp_examples, "run the fixed oracle checkpoints instead");

    std::string validate_path;
    auto* validate = app.add_subcommand("validate-config", "parse and check a sweep config");
    validate->add_option("path", validate_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitValidation;
    }

    try {
        if (*point) {
            const auto qs = cli::parse_quantities(point_q);
            const auto p = point_model.params();
            const auto rec = cli::run_point(p, point_model.T, qs, point_quad.quad);
            std::cout << cli::point_header(qs) << '\n' << cli::point_row(p, point_model.T, rec) << '\n';
            for (const auto& e : rec.errors) std::cerr << "error: " << e << '\n';
            return rec.exit_code;
        }
        if (*sweep) {
            cli::SweepSpec spec;
            if (!sweep_config.empty()) {
                spec = cli::load_config(sweep_config);
            } else {
                spec.params = sweep_model.params();
                spec.temperature = sweep_model.T;
                spec.quad = sweep_quad.quad;
                if (!sweep_x.empty()) spec.x = cli::parse_axis(sweep_x);
                if (!sweep_y.empty()) spec.y = cli::parse_axis(sweep_y);
                if (!sweep_q.empty()) spec.quantities = cli::parse_quantities(sweep_q);
            }
            if (sweep->count("--workers")) spec.workers = sweep_workers;
            if (sweep_out.empty()) return cli::run_sweep(spec, std::cout);
            std::ofstream out(sweep_out, std::ios::binary);
            if (!out) throw cli::ValidationError("cannot write " + sweep_out);
            return cli::run_sweep(spec, out);
        }
        if (*scan) {
            const auto axis = scan_axis(scan_axis_name);
            if (!axis) throw cli::ValidationError("--axis must be B, b or j");
            const auto result =
                ground::qcp_scan(scan_model.params(), *axis, scan_from, scan_to, scan_step, scan_quad.quad);
            std::cout << "x,d2e,flagged,peak\n";
            for (const auto& pt : result.points) {
                bool peak = false;
                for (double x : result.peaks) peak = peak || x == pt.value;
                std::cout << cli::format_number(pt.value) << ',' << cli::format_number(pt.d2e) << ','
                          << (pt.flagged ? 1 : 0) << ',' << (peak ? 1 : 0) << '\n';
            }
            return cli::kExitOk;
        }
        if (*cmp) {
            const auto report =
                cmp_examples ? cli::oracle_examples()
                             : cli::oracle_compare(cmp_model.params(), Thermal::from_temperature(cmp_model.T),
                                                   ed_sizes, ff_sizes, cmp_quad.quad);
            cli::write_report(report, std::cout);
            for (const auto& f : report.failures) std::cerr << "FAIL " << f << '\n';
            return report.passed() ? cli::kExitOk : cli::kExitNumerical;
        }
        if (*validate) {
            const auto spec = cli::load_config(validate_path);
            std::cout << "ok: " << spec.x.steps << "x" << spec.y.steps << " grid over " << cli::name(spec.x.param)
                      << "," << cli::name(spec.y.param) << ", " << spec.quantities.size() << " quantities\n";
            return cli::kExitOk;
        }
    } catch (const ToleranceNotReached& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitNumerical;
    } catch (const NegativeRadicand& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitValidation;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitValidation;
    }
    return cli::kExitOk;
}
