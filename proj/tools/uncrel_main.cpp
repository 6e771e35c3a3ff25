// uncrel: numerical checks of uncertainty relations and observable
// correlations for finite-dimensional pure states.
//
// Subcommands: check, region, survey, intelligent.
// Exit status: 0 on success, 1 on input error, 2 when a relation is
// violated (check, survey).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "uncrel/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitViolation = 2;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw uncrel::ParseError("cannot write '" + out_path + "'");
    }
    out << text;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("UNCREL_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

// "re=a:b:step,im=a:b:step" -> rectangular grid of complex z values
std::vector<uncrel::ComplexScalar> parse_z_grid(const std::string& spec) {
    auto parse_axis = [&spec](const std::string& key) {
        const auto pos = spec.find(key + "=");
        if (pos == std::string::npos) {
            throw uncrel::ParseError("z-grid: missing '" + key + "=' in '" + spec + "'");
        }
        double lo = 0.0, hi = 0.0, step = 0.0;
        if (std::sscanf(spec.c_str() + pos + key.size() + 1, "%lf:%lf:%lf", &lo, &hi,
                        &step) != 3 || step <= 0.0 || hi < lo) {
            throw uncrel::ParseError("z-grid: bad axis spec for '" + key + "'");
        }
        std::vector<double> vals;
        for (double v = lo; v <= hi + 0.5 * step; v += step) {
            vals.push_back(v);
        }
        return vals;
    };
    std::vector<uncrel::ComplexScalar> grid;
    for (double re : parse_axis("re")) {
        for (double im : parse_axis("im")) {
            grid.emplace_back(re, im);
        }
    }
    return grid;
}

int run_check(const std::string& input, double tol_rel, const std::string& relations,
              const std::string& format, const std::string& out_path) {
    uncrel::ProblemFile pf = uncrel::parse_problem_file(input);
    if (tol_rel > 0.0) pf.tolerances.rel = tol_rel;
    uncrel::ReportFile rep = uncrel::build_report(pf);

    if (relations != "all") {
        std::vector<uncrel::RelationVerdict> kept;
        std::stringstream ss(relations);
        std::string tok;
        std::vector<std::string> wanted;
        while (std::getline(ss, tok, ',')) {
            if (!uncrel::relation_from_name(tok)) {
                throw uncrel::ParseError("unknown relation '" + tok + "'");
            }
            wanted.push_back(tok);
        }
        for (const auto& v : rep.verdicts) {
            for (const auto& w : wanted) {
                if (uncrel::relation_name(v.relation) == w) kept.push_back(v);
            }
        }
        rep.verdicts = std::move(kept);
    }

    write_output(format == "text" ? uncrel::report_to_text(rep)
                                  : uncrel::report_to_json(rep),
                 out_path);
    for (const auto& v : rep.verdicts) {
        if (!v.skipped && !v.holds) return kExitViolation;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical uncertainty-relation and correlation checks"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "evaluate the relation catalog on a problem file");
    std::string check_input, check_relations = "all", check_format = "json", check_out;
    double check_tol = 0.0;
    check->add_option("input", check_input, "problem JSON file")->required();
    check->add_option("--tol", check_tol, "override the relative tolerance");
    check->add_option("--relations", check_relations, "all or comma-separated relation names");
    check->add_option("--format", check_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    check->add_option("--out", check_out, "output path (default stdout)");

    // region
    auto* region = app.add_subcommand("region", "correlation feasibility grid as CSV");
    double region_r12 = 0.0, region_step = 0.01;
    std::string region_out;
    region->add_option("--r12", region_r12, "fixed r12 in [0, 1]")->required();
    region->add_option("--step", region_step, "lattice step in (0, 0.1]");
    region->add_option("--out", region_out, "output path (default stdout)");

    // survey
    auto* surv = app.add_subcommand("survey", "Monte-Carlo soundness sweep");
    int surv_dim = 2, surv_obs = 3, surv_samples = 1000;
    std::uint64_t surv_seed = default_seed();
    std::string surv_out, surv_kind = "gaussian_hermitian";
    surv->add_option("--dim", surv_dim, "state dimension >= 2");
    surv->add_option("--observables", surv_obs, "number of observables >= 2");
    surv->add_option("--samples", surv_samples, "number of samples");
    surv->add_option("--seed", surv_seed, "rng seed (default UNCREL_SEED or 0)");
    surv->add_option("--kind", surv_kind, "gaussian_hermitian or pauli_fixed")
        ->check(CLI::IsMember({"gaussian_hermitian", "pauli_fixed"}));
    surv->add_option("--out", surv_out, "output path (default stdout)");

    // intelligent
    auto* intel = app.add_subcommand("intelligent", "solve for intelligent states of a pair");
    std::string intel_input, intel_grid, intel_out;
    double z_re = 0.0, z_im = 0.0;
    intel->add_option("input", intel_input, "problem JSON file with exactly 2 observables")
        ->required();
    auto* opt_re = intel->add_option("--z-re", z_re, "real part of z");
    intel->add_option("--z-im", z_im, "imaginary part of z");
    auto* opt_grid = intel->add_option("--z-grid", intel_grid,
                                       "grid spec re=a:b:step,im=a:b:step");
    opt_grid->excludes(opt_re);
    intel->add_option("--out", intel_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            return run_check(check_input, check_tol, check_relations, check_format,
                             check_out);
        }
        if (region->parsed()) {
            const uncrel::RegionSample sample =
                uncrel::feasibility_region(region_r12, region_step);
            write_output(uncrel::region_to_csv(sample), region_out);
            return kExitOk;
        }
        if (surv->parsed()) {
            uncrel::EnsembleSpec spec;
            spec.dim = surv_dim;
            spec.n_observables = surv_obs;
            spec.n_samples = surv_samples;
            spec.seed = surv_seed;
            spec.observable_kind = surv_kind == "pauli_fixed"
                                       ? uncrel::ObservableKind::pauli_fixed
                                       : uncrel::ObservableKind::gaussian_hermitian;
            const uncrel::SurveyStatistics stats = uncrel::survey(spec);
            write_output(uncrel::survey_to_json(stats), surv_out);
            return stats.violations.empty() ? kExitOk : kExitViolation;
        }
        if (intel->parsed()) {
            uncrel::ProblemFile pf = uncrel::parse_problem_file(intel_input);
            if (pf.observables.size() != 2) {
                throw uncrel::ParseError("observables: intelligent requires exactly 2, got " +
                                         std::to_string(pf.observables.size()));
            }
            std::vector<uncrel::ComplexScalar> grid;
            if (!intel_grid.empty()) {
                grid = parse_z_grid(intel_grid);
            } else {
                grid.emplace_back(z_re, z_im);
            }
            const auto results = uncrel::scan_z(pf.observables[0], pf.observables[1],
                                                grid, pf.tolerances);
            write_output(uncrel::intelligent_to_json(results), intel_out);
            return kExitOk;
        }
    } catch (const uncrel::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const uncrel::OutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const uncrel::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
