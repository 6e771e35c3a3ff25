// Acceptance gate: one pass/fail line per criterion, exit code equals the
// number of failed criteria. Criteria 1 and 5 exercise the installed CLI
// binary (path via --cli); everything else drives the library directly
// against brute-force oracles.
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "naive.hpp"
#include "test_support.hpp"
#include "uncrel/correlations.hpp"
#include "uncrel/diagnostics.hpp"
#include "uncrel/ensembles.hpp"
#include "uncrel/intelligent.hpp"
#include "uncrel/io.hpp"

using namespace uncrel;

namespace {

std::string g_cli_path;
std::vector<std::string> g_notes;

void note(const std::string& msg) { g_notes.push_back(msg); }

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cmd(const std::string& cmd) {
    CmdResult res;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    while (std::fgets(buf, sizeof(buf), pipe)) res.out += buf;
    const int status = pclose(pipe);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    return res;
}

struct CsvRow {
    double r12, r13, r23, det;
    int feasible;
};

std::vector<CsvRow> parse_region_csv(const std::string& text) {
    std::vector<CsvRow> rows;
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "r12,r13,r23,det,feasible") return rows;
    while (std::getline(is, line)) {
        CsvRow row{};
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%d", &row.r12, &row.r13,
                        &row.r23, &row.det, &row.feasible) == 5) {
            rows.push_back(row);
        }
    }
    return rows;
}

// ---------------------------------------------------------------- criterion 1

bool criterion_soundness_survey() {
    if (g_cli_path.empty()) {
        note("criterion 1: --cli not given");
        return false;
    }
    for (int dim : {2, 3, 4, 8}) {
        std::ostringstream cmd;
        cmd << g_cli_path << " survey --dim " << dim
            << " --observables 3 --samples 10000 --seed " << (20240000 + dim);
        const CmdResult res = run_cmd(cmd.str());
        if (res.exit_code != 0) {
            note("criterion 1: survey dim " + std::to_string(dim) + " exit " +
                 std::to_string(res.exit_code));
            return false;
        }
        if (res.out.find("\"violations\": []") == std::string::npos) {
            note("criterion 1: survey dim " + std::to_string(dim) +
                 " reported violations");
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- criterion 2

bool criterion_pauli_fixtures() {
    const StateVector up = support::state({1.0, 0.0});
    const Observable sx = support::sx(), sy = support::sy();

    const double dx = moment_report(sx, up).stddev;
    const double dy = moment_report(sy, up).stddev;
    const CovarianceRecord c = covariance(sx, sy, up);
    bool ok = std::abs(dx * dy - 1.0) <= 1e-12;
    ok = ok && std::abs(std::abs(c.value) - 1.0) <= 1e-12;
    ok = ok && std::abs(0.5 * std::abs(c.commutator_expectation) - 1.0) <= 1e-12;

    const RelationVerdict rs = evaluate(RelationId::RS_PAIR, {sx, sy}, up);
    const RelationVerdict hr = evaluate(RelationId::HR_PAIR, {sx, sy}, up);
    ok = ok && std::abs(rs.slack) <= 1e-12 && std::abs(hr.slack) <= 1e-12;
    if (!ok) note("criterion 2: Pauli equality fixture drifted");
    return ok;
}

// ---------------------------------------------------------------- criterion 3

bool criterion_qubit_saturation() {
    Rng rng(2024);
    int checked = 0;
    for (int s = 0; s < 10000; ++s) {
        const Observable a = random_hermitian(2, rng);
        const Observable b = random_hermitian(2, rng);
        const StateVector phi = random_state(2, rng);
        const double da = moment_report(a, phi).stddev;
        const double db = moment_report(b, phi).stddev;
        if (deviation_is_zero(da, a) || deviation_is_zero(db, b)) continue;
        const CovarianceRecord c = covariance(a, b, phi);
        if (std::abs(c.value) <= 0.0) {
            note("criterion 3: zero covariance with positive deviations");
            return false;
        }
        const double r = pearson(a, b, phi).r;
        if (std::abs(r - 1.0) > 1e-8) {
            note("criterion 3: r = " + std::to_string(r) + " at sample " +
                 std::to_string(s));
            return false;
        }
        ++checked;
    }
    if (checked < 9000) {
        note("criterion 3: too many degenerate draws");
        return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 4

bool criterion_determinant_identities() {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 10000; ++t) {
        const double r12 = u(rng), r13 = u(rng), r23 = u(rng);
        Eigen::MatrixXd m2(2, 2);
        m2 << 1.0, r12, r12, 1.0;
        if (std::abs(synthetic_correlation_matrix(m2).determinant -
                     (1.0 - r12 * r12)) > 1e-10) {
            note("criterion 4: R2 closed form mismatch");
            return false;
        }
        Eigen::MatrixXd m3(3, 3);
        m3 << 1.0, r12, r13, r12, 1.0, r23, r13, r23, 1.0;
        if (std::abs(synthetic_correlation_matrix(m3).determinant -
                     r3_closed_form(r12, r13, r23)) > 1e-10) {
            note("criterion 4: R3 closed form mismatch");
            return false;
        }
    }
    // genuine instances stay inside [0, 1] up to round-off
    Rng grng(405);
    for (int t = 0; t < 10000; ++t) {
        std::vector<Observable> set;
        const int k = 2 + (t % 2);
        for (int i = 0; i < k; ++i) set.push_back(random_hermitian(3, grng));
        const StateVector phi = random_state(3, grng);
        const double det = build_correlation_matrix(set, phi).determinant;
        if (det < -1e-9 || det > 1.0 + 1e-9) {
            note("criterion 4: genuine determinant out of range: " +
                 std::to_string(det));
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- criterion 5

bool criterion_region_reproduction() {
    if (g_cli_path.empty()) {
        note("criterion 5: --cli not given");
        return false;
    }
    const double step = 0.005;
    const std::size_t expected_rows = 201ull * 201ull;
    const std::vector<double> r12s = {0.0, 0.01, 0.1,  0.2,   0.5,   0.7,
                                      0.8, 0.9,  0.99, 0.995, 0.998, 1.0};
    double prev_fraction = 2.0;
    for (double r12 : r12s) {
        std::ostringstream cmd;
        cmd << g_cli_path << " region --r12 " << r12 << " --step " << step;
        const CmdResult res = run_cmd(cmd.str());
        if (res.exit_code != 0) {
            note("criterion 5: region exit " + std::to_string(res.exit_code));
            return false;
        }
        const std::vector<CsvRow> rows = parse_region_csv(res.out);
        if (rows.size() != expected_rows) {
            note("criterion 5: row count " + std::to_string(rows.size()));
            return false;
        }
        std::size_t feasible = 0;
        for (const CsvRow& row : rows) {
            feasible += row.feasible ? 1 : 0;
            if (r12 == 0.0) {
                // quarter-disc oracle on the integer lattice
                const long i = std::lround(row.r13 / step);
                const long j = std::lround(row.r23 / step);
                const bool inside = i * i + j * j <= 200l * 200l;
                if (inside != (row.feasible == 1)) {
                    note("criterion 5: quarter-disc mismatch at (" +
                         std::to_string(row.r13) + ", " + std::to_string(row.r23) + ")");
                    return false;
                }
            }
            if (r12 == 1.0 && row.feasible == 1 &&
                std::abs(row.r13 - row.r23) > 1e-12) {
                note("criterion 5: off-diagonal feasible point at r12 = 1");
                return false;
            }
        }
        const double fraction =
            static_cast<double>(feasible) / static_cast<double>(rows.size());
        if (r12 >= 0.7) {
            if (fraction > prev_fraction + 1e-15) {
                note("criterion 5: feasible fraction grew at r12 = " +
                     std::to_string(r12));
                return false;
            }
            prev_fraction = fraction;
        }
    }
    return true;
}

// ---------------------------------------------------------------- criterion 6

bool criterion_theorem2() {
    // d = 2: Pauli triples in Haar states
    Rng rng(606);
    const std::vector<Observable> paulis = pauli_triple();
    int checked = 0;
    while (checked < 500) {
        const StateVector phi = random_state(2, rng);
        try {
            const Theorem2Result res = theorem2_check(paulis, phi);
            if (!res.consistent || std::abs(res.r13 - res.r23) > 1e-6) {
                note("criterion 6: qubit instance inconsistent");
                return false;
            }
            ++checked;
        } catch (const ZeroDeviation&) {
        } catch (const NotIntelligent&) {
            note("criterion 6: qubit pair not intelligent");
            return false;
        }
    }

    // d = 3: states constructed by the intelligent-state solver
    std::mt19937_64 mrng(607);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    checked = 0;
    while (checked < 500) {
        const Observable a = support::obs("A", naive::random_hermitian(3, mrng));
        const Observable b = support::obs("B", naive::random_hermitian(3, mrng));
        const Observable c = support::obs("C", naive::random_hermitian(3, mrng));
        const ComplexScalar z(u(mrng), u(mrng));
        for (const auto& sol : find_intelligent(a, b, z)) {
            if (sol.degenerate) continue;
            try {
                const Theorem2Result res = theorem2_check({a, b, c}, sol.state);
                if (!res.consistent || std::abs(res.r13 - res.r23) > 1e-6) {
                    note("criterion 6: constructed d=3 instance inconsistent");
                    return false;
                }
                ++checked;
            } catch (const ZeroDeviation&) {
            } catch (const NotIntelligent&) {
                note("criterion 6: solver state lost full correlation");
                return false;
            }
        }
    }

    // synthetic counterexample
    const Theorem2Result bad = theorem2_check_synthetic(1.0, 0.4, 0.6);
    if (bad.consistent || r3_closed_form(1.0, 0.4, 0.6) >= 0.0) {
        note("criterion 6: synthetic counterexample not rejected");
        return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 7

bool criterion_intelligent_solver() {
    // fixture
    bool fixture_ok = false;
    for (const auto& r :
         find_intelligent(support::sx(), support::sy(), ComplexScalar(0.0, 1.0))) {
        if (!r.degenerate && r.residual <= 1e-8 && std::abs(r.r_value - 1.0) <= 1e-6) {
            fixture_ok = true;
        }
    }
    if (!fixture_ok) {
        note("criterion 7: (sigma_x, sigma_y, i) fixture failed");
        return false;
    }

    std::mt19937_64 rng(707);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int t = 0; t < 100; ++t) {
        const int dim = 2 + t % 3;
        const Observable a = support::obs("A", naive::random_hermitian(dim, rng));
        const Observable b = support::obs("B", naive::random_hermitian(dim, rng));
        const ComplexScalar z(u(rng), u(rng));
        for (const auto& r : find_intelligent(a, b, z)) {
            if (r.degenerate) continue;
            if (r.residual > 1e-8) {
                note("criterion 7: residual " + std::to_string(r.residual));
                return false;
            }
            if (std::abs(r.r_value - 1.0) > 1e-6) {
                note("criterion 7: r = " + std::to_string(r.r_value));
                return false;
            }
            const IntelligenceTest test = is_intelligent(a, b, r.state);
            if (!test.intelligent || !test.best_z ||
                std::abs(*test.best_z - z) > 1e-6 * (1.0 + std::abs(z))) {
                note("criterion 7: best_z round trip failed");
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------- criterion 8

bool criterion_critical_points() {
    const StateVector up = support::state({1.0, 0.0});
    const std::vector<Observable> triple = {support::sx(), support::sy(),
                                            support::sz()};

    const RelationVerdict rs3 = evaluate(RelationId::RS_TRIPLE, triple, up);
    const RelationVerdict hr3 = evaluate(RelationId::HR_TRIPLE, triple, up);
    bool ok = std::abs(rs3.lhs) <= 1e-12 && std::abs(rs3.rhs) <= 1e-12 &&
              std::abs(hr3.lhs) <= 1e-12 && std::abs(hr3.rhs) <= 1e-12;
    if (!ok) {
        note("criterion 8: triple relations not trivialized");
        return false;
    }

    const SumReduction red = sum_reduction(triple, up, 2);
    if (!red.equal) {
        note("criterion 8: sum reduction not equal");
        return false;
    }

    const ReducedSumVerdicts v = reduced_sum_relations(triple, up, 2);
    ok = v.sum_std.holds && std::abs(v.sum_std.lhs - 2.0) <= 1e-12 &&
         std::abs(v.sum_std.rhs - std::sqrt(2.0)) <= 1e-12 && v.sum_var.holds &&
         v.sum_var_tight.holds;
    if (!ok) note("criterion 8: reduced sum relations failed");
    return ok;
}

// ---------------------------------------------------------------- criterion 9

bool criterion_inequality_lemmas() {
    std::mt19937_64 rng(909);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(0.1, 1.0);
    const double eps = 1e-9;
    const auto vec = [&](int dim) {
        naive::Vec v(static_cast<std::size_t>(dim));
        for (auto& x : v) x = naive::cplx(g(rng), g(rng));
        return v;
    };
    const auto holds = [eps](double lhs, double rhs) {
        return lhs - rhs >= -eps * (1.0 + std::abs(lhs) + std::abs(rhs));
    };

    for (int t = 0; t < 10000; ++t) {
        const int d = 2 + static_cast<int>(rng() % 15);
        const naive::Vec a = vec(d), b = vec(d), c = vec(d), e = vec(d);
        const double na = naive::norm(a), nb = naive::norm(b), nc = naive::norm(c),
                     ne = naive::norm(e);
        const double ab = std::abs(naive::dot(a, b)), bc = std::abs(naive::dot(b, c)),
                     ca = std::abs(naive::dot(c, a));

        // (S)
        if (!holds(na * nb, ab)) { note("criterion 9: S"); return false; }
        // (S3)
        if (!holds(na * na * nb * nb * nc * nc, ab * bc * ca)) {
            note("criterion 9: S3");
            return false;
        }
        // (S4)
        {
            const double lhs = std::pow(na * nb * nc * ne, 3);
            const double rhs = ab * bc * ca * std::abs(naive::dot(a, e)) *
                               std::abs(naive::dot(b, e)) * std::abs(naive::dot(c, e));
            if (!holds(lhs, rhs)) { note("criterion 9: S4"); return false; }
        }
        // (B1)
        if (!holds(0.5 * (na * nb + ab) * nc * nc,
                   std::abs(naive::dot(a, c) * naive::dot(c, b)))) {
            note("criterion 9: B1");
            return false;
        }
        // (Lu1)
        if (!holds(na * na * nb * nb * nc * nc + 2.0 * ab * bc * ca,
                   na * na * bc * bc + nb * nb * ca * ca + nc * nc * ab * ab)) {
            note("criterion 9: Lu1");
            return false;
        }
        // (B2)
        if (!holds(na * nb * nc * nc, std::abs(naive::dot(a, c) * naive::dot(c, b)))) {
            note("criterion 9: B2");
            return false;
        }
        // (Lu2)
        if (!holds(3.0 * na * na * nb * nb * nc * nc,
                   na * na * bc * bc + nb * nb * ca * ca + nc * nc * ab * ab)) {
            note("criterion 9: Lu2");
            return false;
        }
        // (J2a), (J3a) over a random-size tuple
        {
            const int n = 2 + static_cast<int>(rng() % 4);
            std::vector<naive::Vec> vs;
            for (int i = 0; i < n; ++i) vs.push_back(vec(d));
            naive::Vec sum(static_cast<std::size_t>(d), 0.0);
            double norm_sum = 0.0, sq_sum = 0.0;
            for (const auto& v : vs) {
                for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += v[i];
                const double nv = naive::norm(v);
                norm_sum += nv;
                sq_sum += nv * nv;
            }
            const double ns = naive::norm(sum);
            if (!holds(norm_sum, ns)) { note("criterion 9: J2a"); return false; }
            if (!holds(sq_sum, ns * ns / n)) { note("criterion 9: J3a"); return false; }
        }
        // (J3b)
        {
            naive::Vec s = a;
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
            const double ns = naive::norm(s);
            if (!holds(na * na + nb * nb, 0.5 * ns * ns)) {
                note("criterion 9: J3b");
                return false;
            }
        }
        (void)u;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::strcmp(argv[i], "--cli") == 0) g_cli_path = argv[i + 1];
    }

    const std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
        {"soundness sweep via survey CLI (dims 2,3,4,8 x 10^4 samples)",
         criterion_soundness_survey},
        {"Pauli equality fixtures within 1e-12", criterion_pauli_fixtures},
        {"qubit saturation: r = 1 on 10^4 positive-deviation samples",
         criterion_qubit_saturation},
        {"determinant identities R2/R3 and genuine-instance range",
         criterion_determinant_identities},
        {"feasibility-region reproduction via region CLI", criterion_region_reproduction},
        {"full-correlation transfer on constructed intelligent instances",
         criterion_theorem2},
        {"intelligent-state solver residual, r and best_z round trip",
         criterion_intelligent_solver},
        {"critical points: trivialization and sum reduction", criterion_critical_points},
        {"vector inequality lemma suite, 10^4 tuples each", criterion_inequality_lemmas},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        g_notes.clear();
        const bool ok = criteria[i].second();
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": "
                  << criteria[i].first << "\n";
        for (const auto& n : g_notes) std::cout << "       " << n << "\n";
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) +
                                      " criteria failed")
              << "\n";
    return failures;
}
