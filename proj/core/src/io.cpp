#include "uncrel/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace uncrel {

namespace {

using nlohmann::json;

ComplexScalar parse_complex(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError(path + ": expected complex number as [re, im]");
    }
    return ComplexScalar(j[0].get<double>(), j[1].get<double>());
}

json dump_complex(const ComplexScalar& z) { return json::array({z.real(), z.imag()}); }

}  // namespace

ProblemFile parse_problem(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("$: expected an object");

    ProblemFile pf;
    pf.tolerances = global_tolerances();

    if (!root.contains("dim") || !root["dim"].is_number_integer()) {
        throw ParseError("dim: expected an integer");
    }
    pf.dim = root["dim"].get<int>();
    if (pf.dim < 2) throw ParseError("dim: must be >= 2");

    if (root.contains("tol") && root["tol"].is_object()) {
        const json& t = root["tol"];
        if (t.contains("rel")) pf.tolerances.rel = t["rel"].get<double>();
        if (t.contains("herm")) pf.tolerances.herm = t["herm"].get<double>();
        if (t.contains("intel")) pf.tolerances.intel = t["intel"].get<double>();
        if (t.contains("zero")) pf.tolerances.zero = t["zero"].get<double>();
    }

    if (!root.contains("observables") || !root["observables"].is_array() ||
        root["observables"].empty()) {
        throw ParseError("observables: expected a non-empty array");
    }
    for (std::size_t k = 0; k < root["observables"].size(); ++k) {
        const json& jo = root["observables"][k];
        const std::string base = "observables[" + std::to_string(k) + "]";
        if (!jo.is_object()) throw ParseError(base + ": expected an object");
        std::string name = jo.contains("name") && jo["name"].is_string()
                               ? jo["name"].get<std::string>()
                               : "A" + std::to_string(k + 1);
        if (!jo.contains("matrix") || !jo["matrix"].is_array() ||
            static_cast<int>(jo["matrix"].size()) != pf.dim) {
            throw ParseError(base + ".matrix: expected " + std::to_string(pf.dim) +
                             " rows");
        }
        Matrix m(pf.dim, pf.dim);
        for (int r = 0; r < pf.dim; ++r) {
            const json& row = jo["matrix"][static_cast<std::size_t>(r)];
            const std::string rpath = base + ".matrix[" + std::to_string(r) + "]";
            if (!row.is_array() || static_cast<int>(row.size()) != pf.dim) {
                throw ParseError(rpath + ": expected " + std::to_string(pf.dim) +
                                 " entries");
            }
            for (int c = 0; c < pf.dim; ++c) {
                m(r, c) = parse_complex(row[static_cast<std::size_t>(c)],
                                        rpath + "[" + std::to_string(c) + "]");
            }
        }
        try {
            pf.observables.push_back(make_observable(std::move(name), std::move(m),
                                                     pf.tolerances));
        } catch (const Error& e) {
            throw ParseError(base + ": " + e.what());
        }
    }

    if (root.contains("state")) {
        const json& js = root["state"];
        if (!js.is_array() || static_cast<int>(js.size()) != pf.dim) {
            throw ParseError("state: expected " + std::to_string(pf.dim) +
                             " amplitudes");
        }
        Vector v(pf.dim);
        for (int i = 0; i < pf.dim; ++i) {
            v(i) = parse_complex(js[static_cast<std::size_t>(i)],
                                 "state[" + std::to_string(i) + "]");
        }
        try {
            pf.state = StateVector(std::move(v), pf.tolerances);
        } catch (const Error& e) {
            throw ParseError(std::string("state: ") + e.what());
        }
    }
    return pf;
}

ProblemFile parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

ReportFile build_report(const ProblemFile& problem) {
    if (!problem.state) throw ParseError("state: required for report evaluation");
    const Tolerances& tol = problem.tolerances;
    const auto& obs = problem.observables;
    const StateVector& phi = *problem.state;

    ReportFile rep;
    rep.input_digest = inputs_digest(obs, phi);

    bool any_zero = false;
    for (const auto& a : obs) {
        rep.moments.push_back(moment_report(a, phi, tol));
        any_zero = any_zero ||
                   deviation_is_zero(rep.moments.back().stddev, a, tol);
    }
    const int n = static_cast<int>(obs.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            PairMoments pm;
            pm.i = i;
            pm.j = j;
            pm.cov = covariance(obs[i], obs[j], phi, tol);
            const bool zi = deviation_is_zero(rep.moments[i].stddev, obs[i], tol);
            const bool zj = deviation_is_zero(rep.moments[j].stddev, obs[j], tol);
            if (!zi && !zj) {
                pm.r = pearson(obs[i], obs[j], phi, tol).r;
            }
            rep.pairs.push_back(std::move(pm));
        }
    }
    if (n >= 2) {
        rep.verdicts = evaluate_all(obs, phi, tol);
    }
    rep.critical = critical_report(obs, phi, tol);
    if (n >= 2 && !any_zero) {
        rep.correlation = build_correlation_matrix(obs, phi, tol);
    }
    if (n == 2 || n == 3) {
        rep.entanglement = classify_entanglement(obs, phi, tol);
    }
    return rep;
}

namespace {

json verdict_to_json(const RelationVerdict& v) {
    json j;
    j["relation"] = std::string(relation_name(v.relation));
    j["skipped"] = v.skipped;
    if (!v.skipped) {
        j["lhs"] = v.lhs;
        j["rhs"] = v.rhs;
        j["slack"] = v.slack;
        j["holds"] = v.holds;
        j["tol_abs"] = v.tol_abs;
    }
    j["inputs_digest"] = v.inputs_digest;
    return j;
}

}  // namespace

std::string report_to_json(const ReportFile& rep) {
    json j;
    j["version"] = rep.version;
    j["input_digest"] = rep.input_digest;
    j["moments"] = json::array();
    for (const auto& m : rep.moments) {
        j["moments"].push_back({{"mean", m.mean},
                                {"stddev", m.stddev},
                                {"deviation_norm_sq", m.deviation_norm_sq}});
    }
    j["pairs"] = json::array();
    for (const auto& p : rep.pairs) {
        json jp;
        jp["i"] = p.i;
        jp["j"] = p.j;
        jp["covariance"] = dump_complex(p.cov.value);
        jp["commutator_expectation"] = dump_complex(p.cov.commutator_expectation);
        if (p.r) {
            jp["r"] = *p.r;
        } else {
            jp["r"] = nullptr;
        }
        j["pairs"].push_back(std::move(jp));
    }
    j["verdicts"] = json::array();
    for (const auto& v : rep.verdicts) {
        j["verdicts"].push_back(verdict_to_json(v));
    }
    json jc;
    jc["eigen_flags"] = rep.critical.eigen_flags;
    jc["orthogonal_pairs"] = json::array();
    for (const auto& [a, b] : rep.critical.orthogonal_pairs) {
        jc["orthogonal_pairs"].push_back(json::array({a, b}));
    }
    jc["trivial_relations"] = json::array();
    for (RelationId id : rep.critical.trivial_relations) {
        jc["trivial_relations"].push_back(std::string(relation_name(id)));
    }
    jc["zero_bound_relations"] = json::array();
    for (RelationId id : rep.critical.zero_bound_relations) {
        jc["zero_bound_relations"].push_back(std::string(relation_name(id)));
    }
    j["critical"] = std::move(jc);
    if (rep.correlation) {
        json jm;
        jm["k"] = rep.correlation->k;
        jm["entries"] = json::array();
        for (int r = 0; r < rep.correlation->k; ++r) {
            json row = json::array();
            for (int c = 0; c < rep.correlation->k; ++c) {
                row.push_back(rep.correlation->entries(r, c));
            }
            jm["entries"].push_back(std::move(row));
        }
        jm["determinant"] = rep.correlation->determinant;
        jm["synthetic"] = rep.correlation->synthetic;
        j["correlation_matrix"] = std::move(jm);
    } else {
        j["correlation_matrix"] = nullptr;
    }
    if (rep.entanglement) {
        json je;
        je["pair_flags"] = rep.entanglement->pair_flags;
        je["triple_flag"] = rep.entanglement->triple_flag;
        j["entanglement"] = std::move(je);
    } else {
        j["entanglement"] = nullptr;
    }
    return j.dump(2) + "\n";
}

std::string report_to_text(const ReportFile& rep) {
    std::ostringstream os;
    os.precision(12);
    os << "uncrel " << rep.version << "  digest " << rep.input_digest << "\n";
    os << "observables: " << rep.moments.size() << "\n";
    for (std::size_t i = 0; i < rep.moments.size(); ++i) {
        os << "  A" << i + 1 << ": mean " << rep.moments[i].mean << "  stddev "
           << rep.moments[i].stddev << "\n";
    }
    for (const auto& p : rep.pairs) {
        os << "  C(A" << p.i + 1 << ",A" << p.j + 1 << ") = (" << p.cov.value.real()
           << ", " << p.cov.value.imag() << ")";
        if (p.r) os << "  r = " << *p.r;
        os << "\n";
    }
    os << "relations:\n";
    for (const auto& v : rep.verdicts) {
        os << "  " << relation_name(v.relation) << ": ";
        if (v.skipped) {
            os << "skipped (zero deviation)\n";
            continue;
        }
        os << "lhs " << v.lhs << "  rhs " << v.rhs << "  slack " << v.slack << "  "
           << (v.holds ? "holds" : "VIOLATED") << "\n";
    }
    if (rep.correlation) {
        os << "correlation determinant: " << rep.correlation->determinant << "\n";
    }
    return os.str();
}

std::string survey_to_json(const SurveyStatistics& stats) {
    json j;
    j["version"] = std::string(kToolVersion);
    j["spec"] = {{"dim", stats.spec.dim},
                 {"n_observables", stats.spec.n_observables},
                 {"n_samples", stats.spec.n_samples},
                 {"seed", stats.spec.seed},
                 {"observable_kind",
                  stats.spec.observable_kind == ObservableKind::pauli_fixed
                      ? "pauli_fixed"
                      : stats.spec.observable_kind == ObservableKind::user_supplied
                            ? "user_supplied"
                            : "gaussian_hermitian"}};
    json jr = json::object();
    for (const auto& [name, rs] : stats.per_relation) {
        json e;
        e["count_evaluated"] = rs.count_evaluated;
        e["count_holds"] = rs.count_holds;
        e["count_skipped"] = rs.count_skipped;
        e["min_slack"] = rs.min_slack;
        e["max_slack"] = rs.max_slack;
        e["slack_histogram"] = {{"underflow", rs.slack_histogram.underflow},
                                {"overflow", rs.slack_histogram.overflow},
                                {"bins", rs.slack_histogram.bins}};
        jr[name] = std::move(e);
    }
    j["per_relation"] = std::move(jr);
    j["violations"] = json::array();
    for (const auto& v : stats.violations) {
        j["violations"].push_back({{"sample_index", v.sample_index},
                                   {"relation", v.relation},
                                   {"detail", v.detail}});
    }
    return j.dump(2) + "\n";
}

std::string intelligent_to_json(const std::vector<IntelligentStateResult>& results) {
    json arr = json::array();
    for (const auto& r : results) {
        json e;
        e["z"] = dump_complex(r.z);
        json amps = json::array();
        for (Eigen::Index i = 0; i < r.state.dim(); ++i) {
            amps.push_back(dump_complex(r.state[i]));
        }
        e["state"] = std::move(amps);
        e["residual"] = r.residual;
        e["r_value"] = r.r_value;
        e["degenerate"] = r.degenerate;
        arr.push_back(std::move(e));
    }
    json j;
    j["version"] = std::string(kToolVersion);
    j["results"] = std::move(arr);
    return j.dump(2) + "\n";
}

}  // namespace uncrel
