#include "uncrel/relations.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <sstream>

namespace uncrel {

namespace {

const std::vector<CatalogEntry> kCatalog = {
    {RelationId::RS_PAIR, "RS_PAIR", 2, false},
    {RelationId::HR_PAIR, "HR_PAIR", 2, false},
    {RelationId::RS_TRIPLE, "RS_TRIPLE", 3, false},
    {RelationId::HR_TRIPLE, "HR_TRIPLE", 3, false},
    {RelationId::RS_QUAD, "RS_QUAD", 4, false},
    {RelationId::HR_QUAD, "HR_QUAD", 4, false},
    {RelationId::RS_PRODUCT_N, "RS_PRODUCT_N", 0, false},
    {RelationId::BUZANO_STRONG, "BUZANO_STRONG", 3, false},
    {RelationId::BUZANO_WEAK, "BUZANO_WEAK", 3, false},
    {RelationId::BUZANO_HR, "BUZANO_HR", 3, false},
    {RelationId::LUPU_STRONG, "LUPU_STRONG", 3, false},
    {RelationId::LUPU_WEAK, "LUPU_WEAK", 3, false},
    {RelationId::LUPU_HR, "LUPU_HR", 3, false},
    {RelationId::SUM_STD, "SUM_STD", 0, false},
    {RelationId::SUM_VAR, "SUM_VAR", 0, false},
    {RelationId::PEARSON_PAIR, "PEARSON_PAIR", 2, true},
    {RelationId::PEARSON_TRIPLE, "PEARSON_TRIPLE", 3, true},
    {RelationId::PEARSON_QUAD, "PEARSON_QUAD", 4, true},
    {RelationId::PEARSON_BUZANO_STRONG, "PEARSON_BUZANO_STRONG", 3, true},
    {RelationId::PEARSON_BUZANO_WEAK, "PEARSON_BUZANO_WEAK", 3, true},
    {RelationId::PEARSON_LUPU, "PEARSON_LUPU", 3, true},
};

// Pairwise moment data for one (observables, state) instance.
struct Instance {
    std::vector<double> dev;   // standard deviations
    Eigen::MatrixXd abs_c;     // |C(A_i, A_j)|
    Eigen::MatrixXd abs_comm;  // |<[A_i, A_j]>|
    std::vector<bool> zero;    // per-observable vanishing deviation
    bool any_zero = false;

    double r(int i, int j) const { return abs_c(i, j) / (dev[i] * dev[j]); }
};

Instance build_instance(const std::vector<Observable>& obs, const StateVector& phi,
                        const Tolerances& tol) {
    const int n = static_cast<int>(obs.size());
    Instance inst;
    inst.dev.resize(n);
    inst.zero.resize(n);
    inst.abs_c.resize(n, n);
    inst.abs_comm.resize(n, n);

    std::vector<Vector> devs(n);
    for (int i = 0; i < n; ++i) {
        devs[i] = deviation_vector(obs[i], phi, tol);
        inst.dev[i] = devs[i].norm();
        inst.zero[i] = deviation_is_zero(inst.dev[i], obs[i], tol);
        inst.any_zero = inst.any_zero || inst.zero[i];
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const ComplexScalar c = devs[i].dot(devs[j]);
            inst.abs_c(i, j) = std::abs(c);
            inst.abs_comm(i, j) = 2.0 * std::abs(c.imag());
        }
    }
    return inst;
}

std::pair<double, double> sum_relation_sides(RelationId id,
                                             const std::vector<Observable>& obs,
                                             const StateVector& phi,
                                             const Instance& inst,
                                             const Tolerances& tol) {
    const double full = moment_report(sum_observables(obs, tol), phi, tol).stddev;
    const int n = static_cast<int>(obs.size());
    double lhs = 0.0;
    for (int i = 0; i < n; ++i) {
        lhs += (id == RelationId::SUM_STD) ? inst.dev[i] : inst.dev[i] * inst.dev[i];
    }
    const double rhs = (id == RelationId::SUM_STD) ? full : full * full / n;
    return {lhs, rhs};
}

std::pair<double, double> relation_sides(RelationId id,
                                         const std::vector<Observable>& obs,
                                         const StateVector& phi,
                                         const Instance& inst,
                                         const Tolerances& tol) {
    const auto& d = inst.dev;
    switch (id) {
        case RelationId::RS_PAIR:
            return {d[0] * d[1], inst.abs_c(0, 1)};
        case RelationId::HR_PAIR:
            return {d[0] * d[1], 0.5 * inst.abs_comm(0, 1)};
        case RelationId::RS_TRIPLE:
            return {d[0] * d[0] * d[1] * d[1] * d[2] * d[2],
                    inst.abs_c(0, 1) * inst.abs_c(1, 2) * inst.abs_c(0, 2)};
        case RelationId::HR_TRIPLE:
            return {d[0] * d[0] * d[1] * d[1] * d[2] * d[2],
                    (1.0 / 8.0) * inst.abs_comm(0, 1) * inst.abs_comm(1, 2) *
                        inst.abs_comm(0, 2)};
        case RelationId::RS_QUAD: {
            double lhs = 1.0, rhs = 1.0;
            for (int i = 0; i < 4; ++i) lhs *= d[i] * d[i] * d[i];
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) rhs *= inst.abs_c(i, j);
            return {lhs, rhs};
        }
        case RelationId::HR_QUAD: {
            double lhs = 1.0, rhs = 1.0 / 16.0;
            for (int i = 0; i < 4; ++i) lhs *= d[i] * d[i] * d[i];
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) rhs *= inst.abs_comm(i, j);
            return {lhs, rhs};
        }
        case RelationId::RS_PRODUCT_N: {
            const int n = static_cast<int>(d.size());
            double lhs = 1.0, rhs = 1.0;
            for (int i = 0; i < n; ++i) lhs *= std::pow(d[i], n - 1);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) rhs *= inst.abs_c(i, j);
            return {lhs, rhs};
        }
        case RelationId::BUZANO_STRONG:
            return {(d[0] * d[1] + inst.abs_c(0, 1)) * d[2] * d[2],
                    2.0 * inst.abs_c(0, 2) * inst.abs_c(2, 1)};
        case RelationId::BUZANO_WEAK:
            return {d[0] * d[1] * d[2] * d[2], inst.abs_c(0, 2) * inst.abs_c(2, 1)};
        case RelationId::BUZANO_HR:
            return {d[0] * d[1] * d[2] * d[2],
                    0.25 * inst.abs_comm(0, 2) * inst.abs_comm(2, 1)};
        case RelationId::LUPU_STRONG: {
            const double v0 = d[0] * d[0], v1 = d[1] * d[1], v2 = d[2] * d[2];
            const double rhs = v0 * inst.abs_c(1, 2) * inst.abs_c(1, 2) +
                               v1 * inst.abs_c(2, 0) * inst.abs_c(2, 0) +
                               v2 * inst.abs_c(0, 1) * inst.abs_c(0, 1) -
                               2.0 * inst.abs_c(0, 1) * inst.abs_c(1, 2) * inst.abs_c(0, 2);
            return {v0 * v1 * v2, rhs};
        }
        case RelationId::LUPU_WEAK: {
            const double v0 = d[0] * d[0], v1 = d[1] * d[1], v2 = d[2] * d[2];
            const double rhs = (v0 * inst.abs_c(1, 2) * inst.abs_c(1, 2) +
                                v1 * inst.abs_c(2, 0) * inst.abs_c(2, 0) +
                                v2 * inst.abs_c(0, 1) * inst.abs_c(0, 1)) / 3.0;
            return {v0 * v1 * v2, rhs};
        }
        case RelationId::LUPU_HR: {
            // The constant 1/12 is what the covariance form supports:
            // |<[A,B]>| <= 2|C(A,B)| squares to a factor of 4, and 4/12 = 1/3
            // recovers LUPU_WEAK. A 1/6 variant is violated on ~11% of random
            // Gaussian instances, so it is not used here.
            const double v0 = d[0] * d[0], v1 = d[1] * d[1], v2 = d[2] * d[2];
            const double rhs = (v0 * inst.abs_comm(1, 2) * inst.abs_comm(1, 2) +
                                v1 * inst.abs_comm(0, 2) * inst.abs_comm(0, 2) +
                                v2 * inst.abs_comm(0, 1) * inst.abs_comm(0, 1)) / 12.0;
            return {v0 * v1 * v2, rhs};
        }
        case RelationId::SUM_STD:
        case RelationId::SUM_VAR:
            return sum_relation_sides(id, obs, phi, inst, tol);
        case RelationId::PEARSON_PAIR:
            return {1.0, inst.r(0, 1)};
        case RelationId::PEARSON_TRIPLE:
            return {1.0, inst.r(0, 1) * inst.r(1, 2) * inst.r(0, 2)};
        case RelationId::PEARSON_QUAD: {
            double rhs = 1.0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) rhs *= inst.r(i, j);
            return {1.0, rhs};
        }
        case RelationId::PEARSON_BUZANO_STRONG:
            return {1.0 + inst.r(0, 1), 2.0 * inst.r(0, 2) * inst.r(1, 2)};
        case RelationId::PEARSON_BUZANO_WEAK:
            return {1.0, inst.r(0, 2) * inst.r(1, 2)};
        case RelationId::PEARSON_LUPU: {
            const double r01 = inst.r(0, 1), r02 = inst.r(0, 2), r12 = inst.r(1, 2);
            return {1.0 + 2.0 * r01 * r02 * r12, r01 * r01 + r02 * r02 + r12 * r12};
        }
    }
    throw Error("unknown relation id");
}

RelationVerdict make_verdict(RelationId id, double lhs, double rhs,
                             std::string digest, const Tolerances& tol) {
    RelationVerdict v;
    v.relation = id;
    v.lhs = lhs;
    v.rhs = rhs;
    v.slack = lhs - rhs;
    v.tol_abs = tol.rel * (1.0 + std::abs(lhs) + std::abs(rhs));
    v.holds = v.slack >= -v.tol_abs;
    v.inputs_digest = std::move(digest);
    return v;
}

RelationVerdict evaluate_with_instance(RelationId id,
                                       const std::vector<Observable>& obs,
                                       const StateVector& phi,
                                       const Instance& inst,
                                       const std::string& digest,
                                       const Tolerances& tol) {
    const CatalogEntry& entry = catalog_entry(id);
    const int n = static_cast<int>(obs.size());
    if (entry.arity == 0 ? n < 2 : n != entry.arity) {
        std::ostringstream os;
        os << entry.name << " needs " << (entry.arity == 0 ? 2 : entry.arity)
           << (entry.arity == 0 ? "+ observables, got " : " observables, got ") << n;
        throw ArityMismatch(os.str());
    }
    if (entry.pearson_form && inst.any_zero) {
        for (int i = 0; i < n; ++i) {
            if (inst.zero[i]) {
                throw ZeroDeviation("observable '" + obs[i].name() +
                                    "' has vanishing deviation");
            }
        }
    }
    const auto [lhs, rhs] = relation_sides(id, obs, phi, inst, tol);
    return make_verdict(id, lhs, rhs, digest, tol);
}

}  // namespace

const std::vector<CatalogEntry>& relation_catalog() { return kCatalog; }

const CatalogEntry& catalog_entry(RelationId id) {
    for (const auto& e : kCatalog) {
        if (e.id == id) return e;
    }
    throw Error("unknown relation id");
}

std::string_view relation_name(RelationId id) { return catalog_entry(id).name; }

std::optional<RelationId> relation_from_name(std::string_view name) {
    for (const auto& e : kCatalog) {
        if (e.name == name) return e.id;
    }
    return std::nullopt;
}

Observable sum_observables(const std::vector<Observable>& observables,
                           const Tolerances& tol) {
    if (observables.empty()) {
        throw ArityTooSmall("sum_observables: empty list");
    }
    Matrix m = observables.front().matrix();
    std::string name = observables.front().name();
    for (std::size_t i = 1; i < observables.size(); ++i) {
        if (observables[i].dim() != observables.front().dim()) {
            throw DimMismatch("sum_observables: mixed dimensions");
        }
        m += observables[i].matrix();
        name += "+" + observables[i].name();
    }
    return make_observable(std::move(name), std::move(m), tol);
}

std::string inputs_digest(const std::vector<Observable>& observables,
                          const StateVector& phi) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto feed = [&h](const void* data, std::size_t bytes) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < bytes; ++i) {
            h ^= p[i];
            h *= 0x100000001b3ull;
        }
    };
    for (const auto& o : observables) {
        feed(o.name().data(), o.name().size());
        feed(o.matrix().data(), sizeof(ComplexScalar) * static_cast<std::size_t>(o.matrix().size()));
    }
    feed(phi.amplitudes().data(), sizeof(ComplexScalar) * static_cast<std::size_t>(phi.dim()));
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

RelationVerdict evaluate(RelationId relation, const std::vector<Observable>& observables,
                         const StateVector& phi, const Tolerances& tol) {
    const Instance inst = build_instance(observables, phi, tol);
    return evaluate_with_instance(relation, observables, phi, inst,
                                  inputs_digest(observables, phi), tol);
}

std::vector<RelationVerdict> evaluate_all(const std::vector<Observable>& observables,
                                          const StateVector& phi, const Tolerances& tol) {
    const int n = static_cast<int>(observables.size());
    if (n < 2) {
        throw ArityTooSmall("evaluate_all needs at least 2 observables");
    }
    const Instance inst = build_instance(observables, phi, tol);
    const std::string digest = inputs_digest(observables, phi);
    std::vector<RelationVerdict> out;
    for (const auto& entry : kCatalog) {
        const bool applicable = entry.arity == 0 || entry.arity == n;
        if (!applicable) continue;
        if (entry.pearson_form && inst.any_zero) {
            RelationVerdict skip;
            skip.relation = entry.id;
            skip.skipped = true;
            skip.holds = true;
            skip.inputs_digest = digest;
            out.push_back(std::move(skip));
            continue;
        }
        out.push_back(evaluate_with_instance(entry.id, observables, phi, inst, digest, tol));
    }
    return out;
}

Lu3bResult lu3b_constraint(const std::vector<Observable>& observables,
                           const StateVector& phi, const Tolerances& tol) {
    if (observables.size() != 3) {
        throw ArityMismatch("lu3b_constraint needs exactly 3 observables");
    }
    const Instance inst = build_instance(observables, phi, tol);
    for (int i = 0; i < 3; ++i) {
        if (inst.zero[i]) {
            throw ZeroDeviation("observable '" + observables[i].name() +
                                "' has vanishing deviation");
        }
    }
    const double r12 = inst.r(0, 1);
    if (std::abs(r12 - 1.0) > tol.intel) {
        std::ostringstream os;
        os << "pair (A1, A2) is not intelligent: r = " << r12;
        throw NotIntelligent(os.str());
    }
    Lu3bResult res;
    res.lhs = inst.dev[0] * inst.abs_c(1, 2);
    res.rhs = inst.dev[1] * inst.abs_c(0, 2);
    res.satisfied = std::abs(res.lhs - res.rhs) <= tol.rel * (1.0 + res.lhs + res.rhs);
    return res;
}

RelationVerdict b3a_bound(const std::vector<Observable>& observables,
                          const StateVector& phi, const Tolerances& tol) {
    if (observables.size() != 3) {
        throw ArityMismatch("b3a_bound needs exactly 3 observables");
    }
    const Instance inst = build_instance(observables, phi, tol);
    for (int i : {0, 1}) {
        if (inst.zero[i]) {
            throw ZeroDeviation("observable '" + observables[i].name() +
                                "' has vanishing deviation");
        }
    }
    const double r12 = inst.r(0, 1);
    if (std::abs(r12 - 1.0) > tol.intel) {
        std::ostringstream os;
        os << "pair (A1, A2) is not intelligent: r = " << r12;
        throw NotIntelligent(os.str());
    }
    const double lhs = inst.dev[2] * inst.dev[2] * inst.abs_c(0, 1);
    const double rhs = inst.abs_c(0, 2) * inst.abs_c(2, 1);
    return make_verdict(RelationId::BUZANO_STRONG, lhs, rhs,
                        inputs_digest(observables, phi), tol);
}

}  // namespace uncrel
